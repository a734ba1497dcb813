#include "mdep/fields.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "mdep/qelem.hpp"

namespace mdep {

namespace {

long mod4(long m) { return ((m % 4) + 4) % 4; }

void check_quad_m(long m) {
    if (m == 0 || m == 1) throw InvalidInputError("field parameter must not be 0 or 1");
    for (const auto& [p, e] : factor(Z(m < 0 ? -m : m))) {
        if (e > 1) throw InvalidInputError("field parameter must be squarefree");
    }
}

Z zpow(const Z& b, unsigned long e) {
    Z r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Z zfac(unsigned long n) {
    Z r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Hurwitz zeta(2, x) for rational x in (0, 1], Euler-Maclaurin with a
// one-sided remainder bound (the summand is completely monotone).
RInterval hurwitz2(const Q& x, mpfr_prec_t prec) {
    const long N = 256;
    RInterval xs = RInterval::from_q(x, prec);
    RInterval one = RInterval::from_long(1, prec);
    RInterval acc = RInterval::from_long(0, prec);
    for (long k = 0; k < N; ++k) {
        RInterval t = xs + RInterval::from_long(k, prec);
        acc = acc + one / (t * t);
    }
    RInterval np = xs + RInterval::from_long(N, prec);
    acc = acc + one / np;
    acc = acc + one / (RInterval::from_long(2, prec) * np * np);
    Q b2{1, 6}, b4{-1, 30}, b6{1, 42}, b8{-1, 30};
    acc = acc + RInterval::from_q(b2, prec) / pow_si(np, 3);
    acc = acc + RInterval::from_q(b4, prec) / pow_si(np, 5);
    acc = acc + RInterval::from_q(b6, prec) / pow_si(np, 7);
    RInterval rem = RInterval::from_q(b8, prec) / pow_si(np, 9);
    return acc + hull(rem, RInterval::from_long(0, prec));
}

RInterval quad_embedding(const QuadElem& x, mpfr_prec_t prec) {
    return RInterval::from_q(x.a, prec) +
           RInterval::from_q(x.b, prec) * isqrt_i(RInterval::from_z(Z(x.m), prec));
}

// Unique integer contained in iv, if the endpoints pin one down.
std::optional<Z> unique_int(const RInterval& iv) {
    Z lo, hi;
    mpfr_get_z(lo.get_mpz_t(), iv.lo(), MPFR_RNDU);
    mpfr_get_z(hi.get_mpz_t(), iv.hi(), MPFR_RNDD);
    if (lo == hi) return lo;
    return std::nullopt;
}

using Form = std::tuple<Z, Z, Z>;

Form rho_step(const Form& f, const Z& D, const Z& s) {
    const auto& [a, b, c] = f;
    Z ca{c < 0 ? -c : c};
    Z two_c{2 * ca};
    Z t = (b + s) % two_c;
    if (t < 0) t += two_c;
    Z b2 = s - t;
    Z c2{(b2 * b2 - D) / (4 * c)};
    return Form{c, b2, c2};
}

}  // namespace

long class_number_forms(const Z& D) {
    if (D >= 0) throw InvalidInputError("negative discriminant required");
    long count = 0;
    Z absd{-D};
    for (Z a = 1; 3 * a * a <= absd; ++a) {
        for (Z b = -a + 1; b <= a; ++b) {
            if ((b * b - D) % 2 != 0) continue;
            Z num{b * b - D};
            if (num % (4 * a) != 0) continue;
            Z c{num / (4 * a)};
            if (c < a) continue;
            if (a == c && b < 0) continue;
            Z g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) ++count;
        }
    }
    return count;
}

long class_number_form_cycles(const Z& D) {
    if (D <= 0) throw InvalidInputError("positive discriminant required");
    Z s = iroot(D, 2);
    if (s * s == D) throw InvalidInputError("discriminant must not be a square");
    std::set<Form> forms;
    for (Z b = 1; b <= s; ++b) {
        if ((b * b - D) % 2 != 0) continue;
        Z num{(b * b - D) / 4};
        for (const Z& da : divisors(num)) {
            for (int sgn : {1, -1}) {
                Z a{sgn * da};
                Z c{num / a};
                Z ta{2 * (a < 0 ? -a : a)};
                bool reduced = s < ta ? (ta - b <= s) : (ta + b > s);
                if (!reduced) continue;
                Z g;
                mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
                if (g == 1) forms.insert(Form{a, b, c});
            }
        }
    }
    long cycles = 0;
    std::set<Form> seen;
    for (const Form& f : forms) {
        if (seen.count(f)) continue;
        ++cycles;
        Form g = f;
        do {
            seen.insert(g);
            g = rho_step(g, D, s);
        } while (g != f);
    }
    return cycles;
}

RInterval zeta_i(unsigned long s, mpfr_prec_t prec) {
    if (s < 2) throw InvalidInputError("zeta argument must be >= 2");
    RInterval r(prec);
    mpfr_zeta_ui(r.lo(), s, MPFR_RNDD);
    mpfr_zeta_ui(r.hi(), s, MPFR_RNDU);
    return r;
}

RInterval dirichlet_l(int s, const Z& D, mpfr_prec_t prec) {
    if (s != 1 && s != 2) throw InvalidInputError("L-value only at s = 1 or 2");
    Z q{D < 0 ? -D : D};
    if (s == 1) {
        if (D <= 0) throw InvalidInputError("L(1) path needs a positive discriminant");
        RInterval acc = RInterval::from_long(0, prec);
        for (Z a = 1; a < q; ++a) {
            int ch = kronecker(D, a);
            if (ch == 0) continue;
            Q xa{a, q};
            xa.canonicalize();
            RInterval term = digamma_i(RInterval::from_q(xa, prec));
            acc = ch > 0 ? acc + term : acc - term;
        }
        return neg(acc) / RInterval::from_z(q, prec);
    }
    RInterval acc = RInterval::from_long(0, prec);
    for (Z a = 1; a < q; ++a) {
        int ch = kronecker(D, a);
        if (ch == 0) continue;
        Q xa{a, q};
        xa.canonicalize();
        RInterval term = hurwitz2(xa, prec);
        acc = ch > 0 ? acc + term : acc - term;
    }
    return acc / RInterval::from_z(Z(q * q), prec);
}

FieldInvariants invariants_rationals(mpfr_prec_t prec) {
    FieldInvariants k;
    k.d = 1;
    k.r1 = 1;
    k.r2 = 0;
    k.r = 0;
    k.disc = 1;
    k.h = 1;
    k.reg = RInterval::from_long(1, prec);
    k.w = 2;
    k.zeta2 = zeta_i(2, prec);
    k.quad_m = std::nullopt;
    return k;
}

FieldInvariants invariants_quadratic(long m, mpfr_prec_t prec) {
    check_quad_m(m);
    FieldInvariants k;
    k.d = 2;
    k.quad_m = m;
    Z D = mod4(m) == 1 ? Z(m) : Z(4 * Z(m));
    k.disc = D;
    k.w = m == -1 ? 4 : (m == -3 ? 6 : 2);
    if (m < 0) {
        k.r1 = 0;
        k.r2 = 1;
        k.r = 0;
        k.reg = RInterval::from_long(1, prec);
        k.h = class_number_forms(D);
    } else {
        k.r1 = 2;
        k.r2 = 0;
        k.r = 1;
        QuadElem eps = quad_fundamental_unit(m);
        k.reg = ilog_i(quad_embedding(eps, prec));
        std::optional<Z> h;
        for (mpfr_prec_t p = prec; p <= (1 << 15); p *= 2) {
            RInterval l1 = dirichlet_l(1, D, p);
            RInterval reg = ilog_i(quad_embedding(eps, p));
            RInterval hiv = isqrt_i(RInterval::from_z(D, p)) * l1 /
                            (RInterval::from_long(2, p) * reg);
            h = unique_int(hiv);
            if (h) break;
        }
        if (!h) throw PrecisionError("class number interval did not separate");
        k.h = *h;
    }
    k.zeta2 = zeta_i(2, prec) * dirichlet_l(2, D, prec);
    return k;
}

RInterval C1(const FieldInvariants& k, mpfr_prec_t prec) {
    RInterval num = pow_si(RInterval::from_long(2, prec), k.r1) *
                    pow_si(RInterval::from_long(2, prec) * RInterval::pi(prec), k.r2) *
                    pow_si(RInterval::from_long(k.d, prec), k.r);
    Z absd{k.disc < 0 ? -k.disc : k.disc};
    RInterval den = isqrt_i(RInterval::from_z(absd, prec)) *
                    RInterval::from_z(zfac(static_cast<unsigned long>(k.r)), prec);
    return num / den;
}

RInterval C2(const FieldInvariants& k, mpfr_prec_t prec) {
    RInterval num = pow_si(RInterval::from_long(2, prec), 2 * k.r1) *
                    pow_si(RInterval::from_long(2, prec) * RInterval::pi(prec), 2 * k.r2) *
                    pow_si(RInterval::from_long(2, prec), k.r) * RInterval::from_z(k.h, prec) *
                    k.reg;
    Z absd{k.disc < 0 ? -k.disc : k.disc};
    RInterval den = RInterval::from_z(absd, prec) * RInterval::from_long(k.w, prec) * k.zeta2;
    return num / den;
}

RInterval C3(int n, const FieldInvariants& k, mpfr_prec_t prec) {
    if (n < 2) throw InvalidInputError("n >= 2 required");
    Q f{Z(static_cast<long>(n) * (n + 1) * k.w), Z(2)};
    f.canonicalize();
    return RInterval::from_q(f, prec) * pow_si(C1(k, prec), n - 1);
}

RInterval C4(int n, const FieldInvariants& k, mpfr_prec_t prec) {
    if (n < 2) throw InvalidInputError("n >= 2 required");
    return RInterval::from_long(static_cast<long>(n) * n * k.w, prec) *
           pow_si(C2(k, prec), n - 1);
}

Q C5(int d) {
    if (d < 1) throw InvalidInputError("d >= 1 required");
    Q r{Z(d) * zpow(Z(2), static_cast<unsigned long>(d))};
    for (int j = 1; 2 * j <= d - 1; ++j) {
        Z num{Z(d) * zpow(Z(2 * j), static_cast<unsigned long>(d - 2 * j - 1))};
        Z den = zpow(Z(2 * j + 1), static_cast<unsigned long>(d - 2 * j));
        Q f{num, den};
        f.canonicalize();
        r *= f;
    }
    return r;
}

RInterval C6(int d, mpfr_prec_t prec) {
    if (d < 1) throw InvalidInputError("d >= 1 required");
    Q r{Z(d) * zpow(Z(2), static_cast<unsigned long>(d))};
    for (int j = 1; 2 * j <= d - 1; ++j) {
        Z num{Z(d + 1) * zpow(Z(2 * j), static_cast<unsigned long>(d - 2 * j))};
        Z den = zpow(Z(2 * j + 1), static_cast<unsigned long>(d - 2 * j + 1));
        Q f{num, den};
        f.canonicalize();
        r *= f;
    }
    return RInterval::from_q(r, prec) / zeta_i(static_cast<unsigned long>(d) + 1, prec);
}

Q C7(int n, int d) {
    if (n < 2) throw InvalidInputError("n >= 2 required");
    Q c5 = C5(d);
    Q acc{Z(static_cast<long>(n) * w0(d) + static_cast<long>(n) * (n - 1))};
    for (int i = 1; i < n; ++i) acc *= c5;
    return acc;
}

RInterval C8(int n, int d, mpfr_prec_t prec) {
    if (n < 2) throw InvalidInputError("n >= 2 required");
    long pre = static_cast<long>(n) * w0(d) + 2L * n * (n - 1);
    return RInterval::from_long(pre, prec) * pow_si(C6(d, prec), n - 1);
}

long w0(int d) {
    if (d < 1) throw InvalidInputError("d >= 1 required");
    return static_cast<long>(d) *
           static_cast<long>(inverse_totient(static_cast<uint64_t>(d)).size());
}

ErrorExponents error_exponents(int d) {
    if (d < 1) throw InvalidInputError("d >= 1 required");
    return ErrorExponents{d == 1 ? 1 : 0, d == 2 ? 1 : 0, d <= 2 ? 1 : 0};
}

Z unit_count_quadratic(long m, const Q& height_bound) {
    check_quad_m(m);
    if (height_bound < 1) throw InvalidInputError("height bound must be >= 1");
    int w = m == -1 ? 4 : (m == -3 ? 6 : 2);
    if (m < 0) return Z(w);
    Q h2{height_bound * height_bound};
    QuadElem eps = quad_fundamental_unit(m);
    QuadElem p = eps;
    long t = 0;
    while (sign_p_plus_q_sqrt(Q(p.a - h2), p.b, Z(m)) <= 0) {
        ++t;
        p = p * eps;
    }
    return Z(2 * (2 * t + 1));
}

}  // namespace mdep
