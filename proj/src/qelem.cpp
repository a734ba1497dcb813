#include "mdep/qelem.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mdep/arith.hpp"
#include "mdep/interval.hpp"

namespace mdep {

namespace {

void check_field(long m) {
    if (m == 0 || m == 1) throw InvalidInputError("field parameter must be squarefree, not 0 or 1");
}

void check_same(const QuadElem& x, const QuadElem& y) {
    if (x.m != y.m) throw InvalidInputError("mixed quadratic fields");
}

long mod4(long m) { return ((m % 4) + 4) % 4; }

Z powz(const Z& b, unsigned long e) {
    Z r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

unsigned long val_p(const Z& n, const Z& p) {
    Z rem;
    return mpz_remove(rem.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

Z powm(const Z& b, const Z& e, const Z& p) {
    Z r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r;
}

// Tonelli-Shanks square root of n mod odd prime p; requires (n|p) = 1.
Z sqrt_mod_p(const Z& n, const Z& p) {
    Z nn = n % p;
    if (nn < 0) nn += p;
    if (p % 4 == 3) return powm(nn, Z((p + 1) / 4), p);
    Z q{(p - 1)};
    unsigned long s = val_p(q, Z(2));
    q >>= s;
    Z z = 2;
    while (kronecker(z, p) != -1) ++z;
    Z c = powm(z, q, p);
    Z t = powm(nn, q, p);
    Z r = powm(nn, Z((q + 1) / 2), p);
    unsigned long mexp = s;
    while (t != 1) {
        Z tt = t;
        unsigned long i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Z b = c;
        for (unsigned long j = 0; j + i + 1 < mexp; ++j) b = b * b % p;
        mexp = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

// Canonical branch r with r^2 = m mod p^k: for odd p the Hensel lift of
// min(r0, p - r0); for p = 2 (m = 1 mod 8) the lift with r = 1 mod 4.
Z hensel_sqrt(const Z& m, const Z& p, unsigned long k) {
    if (p == 2) {
        Z r = 1;
        for (unsigned long j = 3; j < k; ++j) {
            Z d{r * r - m};
            if (mpz_tstbit(d.get_mpz_t(), j)) r += powz(Z(2), j - 1);
        }
        return r;
    }
    Z r0 = sqrt_mod_p(m, p);
    if (p - r0 < r0) r0 = p - r0;
    Z r = r0;
    unsigned long j = 1;
    while (j < k) {
        unsigned long j2 = std::min(2 * j, k);
        Z pj2 = powz(p, j2);
        Z den{2 * r};
        Z inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pj2.get_mpz_t());
        r = (r - (r * r - m) * inv) % pj2;
        if (r < 0) r += pj2;
        j = j2;
    }
    return r;
}

long split_val(const Z& u, const Z& v, const Z& m, const Z& p, int which) {
    Z nrm{u * u - m * v * v};
    unsigned long t = val_p(nrm, p);
    unsigned long k = t + 3;
    Z pk = powz(p, k);
    Z r = hensel_sqrt(m, p, k);
    if (which == 1) r = pk - r;
    Z arg = (u + v * r) % pk;
    if (arg < 0) arg += pk;
    if (arg == 0) throw Error("split valuation modulus exhausted");
    return static_cast<long>(val_p(arg, p));
}

// x = (u + v sqrt m)/w with integer u, v and w >= 1.
void decompose(const QuadElem& x, Z& u, Z& v, Z& w) {
    mpz_lcm(w.get_mpz_t(), x.a.get_den().get_mpz_t(), x.b.get_den().get_mpz_t());
    Q uw = x.a * Q(w);
    Q vw = x.b * Q(w);
    u = uw.get_num();
    v = vw.get_num();
}

}  // namespace

QuadElem quad_make(long m, const Q& a, const Q& b) {
    check_field(m);
    return QuadElem{m, a, b};
}

QuadElem quad_from_rational(long m, const Q& q) { return quad_make(m, q, Q(0)); }

QuadElem quad_from_lattice(long m, const Z& x, const Z& y) {
    check_field(m);
    if (mod4(m) == 1) {
        Q a{2 * x + y, Z(2)};
        Q b{y, Z(2)};
        a.canonicalize();
        b.canonicalize();
        return QuadElem{m, a, b};
    }
    return QuadElem{m, Q(x), Q(y)};
}

bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.m == y.m && x.a == y.a && x.b == y.b;
}

bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }

bool operator<(const QuadElem& x, const QuadElem& y) {
    if (x.m != y.m) return x.m < y.m;
    int c = cmp(x.a, y.a);
    if (c != 0) return c < 0;
    return cmp(x.b, y.b) < 0;
}

QuadElem operator-(const QuadElem& x) { return QuadElem{x.m, Q(-x.a), Q(-x.b)}; }

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
    check_same(x, y);
    return QuadElem{x.m, Q(x.a + y.a), Q(x.b + y.b)};
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) {
    check_same(x, y);
    return QuadElem{x.m, Q(x.a - y.a), Q(x.b - y.b)};
}

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
    check_same(x, y);
    return QuadElem{x.m, Q(x.a * y.a + x.m * x.b * y.b), Q(x.a * y.b + x.b * y.a)};
}

QuadElem operator/(const QuadElem& x, const QuadElem& y) { return x * quad_inv(y); }

QuadElem quad_conj(const QuadElem& x) { return QuadElem{x.m, x.a, Q(-x.b)}; }

Q quad_norm(const QuadElem& x) { return Q(x.a * x.a - x.m * x.b * x.b); }

Q quad_trace(const QuadElem& x) { return Q(2 * x.a); }

QuadElem quad_inv(const QuadElem& x) {
    if (x.is_zero()) throw InvalidInputError("division by zero");
    Q n = quad_norm(x);
    return QuadElem{x.m, Q(x.a / n), Q(-x.b / n)};
}

QuadElem quad_pow(const QuadElem& x, long k) {
    QuadElem base = k < 0 ? quad_inv(x) : x;
    unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
    QuadElem acc = quad_from_rational(x.m, Q(1));
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string quad_str(const QuadElem& x) {
    std::ostringstream os;
    os << x.a.get_str();
    if (x.b != 0) {
        os << (x.b > 0 ? "+" : "-");
        Q ab{abs(x.b)};
        if (ab != 1) os << ab.get_str() << "*";
        os << "sqrt(" << x.m << ")";
    }
    return os.str();
}

bool quad_is_integral(const QuadElem& x) {
    check_field(x.m);
    if (x.b == 0) return x.a.get_den() == 1;
    return quad_trace(x).get_den() == 1 && quad_norm(x).get_den() == 1;
}

IntPoly quad_min_poly(const QuadElem& x) {
    check_field(x.m);
    if (x.b == 0) return IntPoly{std::vector<Z>{Z(-x.a.get_num()), Z(x.a.get_den())}};
    Q tr = quad_trace(x), nr = quad_norm(x);
    Z lc;
    mpz_lcm(lc.get_mpz_t(), tr.get_den().get_mpz_t(), nr.get_den().get_mpz_t());
    Q c0 = nr * Q(lc);
    Q c1 = tr * Q(lc);
    return IntPoly{std::vector<Z>{Z(c0.get_num()), Z(-c1.get_num()), lc}}.primitive_pos();
}

CInterval quad_enclosure(const QuadElem& x, mpfr_prec_t prec) {
    check_field(x.m);
    RInterval a = RInterval::from_q(x.a, prec);
    RInterval b = RInterval::from_q(x.b, prec);
    RInterval s = isqrt_i(RInterval::from_z(Z(x.m > 0 ? x.m : -x.m), prec));
    if (x.m > 0) return CInterval{a + b * s, RInterval::from_long(0, prec)};
    return CInterval{a, b * s};
}

AlgebraicNumber quad_to_alg(const QuadElem& x, mpfr_prec_t prec) {
    if (x.b == 0) return alg_from_rational(x.a, prec);
    AlgebraicNumber r;
    r.minpoly = quad_min_poly(x);
    r.root_index = x.b > 0 ? 1 : 0;
    r.enclosure = quad_enclosure(x, prec);
    r.precision = prec;
    return r;
}

SplitType prime_split_type(long m, const Z& p) {
    check_field(m);
    Z d = mod4(m) == 1 ? Z(m) : Z(4 * Z(m));
    int ch = kronecker(d, p);
    if (ch == 0) return SplitType::ramified;
    return ch == 1 ? SplitType::split : SplitType::inert;
}

long quad_val(const QuadElem& x, const Z& p, int which) {
    check_field(x.m);
    if (x.is_zero()) throw InvalidInputError("valuation of zero");
    Z u, v, w;
    decompose(x, u, v, w);
    Z m{x.m};
    switch (prime_split_type(x.m, p)) {
        case SplitType::inert: {
            unsigned long t = val_p(Z(u * u - m * v * v), p);
            if (t % 2 != 0) throw Error("inert norm valuation must be even");
            return static_cast<long>(t / 2) - static_cast<long>(val_p(w, p));
        }
        case SplitType::ramified:
            return static_cast<long>(val_p(Z(u * u - m * v * v), p)) -
                   2 * static_cast<long>(val_p(w, p));
        case SplitType::split:
        default:
            return split_val(u, v, m, p, which) - static_cast<long>(val_p(w, p));
    }
}

std::vector<Z> quad_support(const QuadElem& x) {
    check_field(x.m);
    if (x.is_zero()) throw InvalidInputError("support of zero");
    Z u, v, w;
    decompose(x, u, v, w);
    Z nrm{u * u - Z(x.m) * v * v};
    std::set<Z> s;
    for (const auto& [p, e] : factor(Z(abs(nrm)))) s.insert(p);
    for (const auto& [p, e] : factor(w)) s.insert(p);
    return std::vector<Z>(s.begin(), s.end());
}

QuadElem quad_fundamental_unit(long m) {
    check_field(m);
    if (m < 2) throw InvalidInputError("fundamental unit needs a real field");
    FundamentalUnit fu = fundamental_unit(Z(m));
    Z d{fu.half ? 2 : 1};
    Q a{fu.x, d}, b{fu.y, d};
    a.canonicalize();
    b.canonicalize();
    return QuadElem{m, a, b};
}

long unit_exponent(const QuadElem& gamma) {
    check_field(gamma.m);
    if (gamma.m < 0) throw InvalidInputError("unit exponent needs a real field");
    Q n = quad_norm(gamma);
    if (n != 1 && n != -1) throw InvalidInputError("not a unit");
    Z m{gamma.m};
    QuadElem d = gamma;
    if (sign_p_plus_q_sqrt(d.a, d.b, m) < 0) d = -d;
    int c = sign_p_plus_q_sqrt(Q(d.a - 1), d.b, m);
    if (c == 0) return 0;
    bool negate = c < 0;
    if (negate) d = quad_inv(d);
    QuadElem eps = quad_fundamental_unit(gamma.m);
    auto leq = [&](const QuadElem& p, const QuadElem& q) {
        return sign_p_plus_q_sqrt(Q(p.a - q.a), Q(p.b - q.b), m) <= 0;
    };
    std::vector<QuadElem> pows{eps};
    while (leq(pows.back() * pows.back(), d)) pows.push_back(pows.back() * pows.back());
    long t = 0;
    for (int i = static_cast<int>(pows.size()) - 1; i >= 0; --i) {
        if (leq(pows[static_cast<size_t>(i)], d)) {
            d = d / pows[static_cast<size_t>(i)];
            t += 1L << i;
        }
    }
    if (!d.is_one()) throw Error("unit exponent extraction failed");
    return negate ? -t : t;
}

std::optional<long> quad_torsion_order(const QuadElem& x) {
    check_field(x.m);
    if (x.is_zero()) return std::nullopt;
    if (x.b == 0) {
        if (x.a == 1) return 1;
        if (x.a == -1) return 2;
        return std::nullopt;
    }
    if (x.m > 0) return std::nullopt;
    if (!quad_is_integral(x) || quad_norm(x) != 1) return std::nullopt;
    QuadElem p = x;
    for (long k = 1; k <= 6; ++k) {
        if (p.is_one()) return k;
        p = p * x;
    }
    return std::nullopt;
}

}  // namespace mdep
