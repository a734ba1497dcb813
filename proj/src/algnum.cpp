#include "mdep/algnum.hpp"

#include <algorithm>

#include "mdep/errors.hpp"

namespace mdep {

namespace {

bool perfect_square(const Z& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()); }

Q q_pow(const Q& v, long k) {
    if (k == 0) return Q(1);
    unsigned long a = static_cast<unsigned long>(k < 0 ? -k : k);
    Q r;
    mpz_pow_ui(r.get_num_mpz_t(), v.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), v.get_den().get_mpz_t(), a);
    if (k < 0) {
        if (v == 0) throw InvalidInputError("negative power of zero");
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    }
    r.canonicalize();
    return r;
}

IntPoly min_poly_of_rational(const Q& v) {
    return IntPoly{std::vector<Z>{Z(-v.get_num()), v.get_den()}};
}

// 0: no integer in x, 1: unique (stored in out), 2: more than one
int unique_int_in(const RInterval& x, Z& out) {
    Z lo_ceil, hi_floor;
    mpfr_get_z(lo_ceil.get_mpz_t(), x.lo(), MPFR_RNDU);
    mpfr_get_z(hi_floor.get_mpz_t(), x.hi(), MPFR_RNDD);
    if (lo_ceil > hi_floor) return 0;
    if (lo_ceil < hi_floor) return 2;
    out = lo_ceil;
    return 1;
}

// Certified search for an integer factor of primitive squarefree f built from
// a conjugate-closed subset of at most max_size roots. must_contain restricts
// to subsets containing that root (canonical index when canonical is set).
// With minimal set, the returned factor is guaranteed to be of least degree
// among factors containing must_contain, hence irreducible.
std::optional<IntPoly> find_factor(const IntPoly& f, int max_size, int must_contain,
                                   bool canonical, bool minimal) {
    int d = f.degree();
    std::vector<Z> lcdivs = divisors(f.lc());
    for (mpfr_prec_t p = 128; p <= 16384; p *= 2) {
        auto boxes = isolate_roots(f, p, canonical);
        int n = d;
        std::vector<int> partner(static_cast<size_t>(n), -1);
        bool matched = true;
        for (int i = 0; i < n && matched; ++i) {
            if (boxes[static_cast<size_t>(i)].real) {
                partner[static_cast<size_t>(i)] = i;
                continue;
            }
            CInterval mir = conj(boxes[static_cast<size_t>(i)].box);
            int found = -1;
            for (int j = 0; j < n; ++j) {
                if (j == i || boxes[static_cast<size_t>(j)].real) continue;
                if (overlaps(mir, boxes[static_cast<size_t>(j)].box)) {
                    if (found >= 0) {
                        matched = false;
                        break;
                    }
                    found = j;
                }
            }
            if (found < 0) matched = false;
            partner[static_cast<size_t>(i)] = found;
        }
        if (!matched) continue;
        // conjugate-closed building blocks: single real roots and pairs
        std::vector<std::vector<int>> units;
        std::vector<int> unit_of(static_cast<size_t>(n), -1);
        for (int i = 0; i < n; ++i) {
            if (unit_of[static_cast<size_t>(i)] >= 0) continue;
            int u = static_cast<int>(units.size());
            if (partner[static_cast<size_t>(i)] == i) {
                units.push_back({i});
                unit_of[static_cast<size_t>(i)] = u;
            } else {
                int j = partner[static_cast<size_t>(i)];
                units.push_back({i, j});
                unit_of[static_cast<size_t>(i)] = u;
                unit_of[static_cast<size_t>(j)] = u;
            }
        }
        int m = static_cast<int>(units.size());
        std::vector<std::pair<int, uint32_t>> masks;
        for (uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
            int size = 0;
            for (int b = 0; b < m; ++b)
                if (mask & (1u << b)) size += static_cast<int>(units[static_cast<size_t>(b)].size());
            if (size > max_size || size >= d) continue;
            if (must_contain >= 0 &&
                !(mask & (1u << unit_of[static_cast<size_t>(must_contain)])))
                continue;
            masks.emplace_back(size, mask);
        }
        if (must_contain >= 0 && max_size >= d) {
            // the full root set is always admissible for minimal-poly searches
            masks.emplace_back(d, (1u << m) - 1);
        }
        std::stable_sort(masks.begin(), masks.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        bool ambiguous = false;
        for (const auto& [size, mask] : masks) {
            std::vector<CInterval> coef;
            CInterval one(p);
            one.re = RInterval::from_long(1, p);
            one.im = RInterval::from_long(0, p);
            coef.push_back(one);
            CInterval zero(p);
            zero.re = RInterval::from_long(0, p);
            zero.im = zero.re;
            for (int b = 0; b < m; ++b) {
                if (!(mask & (1u << b))) continue;
                for (int r : units[static_cast<size_t>(b)]) {
                    const CInterval& root = boxes[static_cast<size_t>(r)].box;
                    coef.push_back(coef.back());
                    for (int j = static_cast<int>(coef.size()) - 2; j >= 0; --j) {
                        CInterval shifted = (j > 0) ? coef[static_cast<size_t>(j - 1)] : zero;
                        coef[static_cast<size_t>(j)] =
                            shifted - root * coef[static_cast<size_t>(j)];
                    }
                }
            }
            bool real_ok = true;
            for (int j = 0; j < size && real_ok; ++j)
                real_ok = coef[static_cast<size_t>(j)].im.contains_zero();
            if (!real_ok) continue;
            for (const Z& c : lcdivs) {
                RInterval cs = RInterval::from_z(c, p);
                std::vector<Z> gc(static_cast<size_t>(size) + 1);
                gc[static_cast<size_t>(size)] = c;
                bool ok = true;
                for (int j = 0; j < size && ok; ++j) {
                    RInterval ci = cs * coef[static_cast<size_t>(j)].re;
                    int st = unique_int_in(ci, gc[static_cast<size_t>(j)]);
                    if (st == 2) ambiguous = true;
                    if (st != 1) ok = false;
                }
                if (!ok) continue;
                IntPoly g{std::move(gc)};
                if (g.degree() != size) continue;
                if (try_divexact(f, g)) {
                    if (minimal && ambiguous) break;  // a smaller factor may have been missed
                    return g.primitive_pos();
                }
            }
        }
        if (!ambiguous) return std::nullopt;
    }
    throw PrecisionError("factor search exceeded the precision ladder");
}

}  // namespace

Q AlgebraicNumber::rational_value() const {
    if (!is_rational()) throw InvalidInputError("rational value of a non-rational number");
    Q v{Z(-minpoly[0]), minpoly[1]};
    v.canonicalize();
    return v;
}

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return a.root_index == b.root_index && a.minpoly == b.minpoly;
}

bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.minpoly == b.minpoly) return a.root_index < b.root_index;
    return a.minpoly < b.minpoly;
}

AlgebraicNumber alg_from_rational(const Q& v, mpfr_prec_t prec) {
    AlgebraicNumber a;
    a.minpoly = min_poly_of_rational(v);
    a.root_index = 0;
    a.enclosure.re = RInterval::from_q(v, prec);
    a.enclosure.im = RInterval::from_long(0, prec);
    a.precision = prec;
    return a;
}

AlgebraicNumber alg_from_min_poly(const IntPoly& f, int root_index, mpfr_prec_t prec) {
    if (f.degree() < 1) throw InvalidInputError("minimal polynomial must have degree >= 1");
    AlgebraicNumber a;
    a.minpoly = f.primitive_pos();
    if (root_index < 0 || root_index >= f.degree())
        throw InvalidInputError("root index out of range");
    a.root_index = root_index;
    a.enclosure = isolate_roots(a.minpoly, prec, true)[static_cast<size_t>(root_index)].box;
    a.precision = prec;
    return a;
}

AlgebraicNumber alg_from_poly_root(const IntPoly& f, int root_index, mpfr_prec_t prec) {
    auto [g, gi] = minimal_polynomial_of_root(f, root_index);
    return alg_from_min_poly(g, gi, prec);
}

void refine_enclosure(AlgebraicNumber& a, mpfr_prec_t prec) {
    if (prec <= a.precision) return;
    a.enclosure = isolate_roots(a.minpoly, prec, true)[static_cast<size_t>(a.root_index)].box;
    a.precision = prec;
}

bool is_irreducible(const IntPoly& f0) {
    if (f0.is_zero()) throw InvalidInputError("irreducibility of the zero polynomial");
    if (f0.degree() == 0) return false;
    IntPoly f = f0.primitive_pos();
    int d = f.degree();
    if (d == 1) return true;
    if (f[0] == 0) return false;
    if (d == 2) {
        Z disc = f[1] * f[1] - 4 * f[2] * f[0];
        return !perfect_square(disc);
    }
    if (gcd_poly(f, f.derivative()).degree() > 0) return false;
    if (d > 16) throw UnsupportedError("irreducibility test beyond degree 16");
    int cap = (d == 3) ? 1 : d / 2;
    return !find_factor(f, cap, -1, false, false).has_value();
}

std::pair<IntPoly, int> minimal_polynomial_of_root(const IntPoly& f0, int root_index) {
    if (f0.degree() < 1) throw InvalidInputError("minimal polynomial of a constant");
    IntPoly sf = squarefree_part(f0);
    int d = sf.degree();
    if (root_index < 0 || root_index >= d) throw InvalidInputError("root index out of range");
    if (sf.degree() > 16) throw UnsupportedError("minimal polynomial beyond degree 16");
    IntPoly fac = *find_factor(sf, d, root_index, true, true);
    int dg = fac.degree();
    if (dg == d) return {fac, root_index};
    for (mpfr_prec_t p = 128; p <= 16384; p *= 2) {
        auto fb = isolate_roots(sf, p, true);
        auto gb = isolate_roots(fac, p, true);
        int hit = -1, cnt = 0;
        for (int i = 0; i < dg; ++i) {
            if (overlaps(gb[static_cast<size_t>(i)].box,
                         fb[static_cast<size_t>(root_index)].box)) {
                hit = i;
                ++cnt;
            }
        }
        if (cnt == 1) return {fac, hit};
    }
    throw PrecisionError("root relocation exceeded the precision ladder");
}

Z naive_height(const IntPoly& f) {
    if (f.is_zero()) throw InvalidInputError("height of the zero polynomial");
    Z h = 0;
    for (const Z& c : f.coeffs()) h = std::max(h, Z(abs(c)));
    return h;
}

Z naive_height(const AlgebraicNumber& a) { return naive_height(a.minpoly); }

CertifiedValue weil_height(const AlgebraicNumber& a, mpfr_prec_t precision) {
    if (a.is_zero()) throw InvalidInputError("height of zero is undefined");
    if (a.is_rational()) {
        Q v = a.rational_value();
        Z h = std::max(Z(abs(v.get_num())), Z(abs(v.get_den())));
        mpfr_prec_t p = std::max<mpfr_prec_t>(
            precision, static_cast<mpfr_prec_t>(mpz_sizeinbase(h.get_mpz_t(), 2)) + 8);
        return {RInterval::from_z(h, p), p};
    }
    int d = a.degree();
    for (mpfr_prec_t p = precision + 16; p <= (1 << 15); p *= 2) {
        RInterval h = rootn(mahler_interval(a.minpoly, p), static_cast<unsigned long>(d));
        if (h.width_log2() <= -static_cast<double>(precision)) return {h, p};
    }
    throw PrecisionError("height enclosure did not reach the requested width");
}

bool weil_height_leq(const AlgebraicNumber& a, const Q& bound) {
    if (a.is_zero()) throw InvalidInputError("height of zero is undefined");
    if (a.is_rational()) {
        Q v = a.rational_value();
        Z h = std::max(Z(abs(v.get_num())), Z(abs(v.get_den())));
        return Q(h) <= bound;
    }
    return mahler_leq(a.minpoly, q_pow(bound, a.degree()));
}

bool poly_weil_height_leq(const IntPoly& f, const Q& bound) {
    if (f.degree() < 1) throw InvalidInputError("height bound needs degree >= 1");
    return mahler_leq(f, q_pow(bound, f.degree()));
}

CertifiedValue height_of_power(const AlgebraicNumber& a, long k, mpfr_prec_t precision) {
    if (a.is_zero()) throw InvalidInputError("height of zero is undefined");
    unsigned long ak = static_cast<unsigned long>(k < 0 ? -k : k);
    if (k == 0) return {RInterval::from_long(1, precision), precision};
    if (a.is_rational()) {
        Q v = a.rational_value();
        Z h = std::max(Z(abs(v.get_num())), Z(abs(v.get_den())));
        Z hk;
        mpz_pow_ui(hk.get_mpz_t(), h.get_mpz_t(), ak);
        mpfr_prec_t p = std::max<mpfr_prec_t>(
            precision, static_cast<mpfr_prec_t>(mpz_sizeinbase(hk.get_mpz_t(), 2)) + 8);
        return {RInterval::from_z(hk, p), p};
    }
    int d = a.degree();
    for (mpfr_prec_t p = precision + 16; p <= (1 << 15); p *= 2) {
        RInterval h = rootn(mahler_interval(a.minpoly, p), static_cast<unsigned long>(d));
        RInterval hk = pow_si(h, static_cast<long>(ak));
        if (hk.width_log2() <= -static_cast<double>(precision)) return {hk, p};
    }
    throw PrecisionError("power-height enclosure did not reach the requested width");
}

AlgebraicNumber scale_by_leading(const AlgebraicNumber& a) {
    if (a.is_zero()) throw InvalidInputError("scaling zero");
    Z lead = a.minpoly.lc();
    if (lead == 1) return a;
    AlgebraicNumber out;
    out.minpoly = a.minpoly.monic_from_lc();
    out.root_index = a.root_index;
    RInterval s = RInterval::from_z(lead, a.precision);
    out.enclosure = CInterval{a.enclosure.re * s, a.enclosure.im * s};
    out.precision = a.precision;
    return out;
}

std::optional<long> cyclotomic_order(const IntPoly& f) {
    if (f.degree() < 1 || !f.is_monic()) return std::nullopt;
    for (uint64_t k : inverse_totient(static_cast<uint64_t>(f.degree()))) {
        if (f == IntPoly::cyclotomic(static_cast<unsigned>(k))) return static_cast<long>(k);
    }
    return std::nullopt;
}

bool is_root_of_unity(const AlgebraicNumber& a) {
    return cyclotomic_order(a.minpoly).has_value();
}

std::optional<long> torsion_order(const AlgebraicNumber& a) {
    return cyclotomic_order(a.minpoly);
}

bool is_degenerate(const IntPoly& f) {
    if (f.degree() < 2) throw InvalidInputError("degeneracy needs degree >= 2");
    size_t v = 0;
    while (f[v] == 0) ++v;
    IntPoly f1{std::vector<Z>(f.coeffs().begin() + static_cast<long>(v), f.coeffs().end())};
    if (f1.degree() < 2) return false;
    IntPoly f2 = squarefree_part(f1);
    int d2 = f2.degree();
    if (d2 < 2) return false;
    // ratio polynomial: roots are all quotients of pairs of roots of f2
    int deg_r = d2 * d2;
    std::vector<Z> xs, ys;
    for (int j = 0; static_cast<int>(xs.size()) < deg_r + 1; ++j) {
        long t = (j % 2 == 0) ? j / 2 + 1 : -(j / 2 + 1);
        std::vector<Z> sc(static_cast<size_t>(d2) + 1);
        Z tp = 1;
        for (int i = 0; i <= d2; ++i) {
            sc[static_cast<size_t>(i)] = f2[static_cast<size_t>(i)] * tp;
            tp *= t;
        }
        xs.emplace_back(t);
        ys.push_back(resultant(f2, IntPoly{std::move(sc)}));
    }
    IntPoly ratio = interpolate_integer(xs, ys);
    IntPoly tm1{-1, 1};
    for (int i = 0; i < d2; ++i) ratio = divexact(ratio, tm1);
    long kmax = 2L * d2 * d2 * d2 * d2;
    for (long k = 2; k <= kmax; ++k) {
        if (euler_phi(static_cast<uint64_t>(k)) > static_cast<uint64_t>(d2 * d2)) continue;
        if (poly_divides(IntPoly::cyclotomic(static_cast<unsigned>(k)), ratio)) return true;
    }
    return false;
}

bool galois_is_full(const IntPoly& f0) {
    int d = f0.degree();
    if (d < 1) throw InvalidInputError("galois test needs degree >= 1");
    if (d > 4) throw UnsupportedError("galois test beyond degree 4");
    if (d <= 2) return true;
    IntPoly f = f0.primitive_pos();
    bool disc_square = perfect_square(discriminant(f));
    if (d == 3) return !disc_square;
    IntPoly g = f.monic_from_lc();
    Z a = g[3], b = g[2], c = g[1], e = g[0];
    IntPoly res{std::vector<Z>{Z(-(a * a * e - 4 * b * e + c * c)), Z(a * c - 4 * e), Z(-b), Z(1)}};
    return is_irreducible(res) && !disc_square;
}

IntPoly power_poly(const IntPoly& f, unsigned long k) {
    if (f.degree() < 1) throw InvalidInputError("power of a constant polynomial");
    if (k == 0) throw InvalidInputError("power_poly needs k >= 1");
    if (k == 1) return f;
    int d = f.degree();
    std::vector<Z> xs, ys;
    for (int j = 0; j <= d; ++j) {
        long t = (j % 2 == 0) ? j / 2 : -(j / 2 + 1);
        std::vector<Z> gc(k + 1);
        gc[0] = t;
        gc[k] = -1;
        xs.emplace_back(t);
        ys.push_back(resultant(f, IntPoly{std::move(gc)}));
    }
    return interpolate_integer(xs, ys);
}

IntPoly product_poly(const IntPoly& a, const IntPoly& b) {
    if (a.degree() < 1 || b.degree() < 1)
        throw InvalidInputError("product of constant polynomials");
    if (b[0] == 0) throw InvalidInputError("product_poly needs b(0) != 0");
    int da = a.degree(), db = b.degree();
    int deg = da * db;
    std::vector<Z> xs, ys;
    for (int j = 0; j <= deg; ++j) {
        long t = (j % 2 == 0) ? j / 2 : -(j / 2 + 1);
        std::vector<Z> gc(static_cast<size_t>(db) + 1);
        Z tp = 1;
        for (int i = 0; i <= db; ++i) {
            gc[static_cast<size_t>(db - i)] = b[static_cast<size_t>(i)] * tp;
            tp *= t;
        }
        xs.emplace_back(t);
        ys.push_back(resultant(a, IntPoly{std::move(gc)}));
    }
    return interpolate_integer(xs, ys);
}

IntPoly min_poly_of_power(const AlgebraicNumber& a, long k) {
    if (k == 0) return IntPoly{-1, 1};
    if (a.is_zero()) {
        if (k < 0) throw InvalidInputError("negative power of zero");
        return IntPoly{0, 1};
    }
    if (a.is_rational()) return min_poly_of_rational(q_pow(a.rational_value(), k));
    unsigned long ak = static_cast<unsigned long>(k < 0 ? -k : k);
    IntPoly P = squarefree_part(power_poly(a.minpoly, ak));
    AlgebraicNumber tmp = a;
    IntPoly g;
    bool located = false;
    for (mpfr_prec_t p = std::max<mpfr_prec_t>(a.precision, 128); p <= 16384 && !located;
         p *= 2) {
        refine_enclosure(tmp, p);
        auto pb = isolate_roots(P, p, true);
        CInterval target = pow_si_c(tmp.enclosure, static_cast<long>(ak));
        int hit = -1, cnt = 0;
        for (int i = 0; i < P.degree(); ++i) {
            if (overlaps(pb[static_cast<size_t>(i)].box, target)) {
                hit = i;
                ++cnt;
            }
        }
        if (cnt == 1) {
            g = minimal_polynomial_of_root(P, hit).first;
            located = true;
        }
    }
    if (!located) throw PrecisionError("power location exceeded the precision ladder");
    if (k < 0) g = g.reverse().primitive_pos();
    return g;
}

}  // namespace mdep
