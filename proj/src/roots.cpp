#include "mdep/roots.hpp"

#include <algorithm>
#include <optional>

#include "mdep/errors.hpp"

namespace mdep {

namespace {

Q q_of(mpfr_srcptr x) {
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, x);
    Q r(q);
    mpq_clear(q);
    return r;
}

RInterval mid_exact(const RInterval& x, mpfr_prec_t prec) {
    RInterval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    mpfr_add(t, x.lo(), x.hi(), MPFR_RNDN);
    mpfr_div_2ui(t, t, 1, MPFR_RNDN);
    mpfr_set(r.lo(), t, MPFR_RNDD);
    mpfr_set(r.hi(), t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

CInterval cmid(const CInterval& z, mpfr_prec_t prec) {
    return {mid_exact(z.re, prec), mid_exact(z.im, prec)};
}

CInterval cmirror(const CInterval& z) { return {z.re, neg(z.im)}; }

bool rect_disjoint(const CInterval& a, const CInterval& b) {
    return mpfr_cmp(a.re.hi(), b.re.lo()) < 0 || mpfr_cmp(b.re.hi(), a.re.lo()) < 0 ||
           mpfr_cmp(a.im.hi(), b.im.lo()) < 0 || mpfr_cmp(b.im.hi(), a.im.lo()) < 0;
}

bool rect_overlap(const CInterval& a, const CInterval& b) { return !rect_disjoint(a, b); }

std::vector<CInterval> dk_init(int d, mpfr_prec_t prec) {
    CInterval c(prec);
    c.re = RInterval::from_q(Q(2, 5), prec);
    c.im = RInterval::from_q(Q(9, 10), prec);
    std::vector<CInterval> z;
    CInterval p = c;
    for (int i = 0; i < d; ++i) {
        z.push_back(cmid(p, prec));
        p = p * c;
    }
    return z;
}

void dk_pass(const IntPoly& f, std::vector<CInterval>& z, int iters, mpfr_prec_t prec) {
    int d = f.degree();
    RInterval lc = RInterval::from_z(f.lc(), prec);
    RInterval zero = RInterval::from_long(0, prec);
    for (int it = 0; it < iters; ++it) {
        for (int i = 0; i < d; ++i) {
            CInterval den(prec);
            den.re = lc;
            den.im = zero;
            for (int j = 0; j < d; ++j)
                if (j != i) den = den * (z[i] - z[j]);
            CInterval num = f.eval_ci(z[i]);
            try {
                z[i] = cmid(z[i] - num / den, prec);
            } catch (const UndecidedError&) {
                // collision of approximants: deterministic nudge
                CInterval bump(prec);
                bump.re = RInterval::from_q(Q(1, 64 + it), prec);
                bump.im = RInterval::from_q(Q(1, 97 + it), prec);
                z[i] = cmid(z[i] + bump, prec);
            }
        }
    }
}

void newton_polish(const IntPoly& f, const IntPoly& fp, std::vector<CInterval>& z,
                   mpfr_prec_t prec) {
    for (auto& zi : z) {
        for (int it = 0; it < 10; ++it) {
            CInterval num = f.eval_ci(zi);
            CInterval den = fp.eval_ci(zi);
            try {
                zi = cmid(zi - num / den, prec);
            } catch (const UndecidedError&) {
                break;
            }
        }
    }
}

CInterval expand_rect(const CInterval& z, mpfr_srcptr rad, mpfr_prec_t prec) {
    CInterval out(prec);
    mpfr_sub(out.re.lo(), z.re.lo(), rad, MPFR_RNDD);
    mpfr_add(out.re.hi(), z.re.hi(), rad, MPFR_RNDU);
    mpfr_sub(out.im.lo(), z.im.lo(), rad, MPFR_RNDD);
    mpfr_add(out.im.hi(), z.im.hi(), rad, MPFR_RNDU);
    return out;
}

// Radius d |f(z)| / |f'(z)| guarantees a root inside the disk around z.
std::optional<std::vector<CInterval>> certify_rects(const IntPoly& f, const IntPoly& fp,
                                                    const std::vector<CInterval>& z,
                                                    mpfr_prec_t prec) {
    int d = f.degree();
    std::vector<CInterval> rects;
    rects.reserve(z.size());
    for (const auto& zi : z) {
        RInterval num = abs_c(f.eval_ci(zi));
        RInterval den = abs_c(fp.eval_ci(zi));
        if (mpfr_sgn(den.lo()) <= 0) return std::nullopt;
        RInterval eta = (RInterval::from_long(d, prec) * num) / den;
        rects.push_back(expand_rect(zi, eta.hi(), prec));
    }
    for (size_t i = 0; i < rects.size(); ++i)
        for (size_t j = i + 1; j < rects.size(); ++j)
            if (rect_overlap(rects[i], rects[j])) return std::nullopt;
    return rects;
}

struct Classified {
    std::vector<RootBox> boxes;
};

std::optional<Classified> classify_rects(const IntPoly& f, std::vector<CInterval> rects,
                                         mpfr_prec_t prec) {
    size_t n = rects.size();
    std::vector<int> kind(n, -1);  // 0 real, 1 complex
    for (size_t i = 0; i < n; ++i) {
        if (!rects[i].im.contains_zero()) {
            kind[i] = 1;
            continue;
        }
        int cnt = count_real_roots_in(f, q_of(rects[i].re.lo()), q_of(rects[i].re.hi()));
        if (cnt > 1) return std::nullopt;
        kind[i] = (cnt == 1) ? 0 : 1;
    }
    // conjugate matching among complex rectangles
    std::vector<long> mate(n, -1);
    for (size_t i = 0; i < n; ++i) {
        if (kind[i] != 1) continue;
        CInterval mir = cmirror(rects[i]);
        long found = -1;
        for (size_t j = 0; j < n; ++j) {
            if (kind[j] != 1) continue;
            if (rect_overlap(mir, rects[j])) {
                if (found >= 0) return std::nullopt;
                found = static_cast<long>(j);
            }
        }
        if (found < 0 || found == static_cast<long>(i)) return std::nullopt;
        mate[i] = found;
    }
    for (size_t i = 0; i < n; ++i) {
        if (kind[i] == 1 && (mate[i] < 0 || mate[static_cast<size_t>(mate[i])] != static_cast<long>(i)))
            return std::nullopt;
    }
    // symmetrize each conjugate pair
    std::vector<bool> done(n, false);
    for (size_t i = 0; i < n; ++i) {
        if (kind[i] != 1 || done[i]) continue;
        size_t j = static_cast<size_t>(mate[i]);
        CInterval merged(prec);
        merged.re = hull(rects[i].re, rects[j].re);
        merged.im = hull(rects[i].im, neg(rects[j].im));
        rects[i] = merged;
        rects[j] = cmirror(merged);
        done[i] = done[j] = true;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (rect_overlap(rects[i], rects[j])) return std::nullopt;
    Classified out;
    out.boxes.resize(n);
    RInterval zero = RInterval::from_long(0, prec);
    for (size_t i = 0; i < n; ++i) {
        out.boxes[i].real = (kind[i] == 0);
        out.boxes[i].box = rects[i];
        if (kind[i] == 0) out.boxes[i].box.im = zero;
    }
    return out;
}

// Integer polynomial whose roots are all pairwise sums of roots of f
// (including doubled roots), via interpolation of Res_y(f(y), f(t - y)).
IntPoly pair_sum_poly(const IntPoly& f) {
    int d = f.degree();
    int n = d * d + 1;
    std::vector<Z> xs, ys;
    xs.reserve(n);
    ys.reserve(n);
    for (int k = 0; k < n; ++k) {
        long t = (k % 2 == 0) ? k / 2 : -(k / 2 + 1);
        IntPoly lin{t, -1};
        IntPoly g{std::vector<Z>{f[static_cast<size_t>(d)]}};
        for (int i = d - 1; i >= 0; --i) g = g * lin + IntPoly{std::vector<Z>{f[static_cast<size_t>(i)]}};
        xs.emplace_back(t);
        ys.push_back(resultant(f, g));
    }
    return interpolate_integer(xs, ys);
}

enum class Rel { LT, GT, UNKNOWN };

Rel cmp_iv(const RInterval& a, const RInterval& b) {
    if (mpfr_cmp(a.hi(), b.lo()) < 0) return Rel::LT;
    if (mpfr_cmp(b.hi(), a.lo()) < 0) return Rel::GT;
    return Rel::UNKNOWN;
}

// Exact canonical ordering; nullopt when the current boxes are too coarse.
std::optional<std::vector<RootBox>> order_boxes(const std::vector<RootBox>& boxes,
                                                std::optional<IntPoly>& ps_sf) {
    std::vector<size_t> reals, cplx;
    for (size_t i = 0; i < boxes.size(); ++i) (boxes[i].real ? reals : cplx).push_back(i);
    std::sort(reals.begin(), reals.end(), [&](size_t a, size_t b) {
        return mpfr_cmp(boxes[a].box.re.lo(), boxes[b].box.re.lo()) < 0;
    });
    // pairwise exact relations among non-real roots
    size_t m = cplx.size();
    std::vector<std::vector<int>> lt(m, std::vector<int>(m, 0));
    for (size_t a = 0; a < m; ++a) {
        for (size_t b = a + 1; b < m; ++b) {
            const CInterval& x = boxes[cplx[a]].box;
            const CInterval& y = boxes[cplx[b]].box;
            Rel r = cmp_iv(x.re, y.re);
            if (r == Rel::UNKNOWN) {
                // either truly equal real parts or still unresolved
                Q wlo = std::min(q_of(x.re.lo()), q_of(y.re.lo())) * 2;
                Q whi = std::max(q_of(x.re.hi()), q_of(y.re.hi())) * 2;
                if (!ps_sf) return std::nullopt;  // caller fills the cache first
                int cnt = count_real_roots_in(*ps_sf, wlo, whi);
                if (cnt != 1) return std::nullopt;
                r = cmp_iv(x.im, y.im);
                if (r == Rel::UNKNOWN) return std::nullopt;
            }
            lt[a][b] = (r == Rel::LT) ? 1 : -1;
            lt[b][a] = -lt[a][b];
        }
    }
    std::vector<size_t> idx(m);
    for (size_t i = 0; i < m; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return lt[a][b] == 1; });
    std::vector<RootBox> out;
    out.reserve(boxes.size());
    for (size_t i : reals) out.push_back(boxes[i]);
    for (size_t i : idx) out.push_back(boxes[cplx[i]]);
    return out;
}

}  // namespace

std::vector<RootBox> isolate_roots(const IntPoly& f, mpfr_prec_t prec, bool canonical) {
    int d = f.degree();
    if (d < 0) throw InvalidInputError("isolate_roots of the zero polynomial");
    if (d == 0) return {};
    if (d >= 2 && gcd_poly(f, f.derivative()).degree() != 0)
        throw InvalidInputError("isolate_roots requires squarefree input");
    if (d == 1) {
        Q root{Z(-f[0]), f[1]};
        root.canonicalize();
        RootBox b;
        b.real = true;
        b.box.re = RInterval::from_q(root, prec);
        b.box.im = RInterval::from_long(0, prec);
        return {b};
    }
    IntPoly fp = f.derivative();
    std::optional<IntPoly> ps_sf;
    std::vector<CInterval> warm;
    for (mpfr_prec_t p = std::max<mpfr_prec_t>(prec, 64); p <= 16384; p *= 2) {
        std::vector<CInterval> z = warm.empty() ? dk_init(d, p) : warm;
        if (!warm.empty())
            for (auto& zi : z) zi = cmid(zi, p);
        dk_pass(f, z, 128 + 8 * d, p);
        newton_polish(f, fp, z, p);
        warm = z;
        auto rects = certify_rects(f, fp, z, p);
        if (!rects) continue;
        auto cls = classify_rects(f, std::move(*rects), p);
        if (!cls) continue;
        if (!canonical) return cls->boxes;
        auto ordered = order_boxes(cls->boxes, ps_sf);
        if (!ordered && !ps_sf) {
            ps_sf = squarefree_part(pair_sum_poly(f));
            ordered = order_boxes(cls->boxes, ps_sf);
        }
        if (ordered) return *ordered;
    }
    throw PrecisionError("root isolation exceeded the precision ladder");
}

RInterval mahler_interval(const IntPoly& f, mpfr_prec_t prec) {
    if (f.is_zero()) throw InvalidInputError("mahler measure of the zero polynomial");
    RInterval m = RInterval::from_z(abs(f.lc()), prec);
    if (f.degree() == 0) return m;
    auto boxes = isolate_roots(f, prec, false);
    for (const auto& b : boxes) m = m * max1(abs_c(b.box));
    return m;
}

namespace {

// |(-b + s sqrt(disc)) / (2a)| compared against 1: sign of |root| - 1.
int quad_root_abs_vs_one(const Z& a, const Z& b, const Z& disc, int s) {
    // root - 1 and root + 1 signs
    int s2a = (a > 0) ? 1 : -1;
    int sgn_minus = sign_p_plus_q_sqrt(Q(Z(-b - 2 * a)), Q(s), disc) * s2a;
    int sgn_plus = sign_p_plus_q_sqrt(Q(Z(-b + 2 * a)), Q(s), disc) * s2a;
    if (sgn_minus > 0) return 1;    // root > 1
    if (sgn_plus < 0) return 1;     // root < -1
    if (sgn_minus == 0 || sgn_plus == 0) return 0;
    return -1;
}

bool mahler_leq_quadratic(const IntPoly& f, const Q& bound) {
    Z a = f[2], b = f[1], c = f[0];
    Z alead = abs(a);
    Z disc = b * b - 4 * a * c;
    if (disc < 0) {
        Z m = std::max(alead, Z(abs(c)));
        return Q(m) <= bound;
    }
    if (disc == 0) {
        // double root -b/2a: M = max(|2a|, |b|)^2 / (4|a|)
        Z m = std::max(Z(2 * alead), Z(abs(b)));
        Q val{Z(m * m), Z(4 * alead)};
        val.canonicalize();
        return val <= bound;
    }
    int c_plus = quad_root_abs_vs_one(a, b, disc, 1);
    int c_minus = quad_root_abs_vs_one(a, b, disc, -1);
    int outside = (c_plus > 0 ? 1 : 0) + (c_minus > 0 ? 1 : 0);
    if (outside == 0) return Q(alead) <= bound;
    if (outside == 2) return Q(abs(c)) <= bound;
    int s = (c_plus > 0) ? 1 : -1;
    // M = |-b + s sqrt(disc)| / 2 <= bound  <=>  -2 bound <= -b + s sqrt(disc) <= 2 bound
    Q two_bound = 2 * bound;
    Q ph = Q(Z(-b)) - two_bound;
    Q pl = Q(Z(-b)) + two_bound;
    int hi = sign_p_plus_q_sqrt(ph, Q(s), disc);
    int lo = sign_p_plus_q_sqrt(pl, Q(s), disc);
    return hi <= 0 && lo >= 0;
}

// Number of roots of an irreducible reciprocal polynomial lying exactly on
// the unit circle; -1 when unknown (degree > 4).
int on_circle_count(const IntPoly& f) {
    int d = f.degree();
    IntPoly rev = f.reverse();
    bool recip = (rev == f) || (rev == Z(-1) * f);
    if (!recip) return 0;
    if (d != 4) return -1;
    if (rev == Z(-1) * f) return -1;  // anti-reciprocal quartics are reducible
    // y = x + 1/x maps f to a y^2 + b y + (c - 2a)
    Z a = f[4], b = f[3], c = f[2];
    Z disc = b * b - 4 * a * (c - 2 * a);
    if (disc < 0) return 0;
    if (disc == 0) return -1;  // double y-root: f not squarefree or reducible
    int n = 0;
    int s2a = (a > 0) ? 1 : -1;
    for (int s : {1, -1}) {
        // y = (-b + s sqrt(disc)) / (2a) strictly inside (-2, 2)?
        int above = sign_p_plus_q_sqrt(Q(Z(-b - 4 * a)), Q(s), disc) * s2a;  // y - 2
        int below = sign_p_plus_q_sqrt(Q(Z(-b + 4 * a)), Q(s), disc) * s2a;  // y + 2
        if (above == 0 || below == 0) return -1;  // y = ±2: x = ±1 root, reducible
        if (above < 0 && below > 0) n += 2;
    }
    return n;
}

}  // namespace

bool mahler_leq(const IntPoly& f, const Q& bound) {
    if (f.is_zero()) throw InvalidInputError("mahler measure of the zero polynomial");
    int d = f.degree();
    Z alead = abs(f.lc());
    if (d == 0) return Q(alead) <= bound;
    if (d == 1) return Q(std::max(alead, Z(abs(f[0])))) <= bound;
    if (d == 2) return mahler_leq_quadratic(f, bound);
    int n_on = on_circle_count(f);
    for (mpfr_prec_t p = 128; p <= 16384; p *= 2) {
        auto boxes = isolate_roots(f, p, false);
        int out = 0, unresolved = 0;
        std::vector<const RootBox*> outs;
        for (const auto& bx : boxes) {
            RInterval a2 = abs2_c(bx.box);
            if (a2.certainly_gt_q(Q(1))) {
                ++out;
                outs.push_back(&bx);
            } else if (!a2.certainly_lt_q(Q(1))) {
                ++unresolved;
            }
        }
        bool classified = (n_on >= 0) ? (unresolved == n_on) : (unresolved == 0);
        RInterval m = RInterval::from_z(alead, p);
        if (classified) {
            if (out == 0) return Q(alead) <= bound;
            if (out == d) return Q(Z(abs(f[0]))) <= bound;
            for (const RootBox* bx : outs) m = m * abs_c(bx->box);
        } else {
            for (const auto& bx : boxes) m = m * max1(abs_c(bx.box));
        }
        if (mpfr_cmp_q(m.hi(), bound.get_mpq_t()) <= 0) return true;
        if (m.certainly_gt_q(bound)) return false;
    }
    throw UndecidedError("mahler comparison undecided at the precision cap");
}

}  // namespace mdep
