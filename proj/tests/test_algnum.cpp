#include "doctest.h"

#include <vector>

#include "mdep/algnum.hpp"

using namespace mdep;

namespace {

Q qd(long num, long den) {
    Q v{Z(num), Z(den)};
    v.canonicalize();
    return v;
}

IntPoly x_pow_k_minus_1(long k) {
    std::vector<Z> c(static_cast<size_t>(k) + 1);
    c[0] = -1;
    c[static_cast<size_t>(k)] = 1;
    return IntPoly{std::move(c)};
}

// Independent degeneracy check: two distinct roots share a k-th power iff the
// polynomial with the k-th powers of the roots has a vanishing discriminant.
// Power sums of the scaled roots feed Newton's identities both ways.
bool degenerate_by_power_sums(const IntPoly& f) {
    size_t v = 0;
    while (f[v] == 0) ++v;
    IntPoly f1{std::vector<Z>(f.coeffs().begin() + static_cast<long>(v), f.coeffs().end())};
    if (f1.degree() < 2) return false;
    IntPoly g = squarefree_part(f1).monic_from_lc();
    int d = g.degree();
    if (d < 2) return false;
    std::vector<Z> e(static_cast<size_t>(d) + 1);
    e[0] = 1;
    for (int i = 1; i <= d; ++i) {
        e[static_cast<size_t>(i)] = g[static_cast<size_t>(d - i)];
        if (i % 2 == 1) e[static_cast<size_t>(i)] = -e[static_cast<size_t>(i)];
    }
    long kmax = 2L * d * d * d * d;
    long mmax = static_cast<long>(d) * kmax;
    std::vector<Z> p(static_cast<size_t>(mmax) + 1);
    p[0] = d;
    for (long m = 1; m <= mmax; ++m) {
        Z acc = 0;
        long top = std::min<long>(m - 1, d);
        for (long i = 1; i <= top; ++i) {
            Z term = e[static_cast<size_t>(i)] * p[static_cast<size_t>(m - i)];
            acc += (i % 2 == 1) ? term : -term;
        }
        if (m <= d) {
            Z term = m * e[static_cast<size_t>(m)];
            acc += (m % 2 == 1) ? term : -term;
        }
        p[static_cast<size_t>(m)] = acc;
    }
    for (long k = 2; k <= kmax; ++k) {
        if (euler_phi(static_cast<uint64_t>(k)) > static_cast<uint64_t>(d * d)) continue;
        std::vector<Z> eps(static_cast<size_t>(d) + 1);
        eps[0] = 1;
        for (long j = 1; j <= d; ++j) {
            Z acc = 0;
            for (long i = 1; i <= j; ++i) {
                Z term = eps[static_cast<size_t>(j - i)] * p[static_cast<size_t>(i * k)];
                acc += (i % 2 == 1) ? term : -term;
            }
            Z q;
            mpz_divexact_ui(q.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(j));
            eps[static_cast<size_t>(j)] = q;
        }
        std::vector<Z> hc(static_cast<size_t>(d) + 1);
        hc[static_cast<size_t>(d)] = 1;
        for (int j = 1; j <= d; ++j) {
            hc[static_cast<size_t>(d - j)] = (j % 2 == 1) ? Z(-eps[static_cast<size_t>(j)])
                                                          : eps[static_cast<size_t>(j)];
        }
        if (discriminant(IntPoly{std::move(hc)}) == 0) return true;
    }
    return false;
}

}  // namespace

TEST_SUITE("algnum") {

TEST_CASE("irreducibility") {
    CHECK(is_irreducible(IntPoly{-2, 0, 1}));
    CHECK(!is_irreducible(IntPoly{-1, 0, 1}));
    CHECK(is_irreducible(IntPoly{1, 1, 0, 1}));
    CHECK(is_irreducible(IntPoly{1, 0, 1}));
    CHECK(is_irreducible(IntPoly{1, 0, 0, 0, 1}));
    CHECK(!is_irreducible(IntPoly{4, 0, 0, 0, 1}));
    CHECK(!is_irreducible(IntPoly{-4, 0, 0, 0, 1}));
    CHECK(is_irreducible(IntPoly{-2, 2}));
    CHECK(is_irreducible(IntPoly{-2, 2, 2}));
    CHECK(is_irreducible(IntPoly{1, 1, 1, 1, 1}));
    CHECK(is_irreducible(IntPoly{1, 0, -10, 0, 1}));
    CHECK(is_irreducible(IntPoly{-1, -1, 0, 0, 1}));
    CHECK(!is_irreducible(IntPoly{10, -7, -29, 6}));
    CHECK(!is_irreducible(IntPoly{1, -2, 0, 2, -2, 0, 1}));
    CHECK(!is_irreducible(IntPoly{5}));
    CHECK_THROWS_AS(is_irreducible(IntPoly{}), InvalidInputError);
}

TEST_CASE("minimal polynomial extraction from reducible input") {
    IntPoly f{2, -2, -1, 1};  // (x^2 - 2)(x - 1)
    auto [g0, i0] = minimal_polynomial_of_root(f, 0);
    CHECK(g0 == IntPoly{-2, 0, 1});
    CHECK(i0 == 0);
    auto [g1, i1] = minimal_polynomial_of_root(f, 1);
    CHECK(g1 == IntPoly{-1, 1});
    CHECK(i1 == 0);
    auto [g2, i2] = minimal_polynomial_of_root(f, 2);
    CHECK(g2 == IntPoly{-2, 0, 1});
    CHECK(i2 == 1);

    IntPoly q{-4, 0, 0, 0, 1};  // (x^2 - 2)(x^2 + 2)
    auto [h0, j0] = minimal_polynomial_of_root(q, 0);
    CHECK(h0 == IntPoly{-2, 0, 1});
    CHECK(j0 == 0);
    auto [h2, j2] = minimal_polynomial_of_root(q, 2);
    CHECK(h2 == IntPoly{2, 0, 1});
    CHECK(j2 == 0);
    auto [h3, j3] = minimal_polynomial_of_root(q, 3);
    CHECK(h3 == IntPoly{2, 0, 1});
    CHECK(j3 == 1);

    AlgebraicNumber one = alg_from_poly_root(f, 1);
    CHECK(one == alg_from_rational(Q(1)));
}

TEST_CASE("naive height") {
    CHECK(naive_height(alg_from_rational(qd(3, 2))) == 3);
    CHECK(naive_height(IntPoly{-2, 0, 1}) == 2);
    CHECK(naive_height(alg_from_min_poly(IntPoly{-1, -1, 1}, 1)) == 1);
}

TEST_CASE("weil height") {
    CertifiedValue h = weil_height(alg_from_rational(qd(3, 2)));
    CHECK(h.value.contains_q(Q(3)));
    CHECK(h.value.width_log2() < -100000);

    h = weil_height(alg_from_min_poly(IntPoly{-2, 0, 1}, 1));
    CHECK(h.value.certainly_gt_q(qd(141421, 100000)));
    CHECK(h.value.certainly_lt_q(qd(141422, 100000)));

    h = weil_height(alg_from_min_poly(IntPoly{-1, -1, 1}, 1), 128);
    CHECK(h.value.certainly_gt_q(qd(1272019, 1000000)));
    CHECK(h.value.certainly_lt_q(qd(1272020, 1000000)));
    CHECK(h.value.width_log2() <= -128);

    CHECK_THROWS_AS(weil_height(alg_from_rational(Q(0))), InvalidInputError);
}

TEST_CASE("exact height comparisons") {
    AlgebraicNumber r2 = alg_from_min_poly(IntPoly{-2, 0, 1}, 1);
    CHECK(weil_height_leq(r2, qd(3, 2)));
    CHECK(!weil_height_leq(r2, qd(7, 5)));
    CHECK(weil_height_leq(alg_from_rational(Q(2)), Q(2)));
    CHECK(!weil_height_leq(alg_from_rational(Q(2)), qd(199, 100)));
    CHECK(poly_weil_height_leq(IntPoly{-1, -1, 1}, Q(2)));
    CHECK(!poly_weil_height_leq(IntPoly{-1, -1, 1}, Q(1)));
}

TEST_CASE("height of powers") {
    CertifiedValue h = height_of_power(alg_from_rational(qd(3, 2)), 2);
    CHECK(h.value.contains_q(Q(9)));
    h = height_of_power(alg_from_rational(Q(2)), -3);
    CHECK(h.value.contains_q(Q(8)));
    h = height_of_power(alg_from_rational(Q(5)), 0);
    CHECK(h.value.contains_q(Q(1)));

    AlgebraicNumber r2 = alg_from_min_poly(IntPoly{-2, 0, 1}, 1);
    h = height_of_power(r2, 2);
    CHECK(h.value.contains_q(Q(2)));
    CHECK(min_poly_of_power(r2, 2) == IntPoly{-2, 1});
    CHECK(min_poly_of_power(r2, -2) == IntPoly{-1, 2});

    AlgebraicNumber phi = alg_from_min_poly(IntPoly{-1, -1, 1}, 1);
    CHECK(min_poly_of_power(phi, 2) == IntPoly{1, -3, 1});

    AlgebraicNumber plastic = alg_from_min_poly(IntPoly{-1, -1, 0, 1}, 0);
    IntPoly cube = min_poly_of_power(plastic, 3);
    CertifiedValue direct = height_of_power(plastic, 3, 80);
    CertifiedValue via_poly = weil_height(alg_from_min_poly(cube, 0), 80);
    CHECK(overlaps(direct.value, via_poly.value));
}

TEST_CASE("scaling by the leading coefficient") {
    AlgebraicNumber a = scale_by_leading(alg_from_rational(qd(3, 2)));
    CHECK(a == alg_from_rational(Q(3)));
    AlgebraicNumber r2 = alg_from_min_poly(IntPoly{-2, 0, 1}, 1);
    CHECK(scale_by_leading(r2) == r2);
    AlgebraicNumber b = alg_from_min_poly(IntPoly{-2, -1, 2}, 1);
    AlgebraicNumber sb = scale_by_leading(b);
    CHECK(sb.minpoly == IntPoly{-4, -1, 1});
    CHECK(sb.root_index == 1);
}

TEST_CASE("roots of unity and torsion orders") {
    CHECK(torsion_order(alg_from_rational(Q(1))) == 1);
    CHECK(torsion_order(alg_from_rational(Q(-1))) == 2);
    CHECK(torsion_order(alg_from_min_poly(IntPoly{1, 1, 1}, 0)) == 3);
    CHECK(torsion_order(alg_from_min_poly(IntPoly{1, 0, 1}, 1)) == 4);
    CHECK(torsion_order(alg_from_min_poly(IntPoly{1, -1, 1}, 0)) == 6);
    CHECK(torsion_order(alg_from_min_poly(IntPoly{1, 0, 0, 0, 1}, 0)) == 8);
    CHECK(!is_root_of_unity(alg_from_min_poly(IntPoly{-2, 0, 1}, 1)));
    CHECK(!torsion_order(alg_from_rational(Q(2))).has_value());

    for (long k : {1L, 2L, 3L, 4L, 6L, 8L, 12L}) {
        IntPoly mp = IntPoly::cyclotomic(static_cast<unsigned>(k));
        AlgebraicNumber z = alg_from_min_poly(mp, 0);
        REQUIRE(torsion_order(z) == k);
        CHECK(weil_height(z).value.contains_q(Q(1)));
        CHECK(poly_divides(mp, x_pow_k_minus_1(k)));
    }
}

TEST_CASE("degeneracy") {
    CHECK(is_degenerate(IntPoly{-2, 0, 1}));
    CHECK(is_degenerate(IntPoly{1, 0, 1}));
    CHECK(!is_degenerate(IntPoly{-1, -1, 1}));
    CHECK(!is_degenerate(IntPoly{-6, 1, 1}));
    CHECK(is_degenerate(IntPoly{-1, 0, 0, 1}));
    CHECK(is_degenerate(IntPoly{-2, 0, 0, 1}));
    CHECK(!is_degenerate(IntPoly{-1, -1, 0, 1}));
    CHECK(is_degenerate(IntPoly{0, -1, 0, 1}));
    CHECK(!is_degenerate(IntPoly{1, -2, 1}));
    CHECK(!is_degenerate(IntPoly{0, 0, 1}));
    CHECK(is_degenerate(IntPoly{1, 0, 0, 0, 1}));
    CHECK(is_degenerate(IntPoly{1, 0, -10, 0, 1}));
    CHECK_THROWS_AS(is_degenerate(IntPoly{1, 1}), InvalidInputError);
}

TEST_CASE("degeneracy agrees with the power-sum path") {
    for (long b = -4; b <= 4; ++b) {
        for (long c = -4; c <= 4; ++c) {
            IntPoly f{c, b, 1};
            CHECK(is_degenerate(f) == degenerate_by_power_sums(f));
        }
    }
    for (long b = -2; b <= 2; ++b) {
        for (long c = -2; c <= 2; ++c) {
            for (long d = -2; d <= 2; ++d) {
                IntPoly f{d, c, b, 1};
                CHECK(is_degenerate(f) == degenerate_by_power_sums(f));
            }
        }
    }
}

TEST_CASE("galois group fullness") {
    CHECK(galois_is_full(IntPoly{-2, 0, 0, 1}));
    CHECK(!galois_is_full(IntPoly{-1, -3, 0, 1}));
    CHECK(galois_is_full(IntPoly{-2, 0, 1}));
    CHECK(galois_is_full(IntPoly{-3, 1}));
    CHECK(galois_is_full(IntPoly{-1, -1, 0, 0, 1}));
    CHECK(!galois_is_full(IntPoly{1, 0, 0, 0, 1}));
    CHECK(!galois_is_full(IntPoly{1, 1, 1, 1, 1}));
    CHECK(!galois_is_full(IntPoly{1, 0, -10, 0, 1}));
    CHECK(galois_is_full(IntPoly{-4, 0, 0, 2}));
    CHECK_THROWS_AS(galois_is_full(IntPoly{-1, -1, 0, 0, 0, 1}), UnsupportedError);
    CHECK_THROWS_AS(galois_is_full(IntPoly{7}), InvalidInputError);
}

TEST_CASE("power and product polynomials") {
    CHECK(squarefree_part(power_poly(IntPoly{-2, 0, 1}, 2)) == IntPoly{-2, 1});
    CHECK(squarefree_part(power_poly(IntPoly{1, 0, 1}, 2)) == IntPoly{1, 1});
    CHECK(squarefree_part(product_poly(IntPoly{-2, 0, 1}, IntPoly{-3, 0, 1})) ==
          IntPoly{-6, 0, 1});
    CHECK(squarefree_part(product_poly(IntPoly{-2, 1}, IntPoly{-3, 1})) == IntPoly{-6, 1});
}

TEST_CASE("height inequalities on a fixed sample") {
    std::vector<IntPoly> sample{{-2, 0, 1},    {-1, -1, 1}, {1, 1, 1},  {-3, 7},
                                {-2, -1, 2},   {1, 1, 0, 1}, {-2, 0, 0, 1},
                                {-1, -1, 0, 1}, {2, 0, 4, 0, 1}};
    for (const IntPoly& f : sample) {
        int d = f.degree();
        Z nh = naive_height(f);
        // H0 <= (2H)^d, i.e. M >= H0 / 2^d
        RInterval m = mahler_interval(f);
        Q lower{nh, Z(1) << d};
        lower.canonicalize();
        CHECK(!m.certainly_lt_q(lower));
        // H(a * alpha) <= 2^(d-1) H(alpha)^d
        RInterval hs = rootn(mahler_interval(f.monic_from_lc(), 192), static_cast<unsigned long>(d));
        RInterval bound = pow_si(RInterval::from_long(2, 192), d - 1) *
                          rootn(pow_si(mahler_interval(f, 192), d), static_cast<unsigned long>(d));
        CHECK(!hs.certainly_gt(bound));
    }
}

TEST_CASE("enclosure refinement") {
    AlgebraicNumber a = alg_from_min_poly(IntPoly{-1, -1, 0, 1}, 0, 64);
    CInterval before = a.enclosure;
    refine_enclosure(a, 512);
    CHECK(a.precision == 512);
    CHECK(overlaps(before, a.enclosure));
    CHECK(a.enclosure.re.width_log2() < before.re.width_log2());
}

}
