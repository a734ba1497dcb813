#include "doctest.h"

#include "mdep/poly.hpp"

using namespace mdep;

TEST_SUITE("poly") {

TEST_CASE("construction and normalization") {
    IntPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);

    IntPoly p{1, 2, 0, 0};
    CHECK(p.degree() == 1);

    IntPoly q{-2, 0, 1};  // x^2 - 2
    CHECK(q.degree() == 2);
    CHECK(q.lc() == 1);
    CHECK(q.is_monic());
}

TEST_CASE("arithmetic") {
    IntPoly a{1, 1};       // x + 1
    IntPoly b{-1, 1};      // x - 1
    CHECK(a * b == IntPoly{-1, 0, 1});
    CHECK(a + b == IntPoly{0, 2});
    CHECK(a - b == IntPoly{2});
    CHECK(Z(3) * a == IntPoly{3, 3});
    CHECK(mul_xk(a, 2) == IntPoly{0, 0, 1, 1});
}

TEST_CASE("division") {
    IntPoly f{-1, 0, 0, 0, 0, 0, 1};  // x^6 - 1
    IntPoly g{-1, 0, 1};              // x^2 - 1
    auto q = divexact(f, g);
    CHECK(q == IntPoly{1, 0, 1, 0, 1});  // x^4 + x^2 + 1
    CHECK(poly_divides(g, f));
    CHECK_FALSE(poly_divides(IntPoly{1, 1}, IntPoly{1, 0, 1}));
    CHECK_FALSE(try_divexact(IntPoly{1, 0, 1}, IntPoly{2, 2}).has_value());
    // non-monic exact division
    CHECK(divexact(IntPoly{2, 4}, IntPoly{1, 2}) == IntPoly{2});
}

TEST_CASE("evaluation") {
    IntPoly f{-2, 0, 1};  // x^2 - 2
    CHECK(f.eval_z(Z(3)) == 7);
    CHECK(f.eval_q(Q(1, 2)) == Q(-7, 4));
    CHECK(f.eval_homog(Z(1), Z(2)) == -7);  // 2^2 f(1/2)
    CHECK(f.sign_at(Q(1)) == -1);
    CHECK(f.sign_at(Q(2)) == 1);
    CHECK(IntPoly{-4, 0, 1}.sign_at(Q(2)) == 0);

    auto xi = RInterval::from_q(Q(3, 2), 128);
    CHECK(f.eval_i(xi).contains_q(Q(1, 4)));

    CInterval ci(128);
    ci.re = RInterval::from_long(0, 128);
    ci.im = RInterval::from_long(1, 128);
    auto v = f.eval_ci(ci);  // i^2 - 2 = -3
    CHECK(v.re.contains_q(Q(-3)));
    CHECK(v.im.contains_zero());
}

TEST_CASE("structure maps") {
    IntPoly f{2, -3, 1};  // x^2 - 3x + 2 = (x-1)(x-2)
    CHECK(f.negate_arg() == IntPoly{2, 3, 1});
    CHECK(f.reverse() == IntPoly{1, -3, 2});
    CHECK(f.scale_arg(Z(2)) == IntPoly{2, -6, 4});
    CHECK(f.derivative() == IntPoly{-3, 2});
    CHECK(IntPoly{6, 9, 3}.primitive_pos() == IntPoly{2, 3, 1});
    CHECK(IntPoly{-6, 0, -3}.primitive_pos() == IntPoly{2, 0, 1});
    CHECK(IntPoly{6, 9, 3}.content() == 3);
    // 2x^2 - x - 2 -> x^2 - x - 4
    CHECK(IntPoly{-2, -1, 2}.monic_from_lc() == IntPoly{-4, -1, 1});
}

TEST_CASE("resultant") {
    // res(x^2 - 2, x^2 - 3) = (2-3)^2... direct: prod (a_i - b_j) = 1
    CHECK(resultant(IntPoly{-2, 0, 1}, IntPoly{-3, 0, 1}) == 1);
    // res(x-2, x-3) = 2 - 3 = -1
    CHECK(resultant(IntPoly{-2, 1}, IntPoly{-3, 1}) == -1);
    // res(f, g) with common root is 0
    CHECK(resultant(IntPoly{-1, 0, 1}, IntPoly{-1, 1}) == 0);
    // res(2x-1, 3x-1) : 2*3 * (1/2 - 1/3) = 1
    CHECK(resultant(IntPoly{-1, 2}, IntPoly{-1, 3}) == 1);
    // bigger known value: res(x^3-1, x^2+1) = 2
    CHECK(resultant(IntPoly{-1, 0, 0, 1}, IntPoly{1, 0, 1}) == 2);
    // constant cases
    CHECK(resultant(IntPoly{5}, IntPoly{1, 0, 0, 1}) == 125);
    CHECK(resultant(IntPoly{1, 0, 1}, IntPoly{-3}) == 9);
}

TEST_CASE("discriminant") {
    CHECK(discriminant(IntPoly{-2, 0, 1}) == 8);            // x^2 - 2: b^2-4ac = 8
    CHECK(discriminant(IntPoly{1, 1, 1}) == -3);            // x^2 + x + 1
    CHECK(discriminant(IntPoly{-1, -1, 0, 1}) == -23);      // x^3 - x - 1
    CHECK(discriminant(IntPoly{2, 3, 0, 5}) == -3240);      // 5x^3 + 3x + 2: -4ac^3 - 27a^2d^2
    CHECK(discriminant(IntPoly{-1, 0, 0, 0, 1}) == -256);   // x^4 - 1
    CHECK(discriminant(IntPoly{2, -3, 1}) == 1);            // (x-1)(x-2)
    CHECK(discriminant(IntPoly{1, -2, 1}) == 0);            // (x-1)^2
}

TEST_CASE("gcd and squarefree") {
    IntPoly f = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{-2, 1};  // (x-1)^2 (x-2)
    CHECK(gcd_poly(f, f.derivative()) == IntPoly{-1, 1});
    CHECK(squarefree_part(f) == IntPoly{2, -3, 1});
    CHECK(gcd_poly(IntPoly{-1, 0, 1}, IntPoly{1, 1}) == IntPoly{1, 1});
    CHECK(gcd_poly(IntPoly{-2, 0, 2}, IntPoly{-3, 3}) == IntPoly{-1, 1});
    CHECK(gcd_poly(IntPoly{1, 0, 1}, IntPoly{1, 1}) == IntPoly{1});
    CHECK(squarefree_part(IntPoly{0, 0, 0, 2}) == IntPoly{0, 1});
}

TEST_CASE("cyclotomic") {
    CHECK(IntPoly::cyclotomic(1) == IntPoly{-1, 1});
    CHECK(IntPoly::cyclotomic(2) == IntPoly{1, 1});
    CHECK(IntPoly::cyclotomic(3) == IntPoly{1, 1, 1});
    CHECK(IntPoly::cyclotomic(4) == IntPoly{1, 0, 1});
    CHECK(IntPoly::cyclotomic(6) == IntPoly{1, -1, 1});
    CHECK(IntPoly::cyclotomic(8) == IntPoly{1, 0, 0, 0, 1});
    CHECK(IntPoly::cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
    IntPoly c105 = IntPoly::cyclotomic(105);
    CHECK(c105.degree() == 48);
    CHECK(c105[7] == -2);  // first cyclotomic with a coefficient outside {-1,0,1}
}

TEST_CASE("sturm") {
    IntPoly f{-2, 0, 1};  // roots ±sqrt 2
    CHECK(count_real_roots(f) == 2);
    CHECK(count_real_roots_in(f, Q(0), Q(2)) == 1);
    CHECK(count_real_roots_in(f, Q(-2), Q(2)) == 2);
    CHECK(count_real_roots_in(f, Q(2), Q(3)) == 0);

    IntPoly g{1, 0, 1};  // x^2 + 1
    CHECK(count_real_roots(g) == 0);

    IntPoly h{-1, -1, 0, 1};  // x^3 - x - 1: one real root ~1.3247
    CHECK(count_real_roots(h) == 1);
    CHECK(count_real_roots_in(h, Q(1), Q(2)) == 1);

    IntPoly w = IntPoly{-1, 1} * IntPoly{-2, 1} * IntPoly{-3, 1};
    CHECK(count_real_roots(w) == 3);
    CHECK(count_real_roots_in(w, Q(1), Q(3)) == 3);    // closed endpoints count
    CHECK(count_real_roots_in(w, Q(1), Q(1)) == 1);
    CHECK(count_real_roots_in(w, Q(3, 2), Q(5, 2)) == 1);

    // non-squarefree input is handled through the squarefree part
    IntPoly sq = IntPoly{-1, 1} * IntPoly{-1, 1};
    CHECK(count_real_roots(sq) == 1);

    // Wilkinson-style stress: roots 1..10
    IntPoly big{1};
    for (long r = 1; r <= 10; ++r) big = big * IntPoly{-r, 1};
    CHECK(count_real_roots(big) == 10);
    CHECK(count_real_roots_in(big, Q(5, 2), Q(15, 2)) == 5);
}

TEST_CASE("interpolation") {
    // f(x) = x^2 - 2 through three points
    auto f = interpolate_integer({Z(0), Z(1), Z(2)}, {Z(-2), Z(-1), Z(2)});
    CHECK(f == IntPoly{-2, 0, 1});
    // constant
    CHECK(interpolate_integer({Z(5)}, {Z(7)}) == IntPoly{7});
    // degree 3 with negative nodes: f = 2x^3 - x + 4
    IntPoly g{4, -1, 0, 2};
    std::vector<Z> xs{Z(-2), Z(-1), Z(1), Z(3)};
    std::vector<Z> ys;
    for (const Z& x : xs) ys.push_back(g.eval_z(x));
    CHECK(interpolate_integer(xs, ys) == g);
}

TEST_CASE("cauchy bound") {
    IntPoly f{-10, 0, 1};
    Q b = cauchy_root_bound(f);
    CHECK(b > 3);  // sqrt 10 < bound
    IntPoly big{1};
    for (long r = 1; r <= 6; ++r) big = big * IntPoly{-r, 1};
    CHECK(cauchy_root_bound(big) > 6);
}

TEST_CASE("str") {
    CHECK(IntPoly{-2, 0, 1}.str() == "x^2 - 2");
    CHECK(IntPoly{}.str() == "0");
    CHECK(IntPoly{1, -3, 2}.str() == "2*x^2 - 3*x + 1");
    CHECK(IntPoly{0, -1}.str() == "-x");
}

}  // TEST_SUITE
