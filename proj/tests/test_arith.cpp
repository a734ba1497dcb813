#include "doctest.h"

#include "mdep/arith.hpp"

using namespace mdep;

TEST_SUITE("arith") {

TEST_CASE("primes_upto") {
    auto p = primes_upto(30);
    CHECK(p == std::vector<uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_upto(1).empty());
    CHECK(primes_upto(2) == std::vector<uint64_t>{2});
}

TEST_CASE("spf_table") {
    auto t = spf_table(20);
    CHECK(t[2] == 2);
    CHECK(t[15] == 3);
    CHECK(t[17] == 17);
    CHECK(t[20] == 2);
}

TEST_CASE("is_prime") {
    CHECK(is_prime(Z(2)));
    CHECK(is_prime(Z(97)));
    CHECK_FALSE(is_prime(Z(1)));
    CHECK_FALSE(is_prime(Z(91)));
    CHECK(is_prime(Z("2147483647")));
    CHECK(is_prime(Z("1000000000000000003")));
    CHECK_FALSE(is_prime(Z("1000000000000000005")));
    // Carmichael number
    CHECK_FALSE(is_prime(Z(561)));
}

TEST_CASE("factor") {
    auto f = factor(Z(360));
    CHECK(f[Z(2)] == 3);
    CHECK(f[Z(3)] == 2);
    CHECK(f[Z(5)] == 1);
    CHECK(f.size() == 3);
    CHECK(factor(Z(1)).empty());
    auto g = factor(Z("600851475143"));
    CHECK(g.rbegin()->first == Z(6857));
    // product of two 10-digit primes
    Z p1("2147483647"), p2("2147483659");
    auto h = factor(p1 * p2);
    CHECK(h[p1] == 1);
    CHECK(h[p2] == 1);
}

TEST_CASE("factor_u64") {
    auto f = factor_u64(9007199254740991ULL);  // 2^53 - 1 = 6361 * 69431 * 20394401
    CHECK(f[6361] == 1);
    CHECK(f[69431] == 1);
    CHECK(f[20394401] == 1);
}

TEST_CASE("iroot") {
    CHECK(iroot(Z(27), 3) == 3);
    CHECK(iroot(Z(26), 3) == 2);
    CHECK(iroot(Z(1), 5) == 1);
    CHECK(iroot(Z(1000000), 2) == 1000);
}

TEST_CASE("perfect_power_base") {
    auto [b, e] = perfect_power_base(Z(64));
    CHECK(b == 2);
    CHECK(e == 6);
    auto [b2, e2] = perfect_power_base(Z(12));
    CHECK(b2 == 12);
    CHECK(e2 == 1);
    auto [b3, e3] = perfect_power_base(Z(36));
    CHECK(b3 == 6);
    CHECK(e3 == 2);
    auto [b4, e4] = perfect_power_base(Z(2));
    CHECK(b4 == 2);
    CHECK(e4 == 1);
}

TEST_CASE("ilog") {
    CHECK(ilog(Z(2), Z(1)) == 0);
    CHECK(ilog(Z(2), Z(2)) == 1);
    CHECK(ilog(Z(2), Z(1023)) == 9);
    CHECK(ilog(Z(2), Z(1024)) == 10);
    CHECK(ilog(Z(10), Z(999)) == 2);
    CHECK(ilog(Z(3), Z(81)) == 4);
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
}

TEST_CASE("inverse_totient") {
    auto v1 = inverse_totient(1);
    CHECK(v1 == std::vector<uint64_t>{1, 2});
    auto v2 = inverse_totient(2);
    CHECK(v2 == std::vector<uint64_t>{3, 4, 6});
    auto v4 = inverse_totient(4);
    CHECK(v4 == std::vector<uint64_t>{5, 8, 10, 12});
}

TEST_CASE("fundamental_unit") {
    auto u2 = fundamental_unit(Z(2));  // 1 + sqrt 2
    CHECK(u2.x == 1);
    CHECK(u2.y == 1);
    CHECK_FALSE(u2.half);
    CHECK(u2.norm == -1);

    auto u3 = fundamental_unit(Z(3));  // 2 + sqrt 3
    CHECK(u3.x == 2);
    CHECK(u3.y == 1);
    CHECK_FALSE(u3.half);
    CHECK(u3.norm == 1);

    auto u5 = fundamental_unit(Z(5));  // (1 + sqrt 5)/2
    CHECK(u5.x == 1);
    CHECK(u5.y == 1);
    CHECK(u5.half);
    CHECK(u5.norm == -1);

    auto u13 = fundamental_unit(Z(13));  // (3 + sqrt 13)/2
    CHECK(u13.x == 3);
    CHECK(u13.y == 1);
    CHECK(u13.half);
    CHECK(u13.norm == -1);

    auto u94 = fundamental_unit(Z(94));  // 2143295 + 221064 sqrt 94
    CHECK(u94.x == 2143295);
    CHECK(u94.y == 221064);
    CHECK_FALSE(u94.half);
    CHECK(u94.norm == 1);
}

TEST_CASE("pell_minimal") {
    int norm = 0;
    auto [x, y] = pell_minimal(Z(61), norm);
    // minimal x^2 - 61 y^2 = ±1 is 29718^2 - 61*3805^2 = -1
    CHECK(x == 29718);
    CHECK(y == 3805);
    CHECK(norm == -1);
}

TEST_CASE("kronecker") {
    CHECK(kronecker(Z(5), Z(3)) == -1);
    CHECK(kronecker(Z(8), Z(3)) == -1);
    CHECK(kronecker(Z(-4), Z(5)) == 1);
    CHECK(kronecker(Z(-4), Z(7)) == -1);
    CHECK(kronecker(Z(12), Z(6)) == 0);
}

TEST_CASE("vec_gcd") {
    CHECK(vec_gcd({Z(6), Z(10), Z(15)}) == 1);
    CHECK(vec_gcd({Z(4), Z(-8), Z(12)}) == 4);
    CHECK(vec_gcd({Z(0), Z(0)}) == 0);
}

TEST_CASE("integer_kernel") {
    // a single nonzero vector has no dependence
    CHECK(integer_kernel({{Z(1), Z(2), Z(3)}}, 3).empty());

    // independent pair
    CHECK(integer_kernel({{Z(1), Z(0)}, {Z(0), Z(1)}}, 2).empty());

    // exponent vectors of 2, 3, 6 over primes {2, 3}: relation 2 * 3 / 6 = 1
    auto k = integer_kernel({{Z(1), Z(0)}, {Z(0), Z(1)}, {Z(1), Z(1)}}, 2);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == k[0][1]);
    CHECK(k[0][2] == -k[0][0]);
    CHECK(abs(k[0][0]) == 1);

    // proportional vectors: k0 (2,4) + k1 (3,6) = 0 at (3, -2)
    auto k3 = integer_kernel({{Z(2), Z(4)}, {Z(3), Z(6)}}, 2);
    REQUIRE(k3.size() == 1);
    CHECK(2 * k3[0][0] + 3 * k3[0][1] == 0);
    CHECK(4 * k3[0][0] + 6 * k3[0][1] == 0);
    CHECK(vec_gcd(k3[0]) == 1);

    // the zero vector alone is dependent
    auto k4 = integer_kernel({{Z(0), Z(0)}, {Z(5), Z(7)}}, 2);
    REQUIRE(k4.size() == 1);
    CHECK(k4[0][1] == 0);
    CHECK(abs(k4[0][0]) == 1);

    // rank-2 kernel: vectors for 2, 3, 6, 36
    auto k5 = integer_kernel(
        {{Z(1), Z(0)}, {Z(0), Z(1)}, {Z(1), Z(1)}, {Z(2), Z(2)}}, 2);
    REQUIRE(k5.size() == 2);
    for (const auto& v : k5) {
        CHECK(v[0] + v[2] + 2 * v[3] == 0);
        CHECK(v[1] + v[2] + 2 * v[3] == 0);
        CHECK(vec_gcd(v) == 1);
    }
}

TEST_CASE("matrix_rank") {
    CHECK(matrix_rank({{Z(1), Z(2)}, {Z(2), Z(4)}}) == 1);
    CHECK(matrix_rank({{Z(1), Z(2)}, {Z(3), Z(4)}}) == 2);
    CHECK(matrix_rank({{Z(0), Z(0)}}) == 0);
    CHECK(matrix_rank({{Z(1), Z(2), Z(3)}, {Z(4), Z(5), Z(6)}, {Z(7), Z(8), Z(9)}}) == 2);
}

TEST_CASE("rational_in_interval") {
    auto r = rational_in_interval(Q(31, 100), Q(33, 100), Z(100));
    REQUIRE(r.has_value());
    CHECK(*r == Q(5, 16));

    auto r1 = rational_in_interval(Q(31, 100), Q(34, 100), Z(100));
    REQUIRE(r1.has_value());
    CHECK(*r1 == Q(1, 3));

    auto r2 = rational_in_interval(Q(1, 2), Q(1, 2), Z(10));
    REQUIRE(r2.has_value());
    CHECK(*r2 == Q(1, 2));

    // no denominator <= 2 inside (0.3, 0.45)
    auto r3 = rational_in_interval(Q(3, 10), Q(9, 20), Z(2));
    CHECK_FALSE(r3.has_value());

    // negative interval mirrors the positive one
    auto r4 = rational_in_interval(Q(-33, 100), Q(-31, 100), Z(100));
    REQUIRE(r4.has_value());
    CHECK(*r4 == Q(-5, 16));

    // interval straddling an integer picks the integer
    auto r5 = rational_in_interval(Q(19, 10), Q(21, 10), Z(50));
    REQUIRE(r5.has_value());
    CHECK(*r5 == Q(2));

    // near the golden ratio the walk lands on a Fibonacci-like fraction
    auto r6 = rational_in_interval(Q(161803, 100000), Q(161804, 100000), Z(1000));
    REQUIRE(r6.has_value());
    CHECK(*r6 == Q(610, 377));

    // digits of pi
    auto r7 = rational_in_interval(Q(3141, 1000), Q(3142, 1000), Z(1000));
    REQUIRE(r7.has_value());
    CHECK(*r7 == Q(245, 78));

    // a too-tight window with a small cap has no solution
    auto r8 = rational_in_interval(Q(1618033, 1000000), Q(1618034, 1000000), Z(500));
    CHECK_FALSE(r8.has_value());
}

}  // TEST_SUITE
