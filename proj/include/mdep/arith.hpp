#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mdep/errors.hpp"

namespace mdep {

using Z = mpz_class;
using Q = mpq_class;

// Primes up to n inclusive.
std::vector<uint64_t> primes_upto(uint64_t n);

// Smallest-prime-factor table for 0..n.
std::vector<uint32_t> spf_table(uint32_t n);

bool is_prime(const Z& n);

// Prime factorization of n >= 1 (trial division + Pollard rho).
std::map<Z, int> factor(const Z& n);
std::map<uint64_t, int> factor_u64(uint64_t n);

// Exact floor k-th root.
Z iroot(const Z& n, unsigned k);

// n >= 2 written as base^exp with maximal exp (base not a perfect power).
std::pair<Z, unsigned> perfect_power_base(const Z& n);

// Largest e with b^e <= x, for b >= 2, x >= 1.
unsigned ilog(const Z& b, const Z& x);

uint64_t euler_phi(uint64_t k);

// All k >= 1 with phi(k) = d (search bound k <= 2 d^2).
std::vector<uint64_t> inverse_totient(uint64_t d);

// Fundamental solution of the Pell-like unit search: smallest unit > 1 of the
// ring of integers of Q(sqrt m), m > 1 squarefree, returned as (x, y, half)
// meaning (x + y sqrt m)/(half ? 2 : 1).
struct FundamentalUnit {
    Z x, y;
    bool half;
    int norm;  // +1 or -1
};
FundamentalUnit fundamental_unit(const Z& m);

// Continued-fraction convergent solution of x^2 - m y^2 = ±1 (m nonsquare).
std::pair<Z, Z> pell_minimal(const Z& m, int& norm_out);

// Kronecker symbol (D|n) via GMP.
int kronecker(const Z& d, const Z& n);

// Exact sign of p + q * sqrt(m) for m >= 0.
int sign_p_plus_q_sqrt(const Q& p, const Q& q, const Z& m);

// Positive divisors of |n| in ascending order; n != 0.
std::vector<Z> divisors(const Z& n);

// gcd of a vector of integers (nonnegative result).
Z vec_gcd(const std::vector<Z>& v);

// Dependence kernel of a list of integer vectors: primitive integer basis of
// { k : sum_i k_i rows[i] = 0 }. Empty when the vectors are linearly
// independent over Q.
std::vector<std::vector<Z>> integer_kernel(const std::vector<std::vector<Z>>& rows, size_t ncols);

// Rank of an integer matrix over Q (Bareiss fraction-free elimination).
size_t matrix_rank(std::vector<std::vector<Z>> rows);

// Best rational p/q inside the closed interval [lo, hi] with q <= qmax, if
// any exists (Stern-Brocot walk). Returns the one with smallest q.
std::optional<Q> rational_in_interval(const Q& lo, const Q& hi, const Z& qmax);

}  // namespace mdep
