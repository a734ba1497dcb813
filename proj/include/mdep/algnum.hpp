#pragma once

#include <optional>
#include <utility>

#include "mdep/arith.hpp"
#include "mdep/interval.hpp"
#include "mdep/poly.hpp"
#include "mdep/roots.hpp"

namespace mdep {

// An algebraic number: one specific root of an irreducible primitive integer
// polynomial with positive leading coefficient. root_index points into the
// canonical root order of minpoly (reals ascending, then non-real roots by
// exact (re, im) lex order).
struct AlgebraicNumber {
    IntPoly minpoly;
    int root_index = 0;
    CInterval enclosure;
    mpfr_prec_t precision = 0;

    int degree() const { return minpoly.degree(); }
    bool is_rational() const { return degree() == 1; }
    bool is_zero() const { return degree() == 1 && minpoly[0] == 0; }
    Q rational_value() const;  // degree 1 only
};

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);
bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b);

AlgebraicNumber alg_from_rational(const Q& v, mpfr_prec_t prec = 128);

// Trusts that f is irreducible; normalizes to primitive with positive lc.
AlgebraicNumber alg_from_min_poly(const IntPoly& f, int root_index, mpfr_prec_t prec = 128);

// Accepts any nonzero f: takes the squarefree part, extracts the minimal
// polynomial of its root_index-th canonical root, and remaps the index.
AlgebraicNumber alg_from_poly_root(const IntPoly& f, int root_index, mpfr_prec_t prec = 128);

// Re-isolates the root at the given precision and tightens the enclosure.
void refine_enclosure(AlgebraicNumber& a, mpfr_prec_t prec);

// Irreducibility over Q. Degree <= 3 by rational-root reasoning, higher
// degrees by certified factor search over conjugate-closed root subsets.
bool is_irreducible(const IntPoly& f);

// Minimal polynomial of the root_index-th canonical root of the squarefree
// part of f, plus that root's index among the factor's own canonical roots.
std::pair<IntPoly, int> minimal_polynomial_of_root(const IntPoly& f, int root_index);

// Largest absolute value among the coefficients.
Z naive_height(const IntPoly& f);
Z naive_height(const AlgebraicNumber& a);

// Weil height H(a) = M(minpoly)^(1/deg) as an enclosure of width at most
// 2^-precision; exact for rational a. Rejects a = 0.
CertifiedValue weil_height(const AlgebraicNumber& a, mpfr_prec_t precision = 64);

// Exact decision H(a) <= bound.
bool weil_height_leq(const AlgebraicNumber& a, const Q& bound);
bool poly_weil_height_leq(const IntPoly& irreducible_f, const Q& bound);

// H(a^k) = H(a)^|k| as an enclosure of width at most 2^-precision.
CertifiedValue height_of_power(const AlgebraicNumber& a, long k, mpfr_prec_t precision = 64);

// a * lc(minpoly(a)): an algebraic integer (monic minimal polynomial).
AlgebraicNumber scale_by_leading(const AlgebraicNumber& a);

// The order k when f is the k-th cyclotomic polynomial, else nothing.
std::optional<long> cyclotomic_order(const IntPoly& f);
bool is_root_of_unity(const AlgebraicNumber& a);
std::optional<long> torsion_order(const AlgebraicNumber& a);

// Whether f has two distinct roots whose quotient is a root of unity.
bool is_degenerate(const IntPoly& f);

// Whether the Galois group of the splitting field of irreducible f (degree
// 1..4) is the full symmetric group.
bool galois_is_full(const IntPoly& f);

// Roots of the result: k-th powers of the roots of f (k >= 1), with
// multiplicity, scaled by a power of lc(f).
IntPoly power_poly(const IntPoly& f, unsigned long k);

// Roots of the result: pairwise products of roots of a and b; b(0) != 0.
IntPoly product_poly(const IntPoly& a, const IntPoly& b);

// Minimal polynomial of a^k for any integer k (a != 0 when k <= 0).
IntPoly min_poly_of_power(const AlgebraicNumber& a, long k);

}  // namespace mdep
