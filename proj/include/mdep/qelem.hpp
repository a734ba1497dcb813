#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdep/algnum.hpp"

namespace mdep {

// Element a + b*sqrt(m) of Q(sqrt m), m squarefree, m != 0, 1.
struct QuadElem {
    long m = 0;
    Q a, b;

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }
    bool is_one() const { return b == 0 && a == 1; }
    bool is_pm_one() const { return b == 0 && (a == 1 || a == -1); }
};

QuadElem quad_make(long m, const Q& a, const Q& b);
QuadElem quad_from_rational(long m, const Q& q);
// x + y*omega, omega = (1+sqrt m)/2 when m = 1 mod 4, sqrt m otherwise.
QuadElem quad_from_lattice(long m, const Z& x, const Z& y);

bool operator==(const QuadElem& x, const QuadElem& y);
bool operator!=(const QuadElem& x, const QuadElem& y);
bool operator<(const QuadElem& x, const QuadElem& y);
QuadElem operator-(const QuadElem& x);
QuadElem operator+(const QuadElem& x, const QuadElem& y);
QuadElem operator-(const QuadElem& x, const QuadElem& y);
QuadElem operator*(const QuadElem& x, const QuadElem& y);
QuadElem operator/(const QuadElem& x, const QuadElem& y);

QuadElem quad_conj(const QuadElem& x);
Q quad_norm(const QuadElem& x);
Q quad_trace(const QuadElem& x);
QuadElem quad_inv(const QuadElem& x);
QuadElem quad_pow(const QuadElem& x, long k);
std::string quad_str(const QuadElem& x);

// Lies in the ring of integers Z[omega].
bool quad_is_integral(const QuadElem& x);

// Primitive integer minimal polynomial (degree 2 iff b != 0).
IntPoly quad_min_poly(const QuadElem& x);
// Enclosure of the embedding sqrt(m) -> positive real / positive imaginary.
CInterval quad_enclosure(const QuadElem& x, mpfr_prec_t prec);
AlgebraicNumber quad_to_alg(const QuadElem& x, mpfr_prec_t prec = 128);

enum class SplitType { split, inert, ramified };
SplitType prime_split_type(long m, const Z& p);

// Valuation of x at a prime ideal above p. For split p, which = 0 selects
// the ideal where sqrt(m) is congruent to the canonical Hensel branch r,
// which = 1 its conjugate; for inert and ramified p, which is ignored.
long quad_val(const QuadElem& x, const Z& p, int which);

// Ascending rational primes covering every ideal where x can have nonzero
// valuation (a superset: listed primes may still carry valuation zero).
std::vector<Z> quad_support(const QuadElem& x);

// Fundamental unit of Q(sqrt m) as an element; m > 1 squarefree.
QuadElem quad_fundamental_unit(long m);
// For a unit gamma of a real field: the t with gamma = ±eps^t.
long unit_exponent(const QuadElem& gamma);

// Order of x in the torsion subgroup, if x is a root of unity.
std::optional<long> quad_torsion_order(const QuadElem& x);

}  // namespace mdep
