#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "mdep/arith.hpp"
#include "mdep/interval.hpp"

namespace mdep {

// Integer polynomial with ascending coefficients and no trailing zeros.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Z> c);
    IntPoly(std::initializer_list<long> c);

    static IntPoly one();
    static IntPoly xpow(unsigned k);
    static IntPoly cyclotomic(unsigned k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Z>& coeffs() const { return c_; }
    const Z& operator[](size_t i) const { return c_[i]; }
    const Z& lc() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator<(const IntPoly& o) const { return c_ < o.c_; }

    Z content() const;
    IntPoly primitive_pos() const;  // content removed, leading coefficient > 0
    IntPoly derivative() const;
    IntPoly negate_arg() const;           // f(-x)
    IntPoly reverse() const;              // x^deg * f(1/x)
    IntPoly scale_arg(const Z& a) const;  // f(a*x)
    IntPoly monic_from_lc() const;        // lc^(d-1) * f(x/lc), monic

    Z eval_z(const Z& x) const;
    Q eval_q(const Q& x) const;
    Z eval_homog(const Z& p, const Z& q) const;  // q^deg * f(p/q)
    int sign_at(const Q& x) const;
    RInterval eval_i(const RInterval& x) const;
    CInterval eval_ci(const CInterval& x) const;

    std::string str() const;

  private:
    std::vector<Z> c_;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const Z& s, const IntPoly& a);
IntPoly mul_xk(const IntPoly& a, unsigned k);

std::optional<IntPoly> try_divexact(const IntPoly& a, const IntPoly& b);
IntPoly divexact(const IntPoly& a, const IntPoly& b);
bool poly_divides(const IntPoly& b, const IntPoly& a);

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
IntPoly prem(const IntPoly& a, const IntPoly& b);

Z resultant(const IntPoly& a, const IntPoly& b);
Z discriminant(const IntPoly& f);
IntPoly gcd_poly(const IntPoly& a, const IntPoly& b);  // primitive, lc > 0
IntPoly squarefree_part(const IntPoly& f);

struct SturmChain {
    std::vector<IntPoly> seq;
};

SturmChain sturm_chain(const IntPoly& f);  // f squarefree, nonzero
// Number of real roots in the half-open interval (a, b].
int sturm_count(const SturmChain& ch, const Q& a, const Q& b);
int count_real_roots_in(const IntPoly& f, const Q& a, const Q& b);  // roots in [a, b]
int count_real_roots(const IntPoly& f);
Q cauchy_root_bound(const IntPoly& f);  // all complex roots have |z| < bound

// Lagrange interpolation through (xs[i], ys[i]); throws if the result is not
// an integer polynomial.
IntPoly interpolate_integer(const std::vector<Z>& xs, const std::vector<Z>& ys);

}  // namespace mdep
