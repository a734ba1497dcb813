#pragma once

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

#include "mdep/errors.hpp"

namespace mdep {

// Closed real interval [lo, hi] with directed-rounding endpoints.
class RInterval {
  public:
    explicit RInterval(mpfr_prec_t prec = 128);
    RInterval(const RInterval& o);
    RInterval(RInterval&& o) noexcept;
    RInterval& operator=(const RInterval& o);
    RInterval& operator=(RInterval&& o) noexcept;
    ~RInterval();

    static RInterval from_long(long v, mpfr_prec_t prec);
    static RInterval from_z(const mpz_class& v, mpfr_prec_t prec);
    static RInterval from_q(const mpq_class& v, mpfr_prec_t prec);
    static RInterval pi(mpfr_prec_t prec);

    mpfr_prec_t prec() const { return prec_; }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    mpfr_ptr lo() { return lo_; }
    mpfr_ptr hi() { return hi_; }

    bool contains_zero() const;
    bool contains_one() const;
    bool contains_q(const mpq_class& v) const;
    int certain_sign() const;  // -1, 0 (undecided / contains 0), +1
    bool certainly_lt(const RInterval& o) const;   // hi < o.lo
    bool certainly_le(const RInterval& o) const;   // hi <= o.lo
    bool certainly_gt(const RInterval& o) const;
    bool certainly_lt_q(const mpq_class& v) const;
    bool certainly_gt_q(const mpq_class& v) const;

    double mid_d() const;
    double rad_d() const;
    double width_log2() const;  // log2 of width, -inf if exact
    std::string str(int digits = 20) const;

    friend RInterval operator+(const RInterval& a, const RInterval& b);
    friend RInterval operator-(const RInterval& a, const RInterval& b);
    friend RInterval operator*(const RInterval& a, const RInterval& b);
    friend RInterval operator/(const RInterval& a, const RInterval& b);
    friend RInterval neg(const RInterval& a);
    friend RInterval iabs(const RInterval& a);
    friend RInterval isqrt_i(const RInterval& a);
    friend RInterval ilog_i(const RInterval& a);   // requires lo > 0
    friend RInterval iexp_i(const RInterval& a);
    friend RInterval pow_si(const RInterval& a, long k);
    friend RInterval rootn(const RInterval& a, unsigned long k);  // a >= 0
    friend RInterval max1(const RInterval& a);     // max(1, a)
    friend RInterval imin(const RInterval& a, const RInterval& b);
    friend RInterval imax(const RInterval& a, const RInterval& b);
    friend RInterval hull(const RInterval& a, const RInterval& b);
    friend RInterval digamma_i(const RInterval& a);

  private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
};

// Rectangular complex interval.
struct CInterval {
    RInterval re, im;

    explicit CInterval(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    CInterval(RInterval r, RInterval i) : re(std::move(r)), im(std::move(i)) {}

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

bool overlaps(const RInterval& a, const RInterval& b);
bool overlaps(const CInterval& a, const CInterval& b);

CInterval operator+(const CInterval& a, const CInterval& b);
CInterval operator-(const CInterval& a, const CInterval& b);
CInterval operator*(const CInterval& a, const CInterval& b);
CInterval operator/(const CInterval& a, const CInterval& b);
CInterval conj(const CInterval& a);
RInterval abs_c(const CInterval& a);
RInterval abs2_c(const CInterval& a);
CInterval pow_si_c(const CInterval& a, long k);

// Certified value carried to reports: enclosure plus the precision it was
// computed at.
struct CertifiedValue {
    RInterval value;
    mpfr_prec_t precision;

    double mid() const { return value.mid_d(); }
    double rad() const { return value.rad_d(); }
};

}  // namespace mdep
