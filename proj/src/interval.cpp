#include "mdep/interval.hpp"

#include <cmath>
#include <sstream>

namespace mdep {

RInterval::RInterval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RInterval::RInterval(const RInterval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RInterval::RInterval(RInterval&& o) noexcept : prec_(o.prec_) {
    lo_[0] = o.lo_[0];
    hi_[0] = o.hi_[0];
    mpfr_init2(o.lo_, 2);
    mpfr_init2(o.hi_, 2);
}

RInterval& RInterval::operator=(const RInterval& o) {
    if (this == &o) return *this;
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

RInterval& RInterval::operator=(RInterval&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

RInterval::~RInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

RInterval RInterval::from_long(long v, mpfr_prec_t prec) {
    RInterval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

RInterval RInterval::from_z(const mpz_class& v, mpfr_prec_t prec) {
    RInterval r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

RInterval RInterval::from_q(const mpq_class& v, mpfr_prec_t prec) {
    RInterval r(prec);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
}

RInterval RInterval::pi(mpfr_prec_t prec) {
    RInterval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

bool RInterval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool RInterval::contains_one() const {
    return mpfr_cmp_ui(lo_, 1) <= 0 && mpfr_cmp_ui(hi_, 1) >= 0;
}

bool RInterval::contains_q(const mpq_class& v) const {
    return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

int RInterval::certain_sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
}

bool RInterval::certainly_lt(const RInterval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
bool RInterval::certainly_le(const RInterval& o) const { return mpfr_cmp(hi_, o.lo_) <= 0; }
bool RInterval::certainly_gt(const RInterval& o) const { return mpfr_cmp(lo_, o.hi_) > 0; }
bool RInterval::certainly_lt_q(const mpq_class& v) const { return mpfr_cmp_q(hi_, v.get_mpq_t()) < 0; }
bool RInterval::certainly_gt_q(const mpq_class& v) const { return mpfr_cmp_q(lo_, v.get_mpq_t()) > 0; }

double RInterval::mid_d() const {
    return (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)) / 2.0;
}

double RInterval::rad_d() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double r = mpfr_get_d(w, MPFR_RNDU) / 2.0;
    mpfr_clear(w);
    return r;
}

double RInterval::width_log2() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double r;
    if (mpfr_zero_p(w)) {
        r = -INFINITY;
    } else {
        mpfr_log2(w, w, MPFR_RNDU);
        r = mpfr_get_d(w, MPFR_RNDU);
    }
    mpfr_clear(w);
    return r;
}

std::string RInterval::str(int digits) const {
    char* s1 = nullptr;
    char* s2 = nullptr;
    mpfr_asprintf(&s1, "%.*Rg", digits, lo_);
    mpfr_asprintf(&s2, "%.*Rg", digits, hi_);
    std::string out = std::string("[") + s1 + ", " + s2 + "]";
    mpfr_free_str(s1);
    mpfr_free_str(s2);
    return out;
}

RInterval operator+(const RInterval& a, const RInterval& b) {
    RInterval r(std::max(a.prec_, b.prec_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

RInterval operator-(const RInterval& a, const RInterval& b) {
    RInterval r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

RInterval operator*(const RInterval& a, const RInterval& b) {
    RInterval r(std::max(a.prec_, b.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    // lo: min of the four directed-down products
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
    if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
    if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
    if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
    // hi: max of the four directed-up products
    mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

RInterval operator/(const RInterval& a, const RInterval& b) {
    if (b.contains_zero()) throw UndecidedError("interval division by interval containing 0");
    RInterval r(std::max(a.prec_, b.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_div(t, a.lo_, b.hi_, MPFR_RNDD);
    if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
    mpfr_div(t, a.hi_, b.lo_, MPFR_RNDD);
    if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
    mpfr_div(t, a.hi_, b.hi_, MPFR_RNDD);
    if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
    mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_div(t, a.lo_, b.hi_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_div(t, a.hi_, b.lo_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_div(t, a.hi_, b.hi_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

RInterval neg(const RInterval& a) {
    RInterval r(a.prec_);
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
}

RInterval iabs(const RInterval& a) {
    RInterval r(a.prec_);
    if (mpfr_sgn(a.lo_) >= 0) return a;
    if (mpfr_sgn(a.hi_) <= 0) return neg(a);
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    mpfr_t t;
    mpfr_init2(t, a.prec_);
    mpfr_set(t, a.hi_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

RInterval isqrt_i(const RInterval& a) {
    if (mpfr_sgn(a.lo_) < 0) throw UndecidedError("sqrt of interval with negative lower bound");
    RInterval r(a.prec_);
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

RInterval ilog_i(const RInterval& a) {
    if (mpfr_sgn(a.lo_) <= 0) throw UndecidedError("log of interval touching 0");
    RInterval r(a.prec_);
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

RInterval iexp_i(const RInterval& a) {
    RInterval r(a.prec_);
    mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

RInterval pow_si(const RInterval& a, long k) {
    RInterval one = RInterval::from_long(1, a.prec());
    if (k == 0) return one;
    bool invert = k < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    RInterval acc = one, base = a;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    if (invert) return one / acc;
    return acc;
}

RInterval rootn(const RInterval& a, unsigned long k) {
    if (mpfr_sgn(a.lo_) < 0) throw UndecidedError("rootn of negative interval");
    RInterval r(a.prec_);
    mpfr_rootn_ui(r.lo_, a.lo_, k, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, a.hi_, k, MPFR_RNDU);
    return r;
}

RInterval max1(const RInterval& a) {
    RInterval r = a;
    if (mpfr_cmp_ui(r.lo_, 1) < 0) mpfr_set_ui(r.lo_, 1, MPFR_RNDD);
    if (mpfr_cmp_ui(r.hi_, 1) < 0) mpfr_set_ui(r.hi_, 1, MPFR_RNDU);
    return r;
}

RInterval imin(const RInterval& a, const RInterval& b) {
    RInterval r(std::max(a.prec_, b.prec_));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

RInterval imax(const RInterval& a, const RInterval& b) {
    RInterval r(std::max(a.prec_, b.prec_));
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

RInterval hull(const RInterval& a, const RInterval& b) {
    RInterval r(std::max(a.prec_, b.prec_));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

RInterval digamma_i(const RInterval& a) {
    if (mpfr_sgn(a.lo_) <= 0) throw UndecidedError("digamma on nonpositive interval");
    // digamma is increasing on (0, inf)
    RInterval r(a.prec_);
    mpfr_digamma(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_digamma(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

CInterval operator+(const CInterval& a, const CInterval& b) { return {a.re + b.re, a.im + b.im}; }
CInterval operator-(const CInterval& a, const CInterval& b) { return {a.re - b.re, a.im - b.im}; }

CInterval operator*(const CInterval& a, const CInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

CInterval conj(const CInterval& a) { return {a.re, neg(a.im)}; }

bool overlaps(const RInterval& a, const RInterval& b) {
    return mpfr_cmp(a.hi(), b.lo()) >= 0 && mpfr_cmp(b.hi(), a.lo()) >= 0;
}

bool overlaps(const CInterval& a, const CInterval& b) {
    return overlaps(a.re, b.re) && overlaps(a.im, b.im);
}

RInterval abs2_c(const CInterval& a) {
    RInterval r = iabs(a.re), i = iabs(a.im);
    return r * r + i * i;
}

RInterval abs_c(const CInterval& a) { return isqrt_i(abs2_c(a)); }

CInterval operator/(const CInterval& a, const CInterval& b) {
    RInterval d = abs2_c(b);
    CInterval num = a * conj(b);
    return {num.re / d, num.im / d};
}

CInterval pow_si_c(const CInterval& a, long k) {
    CInterval one(a.re.prec());
    one.re = RInterval::from_long(1, a.re.prec());
    one.im = RInterval::from_long(0, a.re.prec());
    if (k == 0) return one;
    bool invert = k < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    CInterval acc = one, base = a;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    if (invert) return one / acc;
    return acc;
}

}  // namespace mdep
