#include "mdep/poly.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "mdep/errors.hpp"

namespace mdep {

namespace {

void normalize(std::vector<Z>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Z det_bareiss(std::vector<std::vector<Z>> m) {
    size_t n = m.size();
    if (n == 0) return 1;
    Z prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Z v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

IntPoly::IntPoly(std::vector<Z> c) : c_(std::move(c)) { normalize(c_); }

IntPoly::IntPoly(std::initializer_list<long> c) {
    c_.reserve(c.size());
    for (long v : c) c_.emplace_back(v);
    normalize(c_);
}

IntPoly IntPoly::one() { return IntPoly{1}; }

IntPoly IntPoly::xpow(unsigned k) {
    std::vector<Z> c(k + 1, Z(0));
    c[k] = 1;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::cyclotomic(unsigned k) {
    static std::map<unsigned, IntPoly> cache;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    if (k == 0) throw InvalidInputError("cyclotomic index must be positive");
    std::vector<Z> c(k + 1, Z(0));
    c[0] = -1;
    c[k] = 1;
    IntPoly num(std::move(c));
    for (unsigned d = 1; d < k; ++d) {
        if (k % d == 0) num = divexact(num, cyclotomic(d));
    }
    cache.emplace(k, num);
    return num;
}

Z IntPoly::content() const {
    Z g = 0;
    for (const Z& a : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_pos() const {
    if (is_zero()) return {};
    Z g = content();
    if (lc() < 0) g = -g;
    std::vector<Z> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] / g;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
    if (degree() <= 0) return {};
    std::vector<Z> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = Z(static_cast<long>(i)) * c_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::negate_arg() const {
    std::vector<Z> c = c_;
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::reverse() const {
    std::vector<Z> c(c_.rbegin(), c_.rend());
    return IntPoly(std::move(c));
}

IntPoly IntPoly::scale_arg(const Z& a) const {
    std::vector<Z> c = c_;
    Z p = 1;
    for (size_t i = 1; i < c.size(); ++i) {
        p *= a;
        c[i] *= p;
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::monic_from_lc() const {
    if (is_zero()) throw InvalidInputError("monic_from_lc of zero polynomial");
    int d = degree();
    const Z& a = lc();
    std::vector<Z> c(c_.size());
    c[d] = 1;
    Z p = 1;
    for (int i = d - 1; i >= 0; --i) {
        c[i] = c_[i] * p;
        p *= a;
    }
    return IntPoly(std::move(c));
}

Z IntPoly::eval_z(const Z& x) const {
    Z r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Q IntPoly::eval_q(const Q& x) const {
    Q r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Z IntPoly::eval_homog(const Z& p, const Z& q) const {
    if (is_zero()) return 0;
    Z r = 0;
    Z pp = 1;
    std::vector<Z> qpow(c_.size());
    Z qp = 1;
    for (size_t i = 0; i < c_.size(); ++i) {
        qpow[c_.size() - 1 - i] = qp;
        qp *= q;
    }
    for (size_t i = 0; i < c_.size(); ++i) {
        r += c_[i] * pp * qpow[i];
        pp *= p;
    }
    return r;
}

int IntPoly::sign_at(const Q& x) const {
    if (is_zero()) return 0;
    Z v = eval_homog(Z(x.get_num()), Z(x.get_den()));
    return sgn(v);
}

RInterval IntPoly::eval_i(const RInterval& x) const {
    RInterval r = RInterval::from_long(0, x.prec());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + RInterval::from_z(*it, x.prec());
    return r;
}

CInterval IntPoly::eval_ci(const CInterval& x) const {
    mpfr_prec_t pr = x.re.prec();
    CInterval r(pr);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * x;
        r.re = r.re + RInterval::from_z(*it, pr);
    }
    return r;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Z& a = c_[i];
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Z m = abs(a);
        if (m != 1 || i == 0) os << m.get_str();
        if (i >= 1) {
            if (m != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Z> c(std::max(a.coeffs().size(), b.coeffs().size()), Z(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a[i];
    for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Z> c(std::max(a.coeffs().size(), b.coeffs().size()), Z(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a[i];
    for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] -= b[i];
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Z> c(a.coeffs().size() + b.coeffs().size() - 1, Z(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        for (size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a[i] * b[j];
    return IntPoly(std::move(c));
}

IntPoly operator*(const Z& s, const IntPoly& a) {
    std::vector<Z> c = a.coeffs();
    for (Z& v : c) v *= s;
    return IntPoly(std::move(c));
}

IntPoly mul_xk(const IntPoly& a, unsigned k) {
    if (a.is_zero()) return {};
    std::vector<Z> c(a.coeffs().size() + k, Z(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) c[i + k] = a[i];
    return IntPoly(std::move(c));
}

std::optional<IntPoly> try_divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw InvalidInputError("polynomial division by zero");
    if (a.is_zero()) return IntPoly{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Z> r = a.coeffs();
    std::vector<Z> q(a.degree() - b.degree() + 1, Z(0));
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
        Z& top = r[i + b.degree()];
        if (top == 0) continue;
        Z qi, rem;
        mpz_fdiv_qr(qi.get_mpz_t(), rem.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
        if (rem != 0) return std::nullopt;
        q[i] = qi;
        top = 0;
        for (int j = 0; j < b.degree(); ++j) r[i + j] -= qi * b[j];
    }
    for (const Z& v : r)
        if (v != 0) return std::nullopt;
    return IntPoly(std::move(q));
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
    auto q = try_divexact(a, b);
    if (!q) throw InvalidInputError("inexact polynomial division");
    return *q;
}

bool poly_divides(const IntPoly& b, const IntPoly& a) { return try_divexact(a, b).has_value(); }

IntPoly prem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw InvalidInputError("pseudo-remainder by zero");
    if (a.degree() < b.degree()) return a;
    const Z& bl = b.lc();
    IntPoly r = a;
    long e = a.degree() - b.degree() + 1;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        unsigned k = static_cast<unsigned>(r.degree() - b.degree());
        IntPoly t = r.lc() * mul_xk(b, k);
        r = bl * r - t;
        --e;
    }
    if (e > 0) {
        Z f;
        mpz_pow_ui(f.get_mpz_t(), bl.get_mpz_t(), static_cast<unsigned long>(e));
        r = f * r;
    }
    return r;
}

Z resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    int m = a.degree(), n = b.degree();
    if (m == 0) {
        Z r;
        mpz_pow_ui(r.get_mpz_t(), a.lc().get_mpz_t(), n);
        return r;
    }
    if (n == 0) {
        Z r;
        mpz_pow_ui(r.get_mpz_t(), b.lc().get_mpz_t(), m);
        return r;
    }
    size_t dim = static_cast<size_t>(m + n);
    std::vector<std::vector<Z>> s(dim, std::vector<Z>(dim, Z(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];
    return det_bareiss(std::move(s));
}

Z discriminant(const IntPoly& f) {
    int d = f.degree();
    if (d < 1) throw InvalidInputError("discriminant needs degree >= 1");
    if (d == 1) return 1;
    Z res = resultant(f, f.derivative());
    Z disc;
    mpz_divexact(disc.get_mpz_t(), res.get_mpz_t(), f.lc().get_mpz_t());
    int e = (d * (d - 1)) / 2;
    if (e & 1) disc = -disc;
    return disc;
}

IntPoly gcd_poly(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero() ? IntPoly{} : b.primitive_pos();
    if (b.is_zero()) return a.primitive_pos();
    IntPoly f = a.primitive_pos(), g = b.primitive_pos();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPoly r = prem(f, g);
        f = g;
        g = r.is_zero() ? IntPoly{} : r.primitive_pos();
    }
    return f.primitive_pos();
}

IntPoly squarefree_part(const IntPoly& f) {
    if (f.degree() < 1) return f.primitive_pos();
    IntPoly g = gcd_poly(f, f.derivative());
    return divexact(f.primitive_pos(), g).primitive_pos();
}

SturmChain sturm_chain(const IntPoly& f) {
    SturmChain ch;
    IntPoly f0 = f.primitive_pos();
    ch.seq.push_back(f0);
    if (f0.degree() < 1) return ch;
    ch.seq.push_back(f0.derivative().primitive_pos());
    while (ch.seq.back().degree() > 0) {
        const IntPoly& a = ch.seq[ch.seq.size() - 2];
        const IntPoly& b = ch.seq.back();
        IntPoly r = prem(a, b);
        if (r.is_zero()) break;
        long delta = a.degree() - b.degree() + 1;
        // prem = lc(b)^delta * rem(a,b) up to cleared denominators; the chain
        // needs a positive multiple of -rem(a,b)
        bool neg_scale = (b.lc() < 0) && (delta & 1);
        IntPoly next = neg_scale ? r : Z(-1) * r;
        Z g = next.content();
        std::vector<Z> c = next.coeffs();
        for (Z& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        ch.seq.push_back(IntPoly(std::move(c)));
    }
    return ch;
}

namespace {

int sign_variations(const SturmChain& ch, const Q& x) {
    int var = 0, prev = 0;
    for (const IntPoly& p : ch.seq) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace

int sturm_count(const SturmChain& ch, const Q& a, const Q& b) {
    if (a >= b) return 0;
    return sign_variations(ch, a) - sign_variations(ch, b);
}

int count_real_roots_in(const IntPoly& f, const Q& a, const Q& b) {
    IntPoly sf = squarefree_part(f);
    if (sf.degree() < 1) return 0;
    if (a > b) return 0;
    SturmChain ch = sturm_chain(sf);
    int n = (a == b) ? 0 : sturm_count(ch, a, b);
    if (sf.sign_at(a) == 0) ++n;
    return n;
}

int count_real_roots(const IntPoly& f) {
    IntPoly sf = squarefree_part(f);
    if (sf.degree() < 1) return 0;
    Q bound = cauchy_root_bound(sf);
    return count_real_roots_in(sf, -bound, bound);
}

Q cauchy_root_bound(const IntPoly& f) {
    if (f.degree() < 1) return 1;
    Z m = 0;
    for (int i = 0; i < f.degree(); ++i) {
        Z a = abs(f[i]);
        if (a > m) m = a;
    }
    Q b = Q(m) / Q(abs(f.lc()));
    return b + 2;
}

IntPoly interpolate_integer(const std::vector<Z>& xs, const std::vector<Z>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw InvalidInputError("interpolation needs matching nonempty point lists");
    size_t n = xs.size();
    std::vector<Q> dd(n);
    for (size_t i = 0; i < n; ++i) dd[i] = Q(ys[i]);
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n - 1; i >= k; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Q(xs[i] - xs[i - k]);
    // expand Newton form: sum dd[k] * prod_{j<k} (x - xs[j])
    std::vector<Q> poly(n, Q(0));
    std::vector<Z> basis(n, Z(0));
    basis[0] = 1;
    size_t blen = 1;
    for (size_t k = 0; k < n; ++k) {
        for (size_t i = 0; i < blen; ++i) poly[i] += dd[k] * Q(basis[i]);
        if (k + 1 < n) {
            basis[blen] = basis[blen - 1];
            for (size_t i = blen - 1; i >= 1; --i) basis[i] = basis[i - 1] - xs[k] * basis[i];
            basis[0] = -xs[k] * basis[0];
            ++blen;
        }
    }
    std::vector<Z> out(n);
    for (size_t i = 0; i < n; ++i) {
        poly[i].canonicalize();
        if (poly[i].get_den() != 1)
            throw Error("interpolation produced non-integer coefficients");
        out[i] = Z(poly[i].get_num());
    }
    return IntPoly(std::move(out));
}

}  // namespace mdep
