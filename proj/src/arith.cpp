#include "mdep/arith.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace mdep {

std::vector<uint64_t> primes_upto(uint64_t n) {
    std::vector<uint64_t> ps;
    if (n < 2) return ps;
    std::vector<bool> sieve(n + 1, true);
    for (uint64_t i = 2; i <= n; ++i) {
        if (!sieve[i]) continue;
        ps.push_back(i);
        for (uint64_t j = i * i; j <= n; j += i) sieve[j] = false;
    }
    return ps;
}

std::vector<uint32_t> spf_table(uint32_t n) {
    std::vector<uint32_t> spf(n + 1, 0);
    for (uint32_t i = 2; i <= n; ++i) {
        if (spf[i]) continue;
        for (uint64_t j = i; j <= n; j += i)
            if (!spf[j]) spf[j] = i;
    }
    return spf;
}

bool is_prime(const Z& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((__uint128_t)a * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { comp = false; break; }
        }
        if (comp) return false;
    }
    return true;
}

uint64_t pollard_rho_u64(uint64_t n) {
    if ((n & 1) == 0) return 2;
    uint64_t c = 1;
    while (true) {
        uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod_u64(x, x, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
        ++c;
    }
}

void factor_rec_u64(uint64_t n, std::map<uint64_t, int>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) { out[n]++; return; }
    uint64_t d = pollard_rho_u64(n);
    factor_rec_u64(d, out);
    factor_rec_u64(n / d, out);
}

}  // namespace

std::map<uint64_t, int> factor_u64(uint64_t n) {
    std::map<uint64_t, int> out;
    if (n == 0) throw InvalidInputError("factor of 0");
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0) { out[p]++; n /= p; }
    }
    if (n > 1) factor_rec_u64(n, out);
    return out;
}

std::map<Z, int> factor(const Z& n) {
    if (n <= 0) throw InvalidInputError("factor requires n >= 1");
    std::map<Z, int> out;
    if (n.fits_ulong_p()) {
        for (auto& [p, e] : factor_u64(n.get_ui())) out[Z(static_cast<unsigned long>(p))] = e;
        return out;
    }
    Z rem = n;
    for (uint64_t p : primes_upto(100000)) {
        Z zp(static_cast<unsigned long>(p));
        while (rem % zp == 0) { out[zp]++; rem /= zp; }
        if (rem == 1) return out;
    }
    // recursive rho on mpz
    std::vector<Z> stack{rem};
    while (!stack.empty()) {
        Z m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_prime(m)) { out[m]++; continue; }
        if (m.fits_ulong_p()) {
            for (auto& [p, e] : factor_u64(m.get_ui())) out[Z(static_cast<unsigned long>(p))] += e;
            continue;
        }
        Z c = 1;
        Z d = m;
        while (d == m) {
            Z x = 2, y = 2;
            d = 1;
            while (d == 1) {
                x = (x * x + c) % m;
                y = (y * y + c) % m;
                y = (y * y + c) % m;
                Z diff = abs(x - y);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
            }
            c += 1;
        }
        stack.push_back(d);
        stack.push_back(m / d);
    }
    return out;
}

Z iroot(const Z& n, unsigned k) {
    Z r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

std::pair<Z, unsigned> perfect_power_base(const Z& n) {
    if (n < 2) throw InvalidInputError("perfect_power_base requires n >= 2");
    unsigned maxk = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned k = maxk; k >= 2; --k) {
        Z r = iroot(n, k);
        Z p;
        mpz_pow_ui(p.get_mpz_t(), r.get_mpz_t(), k);
        if (p == n) return {r, k};
    }
    return {n, 1};
}

unsigned ilog(const Z& b, const Z& x) {
    if (b < 2 || x < 1) throw InvalidInputError("ilog domain");
    unsigned e = 0;
    Z p = b;
    while (p <= x) { ++e; p *= b; }
    return e;
}

uint64_t euler_phi(uint64_t k) {
    uint64_t r = k;
    for (auto& [p, e] : factor_u64(k)) r = r / p * (p - 1);
    return r;
}

std::vector<uint64_t> inverse_totient(uint64_t d) {
    std::vector<uint64_t> ks;
    if (d == 0) return ks;
    for (uint64_t k = 1; k <= 2 * d * d; ++k)
        if (euler_phi(k) == d) ks.push_back(k);
    return ks;
}

std::pair<Z, Z> pell_minimal(const Z& m, int& norm_out) {
    // continued fraction of sqrt(m); convergent at the end of the first
    // period solves x^2 - m y^2 = (-1)^period
    Z a0 = sqrt(m);
    if (a0 * a0 == m) throw InvalidInputError("pell_minimal: m is a square");
    Z P = 0, Qd = 1, a = a0;
    Z pprev = 1, p = a0, qprev = 0, q = 1;
    int len = 0;
    while (true) {
        P = a * Qd - P;
        Qd = (m - P * P) / Qd;
        a = (a0 + P) / Qd;
        ++len;
        if (Qd == 1) break;
        Z pn = a * p + pprev;
        Z qn = a * q + qprev;
        pprev = p; p = pn;
        qprev = q; q = qn;
    }
    norm_out = (len % 2 == 0) ? 1 : -1;
    return {p, q};
}

FundamentalUnit fundamental_unit(const Z& m) {
    if (m < 2) throw InvalidInputError("fundamental_unit requires m >= 2");
    int norm = 1;
    auto [x0, y0] = pell_minimal(m, norm);
    FundamentalUnit u{x0, y0, false, norm};
    if (m % 4 == 1) {
        // the maximal order Z[(1+sqrt m)/2] may contain a smaller unit
        // (a + b sqrt m)/2 with a^2 - m b^2 = ±4; smallest b > 0 wins
        for (Z b = 1; b <= 2 * y0; ++b) {
            Z t = m * b * b;
            for (int s : {-4, 4}) {
                Z a2 = t + s;
                if (a2 <= 0) continue;
                Z a = sqrt(a2);
                if (a * a == a2) {
                    if (a % 2 == 0 && b % 2 == 0) {
                        u = FundamentalUnit{a / 2, b / 2, false, s > 0 ? 1 : -1};
                    } else {
                        u = FundamentalUnit{a, b, true, s > 0 ? 1 : -1};
                    }
                    return u;
                }
            }
        }
    }
    return u;
}

int kronecker(const Z& d, const Z& n) {
    return mpz_kronecker(d.get_mpz_t(), n.get_mpz_t());
}

int sign_p_plus_q_sqrt(const Q& p, const Q& q, const Z& m) {
    if (m < 0) throw InvalidInputError("sign_p_plus_q_sqrt needs m >= 0");
    int sp = sgn(p), sq = sgn(q);
    if (m == 0 || sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // opposite signs: compare p^2 against q^2 m
    Q lhs = p * p, rhs = q * q * Q(m);
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? sp : sq;
}

std::vector<Z> divisors(const Z& n) {
    if (n == 0) throw InvalidInputError("divisors of 0");
    std::vector<Z> out{Z(1)};
    for (const auto& [p, e] : factor(Z(abs(n)))) {
        size_t base = out.size();
        Z pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Z vec_gcd(const std::vector<Z>& v) {
    Z g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

size_t matrix_rank(std::vector<std::vector<Z>> rows) {
    if (rows.empty()) return 0;
    size_t m = rows.size(), n = rows[0].size();
    size_t rank = 0;
    Z prev = 1;
    for (size_t col = 0; col < n && rank < m; ++col) {
        size_t piv = rank;
        while (piv < m && rows[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(rows[rank], rows[piv]);
        for (size_t i = rank + 1; i < m; ++i) {
            for (size_t j = col + 1; j < n; ++j)
                rows[i][j] = (rows[rank][col] * rows[i][j] - rows[i][col] * rows[rank][j]) / prev;
            rows[i][col] = 0;
        }
        prev = rows[rank][col];
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Z>> integer_kernel(const std::vector<std::vector<Z>>& rows_in, size_t ncols) {
    // kernel of the linear map x -> M x where the input rows are the
    // VECTORS whose dependence we test: solve sum_i x_i rows[i] = 0.
    // Work on the transpose: columns indexed by the input vectors.
    size_t nvec = rows_in.size();
    std::vector<std::vector<Q>> mat(ncols, std::vector<Q>(nvec));
    for (size_t i = 0; i < nvec; ++i)
        for (size_t j = 0; j < ncols; ++j) mat[j][i] = Q(rows_in[i][j]);

    std::vector<long> pivot_of_col(nvec, -1);
    size_t r = 0;
    for (size_t c = 0; c < nvec && r < ncols; ++c) {
        size_t piv = r;
        while (piv < ncols && mat[piv][c] == 0) ++piv;
        if (piv == ncols) continue;
        std::swap(mat[r], mat[piv]);
        Q inv = mat[r][c];
        for (size_t j = 0; j < nvec; ++j) mat[r][j] /= inv;
        for (size_t i = 0; i < ncols; ++i) {
            if (i == r || mat[i][c] == 0) continue;
            Q f = mat[i][c];
            for (size_t j = 0; j < nvec; ++j) mat[i][j] -= f * mat[r][j];
        }
        pivot_of_col[c] = static_cast<long>(r);
        ++r;
    }
    std::vector<std::vector<Z>> basis;
    for (size_t c = 0; c < nvec; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<Q> v(nvec, Q(0));
        v[c] = 1;
        for (size_t c2 = 0; c2 < nvec; ++c2) {
            if (pivot_of_col[c2] >= 0) v[c2] = -mat[static_cast<size_t>(pivot_of_col[c2])][c];
        }
        Z den = 1;
        for (auto& x : v) {
            x.canonicalize();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
        }
        std::vector<Z> iv(nvec);
        for (size_t j = 0; j < nvec; ++j) iv[j] = Z(v[j] * den);
        Z g = vec_gcd(iv);
        if (g > 1)
            for (auto& x : iv) x /= g;
        basis.push_back(std::move(iv));
    }
    return basis;
}

std::optional<Q> rational_in_interval(const Q& lo, const Q& hi, const Z& qmax) {
    if (lo > hi) return std::nullopt;
    // Stern-Brocot style: the smallest-denominator rational in [lo,hi].
    // Handle nonpositive lo by shifting into positive territory.
    Z shift = 0;
    Q l = lo, h = hi;
    if (l <= 0) {
        shift = 1 - Z(l.get_num() / l.get_den());
        l += Q(shift);
        h += Q(shift);
        if (l <= 0) { l += 1; h += 1; shift += 1; }
    }
    // walk: find smallest-denominator fraction in [l, h]
    std::function<std::optional<Q>(Q, Q)> rec = [&](Q a, Q b) -> std::optional<Q> {
        // smallest q fraction in [a,b], a,b > 0
        Z fl = Z(a.get_num() / a.get_den());
        if (Q(fl) >= a && Q(fl) <= b) return Q(fl);
        if (Q(fl + 1) <= b) return Q(fl + 1);
        // now fl < a <= b < fl+1: recurse on the fractional parts inverted
        Q a2 = 1 / (b - Q(fl));
        Q b2 = 1 / (a - Q(fl));
        auto inner = rec(a2, b2);
        if (!inner) return std::nullopt;
        Q r = Q(fl) + 1 / *inner;
        if (r.get_den() > qmax) return std::nullopt;
        return r;
    };
    auto got = rec(l, h);
    if (!got) return std::nullopt;
    Q r = *got - Q(shift);
    r.canonicalize();
    if (r.get_den() > qmax) return std::nullopt;
    return r;
}

}  // namespace mdep
