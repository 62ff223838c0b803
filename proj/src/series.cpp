#include "qpd/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpd {

namespace {

constexpr std::uint64_t kModulusLimit = std::uint64_t(1) << 32;

void check_modulus(std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("series: modulus must be >= 2");
    if (m >= kModulusLimit)
        throw std::invalid_argument("series: modulus must be < 2^32");
}

void check_precision(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("series: precision must be >= 0");
}

void check_same_lane(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.modular() != b.modular())
        throw std::invalid_argument("series: mixed exact/modular operands");
    if (a.modular() && a.modulus() != b.modulus())
        throw std::invalid_argument("series: operands have different moduli");
}

std::uint64_t mod_reduce(const Integer& v, std::uint64_t m) {
    // mpz_fdiv_ui floors, so the remainder is canonical even for negatives.
    return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m));
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    using I = __int128;
    I old_r = a % m, r = m, old_s = 1, s = 0;
    while (r != 0) {
        const I q = old_r / r;
        I t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1)
        throw std::domain_error("series: constant term is not a unit modulo m");
    old_s %= static_cast<I>(m);
    if (old_s < 0) old_s += m;
    return static_cast<std::uint64_t>(old_s);
}

// Indices of nonzero coefficients with exponent <= limit.
template <class Vec>
std::vector<std::int64_t> nonzero_indices(const Vec& c, std::int64_t limit) {
    std::vector<std::int64_t> idx;
    const auto end = std::min<std::int64_t>(limit, static_cast<std::int64_t>(c.size()) - 1);
    for (std::int64_t i = 0; i <= end; ++i)
        if (c[static_cast<std::size_t>(i)] != 0) idx.push_back(i);
    return idx;
}

bool sparse_worthwhile(std::size_t nnz, std::int64_t n) {
    return static_cast<std::uint64_t>(nnz) * nnz <= 16 * static_cast<std::uint64_t>(n + 1);
}

std::vector<Integer> mul_exact(const std::vector<Integer>& a,
                               const std::vector<Integer>& b, std::int64_t n) {
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1, Integer(0));
    const auto na = nonzero_indices(a, n);
    const auto nb = nonzero_indices(b, n);
    // Sparse path: one operand with few terms (pentagonal/theta shapes).
    const bool a_sparse = na.size() <= nb.size();
    const auto& sp = a_sparse ? na : nb;
    if (sparse_worthwhile(sp.size(), n)) {
        const auto& s = a_sparse ? a : b;
        const auto& d = a_sparse ? b : a;
        const auto dlen = static_cast<std::int64_t>(d.size());
        for (std::int64_t e : sp) {
            const Integer& v = s[static_cast<std::size_t>(e)];
            const std::int64_t jmax = std::min<std::int64_t>(n - e, dlen - 1);
            for (std::int64_t j = 0; j <= jmax; ++j)
                mpz_addmul(c[static_cast<std::size_t>(e + j)].get_mpz_t(),
                           v.get_mpz_t(), d[static_cast<std::size_t>(j)].get_mpz_t());
        }
        return c;
    }
    for (std::int64_t i = 0; i <= n && i < static_cast<std::int64_t>(a.size()); ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        const std::int64_t jmax =
            std::min<std::int64_t>(n - i, static_cast<std::int64_t>(b.size()) - 1);
        for (std::int64_t j = 0; j <= jmax; ++j)
            mpz_addmul(c[static_cast<std::size_t>(i + j)].get_mpz_t(),
                       a[static_cast<std::size_t>(i)].get_mpz_t(),
                       b[static_cast<std::size_t>(j)].get_mpz_t());
    }
    return c;
}

std::vector<std::uint64_t> mul_mod(const std::vector<std::uint64_t>& a,
                                   const std::vector<std::uint64_t>& b,
                                   std::int64_t n, std::uint64_t m) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
    const auto na = nonzero_indices(a, n);
    const auto nb = nonzero_indices(b, n);
    const bool a_sparse = na.size() <= nb.size();
    const auto& sp = a_sparse ? na : nb;
    if (sparse_worthwhile(sp.size(), n)) {
        const auto& s = a_sparse ? a : b;
        const auto& d = a_sparse ? b : a;
        const auto dlen = static_cast<std::int64_t>(d.size());
        for (std::int64_t e : sp) {
            const std::uint64_t v = s[static_cast<std::size_t>(e)];
            const std::int64_t jmax = std::min<std::int64_t>(n - e, dlen - 1);
            // v, d[j] < m < 2^32, so v*d[j] + c[..] cannot overflow.
            for (std::int64_t j = 0; j <= jmax; ++j)
                c[static_cast<std::size_t>(e + j)] =
                    (c[static_cast<std::size_t>(e + j)] + v * d[static_cast<std::size_t>(j)]) % m;
        }
        return c;
    }
    for (std::int64_t t = 0; t <= n; ++t) {
        unsigned __int128 acc = 0;
        const std::int64_t ilo =
            std::max<std::int64_t>(0, t - (static_cast<std::int64_t>(b.size()) - 1));
        const std::int64_t ihi =
            std::min<std::int64_t>(t, static_cast<std::int64_t>(a.size()) - 1);
        for (std::int64_t i = ilo; i <= ihi; ++i)
            acc += static_cast<unsigned __int128>(a[static_cast<std::size_t>(i)]) *
                   b[static_cast<std::size_t>(t - i)];
        c[static_cast<std::size_t>(t)] = static_cast<std::uint64_t>(acc % m);
    }
    return c;
}

std::vector<Integer> invert_exact(const std::vector<Integer>& a, std::int64_t n) {
    const Integer& a0 = a[0];
    if (a0 != 1 && a0 != -1)
        throw std::domain_error("series: constant term is not a unit (+1/-1)");
    std::vector<Integer> b(static_cast<std::size_t>(n) + 1, Integer(0));
    b[0] = a0;  // 1/1 = 1, 1/-1 = -1
    const auto nz = nonzero_indices(a, n);  // includes index 0; skip it below
    Integer acc;
    for (std::int64_t t = 1; t <= n; ++t) {
        acc = 0;
        for (std::int64_t j : nz) {
            if (j == 0) continue;
            if (j > t) break;
            mpz_addmul(acc.get_mpz_t(), a[static_cast<std::size_t>(j)].get_mpz_t(),
                       b[static_cast<std::size_t>(t - j)].get_mpz_t());
        }
        b[static_cast<std::size_t>(t)] = (a0 == 1) ? Integer(-acc) : acc;
    }
    return b;
}

std::vector<std::uint64_t> invert_mod(const std::vector<std::uint64_t>& a,
                                      std::int64_t n, std::uint64_t m) {
    const std::uint64_t inv0 = mod_inverse(a[0], m);
    std::vector<std::uint64_t> b(static_cast<std::size_t>(n) + 1, 0);
    b[0] = inv0;
    const auto nz = nonzero_indices(a, n);
    for (std::int64_t t = 1; t <= n; ++t) {
        unsigned __int128 acc = 0;
        for (std::int64_t j : nz) {
            if (j == 0) continue;
            if (j > t) break;
            acc += static_cast<unsigned __int128>(a[static_cast<std::size_t>(j)]) *
                   b[static_cast<std::size_t>(t - j)];
        }
        const std::uint64_t s = static_cast<std::uint64_t>(acc % m);
        b[static_cast<std::size_t>(t)] = (inv0 * ((m - s) % m)) % m;
    }
    return b;
}

}  // namespace

TruncatedSeries TruncatedSeries::zero(std::int64_t precision, OptMod modulus) {
    check_precision(precision);
    TruncatedSeries s;
    s.precision_ = precision;
    if (modulus) {
        check_modulus(*modulus);
        s.modulus_ = *modulus;
        s.mc_.assign(static_cast<std::size_t>(precision) + 1, 0);
    } else {
        s.zc_.assign(static_cast<std::size_t>(precision) + 1, Integer(0));
    }
    return s;
}

TruncatedSeries TruncatedSeries::constant(const Integer& c, std::int64_t precision,
                                          OptMod modulus) {
    TruncatedSeries s = zero(precision, modulus);
    if (s.modular())
        s.mc_[0] = mod_reduce(c, s.modulus_);
    else
        s.zc_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Integer& c, std::int64_t j,
                                          std::int64_t precision, OptMod modulus) {
    if (j < 0) throw std::invalid_argument("series: monomial exponent must be >= 0");
    TruncatedSeries s = zero(precision, modulus);
    if (j <= precision) {
        if (s.modular())
            s.mc_[static_cast<std::size_t>(j)] = mod_reduce(c, s.modulus_);
        else
            s.zc_[static_cast<std::size_t>(j)] = c;
    }
    return s;
}

const Integer& TruncatedSeries::exact_coeff(std::int64_t n) const {
    if (modular()) throw std::invalid_argument("series: exact_coeff on modular lane");
    if (n < 0 || n > precision_) throw std::out_of_range("series: coefficient index");
    return zc_[static_cast<std::size_t>(n)];
}

std::uint64_t TruncatedSeries::residue(std::int64_t n) const {
    if (!modular()) throw std::invalid_argument("series: residue on exact lane");
    if (n < 0 || n > precision_) throw std::out_of_range("series: coefficient index");
    return mc_[static_cast<std::size_t>(n)];
}

std::string TruncatedSeries::coeff_str(std::int64_t n) const {
    return modular() ? std::to_string(residue(n)) : exact_coeff(n).get_str();
}

bool TruncatedSeries::coeff_is_zero(std::int64_t n) const {
    if (n < 0 || n > precision_) throw std::out_of_range("series: coefficient index");
    return modular() ? mc_[static_cast<std::size_t>(n)] == 0
                     : zc_[static_cast<std::size_t>(n)] == 0;
}

std::size_t TruncatedSeries::nonzero_count() const {
    std::size_t k = 0;
    for (std::int64_t i = 0; i <= precision_; ++i)
        if (!coeff_is_zero(i)) ++k;
    return k;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return precision_ == o.precision_ && modulus_ == o.modulus_ && zc_ == o.zc_ &&
           mc_ == o.mc_;
}

std::optional<std::int64_t> TruncatedSeries::first_difference(
    const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_lane(a, b);
    const std::int64_t n = std::min(a.precision_, b.precision_);
    for (std::int64_t i = 0; i <= n; ++i) {
        if (a.modular()) {
            if (a.mc_[static_cast<std::size_t>(i)] != b.mc_[static_cast<std::size_t>(i)])
                return i;
        } else if (a.zc_[static_cast<std::size_t>(i)] != b.zc_[static_cast<std::size_t>(i)]) {
            return i;
        }
    }
    return std::nullopt;
}

TruncatedSeries make_series(const std::vector<Integer>& coeffs, std::int64_t precision,
                            OptMod modulus) {
    check_precision(precision);
    if (static_cast<std::int64_t>(coeffs.size()) != precision + 1)
        throw std::invalid_argument("series: coefficient list length must be precision+1");
    TruncatedSeries s = TruncatedSeries::zero(precision, modulus);
    if (s.modular()) {
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            s.mc_[i] = mod_reduce(coeffs[i], *modulus);
    } else {
        s.zc_ = coeffs;
    }
    return s;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_lane(a, b);
    const std::int64_t n = std::min(a.precision_, b.precision_);
    TruncatedSeries c = TruncatedSeries::zero(n, a.modulus());
    for (std::int64_t i = 0; i <= n; ++i) {
        const auto u = static_cast<std::size_t>(i);
        if (c.modular())
            c.mc_[u] = (a.mc_[u] + b.mc_[u]) % c.modulus_;
        else
            c.zc_[u] = a.zc_[u] + b.zc_[u];
    }
    return c;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_lane(a, b);
    const std::int64_t n = std::min(a.precision_, b.precision_);
    TruncatedSeries c = TruncatedSeries::zero(n, a.modulus());
    for (std::int64_t i = 0; i <= n; ++i) {
        const auto u = static_cast<std::size_t>(i);
        if (c.modular())
            c.mc_[u] = (a.mc_[u] + c.modulus_ - b.mc_[u]) % c.modulus_;
        else
            c.zc_[u] = a.zc_[u] - b.zc_[u];
    }
    return c;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_lane(a, b);
    const std::int64_t n = std::min(a.precision_, b.precision_);
    TruncatedSeries c = TruncatedSeries::zero(n, a.modulus());
    if (c.modular())
        c.mc_ = mul_mod(a.mc_, b.mc_, n, c.modulus_);
    else
        c.zc_ = mul_exact(a.zc_, b.zc_, n);
    return c;
}

TruncatedSeries arith(const TruncatedSeries& a, const TruncatedSeries& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return add(a, b);
        case ArithOp::Sub: return sub(a, b);
        case ArithOp::Mul: return mul(a, b);
    }
    throw std::invalid_argument("series: unknown arithmetic op");
}

TruncatedSeries invert(const TruncatedSeries& a) {
    TruncatedSeries b = TruncatedSeries::zero(a.precision(), a.modulus());
    if (b.modular())
        b.mc_ = invert_mod(a.mc_, a.precision(), b.modulus_);
    else
        b.zc_ = invert_exact(a.zc_, a.precision());
    return b;
}

TruncatedSeries power(const TruncatedSeries& a, std::int64_t e) {
    if (e < 0) return power(invert(a), -e);
    TruncatedSeries acc = TruncatedSeries::constant(1, a.precision(), a.modulus());
    TruncatedSeries base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return acc;
}

TruncatedSeries substitute_power(const TruncatedSeries& a, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("series: substitution power must be >= 1");
    TruncatedSeries c = TruncatedSeries::zero(a.precision(), a.modulus());
    for (std::int64_t j = 0; j * k <= a.precision(); ++j) {
        const auto src = static_cast<std::size_t>(j);
        const auto dst = static_cast<std::size_t>(j * k);
        if (c.modular())
            c.mc_[dst] = a.mc_[src];
        else
            c.zc_[dst] = a.zc_[src];
    }
    return c;
}

TruncatedSeries extract_progression(const TruncatedSeries& a, std::int64_t A,
                                    std::int64_t r) {
    if (A < 1 || r < 0 || r >= A)
        throw std::invalid_argument("series: extraction requires A >= 1 and 0 <= r < A");
    if (r > a.precision())
        throw std::invalid_argument(
            "series: insufficient precision to extract the requested progression");
    const std::int64_t n = (a.precision() - r) / A;
    TruncatedSeries c = TruncatedSeries::zero(n, a.modulus());
    for (std::int64_t i = 0; i <= n; ++i) {
        const auto src = static_cast<std::size_t>(A * i + r);
        const auto dst = static_cast<std::size_t>(i);
        if (c.modular())
            c.mc_[dst] = a.mc_[src];
        else
            c.zc_[dst] = a.zc_[src];
    }
    return c;
}

TruncatedSeries reduce_mod(const TruncatedSeries& a, std::uint64_t m) {
    check_modulus(m);
    TruncatedSeries c = TruncatedSeries::zero(a.precision(), m);
    if (a.modular()) {
        if (a.modulus_ % m != 0)
            throw std::invalid_argument(
                "series: reduction modulus must divide the current modulus");
        for (std::size_t i = 0; i < a.mc_.size(); ++i) c.mc_[i] = a.mc_[i] % m;
    } else {
        for (std::size_t i = 0; i < a.zc_.size(); ++i) c.mc_[i] = mod_reduce(a.zc_[i], m);
    }
    return c;
}

}  // namespace qpd
