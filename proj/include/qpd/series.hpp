#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpd/integer.hpp"

namespace qpd {

/// Optional coefficient modulus; disengaged means exact integer arithmetic.
using OptMod = std::optional<std::uint64_t>;

/// A power series in q truncated at a fixed exponent: coefficients of
/// q^0 .. q^N are stored, everything beyond is unknown (not zero).
///
/// Coefficients live in one of two lanes:
///   - exact:   arbitrary-precision integers;
///   - modular: residues canonicalized into [0, m) for a modulus m,
///              2 <= m < 2^32 (m need not be prime).
///
/// Binary operations require both operands in the same lane (and, for the
/// modular lane, the same modulus) and truncate to the smaller precision.
/// Series are immutable after construction; all operations return new values.
class TruncatedSeries {
  public:
    /// Series of the given precision with all coefficients zero.
    static TruncatedSeries zero(std::int64_t precision, OptMod modulus = {});

    /// Constant series c + 0q + ... + 0q^N.
    static TruncatedSeries constant(const Integer& c, std::int64_t precision,
                                    OptMod modulus = {});

    /// Monomial c*q^j truncated at the given precision (identically zero when
    /// j exceeds it).
    static TruncatedSeries monomial(const Integer& c, std::int64_t j,
                                    std::int64_t precision, OptMod modulus = {});

    std::int64_t precision() const { return precision_; }
    bool modular() const { return modulus_ != 0; }
    std::optional<std::uint64_t> modulus() const {
        if (modulus_ == 0) return std::nullopt;
        return modulus_;
    }

    /// Coefficient of q^n, exact lane only.
    const Integer& exact_coeff(std::int64_t n) const;
    /// Coefficient of q^n in [0, m), modular lane only.
    std::uint64_t residue(std::int64_t n) const;
    /// Coefficient of q^n rendered in decimal, either lane.
    std::string coeff_str(std::int64_t n) const;
    bool coeff_is_zero(std::int64_t n) const;
    /// Number of nonzero stored coefficients.
    std::size_t nonzero_count() const;

    /// Structural equality: same lane, same modulus, same precision, same
    /// coefficients.
    bool operator==(const TruncatedSeries& o) const;
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    /// Smallest exponent at which two series (same lane/modulus) disagree,
    /// scanned up to the smaller precision; nullopt if they agree there.
    static std::optional<std::int64_t> first_difference(const TruncatedSeries& a,
                                                        const TruncatedSeries& b);

  private:
    TruncatedSeries() = default;

    std::int64_t precision_ = 0;
    std::uint64_t modulus_ = 0;  // 0 marks the exact lane
    std::vector<Integer> zc_;            // exact coefficients
    std::vector<std::uint64_t> mc_;      // modular coefficients, in [0, m)

    friend TruncatedSeries make_series(const std::vector<Integer>&, std::int64_t,
                                       OptMod);
    friend TruncatedSeries add(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries sub(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries mul(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries invert(const TruncatedSeries&);
    friend TruncatedSeries substitute_power(const TruncatedSeries&, std::int64_t);
    friend TruncatedSeries extract_progression(const TruncatedSeries&, std::int64_t,
                                               std::int64_t);
    friend TruncatedSeries reduce_mod(const TruncatedSeries&, std::uint64_t);
};

/// Builds a series from explicit coefficients. The list length must be
/// exactly precision+1; with a modulus, coefficients are reduced into [0, m).
TruncatedSeries make_series(const std::vector<Integer>& coeffs,
                            std::int64_t precision, OptMod modulus = {});

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

enum class ArithOp { Add, Sub, Mul };
TruncatedSeries arith(const TruncatedSeries& a, const TruncatedSeries& b, ArithOp op);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    return add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return sub(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return mul(a, b);
}

/// Multiplicative inverse; the constant term must be a unit (+-1 exactly, or
/// coprime to the modulus).
TruncatedSeries invert(const TruncatedSeries& a);

/// a^e; negative exponents invert first, e = 0 yields the constant 1.
TruncatedSeries power(const TruncatedSeries& a, std::int64_t e);

/// q -> q^k substitution, k >= 1. Result precision equals the input's;
/// input coefficients beyond floor(N/k) fall outside and are dropped.
TruncatedSeries substitute_power(const TruncatedSeries& a, std::int64_t k);

/// Picks the arithmetic progression of coefficients: result[n] = a[A n + r].
/// Requires 0 <= r < A and r <= precision; the result has precision
/// floor((N - r) / A).
TruncatedSeries extract_progression(const TruncatedSeries& a, std::int64_t A,
                                    std::int64_t r);

/// Reduces the exact lane mod m, or a modular series mod a divisor of its
/// modulus.
TruncatedSeries reduce_mod(const TruncatedSeries& a, std::uint64_t m);

}  // namespace qpd
