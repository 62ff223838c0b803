#pragma once

#include <cmath>
#include <cstdint>
#include <gmpxx.h>
#include <string>

namespace qpd {

/// Exact arbitrary-precision integer / rational used throughout the exact
/// coefficient lane and the combinatorial counters.
using Integer = mpz_class;
using Rational = mpq_class;

/// floor(sqrt(n)) for n >= 0.
inline std::uint64_t isqrt(std::uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/// True iff n is a perfect square; if so *root receives the square root.
inline bool is_perfect_square(std::uint64_t n, std::uint64_t* root = nullptr) {
    const std::uint64_t r = isqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace qpd
