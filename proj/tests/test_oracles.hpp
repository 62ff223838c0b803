#pragma once

// Test-side reference implementations. Deliberately naive and structured
// differently from the library code they check: literal product expansion
// and exhaustive partition enumeration.

#include <cstdint>
#include <utility>
#include <vector>

namespace testref {

// prod_{n=1..N} (1 - q^n), expanded term by term over plain ints.
inline std::vector<long> euler_product(int N) {
    std::vector<long> c(static_cast<std::size_t>(N) + 1, 0);
    c[0] = 1;
    for (int n = 1; n <= N; ++n)
        for (int t = N; t >= n; --t) c[t] -= c[t - n];
    return c;
}

namespace detail {

inline long pd_rec(int rem, int maxp, int k,
                        std::vector<std::pair<int, int>>& parts) {
    if (rem == 0) {
        long designations = 1;
        for (const auto& [size, mult] : parts) designations *= mult;
        return designations;
    }
    long total = 0;
    for (int p = std::min(rem, maxp); p >= 1; --p) {
        if (k >= 2 && p % k == 0) continue;
        for (int m = 1; m * p <= rem; ++m) {
            parts.emplace_back(p, m);
            total += pd_rec(rem - m * p, p - 1, k, parts);
            parts.pop_back();
        }
    }
    return total;
}

inline long odd_mult_rec(int rem, int maxp) {
    if (rem == 0) return 1;
    long total = 0;
    for (int p = std::min(rem, maxp); p >= 1; --p)
        for (int m = 1; m * p <= rem; m += 2)
            total += odd_mult_rec(rem - m * p, p - 1);
    return total;
}

}  // namespace detail

// PD(n) (k = 0) or PD_k(n) by exhaustive enumeration; fine for n <= ~30.
inline long pd_enumerated(int n, int k = 0) {
    std::vector<std::pair<int, int>> parts;
    return detail::pd_rec(n, n, k, parts);
}

// Partitions of n with every multiplicity odd, by exhaustive enumeration.
inline long odd_multiplicity_enumerated(int n) {
    return detail::odd_mult_rec(n, n);
}

}  // namespace testref
