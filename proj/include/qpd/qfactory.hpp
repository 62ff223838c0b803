#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qpd/series.hpp"

namespace qpd {

/// One factor f_k^e of an eta-style quotient, where f_k = (q^k; q^k)_inf.
struct EtaFactor {
    std::int64_t k;
    std::int64_t e;
};
using EtaQuotientSpec = std::vector<EtaFactor>;

/// Theta-series description. The general kind is the two-variable sum
///   f(s1 q^x, s2 q^y) = sum_{n in Z} (s1 q^x)^{n(n+1)/2} (s2 q^y)^{n(n-1)/2}
/// with x, y >= 1 and signs s1, s2 in {+1, -1}. phi and psi are the classical
/// specializations phi(q) = f(q, q) and psi(q) = f(q, q^3).
struct ThetaSpec {
    std::int64_t x = 1;
    std::int64_t y = 1;
    int s1 = 1;
    int s2 = 1;

    static ThetaSpec phi() { return {1, 1, 1, 1}; }
    static ThetaSpec psi() { return {1, 3, 1, 1}; }
    static ThetaSpec general(std::int64_t x, std::int64_t y, int s1, int s2) {
        return {x, y, s1, s2};
    }
};

/// Euler product f_1 = prod (1 - q^n), built from the sparse pentagonal-number
/// expansion.
TruncatedSeries euler_f1(std::int64_t N, OptMod mod = {});

/// f_k(q) = f_1(q^k), k >= 1.
TruncatedSeries fk(std::int64_t k, std::int64_t N, OptMod mod = {});

/// prod over the spec of f_k^e; negative exponents go through invert.
TruncatedSeries eta_quotient(const EtaQuotientSpec& spec, std::int64_t N,
                             OptMod mod = {});

/// (q^a; q^b)_inf = prod_{j>=0} (1 - q^{a+jb}), a, b >= 1.
TruncatedSeries pochhammer(std::int64_t a, std::int64_t b, std::int64_t N,
                           OptMod mod = {});

/// (-q^a; q^b)_inf = prod_{j>=0} (1 + q^{a+jb}); the product side of the
/// Jacobi triple product.
TruncatedSeries pochhammer_plus(std::int64_t a, std::int64_t b, std::int64_t N,
                                OptMod mod = {});

/// Theta series by direct sparse summation.
TruncatedSeries theta(const ThetaSpec& spec, std::int64_t N, OptMod mod = {});

/// Product form of f(q^x, q^y):
/// (-q^x; q^{x+y})_inf (-q^y; q^{x+y})_inf (q^{x+y}; q^{x+y})_inf.
TruncatedSeries jacobi_triple_product(std::int64_t x, std::int64_t y,
                                      std::int64_t N, OptMod mod = {});

/// Generating function of partitions with designated summands:
/// f_6 / (f_1 f_2 f_3).
TruncatedSeries pd_series(std::int64_t N, OptMod mod = {});

/// g = 1/pd = f_1 f_2 f_3 / f_6.
TruncatedSeries g_series(std::int64_t N, OptMod mod = {});

/// h = f_1^2 / f_2 = 1 + 2 sum_{m>=1} (-1)^m q^{m^2}.
TruncatedSeries h_series(std::int64_t N, OptMod mod = {});

/// Generating function of PD_k (designated summands, no part divisible by k):
/// g(q^k) / g(q), k >= 2.
TruncatedSeries pdk_series(std::int64_t k, std::int64_t N, OptMod mod = {});

/// sum_{j>=1, 3 not| j} q^{j^2}.
TruncatedSeries square_sum_not3(std::int64_t N, OptMod mod = {});

/// sum_{j>=1 odd} q^{j^2}.
TruncatedSeries square_sum_odd(std::int64_t N, OptMod mod = {});

/// sum_{j>=1} (-1)^j q^{j^2}.
TruncatedSeries square_sum_alternating(std::int64_t N, OptMod mod = {});

/// prod_{n>=1} (1 + q^n + q^{3n} + q^{5n} + ...): generating function of
/// partitions in which every part has odd multiplicity.
TruncatedSeries odd_multiplicity_series(std::int64_t N, OptMod mod = {});

}  // namespace qpd
