#include "qpd/qfactory.hpp"

#include <stdexcept>

namespace qpd {

namespace {

TruncatedSeries from_coeffs(std::vector<Integer> c, std::int64_t N, OptMod mod) {
    return make_series(c, N, mod);
}

void check_N(std::int64_t N) {
    if (N < 0) throw std::invalid_argument("qfactory: precision must be >= 0");
}

// In-place multiply of a plain coefficient vector by (1 +- q^d).
void mul_binomial(std::vector<Integer>& c, std::int64_t d, int sign) {
    const auto n = static_cast<std::int64_t>(c.size()) - 1;
    for (std::int64_t t = n; t >= d; --t) {
        if (sign > 0)
            c[static_cast<std::size_t>(t)] += c[static_cast<std::size_t>(t - d)];
        else
            c[static_cast<std::size_t>(t)] -= c[static_cast<std::size_t>(t - d)];
    }
}

TruncatedSeries pochhammer_impl(std::int64_t a, std::int64_t b, std::int64_t N,
                                OptMod mod, int sign) {
    check_N(N);
    if (a < 1 || b < 1)
        throw std::invalid_argument("qfactory: pochhammer requires a >= 1 and b >= 1");
    std::vector<Integer> c(static_cast<std::size_t>(N) + 1, Integer(0));
    c[0] = 1;
    for (std::int64_t d = a; d <= N; d += b) mul_binomial(c, d, sign);
    return from_coeffs(std::move(c), N, mod);
}

}  // namespace

TruncatedSeries euler_f1(std::int64_t N, OptMod mod) {
    check_N(N);
    std::vector<Integer> c(static_cast<std::size_t>(N) + 1, Integer(0));
    c[0] = 1;
    for (std::int64_t j = 1;; ++j) {
        const std::int64_t e1 = j * (3 * j - 1) / 2;
        const std::int64_t e2 = j * (3 * j + 1) / 2;
        if (e1 > N) break;
        const int sign = (j % 2 == 0) ? 1 : -1;
        c[static_cast<std::size_t>(e1)] += sign;
        if (e2 <= N) c[static_cast<std::size_t>(e2)] += sign;
    }
    return from_coeffs(std::move(c), N, mod);
}

TruncatedSeries fk(std::int64_t k, std::int64_t N, OptMod mod) {
    if (k < 1) throw std::invalid_argument("qfactory: fk requires k >= 1");
    return substitute_power(euler_f1(N, mod), k);
}

TruncatedSeries eta_quotient(const EtaQuotientSpec& spec, std::int64_t N, OptMod mod) {
    check_N(N);
    if (spec.empty()) throw std::invalid_argument("qfactory: empty eta quotient");
    std::optional<TruncatedSeries> num, den;
    for (const auto& f : spec) {
        if (f.k < 1 || f.e == 0)
            throw std::invalid_argument("qfactory: eta factor requires k >= 1, e != 0");
        const TruncatedSeries part = power(fk(f.k, N, mod), f.e > 0 ? f.e : -f.e);
        auto& slot = (f.e > 0) ? num : den;
        slot = slot ? mul(*slot, part) : part;
    }
    if (!num) return invert(*den);
    if (!den) return *num;
    return mul(*num, invert(*den));
}

TruncatedSeries pochhammer(std::int64_t a, std::int64_t b, std::int64_t N, OptMod mod) {
    return pochhammer_impl(a, b, N, mod, -1);
}

TruncatedSeries pochhammer_plus(std::int64_t a, std::int64_t b, std::int64_t N,
                                OptMod mod) {
    return pochhammer_impl(a, b, N, mod, +1);
}

TruncatedSeries theta(const ThetaSpec& spec, std::int64_t N, OptMod mod) {
    check_N(N);
    if (spec.x < 1 || spec.y < 1)
        throw std::invalid_argument("qfactory: theta exponents must be >= 1");
    if ((spec.s1 != 1 && spec.s1 != -1) || (spec.s2 != 1 && spec.s2 != -1))
        throw std::invalid_argument("qfactory: theta signs must be +-1");
    std::vector<Integer> c(static_cast<std::size_t>(N) + 1, Integer(0));
    for (std::int64_t n = 0;; ++n) {
        bool any = false;
        const int ncand = (n == 0) ? 1 : 2;
        for (int ci = 0; ci < ncand; ++ci) {
            const std::int64_t v = (ci == 0) ? n : -n;
            const std::int64_t T = v * (v + 1) / 2;
            const std::int64_t U = v * (v - 1) / 2;
            const std::int64_t e = spec.x * T + spec.y * U;
            if (e > N) continue;
            any = true;
            int sign = 1;
            if (spec.s1 < 0 && (T & 1)) sign = -sign;
            if (spec.s2 < 0 && (U & 1)) sign = -sign;
            c[static_cast<std::size_t>(e)] += sign;
        }
        // Exponents grow quadratically in |n|; once both directions
        // overshoot, all later ones do too.
        if (!any && n > 0) break;
    }
    return from_coeffs(std::move(c), N, mod);
}

TruncatedSeries jacobi_triple_product(std::int64_t x, std::int64_t y, std::int64_t N,
                                      OptMod mod) {
    const TruncatedSeries a = pochhammer_plus(x, x + y, N, mod);
    const TruncatedSeries b = pochhammer_plus(y, x + y, N, mod);
    return mul(mul(a, b), fk(x + y, N, mod));
}

TruncatedSeries pd_series(std::int64_t N, OptMod mod) {
    return eta_quotient({{6, 1}, {1, -1}, {2, -1}, {3, -1}}, N, mod);
}

TruncatedSeries g_series(std::int64_t N, OptMod mod) {
    return eta_quotient({{1, 1}, {2, 1}, {3, 1}, {6, -1}}, N, mod);
}

TruncatedSeries h_series(std::int64_t N, OptMod mod) {
    return eta_quotient({{1, 2}, {2, -1}}, N, mod);
}

TruncatedSeries pdk_series(std::int64_t k, std::int64_t N, OptMod mod) {
    if (k < 2) throw std::invalid_argument("qfactory: pdk_series requires k >= 2");
    const TruncatedSeries g = g_series(N, mod);
    return mul(substitute_power(g, k), invert(g));
}

TruncatedSeries square_sum_not3(std::int64_t N, OptMod mod) {
    check_N(N);
    std::vector<Integer> c(static_cast<std::size_t>(N) + 1, Integer(0));
    for (std::int64_t j = 1; j * j <= N; ++j)
        if (j % 3 != 0) c[static_cast<std::size_t>(j * j)] = 1;
    return from_coeffs(std::move(c), N, mod);
}

TruncatedSeries square_sum_odd(std::int64_t N, OptMod mod) {
    check_N(N);
    std::vector<Integer> c(static_cast<std::size_t>(N) + 1, Integer(0));
    for (std::int64_t j = 1; j * j <= N; j += 2)
        c[static_cast<std::size_t>(j * j)] = 1;
    return from_coeffs(std::move(c), N, mod);
}

TruncatedSeries square_sum_alternating(std::int64_t N, OptMod mod) {
    check_N(N);
    std::vector<Integer> c(static_cast<std::size_t>(N) + 1, Integer(0));
    for (std::int64_t j = 1; j * j <= N; ++j)
        c[static_cast<std::size_t>(j * j)] = (j % 2 == 0) ? 1 : -1;
    return from_coeffs(std::move(c), N, mod);
}

TruncatedSeries odd_multiplicity_series(std::int64_t N, OptMod mod) {
    check_N(N);
    // Factor per part size n: 1 + q^n + q^{3n} + ... = (1 + q^n - q^{2n}) / (1 - q^{2n}).
    // Both sides apply in place in O(N/n), keeping the whole product at O(N^2).
    std::vector<Integer> c(static_cast<std::size_t>(N) + 1, Integer(0));
    c[0] = 1;
    for (std::int64_t n = 1; n <= N; ++n) {
        for (std::int64_t t = N; t >= n; --t) {
            c[static_cast<std::size_t>(t)] += c[static_cast<std::size_t>(t - n)];
            if (t >= 2 * n)
                c[static_cast<std::size_t>(t)] -= c[static_cast<std::size_t>(t - 2 * n)];
        }
        for (std::int64_t t = 2 * n; t <= N; ++t)
            c[static_cast<std::size_t>(t)] += c[static_cast<std::size_t>(t - 2 * n)];
    }
    return from_coeffs(std::move(c), N, mod);
}

}  // namespace qpd
