#include "qpd/counters.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace qpd::counters {

namespace {

void check_nonneg(std::int64_t n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string("counters: ") + what);
}

// Sum over partitions of `rem` with parts <= p (skipping parts divisible by
// k when k >= 2) of the product of part multiplicities.
class DesignatedCounter {
  public:
    DesignatedCounter(std::int64_t n, std::int64_t k) : k_(k) {
        memo_.assign(static_cast<std::size_t>(n + 1),
                     std::vector<std::optional<Integer>>(static_cast<std::size_t>(n + 1)));
    }

    const Integer& count(std::int64_t rem, std::int64_t p) {
        auto& slot = memo_[static_cast<std::size_t>(rem)][static_cast<std::size_t>(p)];
        if (slot) return *slot;
        Integer res;
        if (rem == 0) {
            res = 1;
        } else if (p == 0) {
            res = 0;
        } else if (k_ >= 2 && p % k_ == 0) {
            res = count(rem, p - 1);
        } else {
            res = count(rem, p - 1);
            for (std::int64_t m = 1; m * p <= rem; ++m)
                res += m * count(rem - m * p, p - 1);
        }
        slot = std::move(res);
        return *slot;
    }

  private:
    std::int64_t k_;
    std::vector<std::vector<std::optional<Integer>>> memo_;
};

bool domain_admits(Domain d, std::int64_t v) {
    switch (d) {
        case Domain::Nonneg: return v >= 0;
        case Domain::NonnegNot3OrZero: return v >= 0 && (v == 0 || v % 3 != 0);
        case Domain::AllInt: return true;
        case Domain::ParitySplit: return v % 2 == 0 || v >= 1;
    }
    return false;
}

std::int64_t term_value(const QuadraticTerm& t, std::int64_t v) {
    return t.quad * v * v + t.lin * v;
}

}  // namespace

Integer oracle_pd(std::int64_t n) {
    check_nonneg(n, "oracle_pd requires n >= 0");
    DesignatedCounter c(n, 0);
    return c.count(n, n);
}

Integer oracle_pdk(std::int64_t k, std::int64_t n) {
    check_nonneg(n, "oracle_pdk requires n >= 0");
    if (k < 2) throw std::invalid_argument("counters: oracle_pdk requires k >= 2");
    DesignatedCounter c(n, k);
    return c.count(n, n);
}

std::vector<Integer> odd_multiplicity_range(std::int64_t n_max) {
    check_nonneg(n_max, "odd_multiplicity_range requires n_max >= 0");
    const auto size = static_cast<std::size_t>(n_max) + 1;
    std::vector<Integer> cur(size, Integer(0));
    cur[0] = 1;
    std::vector<Integer> odd_sum(size), next(size);
    for (std::int64_t s = 1; s <= n_max; ++s) {
        // odd_sum[t] = sum over odd m >= 1 of cur[t - m s], via the
        // two-step recurrence odd_sum[t] = cur[t - s] + odd_sum[t - 2s].
        for (std::int64_t t = 0; t <= n_max; ++t) {
            Integer v = (t >= s) ? cur[static_cast<std::size_t>(t - s)] : Integer(0);
            if (t >= 2 * s) v += odd_sum[static_cast<std::size_t>(t - 2 * s)];
            odd_sum[static_cast<std::size_t>(t)] = std::move(v);
            next[static_cast<std::size_t>(t)] =
                cur[static_cast<std::size_t>(t)] + odd_sum[static_cast<std::size_t>(t)];
        }
        std::swap(cur, next);
    }
    return cur;
}

Integer odd_multiplicity_count(std::int64_t n) {
    check_nonneg(n, "odd_multiplicity_count requires n >= 0");
    return odd_multiplicity_range(n)[static_cast<std::size_t>(n)];
}

std::vector<std::int64_t> QuadraticFormCounter::count_range(std::int64_t n_max) const {
    check_nonneg(n_max, "count_range requires n_max >= 0");
    for (const auto& t : terms)
        if (t.quad < 1 || std::abs(t.lin) > t.quad)
            throw std::invalid_argument(
                "counters: quadratic term requires quad >= 1 and |lin| <= quad");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n_max) + 1, 0);
    if (offset > n_max) return counts;
    // Largest coefficient outermost: tightest ranges first.
    std::vector<QuadraticTerm> order = terms;
    std::stable_sort(order.begin(), order.end(),
                     [](const QuadraticTerm& a, const QuadraticTerm& b) {
                         return a.quad > b.quad;
                     });
    // Depth-first over variables, accumulating partial sums <= n_max.
    auto rec = [&](auto&& self, std::size_t i, std::int64_t acc) -> void {
        if (i == order.size()) {
            ++counts[static_cast<std::size_t>(acc)];
            return;
        }
        const QuadraticTerm& t = order[i];
        const std::int64_t rem = n_max - acc;
        for (std::int64_t v = 0;; ++v) {
            const std::int64_t val = term_value(t, v);
            if (val > rem) break;
            if (domain_admits(t.dom, v)) self(self, i + 1, acc + val);
        }
        for (std::int64_t v = -1;; --v) {
            if (t.dom == Domain::Nonneg || t.dom == Domain::NonnegNot3OrZero) break;
            const std::int64_t val = term_value(t, v);
            if (val > rem) break;
            if (domain_admits(t.dom, v)) self(self, i + 1, acc + val);
        }
    };
    rec(rec, 0, offset);
    return counts;
}

std::int64_t QuadraticFormCounter::count(std::int64_t n) const {
    check_nonneg(n, "count requires n >= 0");
    return count_range(n)[static_cast<std::size_t>(n)];
}

std::int64_t count_a(std::int64_t n, int ell) {
    return count_a_range(n, ell)[static_cast<std::size_t>(n)];
}

std::vector<std::int64_t> count_a_range(std::int64_t n_max, int ell) {
    if (ell < 1) throw std::invalid_argument("counters: count_a requires ell >= 1");
    QuadraticFormCounter f;
    for (int m = 0; m < ell; ++m)
        f.terms.push_back({std::int64_t(1) << m, 0, Domain::NonnegNot3OrZero});
    return f.count_range(n_max);
}

std::int64_t count_a_star(std::int64_t n, int ell) {
    return count_a_star_range(n, ell)[static_cast<std::size_t>(n)];
}

std::vector<std::int64_t> count_a_star_range(std::int64_t n_max, int ell) {
    if (ell < 2) throw std::invalid_argument("counters: count_a_star requires ell >= 2");
    QuadraticFormCounter f;
    f.terms.push_back({1, 0, Domain::NonnegNot3OrZero});
    f.terms.push_back({std::int64_t(1) << (ell - 1), 0, Domain::NonnegNot3OrZero});
    return f.count_range(n_max);
}

std::int64_t count_r(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("counters: count_r requires n >= 1");
    return count_r_range(n)[static_cast<std::size_t>(n)];
}

std::vector<std::int64_t> count_r_range(std::int64_t n_max) {
    QuadraticFormCounter f;
    f.terms.push_back({1, 1, Domain::Nonneg});
    f.terms.push_back({3, 3, Domain::Nonneg});
    f.offset = 1;
    return f.count_range(n_max);
}

std::int64_t count_d(std::int64_t n) {
    return count_d_range(n)[static_cast<std::size_t>(n)];
}

std::vector<std::int64_t> count_d_range(std::int64_t n_max) {
    QuadraticFormCounter f;
    f.terms.push_back({9, -3, Domain::AllInt});
    f.terms.push_back({9, -3, Domain::AllInt});
    return f.count_range(n_max);
}

namespace {

std::int64_t pow3(int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= 3;
    return r;
}

}  // namespace

std::int64_t count_e(std::int64_t n, int ell) {
    return count_e_range(n, ell)[static_cast<std::size_t>(n)];
}

std::vector<std::int64_t> count_e_range(std::int64_t n_max, int ell) {
    if (ell < 1) throw std::invalid_argument("counters: count_e requires ell >= 1");
    QuadraticFormCounter f;
    f.terms.push_back({1, 0, Domain::ParitySplit});
    for (int m = 1; m < ell; ++m) {
        f.terms.push_back({pow3(m), 0, Domain::ParitySplit});
        f.terms.push_back({pow3(m), 0, Domain::ParitySplit});
    }
    f.terms.push_back({pow3(ell), 0, Domain::ParitySplit});
    return f.count_range(n_max);
}

std::int64_t count_e_star(std::int64_t n, int ell) {
    return count_e_star_range(n, ell)[static_cast<std::size_t>(n)];
}

std::vector<std::int64_t> count_e_star_range(std::int64_t n_max, int ell) {
    if (ell < 2) throw std::invalid_argument("counters: count_e_star requires ell >= 2");
    QuadraticFormCounter f;
    f.terms.push_back({1, 0, Domain::ParitySplit});
    f.terms.push_back({1, 0, Domain::ParitySplit});
    f.terms.push_back({pow3(ell - 1), 0, Domain::ParitySplit});
    f.terms.push_back({pow3(ell - 1), 0, Domain::ParitySplit});
    return f.count_range(n_max);
}

std::vector<Integer> count_c_range(std::int64_t n_max) {
    check_nonneg(n_max, "count_c_range requires n_max >= 0");
    const auto size = static_cast<std::size_t>(n_max) + 1;
    // D[t]: assignments of positive values 12a+b (b in 0..3) to distinct part
    // sizes with total weighted sum t. One value choice per size, so each
    // size's alternatives must all read the previous table.
    std::vector<Integer> D(size, Integer(0));
    D[0] = 1;
    std::vector<Integer> next(size);
    for (std::int64_t m = 1; m <= n_max; ++m) {
        next = D;
        for (std::int64_t v = 1; m * v <= n_max; ++v) {
            if (v % 12 > 3) continue;
            const std::int64_t step = m * v;
            for (std::int64_t t = step; t <= n_max; ++t)
                next[static_cast<std::size_t>(t)] += D[static_cast<std::size_t>(t - step)];
        }
        std::swap(D, next);
    }
    std::vector<Integer> c(size, Integer(0));
    for (std::int64_t k0 = 0;; ++k0) {
        const std::int64_t tri = 3 * k0 * (k0 + 1) / 2;
        if (tri > n_max) break;
        for (std::int64_t t = tri; t <= n_max; ++t)
            c[static_cast<std::size_t>(t)] += D[static_cast<std::size_t>(t - tri)];
    }
    return c;
}

Integer count_c(std::int64_t n) {
    check_nonneg(n, "count_c requires n >= 0");
    return count_c_range(n)[static_cast<std::size_t>(n)];
}

int pd4_closed_form(std::int64_t n) {
    check_nonneg(n, "pd4_closed_form requires n >= 0");
    if (n == 0) return 1;
    for (const std::int64_t m : {1, 2, 3, 6})
        if (n % m == 0 && is_perfect_square(static_cast<std::uint64_t>(n / m))) return 1;
    return 0;
}

int square_not3(std::int64_t n) {
    check_nonneg(n, "square_not3 requires n >= 0");
    if (n == 0) return 1;
    std::uint64_t root = 0;
    return is_perfect_square(static_cast<std::uint64_t>(n), &root) && root % 3 != 0 ? 1
                                                                                    : 0;
}

std::pair<Rational, Rational> psi_involution(const Rational& a, const Rational& b) {
    Rational u = (a + 4 * b) / 3;
    Rational v = (2 * a - b) / 3;
    u.canonicalize();
    v.canonicalize();
    return {u, v};
}

std::set<std::uint64_t> quadratic_residues(std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("counters: quadratic_residues requires m >= 1");
    std::set<std::uint64_t> rs;
    for (std::uint64_t x = 0; x <= m / 2; ++x) rs.insert((x * x) % m);
    return rs;
}

bool is_pow4_times_8k1(std::uint64_t s) {
    if (s == 0) return false;
    while (s % 4 == 0) s /= 4;
    return s % 8 == 1;
}

}  // namespace qpd::counters
