#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "qpd/integer.hpp"

namespace qpd::counters {

/// PD(n): over all partitions of n, the number of ways to designate exactly
/// one part among each block of equal parts, i.e. the sum over partitions of
/// the product of the multiplicities of the distinct part sizes. Exact count
/// by memoized largest-part recursion.
Integer oracle_pd(std::int64_t n);

/// PD_k(n): same count restricted to partitions with no part divisible by k,
/// k >= 2.
Integer oracle_pdk(std::int64_t k, std::int64_t n);

/// Number of partitions of n in which every part's multiplicity is odd;
/// whole table 0..n_max.
std::vector<Integer> odd_multiplicity_range(std::int64_t n_max);
Integer odd_multiplicity_count(std::int64_t n);

/// Representation-count machinery: a sum of independent terms, each
/// contributing quad*v^2 + lin*v for one variable v ranging over a domain.
enum class Domain {
    Nonneg,            // v >= 0
    NonnegNot3OrZero,  // v >= 0 and (v == 0 or 3 does not divide v)
    AllInt,            // v in Z
    ParitySplit,       // v in Z when v is even, v >= 1 when v is odd
};

struct QuadraticTerm {
    std::int64_t quad;
    std::int64_t lin;
    Domain dom;
};

/// Counts solutions of  n = offset + sum_i (quad_i v_i^2 + lin_i v_i)  with
/// each v_i in its domain. Requires quad >= 1 and |lin| <= quad so every
/// term is nonnegative over the integers (makes the search finite).
struct QuadraticFormCounter {
    std::vector<QuadraticTerm> terms;
    std::int64_t offset = 0;

    std::int64_t count(std::int64_t n) const;
    /// Solution counts for every target 0..n_max in one sweep.
    std::vector<std::int64_t> count_range(std::int64_t n_max) const;
};

/// Solutions of n = sum_{m=0}^{ell-1} 2^m k_m^2 with each k_m >= 0 and
/// 3 not dividing k_m (or k_m = 0); ell >= 1.
std::int64_t count_a(std::int64_t n, int ell);
std::vector<std::int64_t> count_a_range(std::int64_t n_max, int ell);

/// Solutions of n = k_0^2 + 2^{ell-1} k_1^2, same variable domain; ell >= 2.
std::int64_t count_a_star(std::int64_t n, int ell);
std::vector<std::int64_t> count_a_star_range(std::int64_t n_max, int ell);

/// Solutions of n = k(k+1) + 3m(m+1) + 1 with k, m >= 0; n >= 1.
std::int64_t count_r(std::int64_t n);
std::vector<std::int64_t> count_r_range(std::int64_t n_max);

/// Solutions of n = 3j(3j-1) + 3k(3k-1) with j, k in Z.
std::int64_t count_d(std::int64_t n);
std::vector<std::int64_t> count_d_range(std::int64_t n_max);

/// Solutions of n = k_0^2 + sum_{m=1}^{ell-1} 3^m (k_m^2 + k_m'^2)
/// + 3^ell k_ell^2 with every variable even-in-Z / odd-positive; ell >= 1.
std::int64_t count_e(std::int64_t n, int ell);
std::vector<std::int64_t> count_e_range(std::int64_t n_max, int ell);

/// Solutions of n = k_0^2 + k_0'^2 + 3^{ell-1} (k_1^2 + k_1'^2), same
/// domains; ell >= 2.
std::int64_t count_e_star(std::int64_t n, int ell);
std::vector<std::int64_t> count_e_star_range(std::int64_t n_max, int ell);

/// Number of assignments counted by the mod-4 characterization of PD_2:
/// n = 3 k_0 (k_0 + 1)/2 + sum over finitely many distinct part sizes m of
/// m * (12 a_m + b_m), with a_m >= 0, b_m in {0,1,2,3}, 12 a_m + b_m > 0.
std::vector<Integer> count_c_range(std::int64_t n_max);
Integer count_c(std::int64_t n);

/// 1 iff n = m k^2 for some m | 6, k >= 0.
int pd4_closed_form(std::int64_t n);

/// 1 iff n = 0 or n = k^2 with 3 not dividing k.
int square_not3(std::int64_t n);

/// (a, b) -> ((a + 4b)/3, (2a - b)/3); preserves a^2 + 2 b^2 and is an
/// involution over the rationals.
std::pair<Rational, Rational> psi_involution(const Rational& a, const Rational& b);

/// {x^2 mod m : x in Z}.
std::set<std::uint64_t> quadratic_residues(std::uint64_t m);

/// True iff s is of the form 4^a (8b + 1), a, b >= 0.
bool is_pow4_times_8k1(std::uint64_t s);

}  // namespace qpd::counters
