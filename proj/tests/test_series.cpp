#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "qpd/series.hpp"

using qpd::Integer;
using qpd::TruncatedSeries;

namespace {

TruncatedSeries from_ints(std::vector<long> v, std::size_t precision,
                          qpd::OptMod mod = {}) {
    std::vector<Integer> c(precision + 1, 0);
    for (std::size_t i = 0; i < v.size() && i <= precision; ++i) c[i] = v[i];
    return qpd::make_series(c, precision, mod);
}

TruncatedSeries random_series(std::mt19937& rng, std::size_t precision,
                              qpd::OptMod mod = {}) {
    std::uniform_int_distribution<long> d(-9, 9);
    std::vector<Integer> c(precision + 1);
    for (auto& x : c) x = d(rng);
    return qpd::make_series(c, precision, mod);
}

}  // namespace

TEST_CASE("construction and accessors") {
    auto z = TruncatedSeries::zero(4);
    CHECK(z.precision() == 4);
    CHECK_FALSE(z.modular());
    CHECK(z.nonzero_count() == 0);

    auto c = TruncatedSeries::constant(Integer(7), 3);
    CHECK(c.exact_coeff(0) == 7);
    CHECK(c.exact_coeff(3) == 0);
    CHECK(c.nonzero_count() == 1);

    auto m = TruncatedSeries::monomial(Integer(-2), 2, 5);
    CHECK(m.exact_coeff(2) == -2);
    CHECK(m.coeff_is_zero(1));

    auto cm = TruncatedSeries::constant(Integer(-1), 3, 5);
    CHECK(cm.modular());
    CHECK(cm.modulus() == 5);
    CHECK(cm.residue(0) == 4);
    CHECK_THROWS_AS((void)cm.exact_coeff(0), std::logic_error);
}

TEST_CASE("make_series validates and reduces") {
    std::vector<Integer> c{Integer(5), Integer(-1), Integer(8)};
    auto s = qpd::make_series(c, 2, 4);
    CHECK(s.residue(0) == 1);
    CHECK(s.residue(1) == 3);
    CHECK(s.residue(2) == 0);

    CHECK_THROWS_AS(qpd::make_series(c, 3), std::invalid_argument);
    CHECK_THROWS_AS(qpd::make_series(c, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(qpd::make_series(c, 2, (std::uint64_t{1} << 32) + 1),
                    std::invalid_argument);
}

TEST_CASE("addition, subtraction, multiplication basics") {
    auto a = from_ints({1, 2, 3}, 2);
    auto b = from_ints({0, 1, -1}, 2);

    auto s = a + b;
    CHECK(s.exact_coeff(0) == 1);
    CHECK(s.exact_coeff(1) == 3);
    CHECK(s.exact_coeff(2) == 2);

    auto d = a - b;
    CHECK(d.exact_coeff(1) == 1);
    CHECK(d.exact_coeff(2) == 4);

    auto p = a * b;  // (1+2q+3q^2)(q-q^2) = q + q^2 + q^3 - 3q^4, truncated
    CHECK(p.exact_coeff(0) == 0);
    CHECK(p.exact_coeff(1) == 1);
    CHECK(p.exact_coeff(2) == 1);
}

TEST_CASE("binary operations truncate to the shorter operand") {
    auto a = from_ints({1, 1, 1, 1, 1, 1}, 5);
    auto b = from_ints({1, 1, 1}, 2);
    CHECK((a + b).precision() == 2);
    CHECK((a * b).precision() == 2);
    auto p = a * b;
    CHECK(p.exact_coeff(2) == 3);
}

TEST_CASE("mixing exact and modular lanes is rejected") {
    auto a = from_ints({1, 1}, 1);
    auto b = from_ints({1, 1}, 1, 5);
    auto c = from_ints({1, 1}, 1, 7);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(b * c, std::invalid_argument);
}

TEST_CASE("geometric series inverse") {
    auto one_minus_q = from_ints({1, -1}, 30);
    auto inv = qpd::invert(one_minus_q);
    for (std::size_t n = 0; n <= 30; ++n) CHECK(inv.exact_coeff(n) == 1);
    CHECK(inv * one_minus_q == TruncatedSeries::constant(Integer(1), 30));
}

TEST_CASE("inverse requires a unit constant term") {
    CHECK_THROWS_AS(qpd::invert(from_ints({2, 1}, 3)), std::domain_error);
    CHECK_THROWS_AS(qpd::invert(from_ints({0, 1}, 3)), std::domain_error);
    CHECK_THROWS_AS(qpd::invert(from_ints({2, 1}, 3, 4)), std::domain_error);

    // 3 is a unit mod 4 even though it is not +-1.
    auto a = from_ints({3, 1, 2}, 8, 4);
    auto prod = a * qpd::invert(a);
    CHECK(prod == TruncatedSeries::constant(Integer(1), 8, 4));
}

TEST_CASE("inverse of -1-leading exact series") {
    auto a = from_ints({-1, 4, -2, 7}, 12);
    auto prod = a * qpd::invert(a);
    CHECK(prod == TruncatedSeries::constant(Integer(1), 12));
}

TEST_CASE("two-sided inverse on random units") {
    std::mt19937 rng(20260814);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_series(rng, 40);
        auto c = a.exact_coeff(0);
        // Force a unit constant term.
        auto fixed = a + TruncatedSeries::constant(Integer(1) - c, 40);
        auto inv = qpd::invert(fixed);
        CHECK(fixed * inv == TruncatedSeries::constant(Integer(1), 40));
        CHECK(inv * fixed == TruncatedSeries::constant(Integer(1), 40));
    }
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_series(rng, 40, 9);
        auto fixed = a + TruncatedSeries::constant(Integer(1) - Integer(a.residue(0)), 40, 9);
        auto inv = qpd::invert(fixed);
        CHECK(fixed * inv == TruncatedSeries::constant(Integer(1), 40, 9));
    }
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 10; ++trial) {
        qpd::OptMod mod = (trial % 2 == 0) ? qpd::OptMod{} : qpd::OptMod{8};
        auto a = random_series(rng, 25, mod);
        auto b = random_series(rng, 25, mod);
        auto c = random_series(rng, 25, mod);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == TruncatedSeries::zero(25, mod));
        auto one = TruncatedSeries::constant(Integer(1), 25, mod);
        CHECK(a * one == a);
    }
}

TEST_CASE("power") {
    auto a = from_ints({1, 1}, 6);
    auto sq = qpd::power(a, 2);
    CHECK(sq.exact_coeff(0) == 1);
    CHECK(sq.exact_coeff(1) == 2);
    CHECK(sq.exact_coeff(2) == 1);
    CHECK(qpd::power(a, 0) == TruncatedSeries::constant(Integer(1), 6));
    CHECK(qpd::power(a, 1) == a);

    // (1+q)^5 via binomial coefficients.
    auto p5 = qpd::power(a, 5);
    long binom[7] = {1, 5, 10, 10, 5, 1, 0};
    for (std::size_t n = 0; n <= 6; ++n) CHECK(p5.exact_coeff(n) == binom[n]);

    // Negative exponent: a^-2 * a^2 = 1.
    auto pm2 = qpd::power(a, -2);
    CHECK(pm2 * sq == TruncatedSeries::constant(Integer(1), 6));
}

TEST_CASE("substitute_power") {
    auto a = from_ints({1, 2, 3}, 2);
    auto b = qpd::substitute_power(from_ints({1, 2, 3, 0, 0, 0, 0, 0}, 7), 3);
    CHECK(b.precision() == 7);
    CHECK(b.exact_coeff(0) == 1);
    CHECK(b.exact_coeff(3) == 2);
    CHECK(b.exact_coeff(6) == 3);
    CHECK(b.exact_coeff(1) == 0);
    CHECK(qpd::substitute_power(a, 1) == a);
    CHECK_THROWS_AS(qpd::substitute_power(a, 0), std::invalid_argument);
}

TEST_CASE("extract_progression") {
    auto a = from_ints({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, 10);
    auto e = qpd::extract_progression(a, 3, 1);  // coefficients 1, 4, 7, 10
    CHECK(e.precision() == 3);
    CHECK(e.exact_coeff(0) == 1);
    CHECK(e.exact_coeff(1) == 4);
    CHECK(e.exact_coeff(2) == 7);
    CHECK(e.exact_coeff(3) == 10);

    CHECK_THROWS_AS(qpd::extract_progression(a, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(qpd::extract_progression(a, 0, 0), std::invalid_argument);
    CHECK_THROWS_WITH_AS(qpd::extract_progression(from_ints({1}, 0), 2, 1),
                         doctest::Contains("insufficient precision"),
                         std::invalid_argument);
}

TEST_CASE("substitute then extract round-trips") {
    std::mt19937 rng(777);
    auto a = random_series(rng, 20);
    auto lifted = qpd::substitute_power(
        qpd::make_series(
            [&] {
                std::vector<Integer> c(61, 0);
                for (std::size_t i = 0; i <= 20; ++i) c[i] = a.exact_coeff(i);
                return c;
            }(),
            60),
        3);
    CHECK(qpd::extract_progression(lifted, 3, 0) == a);
    CHECK(qpd::extract_progression(lifted, 3, 1).nonzero_count() == 0);
    CHECK(qpd::extract_progression(lifted, 3, 2).nonzero_count() == 0);
}

TEST_CASE("reduce_mod") {
    auto a = from_ints({5, -1, 8, 3}, 3);
    auto r = qpd::reduce_mod(a, 4);
    CHECK(r.modular());
    CHECK(r.modulus() == 4);
    CHECK(r.residue(0) == 1);
    CHECK(r.residue(1) == 3);
    CHECK(r.residue(2) == 0);
    CHECK(r.residue(3) == 3);

    auto r2 = qpd::reduce_mod(from_ints({11, 7}, 1, 12), 4);
    CHECK(r2.residue(0) == 3);
    CHECK(r2.residue(1) == 3);
    CHECK_THROWS_AS(qpd::reduce_mod(from_ints({1}, 0, 12), 5),
                    std::invalid_argument);
}

TEST_CASE("exact and reduced arithmetic commute") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_series(rng, 30);
        auto b = random_series(rng, 30);
        for (std::uint64_t m : {2u, 3u, 4u, 9u}) {
            CHECK(qpd::reduce_mod(a * b, m) ==
                  qpd::reduce_mod(a, m) * qpd::reduce_mod(b, m));
            CHECK(qpd::reduce_mod(a + b, m) ==
                  qpd::reduce_mod(a, m) + qpd::reduce_mod(b, m));
        }
    }
}

TEST_CASE("first_difference") {
    auto a = from_ints({1, 2, 3, 4}, 3);
    auto b = from_ints({1, 2, 9, 4}, 3);
    auto d = TruncatedSeries::first_difference(a, b);
    REQUIRE(d.has_value());
    CHECK(*d == 2);
    CHECK_FALSE(TruncatedSeries::first_difference(a, a).has_value());

    // Compares only over the common prefix.
    auto longer = from_ints({1, 2, 3, 4, 99}, 4);
    CHECK_FALSE(TruncatedSeries::first_difference(a, longer).has_value());
}

TEST_CASE("coeff_str") {
    auto a = from_ints({-12, 5}, 1);
    CHECK(a.coeff_str(0) == "-12");
    auto m = from_ints({-1, 5}, 1, 4);
    CHECK(m.coeff_str(0) == "3");
}

TEST_CASE("large dense modular multiply stays consistent with exact") {
    std::mt19937 rng(99);
    auto a = random_series(rng, 600);
    auto b = random_series(rng, 600);
    auto exact = a * b;
    auto modular = qpd::reduce_mod(a, 9) * qpd::reduce_mod(b, 9);
    CHECK(qpd::reduce_mod(exact, 9) == modular);
}

TEST_CASE("sparse multiply agrees with dense") {
    // Two series with very few terms at high precision exercise the sparse
    // path; a dense random one forces the generic path on the same inputs.
    auto sparse_a = TruncatedSeries::monomial(Integer(3), 500, 2000) +
                    TruncatedSeries::constant(Integer(1), 2000);
    auto sparse_b = TruncatedSeries::monomial(Integer(-2), 700, 2000) +
                    TruncatedSeries::constant(Integer(5), 2000);
    auto p = sparse_a * sparse_b;
    CHECK(p.exact_coeff(0) == 5);
    CHECK(p.exact_coeff(500) == 15);
    CHECK(p.exact_coeff(700) == -2);
    CHECK(p.exact_coeff(1200) == -6);
    CHECK(p.nonzero_count() == 4);
}
