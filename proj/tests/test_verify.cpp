#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qpd/claims.hpp"
#include "qpd/counters.hpp"
#include "qpd/qfactory.hpp"

using namespace qpd;

namespace {

const std::vector<ClaimRow>& registry() {
    static const std::vector<ClaimRow> rows =
        load_registry(std::string(QPD_DATA_DIR) + "/claims.registry");
    return rows;
}

std::int64_t instance_count(const std::string& id) {
    std::int64_t n = 0;
    for (const auto& inst : expand_all(registry()))
        if (inst.claim_id == id) ++n;
    return n;
}

}  // namespace

TEST_CASE("registry loads with unique ids and expected families") {
    const auto& rows = registry();
    CHECK(rows.size() == 29);

    std::set<std::string> ids;
    for (const auto& row : rows) CHECK(ids.insert(row.id).second);
    for (const char* id : {"C-33a", "C-34", "C-36", "C-66b", "C-810", "K-11", "K-12",
                           "K-37", "K-41", "K-62", "K-64", "K-87", "X-91", "X-96"})
        CHECK(ids.count(id) == 1);

    std::int64_t conjectural = 0;
    for (const auto& row : rows)
        if (row.conjectural) ++conjectural;
    CHECK(conjectural == 6);

    for (const auto& row : rows) CHECK(!row.source.empty());
}

TEST_CASE("parameter expansion matches the declared ranges") {
    CHECK(expand_all(registry()).size() == 158);

    // C-34: for each level l, one instance per quadratic non-residue mod 2^(l-1).
    CHECK(instance_count("C-34") ==
          (4 - counters::quadratic_residues(4).size()) + (8 - counters::quadratic_residues(8).size()) +
              (16 - counters::quadratic_residues(16).size()) + (32 - counters::quadratic_residues(32).size()));
    CHECK(instance_count("C-34") == 44);

    // C-36: levels l = j..6 share the non-form residues mod 2^(j-1).
    CHECK(instance_count("C-36") == 47);
    CHECK(instance_count("C-810") == 8);
    CHECK(instance_count("C-33a") == 14);
    CHECK(instance_count("X-96") == 4);
    CHECK(instance_count("K-11") == 1);
}

TEST_CASE("expansion carries conditions and parameter labels") {
    for (const auto& inst : expand_all(registry())) {
        CHECK(inst.A >= 1);
        CHECK(inst.r >= 0);
        CHECK(inst.r < inst.A);
        if (inst.claim_id == "C-66b") {
            CHECK(inst.min_index == 1);
            REQUIRE(inst.not_divisible.size() == 1);
            CHECK(inst.not_divisible[0] == 6);
        }
        if (inst.claim_id == "C-34") {
            // label records both parameters, e.g. "l=3,s=2"
            CHECK(inst.param_label.find("l=") != std::string::npos);
            CHECK(inst.param_label.find("s=") != std::string::npos);
        }
        if (inst.claim_id == "C-810") {
            // A = 3^(2j+1), r in {3^2j, 2*3^2j}
            CHECK((inst.A == 27 || inst.A == 243));
            CHECK((inst.r == inst.A / 3 || inst.r == 2 * (inst.A / 3)));
        }
    }
}

TEST_CASE("integer expressions over parameters") {
    const std::vector<std::pair<std::string, std::int64_t>> env = {{"j", 2}, {"s", 7}};
    CHECK(eval_int_expr("3^(2*j+1)", env) == 243);
    CHECK(eval_int_expr("2*s", env) == 14);
    CHECK(eval_int_expr("2+3*4", {}) == 14);
    CHECK(eval_int_expr("(2+3)*4", {}) == 20);
    CHECK(eval_int_expr("-5+1", {}) == -4);
    CHECK(eval_int_expr("2^10", {}) == 1024);
    CHECK_THROWS(eval_int_expr("2*l", env));        // unknown variable
    CHECK_THROWS(eval_int_expr("3 4", {}));         // trailing junk
    CHECK_THROWS(eval_int_expr("2^(2^40)", {}));    // oversized power
}

TEST_CASE("whole registry verifies at a medium range") {
    SeriesCache cache;
    const auto insts = expand_all(registry());
    const auto reports = verify_claims(insts, 600, 4, cache);
    REQUIRE(reports.size() == insts.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& rep = reports[i];
        CAPTURE(rep.claim_id);
        CAPTURE(rep.param_label);
        CHECK(rep.pass);
        CHECK(rep.failure_count == 0);
        CHECK(rep.verdict == (rep.conjectural ? "consistent" : "verified"));
        // reports come back in input order
        CHECK(rep.claim_id == insts[i].claim_id);
        CHECK(rep.r == insts[i].r);
    }

    // parameter-free claims walk the full index range
    for (const auto& rep : reports)
        if (rep.claim_id == "K-11") CHECK(rep.support == 601);
}

TEST_CASE("parallel verification is deterministic") {
    const auto insts = expand_all(registry());
    SeriesCache c1, c2;
    const auto a = verify_claims(insts, 400, 4, c1);
    const auto b = verify_claims(insts, 400, 1, c2);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].claim_id == b[i].claim_id);
        CHECK(a[i].param_label == b[i].param_label);
        CHECK(a[i].support == b[i].support);
        CHECK(a[i].failure_count == b[i].failure_count);
        CHECK(a[i].verdict == b[i].verdict);
    }
}

TEST_CASE("lifting meta-check: base-level passes imply lifted-level passes") {
    // Within C-36, for fixed (j, s) the claims for l = j..6 all hold on the
    // same argument range whenever the base level l = j does.
    SeriesCache cache;
    std::vector<ClaimRow> c36;
    for (const auto& row : registry())
        if (row.id == "C-36") c36.push_back(row);
    REQUIRE(c36.size() == 1);
    const auto reports = verify_claims(expand_all(c36), 2000, 4, cache);
    CHECK(reports.size() == 47);
    for (const auto& rep : reports) {
        CAPTURE(rep.param_label);
        CHECK(rep.verdict == "verified");
    }
}

TEST_CASE("negative control: even-argument parity claim fails at the first square") {
    // PD_2(2n) is NOT always even: 2n = 4 = 2^2 has odd count.
    ClaimInstance inst;
    inst.claim_id = "NEG";
    inst.k = 2;
    inst.A = 2;
    inst.r = 0;
    inst.modulus = 2;
    inst.predicate = PredicateKind::Zero;
    inst.min_index = 1;
    SeriesCache cache;
    const auto rep = verify_claim(inst, 300, cache);
    CHECK(!rep.pass);
    CHECK(rep.verdict == "failed");
    REQUIRE(!rep.failures.empty());
    CHECK(rep.failures.front().n == 2);
    CHECK(rep.failures.front().argument == 4);
    CHECK(rep.failures.front().expected == "0");
    CHECK(rep.failures.front().actual == "1");
}

TEST_CASE("negative control: corrupted conjecture is refuted, not verified") {
    std::vector<ClaimRow> rows;
    for (const auto& row : registry())
        if (row.id == "X-91") rows.push_back(row);
    REQUIRE(rows.size() == 1);
    rows[0].r_texts = {"13"};  // shift the residue of 16n+12 by one
    SeriesCache cache;
    const auto reports = check_conjectures(rows, 2000, 1, cache);
    REQUIRE(reports.size() == 1);
    CHECK(!reports[0].pass);
    CHECK(reports[0].verdict == "refuted");
    CHECK(reports[0].failure_count > 0);
    CHECK(reports[0].failures.front().n >= 0);
}

TEST_CASE("recorded failures are capped but counted in full") {
    ClaimInstance inst;
    inst.claim_id = "CAP";
    inst.k = 2;
    inst.A = 1;
    inst.r = 0;
    inst.modulus = 4;
    inst.predicate = PredicateKind::Zero;
    SeriesCache cache;
    const auto rep = verify_claim(inst, 600, cache);
    CHECK(!rep.pass);
    CHECK(rep.failure_count > VerificationReport::kMaxRecordedFailures);
    CHECK(static_cast<std::int64_t>(rep.failures.size()) ==
          VerificationReport::kMaxRecordedFailures);
}

TEST_CASE("verifier refuses under-provisioned series") {
    ClaimInstance inst;
    inst.claim_id = "SHORT";
    inst.k = 2;
    inst.A = 4;
    inst.r = 3;
    inst.modulus = 2;
    const TruncatedSeries s = pdk_series(2, 50, 2);
    CHECK_THROWS_WITH_AS(verify_claim_with_series(inst, 20, s),
                         doctest::Contains("insufficient precision"),
                         std::runtime_error);
    CHECK_NOTHROW(verify_claim_with_series(inst, 11, s));  // 4*11+3 = 47 <= 50
}

TEST_CASE("series cache reuses and upgrades entries") {
    SeriesCache cache;
    const auto a = cache.get(2, std::uint64_t{4}, 100);
    CHECK(a.precision() >= 100);
    const auto b = cache.get(2, std::uint64_t{4}, 50);
    CHECK(b.precision() >= 100);  // cached larger entry served
    const auto c = cache.get(2, std::uint64_t{4}, 200);
    CHECK(c.precision() >= 200);
    CHECK(b.residue(50) == c.residue(50));
    // exact lane is cached separately from each modulus
    const auto d = cache.get(2, OptMod{}, 30);
    CHECK(!d.modular());
    CHECK(d.exact_coeff(3) == counters::oracle_pdk(2, 3));
}

TEST_CASE("square recurrence reproduces series parity") {
    for (std::int64_t k : {2, 3, 4, 5, 7, 8, 9}) {
        CAPTURE(k);
        const std::int64_t N = 1500;
        const auto bits = recurrence_pdk_mod2(k, N);
        const auto series = pdk_series(k, N, 2);
        REQUIRE(static_cast<std::int64_t>(bits.size()) == N + 1);
        for (std::int64_t n = 0; n <= N; ++n) {
            if (bits[n] != series.residue(n)) {
                CAPTURE(n);
                REQUIRE(bits[n] == series.residue(n));
            }
        }
    }
}

TEST_CASE("square recurrence matches the closed parity description for k=2") {
    const auto bits = recurrence_pdk_mod2(2, 5000);
    for (std::int64_t n = 0; n <= 5000; ++n) {
        CAPTURE(n);
        REQUIRE(static_cast<int>(bits[n]) == counters::square_not3(n));
    }
    // spot values: PD_3(2) = 3 is odd; PD_4(6) is odd (6 = 6*1^2)
    CHECK(recurrence_pdk_mod2(3, 2)[2] == 1);
    CHECK(recurrence_pdk_mod2(4, 6)[6] == 1);
    CHECK_THROWS(recurrence_pdk_mod2(1, 10));
    CHECK_THROWS(recurrence_pdk_mod2(2, -1));
}

TEST_CASE("miner rediscovers the conjectured progressions and labels them") {
    const auto known = expand_all(registry());

    const auto mod4 = mine_congruences(2, 4, 48, 3000, 20, known);
    auto find = [](const std::vector<MinedCandidate>& v, std::int64_t A, std::int64_t r) {
        for (const auto& c : v)
            if (c.A == A && c.r == r) return c;
        return MinedCandidate{};  // A == 1 marks "not found"
    };
    for (auto [A, r, id] : std::vector<std::tuple<int, int, std::string>>{
             {16, 12, "X-91"}, {24, 20, "X-92"}, {25, 5, "X-93"},
             {32, 24, "X-94"}, {48, 26, "X-95"}}) {
        CAPTURE(A);
        const auto c = find(mod4, A, r);
        REQUIRE(c.A == A);
        CHECK(c.known);
        CHECK(c.matched_id == id);
        CHECK(c.support >= 20);
    }

    // output ordered by (A, r)
    for (std::size_t i = 1; i < mod4.size(); ++i)
        CHECK(std::make_pair(mod4[i - 1].A, mod4[i - 1].r) <
              std::make_pair(mod4[i].A, mod4[i].r));

    const auto mod3 = mine_congruences(9, 3, 54, 3000, 20, known);
    for (std::int64_t r : {15, 33, 45, 51}) {
        CAPTURE(r);
        const auto c = find(mod3, 54, r);
        REQUIRE(c.A == 54);
        CHECK(c.known);
        CHECK(c.matched_id == "X-96");
    }
}

TEST_CASE("miner finds the proven progressions for k=3") {
    const auto known = expand_all(registry());
    const auto found = mine_congruences(3, 3, 9, 1200, 20, known);
    bool saw_96 = false, saw_20 = false;
    for (const auto& c : found) {
        if (c.A == 9 && c.r == 6) {
            saw_96 = true;
            CHECK(c.known);
            CHECK(c.matched_id == "C-85a");
        }
        if (c.A == 2 && c.r == 0) {
            saw_20 = true;
            CHECK(c.known);
            CHECK(c.matched_id == "C-86a");
        }
    }
    CHECK(saw_96);
    CHECK(saw_20);
}

TEST_CASE("miner respects the parity characterization for k=2") {
    // Mod 2, every surviving progression must avoid all n = t^2 with 3 not
    // dividing t (and n = 0); anything else has an odd coefficient inside.
    const auto found = mine_congruences(2, 2, 4, 1200, 20);
    CHECK(!found.empty());
    for (const auto& c : found) {
        CAPTURE(c.A);
        CAPTURE(c.r);
        CHECK(!c.known);  // no zero claims mod 2 for k=2 in the registry
        for (std::int64_t t = 1; t * t <= 1200; ++t) {
            if (t % 3 == 0) continue;
            const bool on_progression =
                (t * t) % c.A == c.r && (c.r != 0 || t * t > 0);
            CHECK(!on_progression);
        }
    }
}

TEST_CASE("mined candidates survive a disjoint re-test range") {
    // Statistical soundness: mine on arguments <= 3000, re-test every
    // emitted progression on 3001..6000 only.
    const auto found = mine_congruences(2, 4, 48, 3000, 20);
    const auto series = pdk_series(2, 6000, 4);
    for (const auto& c : found) {
        CAPTURE(c.A);
        CAPTURE(c.r);
        std::int64_t retested = 0;
        for (std::int64_t x = c.r; x <= 6000; x += c.A) {
            if (x <= 3000) continue;
            REQUIRE(series.residue(x) == 0);
            ++retested;
        }
        CHECK(retested > 0);
    }
}

TEST_CASE("miner argument validation") {
    CHECK_THROWS_AS(mine_congruences(1, 4, 48, 3000, 20), std::invalid_argument);
    CHECK_THROWS_AS(mine_congruences(2, 1, 48, 3000, 20), std::invalid_argument);
    CHECK_THROWS_AS(mine_congruences(2, 4, 1, 3000, 20), std::invalid_argument);
    CHECK_THROWS_AS(mine_congruences(2, 4, 48, 0, 20), std::invalid_argument);
    CHECK_THROWS_AS(mine_congruences(2, 4, 48, 3000, 5), std::invalid_argument);
}

TEST_CASE("check_conjectures runs exactly the conjectural rows") {
    SeriesCache cache;
    const auto reports = check_conjectures(registry(), 3000, 4, cache);
    CHECK(reports.size() == 9);  // X-91..95 plus four X-96 residues
    for (const auto& rep : reports) {
        CAPTURE(rep.claim_id);
        CHECK(rep.conjectural);
        CHECK(rep.verdict == "consistent");
        CHECK(rep.support >= 20);
    }
}

TEST_CASE("registry rejects malformed rows") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_registry(in, "test");
    };
    CHECK_THROWS_WITH_AS(parse("A-1 | 2 | 2 | 1 | 4 | zero | - | - | proven"),
                         doctest::Contains("test:1"), std::runtime_error);
    CHECK_THROWS(parse("A-1 | 2 | 2 | 1 | 1 | zero | - | - | proven | x"));   // modulus 1
    CHECK_THROWS(parse("A-1 | 2 | 2 | 1 | 4 | what | - | - | proven | x"));   // predicate
    CHECK_THROWS(parse("A-1 | 2 | 2 | 1 | 4 | zero | - | - | maybe | x"));    // status
    CHECK_THROWS(parse("A-1 | 2 | 2 | 1 | 4 | match:nosuch | - | - | proven | x"));
    CHECK_THROWS(parse("A-1 | 2 | 2 | 1 | 4 | match:count_a | - | - | proven | x"));  // arity
    CHECK_THROWS(parse("A-1 | 2 | 2 | 1 | 4 | zero | n<5 | - | proven | x"));  // condition
    CHECK_THROWS(parse(
        "A-1 | 2 | 2 | 1 | 4 | zero | - | - | proven | x\nA-1 | 2 | 2 | 1 | 4 | zero | - | - | proven | x"));

    const auto ok = parse("B-2 | 2^l | 2 | 1 | 4 | zero | n>=1; n%6!=0 | l=1..2 | proven | y");
    REQUIRE(ok.size() == 1);
    CHECK(ok[0].min_index == 1);
    REQUIRE(ok[0].not_divisible.size() == 1);
    CHECK(ok[0].not_divisible[0] == 6);
    CHECK(expand_claim(ok[0]).size() == 2);
}

TEST_CASE("expansion validates instantiated values") {
    auto parse_one = [](const std::string& text) {
        std::istringstream in(text);
        return parse_registry(in, "test")[0];
    };
    // k = 1 is not a meaningful family
    CHECK_THROWS(expand_claim(parse_one("A-1 | 1 | 2 | 1 | 4 | zero | - | - | proven | x")));
    // residue out of range
    CHECK_THROWS(expand_claim(parse_one("A-1 | 2 | 4 | 5 | 4 | zero | - | - | proven | x")));
    // step must be positive
    CHECK_THROWS(expand_claim(parse_one("A-1 | 2 | 0 | 0 | 4 | zero | - | - | proven | x")));
}
