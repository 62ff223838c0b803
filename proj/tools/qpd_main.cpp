// qpd: compute, verify, and mine congruences for partitions with designated
// summands.  Subcommands: series, verify, mine, oracle, identities,
// conjectures.  Exit codes: 0 success, 1 verification failure, 2 usage or
// input error, 3 refuted conjecture.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qpd/claims.hpp"
#include "qpd/counters.hpp"
#include "qpd/expr.hpp"
#include "qpd/ledger.hpp"
#include "qpd/report.hpp"
#include "qpd/series.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefuted = 3;

struct Options {
    std::int64_t precision = -1;  // -1: not set
    std::uint64_t mod = 0;        // 0: not set (exact)
    std::int64_t k = -1;
    std::int64_t n_max = -1;
    std::int64_t a_max = -1;
    std::int64_t min_support = -1;
    int jobs = 1;
    std::string format;  // per-subcommand default when empty
    std::string out;
    std::string registry = std::string(QPD_DATA_DIR) + "/claims.registry";
    std::string ledger = std::string(QPD_DATA_DIR) + "/identities.ledger";
    bool timings = false;
};

void emit(const Options& opt, const std::string& payload) {
    if (opt.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + opt.out + "'");
    f << payload;
    if (!f) throw std::runtime_error("error writing '" + opt.out + "'");
}

std::string require_format(const Options& opt, const std::string& fallback,
                           const std::vector<std::string>& allowed) {
    const std::string fmt = opt.format.empty() ? fallback : opt.format;
    for (const auto& a : allowed)
        if (fmt == a) return fmt;
    throw std::invalid_argument("format '" + fmt + "' not supported here");
}

int cmd_series(const Options& opt, const std::string& expr_text) {
    const std::int64_t N = opt.precision >= 0 ? opt.precision : 20;
    const qpd::OptMod mod = opt.mod ? qpd::OptMod(opt.mod) : qpd::OptMod();
    const qpd::TruncatedSeries s = qpd::evaluate(expr_text, N, mod);
    const std::string fmt = require_format(opt, "plain", {"plain", "csv", "json"});
    if (fmt == "plain") emit(opt, qpd::series_plain(s));
    else if (fmt == "csv") emit(opt, qpd::series_csv(s));
    else emit(opt, qpd::series_json(expr_text, s).dump(2) + "\n");
    return kExitOk;
}

int verification_exit(const std::vector<qpd::VerificationReport>& reports) {
    bool failed = false, refuted = false;
    for (const auto& r : reports) {
        if (r.pass) continue;
        if (r.conjectural) refuted = true;
        else failed = true;
    }
    if (failed) return kExitFail;
    if (refuted) return kExitRefuted;
    return kExitOk;
}

void emit_verification(const Options& opt, const std::vector<qpd::VerificationReport>& reports) {
    const std::string fmt = require_format(opt, "json", {"json", "csv"});
    if (fmt == "json") emit(opt, qpd::verification_reports_json(reports, opt.timings).dump(2) + "\n");
    else emit(opt, qpd::verification_reports_csv(reports, opt.timings));
}

int cmd_verify(const Options& opt, const std::vector<std::string>& ids) {
    auto rows = qpd::load_registry(opt.registry);
    std::vector<qpd::ClaimRow> selected;
    if (ids.size() == 1 && ids[0] == "all") {
        selected = rows;
    } else {
        for (const auto& id : ids) {
            bool found = false;
            for (const auto& row : rows) {
                if (row.id != id) continue;
                selected.push_back(row);
                found = true;
            }
            if (!found) throw std::invalid_argument("unknown claim id '" + id + "'");
        }
    }
    const std::int64_t n_max = opt.n_max >= 0 ? opt.n_max : 1000;
    qpd::SeriesCache cache;
    const auto reports = qpd::verify_claims(qpd::expand_all(selected), n_max, opt.jobs, cache);
    emit_verification(opt, reports);
    return verification_exit(reports);
}

int cmd_conjectures(const Options& opt) {
    auto rows = qpd::load_registry(opt.registry);
    const std::int64_t n_max = opt.n_max >= 0 ? opt.n_max : 3000;
    qpd::SeriesCache cache;
    const auto reports = qpd::check_conjectures(rows, n_max, opt.jobs, cache);
    emit_verification(opt, reports);
    return verification_exit(reports);
}

int cmd_identities(const Options& opt) {
    const auto claims = qpd::load_ledger(opt.ledger);
    std::vector<qpd::IdentityReport> reports;
    bool all_pass = true;
    for (const auto& c : claims) {
        const std::int64_t N =
            opt.precision >= 0 ? opt.precision : (c.modulus ? 1000 : 500);
        reports.push_back(qpd::check_identity(c, N));
        all_pass = all_pass && reports.back().pass;
    }
    const std::string fmt = require_format(opt, "json", {"json", "csv"});
    if (fmt == "json") emit(opt, qpd::identity_reports_json(reports, opt.timings).dump(2) + "\n");
    else emit(opt, qpd::identity_reports_csv(reports, opt.timings));
    return all_pass ? kExitOk : kExitFail;
}

int cmd_mine(const Options& opt) {
    const std::int64_t k = opt.k >= 0 ? opt.k : 2;
    const std::uint64_t m = opt.mod ? opt.mod : 4;
    const std::int64_t a_max = opt.a_max >= 0 ? opt.a_max : 48;
    const std::int64_t n_max = opt.n_max >= 0 ? opt.n_max : 3000;
    const std::int64_t min_support = opt.min_support >= 0 ? opt.min_support : 20;
    const auto known = qpd::expand_all(qpd::load_registry(opt.registry));
    const auto candidates = qpd::mine_congruences(k, m, a_max, n_max, min_support, known);
    const std::string fmt = require_format(opt, "csv", {"csv", "json"});
    if (fmt == "csv") emit(opt, qpd::mined_csv(candidates));
    else emit(opt, qpd::mined_json(candidates).dump(2) + "\n");
    return kExitOk;
}

int cmd_oracle(const Options& opt, const std::string& kind,
               const std::vector<std::int64_t>& args) {
    qpd::Integer value;
    if (kind == "pd") {
        if (args.size() != 1) throw std::invalid_argument("oracle pd takes one argument: n");
        value = qpd::counters::oracle_pd(args[0]);
    } else if (kind == "pdk") {
        if (args.size() != 2) throw std::invalid_argument("oracle pdk takes two arguments: k n");
        value = qpd::counters::oracle_pdk(args[0], args[1]);
    } else if (kind == "oddmult") {
        if (args.size() != 1) throw std::invalid_argument("oracle oddmult takes one argument: n");
        value = qpd::counters::odd_multiplicity_count(args[0]);
    } else {
        throw std::invalid_argument("unknown oracle '" + kind + "' (expected pd, pdk, or oddmult)");
    }
    emit(opt, value.get_str() + "\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partitions with designated summands: series, congruence "
                 "verification, and progression mining"};
    app.require_subcommand(1);

    Options opt;
    app.set_config("--config", "", "key=value config file (flags take precedence)")
        ->envname("QPD_CONFIG");
    app.add_option("-N,--precision", opt.precision, "series truncation order")
        ->check(CLI::NonNegativeNumber);
    app.add_option("-m,--mod", opt.mod, "compute in the modular lane (mod >= 2)")
        ->check(CLI::Range(std::uint64_t{2}, (std::uint64_t{1} << 32) - 1));
    app.add_option("-k", opt.k, "family index k (0 = unrestricted)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--n-max", opt.n_max, "largest argument to test")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--a-max", opt.a_max, "largest progression step to scan")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--min-support", opt.min_support, "minimum tested indices per candidate")
        ->check(CLI::NonNegativeNumber);
    app.add_option("-j,--jobs", opt.jobs, "worker threads (default 1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", opt.format, "output format: plain, csv, or json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    app.add_option("--out", opt.out, "write output to a file instead of stdout");
    app.add_option("--registry", opt.registry, "claim registry path");
    app.add_option("--ledger", opt.ledger, "identity ledger path");
    app.add_flag("--timings", opt.timings, "include elapsed_ms in reports");

    std::string expr_text;
    auto* series = app.add_subcommand("series", "print coefficients of an expression");
    series->add_option("expr", expr_text, "series expression, e.g. \"pd_2\"")->required();

    std::vector<std::string> verify_ids;
    auto* verify = app.add_subcommand("verify", "check registry claims over a range");
    verify->add_option("ids", verify_ids, "claim ids, or \"all\"")->required();

    auto* mine = app.add_subcommand("mine", "scan progressions for zero congruences");
    auto* identities = app.add_subcommand("identities", "check every ledger identity");
    auto* conjectures = app.add_subcommand("conjectures", "re-test conjectural claims");

    std::string oracle_kind;
    std::vector<std::int64_t> oracle_args;
    auto* oracle = app.add_subcommand("oracle", "brute-force reference values");
    oracle->add_option("kind", oracle_kind, "pd, pdk, or oddmult")->required();
    oracle->add_option("args", oracle_args, "k (pdk only) and n");

    for (auto* sub : {series, verify, mine, identities, conjectures, oracle})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(series)) return cmd_series(opt, expr_text);
        if (app.got_subcommand(verify)) return cmd_verify(opt, verify_ids);
        if (app.got_subcommand(mine)) return cmd_mine(opt);
        if (app.got_subcommand(identities)) return cmd_identities(opt);
        if (app.got_subcommand(conjectures)) return cmd_conjectures(opt);
        if (app.got_subcommand(oracle)) return cmd_oracle(opt, oracle_kind, oracle_args);
    } catch (const std::exception& e) {
        std::cerr << "qpd: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
