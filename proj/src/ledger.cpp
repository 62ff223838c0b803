#include "qpd/ledger.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qpd {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void line_error(const std::string& name, std::size_t line, const std::string& msg) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace

std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Stated: return "stated";
        case ClaimStatus::Imported: return "imported";
        case ClaimStatus::Conjectural: return "conjectural";
    }
    throw std::logic_error("bad ClaimStatus");
}

ClaimStatus claim_status_from_string(const std::string& s) {
    if (s == "stated") return ClaimStatus::Stated;
    if (s == "imported") return ClaimStatus::Imported;
    if (s == "conjectural") return ClaimStatus::Conjectural;
    throw std::runtime_error("unknown status '" + s + "'");
}

std::vector<IdentityClaim> parse_ledger(std::istream& in, const std::string& name) {
    std::vector<IdentityClaim> out;
    std::set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;

        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t bar = t.find('|', start);
            if (bar == std::string::npos) {
                fields.push_back(trim(t.substr(start)));
                break;
            }
            fields.push_back(trim(t.substr(start, bar - start)));
            start = bar + 1;
        }
        if (fields.size() != 6)
            line_error(name, lineno,
                       "expected 6 '|'-separated fields, got " + std::to_string(fields.size()));

        IdentityClaim c;
        c.id = fields[0];
        if (c.id.empty()) line_error(name, lineno, "empty id");
        if (!seen.insert(c.id).second) line_error(name, lineno, "duplicate id '" + c.id + "'");

        if (fields[1] != "-") {
            std::uint64_t m = 0;
            try {
                std::size_t used = 0;
                m = std::stoull(fields[1], &used);
                if (used != fields[1].size()) throw std::invalid_argument("trailing junk");
            } catch (const std::exception&) {
                line_error(name, lineno, "bad modulus '" + fields[1] + "'");
            }
            if (m < 2 || m >= (std::uint64_t(1) << 32))
                line_error(name, lineno, "modulus out of range: " + fields[1]);
            c.modulus = m;
        }

        c.lhs_text = fields[2];
        c.rhs_text = fields[3];
        try {
            c.lhs = parse_expr(c.lhs_text);
            c.rhs = parse_expr(c.rhs_text);
        } catch (const ParseError& e) {
            line_error(name, lineno, std::string("parse error in '") + c.id + "': " + e.what());
        }

        try {
            c.status = claim_status_from_string(fields[4]);
        } catch (const std::exception& e) {
            line_error(name, lineno, e.what());
        }
        c.source = fields[5];
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<IdentityClaim> load_ledger(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ledger file: " + path);
    return parse_ledger(in, path);
}

IdentityReport check_identity(const IdentityClaim& claim, std::int64_t N) {
    if (N < 1) throw std::invalid_argument("check_identity: N must be >= 1");
    IdentityReport rep;
    rep.id = claim.id;
    rep.modulus = claim.modulus;
    rep.status = claim.status;
    rep.precision = N;
    const auto t0 = std::chrono::steady_clock::now();
    TruncatedSeries lhs = [&] {
        try {
            return evaluate(claim.lhs, N, claim.modulus);
        } catch (const std::exception& e) {
            throw std::runtime_error(claim.id + ": lhs: " + e.what());
        }
    }();
    TruncatedSeries rhs = [&] {
        try {
            return evaluate(claim.rhs, N, claim.modulus);
        } catch (const std::exception& e) {
            throw std::runtime_error(claim.id + ": rhs: " + e.what());
        }
    }();
    const auto diff = TruncatedSeries::first_difference(lhs, rhs);
    if (diff) {
        rep.pass = false;
        rep.first_diff = *diff;
        rep.lhs_value = lhs.coeff_str(*diff);
        rep.rhs_value = rhs.coeff_str(*diff);
    } else {
        rep.pass = true;
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace qpd
