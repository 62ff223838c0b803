#include "qpd/report.hpp"

#include <sstream>

namespace qpd {

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::string series_plain(const TruncatedSeries& s) {
    std::ostringstream out;
    for (std::int64_t n = 0; n <= s.precision(); ++n)
        out << n << ',' << s.coeff_str(n) << '\n';
    return out.str();
}

std::string series_csv(const TruncatedSeries& s) {
    return "n,coefficient\n" + series_plain(s);
}

Json series_json(const std::string& expr_text, const TruncatedSeries& s) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["kind"] = "series";
    j["expr"] = expr_text;
    j["precision"] = s.precision();
    if (s.modular()) j["modulus"] = *s.modulus();
    else j["modulus"] = nullptr;
    Json coeffs = Json::array();
    for (std::int64_t n = 0; n <= s.precision(); ++n) coeffs.push_back(s.coeff_str(n));
    j["coefficients"] = std::move(coeffs);
    return j;
}

Json identity_reports_json(const std::vector<IdentityReport>& reports, bool timings) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["kind"] = "identities";
    std::int64_t passed = 0;
    Json rows = Json::array();
    for (const auto& r : reports) {
        Json row;
        row["id"] = r.id;
        if (r.modulus) row["modulus"] = *r.modulus;
        else row["modulus"] = nullptr;
        row["status"] = to_string(r.status);
        row["pass"] = r.pass;
        row["precision"] = r.precision;
        if (!r.pass) {
            row["first_diff"] = r.first_diff;
            row["lhs_value"] = r.lhs_value;
            row["rhs_value"] = r.rhs_value;
        }
        if (timings) row["elapsed_ms"] = r.elapsed_ms;
        if (r.pass) ++passed;
        rows.push_back(std::move(row));
    }
    j["count"] = reports.size();
    j["pass_count"] = passed;
    j["reports"] = std::move(rows);
    return j;
}

std::string identity_reports_csv(const std::vector<IdentityReport>& reports, bool timings) {
    std::ostringstream out;
    out << "id,modulus,status,pass,precision,first_diff,lhs_value,rhs_value";
    if (timings) out << ",elapsed_ms";
    out << '\n';
    for (const auto& r : reports) {
        out << csv_field(r.id) << ',';
        if (r.modulus) out << *r.modulus;
        out << ',' << to_string(r.status) << ',' << (r.pass ? "true" : "false") << ','
            << r.precision << ',';
        if (!r.pass)
            out << r.first_diff << ',' << csv_field(r.lhs_value) << ','
                << csv_field(r.rhs_value);
        else
            out << ",,";
        if (timings) out << ',' << r.elapsed_ms;
        out << '\n';
    }
    return out.str();
}

Json verification_reports_json(const std::vector<VerificationReport>& reports, bool timings) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["kind"] = "verification";
    std::int64_t passed = 0;
    Json rows = Json::array();
    for (const auto& r : reports) {
        Json row;
        row["id"] = r.claim_id;
        row["params"] = r.param_label;
        row["k"] = r.k;
        row["A"] = r.A;
        row["r"] = r.r;
        row["modulus"] = r.modulus;
        row["status"] = r.conjectural ? "conjectural" : "proven";
        row["verdict"] = r.verdict;
        row["index_max"] = r.index_max;
        row["argument_max"] = r.argument_max;
        row["support"] = r.support;
        row["failure_count"] = r.failure_count;
        Json fails = Json::array();
        for (const auto& f : r.failures) {
            Json fj;
            fj["n"] = f.n;
            fj["argument"] = f.argument;
            fj["expected"] = f.expected;
            fj["actual"] = f.actual;
            fails.push_back(std::move(fj));
        }
        row["failures"] = std::move(fails);
        if (timings) row["elapsed_ms"] = r.elapsed_ms;
        if (r.pass) ++passed;
        rows.push_back(std::move(row));
    }
    j["count"] = reports.size();
    j["pass_count"] = passed;
    j["reports"] = std::move(rows);
    return j;
}

std::string verification_reports_csv(const std::vector<VerificationReport>& reports,
                                     bool timings) {
    std::ostringstream out;
    out << "id,params,k,A,r,modulus,status,verdict,support,failure_count,first_failure_argument";
    if (timings) out << ",elapsed_ms";
    out << '\n';
    for (const auto& r : reports) {
        out << csv_field(r.claim_id) << ',' << csv_field(r.param_label) << ',' << r.k << ','
            << r.A << ',' << r.r << ',' << r.modulus << ','
            << (r.conjectural ? "conjectural" : "proven") << ',' << r.verdict << ','
            << r.support << ',' << r.failure_count << ',';
        if (!r.failures.empty()) out << r.failures.front().argument;
        if (timings) out << ',' << r.elapsed_ms;
        out << '\n';
    }
    return out.str();
}

Json mined_json(const std::vector<MinedCandidate>& candidates) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["kind"] = "mined";
    Json rows = Json::array();
    for (const auto& c : candidates) {
        Json row;
        row["k"] = c.k;
        row["m"] = c.m;
        row["A"] = c.A;
        row["r"] = c.r;
        row["support"] = c.support;
        row["status"] = c.known ? "known" : "conjectural";
        if (c.known) row["matched_id"] = c.matched_id;
        rows.push_back(std::move(row));
    }
    j["count"] = candidates.size();
    j["candidates"] = std::move(rows);
    return j;
}

std::string mined_csv(const std::vector<MinedCandidate>& candidates) {
    std::ostringstream out;
    out << "k,m,A,r,support,status,matched_id\n";
    for (const auto& c : candidates) {
        out << c.k << ',' << c.m << ',' << c.A << ',' << c.r << ',' << c.support << ','
            << (c.known ? "known" : "conjectural") << ',' << csv_field(c.matched_id) << '\n';
    }
    return out.str();
}

}  // namespace qpd
