#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "qpd/claims.hpp"
#include "qpd/ledger.hpp"
#include "qpd/series.hpp"

namespace qpd {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

/// RFC-4180 quoting: fields containing commas, quotes, or newlines are
/// wrapped in double quotes with embedded quotes doubled.
std::string csv_field(const std::string& value);

/// Coefficients as "n,c" lines, one per coefficient 0..precision.
std::string series_plain(const TruncatedSeries& s);
/// Same rows under an "n,coefficient" header.
std::string series_csv(const TruncatedSeries& s);
Json series_json(const std::string& expr_text, const TruncatedSeries& s);

Json identity_reports_json(const std::vector<IdentityReport>& reports, bool timings);
std::string identity_reports_csv(const std::vector<IdentityReport>& reports, bool timings);

Json verification_reports_json(const std::vector<VerificationReport>& reports, bool timings);
std::string verification_reports_csv(const std::vector<VerificationReport>& reports,
                                     bool timings);

Json mined_json(const std::vector<MinedCandidate>& candidates);
std::string mined_csv(const std::vector<MinedCandidate>& candidates);

}  // namespace qpd
