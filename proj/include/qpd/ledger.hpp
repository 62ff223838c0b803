#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qpd/expr.hpp"

namespace qpd {

enum class ClaimStatus { Stated, Imported, Conjectural };

std::string to_string(ClaimStatus s);
ClaimStatus claim_status_from_string(const std::string& s);

/// One checkable identity: lhs == rhs as truncated series, coefficientwise,
/// optionally modulo a fixed modulus (absent modulus = exact equality in Z).
struct IdentityClaim {
    std::string id;
    OptMod modulus;  // empty = exact
    std::string lhs_text, rhs_text;
    ExprPtr lhs, rhs;
    ClaimStatus status = ClaimStatus::Stated;
    std::string source;
};

struct IdentityReport {
    std::string id;
    OptMod modulus;
    ClaimStatus status = ClaimStatus::Stated;
    bool pass = false;
    std::int64_t precision = 0;
    // First exponent where the sides disagree; -1 when they agree through
    // the checked precision.
    std::int64_t first_diff = -1;
    std::string lhs_value, rhs_value;  // coefficients at first_diff
    double elapsed_ms = 0.0;
};

/// Line format: id | modulus | lhs | rhs | status | source
/// where modulus is a decimal integer >= 2 or "-" for exact, and status is
/// stated | imported | conjectural.  Blank lines and lines whose first
/// non-space character is '#' are skipped.  Errors carry the line number.
std::vector<IdentityClaim> parse_ledger(std::istream& in, const std::string& name);
std::vector<IdentityClaim> load_ledger(const std::string& path);

/// Evaluates both sides at precision N under the claim's modulus and compares
/// coefficientwise.  Evaluation errors are rethrown with the claim id attached.
IdentityReport check_identity(const IdentityClaim& claim, std::int64_t N);

}  // namespace qpd
