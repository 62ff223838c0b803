#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qpd/integer.hpp"
#include "qpd/series.hpp"

namespace qpd {

enum class PredicateKind { Zero, Match, ClosedForm };

/// One registry line; families carry free parameters that expand to
/// concrete instances.  Numeric fields are integer expressions over the
/// declared parameters (grammar: + - * ^ ( ) integers identifiers).
struct ClaimRow {
    std::string id;
    std::string k_text;               // part-size family; "0" = unrestricted
    std::string A_text;               // progression step
    std::vector<std::string> r_texts; // one entry per residue
    std::uint64_t modulus = 2;
    PredicateKind predicate = PredicateKind::Zero;
    std::string predicate_name;                // Match / ClosedForm only
    std::vector<std::string> predicate_args;   // extra counter arguments
    std::int64_t min_index = 0;                // from "n>=c"
    std::vector<std::int64_t> not_divisible;   // from "n%D!=0"
    // Ordered (name, spec); spec is "lo..hi", "v1,v2,...", "nonres(M)"
    // or "nonform(M)", where subexpressions may use earlier parameters.
    std::vector<std::pair<std::string, std::string>> params;
    bool conjectural = false;
    std::string source;
};

/// A fully instantiated congruence statement:
///   coefficient (A n + r) of the family-k series == predicate(n)  (mod m)
/// for all indices n >= min_index with no forbidden divisor dividing n.
struct ClaimInstance {
    std::string claim_id;
    std::string param_label;  // "l=3,s=2" or "" for parameter-free claims
    std::int64_t k = 0;
    std::int64_t A = 1;
    std::int64_t r = 0;
    std::uint64_t modulus = 2;
    PredicateKind predicate = PredicateKind::Zero;
    std::string predicate_name;
    std::vector<std::int64_t> predicate_arg_values;
    std::int64_t min_index = 0;
    std::vector<std::int64_t> not_divisible;
    bool conjectural = false;
};

struct ClaimFailure {
    std::int64_t n = 0;         // progression index
    std::int64_t argument = 0;  // A n + r
    std::string expected, actual;
};

struct VerificationReport {
    std::string claim_id;
    std::string param_label;
    std::int64_t k = 0, A = 1, r = 0;
    std::uint64_t modulus = 2;
    bool conjectural = false;
    std::int64_t index_max = -1;    // highest progression index walked
    std::int64_t argument_max = 0;  // A * index_max + r
    std::int64_t support = 0;       // indices compared after side conditions
    std::vector<ClaimFailure> failures;  // capped at kMaxRecordedFailures
    std::int64_t failure_count = 0;
    bool pass = false;  // failure_count == 0
    // verified (proven, pass) | failed (proven, fail) |
    // consistent (conjectural, pass) | refuted (conjectural, fail)
    std::string verdict;
    double elapsed_ms = 0.0;

    static constexpr std::int64_t kMaxRecordedFailures = 25;
};

/// Line format:
///   id | k | A | r | mod | predicate | conditions | params | status | source
/// predicate: zero | match:<counter>[(arg,...)] | closed_form:<name>
/// conditions: "-" or ";"-separated "n>=c" / "n%D!=0" entries
/// params: "-" or ";"-separated "<name>=<spec>" entries
/// status: proven | conjectural
std::vector<ClaimRow> parse_registry(std::istream& in, const std::string& name);
std::vector<ClaimRow> load_registry(const std::string& path);

/// Nested expansion of the parameter lists, residues varying innermost.
std::vector<ClaimInstance> expand_claim(const ClaimRow& row);
std::vector<ClaimInstance> expand_all(const std::vector<ClaimRow>& rows);

/// Integer expressions used by registry fields.
std::int64_t eval_int_expr(const std::string& text,
                           const std::vector<std::pair<std::string, std::int64_t>>& vars);

/// Cache of the generating-function series keyed by (k, modulus); entries are
/// recomputed when a larger precision is requested.  Thread-safe.
class SeriesCache {
  public:
    /// Returns a copy sized at least to `precision`.
    TruncatedSeries get(std::int64_t k, OptMod modulus, std::int64_t precision);

  private:
    std::map<std::pair<std::int64_t, std::uint64_t>, TruncatedSeries> cache_;
    std::mutex mu_;
};

/// Walks indices 0..index_max of the instance's progression against the
/// supplied series, which must cover A*index_max + r; throws std::runtime_error
/// ("insufficient precision") otherwise rather than silently truncating.
VerificationReport verify_claim_with_series(const ClaimInstance& inst,
                                            std::int64_t index_max,
                                            const TruncatedSeries& series);

VerificationReport verify_claim(const ClaimInstance& inst, std::int64_t index_max,
                                SeriesCache& cache);

/// Verifies every instance over arguments <= argument_max (per-instance
/// index_max = floor((argument_max - r)/A)).  Series are precomputed with up
/// to `jobs` worker threads; reports come back in input order regardless of
/// scheduling.
std::vector<VerificationReport> verify_claims(const std::vector<ClaimInstance>& insts,
                                              std::int64_t argument_max, int jobs,
                                              SeriesCache& cache);

/// PD_k(n) mod 2 for n = 0..N via the square recurrence
///   PD_k(n) = [n = 0 or n = k m^2, 3 not| m] + sum_{l>=1, 3 not| l} PD_k(n-l^2)
/// in O(N^{3/2}) bit operations; k >= 2.
std::vector<std::uint8_t> recurrence_pdk_mod2(std::int64_t k, std::int64_t N);

struct MinedCandidate {
    std::int64_t k = 0;
    std::uint64_t m = 2;
    std::int64_t A = 1;
    std::int64_t r = 0;
    std::int64_t support = 0;
    bool known = false;      // implied by a supplied zero claim
    std::string matched_id;  // id of the implying claim when known
};

/// Scans every progression (A, r) with A <= A_max for PD_k(A n + r) == 0
/// mod m over arguments <= n_max (skipping n = 0 when r = 0, since
/// PD_k(0) = 1).  Requires k >= 2, m >= 2, A_max >= 2, min_support >= 10.
/// Candidates need at least min_support tested indices.
/// `known` are existing ZERO instances used to label rediscoveries: a
/// candidate is known when some instance with the same k and modulus has
/// A' | A and r == r' (mod A').  Output is ordered by (A, r).
std::vector<MinedCandidate> mine_congruences(std::int64_t k, std::uint64_t m,
                                             std::int64_t A_max, std::int64_t n_max,
                                             std::int64_t min_support,
                                             const std::vector<ClaimInstance>& known = {});

/// Runs the conjectural instances only.
std::vector<VerificationReport> check_conjectures(const std::vector<ClaimRow>& rows,
                                                  std::int64_t argument_max, int jobs,
                                                  SeriesCache& cache);

}  // namespace qpd
