// Identity registry and verification drivers: every checked identity has an
// id, integer/partition parameters and a structured report.

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace deltaq {

enum class Status { equal, mismatch, skipped };
std::string to_string(Status s);

/// The first coefficient on which the two sides differ.
struct Witness {
  std::string partition;  ///< Schur index, "[]" for scalar identities
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  std::string identity_id;
  std::map<std::string, std::string> params;
  Status status = Status::skipped;
  std::string lhs_render;  ///< SymFunc grammar; scalars render as s[]*(c)
  std::string rhs_render;
  std::optional<Witness> witness;  ///< present iff status == mismatch
  long elapsed_ms = 0;
};

/// One JSON object per line, fields named as in IdentityReport.
std::string to_json_line(const IdentityReport& r);
IdentityReport from_json_line(std::string_view line);

/// Raised for identity ids or suite names that are not registered.
class UnknownIdentityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Params = std::map<std::string, std::string>;

/// Parses "k=1,m=3,n=5"; brackets protect commas, as in "nu=[2,1],n=4".
Params parse_params(std::string_view text);

/// The terminating q-Vandermonde consequence; skipped unless k+2 <= l <= m+1.
IdentityReport check_prop31(int m, int k, int l);
/// The same identity after m -> m-1+l, for any m, k, l >= 0.
IdentityReport check_cor32(int m, int k, int l);

enum class Prop33Part { a, b };
/// Remmel's two coefficient systems at a single l. With the hypothesis
/// enforced, cases outside k+2 <= l <= m+1 <= n are skipped.
IdentityReport check_prop33(Prop33Part part, int k, int m, int n, int l, bool enforce_hypothesis = true);

/// Registered identity ids in registry order.
const std::vector<std::string>& identity_ids();
/// Runs one registered identity. Throws UnknownIdentityError for an unknown
/// id and std::invalid_argument for missing or malformed parameters.
IdentityReport run_identity(const std::string& id, const Params& params);

struct Check {
  std::string id;
  Params params;
};

/// Runs the checks and returns reports sorted by (id, params).
std::vector<IdentityReport> run_checks(const std::vector<Check>& checks);

/// Suite names: every identity id (its own sweep), plus "hook", "remmel",
/// "t0-delta", "q0-delta" and "all".
std::vector<std::string> suite_names();
/// The parameter sweep of a suite, bounded by nmax.
std::vector<Check> suite_checks(const std::string& name, int nmax);
std::vector<IdentityReport> run_suite(const std::string& name, int nmax);

struct SuiteSummary {
  int equal = 0;
  int mismatch = 0;
  int skipped = 0;
};
SuiteSummary summarize(const std::vector<IdentityReport>& reports);

}  // namespace deltaq
