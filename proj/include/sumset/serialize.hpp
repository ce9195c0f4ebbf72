#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sumset/coloring.hpp"
#include "sumset/oracle.hpp"
#include "sumset/phi.hpp"
#include "sumset/stability.hpp"
#include "sumset/structure.hpp"

namespace sumset {

// Field order is fixed so identical inputs serialize byte-identically.
using json = nlohmann::ordered_json;

// Raised when the oracle declines to answer (modulus cap or node
// budget); callers must not treat this as a value.
class OracleRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kCertificateSchemaVersion = "1";

/// "0,1,4" -> members. Rejects malformed numbers, out-of-range residues
/// and duplicates with a precise message (std::invalid_argument).
std::vector<int> parse_set_literal(const std::string& literal, int modulus);

json coloring_to_json(const Coloring& coloring);
Coloring coloring_from_json(const json& j);

json evaluation_to_json(const Evaluation& evaluation);
json structure_to_json(const StructureTag& tag);
json phi_result_to_json(const PhiResult& result, bool include_witnesses);
json stability_to_json(const StabilityReport& report);

// A machine-checkable record of one command's answer: the problem, the
// result, an optional witness coloring, and how the result was obtained.
struct Certificate {
  std::string schema_version = kCertificateSchemaVersion;
  std::string command;  // phi | sumset | construct | oracle | stability
  json problem;
  json result;
  std::optional<json> witness;
  std::optional<json> secondary_witness;
  json provenance;
};

json certificate_to_json(const Certificate& certificate);
Certificate certificate_from_json(const json& j);

/// Recomputes the claim: witnesses are re-evaluated through the engine
/// and formula/report fields recomputed from the problem. Returns false
/// (with a reason) when anything disagrees.
bool revalidate(const Certificate& certificate, std::string* reason = nullptr);

// Certificate builders shared by the CLI and the tests.

struct PhiOptions {
  bool use_oracle = false;
  bool include_witness = false;
  std::uint64_t max_nodes = kDefaultNodeBudget;
  int cap = kDefaultOracleCap;
  bool timing = false;
};

Certificate phi_certificate(int n, int k, const PhiOptions& options);
Certificate sumset_certificate(const std::vector<int>& members, int modulus);
Certificate construct_certificate(int n, int k, const std::string& method);
Certificate oracle_certificate(int n, int k, const PhiOptions& options,
                               std::optional<std::size_t> enumerate_limit);
Certificate stability_certificate(const std::vector<int>& members, int modulus,
                                  int subgroup_size, std::optional<int> slack);

// One row of the bounds table over 2 <= k <= n <= nmax.
struct TableRow {
  int n, k, m, p_n, q_nk, f_nq, lower, upper;
  Regime regime;
  std::optional<int> oracle;
};

/// Throws on oracle refusal so no partial table is ever emitted.
std::vector<TableRow> phi_table(int nmax, bool with_oracle,
                                std::uint64_t max_nodes = kDefaultNodeBudget,
                                int cap = kDefaultOracleCap);

std::string table_csv(const std::vector<TableRow>& rows);
std::string table_json_lines(const std::vector<TableRow>& rows);

}  // namespace sumset
