#include "sumset/serialize.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "sumset/arith.hpp"

namespace sumset {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

}  // namespace

std::vector<int> parse_set_literal(const std::string& literal, int modulus) {
  std::vector<int> members;
  std::vector<bool> seen(modulus, false);
  std::stringstream stream(literal);
  std::string token;
  while (std::getline(stream, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw std::invalid_argument("set literal: empty entry in '" + literal + "'");
    }
    token = token.substr(first, last - first + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("set literal: '" + token + "' is not an integer");
    }
    if (used != token.size()) {
      throw std::invalid_argument("set literal: '" + token + "' is not an integer");
    }
    if (value < 0 || value >= modulus) {
      throw std::invalid_argument("set literal: residue " + token +
                                  " out of range [0, " + std::to_string(modulus) +
                                  ")");
    }
    if (seen[value]) {
      throw std::invalid_argument("set literal: duplicate residue " + token);
    }
    seen[value] = true;
    members.push_back(value);
  }
  return members;
}

json coloring_to_json(const Coloring& coloring) {
  json classes = json::array();
  for (const auto& cls : coloring.classes()) classes.push_back(cls.members());
  return json{{"n", coloring.modulus()},
              {"k", coloring.num_classes()},
              {"classes", std::move(classes)}};
}

Coloring coloring_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  const int k = j.at("k").get<int>();
  std::vector<std::vector<int>> classes;
  for (const auto& cls : j.at("classes")) {
    classes.push_back(cls.get<std::vector<int>>());
  }
  return Coloring::from_classes(n, k, classes);
}

json evaluation_to_json(const Evaluation& evaluation) {
  return json{{"per_class_sumset_sizes", evaluation.class_sumset_sizes},
              {"value", evaluation.value},
              {"argmax_class", evaluation.argmax_class}};
}

json structure_to_json(const StructureTag& tag) {
  json j{{"kind", structure_kind_name(tag.kind)}};
  switch (tag.kind) {
    case StructureKind::singleton:
      j["element"] = tag.start;
      break;
    case StructureKind::block:
    case StructureKind::arc:
      j["start"] = tag.start;
      j["length"] = tag.length;
      break;
    case StructureKind::arithmetic_progression:
      j["start"] = tag.start;
      j["difference"] = tag.difference;
      j["length"] = tag.length;
      break;
    case StructureKind::coset_subset:
      j["subgroup_size"] = tag.subgroup_size;
      j["coset_representative"] = tag.coset_representative;
      break;
    case StructureKind::empty:
    case StructureKind::unstructured:
      break;
  }
  return j;
}

json phi_result_to_json(const PhiResult& result, bool include_witnesses) {
  json j{{"lower", result.lower}, {"upper", result.upper}};
  if (result.exact) {
    j["exact"] = *result.exact;
  } else {
    j["exact"] = nullptr;
  }
  j["regime"] = regime_name(result.regime);
  if (include_witnesses && result.witness) {
    j["witness"] = coloring_to_json(*result.witness);
    if (result.secondary_witness) {
      j["secondary_witness"] = coloring_to_json(*result.secondary_witness);
    }
  }
  return j;
}

json stability_to_json(const StabilityReport& report) {
  json j{{"subgroup_size", report.subgroup_size},
         {"subgroup_least_prime", report.subgroup_least_prime},
         {"heaviest_size", report.heaviest_size},
         {"tie_count", report.tie_count},
         {"other_occupied", report.other_occupied},
         {"within_coset_bound", report.within_coset_bound},
         {"cross_bound", report.cross_bound},
         {"internal_bound", report.internal_bound},
         {"combined_bound", report.combined_bound},
         {"sumset_size", report.sumset_size},
         {"cross_tight", report.cross_tight},
         {"internal_tight", report.internal_tight},
         {"combined_tight", report.combined_tight}};
  if (report.slack) {
    j["slack"] = *report.slack;
    j["threshold_applicable"] = *report.threshold_applicable;
    if (report.other_occupied_cap) j["other_occupied_cap"] = *report.other_occupied_cap;
    if (report.concentrated) j["concentrated"] = *report.concentrated;
  }
  return j;
}

json certificate_to_json(const Certificate& certificate) {
  json j{{"schema_version", certificate.schema_version},
         {"command", certificate.command},
         {"problem", certificate.problem},
         {"result", certificate.result}};
  if (certificate.witness) j["witness"] = *certificate.witness;
  if (certificate.secondary_witness) {
    j["secondary_witness"] = *certificate.secondary_witness;
  }
  j["provenance"] = certificate.provenance;
  return j;
}

Certificate certificate_from_json(const json& j) {
  Certificate certificate;
  certificate.schema_version = j.at("schema_version").get<std::string>();
  if (certificate.schema_version != kCertificateSchemaVersion) {
    throw std::invalid_argument("certificate: unsupported schema version " +
                                certificate.schema_version);
  }
  certificate.command = j.at("command").get<std::string>();
  certificate.problem = j.at("problem");
  certificate.result = j.at("result");
  if (j.contains("witness")) certificate.witness = j.at("witness");
  if (j.contains("secondary_witness")) {
    certificate.secondary_witness = j.at("secondary_witness");
  }
  certificate.provenance = j.value("provenance", json::object());
  return certificate;
}

Certificate phi_certificate(int n, int k, const PhiOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Certificate certificate;
  certificate.command = "phi";
  certificate.problem = json{{"n", n}, {"k", k}};

  PhiResult formula = phi_exact(n, k);
  json result{{"lower", formula.lower}, {"upper", formula.upper}};
  json provenance;
  if (options.use_oracle) {
    OracleResult oracle = brute_force_phi(n, k, options.max_nodes, options.cap);
    if (oracle.outcome == OracleOutcome::cap_exceeded) {
      throw OracleRefusal("oracle: modulus " + std::to_string(n) +
                          " beyond cap " + std::to_string(options.cap));
    }
    if (oracle.outcome == OracleOutcome::budget_exhausted) {
      throw OracleRefusal("oracle: node budget exhausted after " +
                          std::to_string(oracle.nodes) + " nodes");
    }
    result["exact"] = oracle.value;
    result["regime"] = regime_name(formula.regime);
    provenance = json{{"method", "oracle"}, {"nodes", oracle.nodes}};
    if (options.include_witness && oracle.witness) {
      certificate.witness = coloring_to_json(*oracle.witness);
    }
  } else {
    result["exact"] = formula.exact ? json(*formula.exact) : json(nullptr);
    result["regime"] = regime_name(formula.regime);
    provenance = json{{"method", "formula"}, {"regime", regime_name(formula.regime)}};
    if (options.include_witness && formula.witness) {
      certificate.witness = coloring_to_json(*formula.witness);
      if (formula.secondary_witness) {
        certificate.secondary_witness = coloring_to_json(*formula.secondary_witness);
      }
    }
  }
  if (options.timing) provenance["wall_ms"] = elapsed_ms(start);
  certificate.result = std::move(result);
  certificate.provenance = std::move(provenance);
  return certificate;
}

Certificate sumset_certificate(const std::vector<int>& members, int modulus) {
  Certificate certificate;
  certificate.command = "sumset";
  certificate.problem = json{{"n", modulus}, {"set", members}};
  const ResidueSet set = ResidueSet::from_members(modulus, members);
  const ResidueSet sums = restricted_sumset(set);
  const StructureTag tag = classify(set, is_prime(modulus));
  certificate.result = json{{"sumset", sums.members()},
                            {"size", sums.size()},
                            {"structure", structure_to_json(tag)}};
  certificate.provenance = json{{"method", "enumeration"}};
  return certificate;
}

Certificate construct_certificate(int n, int k, const std::string& method) {
  Certificate certificate;
  certificate.command = "construct";
  certificate.problem = json{{"n", n}, {"k", k}, {"method", method}};
  std::optional<ConstructionMethod> winner;
  Coloring coloring = [&] {
    if (method == "block") return block_partition(n, k);
    if (method == "coset") return coset_partition(n, k);
    if (method == "best") {
      Construction best = best_construction(n, k);
      winner = best.method;
      return std::move(best.coloring);
    }
    throw std::invalid_argument("construct: unknown method '" + method +
                                "' (expected block, coset or best)");
  }();
  Evaluation evaluation = evaluate(coloring);
  json result = evaluation_to_json(evaluation);
  if (winner) result["construction"] = construction_method_name(*winner);
  certificate.result = std::move(result);
  certificate.witness = coloring_to_json(coloring);
  certificate.provenance = json{{"method", "construction"}};
  return certificate;
}

Certificate oracle_certificate(int n, int k, const PhiOptions& options,
                               std::optional<std::size_t> enumerate_limit) {
  const auto start = std::chrono::steady_clock::now();
  Certificate certificate;
  certificate.command = "oracle";
  certificate.problem = json{{"n", n}, {"k", k}};

  if (enumerate_limit) {
    EnumerateResult enumeration =
        enumerate_optimal(n, k, *enumerate_limit, options.max_nodes, options.cap);
    if (enumeration.outcome == OracleOutcome::cap_exceeded) {
      throw OracleRefusal("oracle: modulus " + std::to_string(n) + " beyond cap " +
                          std::to_string(options.cap));
    }
    if (enumeration.outcome == OracleOutcome::budget_exhausted) {
      throw OracleRefusal("oracle: node budget exhausted after " +
                          std::to_string(enumeration.nodes) + " nodes");
    }
    json colorings = json::array();
    for (const auto& coloring : enumeration.colorings) {
      colorings.push_back(coloring_to_json(coloring));
    }
    certificate.result = json{{"value", enumeration.value},
                              {"optimal_count", enumeration.colorings.size()},
                              {"truncated", enumeration.truncated},
                              {"colorings", std::move(colorings)}};
    certificate.provenance = json{{"method", "oracle"}, {"nodes", enumeration.nodes}};
  } else {
    OracleResult oracle = brute_force_phi(n, k, options.max_nodes, options.cap);
    if (oracle.outcome == OracleOutcome::cap_exceeded) {
      throw OracleRefusal("oracle: modulus " + std::to_string(n) + " beyond cap " +
                          std::to_string(options.cap));
    }
    if (oracle.outcome == OracleOutcome::budget_exhausted) {
      throw OracleRefusal("oracle: node budget exhausted after " +
                          std::to_string(oracle.nodes) + " nodes");
    }
    certificate.result = json{{"value", oracle.value}};
    certificate.witness = coloring_to_json(*oracle.witness);
    certificate.provenance = json{{"method", "oracle"}, {"nodes", oracle.nodes}};
  }
  if (options.timing) certificate.provenance["wall_ms"] = elapsed_ms(start);
  return certificate;
}

Certificate stability_certificate(const std::vector<int>& members, int modulus,
                                  int subgroup_size, std::optional<int> slack) {
  Certificate certificate;
  certificate.command = "stability";
  certificate.problem = json{{"n", modulus},
                             {"set", members},
                             {"subgroup_size", subgroup_size}};
  if (slack) certificate.problem["slack"] = *slack;
  const ResidueSet set = ResidueSet::from_members(modulus, members);
  const SubgroupContext ctx = subgroup_of_size(modulus, subgroup_size);
  const StabilityReport report =
      slack ? threshold_check(set, ctx, *slack) : combined_bound(set, ctx);
  certificate.result = stability_to_json(report);
  certificate.provenance = json{{"method", "enumeration"}};
  return certificate;
}

namespace {

bool fail(std::string* reason, const std::string& message) {
  if (reason != nullptr) *reason = message;
  return false;
}

bool revalidate_phi(const Certificate& certificate, std::string* reason) {
  const int n = certificate.problem.at("n").get<int>();
  const int k = certificate.problem.at("k").get<int>();
  const int lower = phi_lower_bound(n, k);
  const int upper = phi_upper_bound(n, k);
  if (certificate.result.at("lower").get<int>() != lower ||
      certificate.result.at("upper").get<int>() != upper) {
    return fail(reason, "phi bounds do not recompute");
  }
  const json& exact = certificate.result.at("exact");
  const bool oracle_based =
      certificate.provenance.value("method", "formula") == "oracle";
  if (!oracle_based) {
    const PhiResult formula = phi_exact(n, k);
    if (certificate.result.at("regime").get<std::string>() !=
        regime_name(formula.regime)) {
      return fail(reason, "phi regime does not recompute");
    }
    if (formula.exact.has_value() != !exact.is_null() ||
        (formula.exact && *formula.exact != exact.get<int>())) {
      return fail(reason, "phi exact value does not recompute");
    }
  } else if (!exact.is_null()) {
    const int value = exact.get<int>();
    if (value < lower || value > upper) {
      return fail(reason, "oracle value escapes the formula bounds");
    }
  }
  if (certificate.witness) {
    const Coloring witness = coloring_from_json(*certificate.witness);
    if (witness.modulus() != n || witness.num_classes() != k) {
      return fail(reason, "witness shape mismatch");
    }
    const int value = evaluate(witness).value;
    if (value > upper) return fail(reason, "witness exceeds the upper bound");
    if (!exact.is_null() && value != exact.get<int>()) {
      return fail(reason, "witness does not reproduce the claimed value");
    }
  }
  return true;
}

bool revalidate_sumset(const Certificate& certificate, std::string* reason) {
  const int n = certificate.problem.at("n").get<int>();
  const auto members = certificate.problem.at("set").get<std::vector<int>>();
  const Certificate fresh = sumset_certificate(members, n);
  if (fresh.result != certificate.result) {
    return fail(reason, "sumset result does not recompute");
  }
  const StructureTag tag = classify(ResidueSet::from_members(n, members),
                                    is_prime(n));
  if (tag.kind != StructureKind::unstructured &&
      tag.kind != StructureKind::empty) {
    const ResidueSet regenerated = regenerate(tag, n);
    const ResidueSet original = ResidueSet::from_members(n, members);
    const bool generative = tag.kind != StructureKind::coset_subset;
    if (generative && !(regenerated == original)) {
      return fail(reason, "structure witness does not regenerate the set");
    }
    if (!generative && !original.is_subset_of(regenerated)) {
      return fail(reason, "set escapes its reported coset");
    }
  }
  return true;
}

bool revalidate_construct(const Certificate& certificate, std::string* reason) {
  const int n = certificate.problem.at("n").get<int>();
  const int k = certificate.problem.at("k").get<int>();
  const std::string method = certificate.problem.at("method").get<std::string>();
  const Certificate fresh = construct_certificate(n, k, method);
  if (fresh.result != certificate.result || fresh.witness != certificate.witness) {
    return fail(reason, "construction does not recompute");
  }
  const Coloring witness = coloring_from_json(*certificate.witness);
  if (evaluate(witness).value != certificate.result.at("value").get<int>()) {
    return fail(reason, "witness does not reproduce the claimed value");
  }
  return true;
}

bool revalidate_oracle(const Certificate& certificate, std::string* reason) {
  const int n = certificate.problem.at("n").get<int>();
  const int k = certificate.problem.at("k").get<int>();
  const int value = certificate.result.at("value").get<int>();
  if (value < phi_lower_bound(n, k) || value > phi_upper_bound(n, k)) {
    return fail(reason, "oracle value escapes the formula bounds");
  }
  const auto check_witness = [&](const json& witness_json) {
    const Coloring witness = coloring_from_json(witness_json);
    return witness.modulus() == n && witness.num_classes() == k &&
           evaluate(witness).value == value;
  };
  if (certificate.witness && !check_witness(*certificate.witness)) {
    return fail(reason, "witness does not reproduce the claimed value");
  }
  if (certificate.result.contains("colorings")) {
    for (const auto& coloring : certificate.result.at("colorings")) {
      if (!check_witness(coloring)) {
        return fail(reason, "an enumerated coloring is not optimal");
      }
    }
  }
  return true;
}

bool revalidate_stability(const Certificate& certificate, std::string* reason) {
  const int n = certificate.problem.at("n").get<int>();
  const auto members = certificate.problem.at("set").get<std::vector<int>>();
  const int subgroup_size = certificate.problem.at("subgroup_size").get<int>();
  std::optional<int> slack;
  if (certificate.problem.contains("slack")) {
    slack = certificate.problem.at("slack").get<int>();
  }
  const Certificate fresh =
      stability_certificate(members, n, subgroup_size, slack);
  if (fresh.result != certificate.result) {
    return fail(reason, "stability report does not recompute");
  }
  return true;
}

}  // namespace

bool revalidate(const Certificate& certificate, std::string* reason) {
  try {
    if (certificate.command == "phi") return revalidate_phi(certificate, reason);
    if (certificate.command == "sumset") return revalidate_sumset(certificate, reason);
    if (certificate.command == "construct") {
      return revalidate_construct(certificate, reason);
    }
    if (certificate.command == "oracle") return revalidate_oracle(certificate, reason);
    if (certificate.command == "stability") {
      return revalidate_stability(certificate, reason);
    }
  } catch (const std::exception& e) {
    return fail(reason, std::string("revalidation error: ") + e.what());
  }
  return fail(reason, "unknown certificate command: " + certificate.command);
}

std::vector<TableRow> phi_table(int nmax, bool with_oracle,
                                std::uint64_t max_nodes, int cap) {
  if (nmax < 2) throw std::invalid_argument("table: need nmax >= 2");
  if (with_oracle && nmax > cap) {
    throw OracleRefusal("table: oracle column needs nmax <= cap (" +
                        std::to_string(cap) + ")");
  }
  std::vector<TableRow> rows;
  for (int n = 2; n <= nmax; ++n) {
    for (int k = 2; k <= n; ++k) {
      const GroupParams params = group_params(n, k);
      TableRow row{.n = n,
                   .k = k,
                   .m = params.top_class_size,
                   .p_n = params.least_prime,
                   .q_nk = params.largest_divisor,
                   .f_nq = coset_sumset_size(n / params.largest_divisor),
                   .lower = phi_lower_bound(n, k),
                   .upper = phi_upper_bound(n, k),
                   .regime = phi_exact(n, k).regime,
                   .oracle = std::nullopt};
      if (with_oracle) {
        OracleResult oracle = brute_force_phi(n, k, max_nodes, cap);
        if (oracle.outcome != OracleOutcome::ok) {
          throw OracleRefusal("table: oracle refused at n=" + std::to_string(n) +
                              " k=" + std::to_string(k));
        }
        row.oracle = oracle.value;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::string out = "n,k,m,p_n,q_nk,f_nq,lower,upper,regime";
  const bool with_oracle = !rows.empty() && rows.front().oracle.has_value();
  if (with_oracle) out += ",oracle";
  out += "\n";
  for (const TableRow& row : rows) {
    out += std::to_string(row.n) + "," + std::to_string(row.k) + "," +
           std::to_string(row.m) + "," + std::to_string(row.p_n) + "," +
           std::to_string(row.q_nk) + "," + std::to_string(row.f_nq) + "," +
           std::to_string(row.lower) + "," + std::to_string(row.upper) + "," +
           regime_name(row.regime);
    if (with_oracle) out += "," + std::to_string(*row.oracle);
    out += "\n";
  }
  return out;
}

std::string table_json_lines(const std::vector<TableRow>& rows) {
  std::string out;
  for (const TableRow& row : rows) {
    json j{{"n", row.n},         {"k", row.k},
           {"m", row.m},         {"p_n", row.p_n},
           {"q_nk", row.q_nk},   {"f_nq", row.f_nq},
           {"lower", row.lower}, {"upper", row.upper},
           {"regime", regime_name(row.regime)}};
    if (row.oracle) j["oracle"] = *row.oracle;
    out += j.dump();
    out += "\n";
  }
  return out;
}

}  // namespace sumset
