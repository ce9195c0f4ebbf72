#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "sumset/arith.hpp"
#include "sumset/oracle.hpp"
#include "sumset/phi.hpp"
#include "sumset/serialize.hpp"
#include "sumset/stability.hpp"
#include "sumset/structure.hpp"
#include "sumset/subgroup.hpp"
#include "sumset/verify.hpp"

namespace py = pybind11;

namespace {

sumset::ResidueSet make_set(const std::vector<int>& members, int modulus) {
  return sumset::ResidueSet::from_members(modulus, members);
}

std::vector<std::vector<int>> class_lists(const sumset::Coloring& coloring) {
  std::vector<std::vector<int>> out;
  out.reserve(coloring.num_classes());
  for (const auto& cls : coloring.classes()) out.push_back(cls.members());
  return out;
}

py::dict evaluation_dict(const sumset::Evaluation& evaluation) {
  py::dict out;
  out["per_class_sumset_sizes"] = evaluation.class_sumset_sizes;
  out["value"] = evaluation.value;
  out["argmax_class"] = evaluation.argmax_class;
  return out;
}

py::dict structure_dict(const sumset::StructureTag& tag) {
  py::dict out;
  out["kind"] = sumset::structure_kind_name(tag.kind);
  switch (tag.kind) {
    case sumset::StructureKind::singleton:
      out["element"] = tag.start;
      break;
    case sumset::StructureKind::block:
    case sumset::StructureKind::arc:
      out["start"] = tag.start;
      out["length"] = tag.length;
      break;
    case sumset::StructureKind::arithmetic_progression:
      out["start"] = tag.start;
      out["difference"] = tag.difference;
      out["length"] = tag.length;
      break;
    case sumset::StructureKind::coset_subset:
      out["subgroup_size"] = tag.subgroup_size;
      out["coset_representative"] = tag.coset_representative;
      break;
    default:
      break;
  }
  return out;
}

py::dict stability_dict(const sumset::StabilityReport& report) {
  py::dict out;
  out["subgroup_size"] = report.subgroup_size;
  out["subgroup_least_prime"] = report.subgroup_least_prime;
  out["heaviest_size"] = report.heaviest_size;
  out["tie_count"] = report.tie_count;
  out["other_occupied"] = report.other_occupied;
  out["within_coset_bound"] = report.within_coset_bound;
  out["cross_bound"] = report.cross_bound;
  out["internal_bound"] = report.internal_bound;
  out["combined_bound"] = report.combined_bound;
  out["sumset_size"] = report.sumset_size;
  out["cross_tight"] = report.cross_tight;
  out["internal_tight"] = report.internal_tight;
  out["combined_tight"] = report.combined_tight;
  if (report.slack) {
    out["slack"] = *report.slack;
    out["threshold_applicable"] = *report.threshold_applicable;
    if (report.other_occupied_cap) out["other_occupied_cap"] = *report.other_occupied_cap;
    if (report.concentrated) out["concentrated"] = *report.concentrated;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "restricted self-sumset minimax toolkit for Z_n";

  m.def("is_prime", &sumset::is_prime, py::arg("v"));
  m.def("least_prime_divisor", &sumset::least_prime_divisor, py::arg("r"));
  m.def("largest_divisor_at_most", &sumset::largest_divisor_at_most,
        py::arg("n"), py::arg("k"));
  m.def("coset_sumset_size", &sumset::coset_sumset_size, py::arg("t"),
        "restricted self-sumset size of a full coset of a size-t subgroup");

  m.def(
      "group_params",
      [](int n, int k) {
        const sumset::GroupParams params = sumset::group_params(n, k);
        py::dict out;
        out["modulus"] = params.modulus;
        out["colors"] = params.colors;
        out["top_class_size"] = params.top_class_size;
        out["least_prime"] = params.least_prime;
        out["largest_divisor"] = params.largest_divisor;
        return out;
      },
      py::arg("n"), py::arg("k"));

  m.def(
      "restricted_sumset",
      [](const std::vector<int>& members, int mod) {
        return sumset::restricted_sumset(make_set(members, mod)).members();
      },
      py::arg("members"), py::arg("mod"),
      "all sums of two distinct elements, reduced mod n");

  m.def(
      "classify",
      [](const std::vector<int>& members, int mod, bool prime_hint) {
        return structure_dict(sumset::classify(make_set(members, mod), prime_hint));
      },
      py::arg("members"), py::arg("mod"), py::arg("prime_hint") = true);

  m.def(
      "affine_canonical_form",
      [](const std::vector<int>& members, int p) {
        return sumset::affine_canonical_form(make_set(members, p), p).members();
      },
      py::arg("members"), py::arg("p"));

  m.def(
      "lift_and_check_window",
      [](const std::vector<long long>& values, int mod) {
        return sumset::lift_and_check_window(values, mod);
      },
      py::arg("values"), py::arg("mod"));

  m.def(
      "subgroup_of_size",
      [](int mod, int size) {
        const sumset::SubgroupContext ctx = sumset::subgroup_of_size(mod, size);
        py::dict out;
        out["n"] = ctx.n;
        out["size"] = ctx.size;
        out["generator"] = ctx.generator;
        out["index"] = ctx.index;
        std::vector<std::vector<int>> cosets;
        for (const auto& coset : ctx.cosets) cosets.push_back(coset.members());
        out["cosets"] = cosets;
        return out;
      },
      py::arg("mod"), py::arg("size"));

  m.def(
      "quotient_stats",
      [](const std::vector<int>& members, int mod, int subgroup_size) {
        const auto stats = sumset::quotient_stats(
            make_set(members, mod), sumset::subgroup_of_size(mod, subgroup_size));
        py::dict out;
        out["occupied"] = stats.occupied;
        out["with_pairs"] = stats.with_pairs;
        out["heaviest"] = stats.heaviest ? py::cast(*stats.heaviest) : py::none();
        out["heaviest_size"] = stats.heaviest_size;
        return out;
      },
      py::arg("members"), py::arg("mod"), py::arg("subgroup_size"));

  m.def(
      "block_partition",
      [](int n, int k) { return class_lists(sumset::block_partition(n, k)); },
      py::arg("n"), py::arg("k"));
  m.def(
      "coset_partition",
      [](int n, int k) { return class_lists(sumset::coset_partition(n, k)); },
      py::arg("n"), py::arg("k"));
  m.def(
      "best_construction",
      [](int n, int k) {
        const sumset::Construction best = sumset::best_construction(n, k);
        py::dict out;
        out["classes"] = class_lists(best.coloring);
        out["evaluation"] = evaluation_dict(best.evaluation);
        out["method"] = sumset::construction_method_name(best.method);
        return out;
      },
      py::arg("n"), py::arg("k"));

  m.def(
      "evaluate_coloring",
      [](const std::vector<std::vector<int>>& classes, int n) {
        const auto coloring = sumset::Coloring::from_classes(
            n, static_cast<int>(classes.size()), classes);
        return evaluation_dict(sumset::evaluate(coloring));
      },
      py::arg("classes"), py::arg("n"));

  m.def("phi_lower_bound", &sumset::phi_lower_bound, py::arg("n"), py::arg("k"));
  m.def("phi_upper_bound", &sumset::phi_upper_bound, py::arg("n"), py::arg("k"));
  m.def(
      "phi_exact",
      [](int n, int k) {
        const sumset::PhiResult result = sumset::phi_exact(n, k);
        py::dict out;
        out["lower"] = result.lower;
        out["upper"] = result.upper;
        out["exact"] = result.exact ? py::cast(*result.exact) : py::none();
        out["regime"] = sumset::regime_name(result.regime);
        if (result.witness) out["witness"] = class_lists(*result.witness);
        if (result.secondary_witness) {
          out["secondary_witness"] = class_lists(*result.secondary_witness);
        }
        return out;
      },
      py::arg("n"), py::arg("k"));

  m.def(
      "feasible",
      [](int n, int k, int threshold, std::uint64_t max_nodes, bool symmetry) {
        sumset::SearchConfig config;
        config.n = n;
        config.k = k;
        config.threshold = threshold;
        config.max_nodes = max_nodes;
        config.symmetry = symmetry;
        const sumset::FeasibleResult result = sumset::feasible(config);
        py::dict out;
        out["status"] = result.status == sumset::SearchStatus::found ? "found"
                        : result.status == sumset::SearchStatus::infeasible
                            ? "infeasible"
                            : "budget_exhausted";
        out["witness"] =
            result.witness ? py::cast(class_lists(*result.witness)) : py::none();
        out["nodes"] = result.nodes;
        return out;
      },
      py::arg("n"), py::arg("k"), py::arg("threshold"),
      py::arg("max_nodes") = sumset::kDefaultNodeBudget, py::arg("symmetry") = true);

  m.def(
      "brute_force_phi",
      [](int n, int k, std::uint64_t max_nodes, int cap) {
        const sumset::OracleResult result =
            sumset::brute_force_phi(n, k, max_nodes, cap);
        if (result.outcome == sumset::OracleOutcome::cap_exceeded) {
          throw std::invalid_argument("brute_force_phi: modulus beyond the cap");
        }
        if (result.outcome == sumset::OracleOutcome::budget_exhausted) {
          throw std::runtime_error("brute_force_phi: node budget exhausted");
        }
        py::dict out;
        out["value"] = result.value;
        out["witness"] = class_lists(*result.witness);
        out["nodes"] = result.nodes;
        return out;
      },
      py::arg("n"), py::arg("k"), py::arg("max_nodes") = sumset::kDefaultNodeBudget,
      py::arg("cap") = sumset::kDefaultOracleCap);

  m.def(
      "enumerate_optimal",
      [](int n, int k, std::size_t limit, std::uint64_t max_nodes, int cap) {
        const sumset::EnumerateResult result =
            sumset::enumerate_optimal(n, k, limit, max_nodes, cap);
        if (result.outcome != sumset::OracleOutcome::ok) {
          throw std::runtime_error("enumerate_optimal: oracle refused");
        }
        py::dict out;
        out["value"] = result.value;
        std::vector<std::vector<std::vector<int>>> colorings;
        for (const auto& coloring : result.colorings) {
          colorings.push_back(class_lists(coloring));
        }
        out["colorings"] = colorings;
        out["truncated"] = result.truncated;
        out["nodes"] = result.nodes;
        return out;
      },
      py::arg("n"), py::arg("k"), py::arg("limit") = sumset::kDefaultEnumerateLimit,
      py::arg("max_nodes") = sumset::kDefaultNodeBudget,
      py::arg("cap") = sumset::kDefaultOracleCap);

  m.def(
      "stability_report",
      [](const std::vector<int>& members, int mod, int subgroup_size,
         std::optional<int> slack) {
        const auto set = make_set(members, mod);
        const auto ctx = sumset::subgroup_of_size(mod, subgroup_size);
        return stability_dict(slack ? sumset::threshold_check(set, ctx, *slack)
                                    : sumset::combined_bound(set, ctx));
      },
      py::arg("members"), py::arg("mod"), py::arg("subgroup_size"),
      py::arg("slack") = py::none());

  m.def(
      "verify_suite",
      [](const std::string& name, int nmax, int pmax, int smax,
         std::uint64_t max_nodes) {
        const sumset::SuiteResult result =
            sumset::run_suite(name, nmax, pmax, smax, max_nodes);
        py::dict out;
        out["suite"] = result.suite;
        out["cases"] = result.cases;
        out["violations"] = result.violations;
        out["samples"] = result.samples;
        return out;
      },
      py::arg("name"), py::arg("nmax") = 14, py::arg("pmax") = 13,
      py::arg("smax") = 3, py::arg("max_nodes") = sumset::kDefaultNodeBudget);

  m.attr("__version__") = "0.1.0";
}
