#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sumset/arith.hpp"
#include "sumset/serialize.hpp"
#include "sumset/verify.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitOracleRefusal = 3;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SUMSET_MINIMAX_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("SUMSET_MINIMAX_BUDGET is not a number");
    }
  }
  return sumset::kDefaultNodeBudget;
}

void print_certificate(const sumset::Certificate& certificate, bool as_json) {
  using sumset::json;
  const json j = sumset::certificate_to_json(certificate);
  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  // Text mode: flat key=value lines in field order.
  std::cout << "command=" << certificate.command << "\n";
  std::cout << "problem=" << certificate.problem.dump() << "\n";
  for (const auto& [key, value] : certificate.result.items()) {
    std::cout << key << "=" << (value.is_string() ? value.get<std::string>()
                                                  : value.dump())
              << "\n";
  }
  if (certificate.witness) {
    std::cout << "witness=" << certificate.witness->at("classes").dump() << "\n";
  }
  if (certificate.secondary_witness) {
    std::cout << "secondary_witness="
              << certificate.secondary_witness->at("classes").dump() << "\n";
  }
  std::cout << "provenance=" << certificate.provenance.dump() << "\n";
}

struct CommonFlags {
  bool as_json = false;
  bool timing = false;
  std::optional<std::uint64_t> budget;
  int cap = sumset::kDefaultOracleCap;

  std::uint64_t nodes() const { return budget ? *budget : default_budget(); }
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_oracle_knobs) {
  cmd->add_flag("--json", flags.as_json, "emit a JSON certificate");
  if (with_oracle_knobs) {
    cmd->add_option("--budget", flags.budget,
                    "search node budget (default SUMSET_MINIMAX_BUDGET or 1e9)");
    cmd->add_option("--cap", flags.cap, "oracle modulus cap");
    cmd->add_flag("--timing", flags.timing,
                  "include wall time in provenance (breaks byte-identical output)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"restricted self-sumset minimax toolkit for Z_n"};
  app.require_subcommand(1);

  // phi
  int phi_n = 0, phi_k = 0;
  bool phi_oracle = false, phi_witness = false;
  CommonFlags phi_flags;
  CLI::App* phi = app.add_subcommand("phi", "bounds and exact minimax value");
  phi->add_option("n", phi_n, "modulus")->required();
  phi->add_option("k", phi_k, "number of colors")->required();
  phi->add_flag("--oracle", phi_oracle, "force the exhaustive oracle");
  phi->add_flag("--witness", phi_witness, "include a witness coloring");
  add_common(phi, phi_flags, true);

  // sumset
  std::string sumset_literal;
  int sumset_mod = 0;
  CommonFlags sumset_flags;
  CLI::App* sum = app.add_subcommand("sumset",
                                     "restricted self-sumset and structure of a set");
  sum->add_option("set", sumset_literal, "comma-separated residues, e.g. 0,1,4")
      ->required();
  sum->add_option("--mod", sumset_mod, "modulus")->required();
  add_common(sum, sumset_flags, false);

  // construct
  int con_n = 0, con_k = 0;
  std::string con_method = "best";
  CommonFlags con_flags;
  CLI::App* con = app.add_subcommand("construct", "block/coset/best coloring");
  con->add_option("n", con_n, "modulus")->required();
  con->add_option("k", con_k, "number of colors")->required();
  con->add_option("--method", con_method, "block | coset | best")
      ->check(CLI::IsMember({"block", "coset", "best"}));
  add_common(con, con_flags, false);

  // oracle
  int ora_n = 0, ora_k = 0;
  bool ora_witness = false;
  std::optional<std::size_t> ora_enumerate;
  CommonFlags ora_flags;
  CLI::App* ora = app.add_subcommand("oracle", "exhaustive minimax search");
  ora->add_option("n", ora_n, "modulus")->required();
  ora->add_option("k", ora_k, "number of colors")->required();
  ora->add_flag("--witness", ora_witness, "include the witness coloring");
  ora->add_option("--enumerate", ora_enumerate,
                  "collect all optimal colorings, up to this many");
  add_common(ora, ora_flags, true);

  // stability
  std::string sta_literal;
  int sta_mod = 0, sta_subgroup = 0;
  std::optional<int> sta_slack;
  CommonFlags sta_flags;
  CLI::App* sta = app.add_subcommand("stability", "coset concentration bounds");
  sta->add_option("set", sta_literal, "comma-separated residues")->required();
  sta->add_option("--mod", sta_mod, "modulus")->required();
  sta->add_option("--subgroup", sta_subgroup, "subgroup size (divisor of the modulus)")
      ->required();
  sta->add_option("--slack", sta_slack, "threshold slack s");
  add_common(sta, sta_flags, false);

  // verify
  std::string ver_suite;
  int ver_nmax = 14, ver_pmax = 13, ver_smax = 3;
  CommonFlags ver_flags;
  CLI::App* ver = app.add_subcommand("verify", "exhaustive theorem verification");
  ver->add_option("suite", ver_suite, "one of: " + [] {
                    std::string names;
                    for (const auto& name : sumset::suite_names()) {
                      if (!names.empty()) names += ", ";
                      names += name;
                    }
                    return names;
                  }())
      ->required();
  ver->add_option("--nmax", ver_nmax, "modulus sweep limit");
  ver->add_option("--pmax", ver_pmax, "prime sweep limit");
  ver->add_option("--smax", ver_smax, "threshold slack sweep limit");
  add_common(ver, ver_flags, true);

  // table
  int tab_nmax = 0;
  bool tab_csv = false, tab_oracle = false;
  CommonFlags tab_flags;
  CLI::App* tab = app.add_subcommand("table", "bounds table for all 2 <= k <= n <= nmax");
  tab->add_option("nmax", tab_nmax, "largest modulus")->required();
  tab->add_flag("--csv", tab_csv, "CSV output (the default)");
  tab->add_flag("--oracle", tab_oracle, "add an exhaustive oracle column");
  add_common(tab, tab_flags, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*phi) {
      sumset::PhiOptions options{.use_oracle = phi_oracle,
                                 .include_witness = phi_witness,
                                 .max_nodes = phi_flags.nodes(),
                                 .cap = phi_flags.cap,
                                 .timing = phi_flags.timing};
      print_certificate(sumset::phi_certificate(phi_n, phi_k, options),
                        phi_flags.as_json);
    } else if (*sum) {
      const auto members = sumset::parse_set_literal(sumset_literal, sumset_mod);
      print_certificate(sumset::sumset_certificate(members, sumset_mod),
                        sumset_flags.as_json);
    } else if (*con) {
      print_certificate(sumset::construct_certificate(con_n, con_k, con_method),
                        con_flags.as_json);
    } else if (*ora) {
      sumset::PhiOptions options{.use_oracle = true,
                                 .include_witness = ora_witness,
                                 .max_nodes = ora_flags.nodes(),
                                 .cap = ora_flags.cap,
                                 .timing = ora_flags.timing};
      sumset::Certificate certificate =
          sumset::oracle_certificate(ora_n, ora_k, options, ora_enumerate);
      if (!ora_witness) certificate.witness.reset();
      print_certificate(certificate, ora_flags.as_json);
    } else if (*sta) {
      const auto members = sumset::parse_set_literal(sta_literal, sta_mod);
      print_certificate(
          sumset::stability_certificate(members, sta_mod, sta_subgroup, sta_slack),
          sta_flags.as_json);
    } else if (*ver) {
      const sumset::SuiteResult result = sumset::run_suite(
          ver_suite, ver_nmax, ver_pmax, ver_smax, ver_flags.nodes());
      if (ver_flags.as_json) {
        sumset::json j{{"schema_version", sumset::kCertificateSchemaVersion},
                       {"command", "verify"},
                       {"suite", result.suite},
                       {"cases", result.cases},
                       {"violations", result.violations},
                       {"samples", result.samples}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "suite=" << result.suite << " cases=" << result.cases
                  << " violations=" << result.violations << "\n";
        for (const auto& sample : result.samples) {
          std::cout << "  " << sample << "\n";
        }
      }
      if (!result.ok()) return kExitViolation;
    } else if (*tab) {
      const auto rows = sumset::phi_table(tab_nmax, tab_oracle, tab_flags.nodes(),
                                          tab_flags.cap);
      // Buffered: nothing is printed unless every row computed.
      std::cout << (tab_flags.as_json ? sumset::table_json_lines(rows)
                                      : sumset::table_csv(rows));
    }
  } catch (const sumset::OracleRefusal& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOracleRefusal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return 0;
}
