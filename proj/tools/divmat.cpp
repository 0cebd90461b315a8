// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "divmat/concavity.hpp"
#include "divmat/errors.hpp"
#include "divmat/json_io.hpp"
#include "divmat/matroid.hpp"
#include "divmat/oracle.hpp"
#include "divmat/solver.hpp"

namespace {

using divmat::ChoiceResult;
using divmat::ContractSet;
using divmat::LoadedInstance;
using divmat::OracleBudget;
using divmat::Rational;
using nlohmann::json;

constexpr int kExitInput = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitBudget = 4;

json ids_json(const ContractSet& ids, const divmat::Instance& inst) {
  return json(
      inst.merit_sorted(std::vector<divmat::ContractId>(ids.begin(), ids.end())));
}

json choice_json(const ChoiceResult& r, const divmat::Instance& inst) {
  return json{{"chosen", ids_json(r.chosen, inst)},
              {"diversity", divmat::rational_to_json(r.diversity)},
              {"anchor", divmat::distribution_to_json(r.anchor)}};
}

void emit(const std::string& command, const LoadedInstance& loaded,
          json output, std::chrono::steady_clock::time_point started) {
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  json report{{"command", command},
              {"input_digest", loaded.digest},
              {"output", std::move(output)},
              {"timing_ms", elapsed}};
  std::cout << report.dump(2) << "\n";
}

OracleBudget budget_from(long long flag) {
  OracleBudget budget;
  if (const char* env = std::getenv("DIVMAT_BUDGET")) {
    long long v = std::atoll(env);
    if (v > 0) {
      budget.max_subsets = v;
      budget.max_domain = v;
    }
  }
  if (flag > 0) {
    budget.max_subsets = flag;
    budget.max_domain = flag;
  }
  return budget;
}

int run_choose(const std::string& file, std::optional<std::string> lambda_str,
               bool verify, long long budget_flag) {
  auto started = std::chrono::steady_clock::now();
  LoadedInstance loaded = divmat::load_instance(file);
  std::optional<Rational> lambda = loaded.lambda;
  if (lambda_str) lambda = divmat::parse_rational(*lambda_str);
  ChoiceResult r =
      lambda ? divmat::diversity_choice_lambda(loaded.all_contracts,
                                               loaded.index, *lambda,
                                               loaded.inst)
             : divmat::diversity_choice(loaded.all_contracts, loaded.index,
                                        loaded.inst);
  json output = choice_json(r, loaded.inst);
  if (verify) {
    const divmat::DiversityIndex checked =
        lambda ? divmat::truncate(loaded.index, *lambda) : loaded.index;
    divmat::BruteChoice oracle = divmat::brute_force_choice(
        loaded.all_contracts, checked, loaded.inst, budget_from(budget_flag));
    if (!oracle.chosen || *oracle.chosen != r.chosen) {
      output["verify"] = "mismatch";
      emit("choose", loaded, std::move(output), started);
      return kExitMismatch;
    }
    output["verify"] = "ok";
  }
  emit("choose", loaded, std::move(output), started);
  return 0;
}

int run_frontier(const std::string& file, const std::string& format,
                 bool verify, long long budget_flag) {
  auto started = std::chrono::steady_clock::now();
  LoadedInstance loaded = divmat::load_instance(file);
  std::vector<divmat::FrontierPoint> frontier =
      divmat::trace_frontier(loaded.all_contracts, loaded.index, loaded.inst);
  if (verify) {
    std::set<ContractSet> expected = divmat::brute_force_pareto(
        loaded.all_contracts, loaded.index, loaded.inst,
        budget_from(budget_flag));
    std::set<ContractSet> got;
    for (const auto& p : frontier) got.insert(p.set);
    if (got != expected) {
      std::cerr << "frontier does not match the brute-force Pareto set\n";
      return kExitMismatch;
    }
  }
  if (format == "csv") {
    std::cout << "set;diversity;lambda\n";
    for (const auto& p : frontier) {
      auto ids = loaded.inst.merit_sorted(
          std::vector<divmat::ContractId>(p.set.begin(), p.set.end()));
      std::string joined;
      for (const auto& id : ids) {
        if (!joined.empty()) joined += ",";
        joined += id;
      }
      std::cout << joined << ";" << divmat::to_string(p.diversity) << ";"
                << divmat::to_string(p.lambda) << "\n";
    }
    return 0;
  }
  json rows = json::array();
  for (const auto& p : frontier) {
    rows.push_back({{"set", ids_json(p.set, loaded.inst)},
                    {"diversity", divmat::rational_to_json(p.diversity)},
                    {"lambda", divmat::rational_to_json(p.lambda)}});
  }
  emit("frontier", loaded, std::move(rows), started);
  return 0;
}

json concavity_json(const divmat::ConcavityVerdict& v) {
  json out{{"holds", v.holds}};
  if (v.witness) {
    out["witness"] = {{"xi", divmat::distribution_to_json(v.witness->xi)},
                      {"xi_tilde",
                       divmat::distribution_to_json(v.witness->xi_tilde)},
                      {"cell", v.witness->cell},
                      {"clause", v.witness->clause}};
  }
  return out;
}

int run_check(const std::string& file, const std::string& property,
              std::optional<std::string> lambda_str) {
  auto started = std::chrono::steady_clock::now();
  LoadedInstance loaded = divmat::load_instance(file);
  divmat::DiversityIndex f = loaded.index;
  if (lambda_str) f = divmat::truncate(f, divmat::parse_rational(*lambda_str));

  json output;
  if (property == "ordinal") {
    output = concavity_json(divmat::check_ordinal_concavity(f));
  } else if (property == "m") {
    output = concavity_json(divmat::check_m_concavity(f));
  } else if (property == "mnat") {
    output = concavity_json(divmat::check_m_natural_concavity(f));
  } else if (property == "pseudo") {
    output = concavity_json(divmat::check_pseudo_mnat(f));
  } else if (property == "pseudo_plus") {
    output = concavity_json(divmat::check_pseudo_mnat_plus(f));
  } else if (property == "semistrict") {
    output = concavity_json(divmat::check_semistrict_pseudo_mnat(f));
  } else if (property == "monotone") {
    output = concavity_json(divmat::check_monotone(f));
  } else if (property == "matroid") {
    divmat::SetFamily family =
        divmat::build_family(loaded.all_contracts, f, loaded.inst);
    divmat::FamilyReport report = divmat::is_matroid(family);
    output = {{"holds", report.holds}, {"axiom", report.axiom}};
  } else if (property == "pi" || property == "lad") {
    divmat::ChoiceRule rule{[&](const ContractSet& x) {
      return divmat::diversity_choice(x, f, loaded.inst).chosen;
    }};
    divmat::FamilyReport report =
        property == "pi"
            ? divmat::check_path_independence(rule, loaded.all_contracts)
            : divmat::check_lad(rule, loaded.all_contracts);
    output = {{"holds", report.holds}};
    if (!report.holds) {
      json witness = json::array();
      for (const auto& s : report.witness) {
        witness.push_back(ids_json(s, loaded.inst));
      }
      output["witness"] = std::move(witness);
    }
  } else {
    std::cerr << "unknown property: " << property << "\n";
    return kExitInput;
  }
  emit("check", loaded, std::move(output), started);
  return 0;
}

int run_oracle(const std::string& file, long long budget_flag) {
  auto started = std::chrono::steady_clock::now();
  LoadedInstance loaded = divmat::load_instance(file);
  OracleBudget budget = budget_from(budget_flag);
  divmat::BruteChoice choice = divmat::brute_force_choice(
      loaded.all_contracts, loaded.index, loaded.inst, budget);
  json output;
  if (choice.chosen) {
    output["chosen"] = ids_json(*choice.chosen, loaded.inst);
  } else {
    json sets = json::array();
    for (const auto& s : choice.incomparable) {
      sets.push_back(ids_json(s, loaded.inst));
    }
    output["incomparable"] = std::move(sets);
  }
  json optima = json::array();
  for (const auto& xi : divmat::brute_force_opt_distributions(
           loaded.all_contracts, loaded.index, loaded.inst, budget)) {
    optima.push_back(divmat::distribution_to_json(xi));
  }
  output["opt_distributions"] = std::move(optima);
  emit("oracle", loaded, std::move(output), started);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diversity-aware choice rules over matroid constraints"};
  app.require_subcommand(1);

  std::string file;
  std::optional<std::string> lambda;
  std::string format = "json";
  std::string property;
  bool verify = false;
  long long budget = 0;
  long long seed = 0;

  auto add_common = [&](CLI::App* cmd, bool with_file = true) {
    if (with_file) cmd->add_option("file", file, "instance JSON file")->required();
    cmd->add_option("--budget", budget, "oracle enumeration budget");
    cmd->add_option("--seed", seed, "RNG seed (reserved for sweeps)");
  };

  CLI::App* choose = app.add_subcommand("choose", "run the choice rule");
  add_common(choose);
  choose->add_option("--lambda", lambda, "diversity target (rational)");
  choose->add_flag("--verify", verify, "cross-check against the oracle");

  CLI::App* frontier =
      app.add_subcommand("frontier", "trace the diversity-merit frontier");
  add_common(frontier);
  frontier->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  frontier->add_flag("--verify", verify, "cross-check against the oracle");

  CLI::App* check = app.add_subcommand("check", "verify an index property");
  add_common(check);
  check
      ->add_option("--property", property,
                   "ordinal|mnat|m|pseudo|pseudo_plus|semistrict|monotone|"
                   "matroid|pi|lad")
      ->required();
  check->add_option("--lambda", lambda, "truncate the index first");

  CLI::App* oracle = app.add_subcommand("oracle", "run the brute-force oracle");
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (choose->parsed()) return run_choose(file, lambda, verify, budget);
    if (frontier->parsed()) return run_frontier(file, format, verify, budget);
    if (check->parsed()) return run_check(file, property, lambda);
    return run_oracle(file, budget);
  } catch (const divmat::ResourceLimitError& e) {
    std::cerr << "resource budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const divmat::InvalidInputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const divmat::UnsupportedDomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
}
