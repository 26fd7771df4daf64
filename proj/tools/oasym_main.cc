// Copyright 2026 The oasym Authors
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

// oasym: command-line front end. Exit codes: 0 success, 1 internal invariant
// violation or failed check, 2 usage error, 3 resource or budget error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "oasym/check_suite.h"
#include "oasym/errors.h"
#include "oasym/factorial.h"
#include "oasym/glp_search.h"
#include "oasym/half_combinations.h"
#include "oasym/ilp_model.h"
#include "oasym/json_io.h"
#include "oasym/oa_enum.h"
#include "oasym/perm_group.h"
#include "oasym/symgen.h"

namespace oasym {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct RunConfig {
  int k = 0;
  int t = 0;
  int64_t n = 0;
  bool json = false;
  bool text = false;
  std::string kind = "wreath";
  bool order_only = false;
  bool check_rowspace = false;
  std::string method = "refine";
  uint64_t budget = 0;
  std::string group = "none";
  std::string emit_dir;
  bool listed = false;
};

int RunModel(const RunConfig& cfg) {
  if (cfg.json && cfg.text) throw DomainError("--json and --text are exclusive");
  const ModelMatrix m = BuildM(cfg.k, cfg.t);
  if (cfg.json) {
    std::cout << ModelToJson(m).dump() << '\n';
    return kExitOk;
  }
  for (size_t r = 0; r < m.num_rows(); ++r) {
    std::cout << std::setw(10) << std::left << LabelName(m.labels[r]) << std::right;
    for (int8_t v : m.rows[r]) std::cout << ' ' << std::setw(2) << static_cast<int>(v);
    std::cout << '\n';
  }
  return kExitOk;
}

int RunGroup(const RunConfig& cfg) {
  const GeneratorSet gens = MakeGenerators(ParseGeneratorKind(cfg.kind), cfg.k);
  const BigInt order = GroupOrder(gens.perms);
  bool preserves = true;
  if (cfg.check_rowspace) {
    const GramProjection q(cfg.k, cfg.t);
    for (const Permutation& g : gens.perms) preserves = preserves && PermPreservesRowspace(g, q);
  }
  if (cfg.order_only) {
    std::cout << order.str() << '\n';
    if (cfg.check_rowspace) {
      std::cout << "preserves_rowspace " << (preserves ? "yes" : "no") << '\n';
    }
    return kExitOk;
  }
  nlohmann::json j = GroupReportJson(NumPoints(cfg.k), order, gens.perms.size());
  j["kind"] = GeneratorKindName(gens.kind);
  j["generators"] = nlohmann::json::array();
  for (const Permutation& g : gens.perms) j["generators"].push_back(PermutationToJson(g));
  if (cfg.check_rowspace) {
    j["t"] = cfg.t;
    j["preserves_rowspace"] = preserves;
  }
  std::cout << j.dump() << '\n';
  return kExitOk;
}

void PrintGlp(const AutSearchResult& r, bool lower_bound) {
  std::cout << "order " << r.order.str() << (lower_bound ? " (lower bound)" : "") << '\n';
  std::cout << "method " << SearchMethodName(r.method) << '\n';
  std::cout << "nodes " << r.node_count << '\n';
  std::cout << "generators " << r.generators.size() << '\n';
  for (const Permutation& g : r.generators) std::cout << g.ToCycleString() << '\n';
}

int RunGlp(const RunConfig& cfg) {
  const SearchMethod method = ParseSearchMethod(cfg.method);
  const uint64_t budget = cfg.budget == 0 ? kDefaultNodeBudget : cfg.budget;
  try {
    PrintGlp(ComputeGlp(cfg.k, cfg.t, method, budget), false);
  } catch (const SearchBudgetExceeded& e) {
    PrintGlp(e.partial(), true);
    throw;
  }
  return kExitOk;
}

std::string SignString(int row) {
  std::string s;
  for (int v : SignRow(row)) s += v > 0 ? '+' : '-';
  return s;
}

int RunAppendix(const RunConfig& cfg) {
  if (cfg.listed) {
    std::cout << "labels\tsigns\tviable\n";
    for (const TabulatedCase& a : TabulatedCases()) {
      for (int row = 0; row < kSignRows; ++row) {
        std::cout << a.name << '\t' << SignString(row) << '\t'
                  << (a.viable[row] ? "yes" : "no") << '\n';
      }
    }
    return kExitOk;
  }
  const HalfComboReport r = ClassifyHalfCombinations(cfg.k);
  std::cout << "labels\tsigns\tviable\n";
  for (const HalfComboClass& cls : r.classes) {
    for (int row = 0; row < kSignRows; ++row) {
      std::cout << cls.name << '\t' << SignString(row) << '\t'
                << (cls.viable[row] ? "yes" : "no") << '\n';
    }
  }
  const bool matches = r.viable_only_in_family && r.family_all_have_viable &&
                       r.sign_rule_holds && r.screens_agree;
  std::cout << "summary k=" << r.k << " classes=" << r.classes.size()
            << " combinations=" << r.num_combinations << " viable=" << r.num_viable
            << " family_match=" << (matches ? "yes" : "no") << '\n';
  return matches ? kExitOk : kExitInvariant;
}

int RunEnum(const RunConfig& cfg) {
  std::vector<Permutation> group;
  if (cfg.group != "none") group = MakeGenerators(ParseGeneratorKind(cfg.group), cfg.k).perms;
  const uint64_t budget = cfg.budget == 0 ? kDefaultEnumBudget : cfg.budget;
  const EnumResult r = EnumerateOa(cfg.n, cfg.k, cfg.t, group, budget);
  if (!cfg.emit_dir.empty()) {
    std::filesystem::create_directories(cfg.emit_dir);
    for (size_t i = 0; i < r.representatives.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof(name), "design_%04zu.txt", i);
      const std::filesystem::path path = std::filesystem::path(cfg.emit_dir) / name;
      std::ofstream out(path);
      if (!out) throw ResourceError("cannot write " + path.string());
      WriteDesign(out, DesignFromFreq(r.representatives[i]));
    }
  }
  std::cout << EnumSummaryJson(r).dump() << '\n';
  return kExitOk;
}

int RunCheck() {
  const std::vector<CheckResult> results = RunCheckSuite(std::cout, /*show_seconds=*/false);
  int failed = 0;
  for (const CheckResult& r : results) {
    if (!r.passed) {
      std::cerr << "failed check " << r.id << ": " << r.name << '\n';
      ++failed;
    }
  }
  std::cout << (results.size() - failed) << "/" << results.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitInvariant;
}

int Main(int argc, char** argv) {
  CLI::App app{"Symmetry tools for two-level orthogonal array models"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* model = app.add_subcommand("model", "print the constraint matrix M");
  model->add_option("--k", cfg.k, "number of factors")->required();
  model->add_option("--t", cfg.t, "strength")->required();
  model->add_flag("--json", cfg.json, "JSON output");
  model->add_flag("--text", cfg.text, "text output (default)");

  auto* group = app.add_subcommand("group", "build a symmetry generator set");
  group->add_option("--k", cfg.k, "number of factors")->required();
  group->add_option("--kind", cfg.kind, "wreath or strength2")
      ->check(CLI::IsMember({"wreath", "strength2"}));
  group->add_flag("--order", cfg.order_only, "print only the group order");
  auto* rowspace = group->add_flag("--check-rowspace", cfg.check_rowspace,
                                   "test each generator against Row(M)");
  auto* group_t = group->add_option("--t", cfg.t, "strength for --check-rowspace");
  rowspace->needs(group_t);
  group_t->needs(rowspace);

  auto* glp = app.add_subcommand("glp", "compute the LP-relaxation symmetry group");
  glp->add_option("--k", cfg.k, "number of factors")->required();
  glp->add_option("--t", cfg.t, "strength")->required();
  glp->add_option("--method", cfg.method, "brute or refine")
      ->check(CLI::IsMember({"brute", "refine"}));
  glp->add_option("--budget", cfg.budget, "search node budget");

  auto* appendix = app.add_subcommand("appendix", "classify half combinations");
  auto* appendix_k = appendix->add_option("--k", cfg.k, "number of factors");
  auto* listed = appendix->add_flag("--listed", cfg.listed, "evaluate the tabulated cases");
  appendix_k->excludes(listed);

  auto* enumerate = app.add_subcommand("enum", "enumerate orthogonal arrays");
  enumerate->add_option("--n", cfg.n, "number of runs")->required();
  enumerate->add_option("--k", cfg.k, "number of factors")->required();
  enumerate->add_option("--t", cfg.t, "strength")->required();
  enumerate->add_option("--group", cfg.group, "wreath, strength2 or none")
      ->check(CLI::IsMember({"wreath", "strength2", "none"}));
  enumerate->add_option("--emit-designs", cfg.emit_dir, "write representatives here");
  enumerate->add_option("--budget", cfg.budget, "search node budget");

  auto* check = app.add_subcommand("check", "run the reproduction suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }
  if (appendix->parsed() && !cfg.listed && appendix_k->count() == 0) {
    std::cerr << "appendix: --k or --listed is required\n";
    return kExitUsage;
  }

  if (model->parsed()) return RunModel(cfg);
  if (group->parsed()) return RunGroup(cfg);
  if (glp->parsed()) return RunGlp(cfg);
  if (appendix->parsed()) return RunAppendix(cfg);
  if (enumerate->parsed()) return RunEnum(cfg);
  if (check->parsed()) return RunCheck();
  return kExitUsage;
}

}  // namespace
}  // namespace oasym

int main(int argc, char** argv) {
  try {
    return oasym::Main(argc, argv);
  } catch (const oasym::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return oasym::kExitUsage;
  } catch (const oasym::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return oasym::kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return oasym::kExitInvariant;
  }
}
