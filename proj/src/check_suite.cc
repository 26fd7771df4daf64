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

#include "oasym/check_suite.h"

#include <chrono>
#include <exception>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "oasym/glp_search.h"
#include "oasym/half_combinations.h"
#include "oasym/ilp_model.h"
#include "oasym/oa_enum.h"
#include "oasym/perm_group.h"
#include "oasym/symgen.h"

namespace oasym {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failures; the check passes iff nothing was recorded.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void Note(const std::string& what) { notes_.push_back(what); }

  CheckResult Finish(int id, std::string name, Clock::time_point start) const {
    CheckResult r;
    r.id = id;
    r.name = std::move(name);
    r.seconds = SecondsSince(start);
    r.passed = failures_.empty();
    std::ostringstream detail;
    const auto& items = failures_.empty() ? notes_ : failures_;
    for (size_t i = 0; i < items.size(); ++i) {
      if (i > 0) detail << "; ";
      detail << items[i];
    }
    r.detail = detail.str();
    return r;
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

template <typename Body>
CheckResult Guarded(int id, const std::string& name, Body body) {
  const auto start = Clock::now();
  try {
    return body(start);
  } catch (const std::exception& e) {
    CheckResult r;
    r.id = id;
    r.name = name;
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
    r.seconds = SecondsSince(start);
    return r;
  }
}

std::string Str(const BigInt& v) { return v.str(); }

// (N, k, t) triples used by the enumeration checks.
struct Triple {
  int64_t n;
  int k;
  int t;
};
constexpr Triple kEnumTriples[] = {{4, 3, 2}, {8, 3, 2}, {8, 4, 3}, {8, 4, 2}};

// Signed factor permutations for odd t, the rho extension for even t.
GeneratorSet SymmetryFor(int k, int t) {
  return t % 2 == 0 ? Strength2Generators(k) : WreathGenerators(k);
}

}  // namespace

CheckResult CheckWreathOrders() {
  const std::string name = "wreath group orders 2^k k!, k=1..6";
  return Guarded(1, name, [&](Clock::time_point start) {
    Checker c;
    const long expected[] = {2, 8, 48, 384, 3840, 46080};
    for (int k = 1; k <= 6; ++k) {
      const auto t0 = Clock::now();
      const GeneratorSet gens = WreathGenerators(k);
      const BigInt order = GroupOrder(gens.perms);
      const double secs = SecondsSince(t0);
      c.Expect(order == expected[k - 1],
               "k=" + std::to_string(k) + " order " + Str(order));
      c.Expect(order == gens.claimed_order, "claimed order mismatch");
      c.Expect(secs < 1.0, "k=" + std::to_string(k) + " took over 1 s");
      c.Note("k=" + std::to_string(k) + ":" + Str(order));
    }
    return c.Finish(1, name, start);
  });
}

CheckResult CheckStrength2Orders() {
  const std::string name = "strength-2 group orders 2^k (k+1)!, k=4..6";
  return Guarded(2, name, [&](Clock::time_point start) {
    Checker c;
    const long expected[] = {1920, 23040, 322560};
    for (int k = 4; k <= 6; ++k) {
      const auto t0 = Clock::now();
      const GeneratorSet gens = Strength2Generators(k);
      const BigInt order = GroupOrder(gens.perms);
      const double secs = SecondsSince(t0);
      c.Expect(order == expected[k - 4],
               "k=" + std::to_string(k) + " order " + Str(order));
      c.Expect(order == gens.claimed_order, "claimed order mismatch");
      c.Expect(secs < 5.0, "k=" + std::to_string(k) + " took over 5 s");
      c.Note("k=" + std::to_string(k) + ":" + Str(order));
    }
    return c.Finish(2, name, start);
  });
}

CheckResult CheckBruteForceOrders() {
  const std::string name = "brute-force G^LP orders 8, 48, 1152";
  return Guarded(3, name, [&](Clock::time_point start) {
    Checker c;
    const struct {
      int k, t;
      long order;
      uint64_t tested;
    } cases[] = {{2, 1, 8, 24}, {3, 1, 48, 40320}, {3, 2, 1152, 40320}};
    for (const auto& tc : cases) {
      const AutSearchResult r = BruteForceGlp(tc.k, tc.t);
      const std::string tag = "k=" + std::to_string(tc.k) + ",t=" + std::to_string(tc.t);
      c.Expect(r.order == tc.order, tag + " order " + Str(r.order));
      c.Expect(r.node_count == tc.tested,
               tag + " tested " + std::to_string(r.node_count) + " permutations");
      c.Expect(GroupOrder(r.generators) == r.order, tag + " generators do not span");
      c.Note(tag + ":" + Str(r.order));
    }
    c.Expect(SecondsSince(start) < 10.0, "took over 10 s");
    return c.Finish(3, name, start);
  });
}

CheckResult CheckRefineMatchesBrute() {
  const std::string name = "refinement search equals brute force; full G^LP orders";
  return Guarded(4, name, [&](Clock::time_point start) {
    Checker c;
    for (int k = 1; k <= 3; ++k) {
      for (int t = 1; t <= k; ++t) {
        const std::string tag = "k=" + std::to_string(k) + ",t=" + std::to_string(t);
        const AutSearchResult brute = BruteForceGlp(k, t);
        const AutSearchResult refine = RefineAutomorphisms(k, t);
        c.Expect(brute.order == refine.order,
                 tag + " brute " + Str(brute.order) + " vs refine " + Str(refine.order));
        const PermGroup gb(NumPoints(k), brute.generators);
        const PermGroup gr(NumPoints(k), refine.generators);
        for (const Permutation& g : brute.generators) {
          c.Expect(gr.Contains(g), tag + " brute generator missing from refine group");
        }
        for (const Permutation& g : refine.generators) {
          c.Expect(gb.Contains(g), tag + " refine generator missing from brute group");
        }
      }
    }
    const auto t0 = Clock::now();
    const struct {
      int k, t;
      long order;
    } larger[] = {{4, 1, 384}, {4, 2, 1920}, {5, 2, 23040}};
    for (const auto& tc : larger) {
      const AutSearchResult r = RefineAutomorphisms(tc.k, tc.t);
      const std::string tag = "k=" + std::to_string(tc.k) + ",t=" + std::to_string(tc.t);
      c.Expect(r.order == tc.order, tag + " order " + Str(r.order));
      c.Note(tag + ":" + Str(r.order));
    }
    c.Expect(SecondsSince(t0) < 60.0, "larger searches took over 60 s");
    return c.Finish(4, name, start);
  });
}

CheckResult CheckK3Exception() {
  const std::string name = "k=3 strength-2 group (192) is a proper subgroup of G^LP (1152)";
  return Guarded(5, name, [&](Clock::time_point start) {
    Checker c;
    const AutSearchResult glp = BruteForceGlp(3, 2);
    const PermGroup full(8, glp.generators);
    const PermGroup generated(8, Strength2Generators(3).perms);
    size_t hits = 0;
    size_t total = 0;
    generated.ForEachElement([&](const Permutation& g) {
      ++total;
      if (full.Contains(g)) ++hits;
      return true;
    });
    c.Expect(generated.order() == 192, "generated order " + Str(generated.order()));
    c.Expect(full.order() == 1152, "G^LP order " + Str(full.order()));
    c.Expect(total == 192 && hits == 192,
             std::to_string(hits) + "/" + std::to_string(total) + " members");
    c.Expect(full.order() > generated.order(), "containment is not proper");
    c.Note("192/192 contained, 1152 > 192");
    return c.Finish(5, name, start);
  });
}

CheckResult CheckRhoRelations() {
  const std::string name = "rho_i^2 = 1 and rho_i rho_j rho_i = (i j), k <= 6";
  return Guarded(6, name, [&](Clock::time_point start) {
    Checker c;
    size_t relations = 0;
    for (int k = 2; k <= 6; ++k) {
      const Permutation id = Permutation::Identity(NumPoints(k));
      for (int i = 1; i <= k; ++i) {
        const Permutation ri = RhoPerm(i, k);
        c.Expect(Compose(ri, ri) == id, "rho_" + std::to_string(i) + " not an involution");
        ++relations;
        for (int j = i + 1; j <= k; ++j) {
          const Permutation rj = RhoPerm(j, k);
          c.Expect(Compose(ri, Compose(rj, ri)) == FactorSwapPerm(i, j, k),
                   "k=" + std::to_string(k) + " rho_" + std::to_string(i) +
                       " rho_" + std::to_string(j) + " rho_" + std::to_string(i));
          ++relations;
        }
      }
    }
    c.Note(std::to_string(relations) + " relations verified");
    return c.Finish(6, name, start);
  });
}

CheckResult CheckHalfCombinations() {
  const std::string name = "viable half combinations are exactly {x_ab,x_ac,x_b,x_c}, k=3..5";
  return Guarded(7, name, [&](Clock::time_point start) {
    Checker c;
    // Sign rows (+,s2,s3,s4), s2 fastest; frozen after cross-checking the
    // entrywise test against the min/max screen.
    const std::array<bool, kSignRows> kFamilyRows = {false, true, true, false,
                                                     true, false, false, true};
    for (int k = 3; k <= 5; ++k) {
      const HalfComboReport r = ClassifyHalfCombinations(k);
      const std::string tag = "k=" + std::to_string(k);
      c.Expect(r.screens_agree, tag + " entrywise test and min/max screen disagree");
      c.Expect(r.family_all_have_viable, tag + " family member with no viable signs");
      c.Expect(r.sign_rule_holds, tag + " sign rule violated");
      size_t family_classes = 0;
      for (const HalfComboClass& cls : r.classes) {
        const bool any = std::find(cls.viable.begin(), cls.viable.end(), true) !=
                         cls.viable.end();
        if (any && !cls.in_family) {
          std::string rows;
          for (int row = 0; row < kSignRows; ++row) rows += cls.viable[row] ? '1' : '0';
          c.Expect(false, tag + " viable outside family: " + cls.name + " rows " + rows);
        }
        c.Expect(any || !cls.in_family, tag + " family class " + cls.name + " not viable");
        if (cls.in_family) {
          ++family_classes;
          c.Expect(cls.name == "12.13.2.3", tag + " family class named " + cls.name);
          c.Expect(cls.viable == kFamilyRows, tag + " family sign rows changed");
        }
      }
      c.Expect(family_classes == 1, tag + " family classes: " + std::to_string(family_classes));
      c.Note(tag + ": " + std::to_string(r.num_viable) + "/" +
             std::to_string(r.num_combinations) + " viable in " +
             std::to_string(r.classes.size()) + " classes");
    }
    for (const TabulatedCase& a : TabulatedCases()) {
      const bool family = a.name == "12.13.2.3";
      std::array<bool, kSignRows> none{};
      c.Expect(a.viable == (family ? kFamilyRows : none), "case " + a.name);
    }
    c.Expect(SecondsSince(start) < 30.0, "took over 30 s");
    return c.Finish(7, name, start);
  });
}

CheckResult CheckBasisImageForms() {
  const std::string name = "basis images: signed for k=4,t=2; a four-term half image for k=3,t=2";
  return Guarded(8, name, [&](Clock::time_point start) {
    Checker c;
    const ImageFormReport k4 = VerifyImageForms(4, 2);
    c.Expect(k4.coefficients_in_half_set, "k=4 coefficient outside {0,+-1/2,+-1}");
    c.Expect(k4.signed_images == k4.images_checked,
             "k=4: " + std::to_string(k4.images_checked - k4.signed_images) +
                 " images are not signed basis vectors");
    const ImageFormReport k3 = VerifyImageForms(3, 2);
    c.Expect(k3.coefficients_in_half_set, "k=3 coefficient outside {0,+-1/2,+-1}");
    c.Expect(k3.other_images == 0, "k=3 image outside the two forms");
    c.Expect(k3.half_four_example.has_value(), "k=3 no four-term half image of a main effect");
    const ImageFormReport k3t1 = VerifyImageForms(3, 1);
    c.Expect(k3t1.main_effects_to_main_effects, "k=3,t=1 main effect left the main effects");
    c.Note("k=4: " + std::to_string(k4.images_checked) + " signed images over " +
           std::to_string(k4.elements_scanned) + " elements; k=3: " +
           std::to_string(k3.half_four_images) + " half images");
    return c.Finish(8, name, start);
  });
}

CheckResult CheckFeasibilityTransport() {
  const std::string name = "G^LP generators map enumerated OAs to feasible points";
  return Guarded(9, name, [&](Clock::time_point start) {
    Checker c;
    for (const Triple& tr : kEnumTriples) {
      const std::string tag = "(" + std::to_string(tr.n) + "," + std::to_string(tr.k) +
                              "," + std::to_string(tr.t) + ")";
      const EnumResult all = EnumerateOa(tr.n, tr.k, tr.t, {});
      std::vector<Permutation> gens = SymmetryFor(tr.k, tr.t).perms;
      const AutSearchResult glp = RefineAutomorphisms(tr.k, tr.t);
      gens.insert(gens.end(), glp.generators.begin(), glp.generators.end());
      size_t checked = 0;
      for (const FrequencyVector& f : all.representatives) {
        for (const Permutation& g : gens) {
          const FrequencyVector image(f.k(), PermuteVector<Rational>(g, f.counts()));
          c.Expect(IsFeasible(image, tr.n, tr.k, tr.t, /*require_integral=*/true),
                   tag + " infeasible image");
          ++checked;
        }
      }
      c.Expect(!all.representatives.empty(), tag + " has no solutions");
      c.Note(tag + ":" + std::to_string(checked) + " images");
    }
    return c.Finish(9, name, start);
  });
}

CheckResult CheckEnumerationCounts() {
  const std::string name = "symmetry-pruned counts equal unpruned counts";
  return Guarded(10, name, [&](Clock::time_point start) {
    Checker c;
    // Regression values, first derived by the unpruned search.
    const struct {
      uint64_t solutions;
      size_t orbits;
    } pinned[] = {{2, 1}, {3, 2}, {2, 1}, {10, 1}};
    for (size_t i = 0; i < std::size(kEnumTriples); ++i) {
      const Triple& tr = kEnumTriples[i];
      const std::string tag = "(" + std::to_string(tr.n) + "," + std::to_string(tr.k) +
                              "," + std::to_string(tr.t) + ")";
      const EnumResult plain = EnumerateOa(tr.n, tr.k, tr.t, {});
      const GeneratorSet group = SymmetryFor(tr.k, tr.t);
      const EnumResult pruned = EnumerateOa(tr.n, tr.k, tr.t, group.perms);
      c.Expect(plain.total_solutions == pruned.total_solutions,
               tag + " unpruned " + std::to_string(plain.total_solutions) +
                   " vs reconstructed " + std::to_string(pruned.total_solutions));
      c.Expect(plain.representatives.size() == plain.total_solutions,
               tag + " unpruned search lost solutions");
      c.Expect(VerifyGroupAction(pruned, group.perms), tag + " group action check failed");
      c.Expect(plain.total_solutions == pinned[i].solutions,
               tag + " solutions " + std::to_string(plain.total_solutions));
      c.Expect(pruned.representatives.size() == pinned[i].orbits,
               tag + " orbits " + std::to_string(pruned.representatives.size()));
      c.Note(tag + ":" + std::to_string(plain.total_solutions) + "/" +
             std::to_string(pruned.representatives.size()));
    }
    return c.Finish(10, name, start);
  });
}

CheckResult CheckModelInvariants() {
  const std::string name = "M rows orthogonal with norm^2 2^k; Q Q = 2^k Q, 1<=t<=k<=6";
  return Guarded(11, name, [&](Clock::time_point start) {
    Checker c;
    size_t models = 0;
    for (int k = 1; k <= 6; ++k) {
      const int64_t n = int64_t{1} << k;
      for (int t = 1; t <= k; ++t) {
        const std::string tag = "k=" + std::to_string(k) + ",t=" + std::to_string(t);
        const ModelMatrix m = BuildM(k, t);
        bool orthogonal = m.num_rows() == ModelRowCount(k, t);
        for (size_t a = 0; a < m.num_rows() && orthogonal; ++a) {
          for (size_t b = a; b < m.num_rows(); ++b) {
            int64_t dot = 0;
            for (size_t p = 0; p < m.num_cols(); ++p) dot += m.rows[a][p] * m.rows[b][p];
            if (dot != (a == b ? n : 0)) orthogonal = false;
          }
        }
        c.Expect(orthogonal, tag + " rows not orthogonal");
        // Q from the rows, compared with the stored projection and squared.
        const std::vector<int64_t> q = GramProjection(k, t).Dense();
        bool q_ok = true;
        for (int64_t i = 0; i < n && q_ok; ++i) {
          for (int64_t j = 0; j < n; ++j) {
            int64_t direct = 0;
            for (const auto& row : m.rows) direct += row[i] * row[j];
            int64_t square = 0;
            for (int64_t l = 0; l < n; ++l) square += q[i * n + l] * q[l * n + j];
            if (direct != q[i * n + j] || square != n * q[i * n + j]) q_ok = false;
          }
        }
        c.Expect(q_ok, tag + " Q invariants fail");
        ++models;
      }
    }
    c.Note(std::to_string(models) + " models");
    return c.Finish(11, name, start);
  });
}

std::vector<CheckSpec> AllChecks() {
  return {
      {1, "wreath orders", CheckWreathOrders},
      {2, "strength-2 orders", CheckStrength2Orders},
      {3, "brute force", CheckBruteForceOrders},
      {4, "refinement", CheckRefineMatchesBrute},
      {5, "k=3 exception", CheckK3Exception},
      {6, "rho relations", CheckRhoRelations},
      {7, "half combinations", CheckHalfCombinations},
      {8, "basis image forms", CheckBasisImageForms},
      {9, "feasibility transport", CheckFeasibilityTransport},
      {10, "enumeration counts", CheckEnumerationCounts},
      {11, "model invariants", CheckModelInvariants},
  };
}

std::string FormatCheckLine(const CheckResult& r, bool show_seconds) {
  std::ostringstream line;
  line << (r.passed ? "PASS" : "FAIL") << "  [" << std::setw(2) << r.id << "] " << r.name;
  if (show_seconds) {
    line << "  (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
  }
  if (!r.detail.empty()) line << "  " << r.detail;
  return line.str();
}

std::vector<CheckResult> RunCheckSuite(std::ostream& out, bool show_seconds) {
  std::vector<CheckResult> results;
  for (const CheckSpec& spec : AllChecks()) {
    results.push_back(spec.run());
    out << FormatCheckLine(results.back(), show_seconds) << '\n' << std::flush;
  }
  return results;
}

}  // namespace oasym
