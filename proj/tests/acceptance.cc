// Copyright 2026 The subuniform Authors.
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

// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons
// throughout. Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oracles.h"
#include "subuniform/exact_arith.h"
#include "subuniform/gf_core.h"
#include "subuniform/increments.h"
#include "subuniform/pipeline.h"
#include "subuniform/ramsey.h"
#include "subuniform/spectra.h"

namespace subuniform {
namespace {

namespace o = oracle;

struct Verdict {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (problems.size() < 3) problems.push_back(what);
    }
  }
};

std::string str(const Rational& r) { return format_rational(r); }

// Membership driven by a few hidden linear forms: the density level depends
// on the values of r_1.x, ..., r_forms.x.
PointSet structured_set(int n, int forms, std::mt19937_64& gen) {
  const auto rs = o::random_vectors(2, n, forms, gen);
  std::vector<double> level(std::size_t{1} << forms);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (auto& l : level) l = u(gen);
  std::uniform_real_distribution<double> coin(0, 1);
  return PointSet::from_predicate(2, n, [&](const GFVector& x) {
    std::size_t pattern = 0;
    for (const auto& r : rs) pattern = pattern << 1 | dot(r, x);
    return coin(gen) < level[pattern];
  });
}

std::set<std::uint64_t> elements(const Subspace& v) {
  return o::span_ranks(v.p(), v.n(), v.basis());
}

// 1. Every positive-dimensional subspace of F_3^n has sup_sq >= 1/12.
Verdict f3_threshold(int max_n) {
  Verdict v;
  std::ostringstream counts;
  for (int n = 1; n <= max_n; ++n) {
    const PointSet a = build_f3_example(n);
    a.members();
    for (std::uint64_t r = 0; r < o::ipow(3, n); ++r) {
      const GFVector x = GFVector::from_rank(3, n, r);
      int first = 0;
      for (int i = 0; i < n && first == 0; ++i) first = x[i];
      v.require(a.contains(x) == (first == 1), "F_3 set membership n=" + std::to_string(n));
    }
    const auto by_dim = o::all_subspaces(3, n);
    std::uint64_t expected = 0;
    for (int k = 1; k <= n; ++k) {
      v.require(BigInt(by_dim[k].size()) == o::gaussian_binomial(3, n, k),
                "subspace count n=" + std::to_string(n) + " k=" + std::to_string(k));
      expected += by_dim[k].size();
      for (const auto& elems : by_dim[k]) {
        const Rational s = o::uniformity_sup(a, GFVector(3, n), o::basis_of(3, n, elems));
        v.require(s >= kF3Threshold, "oracle sup below 1/12 at n=" + std::to_string(n));
      }
    }
    const F3Report rep = verify_f3_example(n, n == 5);
    v.require(rep.total_subspaces == expected, "library count n=" + std::to_string(n));
    v.require(rep.all_passed, "library verdict n=" + std::to_string(n));
    for (const auto& rec : rep.records) {
      v.require(by_dim[rec.v.dim()].contains(elements(rec.v)), "unknown subspace");
      v.require(rec.sup_sq == o::uniformity_sup(a, GFVector(3, n), rec.v.basis()),
                "library sup differs from oracle");
      v.require(rec.sup_sq >= kF3Threshold, "library sup below 1/12");
    }
    counts << (n > 1 ? "," : "") << expected;
  }
  v.detail = "n=1.." + std::to_string(max_n) + " subspaces " + counts.str();
  return v;
}

// 2. 3b = -|V| at r = e_j and the two inclusions, per subspace.
Verdict f3_witness(int max_n) {
  Verdict v;
  std::uint64_t checked = 0;
  for (int n = 1; n <= max_n; ++n) {
    const PointSet a = build_f3_example(n);
    const auto by_dim = o::all_subspaces(3, n);
    std::map<std::set<std::uint64_t>, const F3Record*> library;
    const F3Report rep = verify_f3_example(n, n == 5);
    for (const auto& rec : rep.records) library[elements(rec.v)] = &rec;
    for (int k = 1; k <= n; ++k) {
      for (const auto& elems : by_dim[k]) {
        std::vector<GFVector> xs;
        for (auto e : elems) xs.push_back(GFVector::from_rank(3, n, e));
        int j = n;
        for (const auto& x : xs) {
          for (int i = 0; i < n; ++i) {
            if (x[i] != 0) j = std::min(j, i);
          }
        }
        Eisenstein64 coef;
        bool ones_in = true, twos_out = true;
        for (const auto& x : xs) {
          if (a.contains(x)) coef += Eisenstein64::omega_pow(-x[j]);
          if (x[j] == 1) ones_in = ones_in && a.contains(x);
          if (x[j] == 2) twos_out = twos_out && !a.contains(x);
        }
        const auto size = static_cast<std::int64_t>(xs.size());
        v.require(3 * coef.b() == -size, "3b != -|V|");
        v.require(ones_in && twos_out, "inclusions fail");
        const auto it = library.find(elems);
        v.require(it != library.end(), "subspace missing from library report");
        if (it != library.end()) {
          const F3Record& rec = *it->second;
          v.require(rec.j == j && rec.coefficient == coef, "library witness differs");
          v.require(rec.witness_identity_holds && rec.inclusions_hold && rec.ok(),
                    "library flags");
        }
        ++checked;
      }
    }
  }
  v.detail = std::to_string(checked) + " subspaces";
  return v;
}

std::vector<std::int64_t> random_table(std::size_t size, std::mt19937_64& gen) {
  std::uniform_int_distribution<std::int64_t> val(-7, 7);
  std::vector<std::int64_t> f(size);
  for (auto& x : f) x = val(gen);
  return f;
}

// Corpora shared by criteria 3 and 4.
void for_each_wht_case(const std::function<void(const std::vector<std::int64_t>&, int)>& fn) {
  for (int mask = 0; mask < 256; ++mask) {
    std::vector<std::int64_t> f(8);
    for (int i = 0; i < 8; ++i) f[i] = mask >> i & 1;
    fn(f, 3);
  }
  std::mt19937_64 gen(3003);
  for (int k = 4; k <= 8; ++k) {
    for (int i = 0; i < 1000; ++i) fn(random_table(std::size_t{1} << k, gen), k);
  }
}

void for_each_dft3_case(const std::function<void(const std::vector<std::int64_t>&, int)>& fn) {
  for (int k = 1; k <= 2; ++k) {
    const std::uint64_t size = o::ipow(3, k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
      std::vector<std::int64_t> f(size);
      for (std::uint64_t i = 0; i < size; ++i) f[i] = mask >> i & 1;
      fn(f, k);
    }
  }
  std::mt19937_64 gen(3033);
  for (int k = 3; k <= 6; ++k) {
    const int samples = k <= 4 ? 200 : k == 5 ? 50 : 10;
    for (int i = 0; i < samples; ++i) fn(random_table(o::ipow(3, k), gen), k);
  }
}

// 3. Fast transforms equal the double sums.
Verdict transforms() {
  Verdict v;
  int cases = 0;
  for_each_wht_case([&](const std::vector<std::int64_t>& f, int k) {
    std::vector<std::int64_t> g = f;
    wht2(g);
    v.require(g == o::wht(f, k), "wht2 k=" + std::to_string(k));
    ++cases;
  });
  for_each_dft3_case([&](const std::vector<std::int64_t>& f, int k) {
    v.require(dft3(f) == o::dft3(f, k), "dft3 k=" + std::to_string(k));
    ++cases;
  });
  v.detail = std::to_string(cases) + " functions";
  return v;
}

// 4. Parseval and the inversion identities.
Verdict parseval() {
  Verdict v;
  int cases = 0;
  for_each_wht_case([&](const std::vector<std::int64_t>& f, int k) {
    std::vector<std::int64_t> g = f;
    wht2(g);
    std::int64_t lhs = 0, rhs = 0;
    for (auto x : g) lhs += x * x;
    for (auto x : f) rhs += x * x;
    v.require(lhs == (std::int64_t{1} << k) * rhs, "wht Parseval k=" + std::to_string(k));
    wht2(g);
    for (std::size_t i = 0; i < f.size(); ++i) {
      v.require(g[i] == (std::int64_t{1} << k) * f[i], "wht involution k=" + std::to_string(k));
    }
    ++cases;
  });
  for_each_dft3_case([&](const std::vector<std::int64_t>& f, int k) {
    auto g = dft3(f);
    std::int64_t lhs = 0, rhs = 0;
    for (const auto& z : g) lhs += z.a() * z.a() - z.a() * z.b() + z.b() * z.b();
    for (auto x : f) rhs += x * x;
    const auto size = static_cast<std::int64_t>(f.size());
    v.require(lhs == size * rhs, "dft3 Parseval k=" + std::to_string(k));
    // Applying the transform twice gives size * f(-x).
    dft3_inplace(g);
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      const std::uint64_t neg = o::rank_scale(3, k, x, 2);
      v.require(g[x] == Eisenstein64(size * f[neg]), "dft3 inversion k=" + std::to_string(k));
    }
    ++cases;
  });
  v.detail = std::to_string(cases) + " functions";
  return v;
}

// 5. Density increment on F_2^10, eps = 1/10.
Verdict density_increments() {
  Verdict v;
  const Rational eps(1, 10);
  int steps = 0, max_codim = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::mt19937_64 gen(5000 + trial);
    const PointSet a = structured_set(10, trial % 5, gen);
    const IncrementTrace t = density_increment(a, eps);
    v.require(o::uniformity_sup(a, t.final.rep(), t.final.subspace().basis()) <= eps * eps,
              "final coset not eps-uniform, trial " + std::to_string(trial));
    for (std::size_t i = 1; i < t.steps.size(); ++i) {
      const auto& c = t.steps[i].coset;
      std::uint64_t hits = 0;
      for (auto e : elements(c.subspace())) {
        hits += a.contains_rank(o::rank_add(2, 10, c.rep().rank(), e));
      }
      const Rational density(BigInt(hits), BigInt(c.subspace().size()));
      v.require(density == t.steps[i].density, "trace density, trial " + std::to_string(trial));
      v.require(t.steps[i].density - t.steps[i - 1].density > eps,
                "increment <= eps, trial " + std::to_string(trial));
    }
    v.require(t.final.subspace().codim() <= 10, "codim > 10");
    steps += t.refinements();
    max_codim = std::max(max_codim, t.final.subspace().codim());
  }
  v.detail = "100 sets, " + std::to_string(steps) + " refinements, max codim " +
             std::to_string(max_codim);
  return v;
}

// Independent per-coset check: groups F_2^n into cosets of W by closure and
// counts those with restricted sup <= eps^2.
Rational good_fraction_by_oracle(const PointSet& a, const Subspace& w, const Rational& eps) {
  const int n = a.n();
  const auto welems = elements(w);
  std::vector<bool> seen(a.ambient(), false);
  std::uint64_t good = 0, total = 0;
  for (std::uint64_t x = 0; x < a.ambient(); ++x) {
    if (seen[x]) continue;
    for (auto e : welems) seen[o::rank_add(2, n, x, e)] = true;
    ++total;
    if (o::restricted_sup(a, GFVector::from_rank(2, n, x), w.basis()) <= eps * eps) ++good;
  }
  return Rational(BigInt(good), BigInt(total));
}

// 6. Regularity on F_2^12, eps = 1/4, eta = 1/8, min_codim = 2.
Verdict regularity() {
  Verdict v;
  const Rational eps(1, 4), eta(1, 8);
  int successes = 0, max_rounds = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::mt19937_64 gen(6000 + trial);
    const PointSet a = structured_set(12, 1 + trial % 6, gen);
    const RegularityResult r = regularity_decompose(a, eps, eta, 2, 12);
    const std::string tag = ", trial " + std::to_string(trial);
    v.require(r.rounds <= 128, "rounds > 128" + tag);
    v.require(r.codim_trace.front() == 2 && r.w.codim() >= 2, "codim below 2" + tag);
    for (std::size_t i = 1; i < r.energy_trace.size(); ++i) {
      v.require(r.energy_trace[i] - r.energy_trace[i - 1] > eta * eps * eps,
                "energy increment too small" + tag);
    }
    if (r.outcome == RegularityOutcome::kSuccess) {
      ++successes;
      const Rational good = good_fraction_by_oracle(a, r.w, eps);
      v.require(good >= 1 - eta, "good fraction " + str(good) + tag);
      v.require(good == r.good_fraction, "good fraction differs from report" + tag);
    }
    max_rounds = std::max(max_rounds, r.rounds);
  }
  v.detail = "20 sets, " + std::to_string(successes) + " succeeded, max rounds " +
             std::to_string(max_rounds);
  return v;
}

// Lexicographically least independent pair {x, y} with x, y, x+y alike.
std::optional<std::pair<std::uint64_t, std::uint64_t>> brute_pair(
    const std::vector<int>& colour, std::uint64_t size) {
  for (std::uint64_t x = 1; x < size; ++x) {
    for (std::uint64_t y = x + 1; y < size; ++y) {
      const int c = colour[x];
      if (c >= 0 && colour[y] == c && colour[x ^ y] == c) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

// 7. Subset-sum search against brute force on every 2-colouring of
// F_2^m \ {0}, m <= 3.
Verdict ramsey(int& minimal_m) {
  Verdict v;
  minimal_m = -1;
  int colourings = 0;
  for (int m = 1; m <= 3; ++m) {
    const std::uint64_t size = std::uint64_t{1} << m;
    bool all_have_structure = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (size - 1)); ++mask) {
      std::vector<int> colour(size, -1);
      AlmostColouring c(m, 1);
      for (std::uint64_t x = 1; x < size; ++x) {
        colour[x] = static_cast<int>(mask >> (x - 1) & 1);
        c.set(x, colour[x]);
      }
      const auto expected = brute_pair(colour, size);
      const auto found = find_union_structure(c, 2);
      v.require(found.has_value() == expected.has_value(), "presence differs");
      if (found && expected) {
        v.require(verify_union_structure(c, *found), "structure fails verification");
        v.require(found->xs[0].rank() == expected->first &&
                      found->xs[1].rank() == expected->second,
                  "not the least structure");
      }
      all_have_structure = all_have_structure && expected.has_value();
      ++colourings;
    }
    if (all_have_structure && minimal_m < 0) minimal_m = m;
  }
  v.require(minimal_m == 3, "minimal m = " + std::to_string(minimal_m));
  v.detail = std::to_string(colourings) + " colourings, minimal m = " + std::to_string(minimal_m);
  return v;
}

// Unnormalized sum_{y in x+S, y in A} (-1)^{r.y}.
std::int64_t coset_coefficient(const PointSet& a, std::uint64_t x,
                               const std::set<std::uint64_t>& s, std::uint64_t r) {
  std::int64_t out = 0;
  for (auto e : s) {
    const std::uint64_t y = o::rank_add(2, a.n(), x, e);
    if (a.contains_rank(y)) out += o::rank_dot(2, a.n(), r, y) ? -1 : 1;
  }
  return out;
}

// 8. mu_V = 2^-d sum_I mu_{W + x_I}, coefficientwise, and the vanishing
// product on W^perp \ V^perp.
Verdict decomposition() {
  Verdict v;
  std::uint64_t vanishing = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::mt19937_64 gen(8000 + trial);
    const int n = 4 + trial % 4;
    const int d = 1 + trial % 3;
    const PointSet a = o::random_set(2, n, 0.5, gen);
    std::uniform_int_distribution<int> wdim(0, n - d);
    const auto wgens = o::random_vectors(2, n, wdim(gen), gen);
    const Subspace w = rref_basis(2, n, wgens);
    std::vector<GFVector> xs;
    std::set<std::uint64_t> span = o::span_ranks(2, n, wgens);
    while (static_cast<int>(xs.size()) < d) {
      const GFVector x = o::random_vector(2, n, gen);
      if (span.contains(x.rank())) continue;
      xs.push_back(x);
      auto gens = wgens;
      gens.insert(gens.end(), xs.begin(), xs.end());
      span = o::span_ranks(2, n, gens);
    }
    const std::vector<GFVector> one_more(xs.begin(), xs.end());
    const Subspace vsub = extend_span(w, one_more);
    const auto welems = elements(w);
    const auto vperp = o::annihilator_ranks(2, n, vsub.basis());
    const auto wperp = o::annihilator_ranks(2, n, w.basis());
    const Spectrum sv = restricted_spectrum(a, Coset(vsub));
    std::vector<std::uint64_t> shifts;
    std::vector<Spectrum> parts;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
      std::uint64_t s = 0;
      for (int i = 0; i < d; ++i) {
        if (mask >> i & 1) s = o::rank_add(2, n, s, xs[i].rank());
      }
      shifts.push_back(s);
      parts.push_back(restricted_spectrum(a, Coset(GFVector::from_rank(2, n, s), w)));
    }
    const std::string tag = ", trial " + std::to_string(trial);
    v.require(vsub.dim() == w.dim() + d, "V has the wrong dimension" + tag);
    for (std::uint64_t r = 0; r < a.ambient(); ++r) {
      const GFVector rv = GFVector::from_rank(2, n, r);
      const std::int64_t whole = coset_coefficient(a, 0, span, r);
      std::int64_t sum = 0;
      for (std::size_t i = 0; i < shifts.size(); ++i) {
        const std::int64_t part = coset_coefficient(a, shifts[i], welems, r);
        sum += part;
        v.require(ambient_coefficient(parts[i], rv) == Eisenstein64(part),
                  "library coset coefficient" + tag);
      }
      v.require(whole == sum, "decomposition identity" + tag);
      v.require(ambient_coefficient(sv, rv) == Eisenstein64(whole), "library V coefficient" + tag);
      if (wperp.contains(r) && !vperp.contains(r)) {
        std::int64_t signs = 0;
        for (auto s : shifts) signs += o::rank_dot(2, n, r, s) ? -1 : 1;
        v.require(signs == 0, "character sum does not vanish" + tag);
        ++vanishing;
      }
    }
  }
  v.detail = "200 instances, " + std::to_string(vanishing) + " vanishing sums";
  return v;
}

// 9. Pipeline against the exhaustive oracle on F_2^8, eps = 1/4.
Verdict pipeline_vs_oracle() {
  Verdict v;
  const Rational eps(1, 4);
  std::map<std::string, int> labels;
  for (int trial = 0; trial < 50; ++trial) {
    std::mt19937_64 gen(9000 + trial);
    const PointSet a = trial % 2 ? structured_set(8, 1 + trial % 4, gen)
                                 : o::random_set(2, 8, 0.5, gen);
    PipelineParams params;
    params.eps = eps;
    params.eta = Rational(1, 8);
    params.min_codim = 4;
    const PipelineReport r = find_uniform_subspace(a, params);
    const std::string tag = ", trial " + std::to_string(trial);
    if (r.outcome != PipelineOutcome::kSuccess) {
      ++labels[to_string(r.outcome)];
      const bool labelled =
          (r.outcome == PipelineOutcome::kRamseyFailure &&
           r.regularity.outcome == RegularityOutcome::kSuccess && r.colouring.has_value()) ||
          (r.outcome == PipelineOutcome::kCodimExhausted &&
           r.regularity.outcome == RegularityOutcome::kCodimExhausted);
      v.require(labelled, "failure without stage diagnostics" + tag);
      continue;
    }
    ++labels[std::string("success/") + to_string(*r.assembly)];
    const Rational bound = 16 * eps * eps;
    const Rational sup = o::uniformity_sup(a, GFVector(2, 8), r.v->basis());
    v.require(sup == r.sup_sq, "reported sup differs from oracle" + tag);
    v.require(sup <= bound && r.within_bound, "sup above (4 eps)^2" + tag);
    const BestSubspace best = exhaustive_best_subspace(a, 3);
    v.require(best.sup_sq <= eps * eps, "oracle found nothing eps-uniform" + tag);
    v.require(o::uniformity_sup(a, GFVector(2, 8), best.v.basis()) == best.sup_sq,
              "oracle subspace fails re-check" + tag);
  }
  std::string detail = "50 sets:";
  for (const auto& [label, count] : labels) detail += " " + label + "=" + std::to_string(count);
  v.detail = detail;
  return v;
}

// 10. Unions of cosets of a codim-c subspace of F_2^8 are exactly uniform on
// some subspace found by the pipeline or the oracle.
Verdict structured_inputs() {
  Verdict v;
  int by_pipeline = 0, by_oracle = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::mt19937_64 gen(10000 + trial);
    const int c = 1 + trial % 3;
    std::vector<GFVector> forms;
    while (static_cast<int>(forms.size()) < c || rref_basis(2, 8, forms).dim() < c) {
      forms = o::random_vectors(2, 8, c, gen);
    }
    std::uniform_int_distribution<std::uint64_t> pick_count(1, (std::uint64_t{1} << c) - 1);
    std::vector<std::uint64_t> cells((std::uint64_t{1} << c));
    for (std::uint64_t i = 0; i < cells.size(); ++i) cells[i] = i;
    std::shuffle(cells.begin(), cells.end(), gen);
    cells.resize(pick_count(gen));
    const PointSet a = PointSet::from_predicate(2, 8, [&](const GFVector& x) {
      std::uint64_t cell = 0;
      for (const auto& f : forms) cell = cell << 1 | dot(f, x);
      return std::find(cells.begin(), cells.end(), cell) != cells.end();
    });
    PipelineParams params;
    params.eps = Rational(1, 10);
    const PipelineReport r = find_uniform_subspace(a, params);
    if (r.outcome == PipelineOutcome::kSuccess && r.sup_sq == 0 &&
        o::uniformity_sup(a, GFVector(2, 8), r.v->basis()) == 0) {
      ++by_pipeline;
      continue;
    }
    const BestSubspace best = exhaustive_best_subspace(a, c);
    const bool exact = best.sup_sq == 0 &&
                       o::uniformity_sup(a, GFVector(2, 8), best.v.basis()) == 0;
    v.require(exact, "no exactly uniform subspace, trial " + std::to_string(trial));
    if (exact) ++by_oracle;
  }
  v.detail = "30 sets, pipeline " + std::to_string(by_pipeline) + ", oracle " +
             std::to_string(by_oracle);
  return v;
}

}  // namespace
}  // namespace subuniform

int main(int argc, char** argv) {
  using namespace subuniform;
  CLI::App app{"Acceptance suite"};
  bool long_run = false;
  app.add_flag("--long-run", long_run, "Extend the F_3 checks to n = 5");
  CLI11_PARSE(app, argc, argv);

  const int f3_n = long_run ? 5 : 4;
  int minimal_m = -1;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"F_3 example: sup_sq >= 1/12 on every subspace", [&] { return f3_threshold(f3_n); }},
      {"F_3 example: 3b = -|V| and inclusions", [&] { return f3_witness(f3_n); }},
      {"transforms match double sums", transforms},
      {"Parseval and inversion", parseval},
      {"density increment, F_2^10, eps 1/10", density_increments},
      {"regularity, F_2^12, eps 1/4, eta 1/8", regularity},
      {"subset-sum search vs brute force", [&] { return ramsey(minimal_m); }},
      {"coset decomposition and vanishing sums", decomposition},
      {"pipeline vs exhaustive oracle, F_2^8", pipeline_vs_oracle},
      {"unions of cosets are exactly uniform", structured_inputs},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto started = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::string line = (v.pass ? "PASS " : "FAIL ") + std::to_string(i + 1) + " " +
                       criteria[i].first + " [" + v.detail;
    for (const auto& p : v.problems) line += "; " + p;
    std::printf("%s] %.1fs\n", line.c_str(), secs);
    std::fflush(stdout);
    failures += !v.pass;
  }
  return failures == 0 ? 0 : 1;
}
