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

#include "subuniform/pipeline.h"

#include "subuniform/errors.h"
#include "subuniform/spectra.h"

namespace subuniform {
namespace {

using Wide = unsigned __int128;

// norm_a / scale_a^2 < norm_b / scale_b^2
bool less_sup(const SupNorm& a, std::uint64_t scale_a, const SupNorm& b,
              std::uint64_t scale_b) {
  return static_cast<Wide>(a.max_norm) * scale_b * scale_b <
         static_cast<Wide>(b.max_norm) * scale_a * scale_a;
}

}  // namespace

const char* to_string(PipelineOutcome o) {
  switch (o) {
    case PipelineOutcome::kSuccess:
      return "success";
    case PipelineOutcome::kRamseyFailure:
      return "ramsey_failure";
    case PipelineOutcome::kCodimExhausted:
      return "codim_exhausted";
  }
  return "?";
}

const char* to_string(Assembly a) {
  return a == Assembly::kRamsey ? "ramsey" : "zero_coset";
}

PipelineReport find_uniform_subspace(const PointSet& a,
                                     const PipelineParams& params) {
  if (a.p() != 2) throw InputError("the pipeline is defined over F_2 only");
  params.validate(a.n());
  const Rational eps_sq = params.eps * params.eps;

  PipelineReport report{PipelineOutcome::kCodimExhausted,
                        std::nullopt,
                        params.resolved_d(),
                        params.resolved_buckets(),
                        regularity_decompose(a, params.eps, params.eta,
                                             params.min_codim,
                                             params.resolved_max_codim(a.n())),
                        std::nullopt,
                        std::nullopt,
                        {},
                        {},
                        std::nullopt};
  report.bound_sq = params.slack * params.slack * eps_sq;
  if (report.regularity.outcome == RegularityOutcome::kCodimExhausted) {
    return report;
  }
  const Subspace& w = report.w();

  const std::vector<GFVector> good = report.regularity.good_reps();
  report.colouring = bucket_colouring(a, w, report.buckets, good);
  if (auto found = find_union_structure(*report.colouring, report.d)) {
    report.assembly = Assembly::kRamsey;
    report.colour = found->colour;
    report.quotient_xs = found->xs;
    for (const auto& q : found->xs) report.xs.push_back(quotient_lift(q, w));
    report.v = extend_span(w, report.xs);
  } else {
    const UniformityReport on_w = uniformity_sup(a, Coset(w));
    if (on_w.sup_sq > eps_sq) {
      report.outcome = PipelineOutcome::kRamseyFailure;
      return report;
    }
    report.assembly = Assembly::kZeroCoset;
    report.v = w;
  }

  report.outcome = PipelineOutcome::kSuccess;
  report.sup_sq = uniformity_sup(a, Coset(*report.v)).sup_sq;
  report.within_bound = report.sup_sq <= report.bound_sq;
  return report;
}

BestSubspace exhaustive_best_subspace(const PointSet& a, int max_codim,
                                      std::uint64_t budget) {
  const int p = a.p();
  const int n = a.n();
  if (max_codim < 0 || max_codim > n) {
    throw InputError("max_codim must lie in [0, n]");
  }
  BigInt total = 0;
  for (int c = 0; c <= max_codim; ++c) total += gaussian_binomial(p, n, n - c);
  if (total > budget) {
    throw BudgetError("oracle would examine " + total.str() +
                      " subspaces, budget is " + std::to_string(budget));
  }

  std::optional<Subspace> best;
  SupNorm best_sup;
  std::uint64_t best_scale = 1;
  std::uint64_t examined = 0;
  for (int c = 0; c <= max_codim; ++c) {
    for_each_subspace(p, n, n - c, [&](const Subspace& v) {
      ++examined;
      const SupNorm s = sup_norm(a, Coset(v));
      if (!best || less_sup(s, v.size(), best_sup, best_scale)) {
        best = v;
        best_sup = s;
        best_scale = v.size();
      }
    });
  }
  const BigInt scale(best_scale);
  return {*best, Rational(BigInt(best_sup.max_norm), scale * scale), examined};
}

PointSet build_f3_example(int n) {
  if (n < 1 || n > 5) throw InputError("build_f3_example needs 1 <= n <= 5");
  return PointSet::from_predicate(3, n, [](const GFVector& x) {
    const int i = x.leading_index();
    return i < x.n() && x[i] == 1;
  });
}

F3Report verify_f3_example(int n, bool long_run) {
  if (n < 1 || n > 5 || (n == 5 && !long_run)) {
    throw InputError("verify_f3_example needs 1 <= n <= 4 (5 with long_run)");
  }
  const PointSet a = build_f3_example(n);
  F3Report report{n, {}, 0, true, std::nullopt};
  for (int k = 1; k <= n; ++k) {
    for_each_subspace(3, n, k, [&](const Subspace& v) {
      const Coset c(v);
      const UniformityReport u = uniformity_sup(a, c);
      const Spectrum s = restricted_spectrum(a, c);
      const int j = v.pivots().front();
      const GFVector ej = GFVector::unit(3, n, j);

      F3Record rec{v, u.sup_sq, *u.witness_r, false, 0, {}, false, false, false, false};
      rec.passed = u.sup_sq >= kF3Threshold;
      rec.j = j;
      rec.coefficient = ambient_coefficient(s, ej);
      rec.witness_identity_holds =
          3 * rec.coefficient.b() == -static_cast<std::int64_t>(v.size());
      rec.witness_outside_perp = !perp(v).contains(ej);

      bool inclusions = true;
      std::uint64_t ones = 0;
      for (std::uint64_t t = 0; t < v.size(); ++t) {
        const GFVector x = v.element(t);
        if (x[j] == 1) {
          ++ones;
          inclusions = inclusions && a.contains(x);
        } else if (x[j] == 2) {
          inclusions = inclusions && !a.contains(x);
        }
      }
      rec.inclusions_hold = inclusions;
      rec.equidistributed = 3 * ones == v.size();

      if (!rec.ok() && !report.first_failure) report.first_failure = v;
      report.all_passed = report.all_passed && rec.ok();
      report.records.push_back(std::move(rec));
      ++report.total_subspaces;
    });
  }
  return report;
}

}  // namespace subuniform
