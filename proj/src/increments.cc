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

#include "subuniform/increments.h"

#include <set>
#include <stdexcept>
#include <string>

#include "subuniform/errors.h"
#include "subuniform/spectra.h"

namespace subuniform {
namespace {

void require_f2(const PointSet& a, const char* what) {
  if (a.p() != 2) throw InputError(std::string(what) + " is defined over F_2 only");
}

// True iff max_norm / scale^2 > eps_sq.
bool exceeds(std::int64_t max_norm, std::uint64_t scale, const Rational& eps_sq) {
  const BigInt s(scale);
  return Rational(BigInt(max_norm)) > eps_sq * Rational(s * s);
}

}  // namespace

IncrementTrace density_increment(const PointSet& a, const Rational& eps) {
  require_f2(a, "density_increment");
  const UniformityParams params(eps);
  const Rational eps_sq = params.eps_sq();
  const int n = a.n();

  Coset current(Subspace::full(2, n));
  std::vector<IncrementStep> steps;
  for (;;) {
    UniformityReport report = uniformity_sup(a, current);
    if (report.sup_sq <= eps_sq) {
      steps.push_back({current, report.density, report.sup_sq, std::nullopt});
      break;
    }
    const GFVector r = *report.witness_r;
    steps.push_back({current, report.density, report.sup_sq, r});

    const Subspace& v = current.subspace();
    const GFVector rv[] = {r};
    const Subspace half = perp(extend_span(perp(v), rv));
    // A basis vector on which r is nonzero moves between the two halves.
    GFVector step(2, n);
    for (const auto& b : v.basis()) {
      if (dot(r, b) != 0) {
        step = b;
        break;
      }
    }
    const GFVector x0 = dot(r, current.rep()) == 0 ? current.rep() : current.rep() + step;
    const Coset h0(x0, half);
    const Coset h1(x0 + step, half);
    const std::uint64_t c0 = count_on_coset(a, h0);
    const std::uint64_t c1 = count_on_coset(a, h1);
    // |c0 - c1| > 0 because the coefficient exceeds eps.
    current = c0 > c1 ? h0 : h1;
  }
  return IncrementTrace{std::move(steps), current};
}

Rational partition_energy(const PointSet& a, const Subspace& w) {
  const std::vector<std::uint64_t> counts = coset_counts(a, w);
  BigInt sum = 0;
  for (std::uint64_t c : counts) sum += BigInt(c) * c;
  const BigInt cell(w.size());
  return Rational(sum, cell * cell * counts.size());
}

void PipelineParams::validate(int n) const {
  if (eps <= 0 || eps > 1) throw InputError("eps must lie in (0, 1]");
  if (eta < 0 || eta >= 1) throw InputError("eta must lie in [0, 1)");
  if (d && *d < 1) throw InputError("d must be at least 1");
  if (buckets && *buckets < 1) throw InputError("buckets must be at least 1");
  if (slack <= 0) throw InputError("slack must be positive");
  const int hi = resolved_max_codim(n);
  if (min_codim < 0 || min_codim > hi || hi > n) {
    throw InputError("need 0 <= min_codim <= max_codim <= n");
  }
}

int PipelineParams::resolved_d() const {
  if (d) return *d;
  // Smallest e with 2^e >= 1/eps.
  int e = 0;
  Rational pow = 1;
  while (pow * eps < 1) {
    pow *= 2;
    ++e;
  }
  return e + 1;
}

int PipelineParams::resolved_buckets() const {
  if (buckets) return *buckets;
  const Rational inv = 1 / eps;
  BigInt q = boost::multiprecision::numerator(inv) /
             boost::multiprecision::denominator(inv);
  if (Rational(q) < inv) ++q;
  return q.convert_to<int>();
}

std::vector<GFVector> RegularityResult::good_reps() const {
  std::set<GFVector> bad(bad_reps.begin(), bad_reps.end());
  std::vector<GFVector> out;
  const std::uint64_t cells = ambient_size(w.p(), w.codim());
  for (std::uint64_t q = 0; q < cells; ++q) {
    GFVector rep = quotient_lift(q, w);
    if (!bad.contains(rep)) out.push_back(rep);
  }
  return out;
}

RegularityResult regularity_decompose(const PointSet& a, const Rational& eps,
                                      const Rational& eta, int min_codim,
                                      int max_codim) {
  require_f2(a, "regularity_decompose");
  PipelineParams check;
  check.eps = eps;
  check.eta = eta;
  check.min_codim = min_codim;
  check.max_codim = max_codim;
  check.validate(a.n());

  const Rational eps_sq = eps * eps;
  RegularityResult result{RegularityOutcome::kSuccess,
                          Subspace::coordinate(2, a.n(), min_codim),
                          0,
                          {},
                          0,
                          {},
                          {}};
  for (;;) {
    Subspace& w = result.w;
    result.energy_trace.push_back(partition_energy(a, w));
    result.codim_trace.push_back(w.codim());

    const std::uint64_t cells = ambient_size(2, w.codim());
    std::set<GFVector> witnesses;
    result.bad_reps.clear();
    for (std::uint64_t q = 0; q < cells; ++q) {
      const Coset c(quotient_lift(q, w), w);
      const SupNorm sup = sup_norm(a, c);
      if (w.dim() > 0 && exceeds(sup.max_norm, w.size(), eps_sq)) {
        result.bad_reps.push_back(c.rep());
        // Lifts are canonical mod W^perp, so equal classes give equal r.
        witnesses.insert(
            lift_character(GFVector::from_rank(2, w.dim(), sup.index), w));
      }
    }
    const BigInt bad(result.bad_reps.size());
    result.good_fraction = 1 - Rational(bad, BigInt(cells));
    if (Rational(bad) <= eta * Rational(BigInt(cells))) return result;

    const std::vector<GFVector> rs(witnesses.begin(), witnesses.end());
    Subspace refined = perp(extend_span(perp(w), rs));
    if (refined.codim() > max_codim) {
      result.outcome = RegularityOutcome::kCodimExhausted;
      return result;
    }
    w = std::move(refined);
    ++result.rounds;
  }
}

}  // namespace subuniform
