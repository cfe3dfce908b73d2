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

// Density increment and energy increment (regularity) over F_2^n.

#ifndef SUBUNIFORM_INCREMENTS_H_
#define SUBUNIFORM_INCREMENTS_H_

#include <optional>
#include <vector>

#include "subuniform/exact_arith.h"
#include "subuniform/gf_core.h"

namespace subuniform {

struct IncrementStep {
  Coset coset;
  Rational density;
  Rational sup_sq;
  // The frequency used to split this coset; empty on the final step.
  std::optional<GFVector> witness_r;
};

struct IncrementTrace {
  // Every visited coset, the last one being `final`.
  std::vector<IncrementStep> steps;
  Coset final;

  int refinements() const { return static_cast<int>(steps.size()) - 1; }
};

// Starting from the whole space, repeatedly splits the current coset along
// the hyperplane of its largest nontrivial coefficient and keeps the half on
// which A is denser, until A is eps-uniform there. Each split raises the
// density by more than eps, so there are fewer than 1/eps of them.
// F_2 only; throws InputError otherwise.
IncrementTrace density_increment(const PointSet& a, const Rational& eps);

// Mean over the cosets of W of (density of A on the coset)^2.
Rational partition_energy(const PointSet& a, const Subspace& w);

struct PipelineParams {
  Rational eps = 1;
  Rational eta = 0;
  // Unset: ceil(log2(1/eps)) + 1.
  std::optional<int> d;
  // Colour bucket count. Unset: ceil(1/eps).
  std::optional<int> buckets;
  int min_codim = 0;
  // Unset: n.
  std::optional<int> max_codim;
  // The reported bound is sup <= slack * eps.
  Rational slack = 4;

  // Throws InputError when the invariants fail for ambient dimension n.
  void validate(int n) const;
  int resolved_d() const;
  int resolved_buckets() const;
  int resolved_max_codim(int n) const { return max_codim.value_or(n); }
};

enum class RegularityOutcome { kSuccess, kCodimExhausted };

struct RegularityResult {
  RegularityOutcome outcome;
  Subspace w;
  // Fraction of cosets of w on which A is eps-uniform.
  Rational good_fraction;
  // Canonical representatives of the cosets that are not.
  std::vector<GFVector> bad_reps;
  int rounds = 0;
  // partition_energy of each subspace visited, in order.
  std::vector<Rational> energy_trace;
  std::vector<int> codim_trace;

  std::vector<GFVector> good_reps() const;
};

// Energy-increment regularity. Starts at the coordinate subspace of
// codimension min_codim and intersects W with the annihilator of every bad
// coset's witness each round until at most an eta fraction of cosets are
// bad. A round that would push codim(W) above max_codim ends the run with
// kCodimExhausted and the trace so far.
RegularityResult regularity_decompose(const PointSet& a, const Rational& eps,
                                      const Rational& eta, int min_codim,
                                      int max_codim);

}  // namespace subuniform

#endif  // SUBUNIFORM_INCREMENTS_H_
