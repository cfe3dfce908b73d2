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

// End-to-end procedures: finding a subspace (through the origin) on which a
// set is uniform, the exhaustive small-n oracle for the same question, and
// the F_3 set that is non-uniform on every nonzero subspace.

#ifndef SUBUNIFORM_PIPELINE_H_
#define SUBUNIFORM_PIPELINE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "subuniform/exact_arith.h"
#include "subuniform/gf_core.h"
#include "subuniform/increments.h"
#include "subuniform/ramsey.h"

namespace subuniform {

enum class PipelineOutcome { kSuccess, kRamseyFailure, kCodimExhausted };

// How V was assembled on success.
enum class Assembly {
  // V = W + <x_1..x_d> from a monochromatic subset-sum structure.
  kRamsey,
  // No structure was found but W itself already passes: V = W.
  kZeroCoset,
};

const char* to_string(PipelineOutcome o);
const char* to_string(Assembly a);

struct PipelineReport {
  PipelineOutcome outcome;
  std::optional<Assembly> assembly;
  int d;
  int buckets;
  RegularityResult regularity;
  // Set once regularity succeeded.
  std::optional<AlmostColouring> colouring;
  std::optional<int> colour;
  // The x_i in quotient coordinates F_2^codim(W), and lifted to F_2^n.
  std::vector<GFVector> quotient_xs;
  std::vector<GFVector> xs;
  std::optional<Subspace> v;
  Rational sup_sq = 0;
  // (slack * eps)^2, and whether sup_sq stays below it.
  Rational bound_sq = 0;
  bool within_bound = false;

  const Subspace& w() const { return regularity.w; }
};

// Regularity, bucket colouring of the good cosets, subset-sum search, then
// V = W + <lifted x_i>, re-measured directly. When the search finds nothing
// but A is already eps-uniform on W itself, V = W.
PipelineReport find_uniform_subspace(const PointSet& a,
                                     const PipelineParams& params);

inline constexpr std::uint64_t kOracleBudget = 10'000'000;

struct BestSubspace {
  Subspace v;
  Rational sup_sq;
  std::uint64_t examined;
};

// Minimizes uniformity_sup over every subspace of codimension <= max_codim.
// Ties go to the smaller codimension, then to enumeration order. Throws
// BudgetError when more than `budget` subspaces would be examined.
BestSubspace exhaustive_best_subspace(const PointSet& a, int max_codim,
                                      std::uint64_t budget = kOracleBudget);

// {x in F_3^n : the first nonzero coordinate of x is 1}; 1 <= n <= 5.
PointSet build_f3_example(int n);

inline const Rational kF3Threshold{1, 12};

struct F3Record {
  Subspace v;
  Rational sup_sq;
  GFVector witness_r;
  // sup_sq >= 1/12.
  bool passed = false;
  // First coordinate on which V is not identically zero (zero-based).
  int j = 0;
  // Unnormalized coefficient a + b w at the class of e_j.
  Eisenstein64 coefficient;
  // 3b == -|V|.
  bool witness_identity_holds = false;
  // {x in V : x_j = 1} in A and {x in V : x_j = 2} disjoint from A.
  bool inclusions_hold = false;
  // |{x in V : x_j = 1}| == |V| / 3.
  bool equidistributed = false;
  // e_j is not in V^perp.
  bool witness_outside_perp = false;

  bool ok() const {
    return passed && witness_identity_holds && inclusions_hold &&
           equidistributed && witness_outside_perp;
  }
};

struct F3Report {
  int n;
  // By dimension ascending, then enumeration order.
  std::vector<F3Record> records;
  std::uint64_t total_subspaces = 0;
  bool all_passed = false;
  std::optional<Subspace> first_failure;
};

// Checks every positive-dimensional subspace of F_3^n. n <= 4 always,
// n == 5 only with long_run; InputError otherwise.
F3Report verify_f3_example(int n, bool long_run = false);

}  // namespace subuniform

#endif  // SUBUNIFORM_PIPELINE_H_
