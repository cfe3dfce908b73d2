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

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "subuniform/errors.h"
#include "subuniform/spectra.h"

namespace subuniform {
namespace {

PointSet half_space(int n) {
  return PointSet::from_predicate(2, n, [](const GFVector& x) { return x[0] == 1; });
}

// Random set whose density depends on the first `bias_coords` coordinates.
PointSet biased_set(int n, int bias_coords, std::mt19937_64& gen) {
  std::vector<double> level(std::size_t{1} << bias_coords);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (auto& l : level) l = u(gen);
  std::uniform_real_distribution<double> coin(0, 1);
  return PointSet::from_predicate(2, n, [&](const GFVector& x) {
    return coin(gen) < level[x.rank() >> (n - bias_coords)];
  });
}

TEST(DensityIncrementTest, HalfSpace) {
  const IncrementTrace t = density_increment(half_space(3), Rational(1, 4));
  EXPECT_EQ(t.refinements(), 1);
  EXPECT_EQ(t.final.rep(), GFVector::parse(2, 3, "100"));
  EXPECT_EQ(t.final.subspace(), Subspace::coordinate(2, 3, 1));
  EXPECT_EQ(t.steps.back().density, 1);
  EXPECT_EQ(*t.steps.front().witness_r, GFVector::parse(2, 3, "100"));
}

TEST(DensityIncrementTest, TrivialSets) {
  for (const PointSet& a : {PointSet::full(2, 5), PointSet(2, 5)}) {
    const IncrementTrace t = density_increment(a, Rational(1, 10));
    EXPECT_EQ(t.refinements(), 0);
    EXPECT_EQ(t.final.subspace(), Subspace::full(2, 5));
    EXPECT_EQ(t.steps[0].density, a.density());
  }
}

TEST(DensityIncrementTest, RejectsF3AndBadEps) {
  EXPECT_THROW(density_increment(PointSet(3, 2), Rational(1, 4)), InputError);
  EXPECT_THROW(density_increment(PointSet(2, 2), Rational(0)), InputError);
}

TEST(DensityIncrementTest, TraceInvariantsOnRandomSets) {
  std::mt19937_64 gen(41);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational eps(1, 3 + trial % 8);
    const PointSet a = biased_set(8, 1 + trial % 4, gen);
    const IncrementTrace t = density_increment(a, eps);
    for (std::size_t i = 1; i < t.steps.size(); ++i) {
      EXPECT_GT(t.steps[i].density - t.steps[i - 1].density, eps);
      EXPECT_EQ(t.steps[i].coset.subspace().codim(), static_cast<int>(i));
      // Nested cosets.
      EXPECT_TRUE(t.steps[i - 1].coset.contains(t.steps[i].coset.rep()));
    }
    EXPECT_LE(Rational(t.refinements()) * eps, 1);
    EXPECT_LE(oracle::uniformity_sup(a, t.final.rep(), t.final.subspace().basis()),
              eps * eps);
  }
}

TEST(PartitionEnergyTest, Examples) {
  const PointSet a = half_space(2);
  EXPECT_EQ(partition_energy(a, Subspace::full(2, 2)), Rational(1, 4));
  EXPECT_EQ(partition_energy(a, Subspace(2, 2)), Rational(1, 2));
  EXPECT_EQ(partition_energy(a, Subspace::coordinate(2, 2, 1)), Rational(1, 2));
}

TEST(PartitionEnergyTest, MonotoneUnderRefinementAndBounded) {
  std::mt19937_64 gen(43);
  for (int trial = 0; trial < 100; ++trial) {
    const PointSet a = oracle::random_set(2, 6, 0.3, gen);
    const Subspace w = rref_basis(2, 6, oracle::random_vectors(2, 6, 4, gen));
    const Subspace finer = intersect(w, perp(rref_basis(2, 6, oracle::random_vectors(2, 6, 1, gen))));
    const Rational e = partition_energy(a, w);
    EXPECT_GE(partition_energy(a, finer), e);
    const Rational alpha = a.density();
    EXPECT_GE(e, alpha * alpha);
    EXPECT_LE(e, alpha);
  }
}

TEST(PipelineParamsTest, Defaults) {
  PipelineParams p;
  p.eps = Rational(1, 4);
  EXPECT_EQ(p.resolved_d(), 3);
  EXPECT_EQ(p.resolved_buckets(), 4);
  p.eps = Rational(1, 10);
  EXPECT_EQ(p.resolved_d(), 5);
  EXPECT_EQ(p.resolved_buckets(), 10);
  p.eps = Rational(2, 7);
  EXPECT_EQ(p.resolved_d(), 3);
  EXPECT_EQ(p.resolved_buckets(), 4);
  p.eps = 1;
  EXPECT_EQ(p.resolved_d(), 1);
  EXPECT_EQ(p.resolved_buckets(), 1);
  p.min_codim = 5;
  p.max_codim = 4;
  EXPECT_THROW(p.validate(8), InputError);
}

TEST(RegularityTest, EmptySet) {
  const RegularityResult r =
      regularity_decompose(PointSet(2, 6), Rational(1, 4), Rational(1, 8), 2, 6);
  EXPECT_EQ(r.outcome, RegularityOutcome::kSuccess);
  EXPECT_EQ(r.w, Subspace::coordinate(2, 6, 2));
  EXPECT_EQ(r.good_fraction, 1);
  EXPECT_EQ(r.rounds, 0);
}

TEST(RegularityTest, UnionOfTwoCosets) {
  // U = {x : x_1 = x_2 + x_3 = 0... } built from two random independent
  // constraints; A = union of two of its four cosets.
  std::mt19937_64 gen(47);
  for (int trial = 0; trial < 20; ++trial) {
    Subspace constraints = rref_basis(2, 7, oracle::random_vectors(2, 7, 2, gen));
    if (constraints.dim() != 2) continue;
    const Subspace u = perp(constraints);
    const std::uint64_t keep_a = gen() % 4;
    const std::uint64_t keep_b = (keep_a + 1 + gen() % 3) % 4;
    const PointSet a = PointSet::from_predicate(2, 7, [&](const GFVector& x) {
      const std::uint64_t q = quotient_index(x, u);
      return q == keep_a || q == keep_b;
    });
    const RegularityResult r =
        regularity_decompose(a, Rational(1, 4), Rational(0), 0, 7);
    ASSERT_EQ(r.outcome, RegularityOutcome::kSuccess);
    EXPECT_EQ(r.good_fraction, 1);
    // Every coset of the final W is exactly 0-uniform.
    for (const auto& rep : r.good_reps()) {
      EXPECT_EQ(uniformity_sup(a, Coset(rep, r.w)).sup_sq, 0);
    }
  }
}

TEST(RegularityTest, RandomSetsMeetTheEnergyBound) {
  std::mt19937_64 gen(53);
  const Rational eps(1, 4), eta(1, 8);
  for (int trial = 0; trial < 10; ++trial) {
    const PointSet a = trial % 2 ? oracle::random_set(2, 10, 0.5, gen)
                                 : biased_set(10, 3, gen);
    const RegularityResult r = regularity_decompose(a, eps, eta, 0, 10);
    ASSERT_EQ(r.outcome, RegularityOutcome::kSuccess);
    EXPECT_LE(r.rounds, 128);
    for (std::size_t i = 1; i < r.energy_trace.size(); ++i) {
      EXPECT_GT(r.energy_trace[i] - r.energy_trace[i - 1], eta * eps * eps);
    }
    // Direct recount of the good fraction.
    std::uint64_t good = 0, cells = 0;
    for (std::uint64_t q = 0; q < (std::uint64_t{1} << r.w.codim()); ++q, ++cells) {
      const GFVector rep = quotient_lift(q, r.w);
      good += oracle::uniformity_sup(a, rep, r.w.basis()) <= eps * eps;
    }
    EXPECT_EQ(r.good_fraction, Rational(BigInt(good), BigInt(cells)));
    EXPECT_GE(r.good_fraction, 1 - eta);
  }
}

TEST(RegularityTest, CodimExhaustionIsReported) {
  std::mt19937_64 gen(59);
  const PointSet a = biased_set(8, 4, gen);
  const RegularityResult r = regularity_decompose(a, Rational(1, 100), Rational(0), 0, 1);
  EXPECT_EQ(r.outcome, RegularityOutcome::kCodimExhausted);
  EXPECT_LE(r.w.codim(), 1);
  EXPECT_FALSE(r.energy_trace.empty());
}

}  // namespace
}  // namespace subuniform
