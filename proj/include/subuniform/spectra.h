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

// Exact Fourier transforms over F_2^k and F_3^k and coset-restricted
// spectra.
//
// All transforms are unnormalized: F(r) = sum_x f(x) e_p(-r.x), with
// e_2(t) = (-1)^t and e_3(t) = w^t. Tables are indexed by vector rank
// (coordinate 1 most significant). A restricted spectrum of A on x + V is
// indexed by characters t of V relative to V's RREF basis v_1..v_k:
//
//   coefficient(t) = sum_{s in F_p^k} 1_A(x + sum_i s_i v_i) e_p(-t.s)
//
// and the normalized ambient coefficient at any frequency r is
// e_p(-r.x) coefficient(t(r)) / |V| with t(r)_i = r.v_i.

#ifndef SUBUNIFORM_SPECTRA_H_
#define SUBUNIFORM_SPECTRA_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "subuniform/exact_arith.h"
#include "subuniform/gf_core.h"

namespace subuniform {

// In-place Walsh-Hadamard butterfly; f.size() must be a power of two.
// Applying it twice multiplies by f.size().
void wht2(std::span<std::int64_t> f);

// Radix-3 transform of an integer table of length 3^k.
std::vector<Eisenstein64> dft3(std::span<const std::int64_t> f);
// In-place variant on Eisenstein-valued tables.
void dft3_inplace(std::span<Eisenstein64> f);

struct Spectrum {
  int p;
  int k;
  // Integer-valued (b == 0) when p == 2.
  std::vector<Eisenstein64> coefficients;
  std::uint64_t scale;
  Coset coset;

  // |A cap (x + V)|.
  std::uint64_t count() const {
    return static_cast<std::uint64_t>(coefficients[0].a());
  }
};

// 1_A(x + sum_i s_i v_i) as a table over s in F_p^k.
std::vector<std::int64_t> pull_back(const PointSet& a, const Coset& c);

Spectrum restricted_spectrum(const PointSet& a, const Coset& c);

// t(r): the action of r on V's basis, r.v_i for each i.
GFVector character_of(const GFVector& r, const Subspace& v);
// Lexicographically least ambient r with r.v_i = t_i for all i.
GFVector lift_character(const GFVector& t, const Subspace& v);
// Unnormalized e_p(-r.x) coefficient(t(r)).
Eisenstein64 ambient_coefficient(const Spectrum& s, const GFVector& r);

struct UniformityReport {
  // Squared sup of |(1_A mu_{x+V})^(r)| over r outside V^perp.
  Rational sup_sq = 0;
  // Present iff dim V >= 1.
  std::optional<GFVector> witness_t;
  std::optional<GFVector> witness_r;
  // coefficient(witness_t), and the anchored value at witness_r.
  Eisenstein64 witness_coefficient;
  Eisenstein64 witness_value;
  Rational density = 0;
  std::uint64_t scale = 1;
};

UniformityReport uniformity_sup(const PointSet& a, const Coset& c);

// Integer-only sup for hot loops: the maximal norm a^2 - ab + b^2 of a
// nontrivial coefficient, and the index of its lex-least maximizer
// (0 when k == 0). sup_sq equals max_norm / scale^2.
struct SupNorm {
  std::int64_t max_norm = 0;
  std::uint64_t index = 0;
};
SupNorm sup_norm(const PointSet& a, const Coset& c);

}  // namespace subuniform

#endif  // SUBUNIFORM_SPECTRA_H_
