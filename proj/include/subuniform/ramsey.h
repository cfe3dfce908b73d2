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

// Almost-colourings of F_2^m and the search for linearly independent
// x_1..x_d whose nonempty subset sums all share one colour.

#ifndef SUBUNIFORM_RAMSEY_H_
#define SUBUNIFORM_RAMSEY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subuniform/exact_arith.h"
#include "subuniform/gf_core.h"

namespace subuniform {

// Partial map F_2^m -> {0..max_colour}, points indexed by rank.
class AlmostColouring {
 public:
  AlmostColouring(int m, int max_colour);

  int m() const { return m_; }
  int max_colour() const { return max_colour_; }
  std::uint64_t size() const { return colours_.size(); }

  std::optional<int> colour(std::uint64_t x) const;
  // Throws InputError if the colour is outside [0, max_colour].
  void set(std::uint64_t x, int colour);
  void clear(std::uint64_t x);

  std::uint64_t coloured_count() const;
  Rational coloured_fraction() const;

  friend bool operator==(const AlmostColouring&, const AlmostColouring&) = default;

 private:
  static constexpr int kUncoloured = -1;
  int m_;
  int max_colour_;
  std::vector<int> colours_;
};

// floor(buckets * density); density 1 maps to the top colour `buckets`.
int bucket_of(const Rational& density, int buckets);

// Colours each good coset x + W of A's ambient space by
// floor(buckets * density of A on x + W), a value in {0..buckets}; every
// other point of the quotient F_2^codim(W) stays uncoloured.
AlmostColouring bucket_colouring(const PointSet& a, const Subspace& w,
                                 int buckets,
                                 std::span<const GFVector> good_reps);

struct UnionStructure {
  // Linearly independent vectors of F_2^m.
  std::vector<GFVector> xs;
  int colour;
};

// Recomputes all 2^d - 1 subset sums, their colours, and the rank of xs.
bool verify_union_structure(const AlmostColouring& c, const UnionStructure& s);

// Lexicographically least (x_1 < ... < x_d) with every nonempty subset sum
// coloured alike, or nullopt when none exists.
std::optional<UnionStructure> find_union_structure(const AlmostColouring& c,
                                                   int d);

// Text form: a header line "m=<int> C=<int>", then "<bitstring> <colour|->"
// lines. Points not listed are uncoloured. '#' starts a comment.
AlmostColouring parse_colouring(std::string_view text);
// Lists every point of F_2^m in rank order.
std::string format_colouring(const AlmostColouring& c);

}  // namespace subuniform

#endif  // SUBUNIFORM_RAMSEY_H_
