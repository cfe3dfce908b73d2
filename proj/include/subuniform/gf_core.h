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

// Vectors, subspaces, cosets and point sets over F_2 and F_3.
//
// Every vector is a digit string x_1 ... x_n with x_1 most significant, so
// the integer rank of a vector and the lexicographic order agree. Subspaces
// are always stored as a reduced row echelon basis, which makes set
// equality the same thing as structural equality.

#ifndef SUBUNIFORM_GF_CORE_H_
#define SUBUNIFORM_GF_CORE_H_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subuniform/exact_arith.h"

namespace subuniform {

inline constexpr int kMaxDimF2 = 24;
inline constexpr int kMaxDimF3 = 12;
inline constexpr int kMaxDim = kMaxDimF2;

// Throws InputError unless p is 2 or 3 and 1 <= n <= the cap for p.
void check_ambient(int p, int n);

// p^n; no cap check.
std::uint64_t ambient_size(int p, int n);

class GFVector {
 public:
  // Zero vector of F_p^n.
  GFVector(int p, int n);

  static GFVector from_digits(int p, std::span<const std::uint8_t> digits);
  static GFVector from_rank(int p, int n, std::uint64_t rank);
  // Digit string such as "0121". Throws InputError on bad digit or length.
  static GFVector parse(int p, int n, std::string_view text);
  // Standard basis vector e_i, with i zero-based.
  static GFVector unit(int p, int n, int i);

  int p() const { return p_; }
  int n() const { return n_; }
  std::uint8_t operator[](int i) const { return digits_[i]; }
  void set(int i, std::uint8_t digit);

  std::uint64_t rank() const;
  bool is_zero() const;
  // Index of the first nonzero coordinate, or n() for the zero vector.
  int leading_index() const;
  std::string to_string() const;

  GFVector& operator+=(const GFVector& other);
  GFVector& operator-=(const GFVector& other);
  GFVector scaled(int c) const;

  friend GFVector operator+(GFVector a, const GFVector& b) { return a += b; }
  friend GFVector operator-(GFVector a, const GFVector& b) { return a -= b; }
  friend bool operator==(const GFVector&, const GFVector&) = default;
  // Lexicographic with coordinate 1 most significant (for equal p and n).
  friend std::strong_ordering operator<=>(const GFVector&,
                                          const GFVector&) = default;

 private:
  std::uint8_t p_;
  std::uint8_t n_;
  std::array<std::uint8_t, kMaxDim> digits_{};
};

// Dot product reduced into [0, p).
int dot(const GFVector& a, const GFVector& b);

class Subspace {
 public:
  // The zero subspace of F_p^n.
  Subspace(int p, int n);

  static Subspace full(int p, int n);
  // {x : x_1 = ... = x_c = 0}, codimension c.
  static Subspace coordinate(int p, int n, int c);

  int p() const { return p_; }
  int n() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int codim() const { return n_ - dim(); }
  std::uint64_t size() const { return ambient_size(p_, dim()); }
  const std::vector<GFVector>& basis() const { return basis_; }

  // Pivot column of each basis row, strictly increasing.
  std::vector<int> pivots() const;
  // Columns that carry no pivot, ascending; there are codim() of them.
  std::vector<int> free_columns() const;

  bool contains(const GFVector& x) const;
  // Sum_i coeffs_i * basis_i for coeffs in F_p^dim.
  GFVector combination(const GFVector& coeffs) const;
  // combination() of the coefficient vector with rank t in F_p^dim.
  GFVector element(std::uint64_t t) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend std::strong_ordering operator<=>(const Subspace&,
                                          const Subspace&) = default;

 private:
  friend Subspace rref_basis(int p, int n, std::span<const GFVector> vectors);
  friend class SubspaceStream;
  Subspace(int p, int n, std::vector<GFVector> rref_rows);

  int p_;
  int n_;
  std::vector<GFVector> basis_;
};

// Canonical RREF basis of the span. Throws InputError on mixed p or n.
Subspace rref_basis(int p, int n, std::span<const GFVector> vectors);
// Annihilator {r : r.v = 0 for all v in V}.
Subspace perp(const Subspace& v);
// Span of W together with xs.
Subspace extend_span(const Subspace& w, std::span<const GFVector> xs);
// V cap U, computed as perp(perp V + perp U).
Subspace intersect(const Subspace& v, const Subspace& u);
// Lexicographically least element of x + V.
GFVector canonical_rep(const GFVector& x, const Subspace& v);

// Quotient coordinates of F_p^n / W: the digits of the canonical coset
// representative at W's free columns, first free column most significant.
std::uint64_t quotient_index(const GFVector& x, const Subspace& w);
// Inverse of quotient_index: the canonical representative with the given
// quotient rank. The lift lies in the complement spanned by free columns.
GFVector quotient_lift(std::uint64_t q, const Subspace& w);
// Same, from a vector of F_p^codim(W).
GFVector quotient_lift(const GFVector& q, const Subspace& w);

class Coset {
 public:
  // Canonicalizes the representative.
  Coset(const GFVector& x, Subspace v);
  explicit Coset(Subspace v);

  const Subspace& subspace() const { return subspace_; }
  const GFVector& rep() const { return rep_; }
  bool contains(const GFVector& y) const;

  friend bool operator==(const Coset&, const Coset&) = default;

 private:
  Subspace subspace_;
  GFVector rep_;
};

// Number of k-dimensional subspaces of F_p^n.
BigInt gaussian_binomial(int p, int n, int k);

// Yields every k-dimensional subspace of F_p^n exactly once, ordered by
// pivot profile (lexicographic on the pivot tuple) and then by the free
// RREF entries read row by row, as a base-p counter.
class SubspaceStream {
 public:
  SubspaceStream(int p, int n, int k);

  std::optional<Subspace> next();

 private:
  void load_profile();
  bool advance_profile();

  int p_;
  int n_;
  int k_;
  bool done_ = false;
  std::vector<int> pivots_;
  // (row, column) of each free entry, in counter order.
  std::vector<std::pair<int, int>> slots_;
  std::vector<std::uint8_t> counter_;
};

template <class Fn>
void for_each_subspace(int p, int n, int k, Fn&& fn) {
  SubspaceStream stream(p, n, k);
  while (auto v = stream.next()) fn(*v);
}

class PointSet {
 public:
  // Empty set in F_p^n.
  PointSet(int p, int n);

  static PointSet full(int p, int n);
  template <class Pred>
  static PointSet from_predicate(int p, int n, Pred&& pred) {
    PointSet s(p, n);
    const std::uint64_t total = s.ambient();
    for (std::uint64_t r = 0; r < total; ++r) {
      if (pred(GFVector::from_rank(p, n, r))) s.insert_rank(r);
    }
    return s;
  }

  int p() const { return p_; }
  int n() const { return n_; }
  std::uint64_t ambient() const { return membership_.size(); }
  std::uint64_t size() const { return size_; }
  Rational density() const;

  bool contains(const GFVector& x) const;
  bool contains_rank(std::uint64_t r) const { return membership_[r] != 0; }
  // Returns false if already present.
  bool insert(const GFVector& x);
  bool insert_rank(std::uint64_t r);

  // Members in lexicographic order.
  std::vector<GFVector> members() const;
  std::span<const std::uint8_t> table() const { return membership_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int p_;
  int n_;
  std::uint64_t size_ = 0;
  std::vector<std::uint8_t> membership_;
};

// Number of points of A on the coset.
std::uint64_t count_on_coset(const PointSet& a, const Coset& c);
// Point counts of A on every coset of W, indexed by quotient_index.
std::vector<std::uint64_t> coset_counts(const PointSet& a, const Subspace& w);

}  // namespace subuniform

#endif  // SUBUNIFORM_GF_CORE_H_
