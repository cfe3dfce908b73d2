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

#include "subuniform/gf_core.h"

#include <algorithm>
#include <utility>

#include "subuniform/errors.h"

namespace subuniform {
namespace {

void check_compatible(int p, int n, const GFVector& v) {
  if (v.p() != p || v.n() != n) {
    throw InputError("vector " + v.to_string() + " is not in F_" +
                     std::to_string(p) + "^" + std::to_string(n));
  }
}

std::uint8_t inverse_mod(std::uint8_t a, int p) {
  // Only p in {2, 3}: every nonzero element is its own inverse.
  (void)p;
  return a;
}

// Row-reduces in place to RREF, dropping zero rows.
std::vector<GFVector> row_reduce(std::vector<GFVector> rows, int p, int n) {
  std::size_t r = 0;
  for (int col = 0; col < n && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    rows[r] = rows[r].scaled(inverse_mod(rows[r][col], p));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i][col] != 0) {
        rows[i] -= rows[r].scaled(rows[i][col]);
      }
    }
    ++r;
  }
  rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r), rows.end());
  return rows;
}

}  // namespace

void check_ambient(int p, int n) {
  if (p != 2 && p != 3) {
    throw InputError("p must be 2 or 3, got " + std::to_string(p));
  }
  const int cap = p == 2 ? kMaxDimF2 : kMaxDimF3;
  if (n < 1 || n > cap) {
    throw InputError("n must lie in [1, " + std::to_string(cap) + "] for p=" +
                     std::to_string(p) + ", got " + std::to_string(n));
  }
}

std::uint64_t ambient_size(int p, int n) {
  std::uint64_t s = 1;
  for (int i = 0; i < n; ++i) s *= static_cast<std::uint64_t>(p);
  return s;
}

// ---------------------------------------------------------------------------
// GFVector

GFVector::GFVector(int p, int n)
    : p_(static_cast<std::uint8_t>(p)), n_(static_cast<std::uint8_t>(n)) {
  check_ambient(p, n);
}

GFVector GFVector::from_digits(int p, std::span<const std::uint8_t> digits) {
  GFVector v(p, static_cast<int>(digits.size()));
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= p) throw InputError("digit out of range");
    v.digits_[i] = digits[i];
  }
  return v;
}

GFVector GFVector::from_rank(int p, int n, std::uint64_t rank) {
  GFVector v(p, n);
  for (int i = n - 1; i >= 0; --i) {
    v.digits_[i] = static_cast<std::uint8_t>(rank % p);
    rank /= p;
  }
  return v;
}

GFVector GFVector::parse(int p, int n, std::string_view text) {
  if (static_cast<int>(text.size()) != n) {
    throw InputError("expected " + std::to_string(n) + " digits, got '" +
                     std::string(text) + "'");
  }
  GFVector v(p, n);
  for (int i = 0; i < n; ++i) {
    const int d = text[i] - '0';
    if (d < 0 || d >= p) {
      throw InputError("digit '" + std::string(1, text[i]) +
                       "' is not in F_" + std::to_string(p));
    }
    v.digits_[i] = static_cast<std::uint8_t>(d);
  }
  return v;
}

GFVector GFVector::unit(int p, int n, int i) {
  GFVector v(p, n);
  v.digits_[i] = 1;
  return v;
}

void GFVector::set(int i, std::uint8_t digit) { digits_[i] = digit % p_; }

std::uint64_t GFVector::rank() const {
  std::uint64_t r = 0;
  for (int i = 0; i < n_; ++i) r = r * p_ + digits_[i];
  return r;
}

bool GFVector::is_zero() const { return leading_index() == n_; }

int GFVector::leading_index() const {
  int i = 0;
  while (i < n_ && digits_[i] == 0) ++i;
  return i;
}

std::string GFVector::to_string() const {
  std::string s(n_, '0');
  for (int i = 0; i < n_; ++i) s[i] = static_cast<char>('0' + digits_[i]);
  return s;
}

GFVector& GFVector::operator+=(const GFVector& other) {
  for (int i = 0; i < n_; ++i) {
    digits_[i] = static_cast<std::uint8_t>((digits_[i] + other.digits_[i]) % p_);
  }
  return *this;
}

GFVector& GFVector::operator-=(const GFVector& other) {
  for (int i = 0; i < n_; ++i) {
    digits_[i] =
        static_cast<std::uint8_t>((digits_[i] + p_ - other.digits_[i]) % p_);
  }
  return *this;
}

GFVector GFVector::scaled(int c) const {
  GFVector v = *this;
  c = ((c % p_) + p_) % p_;
  for (int i = 0; i < n_; ++i) {
    v.digits_[i] = static_cast<std::uint8_t>((digits_[i] * c) % p_);
  }
  return v;
}

int dot(const GFVector& a, const GFVector& b) {
  int s = 0;
  for (int i = 0; i < a.n(); ++i) s += a[i] * b[i];
  return s % a.p();
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(int p, int n) : p_(p), n_(n) { check_ambient(p, n); }

Subspace::Subspace(int p, int n, std::vector<GFVector> rref_rows)
    : p_(p), n_(n), basis_(std::move(rref_rows)) {}

Subspace Subspace::full(int p, int n) { return coordinate(p, n, 0); }

Subspace Subspace::coordinate(int p, int n, int c) {
  check_ambient(p, n);
  if (c < 0 || c > n) throw InputError("codimension out of range");
  std::vector<GFVector> rows;
  for (int i = c; i < n; ++i) rows.push_back(GFVector::unit(p, n, i));
  return Subspace(p, n, std::move(rows));
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> out;
  out.reserve(basis_.size());
  for (const auto& row : basis_) out.push_back(row.leading_index());
  return out;
}

std::vector<int> Subspace::free_columns() const {
  std::vector<int> out;
  std::size_t k = 0;
  for (int col = 0; col < n_; ++col) {
    if (k < basis_.size() && basis_[k].leading_index() == col) {
      ++k;
    } else {
      out.push_back(col);
    }
  }
  return out;
}

bool Subspace::contains(const GFVector& x) const {
  return canonical_rep(x, *this).is_zero();
}

GFVector Subspace::combination(const GFVector& coeffs) const {
  GFVector out(p_, n_);
  for (int i = 0; i < dim(); ++i) {
    if (coeffs[i] != 0) out += basis_[i].scaled(coeffs[i]);
  }
  return out;
}

GFVector Subspace::element(std::uint64_t t) const {
  GFVector out(p_, n_);
  for (int i = dim() - 1; i >= 0 && t != 0; --i) {
    const auto c = static_cast<int>(t % p_);
    if (c != 0) out += basis_[i].scaled(c);
    t /= p_;
  }
  return out;
}

Subspace rref_basis(int p, int n, std::span<const GFVector> vectors) {
  check_ambient(p, n);
  std::vector<GFVector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    check_compatible(p, n, v);
    if (!v.is_zero()) rows.push_back(v);
  }
  return Subspace(p, n, row_reduce(std::move(rows), p, n));
}

Subspace perp(const Subspace& v) {
  const int p = v.p();
  const int n = v.n();
  const auto piv = v.pivots();
  std::vector<GFVector> rows;
  for (int f : v.free_columns()) {
    GFVector r = GFVector::unit(p, n, f);
    for (int i = 0; i < v.dim(); ++i) {
      r.set(piv[i], static_cast<std::uint8_t>((p - v.basis()[i][f]) % p));
    }
    rows.push_back(r);
  }
  return rref_basis(p, n, rows);
}

Subspace extend_span(const Subspace& w, std::span<const GFVector> xs) {
  std::vector<GFVector> rows = w.basis();
  rows.insert(rows.end(), xs.begin(), xs.end());
  return rref_basis(w.p(), w.n(), rows);
}

Subspace intersect(const Subspace& v, const Subspace& u) {
  if (v.p() != u.p() || v.n() != u.n()) {
    throw InputError("subspaces live in different ambient spaces");
  }
  const Subspace pu = perp(u);
  return perp(extend_span(perp(v), pu.basis()));
}

GFVector canonical_rep(const GFVector& x, const Subspace& v) {
  check_compatible(v.p(), v.n(), x);
  GFVector y = x;
  for (const auto& row : v.basis()) {
    const int col = row.leading_index();
    if (y[col] != 0) y -= row.scaled(y[col]);
  }
  return y;
}

std::uint64_t quotient_index(const GFVector& x, const Subspace& w) {
  const GFVector y = canonical_rep(x, w);
  std::uint64_t q = 0;
  for (int col : w.free_columns()) q = q * w.p() + y[col];
  return q;
}

GFVector quotient_lift(std::uint64_t q, const Subspace& w) {
  const auto cols = w.free_columns();
  GFVector y(w.p(), w.n());
  for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
    y.set(*it, static_cast<std::uint8_t>(q % w.p()));
    q /= w.p();
  }
  return y;
}

GFVector quotient_lift(const GFVector& q, const Subspace& w) {
  const auto cols = w.free_columns();
  if (q.p() != w.p() || q.n() != static_cast<int>(cols.size())) {
    throw InputError("quotient vector has the wrong dimension");
  }
  GFVector y(w.p(), w.n());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    y.set(cols[i], q[static_cast<int>(i)]);
  }
  return y;
}

// ---------------------------------------------------------------------------
// Coset

Coset::Coset(const GFVector& x, Subspace v)
    : subspace_(std::move(v)), rep_(canonical_rep(x, subspace_)) {}

Coset::Coset(Subspace v)
    : subspace_(std::move(v)), rep_(subspace_.p(), subspace_.n()) {}

bool Coset::contains(const GFVector& y) const {
  return canonical_rep(y, subspace_) == rep_;
}

// ---------------------------------------------------------------------------
// Enumeration

BigInt gaussian_binomial(int p, int n, int k) {
  if (k < 0 || k > n) return 0;
  // q-Pascal: [n, k] = [n-1, k-1] + p^k [n-1, k].
  std::vector<BigInt> row(n + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      BigInt pk = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(j));
      row[j] = row[j - 1] + pk * row[j];
    }
  }
  return row[k];
}

SubspaceStream::SubspaceStream(int p, int n, int k) : p_(p), n_(n), k_(k) {
  check_ambient(p, n);
  if (k < 0 || k > n) {
    done_ = true;
    return;
  }
  for (int i = 0; i < k; ++i) pivots_.push_back(i);
  load_profile();
}

void SubspaceStream::load_profile() {
  slots_.clear();
  for (int row = 0; row < k_; ++row) {
    std::size_t next_pivot = row + 1;
    for (int col = pivots_[row] + 1; col < n_; ++col) {
      if (next_pivot < pivots_.size() && pivots_[next_pivot] == col) {
        ++next_pivot;
        continue;
      }
      slots_.emplace_back(row, col);
    }
  }
  counter_.assign(slots_.size(), 0);
}

bool SubspaceStream::advance_profile() {
  int i = k_ - 1;
  while (i >= 0 && pivots_[i] == n_ - k_ + i) --i;
  if (i < 0) return false;
  ++pivots_[i];
  for (int j = i + 1; j < k_; ++j) pivots_[j] = pivots_[j - 1] + 1;
  load_profile();
  return true;
}

std::optional<Subspace> SubspaceStream::next() {
  if (done_) return std::nullopt;
  std::vector<GFVector> rows;
  rows.reserve(k_);
  for (int row = 0; row < k_; ++row) {
    rows.push_back(GFVector::unit(p_, n_, pivots_[row]));
  }
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    rows[slots_[s].first].set(slots_[s].second, counter_[s]);
  }
  Subspace out(p_, n_, std::move(rows));

  // Advance the free-entry counter, last slot least significant.
  int s = static_cast<int>(counter_.size()) - 1;
  while (s >= 0 && counter_[s] == p_ - 1) counter_[s--] = 0;
  if (s >= 0) {
    ++counter_[s];
  } else if (!advance_profile()) {
    done_ = true;
  }
  return out;
}

// ---------------------------------------------------------------------------
// PointSet

PointSet::PointSet(int p, int n) : p_(p), n_(n) {
  check_ambient(p, n);
  membership_.assign(ambient_size(p, n), 0);
}

PointSet PointSet::full(int p, int n) {
  PointSet s(p, n);
  std::fill(s.membership_.begin(), s.membership_.end(), 1);
  s.size_ = s.membership_.size();
  return s;
}

Rational PointSet::density() const {
  return Rational(BigInt(size_), BigInt(ambient()));
}

bool PointSet::contains(const GFVector& x) const {
  check_compatible(p_, n_, x);
  return contains_rank(x.rank());
}

bool PointSet::insert(const GFVector& x) {
  check_compatible(p_, n_, x);
  return insert_rank(x.rank());
}

bool PointSet::insert_rank(std::uint64_t r) {
  if (membership_.at(r)) return false;
  membership_[r] = 1;
  ++size_;
  return true;
}

std::vector<GFVector> PointSet::members() const {
  std::vector<GFVector> out;
  out.reserve(size_);
  for (std::uint64_t r = 0; r < membership_.size(); ++r) {
    if (membership_[r]) out.push_back(GFVector::from_rank(p_, n_, r));
  }
  return out;
}

std::uint64_t count_on_coset(const PointSet& a, const Coset& c) {
  const Subspace& v = c.subspace();
  std::uint64_t count = 0;
  const std::uint64_t size = v.size();
  for (std::uint64_t t = 0; t < size; ++t) {
    count += a.contains_rank((c.rep() + v.element(t)).rank());
  }
  return count;
}

std::vector<std::uint64_t> coset_counts(const PointSet& a, const Subspace& w) {
  if (a.p() != w.p() || a.n() != w.n()) {
    throw InputError("set and subspace live in different ambient spaces");
  }
  std::vector<std::uint64_t> counts(ambient_size(w.p(), w.codim()), 0);
  for (std::uint64_t r = 0; r < a.ambient(); ++r) {
    if (a.contains_rank(r)) {
      ++counts[quotient_index(GFVector::from_rank(a.p(), a.n(), r), w)];
    }
  }
  return counts;
}

}  // namespace subuniform
