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

#include "subuniform/ramsey.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "subuniform/errors.h"

namespace subuniform {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_int(std::string_view s, int& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

[[noreturn]] void fail_at(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

struct Search {
  const AlmostColouring& c;
  int d;
  int colour = 0;
  std::vector<std::uint64_t> chosen;
  // Every subset sum of `chosen`, including 0; this is their span.
  std::vector<std::uint64_t> sums;

  bool extend() {
    if (static_cast<int>(chosen.size()) == d) return true;
    const std::uint64_t start = chosen.back() + 1;
    for (std::uint64_t x = start; x < c.size(); ++x) {
      if (try_add(x)) return true;
    }
    return false;
  }

  bool try_add(std::uint64_t x) {
    const std::size_t old = sums.size();
    for (std::size_t i = 0; i < old; ++i) {
      // x in the span means dependent; x + s must carry the colour.
      const std::uint64_t y = x ^ sums[i];
      if (y == 0 || c.colour(y) != colour) return false;
    }
    chosen.push_back(x);
    for (std::size_t i = 0; i < old; ++i) sums.push_back(x ^ sums[i]);
    if (extend()) return true;
    chosen.pop_back();
    sums.resize(old);
    return false;
  }
};

}  // namespace

AlmostColouring::AlmostColouring(int m, int max_colour)
    : m_(m), max_colour_(max_colour) {
  if (m < 0 || m > kMaxDimF2) throw InputError("colouring dimension out of range");
  if (max_colour < 0) throw InputError("max colour must be non-negative");
  colours_.assign(std::uint64_t{1} << m, kUncoloured);
}

std::optional<int> AlmostColouring::colour(std::uint64_t x) const {
  const int c = colours_.at(x);
  if (c == kUncoloured) return std::nullopt;
  return c;
}

void AlmostColouring::set(std::uint64_t x, int colour) {
  if (colour < 0 || colour > max_colour_) {
    throw InputError("colour " + std::to_string(colour) + " outside [0, " +
                     std::to_string(max_colour_) + "]");
  }
  colours_.at(x) = colour;
}

void AlmostColouring::clear(std::uint64_t x) { colours_.at(x) = kUncoloured; }

std::uint64_t AlmostColouring::coloured_count() const {
  return static_cast<std::uint64_t>(
      std::count_if(colours_.begin(), colours_.end(),
                    [](int c) { return c != kUncoloured; }));
}

Rational AlmostColouring::coloured_fraction() const {
  return Rational(BigInt(coloured_count()), BigInt(size()));
}

int bucket_of(const Rational& density, int buckets) {
  if (density < 0 || density > 1) throw InputError("density outside [0, 1]");
  const Rational scaled = density * buckets;
  const BigInt q = boost::multiprecision::numerator(scaled) /
                   boost::multiprecision::denominator(scaled);
  return q.convert_to<int>();
}

AlmostColouring bucket_colouring(const PointSet& a, const Subspace& w,
                                 int buckets,
                                 std::span<const GFVector> good_reps) {
  if (a.p() != 2 || w.p() != 2 || a.n() != w.n()) {
    throw InputError("bucket_colouring needs a set and subspace of one F_2^n");
  }
  if (buckets < 1) throw InputError("bucket count must be at least 1");
  const std::vector<std::uint64_t> counts = coset_counts(a, w);
  const std::uint64_t cell = w.size();
  AlmostColouring c(w.codim(), buckets);
  for (const auto& rep : good_reps) {
    const std::uint64_t q = quotient_index(rep, w);
    c.set(q, bucket_of(Rational(BigInt(counts[q]), BigInt(cell)), buckets));
  }
  return c;
}

bool verify_union_structure(const AlmostColouring& c, const UnionStructure& s) {
  const int d = static_cast<int>(s.xs.size());
  if (d == 0) return false;
  for (const auto& x : s.xs) {
    if (x.p() != 2 || x.n() != c.m()) return false;
  }
  if (rref_basis(2, c.m(), s.xs).dim() != d) return false;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << d); ++mask) {
    GFVector sum(2, c.m());
    for (int i = 0; i < d; ++i) {
      if (mask >> i & 1) sum += s.xs[i];
    }
    if (c.colour(sum.rank()) != s.colour) return false;
  }
  return true;
}

std::optional<UnionStructure> find_union_structure(const AlmostColouring& c,
                                                   int d) {
  if (d < 1) throw InputError("d must be at least 1");
  if (d > c.m()) return std::nullopt;
  Search search{c, d, 0, {}, {}};
  for (std::uint64_t x = 1; x < c.size(); ++x) {
    const auto colour = c.colour(x);
    if (!colour) continue;
    search.colour = *colour;
    search.chosen = {x};
    search.sums = {0, x};
    if (search.extend()) {
      UnionStructure out{{}, *colour};
      for (std::uint64_t r : search.chosen) {
        out.xs.push_back(GFVector::from_rank(2, c.m(), r));
      }
      return out;
    }
  }
  return std::nullopt;
}

AlmostColouring parse_colouring(std::string_view text) {
  std::optional<AlmostColouring> out;
  std::vector<bool> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;

    if (!out) {
      int m = -1, colours = -1;
      const auto sp = line.find(' ');
      if (sp == std::string_view::npos || line.substr(0, 2) != "m=" ||
          !parse_int(line.substr(2, sp - 2), m)) {
        fail_at(line_no, "expected header 'm=<int> C=<int>'");
      }
      std::string_view rest = trim(line.substr(sp));
      if (rest.substr(0, 2) != "C=" || !parse_int(rest.substr(2), colours)) {
        fail_at(line_no, "expected header 'm=<int> C=<int>'");
      }
      if (m < 1 || m > kMaxDimF2 || colours < 0) {
        fail_at(line_no, "header values out of range");
      }
      out.emplace(m, colours);
      seen.assign(out->size(), false);
      continue;
    }

    const auto sp = line.find_first_of(" \t");
    if (sp == std::string_view::npos) fail_at(line_no, "expected '<bitstring> <colour|->'");
    const std::string_view bits = line.substr(0, sp);
    const std::string_view value = trim(line.substr(sp));
    if (static_cast<int>(bits.size()) != out->m()) {
      fail_at(line_no, "bitstring length differs from m");
    }
    std::uint64_t x = 0;
    for (char ch : bits) {
      if (ch != '0' && ch != '1') fail_at(line_no, "bad bit '" + std::string(1, ch) + "'");
      x = x << 1 | static_cast<std::uint64_t>(ch - '0');
    }
    if (seen[x]) fail_at(line_no, "duplicate point " + std::string(bits));
    seen[x] = true;
    if (value == "-") continue;
    int colour = 0;
    if (!parse_int(value, colour) || colour < 0 || colour > out->max_colour()) {
      fail_at(line_no, "bad colour '" + std::string(value) + "'");
    }
    out->set(x, colour);
  }
  if (!out) throw InputError("missing header 'm=<int> C=<int>'");
  return *out;
}

std::string format_colouring(const AlmostColouring& c) {
  std::ostringstream os;
  os << "m=" << c.m() << " C=" << c.max_colour() << "\n";
  for (std::uint64_t x = 0; x < c.size(); ++x) {
    std::string bits(c.m(), '0');
    for (int i = 0; i < c.m(); ++i) {
      if (x >> (c.m() - 1 - i) & 1) bits[i] = '1';
    }
    const auto colour = c.colour(x);
    os << bits << ' ' << (colour ? std::to_string(*colour) : "-") << "\n";
  }
  return os.str();
}

}  // namespace subuniform
