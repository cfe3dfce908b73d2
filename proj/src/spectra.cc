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

#include "subuniform/spectra.h"

#include <bit>

#include "subuniform/errors.h"

namespace subuniform {
namespace {

void check_set_and_coset(const PointSet& a, const Coset& c) {
  const Subspace& v = c.subspace();
  if (a.p() != v.p() || a.n() != v.n()) {
    throw InputError("set and coset live in different ambient spaces");
  }
}

std::int64_t norm64(const Eisenstein64& z) {
  return z.a() * z.a() - z.a() * z.b() + z.b() * z.b();
}

// e_p(-c) * z.
Eisenstein64 apply_phase(const Eisenstein64& z, int p, int c) {
  if (c == 0) return z;
  if (p == 2) return -z;
  return c == 1 ? z.times_omega_sq() : z.times_omega();
}

}  // namespace

void wht2(std::span<std::int64_t> f) {
  const std::size_t len = f.size();
  if (!std::has_single_bit(len)) {
    throw InputError("wht2 needs a power-of-two length");
  }
  for (std::size_t h = 1; h < len; h *= 2) {
    for (std::size_t i = 0; i < len; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t x = f[j];
        const std::int64_t y = f[j + h];
        f[j] = x + y;
        f[j + h] = x - y;
      }
    }
  }
}

void dft3_inplace(std::span<Eisenstein64> f) {
  const std::size_t len = f.size();
  std::size_t check = len;
  while (check > 1 && check % 3 == 0) check /= 3;
  if (check != 1) throw InputError("dft3 needs a power-of-three length");
  for (std::size_t h = 1; h < len; h *= 3) {
    for (std::size_t i = 0; i < len; i += 3 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const Eisenstein64 x0 = f[j];
        const Eisenstein64 x1 = f[j + h];
        const Eisenstein64 x2 = f[j + 2 * h];
        f[j] = x0 + x1 + x2;
        f[j + h] = x0 + x1.times_omega_sq() + x2.times_omega();
        f[j + 2 * h] = x0 + x1.times_omega() + x2.times_omega_sq();
      }
    }
  }
}

std::vector<Eisenstein64> dft3(std::span<const std::int64_t> f) {
  std::vector<Eisenstein64> out(f.begin(), f.end());
  dft3_inplace(out);
  return out;
}

std::vector<std::int64_t> pull_back(const PointSet& a, const Coset& c) {
  check_set_and_coset(a, c);
  const Subspace& v = c.subspace();
  const int k = v.dim();
  const std::uint64_t size = v.size();
  std::vector<std::int64_t> g(size);

  if (v.p() == 2) {
    std::vector<std::uint64_t> basis_rank(k);
    for (int i = 0; i < k; ++i) basis_rank[i] = v.basis()[i].rank();
    std::vector<std::uint64_t> elem(size);
    elem[0] = c.rep().rank();
    g[0] = a.contains_rank(elem[0]);
    for (std::uint64_t t = 1; t < size; ++t) {
      const int b = std::countr_zero(t);
      elem[t] = elem[t & (t - 1)] ^ basis_rank[k - 1 - b];
      g[t] = a.contains_rank(elem[t]);
    }
    return g;
  }

  // Mixed-radix counter over s; on wrap a digit has added p copies of its
  // basis vector, which is zero, so one more addition restores it.
  std::vector<std::uint8_t> s(k, 0);
  GFVector y = c.rep();
  for (std::uint64_t t = 0; t < size; ++t) {
    g[t] = a.contains_rank(y.rank());
    int pos = k - 1;
    while (pos >= 0 && s[pos] == v.p() - 1) {
      s[pos] = 0;
      y += v.basis()[pos];
      --pos;
    }
    if (pos < 0) break;
    ++s[pos];
    y += v.basis()[pos];
  }
  return g;
}

Spectrum restricted_spectrum(const PointSet& a, const Coset& c) {
  std::vector<std::int64_t> g = pull_back(a, c);
  const Subspace& v = c.subspace();
  Spectrum s{v.p(), v.dim(), {}, v.size(), c};
  if (v.p() == 2) {
    wht2(g);
    s.coefficients.assign(g.begin(), g.end());
  } else {
    s.coefficients = dft3(g);
  }
  return s;
}

GFVector character_of(const GFVector& r, const Subspace& v) {
  GFVector t(v.p(), v.dim());
  for (int i = 0; i < v.dim(); ++i) {
    t.set(i, static_cast<std::uint8_t>(dot(r, v.basis()[i])));
  }
  return t;
}

GFVector lift_character(const GFVector& t, const Subspace& v) {
  if (t.p() != v.p() || t.n() != v.dim()) {
    throw InputError("character index has the wrong dimension");
  }
  // The RREF pivots give one solution; every solution differs by V^perp.
  const auto piv = v.pivots();
  GFVector r(v.p(), v.n());
  for (int i = 0; i < v.dim(); ++i) r.set(piv[i], t[i]);
  return canonical_rep(r, perp(v));
}

Eisenstein64 ambient_coefficient(const Spectrum& s, const GFVector& r) {
  const Subspace& v = s.coset.subspace();
  std::uint64_t index = 0;
  if (v.dim() > 0) index = character_of(r, v).rank();
  return apply_phase(s.coefficients[index], s.p, dot(r, s.coset.rep()));
}

SupNorm sup_norm(const PointSet& a, const Coset& c) {
  std::vector<std::int64_t> g = pull_back(a, c);
  SupNorm best;
  if (c.subspace().p() == 2) {
    wht2(g);
    for (std::size_t t = 1; t < g.size(); ++t) {
      const std::int64_t n = g[t] * g[t];
      if (n > best.max_norm || best.index == 0) {
        best = {n, t};
      }
    }
  } else {
    const std::vector<Eisenstein64> f = dft3(g);
    for (std::size_t t = 1; t < f.size(); ++t) {
      const std::int64_t n = norm64(f[t]);
      if (n > best.max_norm || best.index == 0) {
        best = {n, t};
      }
    }
  }
  return best;
}

UniformityReport uniformity_sup(const PointSet& a, const Coset& c) {
  const Spectrum s = restricted_spectrum(a, c);
  const Subspace& v = c.subspace();
  UniformityReport report;
  report.scale = s.scale;
  report.density = Rational(BigInt(s.count()), BigInt(s.scale));
  if (s.k == 0) return report;

  std::uint64_t best = 1;
  std::int64_t best_norm = norm64(s.coefficients[1]);
  for (std::size_t t = 2; t < s.coefficients.size(); ++t) {
    const std::int64_t n = norm64(s.coefficients[t]);
    if (n > best_norm) {
      best = t;
      best_norm = n;
    }
  }
  report.sup_sq = magnitude_sq(s.coefficients[best], s.scale);
  report.witness_t = GFVector::from_rank(v.p(), v.dim(), best);
  report.witness_r = lift_character(*report.witness_t, v);
  report.witness_coefficient = s.coefficients[best];
  report.witness_value = ambient_coefficient(s, *report.witness_r);
  return report;
}

}  // namespace subuniform
