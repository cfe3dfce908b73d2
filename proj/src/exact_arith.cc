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

#include "subuniform/exact_arith.h"

#include <cctype>
#include <cstdio>

#include "subuniform/errors.h"

namespace subuniform {
namespace {

bool parse_integer(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  BigInt v = 0;
  for (std::size_t j = i; j < s.size(); ++j) v = v * 10 + (s[j] - '0');
  out = s[0] == '-' ? BigInt(-v) : v;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  BigInt num, den = 1;
  bool ok = parse_integer(text.substr(0, slash), num);
  if (ok && slash != std::string_view::npos) {
    std::string_view d = text.substr(slash + 1);
    ok = !d.empty() && d[0] != '-' && d[0] != '+' && parse_integer(d, den);
  }
  if (!ok) {
    throw InputError("unparseable rational '" + std::string(text) + "'");
  }
  if (den == 0) {
    throw InputError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

Rational magnitude_sq(const Eisenstein& z, const BigInt& scale) {
  return Rational(z.norm(), scale * scale);
}

Rational magnitude_sq(const Eisenstein64& z, std::uint64_t scale) {
  return magnitude_sq(widen(z), BigInt(scale));
}

Rational magnitude_sq(const Rational& z, const BigInt& scale) {
  return z * z / Rational(scale * scale);
}

UniformityParams::UniformityParams(Rational eps) : eps_(std::move(eps)) {
  if (eps_ <= 0 || eps_ > 1) {
    throw InputError("eps must lie in (0, 1], got " + format_rational(eps_));
  }
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string render_float(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

}  // namespace subuniform
