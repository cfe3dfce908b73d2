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

// Exact scalars: big integers, rationals, and the Eisenstein integers
// Z[w] with w = exp(2 pi i / 3). Nothing here touches floating point except
// the display helpers at the bottom.

#ifndef SUBUNIFORM_EXACT_ARITH_H_
#define SUBUNIFORM_EXACT_ARITH_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace subuniform {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "num/den" or a bare integer "num"; optional leading '-'.
// Throws InputError on anything else or a zero denominator.
Rational parse_rational(std::string_view text);
// Always "num/den" in lowest terms, so zero is "0/1".
std::string format_rational(const Rational& q);

// a + b w, with w^2 = -1 - w. Int is any signed integer type; the transform
// kernels use std::int64_t and promote to BigInt for norms.
template <class Int>
class BasicEisenstein {
 public:
  BasicEisenstein() = default;
  BasicEisenstein(Int a, Int b = Int(0)) : a_(std::move(a)), b_(std::move(b)) {}

  // w^k; depends only on k mod 3.
  static BasicEisenstein omega_pow(long long k) {
    switch (((k % 3) + 3) % 3) {
      case 0:
        return {Int(1), Int(0)};
      case 1:
        return {Int(0), Int(1)};
      default:
        return {Int(-1), Int(-1)};
    }
  }

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }

  // Complex conjugate: conj(w) = w^2 = -1 - w.
  BasicEisenstein conj() const { return {a_ - b_, -b_}; }
  // |a + b w|^2 = a^2 - ab + b^2.
  Int norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

  BasicEisenstein times_omega() const { return {-b_, a_ - b_}; }
  BasicEisenstein times_omega_sq() const { return {b_ - a_, -a_}; }

  BasicEisenstein& operator+=(const BasicEisenstein& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  BasicEisenstein& operator-=(const BasicEisenstein& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  friend BasicEisenstein operator+(BasicEisenstein l, const BasicEisenstein& r) {
    return l += r;
  }
  friend BasicEisenstein operator-(BasicEisenstein l, const BasicEisenstein& r) {
    return l -= r;
  }
  friend BasicEisenstein operator-(const BasicEisenstein& z) {
    return {-z.a_, -z.b_};
  }
  // (a + bw)(c + dw) = ac - bd + (ad + bc - bd) w.
  friend BasicEisenstein operator*(const BasicEisenstein& l,
                                   const BasicEisenstein& r) {
    Int bd = l.b_ * r.b_;
    return {l.a_ * r.a_ - bd, l.a_ * r.b_ + l.b_ * r.a_ - bd};
  }
  friend bool operator==(const BasicEisenstein&, const BasicEisenstein&) = default;

 private:
  Int a_{0};
  Int b_{0};
};

using Eisenstein = BasicEisenstein<BigInt>;
using Eisenstein64 = BasicEisenstein<std::int64_t>;

inline Eisenstein widen(const Eisenstein64& z) {
  return {BigInt(z.a()), BigInt(z.b())};
}

// |z / scale|^2, exactly.
Rational magnitude_sq(const Eisenstein& z, const BigInt& scale);
Rational magnitude_sq(const Eisenstein64& z, std::uint64_t scale);
Rational magnitude_sq(const Rational& z, const BigInt& scale);

class UniformityParams {
 public:
  // Throws InputError unless 0 < eps <= 1.
  explicit UniformityParams(Rational eps);

  const Rational& eps() const { return eps_; }
  Rational eps_sq() const { return eps_ * eps_; }

 private:
  Rational eps_;
};

// Display only.
double to_double(const Rational& q);
// Six significant digits, "%.6g".
std::string render_float(double x);

}  // namespace subuniform

#endif  // SUBUNIFORM_EXACT_ARITH_H_
