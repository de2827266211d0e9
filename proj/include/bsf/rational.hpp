// Copyright 2026 The bsf Authors
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

#pragma once

#include <cstdint>
#include <string>

#include "bsf/errors.hpp"

namespace bsf {

using int128 = __int128;

inline std::string to_string(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // Avoid overflow on the most negative value by peeling digits as unsigned.
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

constexpr int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Exact rational number with 128-bit numerator and denominator.
/// Large enough for the closed-form success probabilities up to m = 64
/// (denominators of order m * 2^m).
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(int128 num, int128 den = 1) : num_(num), den_(den) {
    normalize();
  }

  constexpr int128 num() const { return num_; }
  constexpr int128 den() const { return den_; }

  constexpr Rational operator+(const Rational& o) const {
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
  }
  constexpr Rational operator-(const Rational& o) const {
    return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
  }
  constexpr Rational operator*(const Rational& o) const {
    return {num_ * o.num_, den_ * o.den_};
  }
  constexpr Rational operator/(const Rational& o) const {
    return {num_ * o.den_, den_ * o.num_};
  }
  constexpr bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  constexpr bool operator!=(const Rational& o) const { return !(*this == o); }
  constexpr bool operator<(const Rational& o) const {
    return num_ * o.den_ < o.num_ * den_;
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    if (den_ == 1) return to_string(num_);
    return to_string(num_) + "/" + to_string(den_);
  }

 private:
  constexpr void normalize() {
    if (den_ == 0) throw Error(ErrorKind::invalid_input, "zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    int128 g = gcd128(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  int128 num_;
  int128 den_;
};

/// Exact binomial coefficient; fits in int128 for every n used here.
inline int128 binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace bsf
