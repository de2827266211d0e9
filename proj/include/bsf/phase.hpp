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

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "bsf/errors.hpp"

namespace bsf {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// A root of unity stored as a rational fraction of a full turn:
/// turns = p/q in [0, 1) representing exp(2*pi*i * p/q).
/// Multiplication is addition of turns mod 1 and never loses precision.
class ExactPhase {
 public:
  constexpr ExactPhase() : num_(0), den_(1) {}
  constexpr ExactPhase(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    normalize();
  }

  static constexpr ExactPhase one() { return {}; }
  static constexpr ExactPhase minus_one() { return {1, 2}; }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  constexpr ExactPhase operator*(const ExactPhase& o) const {
    std::int64_t g = std::gcd(den_, o.den_);
    std::int64_t l = den_ / g * o.den_;
    return {num_ * (l / den_) + o.num_ * (l / o.den_), l};
  }
  constexpr ExactPhase inverse() const { return {den_ - num_, den_}; }
  constexpr ExactPhase conj() const { return inverse(); }

  constexpr ExactPhase pow(std::int64_t e) const {
    std::int64_t p = (num_ * (e % den_)) % den_;
    if (p < 0) p += den_;
    return {p, den_};
  }

  constexpr bool operator==(const ExactPhase& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  constexpr bool operator!=(const ExactPhase& o) const { return !(*this == o); }
  constexpr bool operator<(const ExactPhase& o) const {
    return num_ * o.den_ < o.num_ * den_;
  }

  constexpr bool is_one() const { return num_ == 0; }

  Complex value() const {
    // Quarter turns are exact; they dominate the Pauli/Fourier phases.
    if (den_ == 1) return {1.0, 0.0};
    if (den_ == 2) return {-1.0, 0.0};
    if (den_ == 4) return num_ == 1 ? Complex{0.0, 1.0} : Complex{0.0, -1.0};
    double a = 2.0 * kPi * static_cast<double>(num_) / static_cast<double>(den_);
    return {std::cos(a), std::sin(a)};
  }

  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_) + " turn";
  }

 private:
  constexpr void normalize() {
    if (den_ <= 0) throw Error(ErrorKind::invalid_input, "phase denominator must be positive");
    num_ %= den_;
    if (num_ < 0) num_ += den_;
    std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_;
  std::int64_t den_;
};

/// Unit-modulus scalar: an ExactPhase when the value is a known root of
/// unity, a plain complex number otherwise. Products stay exact as long
/// as both factors are exact.
class Phase {
 public:
  Phase() : exact_(ExactPhase::one()), value_(1.0, 0.0) {}
  Phase(ExactPhase p) : exact_(p), value_(p.value()) {}  // NOLINT: implicit by design
  static Phase inexact(Complex v) {
    Phase p;
    p.exact_.reset();
    p.value_ = v;
    return p;
  }

  bool is_exact() const { return exact_.has_value(); }
  const ExactPhase& turns() const {
    if (!exact_) throw InexactPhase("phase is not a known rational turn");
    return *exact_;
  }
  Complex value() const { return value_; }

  Phase operator*(const Phase& o) const {
    if (exact_ && o.exact_) return Phase(*exact_ * *o.exact_);
    return inexact(value_ * o.value_);
  }
  Phase inverse() const {
    if (exact_) return Phase(exact_->inverse());
    return inexact(std::conj(value_));
  }
  Phase pow(std::int64_t e) const {
    if (exact_) return Phase(exact_->pow(e));
    return inexact(std::pow(value_, static_cast<double>(e)));
  }

  /// Exact comparison; inexact phases never compare equal.
  bool operator==(const Phase& o) const {
    return exact_ && o.exact_ && *exact_ == *o.exact_;
  }

 private:
  std::optional<ExactPhase> exact_;
  Complex value_;
};

/// Snap a unit-modulus complex number to the nearest rational turn with
/// denominator <= max_den; inexact passthrough when nothing is within tol.
inline Phase snap_phase(Complex v, std::int64_t max_den = 4096, double tol = 1e-9) {
  double turn = std::arg(v) / (2.0 * kPi);
  if (turn < 0) turn += 1.0;
  // Walk the Stern-Brocot-like ladder of denominators; phases arising from
  // Fourier/Pauli products have small q, so the scan is cheap.
  for (std::int64_t q = 1; q <= max_den; ++q) {
    double scaled = turn * static_cast<double>(q);
    auto p = static_cast<std::int64_t>(std::llround(scaled));
    if (std::abs(scaled - static_cast<double>(p)) <= tol * static_cast<double>(q)) {
      ExactPhase ep(p % q, q);
      if (std::abs(ep.value() - v) <= 64 * tol) return Phase(ep);
    }
  }
  return Phase::inexact(v);
}

}  // namespace bsf
