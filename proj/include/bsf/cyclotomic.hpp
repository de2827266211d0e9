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
#include <map>
#include <numeric>
#include <vector>

#include "bsf/phase.hpp"

namespace bsf {

/// Coefficients of the n-th cyclotomic polynomial, ascending degree.
/// Built by dividing x^n - 1 by Phi_d for every proper divisor d of n;
/// all intermediate arithmetic is exact (divisors are monic).
inline std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n) {
  static thread_local std::map<std::int64_t, std::vector<std::int64_t>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // poly = x^n - 1
  std::vector<std::int64_t> poly(static_cast<std::size_t>(n) + 1, 0);
  poly.front() = -1;
  poly.back() = 1;

  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto div = cyclotomic_polynomial(d);
    // Exact long division of poly by the monic polynomial div.
    std::vector<std::int64_t> quot(poly.size() - div.size() + 1, 0);
    for (std::size_t qi = quot.size(); qi-- > 0;) {
      std::int64_t c = poly[qi + div.size() - 1];
      quot[qi] = c;
      if (c == 0) continue;
      for (std::size_t k = 0; k < div.size(); ++k) {
        poly[qi + k] -= c * div[k];
      }
    }
    poly = std::move(quot);
  }
  cache.emplace(n, poly);
  return poly;
}

/// Exact test of sum_i exp(2*pi*i * p_i/q_i) == 0.
///
/// The phases are written as powers of a primitive L-th root of unity
/// (L = lcm of denominators) and collected into an integer polynomial;
/// the sum vanishes iff the polynomial is divisible by Phi_L.
inline bool root_of_unity_sum_is_zero(const std::vector<ExactPhase>& phases) {
  if (phases.empty()) return true;
  std::int64_t lcm = 1;
  for (const auto& p : phases) {
    lcm = std::lcm(lcm, p.den());
    if (lcm > 1'000'000) {
      throw SizeLimit("phase-sum zero test: lcm of denominators exceeds 1e6");
    }
  }
  std::vector<std::int64_t> coeff(static_cast<std::size_t>(lcm), 0);
  for (const auto& p : phases) {
    coeff[static_cast<std::size_t>(p.num() * (lcm / p.den()))] += 1;
  }

  auto phi = cyclotomic_polynomial(lcm);
  // Remainder of coeff(x) modulo the monic polynomial phi(x).
  for (std::size_t qi = coeff.size(); qi-- > 0;) {
    if (qi + 1 < phi.size()) break;
    std::int64_t c = coeff[qi];
    if (c == 0) continue;
    std::size_t shift = qi + 1 - phi.size();
    for (std::size_t k = 0; k < phi.size(); ++k) {
      coeff[shift + k] -= c * phi[k];
    }
  }
  for (std::int64_t c : coeff) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace bsf
