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

#include <algorithm>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "bsf/bsf.hpp"

namespace bsf::testing {

/// Independent permanent oracle: direct sum over all k! permutations.
/// Deliberately naive; it never shares code with the Ryser kernels.
inline Complex naive_permanent(const Matrix& m) {
  std::size_t k = m.rows();
  if (k == 0) return {1.0, 0.0};
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Complex total{};
  do {
    Complex prod{1.0, 0.0};
    for (std::size_t i = 0; i < k; ++i) prod *= m(i, perm[i]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Matrix random_complex_matrix(std::size_t n, std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = {dist(rng), dist(rng)};
  }
  return m;
}

/// Haar-ish random unitary via Gram-Schmidt on a random complex matrix.
inline TransferMatrix random_unitary(std::size_t n, std::mt19937& rng) {
  for (;;) {
    Matrix m = random_complex_matrix(n, rng);
    bool degenerate = false;
    for (std::size_t col = 0; col < n && !degenerate; ++col) {
      for (std::size_t prev = 0; prev < col; ++prev) {
        Complex dot{};
        for (std::size_t r = 0; r < n; ++r) dot += std::conj(m(r, prev)) * m(r, col);
        for (std::size_t r = 0; r < n; ++r) m(r, col) -= dot * m(r, prev);
      }
      double norm = 0;
      for (std::size_t r = 0; r < n; ++r) norm += std::norm(m(r, col));
      norm = std::sqrt(norm);
      if (norm < 1e-6) {
        degenerate = true;
        break;
      }
      for (std::size_t r = 0; r < n; ++r) m(r, col) /= norm;
    }
    if (!degenerate) return TransferMatrix(std::move(m), 1e-9);
  }
}

/// Dense amplitude vector of a sparse state over the full basis.
inline std::vector<Complex> dense_vector(const StateVector& state, const FockBasis& basis) {
  std::vector<Complex> v(basis.size(), Complex{});
  for (const auto& [s, a] : state.entries()) v[basis.index_of(s)] = a;
  return v;
}

inline StateVector random_state(const FockBasis& basis, std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<StateVector::Entry> entries;
  for (const auto& s : basis.states()) {
    entries.emplace_back(s, Complex{dist(rng), dist(rng)});
  }
  StateVector v(basis.modes(), std::move(entries));
  return v.normalize();
}

/// Random monomial matrix with phases on a small rational grid.
inline MonomialMatrix random_monomial(std::size_t m, std::mt19937& rng,
                                      std::int64_t phase_den = 12) {
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<std::int64_t> num(0, phase_den - 1);
  std::vector<Phase> phases(m);
  for (auto& p : phases) p = Phase(ExactPhase(num(rng), phase_den));
  return {std::move(perm), std::move(phases)};
}

inline double max_entry_diff(const Matrix& a, const Matrix& b) {
  return a.max_abs_diff(b);
}

}  // namespace bsf::testing
