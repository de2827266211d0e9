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
#include <vector>

#include "bsf/errors.hpp"
#include "bsf/fock.hpp"
#include "bsf/matrix.hpp"
#include "bsf/parallel.hpp"
#include "bsf/permanent.hpp"
#include "bsf/state.hpp"

namespace bsf {

/// The expanded matrix S^(out, in): row i of s repeated out_i times,
/// column j repeated in_j times.
inline Matrix expanded_matrix(const TransferMatrix& s, const FockState& out,
                              const FockState& in) {
  if (out.total() != in.total()) {
    throw PhotonNumberMismatch("expanded matrix needs equal photon numbers");
  }
  auto n = static_cast<std::size_t>(out.total());
  Matrix e(n, n);
  std::size_t r = 0;
  for (std::size_t i = 0; i < out.modes(); ++i) {
    for (int a = 0; a < out[i]; ++a, ++r) {
      std::size_t c = 0;
      for (std::size_t j = 0; j < in.modes(); ++j) {
        for (int b = 0; b < in[j]; ++b, ++c) e(r, c) = s(i, j);
      }
    }
  }
  return e;
}

inline double occupation_factorial_root(const FockState& s) {
  double p = 1.0;
  for (std::size_t i = 0; i < s.modes(); ++i) {
    for (int v = 2; v <= s[i]; ++v) p *= v;
  }
  return std::sqrt(p);
}

/// Transition amplitude <out|B(s)|in> = Per(S^(out,in)) / sqrt(prod n_i! n'_i!).
/// Columns index the input state.
inline Complex boson_amplitude(const TransferMatrix& s, const FockState& out,
                               const FockState& in) {
  if (out.modes() != s.dim() || in.modes() != s.dim()) {
    throw PhotonNumberMismatch("state mode count must match the transfer matrix");
  }
  if (out.total() != in.total()) {
    throw PhotonNumberMismatch("boson amplitude needs equal photon numbers");
  }
  Complex per = permanent_expanded(s.matrix(), out.occupations(), in.occupations());
  return per / (occupation_factorial_root(out) * occupation_factorial_root(in));
}

/// Full N x N matrix of the n-photon representation of s over the
/// lexicographic basis. Unitary.
inline Matrix boson_matrix(const TransferMatrix& s, int photons) {
  FockBasis basis(s.dim(), photons);
  std::size_t n = basis.size();
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b(i, j) = boson_amplitude(s, basis[i], basis[j]);
    }
  }
  return b;
}

/// Apply the circuit to a state: one expanded permanent per
/// (output state, input support element) pair. The loop over output
/// states is data-parallel.
inline StateVector evolve(const StateVector& state, const TransferMatrix& s,
                          unsigned threads = 0) {
  if (state.modes() != s.dim()) {
    throw PhotonNumberMismatch("state mode count must match the transfer matrix");
  }
  FockBasis basis(state.modes(), state.photons());
  std::vector<Complex> out(basis.size(), Complex{});
  const auto& support = state.entries();
  parallel_for(basis.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const FockState& target = basis[i];
      double target_norm = occupation_factorial_root(target);
      Complex acc{};
      for (const auto& [in, amp] : support) {
        Complex per =
            permanent_expanded(s.matrix(), target.occupations(), in.occupations());
        acc += amp * per / (target_norm * occupation_factorial_root(in));
      }
      out[i] = acc;
    }
  });

  std::vector<StateVector::Entry> entries;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (std::norm(out[i]) > 1e-30) entries.emplace_back(basis[i], out[i]);
  }
  StateVector result(state.modes(), std::move(entries));
  double drift = std::abs(result.norm_squared() - state.norm_squared());
  if (drift > 1e-8) {
    throw InternalCheck("evolution norm drift " + std::to_string(drift));
  }
  return result;
}

}  // namespace bsf
