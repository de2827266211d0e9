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

#include <cstddef>
#include <utility>
#include <vector>

#include "bsf/errors.hpp"
#include "bsf/fock.hpp"
#include "bsf/matrix.hpp"
#include "bsf/phase.hpp"

namespace bsf {

/// Unitary monomial matrix g = P_sigma * D: a mode permutation after
/// per-mode phases. perm[i] is the output mode of input mode i, and
/// phase[i] the diagonal entry D_ii, so g e_i = phase[i] * e_perm[i].
class MonomialMatrix {
 public:
  MonomialMatrix(std::vector<std::size_t> perm, std::vector<Phase> phases)
      : perm_(std::move(perm)), phases_(std::move(phases)) {
    if (perm_.size() != phases_.size()) {
      throw IndexOutOfRange("permutation/phase size mismatch");
    }
    std::vector<bool> hit(perm_.size(), false);
    for (std::size_t v : perm_) {
      if (v >= perm_.size() || hit[v]) throw NotMonomial("invalid permutation");
      hit[v] = true;
    }
  }

  static MonomialMatrix identity(std::size_t m) {
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;
    return {std::move(perm), std::vector<Phase>(m)};
  }

  std::size_t dim() const { return perm_.size(); }
  const std::vector<std::size_t>& perm() const { return perm_; }
  const std::vector<Phase>& phases() const { return phases_; }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      if (perm_[i] != i) return false;
    }
    return true;
  }
  bool is_identity() const {
    if (!is_diagonal()) return false;
    for (const auto& p : phases_) {
      if (!(p == Phase())) return false;
    }
    return true;
  }
  bool is_exact() const {
    for (const auto& p : phases_) {
      if (!p.is_exact()) return false;
    }
    return true;
  }

  MonomialMatrix operator*(const MonomialMatrix& o) const {
    if (dim() != o.dim()) throw IndexOutOfRange("monomial dimension mismatch");
    std::vector<std::size_t> perm(dim());
    std::vector<Phase> phases(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      perm[i] = perm_[o.perm_[i]];
      phases[i] = phases_[o.perm_[i]] * o.phases_[i];
    }
    return {std::move(perm), std::move(phases)};
  }

  MonomialMatrix inverse() const {
    std::vector<std::size_t> perm(dim());
    std::vector<Phase> phases(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      perm[perm_[i]] = i;
      phases[perm_[i]] = phases_[i].inverse();
    }
    return {std::move(perm), std::move(phases)};
  }

  TransferMatrix to_transfer() const {
    Matrix m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) m(perm_[i], i) = phases_[i].value();
    return TransferMatrix(std::move(m), kUnitaryTolExternal);
  }

  /// Exact ordering/equality on (permutation, rational phases); used to
  /// index group elements. Requires exact phases.
  bool operator==(const MonomialMatrix& o) const {
    if (perm_ != o.perm_) return false;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!(phases_[i] == o.phases_[i])) return false;
    }
    return true;
  }
  bool operator<(const MonomialMatrix& o) const {
    if (perm_ != o.perm_) return perm_ < o.perm_;
    for (std::size_t i = 0; i < dim(); ++i) {
      const auto& a = phases_[i].turns();
      const auto& b = o.phases_[i].turns();
      if (a != b) return a < b;
    }
    return false;
  }

 private:
  std::vector<std::size_t> perm_;
  std::vector<Phase> phases_;
};

/// Pauli-X for d modes: the cyclic shift j -> j+1 (mod d), no phases.
inline MonomialMatrix pauli_x(std::size_t d) {
  if (d < 1) throw IndexOutOfRange("pauli_x requires d >= 1");
  std::vector<std::size_t> perm(d);
  for (std::size_t i = 0; i < d; ++i) perm[i] = (i + 1) % d;
  return {std::move(perm), std::vector<Phase>(d)};
}

/// Pauli-Z for d modes: diagonal phase omega^j on mode j.
inline MonomialMatrix pauli_z(std::size_t d) {
  if (d < 1) throw IndexOutOfRange("pauli_z requires d >= 1");
  std::vector<std::size_t> perm(d);
  std::vector<Phase> phases(d);
  for (std::size_t i = 0; i < d; ++i) {
    perm[i] = i;
    phases[i] = Phase(ExactPhase(static_cast<std::int64_t>(i),
                                 static_cast<std::int64_t>(d)));
  }
  return {std::move(perm), std::move(phases)};
}

/// Single-mode phase shifter exp(2*pi*i*turns) embedded at `mode`.
inline MonomialMatrix phase_shift(std::size_t m, std::size_t mode, ExactPhase turns) {
  if (mode >= m) throw IndexOutOfRange("phase mode out of range");
  auto g = MonomialMatrix::identity(m);
  std::vector<Phase> phases = g.phases();
  phases[mode] = Phase(turns);
  return {g.perm(), std::move(phases)};
}

/// Kronecker product of monomial matrices under (i, j) -> i*dim(B)+j.
inline MonomialMatrix tensor(const MonomialMatrix& a, const MonomialMatrix& b) {
  std::size_t da = a.dim(), db = b.dim();
  std::vector<std::size_t> perm(da * db);
  std::vector<Phase> phases(da * db);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      perm[i * db + j] = a.perm()[i] * db + b.perm()[j];
      phases[i * db + j] = a.phases()[i] * b.phases()[j];
    }
  }
  return {std::move(perm), std::move(phases)};
}

inline MonomialMatrix direct_sum(const MonomialMatrix& a, const MonomialMatrix& b) {
  std::size_t da = a.dim(), db = b.dim();
  std::vector<std::size_t> perm(da + db);
  std::vector<Phase> phases(da + db);
  for (std::size_t i = 0; i < da; ++i) {
    perm[i] = a.perm()[i];
    phases[i] = a.phases()[i];
  }
  for (std::size_t j = 0; j < db; ++j) {
    perm[da + j] = da + b.perm()[j];
    phases[da + j] = b.phases()[j];
  }
  return {std::move(perm), std::move(phases)};
}

/// Extract permutation and phases from a numerically monomial transfer
/// matrix. Phases within `tol` of a rational turn (denominator up to
/// `max_den`) are snapped exact; otherwise they stay floating.
inline MonomialMatrix monomial_from_matrix(const TransferMatrix& u,
                                           double tol = 1e-9,
                                           std::int64_t max_den = 4096) {
  std::size_t m = u.dim();
  std::vector<std::size_t> perm(m, m);
  std::vector<Phase> phases(m);
  std::vector<bool> row_used(m, false);
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t found = m;
    for (std::size_t row = 0; row < m; ++row) {
      double mag = std::abs(u(row, col));
      if (mag > tol) {
        if (found != m) {
          throw NotMonomial("column " + std::to_string(col) +
                            " has multiple entries above tolerance");
        }
        found = row;
      }
    }
    if (found == m || row_used[found]) {
      throw NotMonomial("matrix is not a permutation of phased modes");
    }
    row_used[found] = true;
    perm[col] = found;
    phases[col] = snap_phase(u(found, col), max_den, tol);
  }
  return {std::move(perm), std::move(phases)};
}

/// Exact action on a Fock state: B(g)|n> = phase * |sigma^{-1}(n)> with
/// phase = prod_i D_ii^{n_i}.
inline std::pair<FockState, Phase> apply_monomial(const MonomialMatrix& g,
                                                  const FockState& n) {
  if (n.modes() != g.dim()) {
    throw PhotonNumberMismatch("state mode count must match the monomial");
  }
  std::vector<int> out(g.dim(), 0);
  Phase phase;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    out[g.perm()[i]] = n[i];
    if (n[i] != 0) phase = phase * g.phases()[i].pow(n[i]);
  }
  return {FockState(std::move(out)), phase};
}

/// Permutation image of an occupation tuple: (sigma(n))_i = n_{sigma(i)}.
inline FockState permute_state(const MonomialMatrix& g, const FockState& n) {
  std::vector<int> out(g.dim(), 0);
  for (std::size_t i = 0; i < g.dim(); ++i) out[i] = n[g.perm()[i]];
  return FockState(std::move(out));
}

}  // namespace bsf
