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

#include <array>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "bsf/bosonic.hpp"
#include "bsf/errors.hpp"
#include "bsf/fock.hpp"
#include "bsf/matrix.hpp"
#include "bsf/rational.hpp"
#include "bsf/state.hpp"

namespace bsf {

// ---------------------------------------------------------------------------
// Dual-rail states
// ---------------------------------------------------------------------------

enum class BellKind { psi_plus, psi_minus, phi_plus, phi_minus };

inline std::string bell_name(BellKind k) {
  switch (k) {
    case BellKind::psi_plus: return "psi+";
    case BellKind::psi_minus: return "psi-";
    case BellKind::phi_plus: return "phi+";
    case BellKind::phi_minus: return "phi-";
  }
  return "?";
}

using Vec4 = std::array<Complex, 4>;  // two-qubit coefficients, basis |00,01,10,11>

inline Vec4 bell_coefficients(BellKind k) {
  double r = 1.0 / std::sqrt(2.0);
  switch (k) {
    case BellKind::psi_plus: return {0, r, r, 0};
    case BellKind::psi_minus: return {0, r, -r, 0};
    case BellKind::phi_plus: return {r, 0, 0, r};
    case BellKind::phi_minus: return {r, 0, 0, -r};
  }
  return {};
}

/// Fock state of the logical two-qubit basis state |xy> in dual-rail
/// encoding on modes (A rail0, A rail1, B rail0, B rail1).
inline FockState dual_rail_basis_state(int x, int y) {
  std::vector<int> occ(4, 0);
  occ[x] = 1;
  occ[2 + y] = 1;
  return FockState(std::move(occ));
}

/// Bell state on 4 modes, photons at (A rail0, A rail1, B rail0, B rail1).
inline StateVector bell_state(BellKind k) {
  Vec4 c = bell_coefficients(k);
  std::vector<StateVector::Entry> entries;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      Complex amp = c[2 * x + y];
      if (amp != Complex{}) entries.emplace_back(dual_rail_basis_state(x, y), amp);
    }
  }
  return StateVector(4, std::move(entries));
}

/// |alpha> = |11> on two modes.
inline StateVector alpha_state() {
  return StateVector::basis_state(FockState({1, 1}));
}

/// |beta+-> = (|20> +- |02>) / sqrt(2) on two modes.
inline StateVector beta_state(int sign) {
  double r = 1.0 / std::sqrt(2.0);
  return StateVector(2, {{FockState({2, 0}), r},
                         {FockState({0, 2}), sign >= 0 ? r : -r}});
}

/// Product of per-copy beta states. signs[j] picks beta+ (>=0) or beta-
/// for copy j. Rail-major puts copy j on modes (j, m+j) matching
/// I_2 (x) F_m; copy-major uses (2j, 2j+1).
inline StateVector beta_product(std::size_t m, const std::vector<int>& signs,
                                bool rail_major) {
  if (signs.size() != m) throw IndexOutOfRange("one beta sign per copy required");
  std::vector<std::pair<StateVector, std::vector<std::size_t>>> factors;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<std::size_t> modes =
        rail_major ? std::vector<std::size_t>{j, m + j}
                   : std::vector<std::size_t>{2 * j, 2 * j + 1};
    factors.emplace_back(beta_state(signs[j]), std::move(modes));
  }
  return product_state(2 * m, factors);
}

/// Dicke state on 2m modes in the per-copy encoding |0bar> = |20>,
/// |1bar> = -|02>, copy-major mode order. Every weight-k term carries the
/// same (-1)^k sign from the |1bar> factors.
inline StateVector dicke_state(std::size_t m, int k) {
  if (k < 0 || k > static_cast<int>(m)) {
    throw IndexOutOfRange("dicke_state needs 0 <= k <= m");
  }
  double amp = ((k % 2) ? -1.0 : 1.0) /
               std::sqrt(static_cast<double>(binomial(static_cast<int>(m), k)));
  std::vector<StateVector::Entry> entries;
  std::vector<std::size_t> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    std::vector<int> occ(2 * m, 0);
    std::vector<bool> one(m, false);
    for (int i = 0; i < k; ++i) one[idx[i]] = true;
    for (std::size_t j = 0; j < m; ++j) occ[2 * j + (one[j] ? 1 : 0)] = 2;
    entries.emplace_back(FockState(std::move(occ)), amp);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - static_cast<std::size_t>(k - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return StateVector(2 * m, std::move(entries));
}

// ---------------------------------------------------------------------------
// Circuit and outcome classification
// ---------------------------------------------------------------------------

/// Mode layout of the discrimination circuit: rail group c in {0,..,3},
/// copy j in {0,..,m-1} at global mode c*m + j. Copy 0 holds the two
/// qubits, copies j >= 1 hold the 4(m-1) ancilla photons.
struct DualRailLayout {
  std::size_t m;
  std::size_t mode(std::size_t rail_group, std::size_t copy) const {
    return rail_group * m + copy;
  }
  std::size_t total_modes() const { return 4 * m; }
  int total_photons() const { return 2 + 4 * (static_cast<int>(m) - 1); }
};

/// Interference circuit on 4m modes, built in two layers of embeds.
///
/// Layer 1, copy 0: a balanced coupler between matching rails of the two
/// qubits, (A rail r) <-> (B rail r). This is the splitter that bunches
/// psi+/phi+- photon pairs into a single half while psi- anti-bunches.
/// Layer 1, copies j >= 1: a coupler on each within-half ancilla pair,
/// turning |11> into |beta->.
/// Layer 2: an m-mode Fourier along the copies of every rail group, which
/// conserves per-rail photon number.
inline TransferMatrix build_circuit(std::size_t m) {
  if (m < 2) throw IndexOutOfRange("build_circuit requires m >= 2");
  DualRailLayout layout{m};
  std::size_t total = layout.total_modes();
  TransferMatrix f2 = fourier_matrix(2);
  TransferMatrix circuit =
      embed(f2, {layout.mode(0, 0), layout.mode(2, 0)}, total) *
      embed(f2, {layout.mode(1, 0), layout.mode(3, 0)}, total);
  for (std::size_t h = 0; h < 2; ++h) {
    for (std::size_t j = 1; j < m; ++j) {
      circuit = embed(f2, {layout.mode(2 * h, j), layout.mode(2 * h + 1, j)}, total) *
                circuit;
    }
  }
  TransferMatrix fm = fourier_matrix(m);
  for (std::size_t c = 0; c < 4; ++c) {
    std::vector<std::size_t> modes(m);
    for (std::size_t j = 0; j < m; ++j) modes[j] = layout.mode(c, j);
    circuit = embed(fm, modes, total) * circuit;
  }
  return circuit;
}

struct OutcomeLabel {
  enum class Kind { psi_plus, psi_minus, phi_plus, failure };
  Kind kind;
  int k = -1;  // failure class index, 0..m

  bool operator==(const OutcomeLabel& o) const { return kind == o.kind && k == o.k; }
  bool operator<(const OutcomeLabel& o) const {
    if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
    return k < o.k;
  }

  std::string str() const {
    switch (kind) {
      case Kind::psi_plus: return "psi+";
      case Kind::psi_minus: return "psi-";
      case Kind::phi_plus: return "phi+";
      case Kind::failure: return "fail(k=" + std::to_string(k) + ")";
    }
    return "?";
  }
};

/// Deterministic decision rule on a detected photon pattern.
///
/// psi-: one input photon ends up in each half, so both halves count odd.
/// Otherwise the half holding both input photons is "heavy". An odd count
/// on its rail-1 modes reads Z_2 (x) I_m = -1 and identifies psi+. For an
/// even count, the transported eigenvalue of I_2 (x) X_m is read off as
/// t = sum_j j*n_j (mod m) over both rails of the heavy half: t != 0
/// announces phi+, and t = 0 is the failure class k = (rail-1 count)/2.
/// Both Fourier layers act within rails, so per-rail photon numbers of the
/// preparation layer survive to the detectors.
inline OutcomeLabel classify_outcome(std::size_t m, const FockState& outcome) {
  DualRailLayout layout{m};
  if (outcome.modes() != layout.total_modes() ||
      outcome.total() != layout.total_photons()) {
    throw InvalidPhotonCount("outcome does not match the circuit layout");
  }
  auto rail_count = [&](std::size_t c) {
    int s = 0;
    for (std::size_t j = 0; j < m; ++j) s += outcome[layout.mode(c, j)];
    return s;
  };
  int half0 = rail_count(0) + rail_count(1);
  int half1 = rail_count(2) + rail_count(3);
  if ((half0 % 2 != 0) && (half1 % 2 != 0)) {
    return {OutcomeLabel::Kind::psi_minus};
  }
  std::size_t heavy = half0 > half1 ? 0 : 1;
  int rail1 = rail_count(2 * heavy + 1);
  if (rail1 % 2 != 0) {
    return {OutcomeLabel::Kind::psi_plus};
  }
  std::size_t t = 0;
  for (std::size_t j = 0; j < m; ++j) {
    t += j * static_cast<std::size_t>(outcome[layout.mode(2 * heavy, j)] +
                                      outcome[layout.mode(2 * heavy + 1, j)]);
  }
  if (t % m != 0) {
    return {OutcomeLabel::Kind::phi_plus};
  }
  return {OutcomeLabel::Kind::failure, rail1 / 2};
}

// ---------------------------------------------------------------------------
// Quantum instrument
// ---------------------------------------------------------------------------

struct KrausOperator {
  OutcomeLabel label;
  Vec4 row;  // bra coefficients over |00,01,10,11>
};

struct PovmElement {
  OutcomeLabel label;
  Matrix element;  // 4x4, positive semidefinite
};

/// The two-qubit instrument induced by the circuit: Kraus rows, the
/// per-class POVM elements K^dag K, and bookkeeping from the completeness
/// check sum_x M_x = I.
struct BqiResult {
  std::size_t m = 0;
  std::vector<KrausOperator> kraus;
  std::vector<PovmElement> povm;  // sorted by label
  double completeness_defect = 0;
  double max_rank1_residual = 0;                 // oracle diagnostic
  std::map<BellKind, double> bell_success;       // P(correct label | Bell input)

  const Matrix* find(const OutcomeLabel& label) const {
    for (const auto& p : povm) {
      if (p.label == label) return &p.element;
    }
    return nullptr;
  }
};

inline Matrix outer_from_row(const Vec4& row) {
  Matrix m(4, 4);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) m(a, b) = std::conj(row[a]) * row[b];
  }
  return m;
}

inline double expectation(const Matrix& m, const Vec4& v) {
  Complex acc{};
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) acc += std::conj(v[a]) * m(a, b) * v[b];
  }
  return acc.real();
}

namespace detail {

inline void fill_success_from_povm(BqiResult& r) {
  auto success_for = [&](BellKind b, const OutcomeLabel& label) {
    const Matrix* m = r.find(label);
    r.bell_success[b] = m ? expectation(*m, bell_coefficients(b)) : 0.0;
  };
  success_for(BellKind::psi_plus, {OutcomeLabel::Kind::psi_plus});
  success_for(BellKind::psi_minus, {OutcomeLabel::Kind::psi_minus});
  success_for(BellKind::phi_plus, {OutcomeLabel::Kind::phi_plus});
  if (r.m % 2 == 0) {
    success_for(BellKind::phi_minus,
                {OutcomeLabel::Kind::failure, static_cast<int>(r.m / 2)});
  } else {
    r.bell_success[BellKind::phi_minus] = 0.0;
  }
}

}  // namespace detail

/// Closed-form instrument of the m-copy scheme:
/// { <psi+|, <psi-|, sqrt(1 - 1/m) <phi+|, K_0, ..., K_m } with
/// K_k = sqrt(C(m,k)) 2^{-m/2} [ <phi-| + ((m-2k)/m) <phi+| ].
inline BqiResult kraus_operators(std::size_t m) {
  if (m < 2) throw IndexOutOfRange("kraus_operators requires m >= 2");
  auto scaled_row = [](const Vec4& v, double s) {
    Vec4 r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = std::conj(v[i]) * s;
    return r;
  };
  Vec4 psi_p = bell_coefficients(BellKind::psi_plus);
  Vec4 psi_m = bell_coefficients(BellKind::psi_minus);
  Vec4 phi_p = bell_coefficients(BellKind::phi_plus);
  Vec4 phi_m = bell_coefficients(BellKind::phi_minus);

  BqiResult r;
  r.m = m;
  double md = static_cast<double>(m);
  r.kraus.push_back({{OutcomeLabel::Kind::psi_plus}, scaled_row(psi_p, 1.0)});
  r.kraus.push_back({{OutcomeLabel::Kind::psi_minus}, scaled_row(psi_m, 1.0)});
  r.kraus.push_back(
      {{OutcomeLabel::Kind::phi_plus}, scaled_row(phi_p, std::sqrt(1.0 - 1.0 / md))});
  for (int k = 0; k <= static_cast<int>(m); ++k) {
    double weight = std::sqrt(static_cast<double>(binomial(static_cast<int>(m), k))) /
                    std::pow(2.0, md / 2.0);
    double ratio = (md - 2.0 * k) / md;
    Vec4 row;
    for (std::size_t i = 0; i < 4; ++i) {
      row[i] = weight * (std::conj(phi_m[i]) + ratio * std::conj(phi_p[i]));
    }
    r.kraus.push_back({{OutcomeLabel::Kind::failure, k}, row});
  }

  Matrix total(4, 4);
  for (const auto& op : r.kraus) {
    Matrix e = outer_from_row(op.row);
    total = total + e;
    r.povm.push_back({op.label, std::move(e)});
  }
  r.completeness_defect = total.max_abs_diff(Matrix::identity(4));
  detail::fill_success_from_povm(r);
  return r;
}

/// Brute-force reconstruction of the instrument by simulating the circuit
/// on the four computational dual-rail inputs. Each detection pattern
/// yields one Kraus row by linearity; rows are grouped by classify_outcome,
/// checked pairwise proportional within a class (the rank-1 property), and
/// aggregated into per-class POVM elements.
inline BqiResult reconstruct_povm(std::size_t m, bool force = false,
                                  unsigned threads = 0) {
  if (m < 2) throw IndexOutOfRange("reconstruct_povm requires m >= 2");
  if (m > 3 && !force) {
    throw SizeLimit("brute-force reconstruction beyond m = 3 needs force=true");
  }
  DualRailLayout layout{m};
  TransferMatrix circuit = build_circuit(m);

  std::array<StateVector, 4> evolved = {
      StateVector(layout.total_modes(), {}), StateVector(layout.total_modes(), {}),
      StateVector(layout.total_modes(), {}), StateVector(layout.total_modes(), {})};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      std::vector<std::pair<StateVector, std::vector<std::size_t>>> factors;
      factors.emplace_back(
          StateVector::basis_state(dual_rail_basis_state(x, y)),
          std::vector<std::size_t>{layout.mode(0, 0), layout.mode(1, 0),
                                   layout.mode(2, 0), layout.mode(3, 0)});
      StateVector one_photon = StateVector::basis_state(FockState({1}));
      for (std::size_t c = 0; c < 4; ++c) {
        for (std::size_t j = 1; j < m; ++j) {
          factors.emplace_back(one_photon, std::vector<std::size_t>{layout.mode(c, j)});
        }
      }
      StateVector input = product_state(layout.total_modes(), factors);
      evolved[2 * x + y] = evolve(input, circuit, threads);
    }
  }

  // Merge the four sparse supports into per-outcome rows.
  std::map<FockState, Vec4> rows;
  for (std::size_t x = 0; x < 4; ++x) {
    for (const auto& [state, amp] : evolved[x].entries()) {
      auto [it, inserted] = rows.try_emplace(state, Vec4{});
      it->second[x] = amp;
    }
  }

  BqiResult r;
  r.m = m;
  struct ClassAccumulator {
    Matrix sum = Matrix(4, 4);
    Vec4 representative{};
    double rep_norm2 = 0;
    double weight = 0;
  };
  std::map<OutcomeLabel, ClassAccumulator> classes;
  double max_residual = 0;
  for (const auto& [state, row] : rows) {
    double norm2 = 0;
    for (const auto& a : row) norm2 += std::norm(a);
    // Exact-zero outcomes survive evolution as permanent round-off around
    // 1e-13; genuine rows sit many orders above this floor.
    if (norm2 < 1e-18) continue;
    OutcomeLabel label = classify_outcome(m, state);
    auto& acc = classes[label];
    acc.sum = acc.sum + outer_from_row(row);
    acc.weight += norm2;
    if (acc.rep_norm2 == 0) {
      acc.representative = row;
      acc.rep_norm2 = norm2;
    } else {
      // Residual of the row against the class representative direction.
      Complex overlap{};
      for (std::size_t i = 0; i < 4; ++i) {
        overlap += std::conj(acc.representative[i]) * row[i];
      }
      double res2 = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        Complex diff = row[i] - overlap / acc.rep_norm2 * acc.representative[i];
        res2 += std::norm(diff);
      }
      max_residual = std::max(max_residual, std::sqrt(res2 / norm2));
    }
  }
  r.max_rank1_residual = max_residual;

  Matrix total(4, 4);
  for (auto& [label, acc] : classes) {
    total = total + acc.sum;
    double rep_scale = std::sqrt(acc.weight / acc.rep_norm2);
    Vec4 rep;
    for (std::size_t i = 0; i < 4; ++i) rep[i] = acc.representative[i] * rep_scale;
    r.kraus.push_back({label, rep});
    r.povm.push_back({label, std::move(acc.sum)});
  }
  r.completeness_defect = total.max_abs_diff(Matrix::identity(4));
  detail::fill_success_from_povm(r);
  return r;
}

// ---------------------------------------------------------------------------
// Closed-form figures of merit
// ---------------------------------------------------------------------------

/// Average Bell-discrimination success probability. Even m follows the
/// closed form (1/4)(3 - 1/m + C(m, m/2) / 2^m); odd m has no pure
/// phi- projection among the K_k, leaving (1/4)(3 - 1/m).
inline Rational success_probability_exact(std::size_t m) {
  if (m < 2 || m > 100) throw IndexOutOfRange("success probability needs 2 <= m <= 100");
  auto mi = static_cast<int>(m);
  Rational p = Rational(3) - Rational(1, mi);
  if (m % 2 == 0) {
    p = p + Rational(binomial(mi, mi / 2), int128{1} << mi);
  }
  return p * Rational(1, 4);
}

inline double success_probability(std::size_t m) {
  return success_probability_exact(m).to_double();
}

/// Entanglement entropy (bits) of a two-qubit pure state across A:B,
/// from the squared Schmidt coefficients.
inline double entanglement_entropy(const Vec4& coeffs) {
  double n2 = 0;
  for (const auto& c : coeffs) n2 += std::norm(c);
  if (n2 <= 0) throw InvalidPhotonCount("zero state has no Schmidt decomposition");
  // Squared singular values of the 2x2 coefficient matrix [[c0,c1],[c2,c3]].
  double det = std::abs(coeffs[0] * coeffs[3] - coeffs[1] * coeffs[2]) / n2;
  double disc = std::sqrt(std::max(0.0, 1.0 - 4.0 * det * det));
  double p = (1.0 + disc) / 2.0;
  double q = 1.0 - p;
  auto h = [](double v) { return v > 1e-300 ? -v * std::log2(v) : 0.0; };
  return h(p) + h(q);
}

/// F(x) = sum_{p in {x, 1-x}} -p^2 log2(p^2 / (x^2 + (1-x)^2)): the
/// entanglement entropy of |phi-> + (1-2x)|phi+> weighted by its norm.
inline double failure_entropy_term(double x) {
  double denom = x * x + (1.0 - x) * (1.0 - x);
  double acc = 0;
  for (double p : {x, 1.0 - x}) {
    double p2 = p * p;
    if (p2 > 1e-300) acc -= p2 * std::log2(p2 / denom);
  }
  return acc;
}

/// Relative entropy of entanglement of a rank-1 POVM:
/// (1/4) sum_x tr(M_x) E_s(M_x / tr(M_x)).
inline double relative_entropy_of_measurement(const BqiResult& bqi) {
  double acc = 0;
  for (const auto& [label, element] : bqi.povm) {
    (void)label;
    double trace = 0;
    for (std::size_t i = 0; i < 4; ++i) trace += element(i, i).real();
    if (trace < 1e-14) continue;

    // Dominant eigenvector by power iteration seeded with the column of
    // the largest diagonal entry (already the eigenvector when the element
    // is rank 1); the normalized element must be that projector.
    std::size_t seed = 0;
    for (std::size_t j = 1; j < 4; ++j) {
      if (element(j, j).real() > element(seed, seed).real()) seed = j;
    }
    Vec4 v{};
    for (std::size_t a = 0; a < 4; ++a) v[a] = element(a, seed);
    for (int iter = 0; iter < 16; ++iter) {
      Vec4 w{};
      for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) w[a] += element(a, b) * v[b];
      }
      double n = 0;
      for (const auto& c : w) n += std::norm(c);
      n = std::sqrt(n);
      if (n < 1e-300) break;
      for (auto& c : w) c /= n;
      v = w;
    }
    double residual = 0;
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = 0; b < 4; ++b) {
        residual = std::max(residual,
                            std::abs(element(a, b) / trace - v[a] * std::conj(v[b])));
      }
    }
    if (residual > 1e-8) {
      throw NotRankOne("POVM element deviates from rank 1 by " +
                       std::to_string(residual));
    }
    acc += trace * entanglement_entropy(v);
  }
  return acc / 4.0;
}

/// Closed-form E_m, cross-checked against the instrument route.
inline double entanglement_measure(std::size_t m) {
  if (m < 2) throw IndexOutOfRange("entanglement_measure requires m >= 2");
  auto mi = static_cast<int>(m);
  double sum = 0;
  for (int k = 0; k <= mi; ++k) {
    sum += static_cast<double>(binomial(mi, k)) *
           failure_entropy_term(static_cast<double>(k) / mi) /
           std::pow(2.0, mi - 1);
  }
  double closed = (3.0 - 1.0 / mi + sum) / 4.0;
  double via_instrument = relative_entropy_of_measurement(kraus_operators(m));
  if (std::abs(closed - via_instrument) > 1e-10) {
    throw InternalCheck("E_m closed form disagrees with the instrument route");
  }
  return closed;
}

struct SchemeFigures {
  std::size_t m;
  Rational p_exact;
  double p;
  double e;
  bool odd_extension;  // success probability extended beyond the even-m form
};

/// One row per m in [2, m_max]: exact and floating success probability
/// plus entanglement measure.
inline std::vector<SchemeFigures> figure3_table(std::size_t m_max) {
  if (m_max < 2 || m_max > 64) throw IndexOutOfRange("figure3_table needs 2 <= m_max <= 64");
  std::vector<SchemeFigures> rows;
  for (std::size_t m = 2; m <= m_max; ++m) {
    Rational exact = success_probability_exact(m);
    rows.push_back({m, exact, exact.to_double(), entanglement_measure(m), m % 2 != 0});
  }
  return rows;
}

}  // namespace bsf
