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
#include <cmath>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "bsf/cyclotomic.hpp"
#include "bsf/errors.hpp"
#include "bsf/fock.hpp"
#include "bsf/matrix.hpp"
#include "bsf/monomial.hpp"
#include "bsf/phase.hpp"
#include "bsf/state.hpp"

namespace bsf {

inline constexpr std::size_t kDefaultMaxGroupOrder = 4096;

class StabilizerGroup;
StabilizerGroup conjugate_group(const TransferMatrix& u, const StabilizerGroup& g,
                                double tol);

/// Finite group of unitary monomial matrices, closed over generator
/// products. Element 0 is the identity; the Cayley edges element*gen are
/// recorded so characters can be extended and verified in O(|G| * #gens).
class StabilizerGroup {
 public:
  static StabilizerGroup closure(std::vector<MonomialMatrix> generators,
                                 std::size_t max_order = kDefaultMaxGroupOrder) {
    if (generators.empty()) throw IndexOutOfRange("need at least one generator");
    std::size_t m = generators.front().dim();
    for (const auto& g : generators) {
      if (g.dim() != m) throw IndexOutOfRange("generators on different mode counts");
      if (!g.is_exact()) {
        throw InexactPhase("group closure requires rational-turn phases");
      }
    }

    StabilizerGroup grp;
    grp.modes_ = m;
    grp.generators_ = std::move(generators);
    grp.elements_.push_back(MonomialMatrix::identity(m));
    grp.discovery_.push_back({0, 0});
    std::map<MonomialMatrix, std::size_t> index;
    index.emplace(grp.elements_.front(), 0);

    for (std::size_t e = 0; e < grp.elements_.size(); ++e) {
      grp.right_mult_.emplace_back(grp.generators_.size(), 0);
      for (std::size_t gi = 0; gi < grp.generators_.size(); ++gi) {
        MonomialMatrix prod = grp.elements_[e] * grp.generators_[gi];
        auto [it, inserted] = index.emplace(prod, grp.elements_.size());
        if (inserted) {
          if (grp.elements_.size() >= max_order) {
            throw GroupTooLarge("group closure exceeds " + std::to_string(max_order) +
                                " elements");
          }
          grp.elements_.push_back(std::move(prod));
          grp.discovery_.push_back({e, gi});
        }
        grp.right_mult_[e][gi] = it->second;
      }
    }

    grp.abelian_ = true;
    for (std::size_t i = 0; i < grp.generators_.size() && grp.abelian_; ++i) {
      for (std::size_t j = i + 1; j < grp.generators_.size(); ++j) {
        if (!(grp.generators_[i] * grp.generators_[j] ==
              grp.generators_[j] * grp.generators_[i])) {
          grp.abelian_ = false;
          break;
        }
      }
    }
    return grp;
  }

  std::size_t modes() const { return modes_; }
  std::size_t order() const { return elements_.size(); }
  bool abelian() const { return abelian_; }
  const std::vector<MonomialMatrix>& elements() const { return elements_; }
  const std::vector<MonomialMatrix>& generators() const { return generators_; }

  bool contains(const MonomialMatrix& g) const {
    return std::find(elements_.begin(), elements_.end(), g) != elements_.end();
  }

  bool all_diagonal() const {
    return std::all_of(elements_.begin(), elements_.end(),
                       [](const MonomialMatrix& g) { return g.is_diagonal(); });
  }

  /// Multiplicative order of generator gi, walked along Cayley edges.
  std::size_t generator_order(std::size_t gi) const {
    std::size_t idx = right_mult_[0][gi];
    std::size_t order = 1;
    while (idx != 0) {
      idx = right_mult_[idx][gi];
      ++order;
    }
    return order;
  }

 private:
  friend StabilizerGroup conjugate_group(const TransferMatrix&, const StabilizerGroup&,
                                         double);
  friend class Character;

  StabilizerGroup() = default;

  std::size_t modes_ = 0;
  bool abelian_ = false;
  std::vector<MonomialMatrix> generators_;
  std::vector<MonomialMatrix> elements_;
  // discovery_[e] = (parent, generator) with elements_[e] = parent * gen.
  std::vector<std::pair<std::size_t, std::size_t>> discovery_;
  // right_mult_[e][gi] = index of elements_[e] * generators_[gi].
  std::vector<std::vector<std::size_t>> right_mult_;
};

inline StabilizerGroup group_closure(std::vector<MonomialMatrix> generators,
                                     std::size_t max_order = kDefaultMaxGroupOrder) {
  return StabilizerGroup::closure(std::move(generators), max_order);
}

/// A multiplicative eigenvalue assignment lambda on an Abelian group,
/// determined by its values on the generators and verified against every
/// Cayley relation of the closure.
class Character {
 public:
  Character(const StabilizerGroup& g, std::vector<ExactPhase> generator_values)
      : generator_values_(std::move(generator_values)) {
    if (!g.abelian()) {
      throw NonAbelianGroup("characters are defined for Abelian groups only");
    }
    if (generator_values_.size() != g.generators().size()) {
      throw IndexOutOfRange("one eigenvalue per generator required");
    }
    element_values_.resize(g.order());
    element_values_[0] = ExactPhase::one();
    for (std::size_t e = 1; e < g.order(); ++e) {
      auto [parent, gi] = g.discovery_[e];
      element_values_[e] = element_values_[parent] * generator_values_[gi];
    }
    for (std::size_t e = 0; e < g.order(); ++e) {
      for (std::size_t gi = 0; gi < g.generators().size(); ++gi) {
        std::size_t target = g.right_mult_[e][gi];
        if (!(element_values_[target] == element_values_[e] * generator_values_[gi])) {
          throw InconsistentCharacter(
              "generator eigenvalues violate a group relation");
        }
      }
    }
  }

  const std::vector<ExactPhase>& generator_values() const { return generator_values_; }
  const ExactPhase& value(std::size_t element_index) const {
    return element_values_[element_index];
  }
  std::size_t size() const { return element_values_.size(); }

  bool is_trivial() const {
    return std::all_of(generator_values_.begin(), generator_values_.end(),
                       [](const ExactPhase& p) { return p.is_one(); });
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < generator_values_.size(); ++i) {
      if (i) s += ", ";
      s += "lambda(g" + std::to_string(i) + ")=" + generator_values_[i].str();
    }
    return s;
  }

 private:
  std::vector<ExactPhase> generator_values_;
  std::vector<ExactPhase> element_values_;
};

inline Character character_from_generators(const StabilizerGroup& g,
                                           std::vector<ExactPhase> generator_values) {
  return Character(g, std::move(generator_values));
}

/// All characters of an Abelian group: every consistent assignment of a
/// d_i-th root of unity to generator i. Exactly |G| assignments survive.
inline std::vector<Character> enumerate_characters(const StabilizerGroup& g) {
  if (!g.abelian()) throw NonAbelianGroup("cannot enumerate characters");
  std::vector<std::size_t> orders(g.generators().size());
  std::size_t combos = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    orders[i] = g.generator_order(i);
    combos *= orders[i];
    if (combos > (std::size_t{1} << 22)) {
      throw GroupTooLarge("too many candidate characters");
    }
  }
  std::vector<Character> out;
  std::vector<std::size_t> pick(orders.size(), 0);
  for (;;) {
    std::vector<ExactPhase> values(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
      values[i] = ExactPhase(static_cast<std::int64_t>(pick[i]),
                             static_cast<std::int64_t>(orders[i]));
    }
    try {
      out.emplace_back(g, std::move(values));
    } catch (const InconsistentCharacter&) {
      // Redundant generators rule some assignments out; skip those.
    }
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == orders[i]) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  if (out.size() != g.order()) {
    throw InternalCheck("character count " + std::to_string(out.size()) +
                        " does not match group order");
  }
  return out;
}

/// ||rho_lambda^G |Psi>||^2 evaluated over the state's support:
/// (1/|G|) sum_g lambda(g)^{-1} sum_n conj(c_{sigma_g^{-1}(n)}) c_n
/// prod_i D(g)_ii^{n_i}. Cost |G| * |support|, never basis-sized.
inline double projector_norm(const StabilizerGroup& g, const Character& chi,
                             const StateVector& state) {
  if (!g.abelian()) throw NonAbelianGroup("projector norms need an Abelian group");
  if (state.modes() != g.modes()) {
    throw PhotonNumberMismatch("state mode count must match the group");
  }
  Complex total{};
  for (std::size_t e = 0; e < g.order(); ++e) {
    Complex inner{};
    for (const auto& [n, c] : state.entries()) {
      auto [mapped, phase] = apply_monomial(g.elements()[e], n);
      Complex other = state.amplitude(mapped);
      if (other == Complex{}) continue;
      inner += std::conj(other) * c * phase.value();
    }
    total += chi.value(e).inverse().value() * inner;
  }
  double value = total.real() / static_cast<double>(g.order());
  return std::max(0.0, value);
}

/// rho_lambda^G |Psi> applied on the sparse support.
inline StateVector apply_projector(const StabilizerGroup& g, const Character& chi,
                                   const StateVector& state) {
  if (!g.abelian()) throw NonAbelianGroup("projectors need an Abelian group");
  std::vector<StateVector::Entry> entries;
  entries.reserve(state.support_size() * g.order());
  double scale = 1.0 / static_cast<double>(g.order());
  for (std::size_t e = 0; e < g.order(); ++e) {
    Complex w = chi.value(e).inverse().value() * scale;
    for (const auto& [n, c] : state.entries()) {
      auto [mapped, phase] = apply_monomial(g.elements()[e], n);
      entries.emplace_back(mapped, w * phase.value() * c);
    }
  }
  StateVector result(state.modes(), std::move(entries));
  // Scrub numerically-zero residue left by exact cancellations.
  std::vector<StateVector::Entry> cleaned;
  for (const auto& [n, c] : result.entries()) {
    if (std::abs(c) > 1e-13) cleaned.emplace_back(n, c);
  }
  return StateVector(state.modes(), std::move(cleaned));
}

/// G' = U G U^dag with the element correspondence preserved by position:
/// conjugation is an isomorphism, so the Cayley structure carries over and
/// characters transport unchanged (lambda'(U g U^dag) = lambda(g)).
inline StabilizerGroup conjugate_group(const TransferMatrix& u,
                                       const StabilizerGroup& g, double tol = 1e-9) {
  if (u.dim() != g.modes()) {
    throw PhotonNumberMismatch("circuit mode count must match the group");
  }
  auto conj_one = [&](const MonomialMatrix& el) {
    Matrix m = u.matrix() * el.to_transfer().matrix() * u.matrix().dagger();
    MonomialMatrix c =
        monomial_from_matrix(TransferMatrix(std::move(m), 1e-7), tol);
    if (!c.is_exact()) {
      throw InexactPhase("conjugated element has phases off the rational grid");
    }
    return c;
  };
  StabilizerGroup out;
  out.modes_ = g.modes_;
  out.abelian_ = g.abelian_;
  out.discovery_ = g.discovery_;
  out.right_mult_ = g.right_mult_;
  out.generators_.reserve(g.generators_.size());
  for (const auto& gen : g.generators_) out.generators_.push_back(conj_one(gen));
  out.elements_.reserve(g.elements_.size());
  for (const auto& el : g.elements_) out.elements_.push_back(conj_one(el));
  return out;
}

struct OrbitSet {
  FockState representative;
  std::vector<FockState> members;  // sorted, unique
};

/// O_n = { sigma_g(n) | g in G }.
inline OrbitSet orbit(const StabilizerGroup& g, const FockState& n) {
  std::set<FockState> members;
  for (const auto& el : g.elements()) members.insert(permute_state(el, n));
  return {n, {members.begin(), members.end()}};
}

/// Measurement outcomes suppressed by destructive interference: basis
/// states n with (1/|G|) sum_g lambda'(g)^{-1} prod_i [B(g)]_ii^{n_i} = 0.
/// The sum is tested exactly as a vanishing sum of roots of unity whenever
/// every term is a rational turn, with a 1e-12 floating fallback.
inline std::vector<FockState> suppressed_outcomes(const StabilizerGroup& diag_group,
                                                  const Character& chi,
                                                  const FockBasis& basis) {
  if (!diag_group.all_diagonal()) {
    throw NotDiagonalGroup("suppression condition needs a diagonal group");
  }
  if (basis.modes() != diag_group.modes()) {
    throw PhotonNumberMismatch("basis mode count must match the group");
  }
  std::vector<FockState> suppressed;
  for (const auto& n : basis.states()) {
    std::vector<ExactPhase> terms;
    terms.reserve(diag_group.order());
    bool exact = true;
    Complex approx{};
    for (std::size_t e = 0; e < diag_group.order(); ++e) {
      auto [mapped, phase] = apply_monomial(diag_group.elements()[e], n);
      Phase term = Phase(chi.value(e).inverse()) * phase;
      approx += term.value();
      if (exact && term.is_exact()) {
        terms.push_back(term.turns());
      } else {
        exact = false;
      }
    }
    bool zero = exact ? root_of_unity_sum_is_zero(terms)
                      : std::abs(approx) / static_cast<double>(diag_group.order()) <
                            1e-12;
    if (zero) suppressed.push_back(n);
  }
  return suppressed;
}

struct MeasurementOutcome {
  Character character;
  double probability;
};

/// Measurement of an Abelian group G realized by the circuit u followed
/// by photon-number detection; u must diagonalize G. The probability of
/// reading lambda is ||rho_lambda^G |Psi>||^2 on the *input* state.
inline std::vector<MeasurementOutcome> measure_stabilizers(const StabilizerGroup& g,
                                                           const TransferMatrix& u,
                                                           const StateVector& state) {
  if (!g.abelian()) throw NonAbelianGroup("measurement needs an Abelian group");
  StabilizerGroup conj = conjugate_group(u, g);
  if (!conj.all_diagonal()) {
    throw NotDiagonalGroup("circuit does not diagonalize the group");
  }
  std::vector<MeasurementOutcome> out;
  double total = 0;
  for (auto& chi : enumerate_characters(g)) {
    double p = projector_norm(g, chi, state);
    total += p;
    out.push_back({std::move(chi), p});
  }
  if (std::abs(total - 1.0) > 1e-8) {
    throw InternalCheck("measurement probabilities sum to " + std::to_string(total));
  }
  return out;
}

/// Joint-eigenspace weight of a phase-kicked Dicke state under the cyclic
/// shift group: ||rho_1^C P_0(theta) |D^m_k>||^2. Evaluates the closed
/// form |((m-k) + e^{i theta} k) / m|^2 and cross-checks it against the
/// direct projector computation to 1e-10.
inline double transitive_phase_projection(std::size_t m, int k, double theta) {
  if (m < 1 || k < 0 || k > static_cast<int>(m)) {
    throw IndexOutOfRange("transitive_phase_projection needs 0 <= k <= m");
  }
  Complex numer = static_cast<double>(static_cast<int>(m) - k) +
                  std::polar(1.0, theta) * static_cast<double>(k);
  double closed = std::norm(numer / static_cast<double>(m));

  // Dicke state over single-photon site occupations, with the theta kick
  // on site 0.
  std::vector<StateVector::Entry> entries;
  std::vector<int> occ(m, 0);
  double amp = 1.0 / std::sqrt(static_cast<double>(binomial(static_cast<int>(m), k)));
  std::vector<std::size_t> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    std::fill(occ.begin(), occ.end(), 0);
    for (int i = 0; i < k; ++i) occ[idx[i]] = 1;
    Complex a = amp;
    if (!occ.empty() && occ[0] == 1) a *= std::polar(1.0, theta);
    entries.emplace_back(FockState(occ), a);
    // next k-combination of [0, m)
    int i = k - 1;
    while (i >= 0 && idx[i] == m - static_cast<std::size_t>(k - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  StateVector state(m, std::move(entries));
  StabilizerGroup cyclic = group_closure({pauli_x(m)});
  Character trivial(cyclic, {ExactPhase::one()});
  double direct = projector_norm(cyclic, trivial, state);
  if (std::abs(direct - closed) > 1e-10) {
    throw InternalCheck("transitive projection mismatch: closed=" +
                        std::to_string(closed) + " direct=" + std::to_string(direct));
  }
  return closed;
}

}  // namespace bsf
