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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace bsf;

namespace {

Vec4 normalized(Vec4 v) {
  double n = 0;
  for (const auto& c : v) n += std::norm(c);
  n = std::sqrt(n);
  for (auto& c : v) c /= n;
  return v;
}

BqiResult projective_measurement(const std::vector<Vec4>& states) {
  BqiResult r;
  r.m = 2;
  int k = 0;
  for (const auto& v : states) {
    Vec4 bra;
    for (std::size_t i = 0; i < 4; ++i) bra[i] = std::conj(v[i]);
    r.povm.push_back({{OutcomeLabel::Kind::failure, k++}, outer_from_row(bra)});
  }
  return r;
}

}  // namespace

TEST_CASE("bell states in dual-rail Fock form") {
  StateVector psi = bell_state(BellKind::psi_plus);
  CHECK(std::abs(psi.amplitude(FockState({1, 0, 0, 1})) - 1 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(psi.amplitude(FockState({0, 1, 1, 0})) - 1 / std::sqrt(2.0)) < 1e-15);

  StateVector phi = bell_state(BellKind::phi_minus);
  CHECK(std::abs(phi.amplitude(FockState({1, 0, 1, 0})) - 1 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(phi.amplitude(FockState({0, 1, 0, 1})) + 1 / std::sqrt(2.0)) < 1e-15);

  // orthogonality
  Complex overlap{};
  for (const auto& [state, amp] : psi.entries()) {
    overlap += std::conj(phi.amplitude(state)) * amp;
  }
  CHECK(std::abs(overlap) < 1e-15);
}

TEST_CASE("circuit dimensions and the preparation layer") {
  CHECK(build_circuit(2).dim() == 8);
  CHECK(build_circuit(3).dim() == 12);
  CHECK(build_circuit(2).matrix().unitarity_defect() < 1e-9);
  CHECK_THROWS_AS(build_circuit(1), IndexOutOfRange);

  // Layer 1 alone, built with the same embeds as build_circuit.
  std::size_t m = 2;
  DualRailLayout layout{m};
  std::size_t total = layout.total_modes();
  TransferMatrix f2 = fourier_matrix(2);
  TransferMatrix layer1 = embed(f2, {layout.mode(0, 0), layout.mode(2, 0)}, total) *
                          embed(f2, {layout.mode(1, 0), layout.mode(3, 0)}, total);
  for (std::size_t h = 0; h < 2; ++h) {
    for (std::size_t j = 1; j < m; ++j) {
      layer1 = embed(f2, {layout.mode(2 * h, j), layout.mode(2 * h + 1, j)}, total) *
               layer1;
    }
  }

  auto with_ancillas = [&](BellKind kind) {
    std::vector<std::pair<StateVector, std::vector<std::size_t>>> factors;
    factors.emplace_back(bell_state(kind),
                         std::vector<std::size_t>{layout.mode(0, 0), layout.mode(1, 0),
                                                  layout.mode(2, 0), layout.mode(3, 0)});
    for (std::size_t c = 0; c < 4; ++c) {
      for (std::size_t j = 1; j < m; ++j) {
        factors.emplace_back(StateVector::basis_state(FockState({1})),
                             std::vector<std::size_t>{layout.mode(c, j)});
      }
    }
    return product_state(total, factors);
  };

  // Half 0 spans rail groups 0 and 1, i.e. modes [0, 2m).
  auto half0_count = [&](const FockState& s) {
    int acc = 0;
    for (std::size_t mode = 0; mode < 2 * m; ++mode) acc += s[mode];
    return acc;
  };
  // psi- anti-bunches: one input photon per half, so halves stay odd.
  StateVector psi_out = evolve(with_ancillas(BellKind::psi_minus), layer1);
  for (const auto& [state, amp] : psi_out.entries()) {
    (void)amp;
    CHECK(half0_count(state) == 3);
  }
  // phi+ bunches: some half holds both input photons.
  StateVector phi_out = evolve(with_ancillas(BellKind::phi_plus), layer1);
  for (const auto& [state, amp] : phi_out.entries()) {
    (void)amp;
    int half0 = half0_count(state);
    CHECK((half0 == 4 || half0 == 2));
  }
  // An ancilla pair |11> leaves layer 1 as beta- on its own two modes.
  StateVector pair_out = evolve(
      product_state(total, {{alpha_state(), {layout.mode(0, 1), layout.mode(1, 1)}}}),
      layer1);
  REQUIRE(pair_out.support_size() == 2);
  std::vector<int> up(total, 0), down(total, 0);
  up[layout.mode(0, 1)] = 2;
  down[layout.mode(1, 1)] = 2;
  CHECK(std::abs(pair_out.amplitude(FockState(up)) - 1 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(pair_out.amplitude(FockState(down)) + 1 / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("classification follows the detected photon pattern") {
  // m = 3, five photons in each half: odd halves mean psi-.
  CHECK(classify_outcome(3, FockState({1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1, 0})).kind ==
        OutcomeLabel::Kind::psi_minus);

  // m = 2: heavy half 0 with odd rail-1 count identifies psi+.
  CHECK(classify_outcome(2, FockState({2, 1, 1, 0, 1, 0, 1, 0})).kind ==
        OutcomeLabel::Kind::psi_plus);

  // Even rail-1 count and a nonzero transported eigenvalue: phi+.
  CHECK(classify_outcome(2, FockState({1, 1, 2, 0, 1, 0, 1, 0})).kind ==
        OutcomeLabel::Kind::phi_plus);

  // t = 0 with rail-1 count 2k: failure class k.
  OutcomeLabel fail = classify_outcome(2, FockState({2, 0, 0, 2, 1, 0, 1, 0}));
  CHECK(fail.kind == OutcomeLabel::Kind::failure);
  CHECK(fail.k == 1);

  CHECK_THROWS_AS(classify_outcome(2, FockState({1, 0, 0, 0, 0, 0, 0, 0})),
                  InvalidPhotonCount);
}

TEST_CASE("closed-form Kraus operators") {
  BqiResult r2 = kraus_operators(2);
  REQUIRE(r2.kraus.size() == 6);  // psi+, psi-, phi+ and K_0..K_2
  CHECK(r2.completeness_defect < 1e-12);

  // K_1 at m = 2 is exactly the phi- projection scaled by 1/sqrt(2).
  const KrausOperator* k1 = nullptr;
  for (const auto& op : r2.kraus) {
    if (op.label.kind == OutcomeLabel::Kind::failure && op.label.k == 1) k1 = &op;
  }
  REQUIRE(k1 != nullptr);
  CHECK(std::abs(k1->row[0] - 0.5) < 1e-12);
  CHECK(std::abs(k1->row[1]) < 1e-12);
  CHECK(std::abs(k1->row[2]) < 1e-12);
  CHECK(std::abs(k1->row[3] + 0.5) < 1e-12);

  for (std::size_t m = 2; m <= 12; ++m) {
    CHECK(kraus_operators(m).completeness_defect < 1e-12);
  }

  // sum_k ||K_k |phi->||^2 = sum_k C(m,k)/2^m = 1.
  for (std::size_t m : {2ul, 5ul, 8ul}) {
    BqiResult r = kraus_operators(m);
    Vec4 phi_m = bell_coefficients(BellKind::phi_minus);
    double total = 0;
    for (const auto& op : r.kraus) {
      if (op.label.kind != OutcomeLabel::Kind::failure) continue;
      Complex amp{};
      for (std::size_t i = 0; i < 4; ++i) amp += op.row[i] * phi_m[i];
      total += std::norm(amp);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("two-qubit entanglement entropy") {
  CHECK(entanglement_entropy(bell_coefficients(BellKind::phi_plus)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(entanglement_entropy({1, 0, 0, 0}) == doctest::Approx(0.0));

  // Normalized K_k state: entropy F(x) / (x^2 + (1-x)^2) with x = k/m.
  for (std::size_t m : {2ul, 4ul, 7ul}) {
    for (int k = 0; k <= static_cast<int>(m); ++k) {
      double x = static_cast<double>(k) / static_cast<double>(m);
      double r = 1.0 - 2.0 * x;
      Vec4 phi_p = bell_coefficients(BellKind::phi_plus);
      Vec4 phi_m = bell_coefficients(BellKind::phi_minus);
      Vec4 state;
      for (std::size_t i = 0; i < 4; ++i) state[i] = phi_m[i] + r * phi_p[i];
      double expected = failure_entropy_term(x) / (x * x + (1 - x) * (1 - x));
      CHECK(entanglement_entropy(normalized(state)) ==
            doctest::Approx(expected).epsilon(1e-10));
    }
  }
}

TEST_CASE("relative entropy of simple measurements") {
  BqiResult bell_basis = projective_measurement(
      {bell_coefficients(BellKind::psi_plus), bell_coefficients(BellKind::psi_minus),
       bell_coefficients(BellKind::phi_plus), bell_coefficients(BellKind::phi_minus)});
  CHECK(relative_entropy_of_measurement(bell_basis) == doctest::Approx(1.0));

  BqiResult computational = projective_measurement(
      {Vec4{1, 0, 0, 0}, Vec4{0, 1, 0, 0}, Vec4{0, 0, 1, 0}, Vec4{0, 0, 0, 1}});
  CHECK(relative_entropy_of_measurement(computational) == doctest::Approx(0.0));

  CHECK(relative_entropy_of_measurement(kraus_operators(2)) ==
        doctest::Approx(0.75).epsilon(1e-12));

  BqiResult mixed;
  mixed.m = 2;
  mixed.povm.push_back({{OutcomeLabel::Kind::failure, 0},
                        Matrix::identity(4).scaled(0.5)});
  CHECK_THROWS_AS(relative_entropy_of_measurement(mixed), NotRankOne);
}

TEST_CASE("success probability closed forms") {
  CHECK(success_probability_exact(8) == Rational(403, 512));
  CHECK(success_probability(8) == doctest::Approx(0.787109375).epsilon(1e-15));
  CHECK(success_probability_exact(2) == Rational(3, 4));
  CHECK(success_probability_exact(3) == Rational(2, 3));

  // Even-m values approach 3/4 from above like sqrt(2/(pi m))/4; at m = 64
  // the central binomial term still contributes ~0.025.
  double p64 = success_probability(64);
  CHECK(p64 > 0.75);
  CHECK(p64 < success_probability(8));
  CHECK(std::abs(p64 - 0.75) < 0.03);
  double independent =
      (3.0 - 1.0 / 64.0 +
       1832624140942590534.0 / 18446744073709551616.0) / 4.0;
  CHECK(p64 == doctest::Approx(independent).epsilon(1e-14));
}

TEST_CASE("entanglement measure matches the instrument and grows with m") {
  CHECK(entanglement_measure(2) == doctest::Approx(0.75).epsilon(1e-12));
  double prev = 0;
  for (std::size_t m = 2; m <= 12; ++m) {
    double e = entanglement_measure(m);
    CHECK(e > prev);
    prev = e;
  }
  CHECK(entanglement_measure(64) > 0.97);
}

TEST_CASE("figure table reproduces the headline numbers") {
  auto rows = figure3_table(44);
  const SchemeFigures* at8 = nullptr;
  double best_even = 0;
  std::size_t best_even_m = 0;
  for (const auto& row : rows) {
    if (row.m == 8) at8 = &row;
    if (row.m % 2 == 0 && row.p > best_even) {
      best_even = row.p;
      best_even_m = row.m;
    }
    if (row.m % 2 == 0) {
      CHECK(row.p > 0.74);
      CHECK(row.p < 0.79);
    }
    CHECK(row.e > 0.74);
    CHECK(row.e < 1.0);
  }
  REQUIRE(at8 != nullptr);
  CHECK(at8->p_exact == Rational(403, 512));
  CHECK(best_even_m == 8);

  CHECK_THROWS_AS(figure3_table(1), IndexOutOfRange);
  CHECK_THROWS_AS(figure3_table(65), IndexOutOfRange);
}

TEST_CASE("dicke states in the two-photon copy encoding") {
  StateVector d0 = dicke_state(2, 0);
  REQUIRE(d0.support_size() == 1);
  CHECK(std::abs(d0.amplitude(FockState({2, 0, 2, 0})) - 1.0) < 1e-15);

  StateVector d1 = dicke_state(2, 1);
  REQUIRE(d1.support_size() == 2);
  CHECK(std::abs(d1.amplitude(FockState({2, 0, 0, 2})) + 1 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(d1.amplitude(FockState({0, 2, 2, 0})) + 1 / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("the beta product expands over phase-kicked Dicke states") {
  for (std::size_t m : {2ul, 3ul}) {
    std::vector<int> signs(m, -1);
    signs[0] = +1;
    StateVector lhs = beta_product(m, signs, false);

    std::vector<StateVector::Entry> entries;
    for (int k = 0; k <= static_cast<int>(m); ++k) {
      double weight = std::sqrt(static_cast<double>(binomial(static_cast<int>(m), k))) /
                      std::pow(2.0, static_cast<double>(m) / 2.0);
      StateVector dicke = dicke_state(m, k);
      for (const auto& [state, amp] : dicke.entries()) {
        double kick = state[1] == 2 ? -1.0 : 1.0;  // P_0(pi) on copy 0
        entries.emplace_back(state, amp * weight * kick);
      }
    }
    StateVector rhs(2 * m, std::move(entries));

    REQUIRE(lhs.support_size() == rhs.support_size());
    for (const auto& [state, amp] : lhs.entries()) {
      CHECK(std::abs(amp - rhs.amplitude(state)) < 1e-9);
    }
  }
}

TEST_CASE("brute-force reconstruction matches the closed form at m = 2") {
  BqiResult closed = kraus_operators(2);
  BqiResult brute = reconstruct_povm(2);

  CHECK(brute.completeness_defect < 1e-8);
  CHECK(brute.max_rank1_residual < 1e-8);

  for (const auto& el : closed.povm) {
    const Matrix* other = brute.find(el.label);
    REQUIRE(other != nullptr);
    CHECK(el.element.max_abs_diff(*other) < 1e-8);
  }
  CHECK(closed.povm.size() == brute.povm.size());

  for (BellKind b : {BellKind::psi_plus, BellKind::psi_minus, BellKind::phi_plus,
                     BellKind::phi_minus}) {
    CHECK(std::abs(closed.bell_success.at(b) - brute.bell_success.at(b)) < 1e-8);
  }

  // psi- identification is error-free.
  CHECK(brute.bell_success.at(BellKind::psi_minus) == doctest::Approx(1.0).epsilon(1e-9));
  const Matrix* psi_minus_el = brute.find({OutcomeLabel::Kind::psi_minus});
  REQUIRE(psi_minus_el != nullptr);
  for (BellKind b : {BellKind::psi_plus, BellKind::phi_plus, BellKind::phi_minus}) {
    CHECK(expectation(*psi_minus_el, bell_coefficients(b)) < 1e-9);
  }

  // Completeness per Bell input: class probabilities sum to one.
  for (BellKind b : {BellKind::psi_plus, BellKind::psi_minus, BellKind::phi_plus,
                     BellKind::phi_minus}) {
    double total = 0;
    for (const auto& el : brute.povm) total += expectation(el.element, bell_coefficients(b));
    CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
  }

  CHECK_THROWS_AS(reconstruct_povm(4), SizeLimit);
}
