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
using bsf::testing::random_monomial;
using bsf::testing::random_unitary;

TEST_CASE("monomial extraction recovers clock and shift") {
  TransferMatrix f2 = fourier_matrix(2);
  Matrix conj = f2.matrix() * pauli_x(2).to_transfer().matrix() * f2.matrix().dagger();
  MonomialMatrix z = monomial_from_matrix(TransferMatrix(conj, 1e-8));
  CHECK(z.is_diagonal());
  CHECK(z.phases()[0].turns().is_one());
  CHECK(z.phases()[1].turns() == ExactPhase(1, 2));

  MonomialMatrix x3 = monomial_from_matrix(pauli_x(3).to_transfer());
  CHECK(x3.perm() == std::vector<std::size_t>{1, 2, 0});
  for (const auto& p : x3.phases()) CHECK(p.turns().is_one());

  CHECK_THROWS_AS(monomial_from_matrix(fourier_matrix(2)), NotMonomial);
}

TEST_CASE("monomial extraction keeps off-grid phases inexact") {
  Matrix m = Matrix::identity(2);
  m(0, 0) = std::polar(1.0, 0.77);
  MonomialMatrix g = monomial_from_matrix(TransferMatrix(m));
  CHECK(!g.is_exact());
  CHECK(std::abs(g.phases()[0].value() - std::polar(1.0, 0.77)) < 1e-12);
  CHECK_THROWS_AS(group_closure({g}), InexactPhase);
}

TEST_CASE("monomial action on Fock states") {
  auto [swapped, ph1] = apply_monomial(pauli_x(2), FockState({2, 0}));
  CHECK(swapped == FockState({0, 2}));
  CHECK(ph1.turns().is_one());

  auto [same, ph2] = apply_monomial(pauli_z(2), FockState({1, 1}));
  CHECK(same == FockState({1, 1}));
  CHECK(ph2.turns() == ExactPhase(1, 2));

  // Z_4 on (0,1,2,0): omega^{1*1 + 2*2} = omega^5 = i.
  auto [fixed, ph3] = apply_monomial(pauli_z(4), FockState({0, 1, 2, 0}));
  CHECK(fixed == FockState({0, 1, 2, 0}));
  CHECK(ph3.turns() == ExactPhase(1, 4));

  // X_4 rotates occupations one mode forward.
  auto [rot, ph4] = apply_monomial(pauli_x(4), FockState({3, 1, 0, 0}));
  CHECK(rot == FockState({0, 3, 1, 0}));
  CHECK(ph4.turns().is_one());
}

TEST_CASE("monomial algebra: products, inverses, transfer round-trip") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t m = 2 + trial % 4;
    MonomialMatrix a = random_monomial(m, rng);
    MonomialMatrix b = random_monomial(m, rng);
    CHECK((a * a.inverse()).is_identity());

    Matrix direct = a.to_transfer().matrix() * b.to_transfer().matrix();
    CHECK(direct.max_abs_diff((a * b).to_transfer().matrix()) < 1e-12);

    MonomialMatrix back = monomial_from_matrix(a.to_transfer());
    CHECK(back == a);
  }
}

TEST_CASE("monomial fast path equals the permanent amplitude") {
  std::mt19937 rng(73);
  for (std::size_t m = 2; m <= 4; ++m) {
    for (int n = 1; n <= 3; ++n) {
      FockBasis basis(m, n);
      for (int trial = 0; trial < 6; ++trial) {
        MonomialMatrix g = random_monomial(m, rng);
        TransferMatrix t = g.to_transfer();
        for (const auto& state : basis.states()) {
          auto [mapped, phase] = apply_monomial(g, state);
          for (const auto& out : basis.states()) {
            Complex via_permanent = boson_amplitude(t, out, state);
            Complex via_monomial = (out == mapped) ? phase.value() : Complex{};
            CHECK(std::abs(via_permanent - via_monomial) < 1e-10);
          }
        }
      }
    }
  }
}

TEST_CASE("group closure of a shift is cyclic") {
  StabilizerGroup g = group_closure({pauli_x(2)});
  CHECK(g.order() == 2);
  CHECK(g.abelian());
  CHECK(g.contains(MonomialMatrix::identity(2)));
  CHECK(g.contains(pauli_x(2)));
  CHECK(g.generator_order(0) == 2);
}

TEST_CASE("closure of the paired scheme group has order 2m") {
  for (std::size_t m = 2; m <= 6; ++m) {
    MonomialMatrix z2_i = tensor(pauli_z(2), MonomialMatrix::identity(m));
    MonomialMatrix i2_x = tensor(MonomialMatrix::identity(2), pauli_x(m));
    StabilizerGroup g = group_closure({z2_i, i2_x});
    CHECK(g.order() == 2 * m);
    CHECK(g.abelian());
  }
}

TEST_CASE("closure of X2, Z2 is the order-8 non-Abelian group") {
  StabilizerGroup g = group_closure({pauli_x(2), pauli_z(2)});
  CHECK(g.order() == 8);
  CHECK(!g.abelian());
  // +-1 phases on {I, X, Z, XZ}: every element squared is diagonal.
  MonomialMatrix minus_identity(
      {0, 1}, {Phase(ExactPhase(1, 2)), Phase(ExactPhase(1, 2))});
  CHECK(g.contains(minus_identity));
}

TEST_CASE("group closure guards its size") {
  CHECK_THROWS_AS(group_closure({pauli_x(5), pauli_z(5)}, 16), GroupTooLarge);
}

TEST_CASE("monomial tensor matches the dense tensor") {
  std::mt19937 rng(79);
  MonomialMatrix a = random_monomial(2, rng);
  MonomialMatrix b = random_monomial(3, rng);
  CHECK(tensor(a, b).to_transfer().matrix().max_abs_diff(
            tensor(a.to_transfer(), b.to_transfer()).matrix()) < 1e-12);
  CHECK(direct_sum(a, b).to_transfer().matrix().max_abs_diff(
            direct_sum(a.to_transfer(), b.to_transfer()).matrix()) < 1e-12);
}
