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
using bsf::testing::naive_permanent;
using bsf::testing::random_complex_matrix;
using bsf::testing::random_unitary;

TEST_CASE("permanent of fixed small matrices") {
  CHECK(permanent(Matrix::identity(2)) == Complex{1.0, 0.0});

  Matrix ones(2, 2);
  ones(0, 0) = ones(0, 1) = ones(1, 0) = ones(1, 1) = 1.0;
  CHECK(permanent(ones) == Complex{2.0, 0.0});

  Matrix hadamard_like(2, 2);
  hadamard_like(0, 0) = hadamard_like(0, 1) = hadamard_like(1, 0) = 1.0;
  hadamard_like(1, 1) = -1.0;
  CHECK(std::abs(permanent(hadamard_like)) < 1e-15);

  CHECK(permanent(Matrix(0, 0)) == Complex{1.0, 0.0});
}

TEST_CASE("permanent rejects bad shapes and runaway sizes") {
  CHECK_THROWS_AS(permanent(Matrix(2, 3)), NonSquareMatrix);
  CHECK_THROWS_AS(permanent(Matrix(31, 31)), SizeLimit);
}

TEST_CASE("permanent agrees with the naive k!-term expansion") {
  std::mt19937 rng(123);
  for (std::size_t k = 1; k <= 6; ++k) {
    for (int trial = 0; trial < 20; ++trial) {
      Matrix m = random_complex_matrix(k, rng);
      CHECK(std::abs(permanent(m) - naive_permanent(m)) < 1e-10);
    }
  }
}

TEST_CASE("expanded permanent kernel matches the materialized matrix") {
  std::mt19937 rng(321);
  std::uniform_int_distribution<int> occ(0, 2);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t m = 2 + trial % 2;
    Matrix s = random_unitary(m, rng).matrix();
    std::vector<int> row(m), col(m);
    int total = 0;
    for (auto& v : row) {
      v = occ(rng);
      total += v;
    }
    int left = total;
    for (std::size_t j = 0; j + 1 < m; ++j) {
      std::uniform_int_distribution<int> part(0, left);
      col[j] = part(rng);
      left -= col[j];
    }
    col[m - 1] = left;

    Matrix expanded(static_cast<std::size_t>(total), static_cast<std::size_t>(total));
    std::size_t r = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (int a = 0; a < row[i]; ++a, ++r) {
        std::size_t c = 0;
        for (std::size_t j = 0; j < m; ++j) {
          for (int b = 0; b < col[j]; ++b, ++c) expanded(r, c) = s(i, j);
        }
      }
    }
    CHECK(std::abs(permanent_expanded(s, row, col) - naive_permanent(expanded)) <
          1e-10);
  }
}

TEST_CASE("fourier matrices are unitary and diagonalize the shift") {
  for (std::size_t d = 1; d <= 16; ++d) {
    CHECK(fourier_matrix(d).matrix().unitarity_defect() < 1e-12);
    CHECK(pauli_x(d).to_transfer().matrix().unitarity_defect() < 1e-12);
    CHECK(pauli_z(d).to_transfer().matrix().unitarity_defect() < 1e-12);
  }

  CHECK(fourier_matrix(1)(0, 0) == Complex{1.0, 0.0});

  TransferMatrix f2 = fourier_matrix(2);
  double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(f2(0, 0) - r) < 1e-15);
  CHECK(std::abs(f2(0, 1) - r) < 1e-15);
  CHECK(std::abs(f2(1, 0) - r) < 1e-15);
  CHECK(std::abs(f2(1, 1) + r) < 1e-15);

  // F_d X_d F_d^dag = Z_d
  for (std::size_t d = 2; d <= 8; ++d) {
    TransferMatrix f = fourier_matrix(d);
    Matrix lhs = f.matrix() * pauli_x(d).to_transfer().matrix() * f.matrix().dagger();
    CHECK(lhs.max_abs_diff(pauli_z(d).to_transfer().matrix()) < 1e-12);
  }
}

TEST_CASE("pauli constructors behave like shift and clock") {
  CHECK(pauli_x(2).perm()[0] == 1);
  CHECK(pauli_z(2).to_transfer()(0, 0) == Complex{1.0, 0.0});
  CHECK(pauli_z(2).to_transfer()(1, 1) == Complex{-1.0, 0.0});

  MonomialMatrix x4 = pauli_x(4), z4 = pauli_z(4);
  CHECK((x4 * x4 * x4 * x4).is_identity());
  CHECK((z4 * z4 * z4 * z4).is_identity());
  CHECK(!(x4 * x4).is_identity());
}

TEST_CASE("tensor, direct sum and embed compose as expected") {
  TransferMatrix f2 = fourier_matrix(2);
  TransferMatrix i2 = TransferMatrix::identity(2);

  Matrix t = tensor(i2, f2).matrix();
  CHECK(t.max_abs_diff(direct_sum(f2, f2).matrix()) < 1e-15);

  Matrix ds = direct_sum(f2, i2).matrix();
  CHECK(ds.rows() == 4);
  CHECK(std::abs(ds(0, 0) - f2(0, 0)) < 1e-15);
  CHECK(std::abs(ds(2, 2) - 1.0) < 1e-15);
  CHECK(std::abs(ds(2, 3)) < 1e-15);

  TransferMatrix e = embed(f2, {0, 2}, 3);
  CHECK(std::abs(e(1, 1) - 1.0) < 1e-15);
  CHECK(std::abs(e(0, 2) - f2(0, 1)) < 1e-15);
  CHECK(std::abs(e(2, 0) - f2(1, 0)) < 1e-15);
  CHECK(std::abs(e(0, 1)) < 1e-15);

  CHECK_THROWS_AS(embed(f2, {0, 3}, 3), IndexOutOfRange);
  CHECK_THROWS_AS(embed(f2, {1, 1}, 3), DuplicateMode);
  CHECK_THROWS_AS(embed(f2, {0}, 3), IndexOutOfRange);
}

TEST_CASE("compositions preserve unitarity for random unitaries") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    TransferMatrix a = random_unitary(2 + trial % 2, rng);
    TransferMatrix b = random_unitary(2, rng);
    CHECK(tensor(a, b).matrix().unitarity_defect() < 1e-12);
    CHECK(direct_sum(a, b).matrix().unitarity_defect() < 1e-12);
    CHECK(embed(b, {1, 3}, 5).matrix().unitarity_defect() < 1e-12);
  }
}

TEST_CASE("transfer matrices reject non-unitary input") {
  Matrix bad = Matrix::identity(2);
  bad(0, 0) = 1.5;
  CHECK_THROWS_AS(TransferMatrix{bad}, NotUnitary);
  CHECK_THROWS_AS(TransferMatrix{Matrix(2, 3)}, NonSquareMatrix);
}
