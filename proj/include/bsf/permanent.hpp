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

#include <bit>
#include <cstdint>
#include <vector>

#include "bsf/errors.hpp"
#include "bsf/matrix.hpp"

namespace bsf {

inline constexpr std::size_t kPermanentSizeLimit = 30;

/// Matrix permanent by Ryser's formula with Gray-code subset iteration,
/// O(2^k * k) arithmetic. Per of the empty matrix is 1.
inline Complex permanent(const Matrix& m) {
  if (!m.is_square()) throw NonSquareMatrix("permanent requires a square matrix");
  std::size_t k = m.rows();
  if (k == 0) return {1.0, 0.0};
  if (k > kPermanentSizeLimit) {
    throw SizeLimit("permanent limited to 30x30 matrices");
  }

  std::vector<Complex> row_sums(k, Complex{0.0, 0.0});
  Complex total{0.0, 0.0};
  std::uint64_t gray = 0;
  int cardinality = 0;
  std::uint64_t end = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < end; ++i) {
    std::uint64_t next = i ^ (i >> 1);
    std::uint64_t diff = gray ^ next;
    auto j = static_cast<std::size_t>(std::countr_zero(diff));
    if (next & diff) {
      for (std::size_t r = 0; r < k; ++r) row_sums[r] += m(r, j);
      ++cardinality;
    } else {
      for (std::size_t r = 0; r < k; ++r) row_sums[r] -= m(r, j);
      --cardinality;
    }
    gray = next;

    Complex prod{1.0, 0.0};
    for (std::size_t r = 0; r < k; ++r) prod *= row_sums[r];
    if (cardinality & 1) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  if (k & 1) total = -total;
  return total;
}

/// Permanent of the row/column-expanded matrix S^(rows, cols) without
/// materializing it: row i of s repeated row_occ[i] times, column j
/// repeated col_occ[j] times. Repeated rows are folded into a mixed-radix
/// Ryser sum with binomial weights, cutting the subset count from 2^n to
/// prod(row_occ[i] + 1).
inline Complex permanent_expanded(const Matrix& s,
                                  const std::vector<int>& row_occ,
                                  const std::vector<int>& col_occ) {
  long total_photons = 0;
  for (int v : row_occ) total_photons += v;
  long check = 0;
  for (int v : col_occ) check += v;
  if (total_photons != check) {
    throw PhotonNumberMismatch("expanded permanent needs equal row/column weight");
  }
  if (total_photons == 0) return {1.0, 0.0};
  if (total_photons > static_cast<long>(kPermanentSizeLimit)) {
    throw SizeLimit("permanent limited to 30 photons");
  }

  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < row_occ.size(); ++i) {
    if (row_occ[i] > 0) rows.push_back(i);
  }
  for (std::size_t j = 0; j < col_occ.size(); ++j) {
    if (col_occ[j] > 0) cols.push_back(j);
  }

  std::size_t t = rows.size();
  std::vector<int> digit(t, 0);
  std::vector<int> radix(t);
  for (std::size_t i = 0; i < t; ++i) radix[i] = row_occ[rows[i]] + 1;
  std::vector<int> dir(t, 1);
  std::vector<Complex> col_sum(cols.size(), Complex{0.0, 0.0});

  Complex total{0.0, 0.0};
  std::int64_t comb = 1;  // prod_i C(row_occ[i], digit[i])
  int cardinality = 0;

  for (;;) {
    // Advance the reflected mixed-radix odometer by one digit.
    std::size_t i = 0;
    while (i < t) {
      int next = digit[i] + dir[i];
      if (next >= 0 && next < radix[i]) break;
      dir[i] = -dir[i];
      ++i;
    }
    if (i == t) break;

    int old = digit[i];
    digit[i] += dir[i];
    std::size_t mode = rows[i];
    int n_i = row_occ[mode];
    if (dir[i] > 0) {
      comb = comb * (n_i - old) / (old + 1);
      ++cardinality;
      for (std::size_t c = 0; c < cols.size(); ++c) col_sum[c] += s(mode, cols[c]);
    } else {
      comb = comb * old / (n_i - old + 1);
      --cardinality;
      for (std::size_t c = 0; c < cols.size(); ++c) col_sum[c] -= s(mode, cols[c]);
    }

    Complex prod{1.0, 0.0};
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Complex base = col_sum[c];
      for (int p = 0; p < col_occ[cols[c]]; ++p) prod *= base;
    }
    prod *= static_cast<double>(comb);
    if (cardinality & 1) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  if (total_photons & 1) total = -total;
  return total;
}

}  // namespace bsf
