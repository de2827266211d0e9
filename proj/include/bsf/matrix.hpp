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
#include <complex>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "bsf/errors.hpp"
#include "bsf/phase.hpp"

namespace bsf {

inline constexpr double kUnitaryTolExternal = 1e-9;
inline constexpr double kUnitaryTolInternal = 1e-12;

/// Dense complex matrix, row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Complex{0.0, 0.0}) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  const Complex* row_data(std::size_t i) const { return a_.data() + i * cols_; }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw NonSquareMatrix("dimension mismatch in product");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        Complex v = (*this)(i, k);
        if (v == Complex{}) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          r(i, j) += v * o(k, j);
        }
      }
    }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }
  Matrix scaled(Complex s) const {
    Matrix r = *this;
    for (auto& v : r.a_) v *= s;
    return r;
  }

  Matrix dagger() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        r(j, i) = std::conj((*this)(i, j));
      }
    }
    return r;
  }

  double max_abs_diff(const Matrix& o) const {
    double d = 0;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      d = std::max(d, std::abs(a_[i] - o.a_[i]));
    }
    return d;
  }

  bool is_square() const { return rows_ == cols_; }

  double unitarity_defect() const {
    if (!is_square()) return 1.0;
    return ((*this) * dagger()).max_abs_diff(identity(rows_));
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Complex> a_;
};

/// The m x m unitary describing a linear optical circuit on m modes.
/// Unitarity is verified on construction.
class TransferMatrix {
 public:
  explicit TransferMatrix(Matrix m, double tol = kUnitaryTolExternal)
      : mat_(std::move(m)) {
    if (!mat_.is_square()) throw NonSquareMatrix("transfer matrix must be square");
    double defect = mat_.unitarity_defect();
    if (defect > tol) {
      throw NotUnitary("transfer matrix fails U*U^dag = I by " + std::to_string(defect));
    }
  }

  static TransferMatrix identity(std::size_t m) {
    return TransferMatrix(Matrix::identity(m), kUnitaryTolInternal);
  }

  std::size_t dim() const { return mat_.rows(); }
  const Matrix& matrix() const { return mat_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }

  TransferMatrix operator*(const TransferMatrix& o) const {
    return TransferMatrix(mat_ * o.mat_, kUnitaryTolExternal);
  }
  TransferMatrix dagger() const {
    return TransferMatrix(mat_.dagger(), kUnitaryTolInternal);
  }

 private:
  Matrix mat_;
};

/// Discrete Fourier transfer matrix: entry (j, k) = omega^{jk} / sqrt(d)
/// with omega = exp(2*pi*i/d). Satisfies F_d X_d F_d^dag = Z_d.
inline TransferMatrix fourier_matrix(std::size_t d) {
  if (d < 1) throw IndexOutOfRange("fourier_matrix requires d >= 1");
  Matrix m(d, d);
  double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      auto e = static_cast<std::int64_t>((j * k) % d);
      m(j, k) = ExactPhase(e, static_cast<std::int64_t>(d)).value() * norm;
    }
  }
  return TransferMatrix(std::move(m), kUnitaryTolInternal);
}

/// Kronecker product with row-major pair indexing: (i, j) -> i*dim(B) + j.
inline TransferMatrix tensor(const TransferMatrix& a, const TransferMatrix& b) {
  std::size_t da = a.dim(), db = b.dim();
  Matrix m(da * db, da * db);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t k = 0; k < da; ++k) {
      Complex av = a(i, k);
      if (av == Complex{}) continue;
      for (std::size_t j = 0; j < db; ++j) {
        for (std::size_t l = 0; l < db; ++l) {
          m(i * db + j, k * db + l) = av * b(j, l);
        }
      }
    }
  }
  return TransferMatrix(std::move(m), kUnitaryTolInternal);
}

/// Block-diagonal sum, blocks in argument order.
inline TransferMatrix direct_sum(const TransferMatrix& a, const TransferMatrix& b) {
  std::size_t da = a.dim(), db = b.dim();
  Matrix m(da + db, da + db);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) m(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < db; ++i) {
    for (std::size_t j = 0; j < db; ++j) m(da + i, da + j) = b(i, j);
  }
  return TransferMatrix(std::move(m), kUnitaryTolInternal);
}

/// Place a on the listed global modes, identity elsewhere.
inline TransferMatrix embed(const TransferMatrix& a,
                            const std::vector<std::size_t>& modes,
                            std::size_t m_total) {
  if (modes.size() != a.dim()) {
    throw IndexOutOfRange("embed: mode list size must match dim(A)");
  }
  std::set<std::size_t> seen;
  for (std::size_t v : modes) {
    if (v >= m_total) throw IndexOutOfRange("embed: mode index out of range");
    if (!seen.insert(v).second) throw DuplicateMode("embed: repeated mode index");
  }
  Matrix m = Matrix::identity(m_total);
  for (std::size_t i = 0; i < modes.size(); ++i) {
    for (std::size_t j = 0; j < modes.size(); ++j) {
      m(modes[i], modes[j]) = a(i, j);
    }
  }
  return TransferMatrix(std::move(m), kUnitaryTolInternal);
}

}  // namespace bsf
