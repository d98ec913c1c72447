// Copyright 2026 The gaussx Authors
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

// Dense linear-algebra vocabulary shared by all gaussx modules.

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include "gaussx/errors.hpp"

namespace gaussx {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

/// Absolute tolerance used for max-norm residuals unless the caller overrides it.
inline constexpr double kDefaultTol = 1e-9;

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline std::string shape_str(Eigen::Index rows, Eigen::Index cols) {
  std::ostringstream os;
  os << rows << "x" << cols;
  return os.str();
}

inline void require_shape(const Matrix& m, Eigen::Index rows, Eigen::Index cols,
                          const std::string& what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw InvalidArgument(what + ": expected " + shape_str(rows, cols) + " matrix, got " +
                          shape_str(m.rows(), m.cols()));
  }
}

inline void require_size(const Vector& v, Eigen::Index n, const std::string& what) {
  if (v.size() != n) {
    throw InvalidArgument(what + ": expected vector of length " + std::to_string(n) +
                          ", got " + std::to_string(v.size()));
  }
}

/// Symmetry up to `tol` relative to the matrix scale (absolute below unit scale).
inline bool is_symmetric(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.transpose()) <= tol * std::max(1.0, max_abs(m));
}

inline bool is_antisymmetric(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m + m.transpose()) <= tol * std::max(1.0, max_abs(m));
}

/// Smallest eigenvalue of `sym - (i/2) skew`, read as a complex Hermitian matrix.
inline double min_eigenvalue_shifted(const Matrix& sym, const Matrix& skew) {
  CMatrix h = sym.cast<Complex>() - Complex(0.0, 0.5) * skew.cast<Complex>();
  h = (0.5 * (h + h.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

/// Singular values in descending order.
inline Vector singular_values(const Matrix& m) {
  return Eigen::JacobiSVD<Matrix>(m).singularValues();
}

/// Deterministic generator whose output depends only on the seed (the raw
/// mt19937_64 stream is fully specified by the standard; distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  Matrix uniform_matrix(Eigen::Index rows, Eigen::Index cols, double lo, double hi) {
    Matrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = uniform(lo, hi);
    return m;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gaussx
