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

// Symplectic linear algebra on R^{2s} with interleaved (q1, p1, ..., qs, ps)
// coordinates: standard forms, canonical congruence of skew-symmetric
// matrices, Williamson normal form and symplectic spectra.

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "gaussx/linalg.hpp"

namespace gaussx {

/// The commutator matrix of s modes: block-diag of s copies of [[0,-1],[1,0]].
class SymplecticForm {
 public:
  explicit SymplecticForm(int modes) : modes_(modes) {
    if (modes < 1) throw InvalidArgument("SymplecticForm: mode count must be positive");
    matrix_ = Matrix::Zero(2 * modes, 2 * modes);
    for (int j = 0; j < modes; ++j) {
      matrix_(2 * j, 2 * j + 1) = -1.0;
      matrix_(2 * j + 1, 2 * j) = 1.0;
    }
  }

  int modes() const { return modes_; }
  Eigen::Index dim() const { return 2 * modes_; }
  const Matrix& matrix() const { return matrix_; }

 private:
  int modes_;
  Matrix matrix_;
};

inline SymplecticForm standard_form(int s) { return SymplecticForm(s); }

/// Shorthand for `standard_form(s).matrix()`.
inline Matrix delta(int s) { return SymplecticForm(s).matrix(); }

/// max-norm of T^T Δ_in T - Δ_out. T maps the `out` coordinates into the `in` ones,
/// so it has dim(in) rows and dim(out) columns.
inline double symplectic_residual(const Matrix& T, const SymplecticForm& in,
                                  const SymplecticForm& out) {
  require_shape(T, in.dim(), out.dim(), "symplectic_residual");
  return max_abs(T.transpose() * in.matrix() * T - out.matrix());
}

inline bool is_symplectic(const Matrix& T, const SymplecticForm& in, const SymplecticForm& out,
                          double tol = kDefaultTol) {
  return symplectic_residual(T, in, out) <= tol;
}

inline bool is_symplectic(const Matrix& T, double tol = kDefaultTol) {
  if (T.rows() != T.cols() || T.rows() % 2 != 0 || T.rows() == 0)
    throw InvalidArgument("is_symplectic: expected a square matrix of even dimension, got " +
                          shape_str(T.rows(), T.cols()));
  SymplecticForm form(static_cast<int>(T.rows() / 2));
  return is_symplectic(T, form, form, tol);
}

/// F with F^T Δ F = A, for a nondegenerate antisymmetric A.
struct SkewFactorization {
  Matrix factor;
  /// Canonical pair magnitudes a_j > 0, ascending.
  Vector pair_values;
  /// Orthogonal Q with Q^T A Q = block-diag(a_j [[0,-1],[1,0]]); factor = diag(sqrt a) Q^T.
  Matrix orthogonal;
};

/// Orthogonal canonical form of a nondegenerate antisymmetric matrix.
///
/// iA is Hermitian with paired spectrum ±a_j. For an eigenvector v = x + iy of
/// +a_j, A x = a_j y and A y = -a_j x, and |x| = |y| = 1/sqrt2 with x ⟂ y because
/// v is orthogonal to its conjugate. The columns sqrt2·(x, y) therefore form
/// the j-th canonical pair. Eigenvectors of one degenerate cluster stay mutually
/// orthogonal, so repeated pair values need no special treatment.
inline SkewFactorization skew_canonical_factor(const Matrix& A, double tol = kDefaultTol) {
  if (A.rows() != A.cols() || A.rows() % 2 != 0 || A.rows() == 0)
    throw InvalidArgument("skew_canonical_factor: expected a square matrix of even dimension, got " +
                          shape_str(A.rows(), A.cols()));
  if (!is_antisymmetric(A, tol))
    throw InvalidArgument("skew_canonical_factor: matrix is not antisymmetric");

  const Eigen::Index n = A.rows();
  const Eigen::Index m = n / 2;
  const Matrix As = 0.5 * (A - A.transpose());

  CMatrix h = Complex(0.0, 1.0) * As.cast<Complex>();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  if (es.info() != Eigen::Success) throw SingularMatrix("skew_canonical_factor: eigensolver failed");

  const Vector& lam = es.eigenvalues();
  const double norm2 = lam.cwiseAbs().maxCoeff();
  const double smallest = lam.cwiseAbs().minCoeff();
  if (!(norm2 > 0.0) || smallest <= tol * norm2) {
    std::ostringstream os;
    os << "skew_canonical_factor: matrix is numerically singular (smallest singular value "
       << smallest << ", norm " << norm2 << ")";
    throw SingularMatrix(os.str());
  }

  SkewFactorization out;
  out.pair_values.resize(m);
  out.orthogonal.resize(n, n);
  const double root2 = std::sqrt(2.0);
  for (Eigen::Index j = 0; j < m; ++j) {
    const Eigen::Index k = m + j;  // positive half of the ascending spectrum
    const CVector v = es.eigenvectors().col(k);
    out.pair_values(j) = lam(k);
    out.orthogonal.col(2 * j) = root2 * v.real();
    out.orthogonal.col(2 * j + 1) = root2 * v.imag();
  }
  Vector scale(n);
  for (Eigen::Index j = 0; j < m; ++j) scale(2 * j) = scale(2 * j + 1) = std::sqrt(out.pair_values(j));
  out.factor = scale.asDiagonal() * out.orthogonal.transpose();
  return out;
}

/// alpha = S^T diag(d1, d1, ..., ds, ds) S with S symplectic.
struct WilliamsonDecomposition {
  Matrix S;
  /// Symplectic eigenvalues, ascending.
  Vector d;
};

namespace detail {

inline void require_covariance_like(const Matrix& alpha, double tol, const std::string& what) {
  if (alpha.rows() != alpha.cols() || alpha.rows() % 2 != 0 || alpha.rows() == 0)
    throw InvalidArgument(what + ": expected a square matrix of even dimension, got " +
                          shape_str(alpha.rows(), alpha.cols()));
  if (!is_symmetric(alpha, tol)) throw InvalidArgument(what + ": matrix is not symmetric");
}

inline Vector doubled(const Vector& d) {
  Vector out(2 * d.size());
  for (Eigen::Index j = 0; j < d.size(); ++j) out(2 * j) = out(2 * j + 1) = d(j);
  return out;
}

}  // namespace detail

/// Williamson normal form via the orthogonal canonical form of α^{1/2} Δ α^{1/2}.
///
/// With α^{1/2} Δ α^{1/2} = Q (D Δ) Q^T, the matrix S = D^{-1/2} Q^T α^{1/2}
/// satisfies S^T D S = α and S^T Δ S = Δ.
inline WilliamsonDecomposition williamson(const Matrix& alpha, double tol = kDefaultTol) {
  detail::require_covariance_like(alpha, tol, "williamson");
  const Matrix sym = 0.5 * (alpha + alpha.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  const Vector& ev = es.eigenvalues();
  if (!(ev(0) > tol * std::max(1.0, ev(ev.size() - 1))))
    throw InvalidArgument("williamson: matrix is not positive definite");

  const Matrix root = es.eigenvectors() * ev.cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
  const int s = static_cast<int>(alpha.rows() / 2);
  const SkewFactorization canon = skew_canonical_factor(root * delta(s) * root, tol);

  WilliamsonDecomposition out;
  out.d = canon.pair_values;
  out.S = detail::doubled(out.d).cwiseSqrt().cwiseInverse().asDiagonal() *
          canon.orthogonal.transpose() * root;
  return out;
}

/// Moduli of the eigenvalues of Δα, one per conjugate pair, ascending.
///
/// Uses a general (non-symmetric) eigensolve, independent of `williamson`.
inline Vector symplectic_eigenvalues(const Matrix& alpha, double tol = kDefaultTol) {
  detail::require_covariance_like(alpha, tol, "symplectic_eigenvalues");
  const Matrix sym = 0.5 * (alpha + alpha.transpose());
  {
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
    const Vector& ev = es.eigenvalues();
    if (!(ev(0) > tol * std::max(1.0, ev(ev.size() - 1))))
      throw InvalidArgument("symplectic_eigenvalues: matrix is not positive definite");
  }
  const int s = static_cast<int>(alpha.rows() / 2);
  Eigen::EigenSolver<Matrix> es(delta(s) * sym, false);
  Vector moduli = es.eigenvalues().cwiseAbs();
  std::sort(moduli.data(), moduli.data() + moduli.size());
  Vector d(s);
  for (int j = 0; j < s; ++j) d(j) = 0.5 * (moduli(2 * j) + moduli(2 * j + 1));
  return d;
}

/// exp(Δ H) for symmetric H; symplectic by construction.
inline Matrix symplectic_exp(const Matrix& H) {
  if (H.rows() != H.cols() || H.rows() % 2 != 0 || H.rows() == 0)
    throw InvalidArgument("symplectic_exp: expected a square matrix of even dimension");
  const Matrix sym = 0.5 * (H + H.transpose());
  const Matrix gen = delta(static_cast<int>(H.rows() / 2)) * sym;
  return gen.exp();
}

/// exp(Δ H) with H symmetric, entries uniform in [-scale, scale], drawn from `seed`.
inline Matrix random_symplectic(int s, std::uint64_t seed, double scale = 0.5) {
  if (s < 1) throw InvalidArgument("random_symplectic: mode count must be positive");
  Rng rng(seed);
  Matrix H = rng.uniform_matrix(2 * s, 2 * s, -scale, scale);
  return symplectic_exp(0.5 * (H + H.transpose()));
}

}  // namespace gaussx
