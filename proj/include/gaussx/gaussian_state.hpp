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

// Gaussian states at the covariance level: validity and purity.

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "gaussx/linalg.hpp"
#include "gaussx/symplectic.hpp"

namespace gaussx {

/// Mean vector l and covariance α of a Gaussian state on s modes, so that the
/// characteristic function is exp(i l^T z - z^T α z / 2).
struct GaussianState {
  GaussianState(Vector mean_in, Matrix covariance_in)
      : mean(std::move(mean_in)), covariance(std::move(covariance_in)) {
    if (covariance.rows() != covariance.cols() || covariance.rows() % 2 != 0 ||
        covariance.rows() == 0)
      throw InvalidArgument("GaussianState: covariance must be square of even dimension, got " +
                            shape_str(covariance.rows(), covariance.cols()));
    require_size(mean, covariance.rows(), "GaussianState mean");
  }

  int modes() const { return static_cast<int>(covariance.rows() / 2); }

  Vector mean;
  Matrix covariance;
};

/// Smallest eigenvalue of the Hermitian matrix α - (i/2)Δ.
inline double validity_margin(const Matrix& alpha) {
  return min_eigenvalue_shifted(alpha, delta(static_cast<int>(alpha.rows() / 2)));
}

/// True iff α - (i/2)Δ ≥ -tol.
inline bool validate_state(const Vector& l, const Matrix& alpha, double tol = kDefaultTol) {
  detail::require_covariance_like(alpha, tol, "validate_state");
  require_size(l, alpha.rows(), "validate_state mean");
  return validity_margin(0.5 * (alpha + alpha.transpose())) >= -tol;
}

inline bool validate_state(const GaussianState& st, double tol = kDefaultTol) {
  return validate_state(st.mean, st.covariance, tol);
}

struct PurityOptions {
  double tol = kDefaultTol;
  /// Relative cliff for the rank of α - (i/2)Δ: eigenvalues above rank_tol·λ_max count.
  double rank_tol = 1e-7;
};

/// The five equivalent purity criteria, each evaluated by its own computation.
///
/// Index 0: α minimal among covariances (decided through its equivalence with
///          index 1, here computed from the Williamson normal form);
/// index 1: symplectic eigenvalues (eigenvalues of Δα) all equal 1/2;
/// index 2: rank of α - (i/2)Δ equals s;
/// index 3: α + Δ α^{-1} Δ / 4 = 0;
/// index 4: J = 2Δα is a complex structure, J² = -I, so that α = -ΔJ/2.
struct PurityReport {
  static constexpr std::array<std::string_view, 5> kConditionNames = {
      "minimal (via equivalence with symplectic spectrum)", "symplectic eigenvalues 1/2",
      "rank(alpha - i/2 Delta) = s", "alpha + Delta alpha^-1 Delta / 4 = 0",
      "complex structure J"};

  std::array<bool, 5> verdicts{};
  /// Quantity each verdict was thresholded on (rank for index 2).
  std::array<double, 5> residuals{};
  bool consensus = false;
  bool pure = false;
  Vector symplectic_eigenvalues;
  /// Present when the complex-structure test passes.
  std::optional<Matrix> J;
};

inline PurityReport purity_report(const GaussianState& st, const PurityOptions& opt = {}) {
  const Matrix& raw = st.covariance;
  if (!is_symmetric(raw, opt.tol)) throw InvalidArgument("purity_report: covariance is not symmetric");
  const Matrix alpha = 0.5 * (raw + raw.transpose());
  if (!validate_state(st.mean, alpha, opt.tol))
    throw InvalidArgument("purity_report: covariance violates alpha >= (i/2) Delta");

  const int s = st.modes();
  const Matrix D = delta(s);
  const double scale = std::max(1.0, max_abs(alpha));
  PurityReport rep;

  const WilliamsonDecomposition w = williamson(alpha, opt.tol);
  rep.residuals[0] = (w.d.array() - 0.5).abs().maxCoeff();
  rep.verdicts[0] = rep.residuals[0] <= opt.tol * scale;

  rep.symplectic_eigenvalues = symplectic_eigenvalues(alpha, opt.tol);
  rep.residuals[1] = (rep.symplectic_eigenvalues.array() - 0.5).abs().maxCoeff();
  rep.verdicts[1] = rep.residuals[1] <= opt.tol * scale;

  {
    CMatrix h = alpha.cast<Complex>() - Complex(0.0, 0.5) * D.cast<Complex>();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
    const Vector& ev = es.eigenvalues();
    const double cliff = opt.rank_tol * ev(ev.size() - 1);
    int rank = 0;
    for (Eigen::Index k = 0; k < ev.size(); ++k)
      if (ev(k) > cliff) ++rank;
    rep.residuals[2] = rank;
    rep.verdicts[2] = rank == s;
  }

  {
    const Matrix inv = alpha.ldlt().solve(Matrix::Identity(2 * s, 2 * s));
    rep.residuals[3] = max_abs(alpha + 0.25 * D * inv * D) / max_abs(alpha);
    rep.verdicts[3] = rep.residuals[3] <= opt.tol;
  }

  {
    // α = -ΔJ/2 with Δ^{-1} = -Δ gives J = 2Δα.
    const Matrix J = 2.0 * D * alpha;
    rep.residuals[4] = max_abs(J * J + Matrix::Identity(2 * s, 2 * s));
    rep.verdicts[4] = rep.residuals[4] <= opt.tol * std::max(1.0, max_abs(J));
    if (rep.verdicts[4]) rep.J = J;
  }

  rep.consensus = std::all_of(rep.verdicts.begin(), rep.verdicts.end(),
                              [&](bool v) { return v == rep.verdicts[0]; });
  rep.pure = rep.consensus && rep.verdicts[0];
  return rep;
}

inline GaussianState vacuum_state() { return GaussianState(Vector::Zero(2), 0.5 * Matrix::Identity(2, 2)); }

inline GaussianState coherent_state(double q, double p) {
  if (!std::isfinite(q) || !std::isfinite(p)) throw InvalidArgument("coherent_state: non-finite displacement");
  return GaussianState(Eigen::Vector2d(q, p), 0.5 * Matrix::Identity(2, 2));
}

inline GaussianState thermal_state(double nbar) {
  if (!std::isfinite(nbar) || nbar < 0.0)
    throw InvalidArgument("thermal_state: mean occupation must be finite and >= 0");
  return GaussianState(Vector::Zero(2), (nbar + 0.5) * Matrix::Identity(2, 2));
}

/// Squeezed vacuum with covariance diag(e^{2r}, e^{-2r}) / 2.
inline GaussianState squeezed_state(double r) {
  if (!std::isfinite(r)) throw InvalidArgument("squeezed_state: non-finite squeezing");
  Matrix alpha = Matrix::Zero(2, 2);
  alpha(0, 0) = 0.5 * std::exp(2.0 * r);
  alpha(1, 1) = 0.5 * std::exp(-2.0 * r);
  return GaussianState(Vector::Zero(2), alpha);
}

/// Product state: modes of `a` followed by modes of `b`.
inline GaussianState direct_sum(const GaussianState& a, const GaussianState& b) {
  const Eigen::Index na = a.mean.size(), nb = b.mean.size();
  Vector l(na + nb);
  l << a.mean, b.mean;
  Matrix alpha = Matrix::Zero(na + nb, na + nb);
  alpha.topLeftCorner(na, na) = a.covariance;
  alpha.bottomRightCorner(nb, nb) = b.covariance;
  return GaussianState(l, alpha);
}

enum class StateKind { vacuum, coherent, thermal, squeezed };

inline StateKind parse_state_kind(std::string_view name) {
  if (name == "vacuum") return StateKind::vacuum;
  if (name == "coherent") return StateKind::coherent;
  if (name == "thermal") return StateKind::thermal;
  if (name == "squeezed") return StateKind::squeezed;
  throw InvalidArgument("unknown state kind '" + std::string(name) + "'");
}

/// One-mode catalogue: vacuum(), coherent(q, p), thermal(nbar), squeezed(r).
inline GaussianState make_state(StateKind kind, std::span<const double> params) {
  auto want = [&](std::size_t n, const char* what) {
    if (params.size() != n)
      throw InvalidArgument(std::string(what) + " takes " + std::to_string(n) + " parameter(s)");
  };
  switch (kind) {
    case StateKind::vacuum:
      want(0, "vacuum");
      return vacuum_state();
    case StateKind::coherent:
      want(2, "coherent");
      return coherent_state(params[0], params[1]);
    case StateKind::thermal:
      want(1, "thermal");
      return thermal_state(params[0]);
    case StateKind::squeezed:
      want(1, "squeezed");
      return squeezed_state(params[0]);
  }
  throw InvalidArgument("make_state: unknown kind");
}

}  // namespace gaussx
