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

// One-mode truncated Fock-space oracle: Weyl operators, characteristic
// functions, the Fourier inversion formula and brute-force checks of the
// covariance-level channel algebra.
//
// W(z) = exp(i (x q + y p)) is the displacement D(β) with β = (-y + i x)/sqrt2.
// Its number-basis entries are evaluated in closed form,
//   <k+a| D |k>  = sqrt(k!/(k+a)!) β^a e^{-|β|²/2} L_k^{(a)}(|β|²),
//   <k| D |k+a>  = sqrt(k!/(k+a)!) (-β*)^a e^{-|β|²/2} L_k^{(a)}(|β|²),
// through the normalised three-term Laguerre recurrence along each diagonal.
// The truncated matrix is therefore the exact compression P W(z) P of the
// Weyl operator, so sums and traces of operators supported on the truncated
// space carry no truncation error. `weyl_exponential` exponentiates the
// truncated generator instead and serves as an independent cross-check.

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "gaussx/gaussian_channel.hpp"
#include "gaussx/gaussian_state.hpp"
#include "gaussx/linalg.hpp"

namespace gaussx::fock {

using Point = Eigen::Vector2d;

/// Dense operator on span{|0>, ..., |n_max>}.
struct FockOperator {
  FockOperator(int n_max_in, CMatrix matrix_in) : n_max(n_max_in), matrix(std::move(matrix_in)) {
    if (n_max < 0 || matrix.rows() != n_max + 1 || matrix.cols() != n_max + 1)
      throw InvalidArgument("FockOperator: matrix must be (n_max+1)x(n_max+1)");
  }

  Eigen::Index dim() const { return matrix.rows(); }
  Complex trace() const { return matrix.trace(); }

  int n_max;
  CMatrix matrix;
};

struct Ladder {
  Matrix a;
  Matrix a_dagger;
  Matrix N;
};

inline Ladder ladder(int n_max) {
  if (n_max < 2) throw InvalidArgument("ladder: n_max must be at least 2");
  Ladder out{Matrix::Zero(n_max + 1, n_max + 1), Matrix(), Matrix::Zero(n_max + 1, n_max + 1)};
  for (int n = 1; n <= n_max; ++n) out.a(n - 1, n) = std::sqrt(static_cast<double>(n));
  out.a_dagger = out.a.transpose();
  for (int n = 0; n <= n_max; ++n) out.N(n, n) = n;
  return out;
}

/// q = (a + a^†)/sqrt2.
inline CMatrix position(int n_max) {
  const Ladder l = ladder(n_max);
  return ((l.a + l.a_dagger) / std::numbers::sqrt2).cast<Complex>();
}

/// p = i (a^† - a)/sqrt2.
inline CMatrix momentum(int n_max) {
  const Ladder l = ladder(n_max);
  return Complex(0.0, 1.0 / std::numbers::sqrt2) * (l.a_dagger - l.a).cast<Complex>();
}

namespace detail {

/// Calls visit(row, col, value) for every entry of the compressed W(z),
/// diagonal by diagonal, in a fixed order.
template <typename Visit>
void for_each_weyl_entry(const Eigen::Vector2d& z, int n_max, Visit&& visit) {
  const Eigen::Index n = n_max + 1;
  const Complex beta(-z(1) / std::numbers::sqrt2, z(0) / std::numbers::sqrt2);
  const double x = std::norm(beta);
  const double rb = std::sqrt(x);
  const Complex u = rb > 0.0 ? beta / rb : Complex(1.0);
  const Complex v = -std::conj(u);
  std::vector<double> sq(static_cast<std::size_t>(n + 1));
  for (std::size_t k = 0; k < sq.size(); ++k) sq[k] = std::sqrt(static_cast<double>(k));
  double f0 = std::exp(-0.5 * x);
  Complex ph_lo = 1.0, ph_up = 1.0;
  for (Eigen::Index a = 0; a < n; ++a) {
    double prev = 0.0, f = f0;
    for (Eigen::Index k = 0; k + a < n; ++k) {
      visit(k + a, k, f * ph_lo);
      if (a > 0) visit(k, k + a, f * ph_up);
      const auto ku = static_cast<std::size_t>(k), au = static_cast<std::size_t>(a);
      const double next =
          ((2.0 * static_cast<double>(k + 1) - 1.0 + static_cast<double>(a) - x) * f - sq[ku] * sq[ku + au] * prev) /
          (sq[ku + 1] * sq[ku + 1 + au]);
      prev = f;
      f = next;
    }
    f0 *= rb / sq[static_cast<std::size_t>(a + 1)];
    ph_lo *= u;
    ph_up *= v;
  }
}

}  // namespace detail

/// Compressed Weyl operator P W(z) P on the truncated space.
inline FockOperator weyl(const Point& z, int n_max) {
  CMatrix m(n_max + 1, n_max + 1);
  detail::for_each_weyl_entry(z, n_max, [&](Eigen::Index r, Eigen::Index c, Complex w) { m(r, c) = w; });
  return FockOperator(n_max, m);
}

/// Σ_j c_j P W(w_j) P, accumulated in a fixed order.
inline CMatrix weyl_superposition(int n_max, std::span<const Point> points,
                                  std::span<const Complex> coeffs) {
  if (points.size() != coeffs.size())
    throw InvalidArgument("weyl_superposition: points and coefficients differ in length");
  CMatrix out = CMatrix::Zero(n_max + 1, n_max + 1);
  for (std::size_t j = 0; j < points.size(); ++j) {
    const Complex c = coeffs[j];
    detail::for_each_weyl_entry(points[j], n_max,
                                [&](Eigen::Index r, Eigen::Index col, Complex w) { out(r, col) += c * w; });
  }
  return out;
}

/// exp(i (x q + y p)) of the truncated generator, through the eigendecomposition
/// of the truncated position operator and the exact phase covariance
/// exp(iθN) q exp(-iθN) = cosθ q + sinθ p. Unitary, but only its low-number
/// block approximates the Weyl operator.
class GeneratorWeyl {
 public:
  explicit GeneratorWeyl(int n_max) : n_max_(n_max) {
    const Ladder l = ladder(n_max);
    Eigen::SelfAdjointEigenSolver<Matrix> es((l.a + l.a_dagger) / std::numbers::sqrt2);
    V_ = es.eigenvectors();
    lambda_ = es.eigenvalues();
  }

  FockOperator operator()(const Point& z) const {
    const double r = z.norm();
    const double theta = std::atan2(z(1), z(0));
    const Eigen::Index n = n_max_ + 1;
    CVector e(n), rot(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      e(k) = std::polar(1.0, r * lambda_(k));
      rot(k) = std::polar(1.0, theta * static_cast<double>(k));
    }
    const CMatrix Vc = V_.cast<Complex>();
    return FockOperator(n_max_, rot.asDiagonal() * (Vc * e.asDiagonal() * Vc.adjoint()) *
                                    rot.conjugate().asDiagonal());
  }

 private:
  int n_max_;
  Matrix V_;
  Vector lambda_;
};

inline FockOperator weyl_exponential(const Point& z, int n_max) { return GeneratorWeyl(n_max)(z); }

/// z -> Tr(τ W(z)) for a fixed finite matrix τ (no normalisation required).
class CharacteristicFunction {
 public:
  explicit CharacteristicFunction(CMatrix tau) : tau_(std::move(tau)) {
    if (tau_.rows() != tau_.cols() || tau_.rows() < 1)
      throw InvalidArgument("CharacteristicFunction: operator must be square");
  }

  Complex operator()(const Point& z) const {
    Complex acc = 0.0;
    detail::for_each_weyl_entry(z, static_cast<int>(tau_.rows() - 1),
                                [&](Eigen::Index r, Eigen::Index c, Complex w) { acc += tau_(c, r) * w; });
    return acc;
  }

 private:
  CMatrix tau_;
};

/// φ_ρ(z) = Tr ρ W(z) for a density matrix normalised to 1e-10.
inline Complex char_fn(const FockOperator& rho, const Point& z) {
  if (std::abs(rho.trace() - 1.0) > 1e-10)
    throw InvalidArgument("char_fn: operator is not trace-normalised");
  return CharacteristicFunction(rho.matrix)(z);
}

/// Samples of a function on the square [-extent, extent]^2 with spacing `step`.
/// values(i, j) holds the sample at (-extent + i step, -extent + j step).
struct CharFnGrid {
  double extent = 0.0;
  double step = 0.0;
  CMatrix values;

  Eigen::Index points_per_axis() const { return values.rows(); }
  Point point(Eigen::Index i, Eigen::Index j) const {
    return Point(-extent + static_cast<double>(i) * step, -extent + static_cast<double>(j) * step);
  }
  Complex at_origin() const {
    const Eigen::Index c = (values.rows() - 1) / 2;
    return values(c, c);
  }
};

inline Eigen::Index grid_points_per_axis(double extent, double step) {
  if (!(extent > 0.0) || !(step > 0.0)) throw InvalidArgument("grid: extent and step must be positive");
  const double cells = 2.0 * extent / step;
  const double rounded = std::round(cells);
  if (std::abs(cells - rounded) > 1e-9 * std::max(1.0, cells) || static_cast<long>(rounded) % 2 != 0)
    throw InvalidArgument("grid: extent must be an integer multiple of step");
  return static_cast<Eigen::Index>(rounded) + 1;
}

template <typename F>
CharFnGrid tabulate(F&& fn, double extent, double step) {
  const Eigen::Index n = grid_points_per_axis(extent, step);
  CharFnGrid g{extent, step, CMatrix(n, n)};
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) g.values(i, j) = fn(g.point(i, j));
  return g;
}

struct OracleOptions {
  int n_max = 60;
  double extent = 6.0;
  double step = 0.05;
  /// Size of the interior block compared by the reconstruction checks.
  int block = 10;
};

/// Largest |φ| on the grid boundary above which the sampled function is taken
/// to be non-integrable over the square.
inline constexpr double kMaxBoundaryMagnitude = 1e-2;

namespace detail {

inline double trapezoid_weight(Eigen::Index i, Eigen::Index n) { return (i == 0 || i == n - 1) ? 0.5 : 1.0; }

inline void require_inversion_grid(const CharFnGrid& grid) {
  if (grid.extent < 6.0 - 1e-12) throw InvalidArgument("inverse_fourier: grid extent must be >= 6");
  if (grid.step > 0.1 + 1e-12) throw InvalidArgument("inverse_fourier: grid step must be <= 0.1");
  const Eigen::Index n = grid.values.rows();
  if (grid.values.cols() != n || n != grid_points_per_axis(grid.extent, grid.step))
    throw InvalidArgument("inverse_fourier: grid values do not match extent/step");
  double edge = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    edge = std::max({edge, std::abs(grid.values(k, 0)), std::abs(grid.values(k, n - 1)),
                     std::abs(grid.values(0, k)), std::abs(grid.values(n - 1, k))});
  }
  if (edge > kMaxBoundaryMagnitude)
    throw InvalidArgument("inverse_fourier: function does not decay at the grid boundary (max " +
                          std::to_string(edge) + "); not integrable over the grid");
}

/// Trapezoid nodes -z and weights φ(z) step² / 2π for the inversion integral.
template <typename Map>
void inversion_nodes(const CharFnGrid& grid, Map&& node_of, std::vector<Point>& pts,
                     std::vector<Complex>& coeffs) {
  const Eigen::Index n = grid.values.rows();
  const double w0 = grid.step * grid.step / (2.0 * std::numbers::pi);
  pts.clear();
  coeffs.clear();
  pts.reserve(static_cast<std::size_t>(n * n));
  coeffs.reserve(static_cast<std::size_t>(n * n));
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      const Complex v = grid.values(i, j);
      if (v == Complex(0.0)) continue;
      pts.push_back(node_of(grid.point(i, j)));
      coeffs.push_back(v * w0 * trapezoid_weight(i, n) * trapezoid_weight(j, n));
    }
}

}  // namespace detail

/// τ = (2π)^{-1} ∫ φ(z) W(-z) d²z, trapezoid rule on the grid.
inline FockOperator inverse_fourier(const CharFnGrid& grid, int n_max) {
  detail::require_inversion_grid(grid);
  std::vector<Point> pts;
  std::vector<Complex> coeffs;
  detail::inversion_nodes(grid, [](const Point& z) -> Point { return -z; }, pts, coeffs);
  return FockOperator(n_max, weyl_superposition(n_max, pts, coeffs));
}

/// Max |a - b| over the top-left block x block entries.
inline double block_deviation(const CMatrix& a, const CMatrix& b, int block) {
  const Eigen::Index k = std::min<Eigen::Index>({block, a.rows(), b.rows()});
  return (a.topLeftCorner(k, k) - b.topLeftCorner(k, k)).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// Reference states, built directly in the number basis.

namespace detail {

/// Work in a larger space and truncate afterwards, so that unitary preparation
/// steps do not see the truncation boundary.
inline int padded(int n_max) { return 2 * n_max + 20; }

inline CMatrix truncate(const CMatrix& m, int n_max) { return m.topLeftCorner(n_max + 1, n_max + 1); }

inline CMatrix thermal_diagonal(double nbar, int n_max) {
  CMatrix rho = CMatrix::Zero(n_max + 1, n_max + 1);
  for (int n = 0; n <= n_max; ++n)
    rho(n, n) = std::pow(nbar, n) / std::pow(nbar + 1.0, n + 1);
  if (nbar == 0.0) rho(0, 0) = 1.0;
  return rho;
}

/// exp(-i r (qp + pq)/2), the squeezer scaling q by e^{r} in the Heisenberg picture.
inline CMatrix squeezer(double r, int n_max) {
  const CMatrix q = position(n_max), p = momentum(n_max);
  CMatrix g = 0.5 * (q * p + p * q);
  g = (0.5 * (g + g.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(g);
  CVector phases(g.rows());
  for (Eigen::Index k = 0; k < g.rows(); ++k) phases(k) = std::polar(1.0, -r * es.eigenvalues()(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

/// exp(iψN); its adjoint action rotates (q, p) by ψ.
inline CMatrix phase_rotation(double psi, int n_max) {
  CVector ph(n_max + 1);
  for (int n = 0; n <= n_max; ++n) ph(n) = std::polar(1.0, psi * n);
  return ph.asDiagonal();
}

inline CMatrix conjugate(const CMatrix& U, const CMatrix& rho) { return U * rho * U.adjoint(); }

/// W(z) with z = Δ^T l shifts the mean by l.
inline Point displacement_for_mean(const Vector& l) { return Point(l(1), -l(0)); }

}  // namespace detail

inline FockOperator vacuum(int n_max) {
  CMatrix rho = CMatrix::Zero(n_max + 1, n_max + 1);
  rho(0, 0) = 1.0;
  return FockOperator(n_max, rho);
}

inline FockOperator number_state(int n, int n_max) {
  if (n < 0 || n > n_max) throw InvalidArgument("number_state: level outside truncation");
  CMatrix rho = CMatrix::Zero(n_max + 1, n_max + 1);
  rho(n, n) = 1.0;
  return FockOperator(n_max, rho);
}

/// Geometric diagonal p_n = nbar^n / (nbar + 1)^{n+1}, not renormalised.
inline FockOperator thermal(double nbar, int n_max) {
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) throw InvalidArgument("thermal: nbar must be >= 0");
  return FockOperator(n_max, detail::thermal_diagonal(nbar, n_max));
}

/// Squeezed vacuum with covariance diag(e^{2r}, e^{-2r})/2.
inline FockOperator squeezed(double r, int n_max) {
  const int big = detail::padded(n_max);
  const CMatrix rho = detail::conjugate(detail::squeezer(r, big), vacuum(big).matrix);
  return FockOperator(n_max, detail::truncate(rho, n_max));
}

/// Coherent state with mean (q, p).
inline FockOperator coherent(double q, double p, int n_max) {
  // The compression is exact on span{|0>}, so no padding is needed.
  const CMatrix W = weyl(detail::displacement_for_mean(Eigen::Vector2d(q, p)), n_max).matrix;
  return FockOperator(n_max, detail::conjugate(W, vacuum(n_max).matrix));
}

/// Number-basis density matrix of a one-mode Gaussian state: thermal state with
/// occupation sqrt(det α) - 1/2, squeezed along the principal axes of α, rotated
/// onto them and displaced to the mean.
inline FockOperator gaussian(const GaussianState& st, int n_max, double tol = kDefaultTol) {
  if (st.modes() != 1) throw InvalidArgument("fock::gaussian: oracle is one-mode only");
  const Matrix alpha = 0.5 * (st.covariance + st.covariance.transpose());
  const double d = std::sqrt(alpha.determinant());
  if (!(d >= 0.5 - tol)) throw InvalidArgument("fock::gaussian: covariance is not a valid state");
  const double nbar = std::max(0.0, d - 0.5);

  Eigen::SelfAdjointEigenSolver<Matrix> es(alpha);
  Matrix O(2, 2);
  O.col(0) = es.eigenvectors().col(1);  // major axis
  O.col(1) = es.eigenvectors().col(0);
  if (O.determinant() < 0.0) O.col(1) = -O.col(1);
  const double r = 0.5 * std::log(es.eigenvalues()(1) / d);
  const double psi = std::atan2(O(1, 0), O(0, 0));

  const int big = detail::padded(n_max);
  CMatrix rho = detail::thermal_diagonal(nbar, big);
  rho = detail::conjugate(detail::squeezer(r, big), rho);
  rho = detail::conjugate(detail::phase_rotation(psi, big), rho);
  if (st.mean.cwiseAbs().maxCoeff() > 0.0)
    rho = detail::conjugate(weyl(detail::displacement_for_mean(st.mean), big).matrix, rho);
  return FockOperator(n_max, detail::truncate(rho, n_max));
}

// ---------------------------------------------------------------------------
// Channel checks.

namespace detail {

inline void require_one_mode(const GaussianChannel& ch) {
  if (ch.s_A() != 1 || ch.s_B() != 1) throw InvalidArgument("oracle is one-mode only");
}

}  // namespace detail

/// Schrödinger image of ρ through the characteristic-function route:
/// φ_out(z) = φ_in(K z) f(z), reconstructed by inverse_fourier.
inline FockOperator fock_apply(const GaussianChannel& ch, const FockOperator& rho_in,
                               const OracleOptions& opt) {
  detail::require_one_mode(ch);
  const CharacteristicFunction phi(rho_in.matrix);
  const auto f = noise_function(ch);
  const Matrix K = ch.K;
  const CharFnGrid grid = tabulate(
      [&](const Point& z) { return phi(K * z) * f(z); }, opt.extent, opt.step);
  return inverse_fourier(grid, opt.n_max);
}

/// Schrödinger image through the dual route: Φ_* = |det K|^{-1} Ψ_{K̂, f̂}, with the
/// Heisenberg map Ψ_{K̂, f̂} evaluated on ρ by direct quadrature over nodes -K̂z.
/// Used as the reference for non-Gaussian inputs.
inline FockOperator reference_apply(const GaussianChannel& ch, const FockOperator& rho_in,
                                    const OracleOptions& opt) {
  detail::require_one_mode(ch);
  const DualChannel du = dual(ch);
  const Matrix Khat = du.channel.K;
  const CharacteristicFunction phi(rho_in.matrix);
  const auto f = noise_function(ch);
  const CharFnGrid grid = tabulate(
      [&](const Point& z) { return du.scale * phi(z) * f(Khat * z); }, opt.extent, opt.step);
  std::vector<Point> pts;
  std::vector<Complex> coeffs;
  detail::inversion_nodes(grid, [&](const Point& z) -> Point { return -(Khat * z); }, pts, coeffs);
  return FockOperator(opt.n_max, weyl_superposition(opt.n_max, pts, coeffs));
}

/// Max deviation on the interior block between the characteristic-function
/// reconstruction of Φ_*[ρ_in] and `reference`.
inline double verify_apply(const GaussianChannel& ch, const FockOperator& rho_in,
                           const FockOperator& reference, const OracleOptions& opt) {
  const FockOperator out = fock_apply(ch, rho_in, opt);
  return block_deviation(out.matrix, reference.matrix, opt.block);
}

/// General input: the reference is the dual-route quadrature.
inline double verify_apply(const GaussianChannel& ch, const FockOperator& rho_in,
                           const OracleOptions& opt) {
  return verify_apply(ch, rho_in, reference_apply(ch, rho_in, opt), opt);
}

/// Gaussian input: the reference is the number-basis form of apply(ch, state).
inline double verify_apply(const GaussianChannel& ch, const GaussianState& in,
                           const OracleOptions& opt) {
  detail::require_one_mode(ch);
  return verify_apply(ch, gaussian(in, opt.n_max), gaussian(apply(ch, in), opt.n_max), opt);
}

/// Compares Tr(Φ[τ] W(z)), with the Heisenberg map Φ = Φ_{K,l,μ} applied to the
/// trace-class τ by quadrature of its Fourier inversion, against
/// |det K|^{-1} φ_τ(K̂ z) f̂(z) built from the dual triple. Returns the largest
/// absolute discrepancy over the samples.
inline double verify_duality(const GaussianChannel& ch, const FockOperator& tau,
                             std::span<const Point> samples, const OracleOptions& opt) {
  detail::require_one_mode(ch);
  const DualChannel du = dual(ch);
  const CharacteristicFunction phi(tau.matrix);
  const auto f = noise_function(ch);
  const auto f_hat = noise_function(du.channel);
  const Matrix K = ch.K;

  // Φ[τ] = (2π)^{-1} ∫ φ_τ(z) Φ[W(-z)] d²z = (2π)^{-1} ∫ φ_τ(z) f(-z) W(-K z) d²z.
  const CharFnGrid grid = tabulate([&](const Point& z) { return phi(z) * f(Point(-z)); },
                                   opt.extent, opt.step);
  std::vector<Point> pts;
  std::vector<Complex> coeffs;
  detail::inversion_nodes(grid, [&](const Point& z) -> Point { return -(K * z); }, pts, coeffs);
  const CMatrix image = weyl_superposition(opt.n_max, pts, coeffs);
  const CharacteristicFunction phi_image(image);

  double worst = 0.0;
  for (const Point& z : samples) {
    const Complex lhs = phi_image(z);
    const Complex rhs = du.scale * phi(du.channel.K * z) * f_hat(z);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

/// Smallest eigenvalue of the Hermitian matrix f(z_r - z_s) exp((i/2) z_r^T Δ_K z_s).
template <typename F>
double sample_nonneg_definite(F&& f, const Matrix& delta_K, std::span<const Vector> points) {
  if (points.empty() || points.size() > 64)
    throw InvalidArgument("sample_nonneg_definite: between 1 and 64 points required");
  const Eigen::Index n = static_cast<Eigen::Index>(points.size());
  CMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index s = 0; s < n; ++s) {
      const Vector& zr = points[static_cast<std::size_t>(r)];
      const Vector& zs = points[static_cast<std::size_t>(s)];
      m(r, s) = f(Vector(zr - zs)) * std::polar(1.0, 0.5 * zr.dot(delta_K * zs));
    }
  m = (0.5 * (m + m.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

/// `count` points uniform in the disc of the given radius (or ball, for dim > 2
/// by rejection), drawn from `rng`.
inline std::vector<Vector> random_points(std::size_t count, Eigen::Index dim, double radius, Rng& rng) {
  std::vector<Vector> pts;
  pts.reserve(count);
  while (pts.size() < count) {
    Vector z(dim);
    for (Eigen::Index k = 0; k < dim; ++k) z(k) = rng.uniform(-radius, radius);
    if (z.norm() <= radius) pts.push_back(z);
  }
  return pts;
}

struct SamplingResult {
  double min_eigenvalue = 0.0;
  /// Attempt (0-based) at which the minimum was attained.
  int worst_attempt = -1;
};

/// Minimum of sample_nonneg_definite over `attempts` random point sets.
inline SamplingResult sampling_search(const GaussianChannel& ch, int attempts, std::size_t points,
                                      double radius, std::uint64_t seed) {
  const auto f = noise_function(ch);
  const Matrix dK = noise_form(ch).delta_K;
  Rng rng(seed);
  SamplingResult res{std::numeric_limits<double>::infinity(), -1};
  for (int a = 0; a < attempts; ++a) {
    const std::vector<Vector> pts = random_points(points, dK.rows(), radius, rng);
    const double v = sample_nonneg_definite(f, dK, pts);
    if (v < res.min_eigenvalue) res = {v, a};
  }
  return res;
}

}  // namespace gaussx::fock
