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

// Bosonic Gaussian channels (K, l, μ) acting as
//   W_B(z) -> W_A(K z) exp(i l^T z - z^T μ z / 2)
// in the Heisenberg picture: complete positivity, environment and dilation
// construction, complementary and dual channels, extremality.

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "gaussx/gaussian_state.hpp"
#include "gaussx/linalg.hpp"
#include "gaussx/symplectic.hpp"

namespace gaussx {

/// K is 2s_A x 2s_B, l has length 2s_B and μ is 2s_B x 2s_B. Complete
/// positivity is not enforced here; see validate_channel.
struct GaussianChannel {
  GaussianChannel(Matrix K_in, Vector l_in, Matrix mu_in)
      : K(std::move(K_in)), l(std::move(l_in)), mu(std::move(mu_in)) {
    if (K.rows() == 0 || K.cols() == 0 || K.rows() % 2 != 0 || K.cols() % 2 != 0)
      throw InvalidArgument("GaussianChannel: K must have positive even dimensions, got " +
                            shape_str(K.rows(), K.cols()));
    require_size(l, K.cols(), "GaussianChannel l");
    require_shape(mu, K.cols(), K.cols(), "GaussianChannel mu");
  }

  int s_A() const { return static_cast<int>(K.rows() / 2); }
  int s_B() const { return static_cast<int>(K.cols() / 2); }

  Matrix K;
  Vector l;
  Matrix mu;
};

/// Δ_K = Δ_B - K^T Δ_A K.
struct NoiseForm {
  Matrix delta_K;
  bool nondegenerate = false;
  double min_singular_value = 0.0;
};

inline NoiseForm noise_form(const GaussianChannel& ch, double tol = kDefaultTol) {
  NoiseForm nf;
  nf.delta_K = delta(ch.s_B()) - ch.K.transpose() * delta(ch.s_A()) * ch.K;
  const Vector sv = singular_values(nf.delta_K);
  nf.min_singular_value = sv(sv.size() - 1);
  // Measured against the cancellation scale ||Δ_B|| + ||K||², not ||Δ_K|| alone:
  // an identity-like K leaves only rounding in Δ_K, which is itself well conditioned.
  const double k_norm = ch.K.size() == 0 ? 0.0 : singular_values(ch.K)(0);
  nf.nondegenerate = nf.min_singular_value > tol * std::max(sv(0), 1.0 + k_norm * k_norm);
  return nf;
}

struct ChannelValidity {
  bool cp = false;
  bool nondegenerate = false;
  /// Smallest eigenvalue of μ - (i/2)Δ_K.
  double cp_margin = 0.0;
};

inline ChannelValidity validate_channel(const GaussianChannel& ch, double tol = kDefaultTol) {
  if (!is_symmetric(ch.mu, tol)) throw InvalidArgument("validate_channel: mu is not symmetric");
  const NoiseForm nf = noise_form(ch, tol);
  ChannelValidity v;
  v.cp_margin = min_eigenvalue_shifted(0.5 * (ch.mu + ch.mu.transpose()), nf.delta_K);
  v.cp = v.cp_margin >= -tol;
  v.nondegenerate = nf.nondegenerate;
  return v;
}

/// Noise function f(z) = exp(i l^T z - z^T μ z / 2) of the channel.
inline auto noise_function(const GaussianChannel& ch) {
  return [l = ch.l, mu = ch.mu](const Vector& z) {
    return std::exp(Complex(-0.5 * z.dot(mu * z), l.dot(z)));
  };
}

/// Environment mode D with K_D^T Δ_D K_D = Δ_K and the Gaussian state whose
/// characteristic function reproduces the noise: f(z) = φ_D(K_D z).
struct Environment {
  Matrix K_D;
  Matrix K_D_inverse;
  GaussianState state;
  /// max-norm of K_D^T Δ_D K_D - Δ_K.
  double factor_residual = 0.0;
  /// max-norm of Δ_B - K^T Δ_A K - K_D^T Δ_D K_D.
  double commutator_residual = 0.0;
};

namespace detail {

inline double relative_scale(const Matrix& m) { return std::max(1.0, max_abs(m)); }

}  // namespace detail

inline Environment environment_state(const GaussianChannel& ch, double tol = kDefaultTol) {
  const ChannelValidity v = validate_channel(ch, tol);
  if (!v.nondegenerate)
    throw Indeterminate(
        "indeterminate: Delta_K is degenerate, outside the nondegenerate setting where the "
        "environment state is defined");
  if (!v.cp) {
    std::ostringstream os;
    os << "channel is not completely positive (min eigenvalue of mu - (i/2) Delta_K is "
       << v.cp_margin << ")";
    throw NotCompletelyPositive(os.str());
  }

  const NoiseForm nf = noise_form(ch, tol);
  const SkewFactorization canon = skew_canonical_factor(nf.delta_K, tol);
  const Vector inv_root = detail::doubled(canon.pair_values).cwiseSqrt().cwiseInverse();

  Environment env{canon.factor, canon.orthogonal * inv_root.asDiagonal(),
                  GaussianState(Vector::Zero(ch.K.cols()), Matrix::Identity(ch.K.cols(), ch.K.cols()))};
  const Matrix mu = 0.5 * (ch.mu + ch.mu.transpose());
  Matrix alpha_D = env.K_D_inverse.transpose() * mu * env.K_D_inverse;
  alpha_D = (0.5 * (alpha_D + alpha_D.transpose())).eval();
  env.state = GaussianState(env.K_D_inverse.transpose() * ch.l, alpha_D);

  const Matrix dD = delta(ch.s_B());
  env.factor_residual = max_abs(env.K_D.transpose() * dD * env.K_D - nf.delta_K);
  env.commutator_residual = max_abs(dD - ch.K.transpose() * delta(ch.s_A()) * ch.K -
                                    env.K_D.transpose() * dD * env.K_D);
  const double margin = validity_margin(alpha_D);
  if (margin < -tol * detail::relative_scale(alpha_D)) {
    std::ostringstream os;
    os << "environment_state: alpha_D violates alpha_D >= (i/2) Delta_D (margin " << margin << ")";
    throw ResidualFailure(os.str());
  }
  return env;
}

enum class Extremality { extreme, not_extreme, indeterminate };

inline std::string_view to_string(Extremality e) {
  switch (e) {
    case Extremality::extreme:
      return "extreme";
    case Extremality::not_extreme:
      return "not_extreme";
    case Extremality::indeterminate:
      return "indeterminate";
  }
  return "?";
}

struct ExtremalityResult {
  Extremality verdict = Extremality::indeterminate;
  /// Purity of the environment state; absent when Δ_K is degenerate.
  std::optional<PurityReport> evidence;
  std::string reason;
};

/// A channel with nondegenerate Δ_K is extreme iff its environment state is pure,
/// i.e. iff its noise is minimal.
inline ExtremalityResult is_extreme(const GaussianChannel& ch, const PurityOptions& opt = {}) {
  ExtremalityResult out;
  std::optional<Environment> env;
  try {
    env.emplace(environment_state(ch, opt.tol));
  } catch (const Indeterminate& e) {
    out.reason = e.what();
    return out;
  }

  out.evidence = purity_report(env->state, opt);
  if (!out.evidence->consensus) {
    out.reason = "purity criteria disagree on the environment state";
    return out;
  }
  out.verdict = out.evidence->pure ? Extremality::extreme : Extremality::not_extreme;
  out.reason = out.evidence->pure ? "environment state is pure (minimal noise)"
                                  : "environment state is mixed (noise above minimal)";
  return out;
}

struct DilationResiduals {
  double factor = 0.0;          // K_D^T Δ_D K_D = Δ_K
  double commutator = 0.0;      // Δ_B = K^T Δ_A K + K_D^T Δ_D K_D
  double cross = 0.0;           // K^T Δ_A L + K_D^T Δ_D L_D = 0
  double environment = 0.0;     // L^T Δ_A L + L_D^T Δ_D L_D = Δ_E
  double symplectic = 0.0;      // T^T (Δ_A ⊕ Δ_D) T = Δ_B ⊕ Δ_E
  double det_L = 0.0;
  double env_margin = 0.0;      // min eigenvalue of α_D - (i/2)Δ_D
  double M_congruence = 0.0;    // L^T M L = Δ_E
};

/// Linear canonical transformation T = [[K, L], [K_D, L_D]] from the split A ⊕ D
/// to B ⊕ E, with E a copy of A, together with the environment state on D.
struct Dilation {
  Matrix K_D;
  Matrix L;
  Matrix L_D;
  Matrix T;
  Matrix M;
  GaussianState env_state;
  DilationResiduals residuals;
};

inline Dilation dilate(const GaussianChannel& ch, double tol = kDefaultTol) {
  const Environment env = environment_state(ch, tol);
  const int sA = ch.s_A(), sB = ch.s_B();
  const Matrix dA = delta(sA), dB = delta(sB);
  const Matrix& K = ch.K;

  // L_D = -(K_D^T Δ_D)^{-1} K^T Δ_A L from the vanishing cross block; substituting
  // into the E block gives L^T M L = Δ_E with K_D^{-1} Δ_D^{-1} K_D^{-T} = Δ_K^{-1}.
  const Matrix dD_inv = -dB;
  const Matrix M0 = dA + dA * K * env.K_D_inverse * dD_inv * env.K_D_inverse.transpose() *
                             K.transpose() * dA;
  const Matrix M = 0.5 * (M0 - M0.transpose());
  const SkewFactorization g = skew_canonical_factor(M, tol);
  const Vector inv_root = detail::doubled(g.pair_values).cwiseSqrt().cwiseInverse();
  const Matrix L = g.orthogonal * inv_root.asDiagonal();
  const Matrix L_D = -dD_inv * env.K_D_inverse.transpose() * K.transpose() * dA * L;

  const Eigen::Index nA = 2 * sA, nB = 2 * sB;
  Matrix T(nA + nB, nB + nA);
  T.topLeftCorner(nA, nB) = K;
  T.topRightCorner(nA, nA) = L;
  T.bottomLeftCorner(nB, nB) = env.K_D;
  T.bottomRightCorner(nB, nA) = L_D;

  Matrix in_form = Matrix::Zero(nA + nB, nA + nB);
  in_form.topLeftCorner(nA, nA) = dA;
  in_form.bottomRightCorner(nB, nB) = dB;
  Matrix out_form = Matrix::Zero(nB + nA, nB + nA);
  out_form.topLeftCorner(nB, nB) = dB;
  out_form.bottomRightCorner(nA, nA) = dA;

  Dilation d{env.K_D, L, L_D, T, M, env.state, {}};
  DilationResiduals& r = d.residuals;
  r.factor = env.factor_residual;
  r.commutator = env.commutator_residual;
  r.cross = max_abs(K.transpose() * dA * L + env.K_D.transpose() * dB * L_D);
  r.environment = max_abs(L.transpose() * dA * L + L_D.transpose() * dB * L_D - dA);
  r.symplectic = max_abs(T.transpose() * in_form * T - out_form);
  r.det_L = L.determinant();
  r.env_margin = validity_margin(env.state.covariance);
  r.M_congruence = max_abs(L.transpose() * M * L - dA);

  const double bound = tol * std::max(1.0, max_abs(T) * max_abs(T));
  auto require = [&](double value, const char* identity) {
    if (!(value <= bound)) {
      std::ostringstream os;
      os << "dilate: identity " << identity << " fails with residual " << value << " (bound "
         << bound << ")";
      throw ResidualFailure(os.str());
    }
  };
  require(r.factor, "K_D^T Delta_D K_D = Delta_K");
  require(r.commutator, "Delta_B = K^T Delta_A K + K_D^T Delta_D K_D");
  require(r.cross, "K^T Delta_A L + K_D^T Delta_D L_D = 0");
  require(r.environment, "L^T Delta_A L + L_D^T Delta_D L_D = Delta_E");
  require(r.symplectic, "T^T (Delta_A + Delta_D) T = Delta_B + Delta_E");
  require(r.M_congruence, "L^T M L = Delta_E");
  if (!(std::abs(r.det_L) > tol)) throw ResidualFailure("dilate: det L vanishes");
  if (r.env_margin < -tol * detail::relative_scale(env.state.covariance))
    throw ResidualFailure("dilate: alpha_D is not a valid covariance matrix");
  return d;
}

/// Channel to the environment E (a copy of A) built from a dilation:
/// (L, L_D^T l_D, L_D^T α_D L_D).
inline GaussianChannel complementary(const Dilation& d, double tol = kDefaultTol) {
  Matrix mu = d.L_D.transpose() * d.env_state.covariance * d.L_D;
  mu = (0.5 * (mu + mu.transpose())).eval();
  GaussianChannel out(d.L, d.L_D.transpose() * d.env_state.mean, mu);
  const ChannelValidity v = validate_channel(out, tol);
  if (!v.cp && v.cp_margin < -tol * detail::relative_scale(mu)) {
    std::ostringstream os;
    os << "complementary: result is not completely positive (margin " << v.cp_margin << ")";
    throw ResidualFailure(os.str());
  }
  return out;
}

inline GaussianChannel complementary(const GaussianChannel& ch, double tol = kDefaultTol) {
  return complementary(dilate(ch, tol), tol);
}

struct DualChannel {
  GaussianChannel channel;
  /// |det K|^{-1}.
  double scale;
};

/// (K^{-1}, -(K^{-1})^T l, (K^{-1})^T μ K^{-1}) with scale |det K|^{-1}.
inline DualChannel dual(const GaussianChannel& ch, double tol = kDefaultTol) {
  if (ch.K.rows() != ch.K.cols())
    throw InvalidArgument("duality undefined: K is not square (" +
                          shape_str(ch.K.rows(), ch.K.cols()) + ")");
  const Vector sv = singular_values(ch.K);
  if (!(sv(sv.size() - 1) > tol * sv(0))) throw SingularMatrix("duality undefined: K is singular");
  const Eigen::FullPivLU<Matrix> lu(ch.K);
  const Matrix Kinv = lu.inverse();
  Matrix mu = Kinv.transpose() * ch.mu * Kinv;
  mu = (0.5 * (mu + mu.transpose())).eval();
  return DualChannel{GaussianChannel(Kinv, -Kinv.transpose() * ch.l, mu),
                     1.0 / std::abs(lu.determinant())};
}

/// Schrödinger action: (l, α) -> (K^T l + l_ch, K^T α K + μ).
inline GaussianState apply(const GaussianChannel& ch, const GaussianState& in,
                           double tol = kDefaultTol) {
  if (in.mean.size() != ch.K.rows())
    throw InvalidArgument("apply: state has " + std::to_string(in.modes()) +
                          " mode(s), channel input has " + std::to_string(ch.s_A()));
  Matrix alpha = ch.K.transpose() * in.covariance * ch.K + ch.mu;
  alpha = (0.5 * (alpha + alpha.transpose())).eval();
  GaussianState out(ch.K.transpose() * in.mean + ch.l, alpha);
  if (is_symmetric(in.covariance, tol) && is_symmetric(ch.mu, tol) && validate_state(in, tol) &&
      validate_channel(ch, tol).cp) {
    const double margin = validity_margin(out.covariance);
    if (margin < -tol * detail::relative_scale(out.covariance))
      throw ResidualFailure("apply: completely positive channel produced an invalid state");
  }
  return out;
}

/// Channel A -> C that runs `first` (A -> B) and then `second` (B -> C) on states.
inline GaussianChannel compose(const GaussianChannel& first, const GaussianChannel& second) {
  if (first.K.cols() != second.K.rows())
    throw InvalidArgument("compose: output of the first channel has " +
                          std::to_string(first.s_B()) + " mode(s), input of the second has " +
                          std::to_string(second.s_A()));
  Matrix mu = second.K.transpose() * first.mu * second.K + second.mu;
  mu = (0.5 * (mu + mu.transpose())).eval();
  return GaussianChannel(first.K * second.K, second.K.transpose() * first.l + second.l, mu);
}

inline GaussianChannel identity_channel(int s) {
  if (s < 1) throw InvalidArgument("identity_channel: mode count must be positive");
  return GaussianChannel(Matrix::Identity(2 * s, 2 * s), Vector::Zero(2 * s),
                         Matrix::Zero(2 * s, 2 * s));
}

/// Pure-loss family K = sqrt(η) I, μ = (1 - η)(nbar + 1/2) I; minimal noise at nbar = 0.
inline GaussianChannel attenuator(double eta, double nbar = 0.0) {
  if (!(eta > 0.0 && eta < 1.0)) throw InvalidArgument("attenuator: transmissivity must lie in (0, 1)");
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) throw InvalidArgument("attenuator: nbar must be >= 0");
  return GaussianChannel(std::sqrt(eta) * Matrix::Identity(2, 2), Vector::Zero(2),
                         (1.0 - eta) * (nbar + 0.5) * Matrix::Identity(2, 2));
}

/// K = sqrt(g) I, μ = (g - 1)(nbar + 1/2) I.
inline GaussianChannel amplifier(double gain, double nbar = 0.0) {
  if (!(gain > 1.0) || !std::isfinite(gain)) throw InvalidArgument("amplifier: gain must exceed 1");
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) throw InvalidArgument("amplifier: nbar must be >= 0");
  return GaussianChannel(std::sqrt(gain) * Matrix::Identity(2, 2), Vector::Zero(2),
                         (gain - 1.0) * (nbar + 0.5) * Matrix::Identity(2, 2));
}

/// Additive classical noise K = I, μ = ν I. Δ_K vanishes for the whole family.
inline GaussianChannel classical_noise(double nu) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw InvalidArgument("classical_noise: nu must be >= 0");
  return GaussianChannel(Matrix::Identity(2, 2), Vector::Zero(2), nu * Matrix::Identity(2, 2));
}

enum class ChannelKind { attenuator, amplifier, classical_noise };

inline ChannelKind parse_channel_kind(std::string_view name) {
  if (name == "attenuator") return ChannelKind::attenuator;
  if (name == "amplifier") return ChannelKind::amplifier;
  if (name == "classical_noise") return ChannelKind::classical_noise;
  throw InvalidArgument("unknown channel kind '" + std::string(name) + "'");
}

/// attenuator(eta [, nbar]), amplifier(g [, nbar]), classical_noise(nu).
inline GaussianChannel catalog(ChannelKind kind, std::span<const double> params) {
  switch (kind) {
    case ChannelKind::attenuator:
    case ChannelKind::amplifier: {
      if (params.empty() || params.size() > 2)
        throw InvalidArgument("attenuator/amplifier take 1 or 2 parameters");
      const double nbar = params.size() == 2 ? params[1] : 0.0;
      return kind == ChannelKind::attenuator ? attenuator(params[0], nbar)
                                             : amplifier(params[0], nbar);
    }
    case ChannelKind::classical_noise:
      if (params.size() != 1) throw InvalidArgument("classical_noise takes 1 parameter");
      return classical_noise(params[0]);
  }
  throw InvalidArgument("catalog: unknown kind");
}

}  // namespace gaussx
