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


// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Tolerances and sweep sizes are fixed here and are not configurable.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gaussx/fock.hpp"
#include "support/random.hpp"

namespace {

using namespace gaussx;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// AC1 -----------------------------------------------------------------------
Outcome ac1() {
  constexpr double kTol = 1e-9;
  constexpr double kTimeLimit = 5.0;
  const auto t0 = Clock::now();
  Rng rng(101);
  double worst = 0.0;
  int count = 0;
  for (Eigen::Index n : {2, 4, 8})
    for (int k = 0; k < 167 && count < 500; ++k, ++count) {
      const Matrix A = testing::random_nondegenerate_antisymmetric(n, rng);
      const SkewFactorization f = skew_canonical_factor(A);
      const double r = max_abs(f.factor.transpose() * delta(static_cast<int>(n / 2)) * f.factor - A) / max_abs(A);
      worst = std::max(worst, r);
    }
  const double t = seconds_since(t0);
  return {worst <= kTol && t < kTimeLimit && count == 500,
          "skew canonical factorization, " + std::to_string(count) + " matrices (dims 2,4,8): max ||F^T D F - A||/||A|| " +
              sci(worst) + " (tol " + sci(kTol) + "), " + fixed(t) + " s (limit 5 s)"};
}

// AC2 -----------------------------------------------------------------------
Outcome ac2() {
  constexpr double kTol = 1e-8;
  Rng rng(202);
  double recover = 0.0, congruence = 0.0;
  for (int k = 0; k < 500; ++k) {
    const int s = 1 + k % 4;
    const Matrix S = random_symplectic(s, testing::next_seed(rng));
    Vector d = testing::random_spectrum(s, rng, 3.0);
    std::sort(d.data(), d.data() + d.size());
    const Matrix alpha = testing::covariance_from(S, d);
    recover = std::max(recover, (williamson(alpha).d - d).cwiseAbs().maxCoeff());
    const Matrix S2 = random_symplectic(s, testing::next_seed(rng));
    const Vector a = symplectic_eigenvalues(alpha);
    const Vector b = symplectic_eigenvalues(S2.transpose() * alpha * S2);
    congruence = std::max(congruence, (a - b).cwiseAbs().maxCoeff());
  }
  return {recover <= kTol && congruence <= kTol,
          "Williamson, 500 covariances (s = 1..4): recovery error " + sci(recover) + ", congruence drift " +
              sci(congruence) + " (tol " + sci(kTol) + ")"};
}

// AC3 -----------------------------------------------------------------------
Outcome ac3() {
  Rng rng(303);
  int disagreements = 0, misjudged = 0;
  for (int k = 0; k < 500; ++k) {
    const int s = 1 + k % 4;
    const bool pure = k % 2 == 0;
    const PurityReport r = purity_report(testing::random_state(s, rng, pure));
    if (!r.consensus) ++disagreements;
    if (r.pure != pure) ++misjudged;
  }
  return {disagreements == 0 && misjudged == 0,
          "purity consensus, 500 states (250 pure, 250 mixed, s = 1..4): " + std::to_string(disagreements) +
              " disagreements, " + std::to_string(misjudged) + " wrong verdicts (allowed 0)"};
}

// AC4 -----------------------------------------------------------------------
Outcome ac4() {
  constexpr double kTol = 1e-8;
  constexpr double kDetFloor = 1e-9;
  constexpr double kTimeLimit = 10.0;
  const auto t0 = Clock::now();
  Rng rng(404);
  double worst = 0.0, min_det = std::numeric_limits<double>::infinity();
  int failures = 0;
  auto sweep = [&](int sA, int sB, int n) {
    for (int k = 0; k < n; ++k) {
      try {
        const Dilation d = dilate(testing::random_channel(sA, sB, rng, k % 2 == 0));
        const DilationResiduals& r = d.residuals;
        worst = std::max({worst, r.factor, r.commutator, r.cross, r.environment, r.symplectic, r.M_congruence,
                          std::max(0.0, -r.env_margin)});
        min_det = std::min(min_det, std::abs(r.det_L));
      } catch (const Error&) {
        ++failures;
      }
    }
  };
  sweep(1, 1, 100);
  sweep(2, 2, 100);
  sweep(2, 1, 50);
  const double t = seconds_since(t0);
  return {failures == 0 && worst <= kTol && min_det > kDetFloor && t < kTimeLimit,
          "dilation contract, 200 square + 50 rectangular channels: max residual " + sci(worst) + " (tol " +
              sci(kTol) + "), min |det L| " + sci(min_det) + ", " + std::to_string(failures) + " aborted, " +
              fixed(t) + " s (limit 10 s)"};
}

// AC5 -----------------------------------------------------------------------
Outcome ac5() {
  int wrong = 0, total = 0;
  auto expect = [&](const GaussianChannel& ch, Extremality e) {
    ++total;
    if (is_extreme(ch).verdict != e) ++wrong;
  };
  const std::vector<double> noise{0.05, 0.1, 0.5, 1.0, 2.0};
  for (int k = 1; k <= 9; ++k) {
    const double eta = 0.1 * k;
    expect(attenuator(eta), Extremality::extreme);
    for (double n : noise) expect(attenuator(eta, n), Extremality::not_extreme);
  }
  for (double g : {1.5, 2.0, 4.0}) {
    expect(amplifier(g), Extremality::extreme);
    for (double n : noise) expect(amplifier(g, n), Extremality::not_extreme);
  }
  return {wrong == 0, "extremality verdicts, " + std::to_string(total) + " catalogue channels: " +
                          std::to_string(wrong) + " misclassified (allowed 0)"};
}

// AC6 -----------------------------------------------------------------------
Outcome ac6() {
  constexpr double kTol = 1e-6;
  constexpr double kInvolutionTol = 1e-12;
  const fock::OracleOptions opt;
  std::vector<fock::Point> samples;  // 25 points with |z| <= 2
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j) samples.emplace_back(0.7 * i, 0.7 * j);
  double worst = 0.0;
  for (const GaussianChannel& ch : {attenuator(0.5), amplifier(2.0)})
    for (const fock::FockOperator& tau : {fock::vacuum(opt.n_max), fock::thermal(1.0, opt.n_max)})
      worst = std::max(worst, fock::verify_duality(ch, tau, samples, opt));

  Rng rng(606);
  double involution = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int s = 1 + k % 3;
    const GaussianChannel ch = testing::random_channel(s, s, rng, k % 2 == 0);
    const DualChannel d1 = dual(ch);
    const DualChannel d2 = dual(d1.channel);
    const double scale = std::max(1.0, max_abs(ch.mu));
    involution = std::max({involution, max_abs(d2.channel.K - ch.K), max_abs(d2.channel.l - ch.l),
                           max_abs(d2.channel.mu - ch.mu) / scale, std::abs(d1.scale * d2.scale - 1.0)});
  }
  return {worst <= kTol && involution <= kInvolutionTol,
          "duality, attenuator/amplifier x vacuum/thermal(1), 25 samples: max error " + sci(worst) + " (tol " +
              sci(kTol) + "); dual(dual) drift over 100 channels " + sci(involution) + " (tol " +
              sci(kInvolutionTol) + ")"};
}

// AC7 -----------------------------------------------------------------------
Outcome ac7() {
  constexpr double kTol = 1e-3;
  constexpr double kTimeLimit = 60.0;
  const auto t0 = Clock::now();
  fock::OracleOptions opt;
  opt.n_max = 60;
  opt.extent = 6.0;
  opt.step = 0.05;
  double worst = 0.0;
  for (const GaussianChannel& ch : {attenuator(0.5), amplifier(2.0), classical_noise(0.5)})
    for (const GaussianState& st : {vacuum_state(), thermal_state(1.0), squeezed_state(0.4)})
      worst = std::max(worst, fock::verify_apply(ch, st, opt));
  const double t = seconds_since(t0);
  return {worst <= kTol && t < kTimeLimit,
          "channel action oracle, catalogue x {vacuum, thermal(1), squeezed(0.4)} at n_max 60, extent 6, "
          "step 0.05: max residual " + sci(worst) + " (tol " + sci(kTol) + "), " + fixed(t) + " s (limit 60 s)"};
}

// AC8 -----------------------------------------------------------------------
Outcome ac8() {
  constexpr double kCpFloor = -1e-6;
  constexpr double kCatchThreshold = -1e-3;
  constexpr int kAttempts = 100;
  constexpr std::size_t kPoints = 16;
  constexpr double kRadius = 2.0;
  double cp_min = std::numeric_limits<double>::infinity();
  Rng rng(808);
  std::vector<GaussianChannel> cp{attenuator(0.5), amplifier(2.0), classical_noise(0.5), attenuator(0.3, 1.0)};
  for (int k = 0; k < 4; ++k) cp.push_back(testing::random_channel(1, 1, rng, k % 2 == 0));
  for (std::size_t k = 0; k < cp.size(); ++k)
    cp_min = std::min(cp_min, fock::sampling_search(cp[k], kAttempts, kPoints, kRadius, 1000 + k).min_eigenvalue);
  const GaussianChannel sub(std::sqrt(0.5) * Matrix::Identity(2, 2), Vector::Zero(2), 0.1 * Matrix::Identity(2, 2));
  const fock::SamplingResult caught = fock::sampling_search(sub, kAttempts, kPoints, kRadius, 7);
  return {cp_min >= kCpFloor && caught.min_eigenvalue < kCatchThreshold,
          "Delta_K-nonnegative sampling, 100 sets of 16 points: cp minimum " + sci(cp_min) + " over " +
              std::to_string(cp.size()) + " channels (floor " + sci(kCpFloor) + "); sub-minimal attenuator reaches " +
              sci(caught.min_eigenvalue) + " at attempt " + std::to_string(caught.worst_attempt) + " (needs < " +
              sci(kCatchThreshold) + ")"};
}

// AC9 -----------------------------------------------------------------------
Outcome ac9() {
  constexpr double kTol = 1e-3;
  constexpr double kExtent = 10.0;  // see README: the default extent 6 truncates squeezed(0.6)
  constexpr double kStep = 0.05;
  constexpr int kN = 60;
  const std::vector<std::pair<const char*, fock::FockOperator>> states{
      {"vacuum", fock::vacuum(kN)},
      {"thermal(1)", fock::thermal(1.0, kN)},
      {"squeezed(0.6)", fock::squeezed(0.6, kN)},
      {"coherent(1,0)", fock::coherent(1.0, 0.0, kN)},
      {"|1>", fock::number_state(1, kN)}};
  double worst = 0.0;
  std::string per;
  for (const auto& [name, rho] : states) {
    const fock::CharacteristicFunction phi(rho.matrix);
    const fock::CharFnGrid g = fock::tabulate([&](const fock::Point& z) { return phi(z); }, kExtent, kStep);
    const double e = fock::block_deviation(fock::inverse_fourier(g, kN).matrix, rho.matrix, 10);
    worst = std::max(worst, e);
    per += std::string(per.empty() ? "" : ", ") + name + " " + sci(e);
  }
  return {worst <= kTol, "inversion round trip on the 10x10 block, extent 10, step 0.05: " + per + " (tol " +
                             sci(kTol) + ")"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}};
  int failed = 0;
  for (const auto& [id, fn] : criteria) {
    Outcome o{false, ""};
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %s  %s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
