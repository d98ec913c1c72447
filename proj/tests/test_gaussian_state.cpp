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


#include <cmath>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "gaussx/gaussian_state.hpp"
#include "support/random.hpp"

namespace gaussx {
namespace test_gaussian_state {

using Catch::Matchers::WithinAbs;

static bool all_verdicts(const PurityReport& r, bool value) {
  for (bool v : r.verdicts)
    if (v != value) return false;
  return true;
}

SCENARIO("State validity") {
  const Vector l = Vector::Zero(2);
  CHECK(validate_state(l, 0.5 * Matrix::Identity(2, 2)));
  CHECK_FALSE(validate_state(l, 0.25 * Matrix::Identity(2, 2)));
  CHECK(validate_state(l, 2.0 * Matrix::Identity(2, 2)));
  // ¼I - (i/2)Δ has eigenvalues ¼ ± ½.
  CHECK_THAT(validity_margin(0.25 * Matrix::Identity(2, 2)), WithinAbs(-0.25, 1e-14));
  CHECK_THAT(validity_margin(2.0 * Matrix::Identity(2, 2)), WithinAbs(1.5, 1e-14));

  WHEN("the covariance is not symmetric") {
    Matrix a = 0.5 * Matrix::Identity(2, 2);
    a(0, 1) = 0.1;
    REQUIRE_THROWS_AS(validate_state(l, a), InvalidArgument);
  }
  WHEN("dimensions disagree") {
    REQUIRE_THROWS_AS(validate_state(Vector::Zero(3), 0.5 * Matrix::Identity(2, 2)), InvalidArgument);
    REQUIRE_THROWS_AS(GaussianState(Vector::Zero(2), Matrix::Identity(4, 4)), InvalidArgument);
    REQUIRE_THROWS_AS(GaussianState(Vector::Zero(3), Matrix::Identity(3, 3)), InvalidArgument);
  }
  WHEN("a valid covariance is increased") {
    Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
      const int s = 1 + trial % 3;
      const Matrix alpha = testing::random_pure_covariance(s, rng);
      const Matrix g = rng.uniform_matrix(2 * s, 2 * s, -1.0, 1.0);
      const Matrix beta = alpha + g * g.transpose();
      CHECK(validate_state(Vector::Zero(2 * s), alpha));
      CHECK(validate_state(Vector::Zero(2 * s), beta));
    }
  }
}

SCENARIO("Purity report") {
  GIVEN("vacuum") {
    const PurityReport r = purity_report(vacuum_state());
    CHECK(all_verdicts(r, true));
    CHECK(r.consensus);
    CHECK(r.pure);
    REQUIRE(r.J.has_value());
    CHECK(max_abs(*r.J * *r.J + Matrix::Identity(2, 2)) < 1e-12);
  }
  GIVEN("squeezed vacuum r = 0.6") {
    const PurityReport r = purity_report(squeezed_state(0.6));
    CHECK(all_verdicts(r, true));
    CHECK(r.pure);
  }
  GIVEN("thermal alpha = I") {
    const PurityReport r = purity_report(thermal_state(0.5));
    CHECK(all_verdicts(r, false));
    CHECK(r.consensus);
    CHECK_FALSE(r.pure);
    CHECK_THAT(r.symplectic_eigenvalues(0), WithinAbs(1.0, 1e-12));
    CHECK_FALSE(r.J.has_value());
    CHECK(r.residuals[2] == 2.0);
  }
  GIVEN("an invalid covariance") {
    REQUIRE_THROWS_AS(purity_report(GaussianState(Vector::Zero(2), 0.25 * Matrix::Identity(2, 2))),
                      InvalidArgument);
  }
  GIVEN("random pure and mixed states") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
      const int s = 1 + trial % 4;
      const bool pure = trial % 2 == 0;
      const GaussianState st = testing::random_state(s, rng, pure);
      const PurityReport r = purity_report(st);
      INFO("trial " << trial << " s " << s);
      CHECK(r.consensus);
      CHECK(r.pure == pure);
      if (pure) {
        REQUIRE(r.J.has_value());
        CHECK(max_abs(*r.J * *r.J + Matrix::Identity(2 * s, 2 * s)) <= 1e-8);
        CHECK(max_abs(-0.5 * delta(s) * *r.J - st.covariance) <= 1e-8);
      }
      // Symplectic congruence leaves the verdict unchanged.
      const Matrix S = random_symplectic(s, testing::next_seed(rng));
      const PurityReport r2 = purity_report(GaussianState(st.mean, S.transpose() * st.covariance * S));
      CHECK(r2.consensus);
      CHECK(r2.pure == r.pure);
    }
  }
  GIVEN("products of a pure and a mixed mode") {
    const PurityReport r = purity_report(direct_sum(vacuum_state(), thermal_state(1.0)));
    CHECK(r.consensus);
    CHECK_FALSE(r.pure);
    CHECK_THAT(r.symplectic_eigenvalues(0), WithinAbs(0.5, 1e-12));
    CHECK_THAT(r.symplectic_eigenvalues(1), WithinAbs(1.5, 1e-12));
  }
  GIVEN("a slightly mixed state and a coarse rank cliff") {
    // d = 1/2 + 1e-6: the residual tests see mixedness at tol 1e-9...
    const GaussianState st(Vector::Zero(2), (0.5 + 1e-6) * Matrix::Identity(2, 2));
    const PurityReport fine = purity_report(st);
    CHECK(fine.consensus);
    CHECK_FALSE(fine.pure);
    // ...while a rank cliff of 1e-5 relative sees rank s, so the criteria disagree.
    PurityOptions coarse;
    coarse.rank_tol = 1e-5;
    const PurityReport r = purity_report(st, coarse);
    CHECK(r.verdicts[2]);
    CHECK_FALSE(r.consensus);
    CHECK_FALSE(r.pure);
  }
}

SCENARIO("State catalogue") {
  CHECK(make_state(StateKind::vacuum, {}).covariance == 0.5 * Matrix::Identity(2, 2));
  const std::vector<double> zero{0.0};
  CHECK(make_state(StateKind::thermal, zero).covariance == vacuum_state().covariance);
  CHECK(make_state(StateKind::squeezed, zero).covariance == vacuum_state().covariance);
  const std::vector<double> qp{0.3, -1.2};
  const GaussianState c = make_state(StateKind::coherent, qp);
  CHECK(c.mean == Eigen::Vector2d(0.3, -1.2));
  CHECK(c.covariance == 0.5 * Matrix::Identity(2, 2));
  const std::vector<double> r{0.4};
  const GaussianState sq = make_state(StateKind::squeezed, r);
  CHECK_THAT(sq.covariance(0, 0), WithinAbs(0.5 * std::exp(0.8), 1e-15));
  CHECK_THAT(sq.covariance(1, 1), WithinAbs(0.5 * std::exp(-0.8), 1e-15));
  const std::vector<double> n{2.0};
  CHECK(make_state(StateKind::thermal, n).covariance == 2.5 * Matrix::Identity(2, 2));

  CHECK(parse_state_kind("squeezed") == StateKind::squeezed);
  REQUIRE_THROWS_AS(parse_state_kind("cat"), InvalidArgument);
  const std::vector<double> neg{-0.1};
  REQUIRE_THROWS_AS(make_state(StateKind::thermal, neg), InvalidArgument);
  REQUIRE_THROWS_AS(make_state(StateKind::coherent, r), InvalidArgument);
  REQUIRE_THROWS_AS(make_state(StateKind::vacuum, r), InvalidArgument);
}

}  // namespace test_gaussian_state
}  // namespace gaussx
