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


// A walk through the extremality verdict for the one-mode catalogue: complete
// positivity, the environment state and its symplectic eigenvalue, the verdict,
// and the effect of adding noise on top of the minimal amount.

#include <cstdio>
#include <string>
#include <vector>

#include "gaussx/gaussian_channel.hpp"

int main() {
  using namespace gaussx;
  struct Entry {
    std::string name;
    GaussianChannel ch;
  };
  const std::vector<Entry> entries{
      {"attenuator(0.5)", attenuator(0.5)},
      {"attenuator(0.5, nbar=0.05)", attenuator(0.5, 0.05)},
      {"amplifier(2)", amplifier(2.0)},
      {"amplifier(2, nbar=1)", amplifier(2.0, 1.0)},
      {"classical_noise(1)", classical_noise(1.0)},
      // K = I for loss followed by matching gain, so Δ_K vanishes.
      {"attenuator(0.5) then amplifier(2)", compose(attenuator(0.5), amplifier(2.0))},
  };

  std::printf("%-36s %-4s %-10s %-12s %s\n", "channel", "cp", "Delta_K", "env d", "verdict");
  for (const Entry& e : entries) {
    const ChannelValidity v = validate_channel(e.ch);
    const ExtremalityResult r = is_extreme(e.ch);
    std::string d = "-";
    if (r.evidence) d = std::to_string(r.evidence->symplectic_eigenvalues(0));
    std::printf("%-36s %-4s %-10s %-12s %s\n", e.name.c_str(), v.cp ? "yes" : "no",
                v.nondegenerate ? "nondeg" : "degenerate", d.c_str(),
                std::string(to_string(r.verdict)).c_str());
  }

  const Dilation dil = dilate(attenuator(0.3));
  std::printf("\nattenuator(0.3) dilation: T^T (Delta_A + Delta_D) T residual %.3g, det L %.6f\n",
              dil.residuals.symplectic, dil.residuals.det_L);
  const GaussianChannel c = complementary(dil);
  std::printf("complementary channel: cp %s, verdict %s\n", validate_channel(c).cp ? "yes" : "no",
              std::string(to_string(is_extreme(c).verdict)).c_str());
  return 0;
}
