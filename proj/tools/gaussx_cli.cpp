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


// gaussx: command-line front end for the Gaussian channel toolkit.
//
// Every subcommand builds one ordered JSON report. --json prints it verbatim;
// otherwise it is rendered as indented text. Exit codes are listed in usage().

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "gaussx/fock.hpp"
#include "gaussx/gaussian_channel.hpp"
#include "gaussx/io.hpp"

namespace {

using namespace gaussx;
using io::json;

enum Exit : int {
  kExtreme = 0,
  kOk = 0,
  kNotExtreme = 1,
  kCheckFailed = 1,
  kNotCp = 2,
  kIndeterminate = 3,
  kResidualFailure = 4,
  kInputError = 64,
};

struct Options {
  double tol = kDefaultTol;
  double rank_tol = 1e-7;
  int nmax = 60;
  double extent = 6.0;
  double step = 0.05;
  bool json = false;
  std::uint64_t seed = 7;
};

// Tolerances the oracle checks are held to.
constexpr double kApplyTol = 1e-3;
constexpr double kDualityTol = 1e-6;
constexpr double kSamplingTol = 1e-6;
constexpr int kSamplingAttempts = 100;
constexpr std::size_t kSamplingPoints = 16;
constexpr double kSamplingRadius = 2.0;

// ---------------------------------------------------------------------------
// Text rendering of a report.

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string scalar(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return fmt(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool numeric_array(const json& v) {
  if (!v.is_array()) return false;
  for (const json& x : v)
    if (!x.is_number()) return false;
  return true;
}

bool numeric_matrix(const json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const json& row : v)
    if (!numeric_array(row)) return false;
  return true;
}

std::string row_text(const json& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += fmt(v[k].get<double>());
  }
  return out + "]";
}

void render(const json& v, int indent, std::ostream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = v.begin(); it != v.end(); ++it) {
    const json& x = it.value();
    const std::string key = v.is_object() ? it.key() : "-";
    if (numeric_matrix(x)) {
      os << pad << key << ":\n";
      for (const json& row : x) os << pad << "  " << row_text(row) << "\n";
    } else if (numeric_array(x)) {
      os << pad << key << ": " << row_text(x) << "\n";
    } else if (x.is_object() || x.is_array()) {
      os << pad << key << ":" << (x.empty() ? " (none)" : "") << "\n";
      render(x, indent + 2, os);
    } else {
      os << pad << key << ": " << scalar(x) << "\n";
    }
  }
}

void emit(const json& report, const Options& opt) {
  if (opt.json)
    std::cout << report.dump(2) << "\n";
  else
    render(report, 0, std::cout);
}

// ---------------------------------------------------------------------------
// Report fragments.

json dual_json(const GaussianChannel& ch, const Options& opt, json& warnings) {
  try {
    const DualChannel d = dual(ch, opt.tol);
    json out = io::channel_to_json(d.channel);
    out["scale"] = d.scale;
    return out;
  } catch (const Error& e) {
    warnings.push_back(e.what());
    return nullptr;
  }
}

json environment_json(const Environment& env) {
  json out;
  out["K_D"] = io::to_json(env.K_D);
  out["alpha_D"] = io::to_json(env.state.covariance);
  out["l_D"] = io::to_json(env.state.mean);
  out["symplectic_eigenvalues"] = io::to_json(symplectic_eigenvalues(env.state.covariance));
  json r;
  r["K_D^T Delta_D K_D = Delta_K"] = env.factor_residual;
  r["Delta_B = K^T Delta_A K + K_D^T Delta_D K_D"] = env.commutator_residual;
  r["min eig alpha_D - (i/2) Delta_D"] = validity_margin(env.state.covariance);
  out["residuals"] = std::move(r);
  return out;
}

json dilation_json(const Dilation& d) {
  json out;
  out["K_D"] = io::to_json(d.K_D);
  out["L"] = io::to_json(d.L);
  out["L_D"] = io::to_json(d.L_D);
  out["T"] = io::to_json(d.T);
  out["M"] = io::to_json(d.M);
  out["environment_state"] = io::state_to_json(d.env_state);
  const DilationResiduals& r = d.residuals;
  json res;
  res["K_D^T Delta_D K_D = Delta_K"] = r.factor;
  res["Delta_B = K^T Delta_A K + K_D^T Delta_D K_D"] = r.commutator;
  res["K^T Delta_A L + K_D^T Delta_D L_D = 0"] = r.cross;
  res["L^T Delta_A L + L_D^T Delta_D L_D = Delta_E"] = r.environment;
  res["T^T (Delta_A + Delta_D) T = Delta_B + Delta_E"] = r.symplectic;
  res["L^T M L = Delta_E"] = r.M_congruence;
  res["det L"] = r.det_L;
  res["min eig alpha_D - (i/2) Delta_D"] = r.env_margin;
  out["residuals"] = std::move(res);
  return out;
}

json header(const char* command, const Options& opt) {
  json out;
  out["command"] = command;
  json o;
  o["tol"] = opt.tol;
  o["rank_tol"] = opt.rank_tol;
  out["options"] = std::move(o);
  return out;
}

// ---------------------------------------------------------------------------
// Subcommands. Each returns the exit code.

int cmd_check(const std::string& path, const Options& opt) {
  const GaussianChannel ch = io::read_channel(path);
  json rep = header("check", opt);
  json warnings = json::array();
  rep["input"] = io::channel_to_json(ch);

  const ChannelValidity v = validate_channel(ch, opt.tol);
  const NoiseForm nf = noise_form(ch, opt.tol);
  rep["cp"] = v.cp;
  rep["cp_margin"] = v.cp_margin;
  json dk;
  dk["matrix"] = io::to_json(nf.delta_K);
  dk["nondegenerate"] = nf.nondegenerate;
  dk["min_singular_value"] = nf.min_singular_value;
  rep["delta_K"] = std::move(dk);

  int code = kIndeterminate;
  json env = nullptr;
  json extremality;
  if (!v.cp) {
    code = kNotCp;
    extremality["verdict"] = "not_cp";
    extremality["reason"] = "mu - (i/2) Delta_K is not positive semidefinite";
    extremality["purity"] = nullptr;
  } else {
    const PurityOptions popt{opt.tol, opt.rank_tol};
    const ExtremalityResult r = is_extreme(ch, popt);
    if (r.evidence) env = environment_json(environment_state(ch, opt.tol));
    extremality["verdict"] = std::string(to_string(r.verdict));
    extremality["reason"] = r.reason;
    extremality["purity"] = r.evidence ? io::purity_to_json(*r.evidence) : json(nullptr);
    if (r.verdict == Extremality::indeterminate) warnings.push_back(r.reason);
    code = r.verdict == Extremality::extreme       ? kExtreme
           : r.verdict == Extremality::not_extreme ? kNotExtreme
                                                   : kIndeterminate;
  }
  rep["environment"] = std::move(env);
  rep["extremality"] = std::move(extremality);
  rep["dual"] = dual_json(ch, opt, warnings);
  rep["warnings"] = std::move(warnings);
  rep["exit_code"] = code;
  emit(rep, opt);
  return code;
}

int cmd_dilate(const std::string& path, const Options& opt) {
  const GaussianChannel ch = io::read_channel(path);
  json rep = header("dilate", opt);
  rep["input"] = io::channel_to_json(ch);
  rep["dilation"] = dilation_json(dilate(ch, opt.tol));
  emit(rep, opt);
  return kOk;
}

int cmd_complement(const std::string& path, const Options& opt) {
  const GaussianChannel ch = io::read_channel(path);
  const Dilation d = dilate(ch, opt.tol);
  const GaussianChannel c = complementary(d, opt.tol);
  const ChannelValidity v = validate_channel(c, opt.tol);
  json rep = header("complement", opt);
  rep["input"] = io::channel_to_json(ch);
  rep["complementary"] = io::channel_to_json(c);
  rep["cp"] = v.cp;
  rep["cp_margin"] = v.cp_margin;
  rep["dilation_residuals"] = dilation_json(d)["residuals"];
  emit(rep, opt);
  return kOk;
}

int cmd_dual(const std::string& path, const Options& opt) {
  const GaussianChannel ch = io::read_channel(path);
  const DualChannel d = dual(ch, opt.tol);
  const DualChannel back = dual(d.channel, opt.tol);
  json rep = header("dual", opt);
  rep["input"] = io::channel_to_json(ch);
  json out = io::channel_to_json(d.channel);
  out["scale"] = d.scale;
  rep["dual"] = std::move(out);
  json inv;
  inv["K"] = max_abs(back.channel.K - ch.K);
  inv["l"] = max_abs(back.channel.l - ch.l);
  inv["mu"] = max_abs(back.channel.mu - ch.mu);
  inv["scale product - 1"] = d.scale * back.scale - 1.0;
  rep["involution_residuals"] = std::move(inv);
  emit(rep, opt);
  return kOk;
}

int cmd_apply(const std::string& channel_path, const std::string& state_path,
              const std::string& output, const Options& opt) {
  const GaussianChannel ch = io::read_channel(channel_path);
  const GaussianState in = io::read_state(state_path);
  if (!is_symmetric(in.covariance, opt.tol)) throw InvalidArgument("state covariance is not symmetric");
  if (!is_symmetric(ch.mu, opt.tol)) throw InvalidArgument("channel mu is not symmetric");
  const GaussianState out = apply(ch, in, opt.tol);
  json rep = header("apply", opt);
  rep["channel"] = io::channel_to_json(ch);
  rep["input_state"] = io::state_to_json(in);
  rep["cp"] = validate_channel(ch, opt.tol).cp;
  rep["input_valid"] = validate_state(in, opt.tol);
  rep["output_state"] = io::state_to_json(out);
  rep["output_valid"] = validate_state(out, opt.tol);
  rep["output_validity_margin"] = validity_margin(out.covariance);
  if (!output.empty()) {
    std::ofstream f(output);
    if (!f) throw InvalidArgument("cannot write '" + output + "'");
    f << io::state_to_json(out).dump(2) << "\n";
    rep["written_to"] = output;
  }
  emit(rep, opt);
  return kOk;
}

int cmd_compose(const std::string& first_path, const std::string& second_path, const Options& opt) {
  const GaussianChannel c = compose(io::read_channel(first_path), io::read_channel(second_path));
  std::cout << io::channel_to_json(c).dump(2) << "\n";
  (void)opt;
  return kOk;
}

int cmd_catalog(const std::string& kind, const std::vector<double>& params) {
  const GaussianChannel ch = catalog(parse_channel_kind(kind), params);
  std::cout << io::channel_to_json(ch).dump(2) << "\n";
  return kOk;
}

int cmd_verify_fock(const std::string& path, const Options& opt) {
  const GaussianChannel ch = io::read_channel(path);
  if (ch.s_A() != 1 || ch.s_B() != 1) throw InvalidArgument("oracle is one-mode only");
  fock::OracleOptions o;
  o.n_max = opt.nmax;
  o.extent = opt.extent;
  o.step = opt.step;
  if (o.n_max < 2) throw InvalidArgument("--nmax must be at least 2");
  fock::grid_points_per_axis(o.extent, o.step);

  json rep = header("verify-fock", opt);
  rep["options"]["nmax"] = o.n_max;
  rep["options"]["grid_extent"] = o.extent;
  rep["options"]["grid_step"] = o.step;
  rep["options"]["seed"] = opt.seed;
  rep["input"] = io::channel_to_json(ch);
  json warnings = json::array();
  bool pass = true;

  const bool cp = validate_channel(ch, opt.tol).cp;
  json applies = json::array();
  if (cp) {
    const std::vector<std::pair<const char*, GaussianState>> inputs{
        {"vacuum", vacuum_state()}, {"thermal(1)", thermal_state(1.0)}, {"squeezed(0.4)", squeezed_state(0.4)}};
    for (const auto& [name, st] : inputs) {
      const double r = fock::verify_apply(ch, st, o);
      json e;
      e["state"] = name;
      e["residual"] = r;
      e["tolerance"] = kApplyTol;
      e["pass"] = r <= kApplyTol;
      pass = pass && r <= kApplyTol;
      applies.push_back(std::move(e));
    }
  } else {
    warnings.push_back("channel is not completely positive: verify_apply skipped");
  }
  rep["verify_apply"] = std::move(applies);

  json dualities = json::array();
  const Vector sv = singular_values(ch.K);
  if (sv(1) > opt.tol * sv(0)) {
    std::vector<fock::Point> samples;
    for (int i = -2; i <= 2; ++i)
      for (int j = -2; j <= 2; ++j) samples.emplace_back(0.7 * i, 0.7 * j);
    const std::vector<std::pair<const char*, fock::FockOperator>> taus{
        {"vacuum", fock::vacuum(o.n_max)}, {"thermal(1)", fock::thermal(1.0, o.n_max)}};
    for (const auto& [name, tau] : taus) {
      const double r = fock::verify_duality(ch, tau, samples, o);
      json e;
      e["tau"] = name;
      e["samples"] = samples.size();
      e["residual"] = r;
      e["tolerance"] = kDualityTol;
      e["pass"] = r <= kDualityTol;
      pass = pass && r <= kDualityTol;
      dualities.push_back(std::move(e));
    }
  } else {
    warnings.push_back("K is singular: verify_duality skipped");
  }
  rep["verify_duality"] = std::move(dualities);

  const fock::SamplingResult s =
      fock::sampling_search(ch, kSamplingAttempts, kSamplingPoints, kSamplingRadius, opt.seed);
  json samp;
  samp["attempts"] = kSamplingAttempts;
  samp["points"] = kSamplingPoints;
  samp["radius"] = kSamplingRadius;
  samp["min_eigenvalue"] = s.min_eigenvalue;
  samp["worst_attempt"] = s.worst_attempt;
  samp["tolerance"] = -kSamplingTol;
  samp["pass"] = s.min_eigenvalue >= -kSamplingTol;
  pass = pass && s.min_eigenvalue >= -kSamplingTol;
  rep["sampling"] = std::move(samp);
  rep["warnings"] = std::move(warnings);
  rep["pass"] = pass;
  emit(rep, opt);
  return pass ? kOk : kCheckFailed;
}

const char* kFooter = R"(Exit codes:
  check        0 extreme, 1 cp but not extreme, 2 not cp, 3 indeterminate (Delta_K degenerate)
  verify-fock  0 every oracle residual within tolerance, 1 otherwise
  dilate, complement
               2 not cp, 3 Delta_K degenerate, 4 a dilation identity failed
  any          64 input error (unreadable or malformed file, bad parameters)

Composition order:
  gaussx compose a.json b.json  prints the channel that applies a to a state first and
  then b, i.e. K = K_a K_b, l = K_b^T l_a + l_b, mu = K_b^T mu_a K_b + mu_b.
)";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bosonic Gaussian channel analysis: complete positivity, dilations, extremality."};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--tol", opt.tol, "Residual tolerance")->capture_default_str();
  app.add_option("--rank-tol", opt.rank_tol, "Relative rank cliff for purity")->capture_default_str();
  app.add_option("--nmax", opt.nmax, "Fock truncation level")->capture_default_str();
  app.add_option("--grid-extent", opt.extent, "Half-width of the characteristic-function grid")
      ->capture_default_str();
  app.add_option("--grid-step", opt.step, "Grid spacing")->capture_default_str();
  app.add_flag("--json", opt.json, "Machine-readable JSON report");
  app.add_option("--seed", opt.seed, "Seed for randomized sampling")->capture_default_str();

  std::string channel, state, output, kind;
  std::vector<double> params;
  std::function<int()> run;

  auto* check = app.add_subcommand("check", "Complete positivity, environment and extremality");
  check->add_option("channel", channel, "Channel JSON file")->required();
  check->callback([&] { run = [&] { return cmd_check(channel, opt); }; });

  auto* dil = app.add_subcommand("dilate", "Linear canonical transformation T and environment state");
  dil->add_option("channel", channel, "Channel JSON file")->required();
  dil->callback([&] { run = [&] { return cmd_dilate(channel, opt); }; });

  auto* comp = app.add_subcommand("complement", "Complementary channel to the environment");
  comp->add_option("channel", channel, "Channel JSON file")->required();
  comp->callback([&] { run = [&] { return cmd_complement(channel, opt); }; });

  auto* du = app.add_subcommand("dual", "Dual triple and scale |det K|^-1");
  du->add_option("channel", channel, "Channel JSON file")->required();
  du->callback([&] { run = [&] { return cmd_dual(channel, opt); }; });

  auto* ap = app.add_subcommand("apply", "Output state of a channel");
  ap->add_option("channel", channel, "Channel JSON file")->required();
  ap->add_option("state", state, "State JSON file")->required();
  ap->add_option("-o,--output", output, "Write the output state JSON here");
  ap->callback([&] { run = [&] { return cmd_apply(channel, state, output, opt); }; });

  std::string second;
  auto* co = app.add_subcommand("compose", "Channel running the first file's channel, then the second's");
  co->add_option("first", channel, "Channel applied first")->required();
  co->add_option("second", second, "Channel applied second")->required();
  co->callback([&] { run = [&] { return cmd_compose(channel, second, opt); }; });

  auto* cat = app.add_subcommand("catalog", "Emit a standard one-mode channel as JSON");
  cat->add_option("kind", kind, "attenuator | amplifier | classical_noise")->required();
  cat->add_option("params", params, "attenuator ETA [NBAR] | amplifier G [NBAR] | classical_noise NU");
  cat->callback([&] { run = [&] { return cmd_catalog(kind, params); }; });

  auto* vf = app.add_subcommand("verify-fock", "Truncated Fock-space oracle checks (one mode)");
  vf->add_option("channel", channel, "Channel JSON file")->required();
  vf->callback([&] { run = [&] { return cmd_verify_fock(channel, opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    return run();
  } catch (const NotCompletelyPositive& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotCp;
  } catch (const Indeterminate& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIndeterminate;
  } catch (const ResidualFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResidualFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
