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

// JSON documents for states, channels and analysis reports.
//
//   state:   {"s": int, "l": [2s reals], "alpha": [[2s reals] x 2s]}
//   channel: {"s_A": int, "s_B": int, "K": [[2s_B reals] x 2s_A],
//             "l": [2s_B reals], "mu": [[2s_B reals] x 2s_B]}
//
// Matrices are row-major and use the interleaved (q1, p1, ..., qs, ps) order.

#include <nlohmann/json.hpp>

#include <fstream>
#include <string>

#include "gaussx/gaussian_channel.hpp"
#include "gaussx/gaussian_state.hpp"

namespace gaussx::io {

using json = nlohmann::ordered_json;

inline json to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

inline json to_json(const Matrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

namespace detail {

inline const json& field(const json& doc, const char* key) {
  if (!doc.is_object()) throw InvalidArgument("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw InvalidArgument(std::string("missing field '") + key + "'");
  return *it;
}

inline double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw InvalidArgument(where + ": expected a number");
  return v.get<double>();
}

inline int mode_count(const json& doc, const char* key) {
  const json& v = field(doc, key);
  if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 1024)
    throw InvalidArgument(std::string("field '") + key + "' must be a positive integer");
  return v.get<int>();
}

}  // namespace detail

inline Vector vector_from_json(const json& v, Eigen::Index n, const std::string& what) {
  if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != n)
    throw InvalidArgument(what + ": expected an array of " + std::to_string(n) + " numbers");
  Vector out(n);
  for (Eigen::Index i = 0; i < n; ++i)
    out(i) = detail::number(v[static_cast<std::size_t>(i)], what);
  return out;
}

inline Matrix matrix_from_json(const json& v, Eigen::Index rows, Eigen::Index cols,
                               const std::string& what) {
  if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != rows)
    throw InvalidArgument(what + ": expected " + std::to_string(rows) + " rows");
  Matrix out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = v[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw InvalidArgument(what + ": row " + std::to_string(i) + " must hold " +
                            std::to_string(cols) + " numbers");
    for (Eigen::Index j = 0; j < cols; ++j)
      out(i, j) = detail::number(row[static_cast<std::size_t>(j)], what);
  }
  return out;
}

inline json state_to_json(const GaussianState& st) {
  json out;
  out["s"] = st.modes();
  out["l"] = to_json(st.mean);
  out["alpha"] = to_json(st.covariance);
  return out;
}

inline GaussianState state_from_json(const json& doc) {
  const int s = detail::mode_count(doc, "s");
  return GaussianState(vector_from_json(detail::field(doc, "l"), 2 * s, "l"),
                       matrix_from_json(detail::field(doc, "alpha"), 2 * s, 2 * s, "alpha"));
}

inline json channel_to_json(const GaussianChannel& ch) {
  json out;
  out["s_A"] = ch.s_A();
  out["s_B"] = ch.s_B();
  out["K"] = to_json(ch.K);
  out["l"] = to_json(ch.l);
  out["mu"] = to_json(ch.mu);
  return out;
}

inline GaussianChannel channel_from_json(const json& doc) {
  const int sA = detail::mode_count(doc, "s_A");
  const int sB = detail::mode_count(doc, "s_B");
  return GaussianChannel(matrix_from_json(detail::field(doc, "K"), 2 * sA, 2 * sB, "K"),
                         vector_from_json(detail::field(doc, "l"), 2 * sB, "l"),
                         matrix_from_json(detail::field(doc, "mu"), 2 * sB, 2 * sB, "mu"));
}

/// Parses a whole file; malformed JSON surfaces as InvalidArgument.
inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument("malformed JSON in '" + path + "': " + e.what());
  }
}

inline GaussianChannel read_channel(const std::string& path) { return channel_from_json(read_json_file(path)); }
inline GaussianState read_state(const std::string& path) { return state_from_json(read_json_file(path)); }

inline json purity_to_json(const PurityReport& rep) {
  json out;
  json conds = json::array();
  for (std::size_t k = 0; k < rep.verdicts.size(); ++k) {
    json c;
    c["condition"] = std::string(PurityReport::kConditionNames[k]);
    c["holds"] = rep.verdicts[k];
    c["residual"] = rep.residuals[k];
    conds.push_back(std::move(c));
  }
  out["conditions"] = std::move(conds);
  out["consensus"] = rep.consensus;
  out["pure"] = rep.pure;
  out["symplectic_eigenvalues"] = to_json(rep.symplectic_eigenvalues);
  if (rep.J) out["J"] = to_json(*rep.J);
  return out;
}

}  // namespace gaussx::io
