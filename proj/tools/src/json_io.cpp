// Copyright 2026 The majorbound Authors
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

#include "majorbound/cli/json_io.hpp"

#include <fstream>

namespace majorbound::cli {

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw DomainError("matrix must be a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw DomainError("matrix must be square");
    }
    for (Eigen::Index k = 0; k < n; ++k) {
      const Json& e = row[static_cast<std::size_t>(k)];
      if (e.is_number()) {
        m(i, k) = e.get<double>();
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m(i, k) = Complex(e[0].get<double>(), e[1].get<double>());
      } else {
        throw DomainError("matrix entry must be a number or [re, im]");
      }
    }
  }
  return m;
}

Json state_to_json(const DensityMatrix& rho) {
  return Json{{"dim", rho.dim()}, {"entries", matrix_to_json(rho.matrix())}};
}

DensityMatrix state_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries")) throw DomainError("state needs an \"entries\" field");
  const ComplexMatrix m = matrix_from_json(j.at("entries"));
  if (j.contains("dim") && j.at("dim").get<Eigen::Index>() != m.rows()) {
    throw DomainError("state \"dim\" does not match \"entries\"");
  }
  return DensityMatrix(m);
}

Json measurement_to_json(const Measurement& m) {
  Json out{{"label", m.label()}, {"elements", Json::array()}};
  for (const auto& e : m.elements()) out["elements"].push_back(matrix_to_json(e));
  if (m.has_operators()) {
    out["operators"] = Json::array();
    for (const auto& op : m.operators()) out["operators"].push_back(matrix_to_json(op));
  }
  return out;
}

Measurement measurement_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements")) {
    throw DomainError("measurement needs an \"elements\" field");
  }
  std::vector<ComplexMatrix> elements, operators;
  for (const auto& e : j.at("elements")) elements.push_back(matrix_from_json(e));
  if (j.contains("operators")) {
    for (const auto& op : j.at("operators")) operators.push_back(matrix_from_json(op));
  }
  return Measurement(j.value("label", std::string("measurement")), std::move(elements),
                     std::move(operators));
}

Json measurements_to_json(std::span<const Measurement> ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(measurement_to_json(m));
  return out;
}

std::vector<Measurement> measurements_from_json(const Json& j) {
  if (j.is_object() && j.contains("measurements")) return measurements_from_json(j.at("measurements"));
  if (j.is_object()) return {measurement_from_json(j)};
  if (!j.is_array() || j.empty()) throw DomainError("expected one or more measurements");
  std::vector<Measurement> ms;
  for (const auto& m : j) ms.push_back(measurement_from_json(m));
  return ms;
}

ProbVec prob_vec_from_json(const Json& j) {
  if (j.is_string()) return parse_prob_vec(j.get<std::string>());
  if (!j.is_array()) throw DomainError("probability vector must be an array or CSV string");
  std::vector<double> v;
  for (const auto& x : j) {
    if (!x.is_number()) throw DomainError("probability entries must be numbers");
    v.push_back(x.get<double>());
  }
  return ProbVec(std::move(v));
}

Json bound_to_json(const BoundResult& r, const std::optional<CommonEigenstate>& common) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json item{{"j", w.j}, {"value", w.value}, {"method", w.method}};
    if (w.state.dim() == 2) {
      const auto b = density_to_bloch(w.state);
      item["bloch"] = {b[0], b[1], b[2]};
    } else {
      item["state"] = state_to_json(w.state);
    }
    witnesses.push_back(std::move(item));
  }
  Json out{{"envelope", r.envelope.partial_sums},
           {"bound", r.bound.values()},
           {"witnesses", std::move(witnesses)},
           {"common_eigenstate", nullptr},
           {"converged", r.converged}};
  if (common) {
    out["common_eigenstate"] = state_to_json(DensityMatrix::from_pure(common->state));
    out["common_outcomes"] = common->outcomes;
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw DomainError(path + ": " + e.what());
  }
}

}  // namespace majorbound::cli
