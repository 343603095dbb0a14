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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "majorbound/optimal_measurement.hpp"
#include "majorbound/uncertainty_bounds.hpp"

namespace majorbound::cli {

using Json = nlohmann::ordered_json;

// Matrices are [[[re, im], ...], ...]; plain real entries are accepted on input.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const Json& j);

Json measurement_to_json(const Measurement& m);
Measurement measurement_from_json(const Json& j);

Json measurements_to_json(std::span<const Measurement> ms);
/// Accepts a single measurement object, an array of them, or an object with
/// a "measurements" array.
std::vector<Measurement> measurements_from_json(const Json& j);

ProbVec prob_vec_from_json(const Json& j);

Json bound_to_json(const BoundResult& r, const std::optional<CommonEigenstate>& common);

/// Parses a file; throws DomainError with the path on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace majorbound::cli
