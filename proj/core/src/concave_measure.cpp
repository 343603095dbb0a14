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

#include "majorbound/concave_measure.hpp"

#include <cmath>
#include <vector>

#include "majorbound/majorization.hpp"

namespace majorbound {

ConcaveMeasure ConcaveMeasure::from_entry_function(std::string name, EntryFunction f) {
  return ConcaveMeasure(std::move(name), [f = std::move(f)](std::span<const double> p) {
    double total = 0.0;
    for (double x : p) total += f(x);
    return total;
  });
}

ConcaveMeasure ConcaveMeasure::from_functional(std::string name, Functional F) {
  return ConcaveMeasure(std::move(name), std::move(F));
}

ConcaveMeasure ConcaveMeasure::shannon() {
  return from_functional("shannon", [](std::span<const double> p) { return shannon_entropy(p); });
}

ConcaveMeasure ConcaveMeasure::tsallis(double q) {
  if (!(q > 0.0)) throw DomainError("Tsallis index must be positive");
  return from_functional("tsallis:" + std::to_string(q),
                         [q](std::span<const double> p) { return tsallis_entropy(p, q); });
}

double ConcaveMeasure::normalized(const ProbVec& p) const {
  const ProbVec certain = ProbVec::certain(p.size());
  return (*this)(p) - (*this)(certain);
}

std::size_t concavity_violations(const ConcaveMeasure& F, std::size_t d, std::size_t trials,
                                 Rng& rng, double slack) {
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto draw = [&] {
    std::vector<double> v(d);
    double s = 0.0;
    for (double& x : v) s += (x = expo(rng));
    for (double& x : v) x /= s;
    return v;
  };
  std::size_t violations = 0;
  std::vector<double> mix(d);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto a = draw();
    const auto b = draw();
    const double w = unit(rng);
    for (std::size_t i = 0; i < d; ++i) mix[i] = w * a[i] + (1.0 - w) * b[i];
    if (F(mix) < w * F(a) + (1.0 - w) * F(b) - slack) ++violations;
  }
  return violations;
}

ConcaveMeasure measure_from_name(const std::string& name) {
  if (name == "shannon") return ConcaveMeasure::shannon();
  const std::string prefix = "tsallis:";
  if (name.rfind(prefix, 0) == 0) {
    try {
      std::size_t used = 0;
      const std::string rest = name.substr(prefix.size());
      const double q = std::stod(rest, &used);
      if (used != rest.size()) throw DomainError("bad Tsallis index");
      return ConcaveMeasure::tsallis(q);
    } catch (const std::logic_error&) {
      throw DomainError("malformed measure '" + name + "'");
    }
  }
  throw DomainError("unknown measure '" + name + "' (expected shannon or tsallis:<q>)");
}

}  // namespace majorbound
