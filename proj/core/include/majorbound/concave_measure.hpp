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

#include <functional>
#include <span>
#include <string>

#include "majorbound/prob_vec.hpp"
#include "majorbound/sampling.hpp"

namespace majorbound {

/// A symmetric concave functional F on probability vectors.
///
/// Either built from a concave scalar f as F(p) = sum_i f(p_i), or supplied as
/// a whole-vector functional.
class ConcaveMeasure {
 public:
  using EntryFunction = std::function<double(double)>;
  using Functional = std::function<double(std::span<const double>)>;

  static ConcaveMeasure from_entry_function(std::string name, EntryFunction f);
  static ConcaveMeasure from_functional(std::string name, Functional F);

  /// f(x) = -x ln x.
  static ConcaveMeasure shannon();
  /// f(x) = (x - x^q) / (q - 1), q > 0.
  static ConcaveMeasure tsallis(double q);

  const std::string& name() const noexcept { return name_; }

  double operator()(std::span<const double> p) const { return functional_(p); }
  double operator()(const ProbVec& p) const { return functional_(p.entries()); }

  /// F[p] - F[(1, 0, ..., 0)], so a deterministic outcome scores 0.
  double normalized(const ProbVec& p) const;

 private:
  ConcaveMeasure(std::string name, Functional F)
      : name_(std::move(name)), functional_(std::move(F)) {}

  std::string name_;
  Functional functional_;
};

/// Checks F(t a + (1-t) b) >= t F(a) + (1-t) F(b) - slack on random chords of
/// d-dimensional probability vectors. Returns the number of violations.
std::size_t concavity_violations(const ConcaveMeasure& F, std::size_t d, std::size_t trials,
                                 Rng& rng, double slack = 1e-9);

/// Parses "shannon" or "tsallis:<q>".
ConcaveMeasure measure_from_name(const std::string& name);

}  // namespace majorbound
