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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace majorbound {

/// Raised when a value violates a domain invariant (bad probability vector,
/// non-Hermitian state, dimension mismatch, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite probability vector.
///
/// Construction validates the entries: each must be >= -tol::kProb and the
/// total must be 1 within tol::kSum. Entries of magnitude below tol::kProb are
/// stored as exact zeros. Vectors of different lengths are compared as if
/// padded with trailing zeros.
class ProbVec {
 public:
  explicit ProbVec(std::vector<double> entries);
  ProbVec(std::initializer_list<double> entries);

  /// The deterministic vector (1, 0, ..., 0) of length d.
  static ProbVec certain(std::size_t d);
  /// The uniform vector of length d.
  static ProbVec uniform(std::size_t d);

  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  std::span<const double> entries() const noexcept { return entries_; }
  const std::vector<double>& values() const noexcept { return entries_; }

  /// Copy extended with zeros to length d (no-op when already >= d).
  ProbVec padded(std::size_t d) const;

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

 private:
  std::vector<double> entries_;
};

/// Parses "0.5,0.25,0.25" or "[0.5, 0.25, 0.25]".
ProbVec parse_prob_vec(const std::string& text);

std::string to_csv(const ProbVec& v);

}  // namespace majorbound
