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
#include <span>
#include <string_view>
#include <vector>

#include "majorbound/prob_vec.hpp"

namespace majorbound {

enum class MajorizationOrder {
  kStrictlyBelow,  // a is majorized by b and they are not equivalent
  kStrictlyAbove,
  kEquivalent,     // descending rearrangements agree
  kIncomparable,
};

std::string_view to_string(MajorizationOrder order);
MajorizationOrder order_from_string(std::string_view name);

/// Cumulative sums of a descending vector, with a leading 0.
///
/// `partial_sums[j]` is the sum of the j largest entries, so the vector has
/// d + 1 entries and ends at 1.
struct PrefixEnvelope {
  std::vector<double> partial_sums;

  std::size_t dimension() const noexcept {
    return partial_sums.empty() ? 0 : partial_sums.size() - 1;
  }
  /// partial_sums[i] - partial_sums[i-1] for i = 1..d.
  std::vector<double> increments() const;
};

ProbVec sort_descending(const ProbVec& v);

/// Prefix sums of v sorted descending and padded to length d.
PrefixEnvelope prefix_envelope(const ProbVec& v, std::size_t d);

/// Majorization comparison of a against b, padding the shorter with zeros.
/// Prefix sums within tol::kPrefix count as equal in both directions.
MajorizationOrder compare(const ProbVec& a, const ProbVec& b);

/// True iff v is strictly majorized by (1, 0, ..., 0).
bool is_uncertain(const ProbVec& v);

/// Outer (Kronecker) product; the first vector's index varies slowest.
ProbVec outer_product(std::span<const ProbVec> vs);

/// Pointwise minimum / maximum of the prefix envelopes, padded to the longest.
PrefixEnvelope lower_envelope(std::span<const ProbVec> vs);
PrefixEnvelope upper_envelope(std::span<const ProbVec> vs);

/// Greatest lower bound of the set under majorization.
ProbVec infimum(std::span<const ProbVec> vs);

/// Least upper bound of the set under majorization.
ProbVec supremum(std::span<const ProbVec> vs);

/// Makes a nonnegative sequence nonincreasing by replacing ascending runs
/// with their mean (pool-adjacent-violators). The total is preserved.
std::vector<double> flatten(std::span<const double> increments);

/// Differences an envelope; used for infima, which need no flattening.
ProbVec infimum_from_envelope(const PrefixEnvelope& envelope);
/// Differences then flattens an envelope.
ProbVec supremum_from_envelope(const PrefixEnvelope& envelope);

/// Shannon entropy in nats; 0 ln 0 = 0.
double shannon_entropy(std::span<const double> p);
/// Tsallis entropy (1 - sum p^q) / (q - 1); q = 1 falls back to Shannon.
double tsallis_entropy(std::span<const double> p, double q);

}  // namespace majorbound
