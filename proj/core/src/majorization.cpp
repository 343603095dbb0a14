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

#include "majorbound/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "majorbound/tolerances.hpp"

namespace majorbound {

std::string_view to_string(MajorizationOrder order) {
  switch (order) {
    case MajorizationOrder::kStrictlyBelow: return "StrictlyBelow";
    case MajorizationOrder::kStrictlyAbove: return "StrictlyAbove";
    case MajorizationOrder::kEquivalent: return "Equivalent";
    case MajorizationOrder::kIncomparable: return "Incomparable";
  }
  return "Incomparable";
}

MajorizationOrder order_from_string(std::string_view name) {
  for (auto o : {MajorizationOrder::kStrictlyBelow, MajorizationOrder::kStrictlyAbove,
                 MajorizationOrder::kEquivalent, MajorizationOrder::kIncomparable}) {
    if (to_string(o) == name) return o;
  }
  throw DomainError("unknown majorization order '" + std::string(name) + "'");
}

std::vector<double> PrefixEnvelope::increments() const {
  std::vector<double> out;
  if (partial_sums.size() < 2) return out;
  out.reserve(partial_sums.size() - 1);
  for (std::size_t i = 1; i < partial_sums.size(); ++i) {
    out.push_back(partial_sums[i] - partial_sums[i - 1]);
  }
  return out;
}

ProbVec sort_descending(const ProbVec& v) {
  std::vector<double> sorted = v.values();
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return ProbVec(std::move(sorted));
}

PrefixEnvelope prefix_envelope(const ProbVec& v, std::size_t d) {
  std::vector<double> sorted = v.values();
  sorted.resize(std::max(d, sorted.size()), 0.0);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  PrefixEnvelope env;
  env.partial_sums.resize(sorted.size() + 1, 0.0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    env.partial_sums[i + 1] = env.partial_sums[i] + sorted[i];
  }
  return env;
}

MajorizationOrder compare(const ProbVec& a, const ProbVec& b) {
  const std::size_t d = std::max(a.size(), b.size());
  const auto pa = prefix_envelope(a, d).partial_sums;
  const auto pb = prefix_envelope(b, d).partial_sums;
  bool a_below = true;
  bool b_below = true;
  for (std::size_t j = 1; j <= d; ++j) {
    const double diff = pa[j] - pb[j];
    if (diff > tol::kPrefix) a_below = false;
    if (diff < -tol::kPrefix) b_below = false;
  }
  if (a_below && b_below) return MajorizationOrder::kEquivalent;
  if (a_below) return MajorizationOrder::kStrictlyBelow;
  if (b_below) return MajorizationOrder::kStrictlyAbove;
  return MajorizationOrder::kIncomparable;
}

bool is_uncertain(const ProbVec& v) {
  return compare(v, ProbVec::certain(v.size())) == MajorizationOrder::kStrictlyBelow;
}

ProbVec outer_product(std::span<const ProbVec> vs) {
  if (vs.empty()) throw DomainError("outer product of an empty list");
  std::vector<double> acc = vs.front().values();
  for (std::size_t k = 1; k < vs.size(); ++k) {
    const auto& next = vs[k];
    std::vector<double> prod;
    prod.reserve(acc.size() * next.size());
    for (double x : acc) {
      for (double y : next) prod.push_back(x * y);
    }
    acc = std::move(prod);
  }
  return ProbVec(std::move(acc));
}

namespace {

template <typename Pick>
PrefixEnvelope combine_envelopes(std::span<const ProbVec> vs, Pick pick) {
  if (vs.empty()) throw DomainError("envelope of an empty set");
  std::size_t d = 0;
  for (const auto& v : vs) d = std::max(d, v.size());
  PrefixEnvelope env = prefix_envelope(vs.front(), d);
  for (std::size_t k = 1; k < vs.size(); ++k) {
    const auto other = prefix_envelope(vs[k], d);
    for (std::size_t j = 0; j <= d; ++j) {
      env.partial_sums[j] = pick(env.partial_sums[j], other.partial_sums[j]);
    }
  }
  return env;
}

std::vector<double> checked_increments(const PrefixEnvelope& envelope) {
  if (envelope.partial_sums.size() < 2) throw DomainError("envelope has no entries");
  if (std::abs(envelope.partial_sums.front()) > tol::kSum) {
    throw DomainError("envelope must start at 0");
  }
  auto inc = envelope.increments();
  for (double& x : inc) {
    if (x < -tol::kSum) throw DomainError("envelope is not nondecreasing");
    if (x < 0.0) x = 0.0;
  }
  return inc;
}

}  // namespace

PrefixEnvelope lower_envelope(std::span<const ProbVec> vs) {
  return combine_envelopes(vs, [](double x, double y) { return std::min(x, y); });
}

PrefixEnvelope upper_envelope(std::span<const ProbVec> vs) {
  return combine_envelopes(vs, [](double x, double y) { return std::max(x, y); });
}

std::vector<double> flatten(std::span<const double> increments) {
  struct Block {
    double sum;
    std::size_t count;
    double mean() const { return sum / static_cast<double>(count); }
  };
  std::vector<Block> blocks;
  blocks.reserve(increments.size());
  for (double x : increments) {
    if (x < -tol::kProb) throw DomainError("flatten: negative increment");
    blocks.push_back({x, 1});
    while (blocks.size() >= 2 &&
           blocks[blocks.size() - 1].mean() > blocks[blocks.size() - 2].mean()) {
      Block top = blocks.back();
      blocks.pop_back();
      blocks.back().sum += top.sum;
      blocks.back().count += top.count;
    }
  }
  std::vector<double> out;
  out.reserve(increments.size());
  for (const auto& b : blocks) out.insert(out.end(), b.count, b.mean());
  return out;
}

ProbVec infimum_from_envelope(const PrefixEnvelope& envelope) {
  return ProbVec(checked_increments(envelope));
}

ProbVec supremum_from_envelope(const PrefixEnvelope& envelope) {
  return ProbVec(flatten(checked_increments(envelope)));
}

ProbVec infimum(std::span<const ProbVec> vs) {
  return infimum_from_envelope(lower_envelope(vs));
}

ProbVec supremum(std::span<const ProbVec> vs) {
  return supremum_from_envelope(upper_envelope(vs));
}

double shannon_entropy(std::span<const double> p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

double tsallis_entropy(std::span<const double> p, double q) {
  if (std::abs(q - 1.0) < 1e-12) return shannon_entropy(p);
  double s = 0.0;
  for (double x : p) {
    if (x > 0.0) s += std::pow(x, q);
  }
  return (1.0 - s) / (q - 1.0);
}

}  // namespace majorbound
