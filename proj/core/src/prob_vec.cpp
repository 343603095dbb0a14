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

#include "majorbound/prob_vec.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "majorbound/tolerances.hpp"

namespace majorbound {

ProbVec::ProbVec(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw DomainError("probability vector is empty");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    double& x = entries_[i];
    if (!std::isfinite(x)) {
      throw DomainError("probability entry " + std::to_string(i) + " is not finite");
    }
    if (x < -tol::kProb) {
      throw DomainError("probability entry " + std::to_string(i) + " is negative: " +
                        std::to_string(x));
    }
    if (std::abs(x) < tol::kProb) x = 0.0;
    total += x;
  }
  if (std::abs(total - 1.0) > tol::kSum) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "probability vector sums to " << total << ", not 1";
    throw DomainError(msg.str());
  }
}

ProbVec::ProbVec(std::initializer_list<double> entries)
    : ProbVec(std::vector<double>(entries)) {}

ProbVec ProbVec::certain(std::size_t d) {
  std::vector<double> v(std::max<std::size_t>(d, 1), 0.0);
  v[0] = 1.0;
  return ProbVec(std::move(v));
}

ProbVec ProbVec::uniform(std::size_t d) {
  if (d == 0) throw DomainError("uniform vector needs d >= 1");
  return ProbVec(std::vector<double>(d, 1.0 / static_cast<double>(d)));
}

ProbVec ProbVec::padded(std::size_t d) const {
  if (d <= entries_.size()) return *this;
  std::vector<double> v = entries_;
  v.resize(d, 0.0);
  return ProbVec(std::move(v));
}

ProbVec parse_prob_vec(const std::string& text) {
  std::string body;
  body.reserve(text.size());
  for (char c : text) {
    if (c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c))) continue;
    body.push_back(c);
  }
  if (body.empty()) throw DomainError("empty probability vector '" + text + "'");

  std::vector<double> values;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t stop = body.find(',', start);
    if (stop == std::string::npos) stop = body.size();
    const char* first = body.data() + start;
    const char* last = body.data() + stop;
    double x = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, x);
    if (ec != std::errc() || ptr != last || first == last) {
      throw DomainError("malformed probability vector '" + text + "'");
    }
    values.push_back(x);
    start = stop + 1;
  }
  return ProbVec(std::move(values));
}

std::string to_csv(const ProbVec& v) {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  return out.str();
}

}  // namespace majorbound
