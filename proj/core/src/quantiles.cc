// Copyright 2026 The dsky Authors.
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

#include "dsky/quantiles.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dsky/point.h"

namespace dsky {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

bool QuantileSummary::lossless() const {
  return local_count < SummarySize(epsilon);
}

double QuantileSummary::entry_weight() const {
  if (lossless()) return 1.0;
  return epsilon / 2.0 * static_cast<double>(local_count);
}

std::size_t SummarySize(double epsilon) {
  if (!(epsilon > 0.0)) throw ParameterError("epsilon must be positive");
  // The small slack keeps 2/(1/d) == 2d from rounding up to 2d + 1.
  return static_cast<std::size_t>(std::ceil(2.0 / epsilon - 1e-9));
}

QuantileSummary LocalSummary(std::span<const double> values, double epsilon,
                             std::size_t site) {
  QuantileSummary summary;
  summary.site = site;
  summary.local_count = values.size();
  summary.epsilon = epsilon;
  const std::size_t entries = SummarySize(epsilon);
  const std::size_t n = values.size();
  if (n == 0) return summary;
  if (n < entries) {
    summary.values.assign(values.begin(), values.end());
    return summary;
  }
  const double step = epsilon / 2.0 * static_cast<double>(n);
  summary.values.reserve(entries);
  for (std::size_t j = 1; j <= entries; ++j) {
    auto rank = static_cast<std::size_t>(
        std::ceil(static_cast<double>(j) * step - 1e-9));
    rank = std::clamp<std::size_t>(rank, 1, n);
    summary.values.push_back(values[rank - 1]);
  }
  return summary;
}

QuantileSummary SummaryFromWire(std::vector<double> values,
                                std::size_t local_count, double epsilon,
                                std::size_t site) {
  QuantileSummary summary;
  summary.site = site;
  summary.local_count = local_count;
  summary.epsilon = epsilon;
  summary.values = std::move(values);
  return summary;
}

double EstimatedRank(std::span<const QuantileSummary> summaries, double v) {
  double rank = 0.0;
  for (const QuantileSummary& q : summaries) {
    const auto below = static_cast<double>(
        std::lower_bound(q.values.begin(), q.values.end(), v) -
        q.values.begin());
    rank += below * q.entry_weight();
  }
  return rank;
}

double AnswerRank(std::span<const QuantileSummary> summaries, double beta) {
  if (beta <= 0.0) return kNegInf;
  std::vector<double> candidates;
  for (const QuantileSummary& q : summaries) {
    candidates.insert(candidates.end(), q.values.begin(), q.values.end());
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  // EstimatedRank is nondecreasing in v, so binary search for the last
  // candidate that still fits under beta.
  auto it = std::partition_point(
      candidates.begin(), candidates.end(),
      [&](double v) { return EstimatedRank(summaries, v) <= beta; });
  if (it == candidates.begin()) return kNegInf;
  return *(it - 1);
}

std::vector<double> StripBoundaries(std::span<const QuantileSummary> summaries,
                                    std::size_t d) {
  if (d == 0) throw ParameterError("strip count must be at least 1");
  double total = 0.0;
  for (const QuantileSummary& q : summaries) {
    total += static_cast<double>(q.local_count);
  }
  std::vector<double> boundaries;
  boundaries.reserve(d - 1);
  for (std::size_t j = 1; j < d; ++j) {
    const double beta = static_cast<double>(j) * total / static_cast<double>(d);
    boundaries.push_back(AnswerRank(summaries, beta));
  }
  return boundaries;
}

std::size_t StripOf(std::span<const double> boundaries, double x) {
  return static_cast<std::size_t>(
      std::lower_bound(boundaries.begin(), boundaries.end(), x) -
      boundaries.begin());
}

}  // namespace dsky
