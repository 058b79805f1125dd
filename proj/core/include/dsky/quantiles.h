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

// One-round distributed quantiles. Every site ships its exact local
// (eps/2)-quantiles; the coordinator answers rank queries over the union
// with additive error at most (eps/2) * N.

#ifndef DSKY_QUANTILES_H_
#define DSKY_QUANTILES_H_

#include <cstddef>
#include <span>
#include <vector>

namespace dsky {

struct QuantileSummary {
  std::size_t site = 0;
  std::size_t local_count = 0;
  // Local values at ranks ceil(j * (eps/2) * n_i), j = 1..ceil(2/eps). When
  // n_i < ceil(2/eps) the summary is lossless and holds every local value.
  std::vector<double> values;
  double epsilon = 1.0;

  bool lossless() const;
  // Rank mass represented by one summary entry.
  double entry_weight() const;
};

// Number of entries a full summary holds for the given epsilon.
std::size_t SummarySize(double epsilon);

// `values` must be sorted nondecreasing.
QuantileSummary LocalSummary(std::span<const double> values, double epsilon,
                             std::size_t site = 0);

// Rebuilds a summary from its wire form (entries plus the local count).
QuantileSummary SummaryFromWire(std::vector<double> values,
                                std::size_t local_count, double epsilon,
                                std::size_t site = 0);

// Estimated number of union elements strictly below v.
double EstimatedRank(std::span<const QuantileSummary> summaries, double v);

// Largest candidate v (a summary value, or -infinity) whose estimated rank
// does not exceed beta. beta <= 0 yields -infinity.
double AnswerRank(std::span<const QuantileSummary> summaries, double beta);

// The d-1 values splitting the union into d strips by x. Strip j is
// (b_{j-1}, b_j], the first strip is unbounded left and the last unbounded
// right. Uses the summaries' own epsilon (expected to be 1/d).
std::vector<double> StripBoundaries(std::span<const QuantileSummary> summaries,
                                    std::size_t d);

// Strip index of x for the given boundaries: the number of boundaries < x.
std::size_t StripOf(std::span<const double> boundaries, double x);

}  // namespace dsky

#endif  // DSKY_QUANTILES_H_
