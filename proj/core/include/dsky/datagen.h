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

// Instance generators: synthetic point clouds, partitioners, staircase
// instances built from bit vectors, and CSV ingestion.

#ifndef DSKY_DATAGEN_H_
#define DSKY_DATAGEN_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsky/horizontal.h"
#include "dsky/point.h"
#include "dsky/vertical.h"

namespace dsky {

enum class Distribution { kIndi, kCorr, kAnti };

// Parses "indi", "corr" or "anti". Throws ParameterError.
Distribution ParseDistribution(const std::string& name);
std::string DistributionName(Distribution kind);

struct GenSpec {
  Distribution kind = Distribution::kIndi;
  std::size_t n = 0;
  std::size_t lines = 0;     // corr/anti only
  std::size_t per_line = 0;  // corr/anti only; lines * per_line == n
  std::uint64_t seed = 0;
  double center_sd = 0.15;  // line intercepts along the diagonal
  double offset_sd = 0.05;  // positions along each line

  // lines and per_line filled in as gcd(n, 10) points per line.
  static GenSpec Make(Distribution kind, std::size_t n, std::uint64_t seed);
};

// n distinct points in [0,1]^2 with ids 0..n-1. Throws ParameterError on an
// invalid spec.
std::vector<Point> GenerateSynthetic(const GenSpec& spec);

// Assigns points to s sites. kByKey hashes `keys[i]` for point i when keys
// are given, otherwise the point id. kSorted cuts the x order into s runs
// of near-equal size, never separating equal x values.
HorizontalInstance Partition(const std::vector<Point>& points, PartitionKind kind,
                             std::size_t s, std::uint64_t seed,
                             const std::vector<std::string>* keys = nullptr);

PartitionKind ParsePartition(const std::string& name);
std::string PartitionName(PartitionKind kind);

using BitVector = std::vector<bool>;

// 0 -> 01, 1 -> 10.
BitVector ExpandBits(const BitVector& bits);

// Outer corners of the staircase walked from (0, m): a 0 in the expanded
// vector steps right, a 1 steps down. Ids start at `first_id`, in walk order.
std::vector<Point> Staircase(const BitVector& bits, PointId first_id = 0);

// One staircase per site over a shared m x m grid. Corners already held by
// an earlier site are dropped so the union stays distinct.
HorizontalInstance DisjStaircases(const std::vector<BitVector>& vectors);

// Site 1 holds the staircase of u; site 2 holds (m, m) when v is set,
// otherwise (0, 0). Requires m >= 2.
HorizontalInstance OneRoundHard(const BitVector& u, bool v);

// Point a in [1, n] gets x = 2 if a is in A (else 1) and y = 2 if a is in B
// (else 1). Points sharing coordinates are moved down the diagonal by
// multiples of 2^-40 in id order so the instance stays distinct while each
// group's first point keeps the exact coordinates.
VerticalInstance VerticalDisj(const std::vector<std::size_t>& a,
                              const std::vector<std::size_t>& b, std::size_t n);

struct CsvColumns {
  std::string x;
  std::string y;
  bool negate_x = false;
  bool negate_y = false;
  bool dedupe = true;
  std::optional<std::string> key;  // column used by kByKey partitioning
};

struct CsvData {
  std::vector<Point> points;      // ids 0.. in file order of kept rows
  std::vector<std::string> keys;  // parallel to points when a key is set
  std::size_t skipped_rows = 0;   // unparseable
  std::size_t duplicate_rows = 0; // dropped by dedupe
};

// Reads a header-first comma-separated file. Throws InstanceError when a
// column is missing, no rows survive, or duplicates remain with dedupe off.
CsvData IngestCsv(const std::string& path, const CsvColumns& columns);

}  // namespace dsky

#endif  // DSKY_DATAGEN_H_
