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

#include "dsky/datagen.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dsky {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

double Clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

std::uint64_t Mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Distribution ParseDistribution(const std::string& name) {
  if (name == "indi") return Distribution::kIndi;
  if (name == "corr") return Distribution::kCorr;
  if (name == "anti") return Distribution::kAnti;
  throw ParameterError("unknown dataset '" + name + "'");
}

std::string DistributionName(Distribution kind) {
  switch (kind) {
    case Distribution::kIndi: return "indi";
    case Distribution::kCorr: return "corr";
    case Distribution::kAnti: return "anti";
  }
  return "?";
}

GenSpec GenSpec::Make(Distribution kind, std::size_t n, std::uint64_t seed) {
  GenSpec spec;
  spec.kind = kind;
  spec.n = n;
  spec.seed = seed;
  if (kind != Distribution::kIndi && n > 0) {
    spec.per_line = std::gcd(n, std::size_t{10});
    spec.lines = n / spec.per_line;
  }
  return spec;
}

std::vector<Point> GenerateSynthetic(const GenSpec& spec) {
  if (spec.n < 1) throw ParameterError("n must be at least 1");
  if (spec.kind != Distribution::kIndi &&
      (spec.lines == 0 || spec.lines * spec.per_line != spec.n)) {
    throw ParameterError("lines * per_line must equal n");
  }
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::normal_distribution<double> center(0.5, spec.center_sd);
  std::normal_distribution<double> offset(0.0, spec.offset_sd);

  std::vector<Point> points;
  points.reserve(spec.n);
  std::set<std::pair<double, double>> seen;
  auto emit = [&](auto&& sample) {
    while (true) {
      auto [x, y] = sample();
      if (seen.emplace(x, y).second) {
        points.push_back({static_cast<PointId>(points.size()), x, y});
        return;
      }
    }
  };

  if (spec.kind == Distribution::kIndi) {
    for (std::size_t i = 0; i < spec.n; ++i) {
      emit([&] {
        const double x = uniform(rng);
        return std::pair{x, uniform(rng)};
      });
    }
    return points;
  }
  const bool corr = spec.kind == Distribution::kCorr;
  for (std::size_t line = 0; line < spec.lines; ++line) {
    const double c = Clamp01(center(rng));
    for (std::size_t j = 0; j < spec.per_line; ++j) {
      emit([&] {
        const double o = offset(rng) * kInvSqrt2;
        return corr ? std::pair{Clamp01(c + o), Clamp01(c - o)}
                    : std::pair{Clamp01(c + o), Clamp01(1.0 - c + o)};
      });
    }
  }
  return points;
}

PartitionKind ParsePartition(const std::string& name) {
  if (name == "random") return PartitionKind::kRandom;
  if (name == "by-key") return PartitionKind::kByKey;
  if (name == "sorted") return PartitionKind::kSorted;
  throw ParameterError("unknown partition '" + name + "'");
}

std::string PartitionName(PartitionKind kind) {
  switch (kind) {
    case PartitionKind::kRandom: return "random";
    case PartitionKind::kByKey: return "by-key";
    case PartitionKind::kSorted: return "sorted";
  }
  return "?";
}

HorizontalInstance Partition(const std::vector<Point>& points, PartitionKind kind,
                             std::size_t s, std::uint64_t seed,
                             const std::vector<std::string>* keys) {
  if (s < 1) throw ParameterError("need at least one site");
  if (keys && keys->size() != points.size()) {
    throw ParameterError("key column does not match the point count");
  }
  HorizontalInstance inst;
  inst.kind = kind;
  inst.sites.resize(s);
  switch (kind) {
    case PartitionKind::kRandom: {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<std::size_t> pick(0, s - 1);
      for (const Point& p : points) inst.sites[pick(rng)].push_back(p);
      break;
    }
    case PartitionKind::kByKey:
      for (std::size_t i = 0; i < points.size(); ++i) {
        const std::uint64_t h = keys ? std::hash<std::string>{}((*keys)[i])
                                     : Mix(points[i].id);
        inst.sites[h % s].push_back(points[i]);
      }
      break;
    case PartitionKind::kSorted: {
      std::vector<Point> order = points;
      std::sort(order.begin(), order.end(), [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && (a.y < b.y || (a.y == b.y && a.id < b.id)));
      });
      const std::size_t n = order.size();
      std::size_t begin = 0;
      for (std::size_t i = 0; i < s; ++i) {
        std::size_t end = i + 1 == s ? n : std::max(begin, (i + 1) * n / s);
        while (end > begin && end < n && order[end].x == order[end - 1].x) ++end;
        inst.sites[i].assign(order.begin() + begin, order.begin() + end);
        begin = end;
      }
      break;
    }
  }
  return inst;
}

BitVector ExpandBits(const BitVector& bits) {
  BitVector out;
  out.reserve(2 * bits.size());
  for (bool b : bits) {
    out.push_back(b);
    out.push_back(!b);
  }
  return out;
}

std::vector<Point> Staircase(const BitVector& bits, PointId first_id) {
  const BitVector steps = ExpandBits(bits);
  const auto m = static_cast<double>(bits.size());
  std::vector<Point> corners;
  double x = 0.0, y = m;
  bool last_right = true;  // a virtual right step precedes the walk
  for (bool down : steps) {
    if (down && last_right) corners.push_back({first_id + corners.size(), x, y});
    if (down) {
      y -= 1.0;
    } else {
      x += 1.0;
    }
    last_right = !down;
  }
  // ... and a virtual down step follows it.
  if (last_right) corners.push_back({first_id + corners.size(), x, y});
  return corners;
}

HorizontalInstance DisjStaircases(const std::vector<BitVector>& vectors) {
  if (vectors.empty()) throw ParameterError("need at least one vector");
  HorizontalInstance inst;
  inst.sites.resize(vectors.size());
  std::set<std::pair<double, double>> seen;
  PointId next = 0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != vectors[0].size()) {
      throw ParameterError("bit vectors differ in length");
    }
    for (const Point& p : Staircase(vectors[i])) {
      if (seen.emplace(p.x, p.y).second) inst.sites[i].push_back({next++, p.x, p.y});
    }
  }
  return inst;
}

HorizontalInstance OneRoundHard(const BitVector& u, bool v) {
  // At m = 1 the vector 0 has a corner at (1, 1), colliding with site 2.
  if (u.size() < 2) throw ParameterError("need at least two bits");
  HorizontalInstance inst;
  inst.sites.resize(2);
  inst.sites[0] = Staircase(u);
  const auto m = static_cast<double>(u.size());
  const PointId id = inst.sites[0].size();
  inst.sites[1].push_back(v ? Point{id, m, m} : Point{id, 0.0, 0.0});
  return inst;
}

VerticalInstance VerticalDisj(const std::vector<std::size_t>& a,
                              const std::vector<std::size_t>& b, std::size_t n) {
  const double eps = std::ldexp(1.0, -40);
  std::vector<bool> in_a(n + 1, false), in_b(n + 1, false);
  for (std::size_t i : a) {
    if (i < 1 || i > n) throw ParameterError("element of A outside [1, n]");
    in_a[i] = true;
  }
  for (std::size_t i : b) {
    if (i < 1 || i > n) throw ParameterError("element of B outside [1, n]");
    in_b[i] = true;
  }
  std::map<std::pair<int, int>, int> taken;
  std::vector<Point> points;
  points.reserve(n);
  for (std::size_t id = 1; id <= n; ++id) {
    const int cx = in_a[id] ? 2 : 1;
    const int cy = in_b[id] ? 2 : 1;
    const int j = taken[{cx, cy}]++;
    points.push_back({id, cx - j * eps, cy - j * eps});
  }
  return MakeVertical(points);
}

}  // namespace dsky
