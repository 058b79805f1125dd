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

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dsky/datagen.h"
#include "dsky/skyline.h"
#include "gtest/gtest.h"
#include "oracle.h"

namespace dsky {
namespace {

const std::string kFixtures = DSKY_FIXTURE_DIR;

BitVector Bits(const std::string& s) {
  BitVector b;
  for (char c : s) b.push_back(c == '1');
  return b;
}

std::string Str(const BitVector& b) {
  std::string s;
  for (bool v : b) s += v ? '1' : '0';
  return s;
}

std::vector<std::pair<double, double>> Coords(const std::vector<Point>& pts) {
  std::vector<std::pair<double, double>> c;
  for (const Point& p : pts) c.emplace_back(p.x, p.y);
  std::sort(c.begin(), c.end());
  return c;
}

std::size_t SkylineSize(const std::vector<Point>& pts) {
  return testing::OracleSkylineIds(pts).size();
}

TEST(SyntheticTest, Deterministic) {
  auto spec = GenSpec::Make(Distribution::kIndi, 10, 7);
  EXPECT_EQ(GenerateSynthetic(spec), GenerateSynthetic(spec));
  auto corr = GenSpec::Make(Distribution::kCorr, 1000, 7);
  EXPECT_EQ(GenerateSynthetic(corr), GenerateSynthetic(corr));
}

TEST(SyntheticTest, InvalidSpecs) {
  EXPECT_THROW(GenerateSynthetic(GenSpec::Make(Distribution::kIndi, 0, 1)), ParameterError);
  GenSpec bad = GenSpec::Make(Distribution::kAnti, 100, 1);
  bad.per_line = 7;
  EXPECT_THROW(GenerateSynthetic(bad), ParameterError);
  EXPECT_THROW(ParseDistribution("uniform"), ParameterError);
}

TEST(SyntheticTest, LineLayout) {
  auto spec = GenSpec::Make(Distribution::kCorr, 100000, 1);
  EXPECT_EQ(spec.lines * spec.per_line, 100000u);
  auto odd = GenSpec::Make(Distribution::kAnti, 997, 1);
  EXPECT_EQ(odd.lines * odd.per_line, 997u);
}

TEST(SyntheticTest, UnitSquareAndDistinct) {
  for (int kind = 0; kind < 3; ++kind) {
    auto pts = GenerateSynthetic(GenSpec::Make(static_cast<Distribution>(kind), 20000, 3));
    ASSERT_EQ(pts.size(), 20000u);
    for (const Point& p : pts) {
      EXPECT_TRUE(p.x >= 0 && p.x <= 1 && p.y >= 0 && p.y <= 1);
    }
    EXPECT_NO_THROW(ValidateDistinct(pts));
  }
}

TEST(SyntheticTest, SkylineSizeOrdering) {
  const std::size_t n = 100000;
  const auto corr = ComputeSkyline(GenerateSynthetic(GenSpec::Make(Distribution::kCorr, n, 1))).size();
  const auto indi = ComputeSkyline(GenerateSynthetic(GenSpec::Make(Distribution::kIndi, n, 1))).size();
  const auto anti = ComputeSkyline(GenerateSynthetic(GenSpec::Make(Distribution::kAnti, n, 1))).size();
  EXPECT_LT(4 * corr, anti);
  EXPECT_GT(anti, indi);
}

TEST(StaircaseTest, ExpandBits) {
  EXPECT_EQ(Str(ExpandBits(Bits("10101"))), "1001100110");
  EXPECT_EQ(Str(ExpandBits(Bits("00"))), "0101");
}

TEST(StaircaseTest, KnownCorners) {
  using C = std::vector<std::pair<double, double>>;
  EXPECT_EQ(Coords(Staircase(Bits("10101"))), (C{{0, 5}, {2, 4}, {4, 2}, {5, 0}}));
  EXPECT_EQ(Coords(Staircase(Bits("00"))), (C{{1, 2}, {2, 1}}));
  EXPECT_EQ(Coords(Staircase(Bits("11"))), (C{{0, 2}, {1, 1}, {2, 0}}));
}

// Corner count: one per 0, one per adjacent 11, plus one for a leading and
// one for a trailing 1. Checked against the pairwise oracle for all vectors
// up to 10 bits; every staircase is its own skyline.
TEST(StaircaseTest, CornerCountAndAntichain) {
  for (std::size_t m = 1; m <= 10; ++m) {
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      BitVector u(m);
      for (std::size_t i = 0; i < m; ++i) u[i] = (mask >> i) & 1;
      std::size_t expect = (u.front() ? 1 : 0) + (u.back() ? 1 : 0);
      for (std::size_t i = 0; i < m; ++i) {
        if (!u[i]) ++expect;
        if (i + 1 < m && u[i] && u[i + 1]) ++expect;
      }
      auto pts = Staircase(u);
      ASSERT_EQ(pts.size(), expect) << Str(u);
      ASSERT_EQ(SkylineSize(pts), pts.size()) << Str(u);
      for (const Point& p : pts) {
        ASSERT_TRUE(p.x >= 0 && p.x <= double(m) && p.y >= 0 && p.y <= double(m));
      }
    }
  }
}

// With two sites, the diagonal corners (j, m - j + 1) are all on the union's
// skyline exactly when no column carries a 1 in both vectors.
TEST(StaircaseTest, DisjointnessVisibleInSkyline) {
  for (std::size_t m = 1; m <= 6; ++m) {
    for (std::uint32_t a = 0; a < (1u << m); ++a) {
      for (std::uint32_t b = 0; b < (1u << m); ++b) {
        BitVector u(m), v(m);
        for (std::size_t i = 0; i < m; ++i) {
          u[i] = (a >> i) & 1;
          v[i] = (b >> i) & 1;
        }
        auto inst = DisjStaircases({u, v});
        const auto all = inst.Union();
        ASSERT_NO_THROW(ValidateDistinct(all));
        const auto ids = testing::OracleSkylineIds(all);
        std::set<std::pair<double, double>> sky;
        for (const Point& p : all) {
          if (std::binary_search(ids.begin(), ids.end(), p.id)) sky.emplace(p.x, p.y);
        }
        bool canonical = true;
        for (std::size_t j = 1; j <= m; ++j) canonical &= sky.contains({double(j), double(m - j + 1)});
        ASSERT_EQ(canonical, (a & b) == 0) << m << " " << a << " " << b;
      }
    }
  }
}

TEST(OneRoundHardTest, BothBranches) {
  const BitVector u = Bits("0110100111");
  auto yes = OneRoundHard(u, true);
  auto yes_sky = ComputeSkyline(yes.Union());
  ASSERT_EQ(yes_sky.size(), 1u);
  EXPECT_EQ(yes_sky.points[0].x, 10.0);
  EXPECT_EQ(yes_sky.points[0].y, 10.0);

  auto no = OneRoundHard(u, false);
  EXPECT_EQ(ComputeSkyline(no.Union()).SortedIds(), ComputeSkyline(no.sites[0]).SortedIds());
  EXPECT_EQ(ComputeSkyline(no.Union()).size(), Staircase(u).size());
  EXPECT_THROW(OneRoundHard(Bits("0"), true), ParameterError);
}

TEST(VerticalDisjTest, Examples) {
  auto hit = VerticalDisj({2}, {2}, 3).Join();
  const auto hit_ids = testing::OracleSkylineIds(hit);
  EXPECT_EQ(hit_ids, (std::vector<PointId>{2}));

  auto miss = VerticalDisj({1, 3}, {2}, 3).Join();
  EXPECT_EQ(testing::OracleSkylineIds(miss), (std::vector<PointId>{1, 2}));

  auto none = VerticalDisj({}, {}, 4).Join();
  EXPECT_EQ(testing::OracleSkylineIds(none), (std::vector<PointId>{1}));
  EXPECT_THROW(VerticalDisj({5}, {}, 4), ParameterError);
}

TEST(VerticalDisjTest, SingletonSkylineIffIntersectingWhenBothNonEmpty) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::uint32_t a = 1; a < (1u << n); ++a) {
      for (std::uint32_t b = 1; b < (1u << n); ++b) {
        std::vector<std::size_t> sa, sb;
        for (std::size_t i = 0; i < n; ++i) {
          if ((a >> i) & 1) sa.push_back(i + 1);
          if ((b >> i) & 1) sb.push_back(i + 1);
        }
        auto v = VerticalDisj(sa, sb, n);
        ASSERT_NO_THROW(ValidateVertical(v));
        ASSERT_EQ(SkylineSize(v.Join()) == 1, (a & b) != 0) << n << " " << a << " " << b;
      }
    }
  }
}

TEST(PartitionTest, SingleSite) {
  auto pts = GenerateSynthetic(GenSpec::Make(Distribution::kIndi, 100, 1));
  for (auto kind : {PartitionKind::kRandom, PartitionKind::kByKey, PartitionKind::kSorted}) {
    auto inst = Partition(pts, kind, 1, 1);
    EXPECT_EQ(inst.sites[0].size(), 100u);
  }
}

TEST(PartitionTest, SortedKeepsTiesTogether) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    auto pts = testing::LatticePoints(1 + rng() % 200, 2 + rng() % 10, rng);
    auto inst = Partition(pts, PartitionKind::kSorted, 1 + rng() % 12, trial);
    EXPECT_NO_THROW(ValidateHorizontal(inst));
    EXPECT_EQ(inst.total_points(), pts.size());
  }
}

TEST(PartitionTest, SortedIsNearlyBalanced) {
  auto pts = GenerateSynthetic(GenSpec::Make(Distribution::kIndi, 1000, 1));
  auto inst = Partition(pts, PartitionKind::kSorted, 7, 1);
  for (const auto& site : inst.sites) EXPECT_NEAR(double(site.size()), 1000.0 / 7, 1.0);
}

TEST(PartitionTest, RandomIsSeeded) {
  auto pts = GenerateSynthetic(GenSpec::Make(Distribution::kIndi, 500, 1));
  auto a = Partition(pts, PartitionKind::kRandom, 5, 9);
  auto b = Partition(pts, PartitionKind::kRandom, 5, 9);
  auto c = Partition(pts, PartitionKind::kRandom, 5, 10);
  EXPECT_EQ(a.sites, b.sites);
  EXPECT_NE(a.sites, c.sites);
}

TEST(PartitionTest, ByKeyGroupsEqualKeys) {
  std::vector<Point> pts;
  std::vector<std::string> keys;
  for (PointId i = 0; i < 60; ++i) {
    pts.push_back({i, double(i), double(60 - i)});
    keys.push_back("k" + std::to_string(i % 4));
  }
  auto inst = Partition(pts, PartitionKind::kByKey, 3, 0, &keys);
  for (const auto& site : inst.sites) {
    std::set<std::string> seen;
    for (const Point& p : site) seen.insert(keys[p.id]);
    for (const auto& other : inst.sites) {
      if (&other == &site) continue;
      for (const Point& p : other) EXPECT_FALSE(seen.contains(keys[p.id]));
    }
  }
  keys.pop_back();
  EXPECT_THROW(Partition(pts, PartitionKind::kByKey, 3, 0, &keys), ParameterError);
}

TEST(IngestCsvTest, DedupeKeepsFirstRow) {
  CsvColumns cols{"fare", "miles"};
  auto data = IngestCsv(kFixtures + "/duplicates.csv", cols);
  ASSERT_EQ(data.points.size(), 2u);
  EXPECT_EQ(data.duplicate_rows, 1u);
  EXPECT_EQ(data.points[0].x, 10.5);
  cols.dedupe = false;
  EXPECT_THROW(IngestCsv(kFixtures + "/duplicates.csv", cols), InstanceError);
}

TEST(IngestCsvTest, NegationFlipsPreference) {
  CsvColumns cols{"fare", "miles"};
  cols.negate_x = true;
  auto data = IngestCsv(kFixtures + "/duplicates.csv", cols);
  EXPECT_EQ(data.points[0].x, -10.5);
  EXPECT_EQ(ComputeSkyline(data.points).SortedIds(), testing::OracleSkylineIds(data.points));
}

TEST(IngestCsvTest, CovertypeSchema) {
  CsvColumns cols{"Elevation", "Slope"};
  auto data = IngestCsv(kFixtures + "/covertype_sample.csv", cols);
  EXPECT_EQ(data.points.size(), 20u);
  EXPECT_EQ(data.skipped_rows, 0u);
  const auto sky = ComputeSkyline(data.points);
  EXPECT_FALSE(sky.empty());
  EXPECT_EQ(sky.SortedIds(), testing::OracleSkylineIds(data.points));
}

TEST(IngestCsvTest, QuotesAndBadRows) {
  CsvColumns cols{"price", "rating, stars"};
  cols.negate_x = true;
  cols.key = "zone";
  auto data = IngestCsv(kFixtures + "/messy.csv", cols);
  ASSERT_EQ(data.points.size(), 3u);
  EXPECT_EQ(data.skipped_rows, 2u);
  EXPECT_EQ(data.keys, (std::vector<std::string>{"n", "s", "n"}));
  EXPECT_EQ(ComputeSkyline(data.points).SortedIds(), (std::vector<PointId>{0, 1}));
}

TEST(IngestCsvTest, Errors) {
  EXPECT_THROW(IngestCsv(kFixtures + "/missing.csv", {"a", "b"}), InstanceError);
  EXPECT_THROW(IngestCsv(kFixtures + "/duplicates.csv", {"fare", "nope"}), InstanceError);
  EXPECT_THROW(IngestCsv(kFixtures + "/messy.csv", {"name", "zone"}), InstanceError);
}

}  // namespace
}  // namespace dsky
