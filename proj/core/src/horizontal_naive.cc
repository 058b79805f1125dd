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
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "dsky/horizontal.h"
#include "dsky/skyline.h"
#include "horizontal_internal.h"

namespace dsky {

std::size_t HorizontalInstance::total_points() const {
  std::size_t n = 0;
  for (const auto& site : sites) n += site.size();
  return n;
}

std::vector<Point> HorizontalInstance::Union() const {
  std::vector<Point> all;
  all.reserve(total_points());
  for (const auto& site : sites) all.insert(all.end(), site.begin(), site.end());
  return all;
}

void ValidateHorizontal(const HorizontalInstance& instance) {
  if (instance.sites.empty()) throw InstanceError("instance has no sites");
  ValidateDistinct(instance.Union());
  if (instance.kind != PartitionKind::kSorted) return;
  bool seen = false;
  double prev_max = 0.0;
  for (std::size_t i = 0; i < instance.sites.size(); ++i) {
    const auto& site = instance.sites[i];
    if (site.empty()) continue;
    auto [lo, hi] = std::minmax_element(
        site.begin(), site.end(),
        [](const Point& a, const Point& b) { return a.x < b.x; });
    if (seen && !(lo->x > prev_max)) {
      throw InstanceError("site " + std::to_string(i + 1) +
                          " breaks the sorted-by-x partition");
    }
    prev_max = hi->x;
    seen = true;
  }
}

namespace internal {

int DefaultRoundCap(std::size_t n) {
  return static_cast<int>(10 * std::max<std::size_t>(n, 1));
}

std::vector<std::vector<Point>> LocalSkylines(
    const HorizontalInstance& instance) {
  std::vector<std::vector<Point>> result;
  result.reserve(instance.sites.size());
  for (const auto& site : instance.sites) {
    result.push_back(ComputeSkylineUnchecked(site).points);
  }
  return result;
}

SimOptions WithDefaultCap(SimOptions options, std::size_t n) {
  if (options.round_cap <= 0) options.round_cap = DefaultRoundCap(n);
  return options;
}

std::size_t DistinctPointsReceived(const Transcript& transcript) {
  std::unordered_set<PointId> ids;
  for (const Message& m : transcript.messages) {
    if (m.direction != Direction::kUp) continue;
    for (const Point& p : m.payload.points) ids.insert(p.id);
  }
  return ids.size();
}

std::vector<SiteLogic*> Borrow(
    const std::vector<std::unique_ptr<SiteLogic>>& sites) {
  std::vector<SiteLogic*> raw;
  raw.reserve(sites.size());
  for (const auto& s : sites) raw.push_back(s.get());
  return raw;
}

}  // namespace internal

namespace {

class NaiveSite : public SiteLogic {
 public:
  explicit NaiveSite(std::vector<Point> skyline) : skyline_(std::move(skyline)) {}

  Payload Handle(const Payload&) override {
    Payload reply;
    reply.points = skyline_;
    return reply;
  }

 private:
  std::vector<Point> skyline_;
};

}  // namespace

ProtocolOutcome RunNaive(const HorizontalInstance& instance,
                         SimOptions options) {
  ValidateHorizontal(instance);
  std::vector<std::unique_ptr<SiteLogic>> sites;
  for (auto& local : internal::LocalSkylines(instance)) {
    sites.push_back(std::make_unique<NaiveSite>(std::move(local)));
  }

  auto coordinator = [&](Network& net) {
    std::vector<Request> requests;
    for (std::size_t i = 0; i < net.num_sites(); ++i) requests.push_back({i, {}});
    std::vector<Point> received;
    for (const Reply& rep : net.Exchange(std::move(requests))) {
      received.insert(received.end(), rep.payload.points.begin(),
                      rep.payload.points.end());
    }
    CoordinatorResult result;
    result.recovered_points = received.size();
    result.skyline = ComputeSkylineUnchecked(received);
    return result;
  };

  const auto raw = internal::Borrow(sites);
  return RunProtocol(coordinator, raw,
                     internal::WithDefaultCap(options, instance.total_points()));
}

}  // namespace dsky
