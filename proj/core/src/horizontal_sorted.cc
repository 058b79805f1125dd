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
#include <limits>
#include <memory>
#include <vector>

#include "dsky/horizontal.h"
#include "dsky/skyline.h"
#include "horizontal_internal.h"

namespace dsky {
namespace {

class SortedSite : public SiteLogic {
 public:
  explicit SortedSite(std::vector<Point> skyline) : sky_(std::move(skyline)) {}

  Payload Handle(const Payload& request) override {
    Payload reply;
    if (!answered_first_) {
      answered_first_ = true;
      if (sky_.empty()) {
        reply.exhausted = true;
      } else {
        reply.scalars.push_back(sky_.front().y);  // x ascending => max y first
      }
      return reply;
    }
    const double z = request.scalars.front();
    for (const Point& p : sky_) {
      if (p.y > z) reply.points.push_back(p);
    }
    return reply;
  }

 private:
  std::vector<Point> sky_;
  bool answered_first_ = false;
};

}  // namespace

ProtocolOutcome RunSorted(const HorizontalInstance& instance,
                          SimOptions options) {
  if (instance.kind != PartitionKind::kSorted) {
    throw InstanceError("sorted protocol requires a sorted partition");
  }
  ValidateHorizontal(instance);
  std::vector<std::unique_ptr<SiteLogic>> sites;
  for (auto& local : internal::LocalSkylines(instance)) {
    sites.push_back(std::make_unique<SortedSite>(std::move(local)));
  }

  auto coordinator = [&](Network& net) {
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();
    const std::size_t s = net.num_sites();
    std::vector<Request> requests;
    for (std::size_t i = 0; i < s; ++i) requests.push_back({i, {}});
    std::vector<double> top(s, kNegInf);
    std::vector<bool> nonempty(s, false);
    for (const Reply& rep : net.Exchange(std::move(requests))) {
      if (rep.payload.exhausted) continue;
      top[rep.site] = rep.payload.scalars.front();
      nonempty[rep.site] = true;
    }
    // z_i = max(y_{i+1}, ..., y_s).
    std::vector<double> suffix(s, kNegInf);
    for (std::size_t i = s; i-- > 1;) {
      suffix[i - 1] = std::max(suffix[i], top[i]);
    }
    requests.clear();
    for (std::size_t i = 0; i < s; ++i) {
      if (nonempty[i]) requests.push_back({i, Payload{.scalars = {suffix[i]}}});
    }
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
