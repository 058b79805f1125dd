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
#include <vector>

#include "dsky/horizontal.h"
#include "dsky/skyline.h"
#include "horizontal_internal.h"

namespace dsky {
namespace {

// Keeps the local skyline sorted by increasing x; the live points always
// form the contiguous range [lo_, hi_). A confirmed global max-y point
// removes a prefix and a confirmed global max-x point removes a suffix, so
// every point is visited by the pruning scan at most once overall.
class OptimalSite : public SiteLogic {
 public:
  explicit OptimalSite(std::vector<Point> skyline)
      : sky_(std::move(skyline)), lo_(0), hi_(sky_.size()) {}

  Payload Handle(const Payload& request) override {
    for (const Point& c : request.points) {
      while (lo_ < hi_ && Covers(c, sky_[lo_])) ++lo_;
      while (lo_ < hi_ && Covers(c, sky_[hi_ - 1])) --hi_;
    }
    Payload reply;
    const std::size_t live = hi_ - lo_;
    if (live == 0) {
      reply.exhausted = true;
      return reply;
    }
    reply.points.push_back(sky_[hi_ - 1]);  // max x
    if (live > 1) reply.points.push_back(sky_[lo_]);  // max y
    // Everything still held was just sent.
    reply.exhausted = live <= 2;
    return reply;
  }

 private:
  static bool Covers(const Point& c, const Point& p) {
    return c.x >= p.x && c.y >= p.y;
  }

  std::vector<Point> sky_;
  std::size_t lo_;
  std::size_t hi_;
};

bool MaxXLess(const Point& a, const Point& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

bool MaxYLess(const Point& a, const Point& b) {
  return a.y < b.y || (a.y == b.y && a.x < b.x);
}

CoordinatorResult OptimalCoordinator(Network& net) {
  struct SiteView {
    bool active = true;
    Point max_x;
    Point max_y;
  };
  std::vector<SiteView> view(net.num_sites());
  std::vector<Point> pending;    // confirmed last round, not yet announced
  std::vector<Point> confirmed;
  std::vector<Point> settled;    // complete remainders of finished sites

  while (true) {
    std::vector<Request> requests;
    for (std::size_t i = 0; i < view.size(); ++i) {
      if (view[i].active) requests.push_back({i, Payload{.points = pending}});
    }
    if (requests.empty()) break;

    std::vector<Point> candidates;
    for (Reply& rep : net.Exchange(std::move(requests))) {
      SiteView& site = view[rep.site];
      if (rep.payload.exhausted) {
        site.active = false;
        settled.insert(settled.end(), rep.payload.points.begin(),
                       rep.payload.points.end());
        continue;
      }
      site.max_x = rep.payload.points.front();
      site.max_y = rep.payload.points.back();
      candidates.insert(candidates.end(), rep.payload.points.begin(),
                        rep.payload.points.end());
    }
    candidates.insert(candidates.end(), settled.begin(), settled.end());
    pending.clear();
    if (candidates.empty()) break;

    const Point px = *std::max_element(candidates.begin(), candidates.end(), MaxXLess);
    const Point py = *std::max_element(candidates.begin(), candidates.end(), MaxYLess);
    pending.push_back(px);
    if (!(py == px)) pending.push_back(py);
    confirmed.insert(confirmed.end(), pending.begin(), pending.end());
    PruneDominated(settled, pending);

    if (px == py) break;  // a single point on top dominates everything left

    // A live site whose whole bounding box sits under one confirmed point
    // holds nothing else of interest.
    for (SiteView& site : view) {
      if (!site.active) continue;
      for (const Point& c : pending) {
        if (c.x >= site.max_x.x && c.y >= site.max_y.y) {
          site.active = false;
          break;
        }
      }
    }
  }

  confirmed.insert(confirmed.end(), settled.begin(), settled.end());
  CoordinatorResult result;
  result.skyline = ComputeSkylineUnchecked(confirmed);
  result.recovered_points = internal::DistinctPointsReceived(net.transcript());
  return result;
}

}  // namespace

ProtocolOutcome RunOptimal(const HorizontalInstance& instance,
                           SimOptions options) {
  ValidateHorizontal(instance);
  std::vector<std::unique_ptr<SiteLogic>> sites;
  for (auto& local : internal::LocalSkylines(instance)) {
    sites.push_back(std::make_unique<OptimalSite>(std::move(local)));
  }
  const auto raw = internal::Borrow(sites);
  return RunProtocol(OptimalCoordinator, raw,
                     internal::WithDefaultCap(options, instance.total_points()));
}

}  // namespace dsky
