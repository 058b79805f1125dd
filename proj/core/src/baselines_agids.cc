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
#include <cfloat>
#include <cmath>
#include <cstdint>
#include <memory>
#include <set>
#include <vector>

#include "dsky/baselines.h"
#include "dsky/skyline.h"
#include "horizontal_internal.h"

namespace dsky {

GridSpec GridSpec::Over(int g, double x_min, double x_max, double y_min,
                        double y_max) {
  if (g < 1) throw ParameterError("grid needs at least one cell per axis");
  auto widen = [](double lo, double& hi) {
    if (!(hi > lo)) hi = lo + std::max(std::abs(lo), 1.0) * DBL_EPSILON * 4;
  };
  widen(x_min, x_max);
  widen(y_min, y_max);
  return GridSpec{g, x_min, x_max, y_min, y_max};
}

namespace {

// Monotone in v, which is all the pruning rule relies on.
int Bucket(double v, double lo, double hi, int g) {
  const double t = std::floor((v - lo) / (hi - lo) * g);
  if (!(t > 0)) return 0;
  return t >= g - 1 ? g - 1 : static_cast<int>(t);
}

}  // namespace

int GridSpec::Column(double x) const { return Bucket(x, x_min, x_max, cells_per_axis); }
int GridSpec::Row(double y) const { return Bucket(y, y_min, y_max, cells_per_axis); }

std::int64_t GridSpec::CellOf(const Point& p) const {
  return static_cast<std::int64_t>(Row(p.y)) * cells_per_axis + Column(p.x);
}

std::vector<std::int64_t> SurvivingCells(std::vector<std::int64_t> nonempty,
                                         int cells_per_axis) {
  std::sort(nonempty.begin(), nonempty.end());
  nonempty.erase(std::unique(nonempty.begin(), nonempty.end()), nonempty.end());
  const int g = cells_per_axis;
  // beyond[c] = highest occupied row among columns > c, -1 if none.
  std::vector<int> top(g, -1);
  for (std::int64_t cell : nonempty) {
    const int col = static_cast<int>(cell % g);
    top[col] = std::max(top[col], static_cast<int>(cell / g));
  }
  std::vector<int> beyond(g, -1);
  for (int c = g - 2; c >= 0; --c) beyond[c] = std::max(beyond[c + 1], top[c + 1]);
  std::vector<std::int64_t> out;
  for (std::int64_t cell : nonempty) {
    if (beyond[cell % g] <= cell / g) out.push_back(cell);
  }
  return out;
}

namespace {

class AgidsSite : public SiteLogic {
 public:
  explicit AgidsSite(std::vector<Point> skyline) : skyline_(std::move(skyline)) {}

  Payload Handle(const Payload& request) override {
    Payload reply;
    switch (stage_++) {
      case 0:
        if (skyline_.empty()) {
          reply.exhausted = true;
          break;
        }
        {
          double x_lo = skyline_.front().x, x_hi = x_lo;
          double y_lo = skyline_.front().y, y_hi = y_lo;
          for (const Point& p : skyline_) {
            x_lo = std::min(x_lo, p.x);
            x_hi = std::max(x_hi, p.x);
            y_lo = std::min(y_lo, p.y);
            y_hi = std::max(y_hi, p.y);
          }
          reply.scalars = {x_lo, x_hi, y_lo, y_hi};
        }
        break;
      case 1: {
        const auto& s = request.scalars;
        grid_ = GridSpec{static_cast<int>(s[0]), s[1], s[2], s[3], s[4]};
        std::set<std::int64_t> cells;
        for (const Point& p : skyline_) cells.insert(grid_.CellOf(p));
        reply.indices.assign(cells.begin(), cells.end());
        break;
      }
      default: {
        const std::set<std::int64_t> keep(request.indices.begin(),
                                          request.indices.end());
        for (const Point& p : skyline_) {
          if (keep.contains(grid_.CellOf(p))) reply.points.push_back(p);
        }
        break;
      }
    }
    return reply;
  }

 private:
  std::vector<Point> skyline_;
  GridSpec grid_;
  int stage_ = 0;
};

}  // namespace

ProtocolOutcome RunAgids(const HorizontalInstance& instance, int cells_per_axis,
                         SimOptions options, AgidsTrace* trace) {
  if (cells_per_axis < 1) throw ParameterError("grid needs at least one cell per axis");
  ValidateHorizontal(instance);
  std::vector<std::unique_ptr<SiteLogic>> sites;
  for (auto& local : internal::LocalSkylines(instance)) {
    sites.push_back(std::make_unique<AgidsSite>(std::move(local)));
  }
  AgidsTrace local_trace;
  AgidsTrace& tr = trace ? *trace : local_trace;
  tr = AgidsTrace{};

  auto coordinator = [&](Network& net) {
    const std::size_t s = net.num_sites();
    std::vector<Request> requests;
    for (std::size_t i = 0; i < s; ++i) requests.push_back({i, {}});
    std::vector<std::size_t> live;
    bool any = false;
    double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
    for (const Reply& rep : net.Exchange(std::move(requests))) {
      if (rep.payload.exhausted) continue;
      const auto& b = rep.payload.scalars;
      if (!any) {
        x_lo = b[0], x_hi = b[1], y_lo = b[2], y_hi = b[3];
        any = true;
      } else {
        x_lo = std::min(x_lo, b[0]);
        x_hi = std::max(x_hi, b[1]);
        y_lo = std::min(y_lo, b[2]);
        y_hi = std::max(y_hi, b[3]);
      }
      live.push_back(rep.site);
    }
    CoordinatorResult result;
    if (live.empty()) return result;

    tr.grid = GridSpec::Over(cells_per_axis, x_lo, x_hi, y_lo, y_hi);
    Payload spec;
    spec.scalars = {static_cast<double>(cells_per_axis), tr.grid.x_min,
                    tr.grid.x_max, tr.grid.y_min, tr.grid.y_max};
    requests.clear();
    for (std::size_t i : live) requests.push_back({i, spec});
    std::vector<std::vector<std::int64_t>> cells_of(s);
    std::vector<std::int64_t> all;
    for (Reply& rep : net.Exchange(std::move(requests))) {
      all.insert(all.end(), rep.payload.indices.begin(), rep.payload.indices.end());
      cells_of[rep.site] = std::move(rep.payload.indices);
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    tr.nonempty = all;
    tr.surviving = SurvivingCells(all, cells_per_axis);

    requests.clear();
    for (std::size_t i : live) {
      Payload keep;
      std::set_intersection(cells_of[i].begin(), cells_of[i].end(),
                            tr.surviving.begin(), tr.surviving.end(),
                            std::back_inserter(keep.indices));
      if (!keep.indices.empty()) requests.push_back({i, std::move(keep)});
    }
    std::vector<Point> received;
    for (const Reply& rep : net.Exchange(std::move(requests))) {
      received.insert(received.end(), rep.payload.points.begin(),
                      rep.payload.points.end());
    }
    result.recovered_points = received.size();
    result.skyline = ComputeSkylineUnchecked(received);
    return result;
  };

  const auto raw = internal::Borrow(sites);
  return RunProtocol(coordinator, raw,
                     internal::WithDefaultCap(options, instance.total_points()));
}

}  // namespace dsky
