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
#include <unordered_set>
#include <vector>

#include "dsky/baselines.h"
#include "dsky/skyline.h"
#include "horizontal_internal.h"

namespace dsky {
namespace {

double Score(const Point& p) { return p.x + p.y; }

// Local skyline in decreasing score order. The site follows the fixed
// three-round cycle, so the request shape never has to name the phase.
class FdsSite : public SiteLogic {
 public:
  FdsSite(std::vector<Point> skyline, int kappa) : kappa_(kappa) {
    std::sort(skyline.begin(), skyline.end(), [](const Point& a, const Point& b) {
      const double sa = Score(a), sb = Score(b);
      return sa > sb || (sa == sb && a.id < b.id);
    });
    pending_ = std::move(skyline);
  }

  Payload Handle(const Payload& request) override {
    Payload reply;
    switch (phase_) {
      case 0: {
        const std::size_t take = std::min<std::size_t>(kappa_, pending_.size());
        reply.points.assign(pending_.begin(), pending_.begin() + take);
        pending_.erase(pending_.begin(), pending_.begin() + take);
        break;
      }
      case 1: {
        const double f_min = request.scalars.at(0);
        auto cut = std::partition_point(pending_.begin(), pending_.end(),
                                        [&](const Point& p) { return Score(p) > f_min; });
        reply.points.assign(pending_.begin(), cut);
        pending_.erase(pending_.begin(), cut);
        break;
      }
      default:
        std::erase_if(pending_, [&](const Point& p) {
          return std::any_of(request.points.begin(), request.points.end(),
                             [&](const Point& q) { return Dominates(q, p); });
        });
        break;
    }
    phase_ = (phase_ + 1) % 3;
    reply.exhausted = pending_.empty();
    return reply;
  }

 private:
  int kappa_;
  std::vector<Point> pending_;
  int phase_ = 0;
};

}  // namespace

ProtocolOutcome RunFds(const HorizontalInstance& instance,
                       const FdsOptions& fds, SimOptions options) {
  if (fds.kappa < 1) throw ParameterError("kappa must be at least 1");
  if (fds.ell < 1) throw ParameterError("ell must be at least 1");
  ValidateHorizontal(instance);
  std::vector<std::unique_ptr<SiteLogic>> sites;
  for (auto& local : internal::LocalSkylines(instance)) {
    sites.push_back(std::make_unique<FdsSite>(std::move(local), fds.kappa));
  }

  auto coordinator = [&](Network& net) {
    std::vector<bool> active(net.num_sites(), true);
    auto broadcast = [&](const Payload& payload) {
      std::vector<Request> requests;
      for (std::size_t i = 0; i < active.size(); ++i) {
        if (active[i]) requests.push_back({i, payload});
      }
      return requests;
    };
    std::vector<Point> received;
    std::vector<Point> global;  // current global skyline
    std::unordered_set<PointId> announced;

    auto absorb = [&](std::vector<Reply>& replies, double* f_min) {
      for (Reply& rep : replies) {
        for (const Point& p : rep.payload.points) {
          received.push_back(p);
          global.push_back(p);
          if (f_min) *f_min = std::min(*f_min, Score(p));
        }
        if (rep.payload.exhausted) active[rep.site] = false;
      }
      global = ComputeSkylineUnchecked(global).points;
    };

    while (std::find(active.begin(), active.end(), true) != active.end()) {
      double f_min = std::numeric_limits<double>::infinity();
      auto top = net.Exchange(broadcast({}));
      absorb(top, &f_min);

      Payload threshold;
      threshold.scalars.push_back(f_min);
      auto above = net.Exchange(broadcast(threshold));
      absorb(above, nullptr);

      Payload feedback;
      for (const Point& p : global) {
        if (announced.insert(p.id).second) feedback.points.push_back(p);
      }
      auto pruned = net.Exchange(broadcast(feedback));
      absorb(pruned, nullptr);
    }

    CoordinatorResult result;
    result.recovered_points = received.size();
    result.skyline = ComputeSkylineUnchecked(global);
    return result;
  };

  const auto raw = internal::Borrow(sites);
  return RunProtocol(coordinator, raw,
                     internal::WithDefaultCap(options, instance.total_points()));
}

}  // namespace dsky
