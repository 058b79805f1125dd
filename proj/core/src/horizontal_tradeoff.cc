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
#include <cmath>
#include <map>
#include <memory>
#include <vector>

#include "dsky/horizontal.h"
#include "dsky/quantiles.h"
#include "dsky/skyline.h"
#include "horizontal_internal.h"

namespace dsky {
namespace {

// Request shapes (the schedule tells the site which one it is looking at):
//   quantile round:  points = newly confirmed, indices = {d}
//   maxima round:    scalars = strip boundaries
//   final round:     points = newly confirmed
class TradeoffSite : public SiteLogic {
 public:
  explicit TradeoffSite(std::vector<Point> skyline) : pts_(std::move(skyline)) {}

  Payload Handle(const Payload& request) override {
    if (expecting_boundaries_) {
      expecting_boundaries_ = false;
      return StripMaxima(request.scalars);
    }
    PruneDominated(pts_, request.points);
    Payload reply;
    if (pts_.empty()) {
      reply.exhausted = true;
      return reply;
    }
    if (request.indices.empty()) {
      reply.points = pts_;
      return reply;
    }
    const auto d = static_cast<std::size_t>(request.indices.front());
    std::vector<double> xs;
    xs.reserve(pts_.size());
    for (const Point& p : pts_) xs.push_back(p.x);
    QuantileSummary summary = LocalSummary(xs, 1.0 / static_cast<double>(d));
    reply.scalars = std::move(summary.values);
    reply.indices.push_back(static_cast<std::int64_t>(pts_.size()));
    expecting_boundaries_ = true;
    return reply;
  }

 private:
  Payload StripMaxima(const std::vector<double>& boundaries) const {
    // pts_ is sorted by x, so strips are contiguous runs.
    Payload reply;
    std::size_t i = 0;
    while (i < pts_.size()) {
      const std::size_t strip = StripOf(boundaries, pts_[i].x);
      Point best = pts_[i];
      std::size_t j = i + 1;
      for (; j < pts_.size() && StripOf(boundaries, pts_[j].x) == strip; ++j) {
        if (pts_[j].y > best.y || (pts_[j].y == best.y && pts_[j].x > best.x)) {
          best = pts_[j];
        }
      }
      reply.points.push_back(best);
      reply.indices.push_back(static_cast<std::int64_t>(strip));
      i = j;
    }
    return reply;
  }

  std::vector<Point> pts_;
  bool expecting_boundaries_ = false;
};

}  // namespace

std::size_t TradeoffStripCount(double k, std::size_t n, std::size_t s, int t,
                               bool known_k) {
  if (t < 2) throw ParameterError("tradeoff needs at least one pruning step");
  if (!(k > 0.0) || n == 0 || s == 0) return 1;
  const double steps = static_cast<double>(t - 1);
  const double inner = known_k
      ? static_cast<double>(n) * steps / (2.0 * static_cast<double>(s) * k)
      : static_cast<double>(n) * steps / (2.0 * static_cast<double>(s));
  const double d = 2.0 * k / steps * std::pow(inner, 1.0 / static_cast<double>(t));
  if (!(d > 1.0)) return 1;
  return static_cast<std::size_t>(std::ceil(d));
}

ProtocolOutcome RunTradeoff(const HorizontalInstance& instance,
                            const TradeoffOptions& tradeoff,
                            SimOptions options, TradeoffTrace* trace) {
  if (tradeoff.rounds < 3) {
    throw ParameterError("tradeoff needs a round budget of at least 3");
  }
  if (tradeoff.known_k && *tradeoff.known_k == 0) {
    throw ParameterError("known k must be positive");
  }
  ValidateHorizontal(instance);
  std::vector<std::unique_ptr<SiteLogic>> sites;
  for (auto& local : internal::LocalSkylines(instance)) {
    sites.push_back(std::make_unique<TradeoffSite>(std::move(local)));
  }

  const std::size_t n = instance.total_points();
  const std::size_t s = instance.num_sites();
  const int t = (tradeoff.rounds + 1) / 2;
  TradeoffTrace local_trace;
  TradeoffTrace& tr = trace ? *trace : local_trace;
  tr = TradeoffTrace{};
  tr.step_budget = t;

  auto coordinator = [&](Network& net) {
    std::vector<bool> active(s, true);
    auto any_active = [&] {
      return std::find(active.begin(), active.end(), true) != active.end();
    };
    std::vector<Point> pending;
    std::vector<Point> confirmed;
    std::size_t remaining_bound = n;
    std::size_t last_new = 0;

    for (int step = 1; step <= t - 1 && any_active(); ++step) {
      TradeoffStep stat;
      if (tradeoff.known_k) {
        stat.k_guess = static_cast<double>(*tradeoff.known_k);
      } else {
        stat.k_guess = step == 1 ? static_cast<double>(t - 1)
                                 : static_cast<double>(last_new * (t - 1));
      }
      std::size_t d = TradeoffStripCount(stat.k_guess, n, s, t,
                                         tradeoff.known_k.has_value());
      d = std::clamp<std::size_t>(d, 1, std::max<std::size_t>(remaining_bound, 1));
      stat.strips = d;
      const double epsilon = 1.0 / static_cast<double>(d);

      // Quantile round.
      std::vector<Request> requests;
      for (std::size_t i = 0; i < s; ++i) {
        if (!active[i]) continue;
        Payload p;
        p.points = pending;
        p.indices.push_back(static_cast<std::int64_t>(d));
        requests.push_back({i, std::move(p)});
      }
      pending.clear();
      std::vector<QuantileSummary> summaries;
      for (Reply& rep : net.Exchange(std::move(requests))) {
        if (rep.payload.exhausted) {
          active[rep.site] = false;
          continue;
        }
        summaries.push_back(SummaryFromWire(
            std::move(rep.payload.scalars),
            static_cast<std::size_t>(rep.payload.indices.front()), epsilon,
            rep.site));
      }
      if (summaries.empty()) break;
      remaining_bound = 0;
      for (const auto& q : summaries) remaining_bound += q.local_count;
      stat.remaining_before = remaining_bound;
      const std::vector<double> boundaries = StripBoundaries(summaries, d);

      // Maxima round.
      requests.clear();
      for (std::size_t i = 0; i < s; ++i) {
        if (active[i]) requests.push_back({i, Payload{.scalars = boundaries}});
      }
      std::map<std::int64_t, Point> strip_max;
      for (const Reply& rep : net.Exchange(std::move(requests))) {
        for (std::size_t j = 0; j < rep.payload.points.size(); ++j) {
          const Point& p = rep.payload.points[j];
          auto [it, inserted] = strip_max.try_emplace(rep.payload.indices[j], p);
          if (!inserted && (p.y > it->second.y ||
                            (p.y == it->second.y && p.x > it->second.x))) {
            it->second = p;
          }
        }
      }
      std::vector<Point> maxima;
      for (const auto& [strip, p] : strip_max) maxima.push_back(p);
      // The undominated strip maxima cannot be beaten by anything still held
      // at the sites, so they are global skyline points.
      pending = ComputeSkylineUnchecked(maxima).points;
      confirmed.insert(confirmed.end(), pending.begin(), pending.end());
      last_new = pending.size();
      stat.new_skyline_points = last_new;
      tr.steps.push_back(stat);
    }

    // Final round: ship whatever survived.
    std::vector<Request> requests;
    for (std::size_t i = 0; i < s; ++i) {
      if (active[i]) requests.push_back({i, Payload{.points = pending}});
    }
    std::vector<Point> all = confirmed;
    for (const Reply& rep : net.Exchange(std::move(requests))) {
      tr.final_upload_points += rep.payload.points.size();
      all.insert(all.end(), rep.payload.points.begin(), rep.payload.points.end());
    }
    CoordinatorResult result;
    result.skyline = ComputeSkylineUnchecked(all);
    result.recovered_points = internal::DistinctPointsReceived(net.transcript());
    return result;
  };

  const auto raw = internal::Borrow(sites);
  return RunProtocol(coordinator, raw, internal::WithDefaultCap(options, n));
}

}  // namespace dsky
