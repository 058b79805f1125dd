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

#include "dsky/vertical.h"

#include <algorithm>
#include <limits>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dsky/skyline.h"
#include "horizontal_internal.h"

namespace dsky {
namespace {

bool Descending(const HalfPoint& a, const HalfPoint& b) {
  return a.value > b.value || (a.value == b.value && a.id < b.id);
}

// One column store split into equal groups of ceil(n / rho) entries (the
// last group may be smaller).
//   empty request      -> split values of groups 1..G-1, plus group 1
//   ids                -> the requested (id, value) pairs
//   indices {g}        -> group g
//   indices {f, l}     -> groups f..l-1
class ColumnSite : public SiteLogic {
 public:
  ColumnSite(std::vector<HalfPoint> column, std::size_t groups)
      : column_(std::move(column)) {
    const std::size_t n = column_.size();
    group_size_ = n == 0 ? 1 : (n + groups - 1) / groups;
    group_count_ = n == 0 ? 0 : (n + group_size_ - 1) / group_size_;
    index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) index_.emplace(column_[i].id, i);
  }

  std::size_t group_count() const { return group_count_; }

  Payload Handle(const Payload& request) override {
    Payload reply;
    if (!request.ids.empty()) {
      for (PointId id : request.ids) reply.halves.push_back(column_[index_.at(id)]);
    } else if (request.indices.size() == 1) {
      AppendGroups(static_cast<std::size_t>(request.indices[0]),
                   static_cast<std::size_t>(request.indices[0]) + 1, reply);
    } else if (request.indices.size() == 2) {
      AppendGroups(static_cast<std::size_t>(request.indices[0]),
                   static_cast<std::size_t>(request.indices[1]), reply);
    } else {
      for (std::size_t g = 1; g < group_count_; ++g) {
        reply.scalars.push_back(column_[g * group_size_ - 1].value);
      }
      AppendGroups(1, 2, reply);
    }
    return reply;
  }

 private:
  // Groups [first, last), 1-based.
  void AppendGroups(std::size_t first, std::size_t last, Payload& reply) const {
    const std::size_t begin = std::min((first - 1) * group_size_, column_.size());
    const std::size_t end = std::min((last - 1) * group_size_, column_.size());
    reply.halves.insert(reply.halves.end(), column_.begin() + begin,
                        column_.begin() + end);
  }

  std::vector<HalfPoint> column_;
  std::unordered_map<PointId, std::size_t> index_;
  std::size_t group_size_ = 1;
  std::size_t group_count_ = 0;
};

class FullColumnSite : public SiteLogic {
 public:
  explicit FullColumnSite(const std::vector<HalfPoint>& column) : column_(column) {}
  Payload Handle(const Payload&) override { return Payload{.halves = column_}; }

 private:
  const std::vector<HalfPoint>& column_;
};

constexpr std::size_t kAlice = 0;
constexpr std::size_t kBob = 1;

class PruneCoordinator {
 public:
  PruneCoordinator(const PruneOptions& options, std::size_t group_count,
                   PruneTrace& trace)
      : options_(options), groups_(group_count), trace_(trace) {}

  CoordinatorResult Run(Network& net) {
    // Stage 1: top group of each column plus the split values.
    std::vector<PointId> top_x;
    std::vector<PointId> top_y;
    for (Reply& rep : net.Exchange({{kAlice, {}}, {kBob, {}}})) {
      if (rep.site == kAlice) {
        splits_x_ = rep.payload.scalars;
        top_x = Record(kAlice, rep.payload.halves);
      } else {
        splits_y_ = rep.payload.scalars;
        top_y = Record(kBob, rep.payload.halves);
      }
    }
    CrossRecover(net, top_x, top_y);
    cur_.l_x = std::min(groups_ + 1, MinGroup(kAlice, top_y) + 1);
    cur_.l_y = std::min(groups_ + 1, MinGroup(kBob, top_x) + 1);
    cur_.f_x = 2;
    cur_.f_y = 2;
    trace_.after_stage1 = cur_;

    // Stage 2: one group per two-round step from the side with the smaller
    // gap; ties go to Alice.
    for (int step = 1; 2 * step <= options_.rounds - 4 && Unresolved(); ++step) {
      const bool alice = Gap(cur_.l_x, cur_.f_x) <= Gap(cur_.l_y, cur_.f_y);
      const std::size_t site = alice ? kAlice : kBob;
      std::size_t& f = alice ? cur_.f_x : cur_.f_y;
      std::size_t& l_other = alice ? cur_.l_y : cur_.l_x;
      const std::size_t group = f;
      Payload request;
      request.indices.push_back(static_cast<std::int64_t>(group));
      std::vector<PointId> fetched;
      for (Reply& rep : net.Exchange({{site, std::move(request)}})) {
        fetched = Record(site, rep.payload.halves);
      }
      if (alice) {
        CrossRecover(net, fetched, {});
      } else {
        CrossRecover(net, {}, fetched);
      }
      l_other = std::min(l_other, MinGroup(1 - site, fetched) + 1);
      ++f;
      trace_.steps.push_back({alice ? Side::kAlice : Side::kBob, group, cur_});
    }

    // Stage 3: fetch every still unresolved group of the smaller-gap side.
    if (Unresolved()) {
      const bool alice = Gap(cur_.l_x, cur_.f_x) <= Gap(cur_.l_y, cur_.f_y);
      const std::size_t site = alice ? kAlice : kBob;
      const std::size_t f = alice ? cur_.f_x : cur_.f_y;
      const std::size_t l = alice ? cur_.l_x : cur_.l_y;
      Payload request;
      request.indices = {static_cast<std::int64_t>(f), static_cast<std::int64_t>(l)};
      std::vector<PointId> fetched;
      for (Reply& rep : net.Exchange({{site, std::move(request)}})) {
        fetched = Record(site, rep.payload.halves);
      }
      if (alice) {
        CrossRecover(net, fetched, {});
      } else {
        CrossRecover(net, {}, fetched);
      }
      trace_.bulk_fetch = true;
      trace_.bulk_side = alice ? Side::kAlice : Side::kBob;
      trace_.bulk_from = f;
      trace_.bulk_to = l - 1;
    }

    std::vector<Point> recovered;
    for (const auto& [id, x] : x_of_) {
      auto it = y_of_.find(id);
      if (it != y_of_.end()) recovered.push_back({id, x, it->second});
    }
    trace_.recovered.clear();
    for (const Point& p : recovered) trace_.recovered.push_back(p.id);
    std::sort(trace_.recovered.begin(), trace_.recovered.end());

    CoordinatorResult result;
    result.recovered_points = recovered.size();
    result.skyline = ComputeSkylineUnchecked(recovered);
    return result;
  }

 private:
  static long long Gap(std::size_t l, std::size_t f) {
    return static_cast<long long>(l) - static_cast<long long>(f);
  }

  bool Unresolved() const { return cur_.l_x > cur_.f_x && cur_.l_y > cur_.f_y; }

  std::vector<PointId> Record(std::size_t site,
                              const std::vector<HalfPoint>& halves) {
    auto& known = site == kAlice ? x_of_ : y_of_;
    std::vector<PointId> ids;
    ids.reserve(halves.size());
    for (const HalfPoint& h : halves) {
      known.emplace(h.id, h.value);
      ids.push_back(h.id);
    }
    return ids;
  }

  // Asks each side for the coordinate it is missing on the given ids.
  // from_alice ids need a y from Bob; from_bob ids need an x from Alice.
  void CrossRecover(Network& net, const std::vector<PointId>& from_alice,
                    const std::vector<PointId>& from_bob) {
    Payload to_bob;
    for (PointId id : from_alice) {
      if (!y_of_.contains(id)) to_bob.ids.push_back(id);
    }
    Payload to_alice;
    for (PointId id : from_bob) {
      if (!x_of_.contains(id)) to_alice.ids.push_back(id);
    }
    std::vector<Request> requests;
    if (!to_alice.ids.empty()) requests.push_back({kAlice, std::move(to_alice)});
    if (!to_bob.ids.empty()) requests.push_back({kBob, std::move(to_bob)});
    for (Reply& rep : net.Exchange(std::move(requests))) {
      Record(rep.site, rep.payload.halves);
    }
  }

  // Group index of a value on one side, resolved from the split values.
  // On ties with a split value the later group is reported, which can only
  // make the pruning bound more conservative.
  std::size_t GroupOf(std::size_t site, double value) const {
    const auto& splits = site == kAlice ? splits_x_ : splits_y_;
    auto it = std::partition_point(splits.begin(), splits.end(),
                                   [&](double s) { return s >= value; });
    return 1 + static_cast<std::size_t>(it - splits.begin());
  }

  std::size_t MinGroup(std::size_t site, const std::vector<PointId>& ids) const {
    const auto& known = site == kAlice ? x_of_ : y_of_;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (PointId id : ids) best = std::min(best, GroupOf(site, known.at(id)));
    return best == std::numeric_limits<std::size_t>::max() ? groups_ : best;
  }

  PruneOptions options_;
  std::size_t groups_;
  PruneTrace& trace_;
  PruneCursor cur_;
  std::vector<double> splits_x_;
  std::vector<double> splits_y_;
  std::unordered_map<PointId, double> x_of_;
  std::unordered_map<PointId, double> y_of_;
};

}  // namespace

std::vector<Point> VerticalInstance::Join() const {
  std::unordered_map<PointId, double> y_of;
  y_of.reserve(bob.size());
  for (const HalfPoint& h : bob) y_of.emplace(h.id, h.value);
  std::vector<Point> points;
  points.reserve(alice.size());
  for (const HalfPoint& h : alice) {
    auto it = y_of.find(h.id);
    if (it == y_of.end()) {
      throw InstanceError("id " + std::to_string(h.id) + " missing at Bob");
    }
    points.push_back({h.id, h.value, it->second});
  }
  std::sort(points.begin(), points.end(),
            [](const Point& a, const Point& b) { return a.id < b.id; });
  return points;
}

VerticalInstance MakeVertical(const std::vector<Point>& points) {
  VerticalInstance v;
  v.alice.reserve(points.size());
  v.bob.reserve(points.size());
  for (const Point& p : points) {
    v.alice.push_back({p.id, p.x});
    v.bob.push_back({p.id, p.y});
  }
  std::sort(v.alice.begin(), v.alice.end(), Descending);
  std::sort(v.bob.begin(), v.bob.end(), Descending);
  return v;
}

void ValidateVertical(const VerticalInstance& instance) {
  if (instance.alice.size() != instance.bob.size()) {
    throw InstanceError("column stores differ in size");
  }
  if (!std::is_sorted(instance.alice.begin(), instance.alice.end(), Descending) ||
      !std::is_sorted(instance.bob.begin(), instance.bob.end(), Descending)) {
    throw InstanceError("column stores must be sorted decreasing");
  }
  std::unordered_set<PointId> ids;
  for (const HalfPoint& h : instance.alice) {
    if (!ids.insert(h.id).second) {
      throw InstanceError("id " + std::to_string(h.id) + " repeated at Alice");
    }
  }
  std::unordered_set<PointId> bob_ids;
  for (const HalfPoint& h : instance.bob) {
    if (!bob_ids.insert(h.id).second || !ids.contains(h.id)) {
      throw InstanceError("id " + std::to_string(h.id) +
                          " repeated or unknown at Bob");
    }
  }
  ValidateDistinct(instance.Join());
}

ProtocolOutcome RunVerticalNaive(const VerticalInstance& instance,
                                 SimOptions options) {
  ValidateVertical(instance);
  FullColumnSite alice(instance.alice);
  FullColumnSite bob(instance.bob);
  std::vector<SiteLogic*> sites = {&alice, &bob};

  auto coordinator = [](Network& net) {
    std::unordered_map<PointId, double> x_of;
    std::vector<HalfPoint> ys;
    for (Reply& rep : net.Exchange({{kAlice, {}}, {kBob, {}}})) {
      if (rep.site == kAlice) {
        for (const HalfPoint& h : rep.payload.halves) x_of.emplace(h.id, h.value);
      } else {
        ys = std::move(rep.payload.halves);
      }
    }
    std::vector<Point> joined;
    joined.reserve(ys.size());
    for (const HalfPoint& h : ys) joined.push_back({h.id, x_of.at(h.id), h.value});
    CoordinatorResult result;
    result.recovered_points = joined.size();
    result.skyline = ComputeSkylineUnchecked(joined);
    return result;
  };
  return RunProtocol(coordinator, sites,
                     internal::WithDefaultCap(options, instance.size()));
}

ProtocolOutcome RunPrune(const VerticalInstance& instance,
                         const PruneOptions& prune, SimOptions options,
                         PruneTrace* trace) {
  if (prune.groups < 1) throw ParameterError("rho must be at least 1");
  if (prune.rounds < 6) throw ParameterError("prune needs a round budget of at least 6");
  ValidateVertical(instance);
  ColumnSite alice(instance.alice, prune.groups);
  ColumnSite bob(instance.bob, prune.groups);
  std::vector<SiteLogic*> sites = {&alice, &bob};

  PruneTrace local_trace;
  PruneTrace& tr = trace ? *trace : local_trace;
  tr = PruneTrace{};
  tr.group_count = alice.group_count();

  if (instance.size() == 0) {
    return RunProtocol([](Network&) { return CoordinatorResult{}; }, sites,
                       internal::WithDefaultCap(options, 0));
  }
  PruneCoordinator coordinator(prune, alice.group_count(), tr);
  return RunProtocol([&](Network& net) { return coordinator.Run(net); }, sites,
                     internal::WithDefaultCap(options, instance.size()));
}

}  // namespace dsky
