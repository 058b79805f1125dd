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

#include "dsky/coordsim.h"

#include <algorithm>
#include <future>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

namespace dsky {
namespace {

using Clock = std::chrono::steady_clock;

}  // namespace

std::size_t WordCost(const Payload& payload) {
  return 2 * payload.points.size() + 2 * payload.halves.size() +
         payload.scalars.size() + payload.ids.size() +
         payload.indices.size() + (payload.exhausted ? 1 : 0);
}

std::size_t Transcript::TotalWords() const {
  std::size_t total = 0;
  for (const Message& m : messages) total += m.payload_words;
  return total;
}

std::size_t Transcript::WordsIn(Direction direction) const {
  std::size_t total = 0;
  for (const Message& m : messages) {
    if (m.direction == direction) total += m.payload_words;
  }
  return total;
}

void Transcript::WriteCsv(std::ostream& out) const {
  out << "round,direction,site,payload_words\n";
  for (const Message& m : messages) {
    out << m.round << ','
        << (m.direction == Direction::kDown ? "down" : "up") << ','
        << (m.site + 1) << ',' << m.payload_words << '\n';
  }
}

std::string Transcript::ToCsv() const {
  std::ostringstream out;
  WriteCsv(out);
  return out.str();
}

Network::Network(std::span<SiteLogic* const> sites, SimOptions options)
    : sites_(sites.begin(), sites.end()),
      options_(options),
      site_time_(sites.size(), std::chrono::nanoseconds{0}) {
  if (sites_.empty()) throw ParameterError("protocol needs at least one site");
  if (options_.round_cap <= 0) options_.round_cap = 10;
}

std::chrono::nanoseconds Network::max_site_time() const {
  std::chrono::nanoseconds best{0};
  for (auto t : site_time_) best = std::max(best, t);
  return best;
}

std::vector<Reply> Network::Exchange(std::vector<Request> requests) {
  if (requests.empty()) return {};
  std::sort(requests.begin(), requests.end(),
            [](const Request& a, const Request& b) { return a.site < b.site; });
  for (std::size_t i = 0; i < requests.size(); ++i) {
    if (requests[i].site >= sites_.size()) {
      throw ProtocolFault("request addressed to unknown site " +
                          std::to_string(requests[i].site));
    }
    if (i > 0 && requests[i].site == requests[i - 1].site) {
      throw ProtocolFault("site " + std::to_string(requests[i].site) +
                          " contacted twice in round " +
                          std::to_string(transcript_.rounds_used + 1));
    }
  }
  if (transcript_.rounds_used >= options_.round_cap) {
    throw ProtocolFault("round cap of " + std::to_string(options_.round_cap) +
                        " exceeded");
  }
  const int round = ++transcript_.rounds_used;

  for (const Request& req : requests) {
    transcript_.messages.push_back(Message{Direction::kDown, req.site, round,
                                           WordCost(req.payload), req.payload});
  }

  std::vector<Reply> replies(requests.size());
  auto run_one = [&](std::size_t i) {
    const auto start = Clock::now();
    replies[i].site = requests[i].site;
    replies[i].payload = sites_[requests[i].site]->Handle(requests[i].payload);
    site_time_[requests[i].site] += Clock::now() - start;
  };

  const auto phase_start = Clock::now();
  if (options_.parallel_sites && requests.size() > 1) {
    std::vector<std::future<void>> pending;
    pending.reserve(requests.size());
    for (std::size_t i = 0; i < requests.size(); ++i) {
      pending.push_back(std::async(std::launch::async, run_one, i));
    }
    for (auto& f : pending) f.get();
  } else {
    for (std::size_t i = 0; i < requests.size(); ++i) run_one(i);
  }
  site_phase_time_ += Clock::now() - phase_start;

  for (const Reply& rep : replies) {
    transcript_.messages.push_back(Message{Direction::kUp, rep.site, round,
                                           WordCost(rep.payload), rep.payload});
  }
  return replies;
}

ProtocolOutcome RunProtocol(const CoordinatorLogic& coordinator,
                            std::span<SiteLogic* const> sites,
                            SimOptions options) {
  Network network(sites, options);
  const auto start = Clock::now();
  CoordinatorResult result = coordinator(network);
  const auto elapsed = Clock::now() - start;

  ProtocolOutcome outcome;
  outcome.skyline = std::move(result.skyline);
  outcome.cost.coordinator_time =
      std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed) -
      network.site_phase_time();
  outcome.cost.max_site_time = network.max_site_time();
  outcome.transcript = network.TakeTranscript();
  outcome.cost.total_words = outcome.transcript.TotalWords();
  outcome.cost.total_messages = outcome.transcript.messages.size();
  outcome.cost.rounds = outcome.transcript.rounds_used;
  outcome.cost.recovered_points = result.recovered_points;
  return outcome;
}

}  // namespace dsky
