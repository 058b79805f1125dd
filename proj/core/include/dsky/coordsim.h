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

// Deterministic simulation of the coordinator model: s sites with private
// state and one coordinator that drives synchronized rounds. A round is a
// batch of coordinator->site messages followed by one reply from every
// contacted site. Every message is logged with its word cost.

#ifndef DSKY_COORDSIM_H_
#define DSKY_COORDSIM_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsky/point.h"
#include "dsky/skyline.h"

namespace dsky {

// One coordinate of a vertically partitioned point together with its id:
// (x, id) at the first site or (id, y) at the second.
struct HalfPoint {
  PointId id = 0;
  double value = 0.0;

  friend bool operator==(const HalfPoint&, const HalfPoint&) = default;
};

// Algorithm-defined message body. The word cost is a function of the
// field sizes only; see WordCost.
struct Payload {
  std::vector<Point> points;           // 2 words each (id implicit)
  std::vector<HalfPoint> halves;       // 2 words each
  std::vector<double> scalars;         // 1 word each
  std::vector<PointId> ids;            // 1 word each
  std::vector<std::int64_t> indices;   // 1 word each
  bool exhausted = false;              // 1 word when set

  bool empty() const {
    return points.empty() && halves.empty() && scalars.empty() &&
           ids.empty() && indices.empty() && !exhausted;
  }
  friend bool operator==(const Payload&, const Payload&) = default;
};

std::size_t WordCost(const Payload& payload);

enum class Direction { kDown, kUp };

struct Message {
  Direction direction = Direction::kDown;
  std::size_t site = 0;  // 0-based
  int round = 0;         // 1-based
  std::size_t payload_words = 0;
  Payload payload;
};

struct Transcript {
  std::vector<Message> messages;
  int rounds_used = 0;

  std::size_t TotalWords() const;
  std::size_t WordsIn(Direction direction) const;
  // Delimited export, one message per line after a header:
  // round,direction,site,payload_words (site is 1-based).
  void WriteCsv(std::ostream& out) const;
  std::string ToCsv() const;
};

struct CostReport {
  std::size_t total_words = 0;
  std::size_t total_messages = 0;
  int rounds = 0;
  std::size_t recovered_points = 0;
  std::chrono::nanoseconds coordinator_time{0};
  std::chrono::nanoseconds max_site_time{0};

  std::size_t bits() const { return total_words * 64; }
};

struct ProtocolOutcome {
  Skyline skyline;
  Transcript transcript;
  CostReport cost;
};

// Thrown on a violation of the round structure (a site contacted twice in
// one round) or when the round cap is exceeded.
class ProtocolFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Private state and message handler of one site.
class SiteLogic {
 public:
  virtual ~SiteLogic() = default;
  virtual Payload Handle(const Payload& request) = 0;
};

struct SimOptions {
  // 0 means "derive from the instance": 10 * max(n, 1).
  int round_cap = 0;
  // Run the contacted sites of a round on separate threads. The transcript
  // is identical either way.
  bool parallel_sites = false;
};

struct Request {
  std::size_t site = 0;
  Payload payload;
};

struct Reply {
  std::size_t site = 0;
  Payload payload;
};

// The communication fabric handed to coordinator logic. Owns the transcript.
class Network {
 public:
  Network(std::span<SiteLogic* const> sites, SimOptions options);

  std::size_t num_sites() const { return sites_.size(); }
  int rounds() const { return transcript_.rounds_used; }

  // Runs one round: delivers every request, then collects one reply per
  // contacted site. Replies come back in ascending site order. An empty
  // request list does not consume a round.
  std::vector<Reply> Exchange(std::vector<Request> requests);

  const Transcript& transcript() const { return transcript_; }
  Transcript TakeTranscript() { return std::move(transcript_); }

  std::chrono::nanoseconds site_phase_time() const { return site_phase_time_; }
  std::chrono::nanoseconds max_site_time() const;

 private:
  std::vector<SiteLogic*> sites_;
  SimOptions options_;
  Transcript transcript_;
  std::vector<std::chrono::nanoseconds> site_time_;
  std::chrono::nanoseconds site_phase_time_{0};
};

// What the coordinator declares when it terminates.
struct CoordinatorResult {
  Skyline skyline;
  std::size_t recovered_points = 0;
};

using CoordinatorLogic = std::function<CoordinatorResult(Network&)>;

// Executes a protocol to completion and assembles its cost report.
ProtocolOutcome RunProtocol(const CoordinatorLogic& coordinator,
                            std::span<SiteLogic* const> sites,
                            SimOptions options);

}  // namespace dsky

#endif  // DSKY_COORDSIM_H_
