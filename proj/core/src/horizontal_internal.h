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

#ifndef DSKY_SRC_HORIZONTAL_INTERNAL_H_
#define DSKY_SRC_HORIZONTAL_INTERNAL_H_

#include <memory>
#include <vector>

#include "dsky/coordsim.h"

namespace dsky::internal {

SimOptions WithDefaultCap(SimOptions options, std::size_t n);

// Number of distinct point ids carried by up-messages.
std::size_t DistinctPointsReceived(const Transcript& transcript);

std::vector<SiteLogic*> Borrow(
    const std::vector<std::unique_ptr<SiteLogic>>& sites);

}  // namespace dsky::internal

#endif  // DSKY_SRC_HORIZONTAL_INTERNAL_H_
