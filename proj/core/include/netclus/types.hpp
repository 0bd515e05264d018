// Copyright 2026 The NetClus Authors.
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

#pragma once

#include <cstdint>
#include <limits>

namespace netclus {

using NodeId = std::uint32_t;
using TrajectoryId = std::int64_t;

// All distances are meters. Unreachable is +infinity.
using Meters = double;

inline constexpr Meters kUnreachable = std::numeric_limits<Meters>::infinity();

}  // namespace netclus
