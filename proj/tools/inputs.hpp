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

#include <filesystem>
#include <json.hpp>
#include <string>
#include <vector>

#include "netclus/query.hpp"

namespace netclus::cli {

using Json = nlohmann::ordered_json;

// `<site> <value>` per line; '#' comments allowed.
CostModel read_costs(const std::filesystem::path& file);
CapacityModel read_capacities(const std::filesystem::path& file);
// Whitespace-separated node ids.
std::vector<NodeId> read_node_list(const std::filesystem::path& file);

// Comma-separated list of numbers, e.g. "1,5,10".
std::vector<double> parse_number_list(const std::string& text);
std::vector<std::string> split_list(const std::string& text);

Json result_document(const QueryResult& r, const QueryParams& params);

// Writes `doc` (pretty, trailing newline) to `path`, or stdout when empty.
void emit(const Json& doc, const std::string& path);

}  // namespace netclus::cli
