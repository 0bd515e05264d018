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

#include "inputs.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "netclus/errors.hpp"

namespace netclus::cli {

namespace {

std::ifstream open(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ValidationError("cannot open " + file.string());
  return in;
}

template <typename Fn>
void for_each_record(const std::filesystem::path& file, Fn fn) {
  std::ifstream in = open(file);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first[0] == '#') continue;
    std::string second, extra;
    if (!(fields >> second) || (fields >> extra)) {
      throw ParseError(file.string(), number, "expected `<site> <value>`");
    }
    fn(first, second, number);
  }
}

template <typename T>
T number_or_throw(const std::string& tok, const std::string& source, std::size_t line) {
  T v{};
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    throw ParseError(source, line, "bad number `" + tok + "`");
  }
  return v;
}

}  // namespace

CostModel read_costs(const std::filesystem::path& file) {
  CostModel model;
  for_each_record(file, [&](const std::string& a, const std::string& b, std::size_t line) {
    const double c = number_or_throw<double>(b, file.string(), line);
    if (a == "default") {
      model.default_cost = c;
    } else {
      model.cost[number_or_throw<NodeId>(a, file.string(), line)] = c;
    }
  });
  return model;
}

CapacityModel read_capacities(const std::filesystem::path& file) {
  CapacityModel model;
  for_each_record(file, [&](const std::string& a, const std::string& b, std::size_t line) {
    const auto c = number_or_throw<std::size_t>(b, file.string(), line);
    if (a == "default") {
      model.default_capacity = c;
    } else {
      model.capacity[number_or_throw<NodeId>(a, file.string(), line)] = c;
    }
  });
  return model;
}

std::vector<NodeId> read_node_list(const std::filesystem::path& file) {
  std::ifstream in = open(file);
  std::vector<NodeId> nodes;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream fields(line);
    std::string tok;
    while (fields >> tok) {
      if (tok[0] == '#') break;
      nodes.push_back(number_or_throw<NodeId>(tok, file.string(), number));
    }
  }
  return nodes;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& item : split_list(text)) {
    out.push_back(number_or_throw<double>(item, "list `" + text + "`", 1));
  }
  if (out.empty()) throw ArgumentError("empty list `" + text + "`");
  return out;
}

Json result_document(const QueryResult& r, const QueryParams& params) {
  const GreedyResult& g = r.greedy;
  Json doc;
  doc["method"] = to_string(params.method);
  doc["variant"] = to_string(params.variant);
  doc["k"] = params.k;
  doc["tau"] = params.spec.tau();
  doc["psi"] = params.spec.describe();
  doc["chosen_sites"] = g.chosen;
  doc["utility"] = g.utility;
  doc["utility_pct"] = r.utility_pct;
  if (r.exact_utility) doc["exact_utility"] = *r.exact_utility;
  doc["per_iteration_gains"] = g.gains;
  if (r.choice) {
    doc["instance_p"] =
        r.choice->verdict == Verdict::kFallbackExact ? Json(nullptr) : Json(r.choice->p);
    doc["verdict"] = to_string(r.choice->verdict);
  } else {
    doc["instance_p"] = nullptr;
    doc["verdict"] = "exact";
  }
  doc["trajectories"] = r.trajectory_count;
  doc["candidates"] = r.candidate_count;
  doc["covered_trajectories"] = g.covered_trajectories;
  doc["stop_reason"] = to_string(g.stop_reason);
  if (!g.estimated_gains.empty()) doc["estimated_gains"] = g.estimated_gains;
  switch (params.variant) {
    case Variant::kCost:
      doc["budget"] = params.budget;
      doc["total_cost"] = g.total_cost;
      doc["returned_single_best"] = g.returned_single_best;
      break;
    case Variant::kCapacity: {
      Json ledger = Json::array();
      for (const Assignment& a : g.assignments) {
        ledger.push_back({{"site", a.site}, {"trajectories", a.trajectories}});
      }
      doc["assignments"] = ledger;
      break;
    }
    case Variant::kExisting:
      doc["existing"] = params.existing;
      doc["existing_utility"] = g.existing_utility;
      doc["gain_over_existing"] = g.gain_over_existing;
      break;
    case Variant::kMarketShare:
      doc["beta"] = params.beta;
      doc["coverage_target"] = g.coverage_target;
      doc["infeasible"] = g.infeasible;
      break;
    case Variant::kTops:
      break;
  }
  if (r.choice && r.choice->verdict != Verdict::kFallbackExact) {
    doc["estimate_accesses"] = r.coverage_stats.accesses;
    doc["estimate_access_bound"] = r.coverage_stats.bound;
  }
  doc["elapsed_ms"] = g.elapsed_ms;
  return doc;
}

void emit(const Json& doc, const std::string& path) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

}  // namespace netclus::cli
