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

#include "commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "inputs.hpp"
#include "netclus/errors.hpp"
#include "netclus/netclus_index.hpp"
#include "netclus/oracle.hpp"
#include "netclus/query.hpp"
#include "netclus/synthetic.hpp"

namespace netclus::cli {

namespace fs = std::filesystem;

namespace {

Counting parse_counting(const std::string& text) {
  if (text == "exact") return Counting::kExact;
  if (text == "fm") return Counting::kFm;
  throw ArgumentError("unknown counting mode `" + text + "` (exact|fm)");
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << text;
}

struct QueryFlags {
  std::size_t k = 5;
  double tau = 800.0;
  std::string psi = "binary";
  std::string variant = "tops";
  std::string method = "netclus";
  double budget = 0.0;
  double beta = 0.0;
  std::string caps, costs, existing;
  std::size_t f = FmSketch::kDefaultRegisters;
  std::uint64_t seed = FmSketch::kDefaultSeed;
  bool evaluate = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--k", k, "Number of sites to select")->check(CLI::PositiveNumber);
    cmd->add_option("--tau", tau, "Coverage threshold (network distance units)");
    cmd->add_option("--psi", psi, "Preference: binary | linear | power:a=<float>");
    cmd->add_option("--variant", variant, "tops | cost | capacity | existing | market");
    cmd->add_option("--method", method, "netclus | incg | fmnetclus | fmg");
    cmd->add_option("--budget", budget, "Budget for --variant cost");
    cmd->add_option("--beta", beta, "Trajectory share for --variant market");
    cmd->add_option("--caps", caps, "File of `<site> <capacity>` lines (`default <c>` allowed)");
    cmd->add_option("--costs", costs, "File of `<site> <cost>` lines (`default <c>` allowed)");
    cmd->add_option("--existing", existing, "File listing nodes with existing services");
    cmd->add_option("--f", f, "FM sketch registers")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "FM sketch seed");
    cmd->add_flag("--evaluate", evaluate, "Also report the exact utility of the chosen sites");
  }

  QueryParams params() const {
    QueryParams p;
    p.k = k;
    p.spec = PreferenceSpec::parse(psi, tau);
    p.variant = parse_variant(variant);
    p.method = parse_method(method);
    p.budget = budget;
    p.beta = beta;
    p.fm_registers = f;
    p.fm_seed = seed;
    p.evaluate_exact = evaluate;
    if (p.variant == Variant::kCost) {
      if (!(budget > 0.0)) throw ArgumentError("--variant cost needs a positive --budget");
      if (costs.empty()) {
        p.costs.default_cost = 1.0;
      } else {
        p.costs = read_costs(costs);
      }
    }
    if (p.variant == Variant::kCapacity && !caps.empty()) p.capacities = read_capacities(caps);
    if (p.variant == Variant::kExisting) {
      if (existing.empty()) throw ArgumentError("--variant existing needs --existing <file>");
      p.existing = read_node_list(existing);
    }
    if (p.variant == Variant::kMarketShare && !(beta > 0.0 && beta <= 1.0)) {
      throw ArgumentError("--variant market needs --beta in (0, 1]");
    }
    return p;
  }
};

// ---------------------------------------------------------------- gen

struct GenFlags {
  std::string topology = "grid";
  std::size_t width = 10, height = 10, patches = 3;
  double edge_length = 1.0;
  std::size_t trajectories = 50, length = 20;
  std::uint64_t seed = 1;
  std::string out;
};

void run_gen(const GenFlags& f) {
  SyntheticOptions o;
  o.topology = parse_topology(f.topology);
  o.width = f.width;
  o.height = f.height;
  o.patches = f.patches;
  o.edge_length = f.edge_length;
  o.trajectories = f.trajectories;
  o.walk_length = f.length;
  o.seed = f.seed;
  const SyntheticDataset data = generate_synthetic(o);
  fs::create_directories(f.out);
  std::ostringstream net, sites, traj;
  write_network(net, data.network);
  write_sites(sites, data.network);
  write_trajectories(traj, data.trajectories);
  write_file(fs::path(f.out) / "network.txt", net.str());
  write_file(fs::path(f.out) / "sites.txt", sites.str());
  write_file(fs::path(f.out) / "trajectories.txt", traj.str());
  std::cout << "nodes " << data.network.node_count() << "  edges " << data.network.edge_count()
            << "  sites " << data.network.site_count() << "  trajectories "
            << data.trajectories.size() << "  -> " << f.out << '\n';
}

// ---------------------------------------------------------------- build

struct BuildFlags {
  std::string network, trajectories, sites, out;
  double gamma = 0.75;
  std::optional<double> tau_min, tau_max;
  std::string counting = "exact";
  std::size_t f = FmSketch::kDefaultRegisters;
  std::uint64_t seed = FmSketch::kDefaultSeed;
};

BuildOptions build_options(const BuildFlags& f) {
  BuildOptions o;
  o.gamma = f.gamma;
  o.tau_min = f.tau_min;
  o.tau_max = f.tau_max;
  o.gdsp.counting = parse_counting(f.counting);
  o.gdsp.fm_registers = f.f;
  o.gdsp.fm_seed = f.seed;
  return o;
}

void run_build(const BuildFlags& f) {
  RoadNetwork net = load_network(f.network, f.sites);
  TrajectoryStore store = load_trajectories(f.trajectories, net);
  const NetClusIndex index = build_index(std::move(net), std::move(store), build_options(f));
  save_index(f.out, index);
  write_index_stats(std::cout, index);
}

// ---------------------------------------------------------------- query

void run_query(const std::string& index_dir, const QueryFlags& q, const std::string& out) {
  const QueryParams params = q.params();
  const NetClusIndex index = load_index(index_dir);
  emit(result_document(tops_cluster_query(index, params), params), out);
}

// ---------------------------------------------------------------- oracle

struct OracleFlags {
  std::string index, network, trajectories, sites, out;
  std::size_t k = 2;
  double tau = 800.0;
  std::string psi = "binary";
  std::uint64_t guard = kDefaultSubsetGuard;
};

void run_oracle(const OracleFlags& f) {
  RoadNetwork net;
  TrajectoryStore store;
  if (!f.index.empty()) {
    net = load_network(fs::path(f.index) / "network.txt", fs::path(f.index) / "sites.txt");
    store = load_trajectories(fs::path(f.index) / "trajectories.txt", net);
  } else {
    if (f.network.empty() || f.sites.empty() || f.trajectories.empty()) {
      throw ArgumentError("oracle needs --index or all of --network, --sites, --trajectories");
    }
    net = load_network(f.network, f.sites);
    store = load_trajectories(f.trajectories, net);
  }
  const PreferenceSpec spec = PreferenceSpec::parse(f.psi, f.tau);
  const CoverageIndex cov =
      build_coverage(precompute_site_trajectory_distances(net, store, f.tau), spec);
  const OracleResult best = brute_force_optimal(cov, f.k, f.guard);
  const GreedyResult greedy = inc_greedy(cov, f.k);
  Json doc;
  doc["k"] = f.k;
  doc["tau"] = f.tau;
  doc["psi"] = spec.describe();
  doc["chosen_sites"] = best.chosen;
  doc["utility"] = best.utility;
  doc["utility_pct"] =
      store.size() ? 100.0 * best.utility / static_cast<double>(store.size()) : 0.0;
  doc["subsets"] = best.subsets;
  doc["greedy_sites"] = greedy.chosen;
  doc["greedy_utility"] = greedy.utility;
  emit(doc, f.out);
}

// ---------------------------------------------------------------- update

struct UpdateFlags {
  std::string index, out, batch;
  std::vector<NodeId> add_site, del_site;
  std::vector<std::string> add_traj;
  std::vector<TrajectoryId> del_traj;
};

Json report_json(const std::string& op, const std::string& arg, const UpdateReport& r) {
  return Json{{"op", op},
              {"arg", arg},
              {"clusters_created", r.clusters_created},
              {"representatives_changed", r.representatives_changed},
              {"trajectory_entries", r.trajectory_entries}};
}

void run_update(const UpdateFlags& f) {
  NetClusIndex index = load_index(f.index);
  Json log = Json::array();
  std::vector<Trajectory> pending;
  std::vector<std::string> pending_text;
  const auto flush = [&] {
    if (pending.empty()) return;
    std::ostringstream ids;
    for (std::size_t i = 0; i < pending.size(); ++i) ids << (i ? "," : "") << pending[i].id;
    log.push_back(report_json("add-traj", ids.str(), index.add_trajectories(pending)));
    pending.clear();
  };
  const auto apply = [&](const std::string& op, std::istringstream& args, const std::string& raw) {
    if (op != "add-traj") flush();
    if (op == "add-site") {
      NodeId v;
      if (!(args >> v)) throw ArgumentError("add-site needs a node id");
      log.push_back(report_json(op, std::to_string(v), index.add_site(v)));
    } else if (op == "del-site") {
      NodeId v;
      if (!(args >> v)) throw ArgumentError("del-site needs a node id");
      log.push_back(report_json(op, std::to_string(v), index.remove_site(v)));
    } else if (op == "add-node") {
      std::vector<Attachment> edges;
      Attachment a{};
      while (args >> a.neighbor >> a.to_neighbor >> a.from_neighbor) edges.push_back(a);
      UpdateReport r;
      const NodeId v = index.add_site_node(edges, &r);
      log.push_back(report_json(op, std::to_string(v), r));
    } else if (op == "add-traj") {
      pending.push_back(parse_trajectory_line(raw, index.network()));
    } else if (op == "del-traj") {
      TrajectoryId id;
      if (!(args >> id)) throw ArgumentError("del-traj needs a trajectory id");
      log.push_back(report_json(op, std::to_string(id), index.remove_trajectory(id)));
    } else {
      throw ArgumentError("unknown update operation `" + op + "`");
    }
  };
  const auto apply_line = [&](const std::string& line) {
    std::istringstream args(line);
    std::string op;
    if (!(args >> op) || op[0] == '#') return;
    std::string rest;
    std::getline(args, rest);
    std::istringstream tail(rest);
    apply(op, tail, rest);
  };

  for (NodeId v : f.add_site) apply_line("add-site " + std::to_string(v));
  for (NodeId v : f.del_site) apply_line("del-site " + std::to_string(v));
  for (const std::string& t : f.add_traj) apply_line("add-traj " + t);
  for (TrajectoryId id : f.del_traj) apply_line("del-traj " + std::to_string(id));
  if (!f.batch.empty()) {
    std::ifstream in(f.batch);
    if (!in) throw ValidationError("cannot open " + f.batch);
    std::string line;
    while (std::getline(in, line)) apply_line(line);
  }
  flush();
  save_index(f.out.empty() ? f.index : f.out, index);
  emit(Json{{"updates", log}}, "");
}

// ---------------------------------------------------------------- bench

struct BenchFlags {
  std::vector<std::string> indexes, datasets;
  std::string k = "5", tau = "800", gamma = "0.75", f = "30", methods = "netclus";
  std::string psi = "binary";
  std::string rows;
};

struct BenchInput {
  std::string label;
  double gamma;
  std::shared_ptr<const NetClusIndex> index;  // null when loading failed
  std::string error;
};

void run_bench(const BenchFlags& f) {
  const std::vector<double> ks = parse_number_list(f.k);
  const std::vector<double> taus = parse_number_list(f.tau);
  const std::vector<double> gammas = parse_number_list(f.gamma);
  const std::vector<double> fs_list = parse_number_list(f.f);
  const std::vector<std::string> methods = split_list(f.methods);
  if (f.indexes.empty() && f.datasets.empty()) {
    throw ArgumentError("bench needs at least one --index or --dataset");
  }

  std::vector<BenchInput> inputs;
  for (const std::string& dir : f.indexes) {
    try {
      auto idx = std::make_shared<const NetClusIndex>(load_index(dir));
      inputs.push_back({dir, idx->gamma(), idx, ""});
    } catch (const std::exception& e) {
      inputs.push_back({dir, 0.0, nullptr, e.what()});
    }
  }
  for (const std::string& dir : f.datasets) {
    for (double g : gammas) {
      try {
        RoadNetwork net = load_network(fs::path(dir) / "network.txt", fs::path(dir) / "sites.txt");
        TrajectoryStore store = load_trajectories(fs::path(dir) / "trajectories.txt", net);
        BuildOptions o;
        o.gamma = g;
        inputs.push_back(
            {dir, g,
             std::make_shared<const NetClusIndex>(build_index(std::move(net), std::move(store), o)),
             ""});
      } catch (const std::exception& e) {
        inputs.push_back({dir, g, nullptr, e.what()});
      }
    }
  }

  std::ofstream rows_out;
  if (!f.rows.empty()) {
    rows_out.open(f.rows, std::ios::binary | std::ios::trunc);
    if (!rows_out) throw ValidationError("cannot write " + f.rows);
  }
  std::cout << std::left << std::setw(24) << "input" << std::right << std::setw(7) << "gamma"
            << std::setw(11) << "method" << std::setw(5) << "f" << std::setw(5) << "k"
            << std::setw(10) << "tau" << std::setw(12) << "utility" << std::setw(9) << "pct"
            << std::setw(12) << "exact_U" << std::setw(11) << "ms" << std::setw(12) << "est_bytes"
            << std::setw(6) << "p" << '\n';
  for (const BenchInput& in : inputs) {
    for (const std::string& method_name : methods) {
      const Method method = parse_method(method_name);
      const bool sketch = method == Method::kFmNetClus || method == Method::kFmGreedy;
      const std::vector<double> f_values = sketch ? fs_list : std::vector<double>{0.0};
      for (double fv : f_values) {
        for (double kv : ks) {
          for (double tv : taus) {
            Json row{{"input", in.label},
                     {"gamma", in.gamma},
                     {"method", method_name},
                     {"f", sketch ? Json(static_cast<std::size_t>(fv)) : Json(nullptr)},
                     {"k", static_cast<std::size_t>(kv)},
                     {"tau", tv}};
            std::ostringstream line;
            line << std::left << std::setw(24) << in.label << std::right << std::setw(7) << in.gamma
                 << std::setw(11) << method_name << std::setw(5)
                 << (sketch ? std::to_string(static_cast<std::size_t>(fv)) : "-") << std::setw(5)
                 << static_cast<std::size_t>(kv) << std::setw(10) << tv;
            try {
              if (!in.index) throw ValidationError(in.error);
              QueryParams p;
              p.k = static_cast<std::size_t>(kv);
              p.spec = PreferenceSpec::parse(f.psi, tv);
              p.method = method;
              if (sketch) p.fm_registers = static_cast<std::size_t>(fv);
              p.evaluate_exact = true;
              const QueryResult r = tops_cluster_query(*in.index, p);
              const std::size_t bytes = r.cover_pairs * 2 * sizeof(CoverEntry) +
                                        (r.candidate_count + r.trajectory_count) * 24;
              row["utility"] = r.greedy.utility;
              row["utility_pct"] = r.utility_pct;
              row["exact_utility"] = *r.exact_utility;
              row["runtime_ms"] = r.greedy.elapsed_ms;
              row["est_bytes"] = bytes;
              row["instance_p"] = r.choice && r.choice->verdict != Verdict::kFallbackExact
                                      ? Json(r.choice->p)
                                      : Json(nullptr);
              line << std::setw(12) << std::fixed << std::setprecision(3) << r.greedy.utility
                   << std::setw(9) << std::setprecision(2) << r.utility_pct << std::setw(12)
                   << std::setprecision(3) << *r.exact_utility << std::setw(11)
                   << std::setprecision(2) << r.greedy.elapsed_ms << std::setw(12) << bytes
                   << std::setw(6)
                   << (row["instance_p"].is_null() ? std::string("-")
                                                   : std::to_string(r.choice->p));
            } catch (const std::exception& e) {
              row["error"] = e.what();
              line << "  error: " << e.what();
            }
            std::cout << line.str() << '\n';
            if (rows_out) rows_out << row.dump() << '\n';
          }
        }
      }
    }
  }
}

}  // namespace

void add_gen_command(CLI::App& app) {
  auto flags = std::make_shared<GenFlags>();
  CLI::App* cmd = app.add_subcommand("gen", "Generate a synthetic network with trajectories");
  cmd->add_option("--topology", flags->topology, "grid | star | poly");
  cmd->add_option("--width", flags->width, "Grid width / number of star arms");
  cmd->add_option("--height", flags->height, "Grid height / star arm length");
  cmd->add_option("--patches", flags->patches, "Number of bridged patches for poly");
  cmd->add_option("--edge-length", flags->edge_length, "Edge weight");
  cmd->add_option("--trajectories,-m", flags->trajectories, "Number of trajectories");
  cmd->add_option("--length,-L", flags->length, "Walk length in nodes");
  cmd->add_option("--seed", flags->seed, "Random seed");
  cmd->add_option("--out", flags->out, "Output directory")->required();
  cmd->callback([flags] { run_gen(*flags); });
}

void add_build_command(CLI::App& app) {
  auto flags = std::make_shared<BuildFlags>();
  CLI::App* cmd = app.add_subcommand("build", "Build the multi-resolution index");
  cmd->add_option("--network", flags->network, "Network file")->required();
  cmd->add_option("--trajectories", flags->trajectories, "Trajectory file")->required();
  cmd->add_option("--sites", flags->sites, "Candidate site file")->required();
  cmd->add_option("--gamma", flags->gamma, "Resolution step between instances");
  cmd->add_option("--tau-min", flags->tau_min, "Smallest indexed threshold");
  cmd->add_option("--tau-max", flags->tau_max, "Largest indexed threshold");
  cmd->add_option("--counting", flags->counting, "Dominating-set counting: exact | fm");
  cmd->add_option("--f", flags->f, "FM sketch registers for --counting fm");
  cmd->add_option("--seed", flags->seed, "FM sketch seed");
  cmd->add_option("--out", flags->out, "Index directory")->required();
  cmd->callback([flags] { run_build(*flags); });
}

void add_query_command(CLI::App& app) {
  auto flags = std::make_shared<QueryFlags>();
  auto index = std::make_shared<std::string>();
  auto out = std::make_shared<std::string>();
  CLI::App* cmd = app.add_subcommand("query", "Select k sites");
  cmd->add_option("--index", *index, "Index directory")->required();
  flags->attach(cmd);
  cmd->add_option("--out", *out, "Result document (stdout when omitted)");
  cmd->callback([flags, index, out] { run_query(*index, *flags, *out); });
}

void add_oracle_command(CLI::App& app) {
  auto flags = std::make_shared<OracleFlags>();
  CLI::App* cmd = app.add_subcommand("oracle", "Exhaustive optimum for small instances");
  cmd->add_option("--index", flags->index, "Index directory supplying the dataset");
  cmd->add_option("--network", flags->network, "Network file");
  cmd->add_option("--trajectories", flags->trajectories, "Trajectory file");
  cmd->add_option("--sites", flags->sites, "Candidate site file");
  cmd->add_option("--k", flags->k, "Number of sites")->check(CLI::PositiveNumber);
  cmd->add_option("--tau", flags->tau, "Coverage threshold");
  cmd->add_option("--psi", flags->psi, "Preference: binary | linear | power:a=<float>");
  cmd->add_option("--guard", flags->guard, "Maximum number of subsets to enumerate");
  cmd->add_option("--out", flags->out, "Result document (stdout when omitted)");
  cmd->callback([flags] { run_oracle(*flags); });
}

void add_update_command(CLI::App& app) {
  auto flags = std::make_shared<UpdateFlags>();
  CLI::App* cmd = app.add_subcommand("update", "Apply site and trajectory updates to an index");
  cmd->add_option("--index", flags->index, "Index directory")->required();
  cmd->add_option("--out", flags->out, "Write the updated index here (default: in place)");
  cmd->add_option("--add-site", flags->add_site, "Tag an existing node as a site");
  cmd->add_option("--del-site", flags->del_site, "Untag a site");
  cmd->add_option("--add-traj", flags->add_traj, "Trajectory record `id l v1 ... vl`");
  cmd->add_option("--del-traj", flags->del_traj, "Trajectory id to remove");
  cmd->add_option("--batch", flags->batch,
                  "File of operations: add-site <v> | del-site <v> | add-traj <id> <l> <v>... | "
                  "del-traj <id> | add-node (<neighbor> <to> <from>)...");
  cmd->callback([flags] { run_update(*flags); });
}

void add_bench_command(CLI::App& app) {
  auto flags = std::make_shared<BenchFlags>();
  CLI::App* cmd = app.add_subcommand("bench", "Sweep query configurations");
  cmd->add_option("--index", flags->indexes, "Prebuilt index directories");
  cmd->add_option("--dataset", flags->datasets,
                  "Dataset directories (network.txt, sites.txt, trajectories.txt) built per gamma");
  cmd->add_option("--k", flags->k, "Comma-separated k values");
  cmd->add_option("--tau", flags->tau, "Comma-separated thresholds");
  cmd->add_option("--gamma", flags->gamma, "Comma-separated gamma values for --dataset inputs");
  cmd->add_option("--f", flags->f, "Comma-separated FM register counts for sketch methods");
  cmd->add_option("--methods", flags->methods, "Comma-separated methods");
  cmd->add_option("--psi", flags->psi, "Preference");
  cmd->add_option("--rows", flags->rows, "Write one JSON row per configuration here");
  cmd->callback([flags] { run_bench(*flags); });
}

}  // namespace netclus::cli
