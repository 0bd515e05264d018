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

// netclus: generate datasets, build and update the multi-resolution index,
// and answer trajectory-aware site selection queries.

#include <CLI11.hpp>
#include <exception>
#include <iostream>

#include "commands.hpp"
#include "netclus/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Trajectory-aware optimal placement of services on road networks"};
  app.require_subcommand(1);
  netclus::cli::add_gen_command(app);
  netclus::cli::add_build_command(app);
  netclus::cli::add_query_command(app);
  netclus::cli::add_oracle_command(app);
  netclus::cli::add_update_command(app);
  netclus::cli::add_bench_command(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(netclus::ExitCode::kUsage);
  } catch (const netclus::Error& e) {
    std::cerr << "netclus: " << e.what() << '\n';
    return static_cast<int>(e.exit_code());
  } catch (const std::exception& e) {
    std::cerr << "netclus: " << e.what() << '\n';
    return static_cast<int>(netclus::ExitCode::kValidation);
  }
  return 0;
}
