/* sdsform_main.cpp
 *
 * CLI front-end: `sdsform run <config.json> [--out DIR] [--seed N]`.
 * Exit codes: 0 success, 1 config/usage error, 2 numerical failure.
 */
#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sdsform/errors.hpp"
#include "sdsform/run_task.hpp"

int main(int argc, char** argv) {
  CLI::App app{"stationary states, trapping, and resonance scans on static "
               "spherically reduced spacetimes"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "execute one JSON config");
  std::string config, out;
  long seed = 0;
  run->add_option("config", config, "path to config JSON")->required();
  run->add_option("--out", out, "output directory (overrides env and config)");
  auto* seed_opt = run->add_option("--seed", seed, "seed for randomized sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    std::optional<long> seed_override;
    if (seed_opt->count() > 0) seed_override = seed;
    const sdsform::RunResult rr =
        sdsform::run_config(config, out, seed_override);
    std::printf("wrote %zu files to %s\n", rr.files.size(),
                rr.out_dir.c_str());
    return 0;
  } catch (const sdsform::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const sdsform::NumericalError& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
