#pragma once
#include <string>

#include "sfwm/config.hpp"

// Command-line front end. Subcommands:
//   respond    dump the response/coupling kernels over the configured grid (CSV)
//   propagate  run one joint-amplitude computation; write JTA/JSA/pump grids + summary
//   sweep      evaluate a quantity over the configured detuning/temperature/duration
//              axes; long-format CSV, rows in axis order, per-point errors recorded
//   converge   error-vs-step-size table against a Richardson reference (CSV)
//   preset     write a canned config (fig2|fig3|fig4|fig6a|fig6b|fig7); --run executes it
// Flags: --config PATH, --out DIR, --threads N, --seed (reserved).
// Exit codes: 0 ok, 2 validation error, 3 numeric failure.

namespace sfwm {

void cmd_respond(const RunConfig& cfg, const std::string& out_dir);
void cmd_propagate(const RunConfig& cfg, const std::string& out_dir);
void cmd_sweep(const RunConfig& cfg, const std::string& out_dir);
void cmd_converge(const RunConfig& cfg, const std::string& out_dir);
void cmd_preset(const std::string& name, const std::string& out_dir, bool run);

int run_cli(int argc, const char* const* argv);

}  // namespace sfwm
