// Command-line front end: build the three entangled states, report their
// PPT/variance-bound entanglement, scan parameter planes to CSV, and run the
// internal consistency suite.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or malformed input,
// 3 unphysical result, 4 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gme/io.hpp"
#include "gme/labels.hpp"
#include "gme/momentum.hpp"
#include "gme/report.hpp"
#include "gme/sweep.hpp"
#include "gme/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnphysical = 3;
constexpr int kExitIo = 4;

struct CliError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw CliError{kExitIo, "cannot read '" + path + "'"};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

gme::StateSpec load_state_spec(const std::string& path) {
  gme::StateSpec spec;
  try {
    spec = gme::state_spec_from_json(read_file(path));
  } catch (const std::invalid_argument& e) {
    throw CliError{kExitUsage, e.what()};
  }
  if (spec.phi_was_reduced) {
    std::cerr << "warning: phi_minus outside [0, pi/2], reduced to "
              << std::get<gme::FourModeSquareParams>(spec.params).phi_minus << "\n";
  }
  return spec;
}

int cmd_state(const std::string& spec_path) {
  const auto spec = load_state_spec(spec_path);
  gme::StateResult state;
  try {
    state = gme::build_state(spec);
  } catch (const std::invalid_argument& e) {
    throw CliError{kExitUsage, e.what()};
  }
  const auto validity = gme::validate_covariance(state.covariance);
  if (!validity.ok()) {
    throw CliError{kExitUnphysical,
                   "constructed covariance failed the physicality test (min eig " +
                       std::to_string(validity.min_eig_v_plus_i_omega) + ")"};
  }
  std::cout << gme::covariance_to_json(state.covariance);
  return kExitOk;
}

int cmd_report(const std::string& spec_path, const std::string& partition, double tol) {
  const auto spec = load_state_spec(spec_path);
  try {
    if (partition == "all") {
      std::cout << gme::report_to_json(gme::make_report(spec, tol));
    } else {
      const auto p = gme::partition_from_label(spec.family, partition);
      std::cout << gme::report_to_json(gme::make_report(spec, {p}, tol));
    }
  } catch (const std::invalid_argument& e) {
    throw CliError{kExitUsage, e.what()};
  }
  return kExitOk;
}

int cmd_sweep(const std::string& sweep_path, const std::string& out_path) {
  gme::SweepSpec spec;
  std::vector<gme::SweepRow> rows;
  try {
    spec = gme::sweep_spec_from_json(read_file(sweep_path));
    rows = gme::run_sweep(spec);
  } catch (const std::invalid_argument& e) {
    throw CliError{kExitUsage, e.what()};
  }
  std::ofstream out(out_path);
  if (!out) {
    throw CliError{kExitIo, "cannot write '" + out_path + "'"};
  }
  gme::write_sweep_csv(out, spec.family, rows);
  out.flush();
  if (!out) {
    throw CliError{kExitIo, "write to '" + out_path + "' failed"};
  }
  return kExitOk;
}

int cmd_verify(const std::string& grid, const std::string& fault) {
  gme::VerifyOptions options;
  if (grid == "fine") {
    options.fine = true;
  } else if (grid != "coarse") {
    throw CliError{kExitUsage, "--grid must be 'coarse' or 'fine'"};
  }
  if (fault == "flip-squeeze-sign") {
    options.fault = gme::FaultInjection::flip_squeeze_sign;
  } else if (!fault.empty()) {
    throw CliError{kExitUsage, "unknown fault '" + fault + "'"};
  }

  const auto checks = gme::run_verification(options);
  for (const auto& check : checks) {
    std::printf("%s %-24s max deviation %.3e (tolerance %.0e)\n",
                check.passed ? "PASS" : "FAIL", check.name.c_str(), check.max_deviation,
                check.tolerance);
  }
  if (!gme::all_passed(checks)) {
    std::printf("verification FAILED:");
    for (const auto& check : checks) {
      if (!check.passed) std::printf(" %s", check.name.c_str());
    }
    std::printf("\n");
    return kExitVerifyFailed;
  }
  std::printf("verification passed (%zu checks)\n", checks.size());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multipartite Gaussian entanglement of concurrent parametric sources"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string partition = "all";
  double tol = 1e-10;
  std::string sweep_path;
  std::string out_path;
  std::string grid = "coarse";
  std::string fault;

  auto* state = app.add_subcommand("state", "emit the covariance of a state spec as JSON");
  state->add_option("spec", spec_path, "state spec JSON file")->required();

  auto* report = app.add_subcommand("report", "entanglement report across bipartitions");
  report->add_option("spec", spec_path, "state spec JSON file")->required();
  report->add_option("--partition", partition, "partition label or 'all'")
      ->default_str("all");
  report->add_option("--tol", tol, "sub-unity tolerance for the PPT verdict")
      ->default_val(1e-10);

  auto* sweep = app.add_subcommand("sweep", "2-D parameter scan to CSV");
  sweep->add_option("spec", sweep_path, "sweep spec JSON file")->required();
  sweep->add_option("--out", out_path, "output CSV path")->required();

  auto* verify = app.add_subcommand("verify", "run the internal consistency suite");
  verify->add_option("--grid", grid, "coarse or fine")->default_str("coarse");
  verify->add_option("--inject-fault", fault, "test hook: corrupt the factory")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (state->parsed()) return cmd_state(spec_path);
    if (report->parsed()) return cmd_report(spec_path, partition, tol);
    if (sweep->parsed()) return cmd_sweep(sweep_path, out_path);
    return cmd_verify(grid, fault);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
