#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "dirng/version.hpp"

namespace {

using namespace dirng_cli;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Line-numbered validation of a key=value config file against the options of
// the subcommand it is being applied to. CLI11 handles the actual value
// parsing afterwards; this pass exists to point at the offending line.
int prescan_config(const CLI::App* sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << path << ": cannot open config file\n";
    return 1;
  }
  std::set<std::string> keys;
  for (const CLI::Option* o : sub->get_options())
    for (const std::string& name : o->get_lnames()) keys.insert(name);
  keys.erase("config");

  std::string line;
  int lineno = 0;
  int rc = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = trim(line);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    if (s[0] == '[') {
      std::cerr << path << ':' << lineno << ": sections are not supported\n";
      rc = 1;
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      std::cerr << path << ':' << lineno << ": expected key=value\n";
      rc = 1;
      continue;
    }
    const std::string key = trim(s.substr(0, eq));
    if (!keys.count(key)) {
      std::cerr << path << ':' << lineno << ": unknown key '" << key << "'\n";
      rc = 1;
    }
  }
  return rc;
}

unsigned default_threads() {
  if (const char* env = std::getenv("DIRNG_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

void add_common(CLI::App* sub, CommonOptions& common) {
  common.threads = default_threads();
  sub->add_option("--seed", common.seed, "Master seed");
  sub->add_option("--out", common.out, "Output path ('-' for stdout)");
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--threads", common.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  sub->set_config("--config", "", "Key=value config file; flags take precedence");
}

std::string real17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// The worker count is deliberately not embedded: outputs are identical for
// any thread count, and recording it would break that byte-for-byte.
void put_common(ResolvedConfig& cfg, const CommonOptions& c) {
  cfg["seed"] = std::to_string(c.seed);
  cfg["out"] = c.out;
  cfg["format"] = c.format;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tilted-CHSH randomness-generation simulator and "
               "certificate calculator"};
  app.set_version_flag("--version", dirng::kVersion);
  app.require_subcommand(1);

  RunOptions run_opt;
  auto* run = app.add_subcommand("run", "Execute the protocol and certify");
  add_common(run, run_opt.common);
  auto* run_beta = run->add_option("--beta", run_opt.beta, "Game tilting");
  auto* run_theta = run->add_option("--theta", run_opt.theta, "Game angle");
  run_theta->excludes(run_beta);
  run->add_option("--n", run_opt.n, "Rounds");
  run->add_option("--gamma", run_opt.gamma, "Test-round fraction");
  run->add_option("--xi", run_opt.xi, "Threshold slack");
  run->add_option("--eps-s", run_opt.eps_s, "Smoothing parameter");
  run->add_option("--eps-prime", run_opt.eps_prime, "Success cutoff");
  run->add_option("--visibility", run_opt.visibility, "White-noise visibility");
  run->add_option("--transcript-csv", run_opt.transcript_csv,
                  "Also write the per-round transcript CSV here");

  BoundOptions bound_opt;
  auto* bound = app.add_subcommand("bound", "Entropy certificate only");
  add_common(bound, bound_opt.common);
  auto* bound_beta = bound->add_option("--beta", bound_opt.beta, "Game tilting");
  auto* bound_theta = bound->add_option("--theta", bound_opt.theta, "Game angle");
  bound_theta->excludes(bound_beta);
  bound->add_option("--n", bound_opt.n, "Rounds (real-valued; may be huge)");
  bound->add_option("--gamma", bound_opt.gamma, "Test-round fraction");
  bound->add_option("--xi", bound_opt.xi, "Threshold slack");
  bound->add_option("--eps-s", bound_opt.eps_s, "Smoothing parameter");
  bound->add_option("--eps-prime", bound_opt.eps_prime, "Success cutoff");

  SweepOptions sweep_opt;
  sweep_opt.common.format = "csv";
  auto* sweep = app.add_subcommand("sweep", "Scaling sweep over n");
  add_common(sweep, sweep_opt.common);
  sweep->add_option("--lambda-theta", sweep_opt.lambda_theta, "Theta exponent");
  sweep->add_option("--lambda-xi", sweep_opt.lambda_xi, "Xi exponent");
  sweep->add_option("--lambda-gamma", sweep_opt.lambda_gamma, "Gamma exponent");
  sweep->add_option("--lambda-c", sweep_opt.lambda_c,
                    "Dilution exponent (0 disables dilution)");
  sweep->add_option("--log10-n-min", sweep_opt.log10_n_min, "Grid start");
  sweep->add_option("--log10-n-max", sweep_opt.log10_n_max, "Grid end");
  sweep->add_option("--log10-n-step", sweep_opt.log10_n_step, "Grid step");
  sweep->add_option("--eps-s", sweep_opt.eps_s, "Smoothing parameter");
  sweep->add_option("--eps-prime", sweep_opt.eps_prime, "Success cutoff");

  DilutionCheckOptions dil_opt;
  dil_opt.common.format = "csv";
  auto* dil = app.add_subcommand("dilution-check",
                                 "Exact dilution error bounds on a grid");
  add_common(dil, dil_opt.common);
  dil->add_option("--theta-min", dil_opt.theta_min, "Smallest angle");
  dil->add_option("--theta-max", dil_opt.theta_max, "Largest angle");
  dil->add_option("--theta-count", dil_opt.theta_count, "Angle grid size");
  dil->add_option("--n-list", dil_opt.n_list, "Pair counts to test");
  dil->add_option("--delta-ratio-min", dil_opt.delta_ratio_min,
                  "Smallest delta/Delta");
  dil->add_option("--delta-ratio-max", dil_opt.delta_ratio_max,
                  "Largest delta/Delta");
  dil->add_option("--delta-ratio-count", dil_opt.delta_ratio_count,
                  "delta grid size");

  SelftestBoundOptions st_opt;
  st_opt.common.format = "csv";
  auto* st = app.add_subcommand("selftest-bound",
                                "Guessing-probability bound tables");
  add_common(st, st_opt.common);
  st->add_option("--theta-count", st_opt.theta_count, "Angle grid size");
  st->add_option("--epsilon", st_opt.epsilon, "Violation deficit");

  // Validate any config file with line numbers before CLI11 consumes it.
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    std::string path;
    if (arg.rfind("--config=", 0) == 0)
      path = arg.substr(9);
    else if (arg == "--config" && i + 1 < argc)
      path = argv[i + 1];
    if (!path.empty()) {
      const CLI::App* sub = nullptr;
      for (int j = 1; j < argc; ++j) {
        if (argv[j][0] == '-') continue;
        for (const CLI::App* cand : app.get_subcommands({}))
          if (cand->get_name() == std::string(argv[j])) sub = cand;
        break;
      }
      if (sub == nullptr) {
        std::cerr << "--config requires a subcommand\n";
        return 1;
      }
      if (prescan_config(sub, path) != 0) return 1;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*run) {
      run_opt.use_theta = run_theta->count() > 0;
      ResolvedConfig cfg;
      put_common(cfg, run_opt.common);
      if (run_opt.use_theta)
        cfg["theta"] = real17(run_opt.theta);
      else
        cfg["beta"] = real17(run_opt.beta);
      cfg["n"] = std::to_string(run_opt.n);
      cfg["gamma"] = real17(run_opt.gamma);
      cfg["xi"] = real17(run_opt.xi);
      cfg["eps-s"] = real17(run_opt.eps_s);
      cfg["eps-prime"] = real17(run_opt.eps_prime);
      cfg["visibility"] = real17(run_opt.visibility);
      return cmd_run(run_opt, cfg);
    }
    if (*bound) {
      bound_opt.use_theta = bound_theta->count() > 0;
      ResolvedConfig cfg;
      put_common(cfg, bound_opt.common);
      if (bound_opt.use_theta)
        cfg["theta"] = real17(bound_opt.theta);
      else
        cfg["beta"] = real17(bound_opt.beta);
      cfg["n"] = real17(bound_opt.n);
      cfg["gamma"] = real17(bound_opt.gamma);
      cfg["xi"] = real17(bound_opt.xi);
      cfg["eps-s"] = real17(bound_opt.eps_s);
      cfg["eps-prime"] = real17(bound_opt.eps_prime);
      return cmd_bound(bound_opt, cfg);
    }
    if (*sweep) {
      ResolvedConfig cfg;
      put_common(cfg, sweep_opt.common);
      cfg["lambda-theta"] = real17(sweep_opt.lambda_theta);
      cfg["lambda-xi"] = real17(sweep_opt.lambda_xi);
      cfg["lambda-gamma"] = real17(sweep_opt.lambda_gamma);
      cfg["lambda-c"] = real17(sweep_opt.lambda_c);
      cfg["log10-n-min"] = real17(sweep_opt.log10_n_min);
      cfg["log10-n-max"] = real17(sweep_opt.log10_n_max);
      cfg["log10-n-step"] = real17(sweep_opt.log10_n_step);
      cfg["eps-s"] = real17(sweep_opt.eps_s);
      cfg["eps-prime"] = real17(sweep_opt.eps_prime);
      return cmd_sweep(sweep_opt, cfg);
    }
    if (*dil) {
      ResolvedConfig cfg;
      put_common(cfg, dil_opt.common);
      cfg["theta-min"] = real17(dil_opt.theta_min);
      cfg["theta-max"] = real17(dil_opt.theta_max);
      cfg["theta-count"] = std::to_string(dil_opt.theta_count);
      std::string ns;
      for (auto n : dil_opt.n_list) ns += (ns.empty() ? "" : " ") + std::to_string(n);
      cfg["n-list"] = ns;
      cfg["delta-ratio-min"] = real17(dil_opt.delta_ratio_min);
      cfg["delta-ratio-max"] = real17(dil_opt.delta_ratio_max);
      cfg["delta-ratio-count"] = std::to_string(dil_opt.delta_ratio_count);
      return cmd_dilution_check(dil_opt, cfg);
    }
    if (*st) {
      ResolvedConfig cfg;
      put_common(cfg, st_opt.common);
      cfg["theta-count"] = std::to_string(st_opt.theta_count);
      cfg["epsilon"] = real17(st_opt.epsilon);
      return cmd_selftest_bound(st_opt, cfg);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
