#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dirng_cli {

/// Resolved option values, embedded verbatim into every output file.
using ResolvedConfig = std::map<std::string, std::string>;

struct CommonOptions {
  std::uint64_t seed = 1;
  std::string out = "-";  // "-" writes to stdout
  std::string format = "json";
  unsigned threads = 1;
};

struct RunOptions {
  CommonOptions common;
  double beta = 0.0;
  double theta = 0.0;  // used when use_theta
  bool use_theta = false;
  std::uint64_t n = 100000;
  double gamma = 0.1;
  double xi = 0.05;
  double eps_s = 1e-8;
  double eps_prime = 1e-8;
  double visibility = 1.0;
  std::string transcript_csv;  // optional path
};

struct BoundOptions {
  CommonOptions common;
  double beta = 0.0;
  double theta = 0.0;
  bool use_theta = false;
  double n = 1e8;
  double gamma = 0.1;
  double xi = 1e-4;
  double eps_s = 1e-8;
  double eps_prime = 1e-8;
};

struct SweepOptions {
  CommonOptions common;
  double lambda_theta = 0.8;
  double lambda_xi = 0.45;
  double lambda_gamma = 0.04;
  double lambda_c = 0.0;
  double log10_n_min = 10.0;
  double log10_n_max = 300.0;
  double log10_n_step = 10.0;
  double eps_s = 1e-8;
  double eps_prime = 1e-8;
};

struct DilutionCheckOptions {
  CommonOptions common;
  double theta_min = 0.19634954084936207;  // pi/16
  double theta_max = 0.7853981633974483;   // pi/4
  int theta_count = 5;
  std::vector<std::uint64_t> n_list = {10, 100, 1000, 10000};
  double delta_ratio_min = 0.01;  // delta expressed as a fraction of Delta
  double delta_ratio_max = 0.3;
  int delta_ratio_count = 5;
};

struct SelftestBoundOptions {
  CommonOptions common;
  int theta_count = 200;
  double epsilon = 1e-4;
};

int cmd_run(const RunOptions& opt, const ResolvedConfig& config);
int cmd_bound(const BoundOptions& opt, const ResolvedConfig& config);
int cmd_sweep(const SweepOptions& opt, const ResolvedConfig& config);
int cmd_dilution_check(const DilutionCheckOptions& opt,
                       const ResolvedConfig& config);
int cmd_selftest_bound(const SelftestBoundOptions& opt,
                       const ResolvedConfig& config);

}  // namespace dirng_cli
