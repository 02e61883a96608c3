#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "dirng/devices.hpp"
#include "dirng/dilution.hpp"
#include "dirng/eat.hpp"
#include "dirng/game.hpp"
#include "dirng/numeric.hpp"
#include "dirng/protocol.hpp"
#include "dirng/scaling.hpp"
#include "dirng/selftest.hpp"
#include "dirng/version.hpp"
#include "json.hpp"

namespace dirng_cli {
namespace {

using nlohmann::ordered_json;

std::string real17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-" || path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

std::string csv_preamble(const ResolvedConfig& config) {
  std::ostringstream out;
  out << "# dirng_version=" << dirng::kVersion << '\n';
  for (const auto& [key, value] : config)
    out << "# config." << key << '=' << value << '\n';
  return out.str();
}

ordered_json json_envelope(const std::string& command,
                           const ResolvedConfig& config) {
  ordered_json j;
  j["version"] = dirng::kVersion;
  j["command"] = command;
  ordered_json cfg;
  for (const auto& [key, value] : config) cfg[key] = value;
  j["config"] = cfg;
  return j;
}

dirng::GameSpec game_from_options(bool use_theta, double theta, double beta) {
  return use_theta ? dirng::game_from_theta(theta) : dirng::game_from_beta(beta);
}

}  // namespace

int cmd_run(const RunOptions& opt, const ResolvedConfig& config) {
  const dirng::GameSpec spec =
      game_from_options(opt.use_theta, opt.theta, opt.beta);
  dirng::DeviceModel dev = dirng::reference_device(spec.theta);
  if (opt.visibility < 1.0) dev = dirng::apply_white_noise(dev, opt.visibility);

  dirng::ProtocolParams params;
  params.n = opt.n;
  params.gamma = opt.gamma;
  params.xi = opt.xi;
  params.eps_s = opt.eps_s;
  params.eps_prime = opt.eps_prime;
  params.seed = opt.common.seed;

  const dirng::Transcript transcript =
      dirng::run_protocol(dev, spec, params, opt.common.threads);
  const dirng::EntropyCertificate cert = dirng::certificate(spec, params);

  ordered_json j = json_envelope("run", config);
  j["transcript"] =
      ordered_json::parse(dirng::transcript_summary_json(transcript, spec, params));
  j["certificate"] = ordered_json::parse(dirng::certificate_to_json(cert));
  j["completeness_error"] = dirng::completeness_error(params);
  write_output(opt.common.out, j.dump(2) + "\n");

  if (!opt.transcript_csv.empty()) {
    std::ostringstream csv;
    csv << csv_preamble(config);
    dirng::write_transcript_csv(transcript, csv);
    write_output(opt.transcript_csv, csv.str());
  }
  return transcript.success ? 0 : 2;
}

int cmd_bound(const BoundOptions& opt, const ResolvedConfig& config) {
  const dirng::GameSpec spec =
      game_from_options(opt.use_theta, opt.theta, opt.beta);
  const dirng::EntropyCertificate cert = dirng::certificate(
      spec, dirng::CertificateParams{opt.n, opt.gamma, opt.xi, opt.eps_s,
                                     opt.eps_prime});
  if (opt.common.format == "csv") {
    std::ostringstream out;
    out << csv_preamble(config);
    out << "n,gamma,xi,eps_s,eps_prime,nu,L,omega_t_star,mu_at_star,"
           "tau_closed,tau_optimized,hmin_closed,hmin_optimized,hmin_bound,"
           "zero_randomness\n";
    out << real17(cert.n) << ',' << real17(cert.gamma) << ','
        << real17(cert.xi) << ',' << real17(cert.eps_s) << ','
        << real17(cert.eps_prime) << ',' << real17(cert.nu) << ','
        << real17(cert.big_l) << ',' << real17(cert.omega_t_star) << ','
        << real17(cert.mu_at_star) << ',' << real17(cert.tau_closed) << ','
        << real17(cert.tau_optimized) << ',' << real17(cert.hmin_closed) << ','
        << real17(cert.hmin_optimized) << ',' << real17(cert.hmin_bound) << ','
        << (cert.zero_randomness ? 1 : 0) << '\n';
    write_output(opt.common.out, out.str());
  } else {
    ordered_json j = json_envelope("bound", config);
    j["certificate"] = ordered_json::parse(dirng::certificate_to_json(cert));
    j["rng_feasible"] =
        dirng::corollary_rng_partial_check(spec, opt.xi, opt.gamma);
    write_output(opt.common.out, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_sweep(const SweepOptions& opt, const ResolvedConfig& config) {
  dirng::ExponentSchedule schedule{opt.lambda_theta, opt.lambda_xi,
                                   opt.lambda_gamma, opt.lambda_c};
  const auto violations = dirng::validate_schedule(schedule);
  if (!violations.empty()) {
    std::cerr << "invalid schedule:\n";
    for (const auto& v : violations) std::cerr << "  violates " << v << '\n';
    return 1;
  }
  std::vector<double> grid;
  for (double e = opt.log10_n_min; e <= opt.log10_n_max + 1e-9;
       e += opt.log10_n_step)
    grid.push_back(std::pow(10.0, e));
  const bool diluted = opt.lambda_c > 0.0;

  // Rows are independent; compute in parallel, emit in grid order.
  std::vector<dirng::SweepRow> rows(grid.size());
  dirng::numeric::parallel_for_chunks(
      0, grid.size(), opt.common.threads,
      [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i)
          rows[i] = dirng::sweep(schedule, {grid[i]}, diluted, opt.eps_s,
                                 opt.eps_prime)[0];
      });

  if (opt.common.format == "json") {
    ordered_json j = json_envelope("sweep", config);
    j["k"] = schedule.k();
    j["k_prime"] = schedule.k_prime();
    j["diluted"] = diluted;
    auto& out_rows = j["rows"];
    for (const auto& r : rows) {
      out_rows.push_back(
          {{"n", r.n},
           {"theta", r.params.theta},
           {"theta_clamped", r.params.theta_clamped},
           {"xi", r.params.xi},
           {"gamma", r.params.gamma},
           {"delta", r.params.delta},
           {"nu", r.nu},
           {"tau_closed", r.tau_closed},
           {"tau_optimized", r.tau_optimized},
           {"hmin_per_n", r.hmin_per_n},
           {"log_completeness", r.log_completeness},
           {"m", r.m},
           {"m_over_n", r.m_over_n},
           {"m_asymptotic", r.m_asymptotic},
           {"asymptotic_ratio", r.asymptotic_ratio}});
    }
    write_output(opt.common.out, j.dump(2) + "\n");
    return 0;
  }

  std::ostringstream out;
  out << csv_preamble(config);
  out << "# k=" << real17(schedule.k()) << '\n';
  out << "# k_prime=" << real17(schedule.k_prime()) << '\n';
  out << "# diluted=" << (diluted ? 1 : 0) << '\n';
  out << "n,theta,theta_clamped,xi,gamma,delta,nu,tau_closed,tau_optimized,"
         "hmin_per_n,log_completeness,m,m_over_n,m_asymptotic,"
         "asymptotic_ratio\n";
  for (const auto& r : rows) {
    out << real17(r.n) << ',' << real17(r.params.theta) << ','
        << (r.params.theta_clamped ? 1 : 0) << ',' << real17(r.params.xi)
        << ',' << real17(r.params.gamma) << ',' << real17(r.params.delta)
        << ',' << real17(r.nu) << ',' << real17(r.tau_closed) << ','
        << real17(r.tau_optimized) << ',' << real17(r.hmin_per_n) << ','
        << real17(r.log_completeness) << ',' << real17(r.m) << ','
        << real17(r.m_over_n) << ',' << real17(r.m_asymptotic) << ','
        << real17(r.asymptotic_ratio) << '\n';
  }
  write_output(opt.common.out, out.str());
  return 0;
}

int cmd_dilution_check(const DilutionCheckOptions& opt,
                       const ResolvedConfig& config) {
  struct Point {
    double theta, delta;
    std::uint64_t n;
  };
  std::vector<Point> points;
  for (int ti = 0; ti < opt.theta_count; ++ti) {
    const double theta =
        opt.theta_count == 1
            ? opt.theta_min
            : opt.theta_min + (opt.theta_max - opt.theta_min) * ti /
                                  (opt.theta_count - 1);
    for (std::uint64_t n : opt.n_list) {
      for (int di = 0; di < opt.delta_ratio_count; ++di) {
        const double ratio =
            opt.delta_ratio_count == 1
                ? opt.delta_ratio_min
                : opt.delta_ratio_min +
                      (opt.delta_ratio_max - opt.delta_ratio_min) * di /
                          (opt.delta_ratio_count - 1);
        const double spread = dirng::typicality_spread(theta);
        // At theta = pi/4 the spread vanishes; fall back to an absolute delta.
        const double delta = spread > 0.0 ? ratio * spread : ratio;
        points.push_back({theta, delta, n});
      }
    }
  }

  struct Row {
    Point pt;
    dirng::DilutionSpec spec;
    double exact_atypical, exact_distance;
  };
  std::vector<Row> rows(points.size());
  dirng::numeric::parallel_for_chunks(
      0, points.size(), opt.common.threads,
      [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
          const Point& pt = points[i];
          Row row;
          row.pt = pt;
          row.spec = dirng::make_dilution_spec(pt.theta, pt.n, pt.delta);
          row.exact_atypical = std::exp(
              dirng::typical_set(pt.theta, pt.n, pt.delta).atypical_log_weight);
          row.exact_distance =
              dirng::exact_dilution_distance(pt.theta, pt.n, pt.delta);
          rows[i] = row;
        }
      });

  if (opt.common.format == "json") {
    ordered_json j = json_envelope("dilution-check", config);
    auto& out_rows = j["rows"];
    for (const auto& r : rows)
      out_rows.push_back({{"theta", r.pt.theta},
                          {"n", r.pt.n},
                          {"delta", r.pt.delta},
                          {"S", r.spec.entropy},
                          {"Delta", r.spec.spread},
                          {"eps_pi", r.spec.eps_pi},
                          {"exact_atypical", r.exact_atypical},
                          {"eps_prep", r.spec.eps_prep},
                          {"exact_distance", r.exact_distance},
                          {"m", r.spec.singlets}});
    write_output(opt.common.out, j.dump(2) + "\n");
    return 0;
  }

  std::ostringstream out;
  out << csv_preamble(config);
  out << "theta,n,delta,S,Delta,eps_pi,exact_atypical,eps_prep,"
         "exact_distance,m\n";
  for (const auto& r : rows) {
    out << real17(r.pt.theta) << ',' << r.pt.n << ',' << real17(r.pt.delta)
        << ',' << real17(r.spec.entropy) << ',' << real17(r.spec.spread) << ','
        << real17(r.spec.eps_pi) << ',' << real17(r.exact_atypical) << ','
        << real17(r.spec.eps_prep) << ',' << real17(r.exact_distance) << ','
        << r.spec.singlets << '\n';
  }
  write_output(opt.common.out, out.str());
  return 0;
}

int cmd_selftest_bound(const SelftestBoundOptions& opt,
                       const ResolvedConfig& config) {
  const double pi_4 = 0.7853981633974483;
  const auto maximum = dirng::max_long_bound_factor();

  std::ostringstream out;
  out << csv_preamble(config);
  out << "# sup_s4_long_factor=" << real17(maximum.value) << '\n';
  out << "# sup_theta_star=" << real17(maximum.theta_star) << '\n';
  out << "# simplified_constant=" << real17(dirng::simplified_bound_constant())
      << '\n';
  out << "theta,epsilon,long_bound,simplified_bound,s4_long_factor\n";
  for (int i = 1; i <= opt.theta_count; ++i) {
    const double theta = pi_4 * i / opt.theta_count;
    const double lb = dirng::long_bound(theta, opt.epsilon);
    const double sb = dirng::simplified_bound(theta, opt.epsilon);
    const double s = std::sin(2.0 * theta);
    const double factor = lb * s * s * s * s / std::sqrt(opt.epsilon);
    out << real17(theta) << ',' << real17(opt.epsilon) << ',' << real17(lb)
        << ',' << real17(sb) << ',' << real17(factor) << '\n';
  }
  write_output(opt.common.out, out.str());
  return 0;
}

}  // namespace dirng_cli
