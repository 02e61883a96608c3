#include "dirng/protocol.hpp"

#include <atomic>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "dirng/numeric.hpp"
#include "json.hpp"

namespace dirng {
namespace {

struct SettingSampler {
  // CDF over the support in canonical order.
  std::array<double, 5> cdf{};
  std::array<OutcomeDistribution, 5> outcome{};
  OutcomeDistribution generation{};  // (x,y) = (1,0)

  SettingSampler(const DeviceModel& dev, const GameSpec& spec) {
    const InputDistribution inputs = input_distribution(spec);
    double acc = 0.0;
    for (std::size_t k = 0; k < InputDistribution::kSupport.size(); ++k) {
      const auto& xy = InputDistribution::kSupport[k];
      acc += inputs.prob(xy[0], xy[1]);
      cdf[k] = acc;
      outcome[k] = outcome_distribution(dev, xy[0], xy[1]);
    }
    cdf.back() = 1.0;  // guard against rounding in the final bin
    generation = outcome_distribution(dev, 1, 0);
  }

  std::size_t pick(double u) const {
    for (std::size_t k = 0; k + 1 < cdf.size(); ++k)
      if (u < cdf[k]) return k;
    return cdf.size() - 1;
  }
};

}  // namespace

void validate_params(const ProtocolParams& params, const GameSpec& spec) {
  if (params.n == 0) throw std::invalid_argument("params: n must be positive");
  if (!(params.gamma > 0.0 && params.gamma <= 1.0))
    throw std::invalid_argument("params: gamma must lie in (0, 1]");
  const double gap = classical_quantum_gap(spec);
  if (!(params.xi > 0.0 && params.xi < gap))
    throw std::invalid_argument(
        "params: xi must lie in (0, omega_q - omega_c)");
  if (!(params.eps_s > 0.0 && params.eps_s < 1.0))
    throw std::invalid_argument("params: eps_s must lie in (0, 1)");
  if (!(params.eps_prime > 0.0 && params.eps_prime < 1.0))
    throw std::invalid_argument("params: eps_prime must lie in (0, 1)");
}

Transcript run_protocol(const DeviceModel& dev, const GameSpec& spec,
                        const ProtocolParams& params, unsigned threads) {
  validate_params(params, spec);
  const SettingSampler sampler(dev, spec);
  const CounterRng rng(params.seed);
  const double gamma = params.gamma;

  Transcript transcript;
  transcript.n = params.n;
  transcript.threshold =
      static_cast<double>(params.n) * gamma * (spec.omega_q - params.xi);
  transcript.full_records = params.n <= kTranscriptStorageLimit;
  if (transcript.full_records) transcript.rounds.resize(params.n);

  std::atomic<std::uint64_t> wins{0}, tests{0};
  numeric::parallel_for_chunks(
      0, params.n, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t local_wins = 0, local_tests = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
          RoundRecord rec{};
          const bool test = rng.uniform(Stream::kTestFlag, i) < gamma;
          const double u_out = rng.uniform(Stream::kOutcome, i);
          if (test) {
            const std::size_t k = sampler.pick(rng.uniform(Stream::kSetting, i));
            const auto& xy = InputDistribution::kSupport[k];
            const RoundOutcome o = sample_from(sampler.outcome[k], u_out);
            rec = {1, static_cast<std::uint8_t>(xy[0]),
                   static_cast<std::uint8_t>(xy[1]),
                   static_cast<std::uint8_t>(o.a),
                   static_cast<std::uint8_t>(o.b), 0};
            rec.c = predicate(o.a, o.b, xy[0], xy[1]) ? 1 : 0;
            ++local_tests;
            if (rec.c == 1) ++local_wins;
          } else {
            const RoundOutcome o = sample_from(sampler.generation, u_out);
            rec = {0, 1, 0, static_cast<std::uint8_t>(o.a),
                   static_cast<std::uint8_t>(o.b), -1};
          }
          if (transcript.full_records) transcript.rounds[i] = rec;
        }
        wins += local_wins;
        tests += local_tests;
      });
  transcript.wins = wins.load();
  transcript.tests = tests.load();
  transcript.success =
      static_cast<double>(transcript.wins) >= transcript.threshold;
  return transcript;
}

double completeness_error(const ProtocolParams& params) {
  const double gx = params.gamma * params.xi;
  return std::exp(-2.0 * static_cast<double>(params.n) * gx * gx);
}

double completeness_error_noisy(const ProtocolParams& params, double zeta) {
  if (!(zeta >= 0.0 && zeta < params.xi))
    throw std::domain_error(
        "completeness_error_noisy: zeta must lie in [0, xi)");
  const double slack = params.gamma * (params.xi - zeta);
  return std::exp(-2.0 * static_cast<double>(params.n) * slack * slack);
}

double empirical_completeness(const DeviceModel& dev, const GameSpec& spec,
                              const ProtocolParams& params,
                              std::uint64_t trials, unsigned threads) {
  if (trials == 0)
    throw std::invalid_argument("empirical_completeness: trials must be >= 1");
  const CounterRng master(params.seed);
  std::atomic<std::uint64_t> failures{0};
  numeric::parallel_for_chunks(
      0, trials, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t local = 0;
        for (std::uint64_t t = lo; t < hi; ++t) {
          ProtocolParams trial_params = params;
          trial_params.seed = master.word(Stream::kTrialSeed, t);
          if (!run_protocol(dev, spec, trial_params, 1).success) ++local;
        }
        failures += local;
      });
  return static_cast<double>(failures.load()) / static_cast<double>(trials);
}

void write_transcript_csv(const Transcript& transcript, std::ostream& out) {
  out << "t,x,y,a,b,c\n";
  for (const RoundRecord& r : transcript.rounds) {
    out << int(r.t) << ',' << int(r.x) << ',' << int(r.y) << ',' << int(r.a)
        << ',' << int(r.b) << ',';
    if (r.c >= 0) out << int(r.c);
    out << '\n';
  }
}

std::string transcript_summary_json(const Transcript& transcript,
                                    const GameSpec& spec,
                                    const ProtocolParams& params) {
  nlohmann::ordered_json j;
  j["wins"] = transcript.wins;
  j["tests"] = transcript.tests;
  j["threshold"] = transcript.threshold;
  j["success"] = transcript.success;
  j["params"] = {{"n", params.n},          {"gamma", params.gamma},
                 {"xi", params.xi},        {"eps_s", params.eps_s},
                 {"eps_prime", params.eps_prime}, {"beta", spec.beta},
                 {"theta", spec.theta}};
  j["seed"] = params.seed;
  return j.dump(2);
}

}  // namespace dirng
