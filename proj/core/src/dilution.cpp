#include "dirng/dilution.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dirng/numeric.hpp"

namespace dirng {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;

void check_theta(double theta) {
  if (!(theta > 0.0 && theta <= kPi / 4.0))
    throw std::domain_error("dilution: theta must lie in (0, pi/4]");
}

struct SourceLaw {
  double q0, q1;          // eigenvalues cos^2, sin^2
  double log_q0, log_q1;  // natural logs
};

SourceLaw source_law(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  SourceLaw law;
  law.q0 = c * c;
  law.q1 = s * s;
  law.log_q0 = 2.0 * std::log(c);
  law.log_q1 = 2.0 * std::log(s);
  return law;
}

// Sample entropy in bits of a string with j ones: -log2 q0 + (j/n) Delta.
double sample_entropy(const SourceLaw& law, double spread, std::uint64_t n,
                      std::uint64_t j) {
  return -law.log_q0 / kLn2 +
         static_cast<double>(j) / static_cast<double>(n) * spread;
}

double log_string_weight(const SourceLaw& law, std::uint64_t n,
                         std::uint64_t j) {
  return static_cast<double>(n - j) * law.log_q0 +
         static_cast<double>(j) * law.log_q1;
}

}  // namespace

double entanglement_entropy(double theta) {
  check_theta(theta);
  const double s = std::sin(theta);
  return numeric::binary_entropy(s * s);
}

double typicality_spread(double theta) {
  check_theta(theta);
  if (theta == kPi / 4.0) return 0.0;
  const double t = std::tan(theta);
  return -2.0 * std::log(t) / kLn2;
}

double epsilon_pi(double theta, double n, double delta) {
  check_theta(theta);
  if (!(n >= 1.0) || !(delta > 0.0))
    throw std::domain_error("epsilon_pi: need n >= 1 and delta > 0");
  const double spread = typicality_spread(theta);
  if (spread == 0.0) return 0.0;  // theta = pi/4: every string is typical
  const double ratio = delta / spread;
  return 2.0 * std::exp(-2.0 * n * ratio * ratio);
}

double epsilon_prep(double eps_pi) {
  if (!(eps_pi >= 0.0)) throw std::domain_error("epsilon_prep: eps_pi < 0");
  return 2.0 * std::sqrt(eps_pi) + eps_pi;
}

std::uint64_t singlet_count(double theta, std::uint64_t n, double delta) {
  check_theta(theta);
  if (!(delta >= 0.0)) throw std::domain_error("singlet_count: delta < 0");
  const double raw = (entanglement_entropy(theta) + delta) * static_cast<double>(n);
  const double snapped = std::round(raw);
  if (std::abs(raw - snapped) <= 1e-12 * std::max(1.0, std::abs(raw)))
    return static_cast<std::uint64_t>(snapped);
  return static_cast<std::uint64_t>(std::ceil(raw));
}

DilutionSpec make_dilution_spec(double theta, std::uint64_t n, double delta) {
  DilutionSpec spec;
  spec.theta = theta;
  spec.n = n;
  spec.delta = delta;
  spec.entropy = entanglement_entropy(theta);
  spec.spread = typicality_spread(theta);
  spec.singlets = singlet_count(theta, n, delta);
  spec.eps_pi = epsilon_pi(theta, static_cast<double>(n), delta);
  spec.eps_prep = epsilon_prep(spec.eps_pi);
  return spec;
}

TypicalSetSummary typical_set(double theta, std::uint64_t n, double delta) {
  check_theta(theta);
  if (n == 0 || !(delta > 0.0))
    throw std::domain_error("typical_set: need n >= 1 and delta > 0");
  const SourceLaw law = source_law(theta);
  const double spread = typicality_spread(theta);
  const double entropy = numeric::binary_entropy(law.q1);

  TypicalSetSummary summary;
  // The sample entropy is affine increasing in the ones-count, so the band
  // is an integer interval. Resolve its edges by direct scan.
  std::int64_t lo = -1, hi = -1;
  for (std::uint64_t j = 0; j <= n; ++j) {
    const double se = sample_entropy(law, spread, n, j);
    if (se >= entropy - delta && se <= entropy + delta) {
      if (lo < 0) lo = static_cast<std::int64_t>(j);
      hi = static_cast<std::int64_t>(j);
    }
  }
  if (lo < 0) {
    summary.empty = true;
    summary.lo = 0;
    summary.hi = -1;
    summary.cardinality_log2 = -std::numeric_limits<double>::infinity();
    summary.probability = 0.0;
    summary.atypical_log_weight = 0.0;  // ln 1
    return summary;
  }
  summary.lo = lo;
  summary.hi = hi;

  numeric::LogSum cardinality;
  numeric::LogSum atypical;
  for (std::uint64_t j = 0; j <= n; ++j) {
    const double lc = numeric::log_choose(n, j);
    const bool typical =
        j >= static_cast<std::uint64_t>(lo) && j <= static_cast<std::uint64_t>(hi);
    if (typical)
      cardinality.add_log(lc);
    else
      atypical.add_log(lc + log_string_weight(law, n, j));
  }
  summary.cardinality_log2 = cardinality.log_value() / kLn2;
  summary.atypical_log_weight = atypical.log_value();
  summary.probability = -std::expm1(summary.atypical_log_weight);
  if (summary.probability < 0.0) summary.probability = 0.0;
  return summary;
}

double exact_dilution_distance(double theta, std::uint64_t n, double delta) {
  const TypicalSetSummary ts = typical_set(theta, n, delta);
  const SourceLaw law = source_law(theta);

  const double atypical = std::exp(ts.atypical_log_weight);  // 1 - P
  const double typical = ts.empty ? 0.0 : 1.0 - atypical;    // P
  if (!ts.empty && !(atypical > 0.0)) return 0.0;  // everything typical

  // Substituted state: the typical basis string with ones-count closest to
  // the mean n q1 (ties toward the smaller count), or the most likely string
  // overall when the typical set is empty.
  std::int64_t target;
  if (ts.empty) {
    target = static_cast<std::int64_t>(
        std::llround(static_cast<double>(n) * law.q1));
  } else {
    const double mean = static_cast<double>(n) * law.q1;
    target = static_cast<std::int64_t>(std::floor(mean));
    if (target < ts.lo) target = ts.lo;
    if (target > ts.hi) target = ts.hi;
    if (target + 1 <= ts.hi &&
        std::abs(static_cast<double>(target + 1) - mean) <
            std::abs(static_cast<double>(target) - mean))
      ++target;
  }
  // Overlap of the substitute |y*,y*> with psi^(x)n is sqrt of its weight.
  const double log_w =
      0.5 * log_string_weight(law, n, static_cast<std::uint64_t>(target));
  const double w = std::exp(log_w);

  // Coordinates in the orthonormalized span of {psi, psi_Pi, tau'}:
  //   psi    = (1, 0, 0)
  //   psi_Pi = (sqrt(P), sqrt(1-P), 0)
  //   tau'   = (w, w sqrt(1-P)/sqrt(P), sqrt(1 - w^2/P))
  Eigen::Matrix3d diff = Eigen::Matrix3d::Zero();
  Eigen::Vector3d psi(1.0, 0.0, 0.0);
  diff -= psi * psi.transpose();
  if (typical > 0.0) {
    Eigen::Vector3d proj(std::sqrt(typical), std::sqrt(atypical), 0.0);
    diff += typical * proj * proj.transpose();
    const double w_sq_over_p = w * w / typical;
    Eigen::Vector3d sub(w, w * std::sqrt(atypical / typical),
                        std::sqrt(std::max(0.0, 1.0 - w_sq_over_p)));
    diff += atypical * sub * sub.transpose();
  } else {
    Eigen::Vector3d sub(w, 0.0, std::sqrt(std::max(0.0, 1.0 - w * w)));
    diff += sub * sub.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(diff);
  return es.eigenvalues().cwiseAbs().sum();
}

double dilution_completeness(const ProtocolParams& params,
                             const DilutionSpec& dspec) {
  const double gx = params.gamma * params.xi;
  return 0.5 * dspec.eps_prep +
         std::exp(-2.0 * static_cast<double>(params.n) * gx * gx);
}

}  // namespace dirng
