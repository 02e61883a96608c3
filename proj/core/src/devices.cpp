#include "dirng/devices.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "json.hpp"

namespace dirng {
namespace {

constexpr double kPi = 3.14159265358979323846;

using Matrix2cd = Eigen::Matrix2cd;
using Matrix4cd = Eigen::Matrix4cd;

Matrix2cd observable(const BlochVector& n) {
  Matrix2cd m;
  m << std::complex<double>(n.z, 0.0), std::complex<double>(n.x, -n.y),
      std::complex<double>(n.x, n.y), std::complex<double>(-n.z, 0.0);
  return m;
}

Matrix2cd projector(const BlochVector& n, int outcome) {
  const double sign = outcome == 0 ? 1.0 : -1.0;
  return 0.5 * (Matrix2cd::Identity() + sign * observable(n));
}

Matrix4cd kron2(const Matrix2cd& a, const Matrix2cd& b) {
  Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

}  // namespace

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

Matrix4cd DeviceModel::effective_state() const {
  return visibility * state +
         (1.0 - visibility) * 0.25 * Matrix4cd::Identity();
}

DeviceModel reference_device(double theta) {
  if (!(theta > 0.0 && theta <= kPi / 4.0))
    throw std::domain_error("reference_device: theta must lie in (0, pi/4]");
  DeviceModel dev;
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  psi(0) = std::cos(theta);
  psi(3) = std::sin(theta);
  dev.state = psi * psi.adjoint();
  dev.alice[0] = {0.0, 0.0, 1.0};  // Z
  dev.alice[1] = {1.0, 0.0, 0.0};  // X
  const double mu = std::atan(std::sin(2.0 * theta));
  dev.bob[0] = {std::sin(mu), 0.0, std::cos(mu)};
  dev.bob[1] = {-std::sin(mu), 0.0, std::cos(mu)};
  dev.visibility = 1.0;
  return dev;
}

DeviceModel deterministic_zero_device() {
  DeviceModel dev;
  dev.state = Matrix4cd::Zero();
  dev.state(0, 0) = 1.0;  // |00><00|
  dev.alice[0] = dev.alice[1] = {0.0, 0.0, 1.0};
  dev.bob[0] = dev.bob[1] = {0.0, 0.0, 1.0};
  return dev;
}

OutcomeDistribution outcome_distribution(const DeviceModel& dev, int x, int y) {
  if (x < 0 || x > 1 || y < 0 || y > 2)
    throw std::domain_error("outcome_distribution: setting out of range");
  OutcomeDistribution dist;
  const Matrix4cd rho = dev.effective_state();
  for (int a = 0; a < 2; ++a) {
    const Matrix2cd pa = projector(dev.alice[x], a);
    if (y == 2) {
      const double pr =
          std::real((rho * kron2(pa, Matrix2cd::Identity())).trace());
      dist.p[2 * a + 0] = pr;  // Bob outputs the constant 0
      dist.p[2 * a + 1] = 0.0;
    } else {
      for (int b = 0; b < 2; ++b) {
        const Matrix2cd pb = projector(dev.bob[y], b);
        dist.p[2 * a + b] = std::real((rho * kron2(pa, pb)).trace());
      }
    }
  }
  // Clear the harmless negative dust left by complex arithmetic.
  for (double& v : dist.p)
    if (v < 0.0 && v > -1e-14) v = 0.0;
  return dist;
}

ConditionalTable conditional_table(const DeviceModel& dev) {
  ConditionalTable table{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 3; ++y) {
      const OutcomeDistribution d = outcome_distribution(dev, x, y);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) table[x][y][a][b] = d.prob(a, b);
    }
  return table;
}

double winning_probability(const DeviceModel& dev, const GameSpec& spec) {
  const InputDistribution inputs = input_distribution(spec);
  double omega = 0.0;
  for (const auto& xy : InputDistribution::kSupport) {
    const int x = xy[0], y = xy[1];
    const double pxy = inputs.prob(x, y);
    if (pxy == 0.0) continue;
    const OutcomeDistribution d = outcome_distribution(dev, x, y);
    double win = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        if (predicate(a, b, x, y)) win += d.prob(a, b);
    omega += pxy * win;
  }
  return omega;
}

DeviceModel apply_white_noise(const DeviceModel& dev, double v) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::domain_error("apply_white_noise: visibility must lie in [0,1]");
  DeviceModel out = dev;
  // v * (v0 rho + (1-v0) I/4) + (1-v) I/4 = (v v0) rho + (1 - v v0) I/4
  out.visibility = dev.visibility * v;
  return out;
}

RoundOutcome sample_from(const OutcomeDistribution& dist, double u) {
  double cdf = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      cdf += dist.prob(a, b);
      if (u < cdf) return {a, b};
    }
  return {1, 1};
}

RoundOutcome sample_round(const DeviceModel& dev, int x, int y,
                          const CounterRng& rng, std::uint64_t round_index) {
  const OutcomeDistribution dist = outcome_distribution(dev, x, y);
  return sample_from(dist, rng.uniform(Stream::kOutcome, round_index));
}

void validate_device(const DeviceModel& dev) {
  const Matrix4cd rho = dev.effective_state();
  if (std::abs(std::real(rho.trace()) - 1.0) > 1e-12 ||
      std::abs(std::imag(rho.trace())) > 1e-12)
    throw std::runtime_error("device state does not have unit trace");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::runtime_error("device state is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix4cd> es(rho);
  if (es.eigenvalues().minCoeff() < -1e-12)
    throw std::runtime_error("device state is not positive semidefinite");
  for (const auto& obs : {dev.alice[0], dev.alice[1], dev.bob[0], dev.bob[1]})
    if (std::abs(obs.norm() - 1.0) > 1e-12)
      throw std::runtime_error("observable Bloch vector is not unit length");
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 3; ++y) {
      const OutcomeDistribution d = outcome_distribution(dev, x, y);
      double total = 0.0;
      for (double p : d.p) {
        if (p < -1e-12) throw std::runtime_error("negative outcome probability");
        total += p;
      }
      if (std::abs(total - 1.0) > 1e-12)
        throw std::runtime_error("outcome distribution does not sum to 1");
    }
}

std::string device_to_json(const DeviceModel& dev) {
  nlohmann::ordered_json j;
  auto& entries = j["state"];
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      entries.push_back({std::real(dev.state(r, c)), std::imag(dev.state(r, c))});
  auto bloch = [](const BlochVector& v) {
    return nlohmann::ordered_json::array({v.x, v.y, v.z});
  };
  j["alice"] = {bloch(dev.alice[0]), bloch(dev.alice[1])};
  j["bob"] = {bloch(dev.bob[0]), bloch(dev.bob[1])};
  j["bob_y2_rule"] = "constant_zero";
  j["visibility"] = dev.visibility;
  return j.dump(2);
}

DeviceModel device_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  DeviceModel dev;
  const auto& entries = j.at("state");
  if (entries.size() != 16)
    throw std::runtime_error("device_from_json: state must have 16 entries");
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const auto& e = entries.at(4 * r + c);
      dev.state(r, c) = std::complex<double>(e.at(0).get<double>(),
                                             e.at(1).get<double>());
    }
  auto bloch = [](const nlohmann::json& v) {
    return BlochVector{v.at(0).get<double>(), v.at(1).get<double>(),
                       v.at(2).get<double>()};
  };
  dev.alice[0] = bloch(j.at("alice").at(0));
  dev.alice[1] = bloch(j.at("alice").at(1));
  dev.bob[0] = bloch(j.at("bob").at(0));
  dev.bob[1] = bloch(j.at("bob").at(1));
  if (j.at("bob_y2_rule").get<std::string>() != "constant_zero")
    throw std::runtime_error("device_from_json: unknown y=2 rule");
  dev.visibility = j.at("visibility").get<double>();
  return dev;
}

}  // namespace dirng
