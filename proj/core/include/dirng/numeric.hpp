#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace dirng::numeric {

/// log(e^la + e^lb); tolerates -inf on either side.
double log_add(double la, double lb);

/// Online log-domain accumulator for sums of nonnegative terms.
class LogSum {
 public:
  void add_log(double log_term);
  double log_value() const { return value_; }
  double value() const;

 private:
  double value_ = -1.0 / 0.0;
};

/// ln C(n, k) via lgamma.
double log_choose(std::uint64_t n, std::uint64_t k);

/// Binary entropy h2(q) in bits; h2(0) = h2(1) = 0.
double binary_entropy(double q);

struct GoldenResult {
  double x = 0.0;
  double value = 0.0;
};

/// Maximize a unimodal f on [lo, hi] by golden-section search followed by a
/// parabolic polish of the final bracket.
GoldenResult golden_section_max(const std::function<double(double)>& f,
                                double lo, double hi, double rel_tol = 1e-12,
                                int max_iter = 400);

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
};

/// Derivative-free simplex minimization (Nelder-Mead with standard
/// reflection/expansion/contraction coefficients).
NelderMeadResult nelder_mead_min(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x0, double step, int max_iter = 2000,
    double ftol = 1e-13);

/// Run chunk_fn over [begin, end) split into contiguous ranges, one per
/// worker. Results must be written to disjoint slots so the partition does
/// not affect the output.
void parallel_for_chunks(
    std::uint64_t begin, std::uint64_t end, unsigned threads,
    const std::function<void(std::uint64_t, std::uint64_t)>& chunk_fn);

}  // namespace dirng::numeric
