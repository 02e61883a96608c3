#include "dirng/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace dirng::numeric {

double log_add(double la, double lb) {
  if (std::isinf(la) && la < 0) return lb;
  if (std::isinf(lb) && lb < 0) return la;
  const double hi = std::max(la, lb);
  const double lo = std::min(la, lb);
  return hi + std::log1p(std::exp(lo - hi));
}

void LogSum::add_log(double log_term) { value_ = log_add(value_, log_term); }

double LogSum::value() const { return std::exp(value_); }

double log_choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

double binary_entropy(double q) {
  if (q < 0.0 || q > 1.0) throw std::domain_error("binary_entropy: q outside [0,1]");
  if (q == 0.0 || q == 1.0) return 0.0;
  constexpr double kLn2 = 0.69314718055994530942;
  // -(1-q)*log(1-q) through log1p keeps the tail accurate for tiny q.
  return (-q * std::log(q) - (1.0 - q) * std::log1p(-q)) / kLn2;
}

GoldenResult golden_section_max(const std::function<double(double)>& f,
                                double lo, double hi, double rel_tol,
                                int max_iter) {
  if (!(lo < hi)) throw std::invalid_argument("golden_section_max: empty interval");
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < max_iter && (b - a) > rel_tol * (std::abs(b) + 1e-300);
       ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    }
  }
  // Parabolic polish on the final three-point bracket.
  const double xm = 0.5 * (a + b);
  double best_x = (f1 > f2) ? x1 : x2;
  double best_f = std::max(f1, f2);
  const double fa = f(a), fb = f(b), fm = f(xm);
  if (fm > best_f) {
    best_f = fm;
    best_x = xm;
  }
  const double denom = (a - xm) * (fm - fb) - (xm - b) * (fa - fm);
  if (std::abs(denom) > 0) {
    const double num =
        (a - xm) * (a - xm) * (fm - fb) - (xm - b) * (xm - b) * (fa - fm);
    const double cand = xm - 0.5 * num / denom;
    if (cand > lo && cand < hi) {
      const double fc = f(cand);
      if (fc > best_f) {
        best_f = fc;
        best_x = cand;
      }
    }
  }
  return {best_x, best_f};
}

NelderMeadResult nelder_mead_min(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x0, double step, int max_iter, double ftol) {
  const std::size_t dim = x0.size();
  if (dim == 0) throw std::invalid_argument("nelder_mead_min: empty start point");
  int evals = 0;
  auto eval = [&](const std::vector<double>& p) {
    ++evals;
    return f(std::span<const double>(p.data(), p.size()));
  };

  std::vector<std::vector<double>> simplex(dim + 1,
                                           std::vector<double>(x0.begin(), x0.end()));
  for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += step;
  std::vector<double> fx(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) fx[i] = eval(simplex[i]);

  std::vector<std::size_t> order(dim + 1);
  std::vector<double> centroid(dim), trial(dim), trial2(dim);
  for (int it = 0; it < max_iter; ++it) {
    for (std::size_t i = 0; i <= dim; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    const std::size_t best = order[0], worst = order[dim], second = order[dim - 1];
    if (std::abs(fx[worst] - fx[best]) <=
        ftol * (std::abs(fx[best]) + std::abs(fx[worst]) + 1e-300))
      break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == worst) continue;
      for (std::size_t d = 0; d < dim; ++d) centroid[d] += simplex[i][d];
    }
    for (std::size_t d = 0; d < dim; ++d) centroid[d] /= static_cast<double>(dim);

    auto blend = [&](std::vector<double>& out, double coef) {
      for (std::size_t d = 0; d < dim; ++d)
        out[d] = centroid[d] + coef * (simplex[worst][d] - centroid[d]);
    };

    blend(trial, -1.0);  // reflection
    const double fr = eval(trial);
    if (fr < fx[best]) {
      blend(trial2, -2.0);  // expansion
      const double fe = eval(trial2);
      if (fe < fr) {
        simplex[worst] = trial2;
        fx[worst] = fe;
      } else {
        simplex[worst] = trial;
        fx[worst] = fr;
      }
    } else if (fr < fx[second]) {
      simplex[worst] = trial;
      fx[worst] = fr;
    } else {
      blend(trial2, 0.5);  // contraction
      const double fc = eval(trial2);
      if (fc < fx[worst]) {
        simplex[worst] = trial2;
        fx[worst] = fc;
      } else {
        // shrink toward the best vertex
        for (std::size_t i = 0; i <= dim; ++i) {
          if (i == best) continue;
          for (std::size_t d = 0; d < dim; ++d)
            simplex[i][d] = simplex[best][d] + 0.5 * (simplex[i][d] - simplex[best][d]);
          fx[i] = eval(simplex[i]);
        }
      }
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i <= dim; ++i)
    if (fx[i] < fx[best]) best = i;
  return {simplex[best], fx[best], evals};
}

void parallel_for_chunks(
    std::uint64_t begin, std::uint64_t end, unsigned threads,
    const std::function<void(std::uint64_t, std::uint64_t)>& chunk_fn) {
  if (end <= begin) return;
  const std::uint64_t total = end - begin;
  if (threads <= 1 || total < 2) {
    chunk_fn(begin, end);
    return;
  }
  const std::uint64_t workers = std::min<std::uint64_t>(threads, total);
  const std::uint64_t chunk = (total + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = begin + w * chunk;
    const std::uint64_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&chunk_fn, lo, hi] { chunk_fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace dirng::numeric
