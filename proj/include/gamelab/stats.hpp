#pragma once

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace gamelab {

struct GofResult {
  double statistic = 0.0;
  int df = 0;
  double p_value = 1.0;
  int bins = 0;  // after pooling
};

inline double chi_square_pvalue(double statistic, int df) {
  if (df < 1) throw std::invalid_argument("df must be >= 1");
  boost::math::chi_squared dist(df);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

// One-sample chi-square of observed counts against a model pmf. Adjacent
// cells are pooled left-to-right until each pooled expected count is >= 5;
// a trailing under-filled cell is merged into its predecessor.
inline GofResult chi_square_gof(const std::vector<long long>& observed,
                                const std::vector<double>& pmf) {
  if (observed.size() != pmf.size() || observed.empty())
    throw std::invalid_argument("observed/pmf size mismatch");
  long long n = 0;
  for (long long c : observed) n += c;
  if (n <= 0) throw std::invalid_argument("empty sample");

  std::vector<double> exp_pooled;
  std::vector<double> obs_pooled;
  double e_acc = 0.0, o_acc = 0.0;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    e_acc += pmf[i] * static_cast<double>(n);
    o_acc += static_cast<double>(observed[i]);
    if (e_acc >= 5.0) {
      exp_pooled.push_back(e_acc);
      obs_pooled.push_back(o_acc);
      e_acc = o_acc = 0.0;
    }
  }
  if (e_acc > 0.0 || o_acc > 0.0) {
    if (exp_pooled.empty()) {
      exp_pooled.push_back(e_acc);
      obs_pooled.push_back(o_acc);
    } else {
      exp_pooled.back() += e_acc;
      obs_pooled.back() += o_acc;
    }
  }
  if (exp_pooled.size() < 2)
    throw std::invalid_argument("fewer than two pooled bins");

  GofResult res;
  res.bins = static_cast<int>(exp_pooled.size());
  for (std::size_t i = 0; i < exp_pooled.size(); ++i) {
    const double d = obs_pooled[i] - exp_pooled[i];
    res.statistic += d * d / exp_pooled[i];
  }
  res.df = res.bins - 1;
  res.p_value = chi_square_pvalue(res.statistic, res.df);
  return res;
}

// Two-sample chi-square on a pair of histograms over the same support.
// Cells are pooled until each combined count is >= 10 (>= 5 expected in each
// sample at comparable sizes).
inline GofResult chi_square_two_sample(const std::vector<long long>& x,
                                       const std::vector<long long>& y) {
  if (x.size() != y.size() || x.empty())
    throw std::invalid_argument("histogram size mismatch");
  long long nx = 0, ny = 0;
  for (long long c : x) nx += c;
  for (long long c : y) ny += c;
  if (nx <= 0 || ny <= 0) throw std::invalid_argument("empty sample");

  std::vector<double> xs, ys;
  double xa = 0.0, ya = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xa += static_cast<double>(x[i]);
    ya += static_cast<double>(y[i]);
    if (xa + ya >= 10.0) {
      xs.push_back(xa);
      ys.push_back(ya);
      xa = ya = 0.0;
    }
  }
  if ((xa > 0.0 || ya > 0.0) && !xs.empty()) {
    xs.back() += xa;
    ys.back() += ya;
  }
  if (xs.size() < 2) throw std::invalid_argument("fewer than two pooled bins");

  const double kx = std::sqrt(static_cast<double>(ny) / nx);
  const double ky = std::sqrt(static_cast<double>(nx) / ny);
  GofResult res;
  res.bins = static_cast<int>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double d = kx * xs[i] - ky * ys[i];
    res.statistic += d * d / (xs[i] + ys[i]);
  }
  res.df = res.bins - 1;
  res.p_value = chi_square_pvalue(res.statistic, res.df);
  return res;
}

// 3-sigma normal-approximation radius for a binomial fraction.
inline double binomial_ci_radius(double fraction, long long n) {
  if (n <= 0) throw std::invalid_argument("n must be positive");
  return 3.0 * std::sqrt(fraction * (1.0 - fraction) / static_cast<double>(n));
}

// One-sample Kolmogorov-Smirnov statistic against Uniform[0,1].
inline double ks_statistic_uniform(std::vector<double> sample) {
  if (sample.empty()) throw std::invalid_argument("empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    d = std::max({d, sample[i] - lo, hi - sample[i]});
  }
  return d;
}

// Asymptotic critical value; c(0.01) = 1.628.
inline double ks_critical_1pct(std::size_t n) {
  return 1.628 / std::sqrt(static_cast<double>(n));
}

}  // namespace gamelab
