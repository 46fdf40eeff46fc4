#include "gamelab/exact.hpp"

#include <cmath>

namespace gamelab {

HazardTable hazard(int k_a, int k_b) {
  if (k_a < 1 || k_b < 1)
    throw std::invalid_argument("action counts must be >= 1");
  const int k_min = std::min(k_a, k_b);
  HazardTable table;
  table.k_a = k_a;
  table.k_b = k_b;
  if (k_a == 1 && k_b == 1) {  // tau = 0 always; the t=1 formula is 0/0
    table.q = {1.0};
    return table;
  }
  table.q.resize(static_cast<std::size_t>(2) * k_min);
  table.q[0] = 1.0 / (k_a + k_b - 1);
  if (table.q.size() > 1) {
    // k_a + k_b - 2 > 0 whenever the table extends past t=0
    table.q[1] = static_cast<double>(k_a - 1) / (k_a + k_b - 2);
    for (std::size_t t = 2; t < table.q.size(); ++t)
      table.q[t] =
          static_cast<double>(r_formula(static_cast<long long>(t) - 1, k_a, k_b)) /
          static_cast<double>(r_formula(static_cast<long long>(t), k_a, k_b));
  }
  table.q.back() = 1.0;  // the dynamics cannot survive past t = 2*min - 1
  return table;
}

TauDistribution tau_distribution(int k_a, int k_b) {
  const HazardTable table = hazard(k_a, k_b);
  TauDistribution dist;
  dist.k_a = k_a;
  dist.k_b = k_b;
  dist.survival.resize(table.q.size());
  double s = 1.0;
  for (std::size_t t = 0; t < table.q.size(); ++t) {
    s *= 1.0 - table.q[t];
    dist.survival[t] = s;
  }
  double mean = 0.0;
  for (std::size_t t = 0; t + 1 < dist.survival.size(); ++t)
    mean += dist.survival[t];
  double m2 = 0.0;
  for (std::size_t t = 0; t < dist.survival.size(); ++t)
    m2 += static_cast<double>(t) * static_cast<double>(t) * dist.pmf(t);
  dist.mean = mean;
  dist.variance = m2 - mean * mean;
  return dist;
}

std::vector<Rational> survival_rational(int k_a, int k_b) {
  if (k_a < 1 || k_b < 1)
    throw std::invalid_argument("action counts must be >= 1");
  if (k_a == 1 && k_b == 1) return {Rational(0)};
  const int k_min = std::min(k_a, k_b);
  std::vector<Rational> survival(static_cast<std::size_t>(2) * k_min);
  Rational s(1);
  for (std::size_t t = 0; t < survival.size(); ++t) {
    Rational q;
    if (t == 0)
      q = Rational(1, k_a + k_b - 1);
    else if (t + 1 == survival.size())
      q = Rational(1);
    else if (t == 1)
      q = Rational(k_a - 1, k_a + k_b - 2);
    else
      q = Rational(r_formula(static_cast<long long>(t) - 1, k_a, k_b),
                   r_formula(static_cast<long long>(t), k_a, k_b));
    s = s * (Rational(1) - q);
    survival[t] = s;
  }
  return survival;
}

LimitConstants limit_constants() {
  constexpr int kCutoff = 170;  // beyond this 1/(k+1)! underflows to < 1e-300
  LimitConstants out;
  const double mu = std::expm1(1.0);  // e - 1
  out.mean_limit = mu;

  // inverse factorials 1/(k+1)! and their tails T(k) = sum_{j>=k} 1/(j+1)!
  std::vector<double> inv_fact(kCutoff + 2);
  double f = 1.0;
  for (int k = 0; k <= kCutoff + 1; ++k) {
    f /= static_cast<double>(k + 1);
    inv_fact[k] = f;
  }
  std::vector<double> tail(kCutoff + 3, 0.0);
  for (int k = kCutoff + 1; k >= 0; --k) tail[k] = tail[k + 1] + inv_fact[k];

  // Phi vanishes on [0,1] and equals (t-1)/2 on [1,2]; mu < 2.
  out.phi_component = (mu - 1.0) * (mu - 1.0) / 2.0;

  // G(t) = int_t^inf 1/floor(s+1)! ds; piecewise linear between integers.
  double half = (2.0 - mu) * (2.0 - mu) / 4.0 + (2.0 - mu) * tail[2];
  for (int k = 2; k <= kCutoff; ++k)
    half += 0.5 * inv_fact[k] + tail[k + 1];
  out.tail_component = 2.0 * half;

  out.variance_limit = out.phi_component + out.tail_component;
  return out;
}

double iid_c1(int k_a, int k_b) {
  if (k_a < 1 || k_b < 1)
    throw std::invalid_argument("action counts must be >= 1");
  return 1.0 / k_b;
}

double iid_convergence_bound(int k_a, int k_b, long long t) {
  if (k_a < 1 || k_b < 1)
    throw std::invalid_argument("action counts must be >= 1");
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  const double k = std::min(k_a, k_b);
  double sum = 0.0;
  for (long long j = 1; j <= t - 3; j += 2)
    sum += std::exp(-static_cast<double>(j) * static_cast<double>(j) /
                    (4.0 * k));
  return 1.0 / k + 2.0 / k * sum;
}

double beta_max_cdf(int k, double x) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("x outside [0,1]");
  return std::pow(x, k);
}

double beta_compare(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("shapes must be >= 1");
  return static_cast<double>(a) / (a + b);
}

double dominance_cdf(int k, double x) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("x outside [0,1]");
  if (k == 1) return x;  // the conditioning event is empty; identity by convention
  const double p_max = 1.0 / k;  // P(X_1 is the maximum)
  return (x - std::pow(x, k) * p_max) / (1.0 - p_max);
}

}  // namespace gamelab
