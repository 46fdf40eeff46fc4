#pragma once

#include <stdexcept>
#include <vector>

#include "gamelab/brd.hpp"
#include "gamelab/rational.hpp"

namespace gamelab {

// Conditional probabilities q_t that the p=1 dynamics reaches a PNE exactly
// at t given it has not before, for t = 0 .. 2*min(k_a,k_b)-1:
//   q_0 = 1/(k_a+k_b-1),  q_1 = (k_a-1)/(k_a+k_b-2),  q_t = r(t-1)/r(t),
// with the boundary value q at the last index equal to 1. These hold for
// p = 1 only; there is no closed form for 0 < p < 1.
struct HazardTable {
  int k_a = 0;
  int k_b = 0;
  std::vector<double> q;
};

HazardTable hazard(int k_a, int k_b);

// Survival S(t) = prod_{j<=t} (1 - q_j), pmf S(t-1) - S(t), and the first two
// moments computed directly from the pmf.
struct TauDistribution {
  int k_a = 0;
  int k_b = 0;
  std::vector<double> survival;
  double mean = 0.0;
  double variance = 0.0;

  double pmf(std::size_t t) const {
    const double prev = t == 0 ? 1.0 : survival[t - 1];
    return prev - survival[t];
  }
};

TauDistribution tau_distribution(int k_a, int k_b);

// Rational-arithmetic survival for small games; exact telescoping checks.
std::vector<Rational> survival_rational(int k_a, int k_b);

// Large-K limits of mean and variance of the convergence time in the square
// p=1 case. The mean is e-1 in closed form. The variance comes from the
// integral decomposition  var = 2*int_0^mu Phi + 2*int_mu^inf int_t^inf
// 1/floor(s+1)! ds dt  with mu = e-1 and Phi(t) = int_0^t (1 - 1/floor(s+1)!).
// Both integrands are piecewise constant on integer intervals, so the
// integrals reduce to factorial sums, truncated at s = 170 where the
// remainder is below 1e-300.
struct LimitConstants {
  double mean_limit = 0.0;
  double phi_component = 0.0;   // 2*int_0^mu Phi
  double tail_component = 0.0;  // 2*int_mu^inf ...
  double variance_limit = 0.0;
};

LimitConstants limit_constants();

// i.i.d. (p=0) quantities from the non-convergence analysis.
double iid_c1(int k_a, int k_b);  // P(BRD(1) is a PNE) = 1/k_b
// Upper bound on P(BRD(t) is a PNE):
//   1/K + (2/K) * sum_{j odd <= t-3} exp(-j^2 / (4K)),  K = min(k_a,k_b).
double iid_convergence_bound(int k_a, int k_b, long long t);

// Beta(k,1) facts: max of k uniforms, comparison of independent maxima, and
// the CDF of a uniform conditioned on not being the maximum of k draws.
double beta_max_cdf(int k, double x);        // x^k
double beta_compare(int a, int b);           // a/(a+b)
double dominance_cdf(int k, double x);       // >= x on [0,1]

}  // namespace gamelab
