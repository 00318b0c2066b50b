#pragma once

#include <cstdint>

namespace seymour {

// Linear variance coefficients from the closed-form evaluation:
// kVarCoeffEven = 1/4 - 1/(2*pi), kVarCoeffOdd adds 1/sqrt(2*pi).
double variance_coeff_even();
double variance_coeff_odd();

enum class Parity { even, odd };

// Expectation sandwich for the uniform tournament model.  raw values are the
// formula outputs; value fields are clamped to [0, n] with flags saying when
// clamping fired.  The defect term n(n-1)/2*(3/4)^(n-2) is also reported as a
// natural log so it stays meaningful after underflow.
struct BoundsReport {
  long long n = 0;
  Parity parity = Parity::even;
  double e_s_lower = 0.0;
  double e_s_upper = 0.0;
  double e_s_lower_raw = 0.0;
  double e_s_upper_raw = 0.0;
  bool lower_clamped = false;
  bool upper_clamped = false;
  double var_asymptote = 0.0;
  double c_constant = 0.0;
  double diameter_defect = 0.0;
  double log_diameter_defect = 0.0;
};

// Valid p-range [p_min, p_max) for the partial-orientation model at size n.
// p_max solves 2p*e^(1-2p) = 1 - eps_n with eps_n = (2+eta)*ln(n)/n; delta_n
// is its distance below 1/2.  empty is set when the range degenerates.
struct DigraphWindow {
  long long n = 0;
  double epsilon = 0.0;
  double eta = 0.0;
  double p_min = 0.0;
  double p_max = 0.0;
  double delta_n = 0.0;
  double epsilon_n = 0.0;
  double residual = 0.0;  // |2*p_max*e^(1-2*p_max) - (1 - eps_n)| after bisection
  bool empty = false;

  double e_s_lower_at(double p) const;
};

// Central-term pair for odd n; both values are exact and, by the binomial
// halving identity C(2t-1,t) = C(2t,t)/2, always equal.
struct CentralPair {
  double pi1 = 0.0;     // P(Bin(n-1,1/2) = (n-1)/2)
  double pi2 = 0.0;     // P(Bin(n-2,1/2) = (n-1)/2)
  double diff = 0.0;    // pi2 - pi1 (identically zero; kept for reporting)
  double pi1_sq = 0.0;  // pi1^2, asymptotically 2/(pi*n)
};

// Lower bound on E|S| for the partial-orientation model.  `value` uses the
// Bin(n, p) tail; `value_strict` uses Bin(n-1, p), the tail matching the
// n-1 potential out-neighbors.  Raw values may be negative before clamping.
struct DigraphLowerBound {
  long long n = 0;
  double p = 0.0;
  double value = 0.0;
  double value_raw = 0.0;
  bool clamped = false;
  double value_strict = 0.0;
  double value_strict_raw = 0.0;
  bool strict_clamped = false;
  double tail = 0.0;         // P(Bin(n,p) <= floor((n-1)/2))
  double tail_strict = 0.0;  // P(Bin(n-1,p) <= floor((n-1)/2))
  double defect = 0.0;       // n(n-1)(1-p)(1-p^2)^(n-2)
  double log_defect = 0.0;   // natural log of the defect term
};

// P(Bin(m,p) <= k).  Exact summation by pmf recurrence in long double; no
// normal approximation.  Throws std::invalid_argument on k/m/p out of range.
double binom_tail_le(long long m, double p, long long k);

// P(Bin(m,1/2) = floor(m/2)), exact.
double central_binom_pmf(long long m);

// sqrt(2/(pi*m)) — the large-m approximation of central_binom_pmf; m >= 1.
double central_binom_stirling(long long m);

BoundsReport tournament_expectation_bounds(long long n);

// (1/4 - 1/(2*pi))*n for even n; (1/4 - 1/(2*pi) + 1/sqrt(2*pi))*n for odd n.
double tournament_variance_asymptote(long long n);

// Odd n >= 3 only (the pair is defined in the odd case); throws otherwise.
CentralPair variance_pi_terms(long long n);

// (1/2) * P(Bin(n-2,1/2) <= floor((n-1)/2)-1) * P(Bin(n-2,1/2) <= floor((n-1)/2)).
double p1_upper_bound(long long n);

// [e^eps / (1+eps)^(1+eps)]^mean, evaluated in log-space; mean, eps > 0.
double chernoff_upper(double mean, double epsilon);

// Requires n >= 2 and positive slacks.
DigraphWindow digraph_window(long long n, double epsilon, double eta);

// Requires 0 < p < 1/2.
DigraphLowerBound digraph_expectation_lower(long long n, double p);

}  // namespace seymour
