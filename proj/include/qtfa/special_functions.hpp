#pragma once

#include <cmath>
#include <stdexcept>

namespace qtfa {

namespace detail {

// B_2 .. B_14 as B_{2m}/(2m) and B_{2m}/(2m(2m-1)), the coefficients of the
// asymptotic tails of psi and log-gamma.
constexpr double kBernoulliOver2m[7] = {
    1.0 / 12.0,   -1.0 / 120.0,  1.0 / 252.0,     -1.0 / 240.0,
    5.0 / 660.0,  -691.0 / 32760.0, 7.0 / 84.0};
constexpr double kBernoulliStirling[7] = {
    1.0 / 12.0,      -1.0 / 360.0,      1.0 / 1260.0,  -1.0 / 1680.0,
    1.0 / 1188.0,    -691.0 / 360360.0, 1.0 / 156.0};

}  // namespace detail

/// Digamma psi(x) for x > 0: recurrence up to argument >= 6, then the
/// asymptotic series ln x - 1/(2x) - sum B_{2m}/(2m x^{2m}).
/// Absolute accuracy ~1e-13 on [0.5, 50].
inline double digamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("digamma: requires x > 0");
  double acc = 0.0;
  while (x < 6.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  double tail = 0.0;
  double power = inv2;
  for (double c : detail::kBernoulliOver2m) {
    tail += c * power;
    power *= inv2;
  }
  return acc + std::log(x) - 0.5 / x - tail;
}

/// ln Gamma(x) for x > 0 via Stirling with recurrence below 8.
inline double log_gamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("log_gamma: requires x > 0");
  double shift = 0.0;
  while (x < 8.0) {
    shift -= std::log(x);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double tail = 0.0;
  double power = inv;
  for (double c : detail::kBernoulliStirling) {
    tail += c * power;
    power *= inv2;
  }
  constexpr double half_log_two_pi = 0.91893853320467274178;
  return shift + (x - 0.5) * std::log(x) - x + half_log_two_pi + tail;
}

inline double gamma_fn(double x) { return std::exp(log_gamma(x)); }

}  // namespace qtfa
