#pragma once

#include <cmath>
#include <stdexcept>

#include "qtfa/special_functions.hpp"

namespace qtfa {

inline constexpr double kLn2 = 0.69314718055994530942;

/// Lieb constant C_{p,q} = (4/p)^{d/p} (1/q)^{d/q} with 1/p + 1/q = 1, p >= 2.
inline double lieb_constant(double p, int d) {
  if (!(p >= 2.0)) throw std::invalid_argument("lieb_constant: requires p >= 2");
  const double q = p / (p - 1.0);
  return std::pow(4.0 / p, d / p) * std::pow(1.0 / q, d / q);
}

/// Alternate arrangement (4/q)^{d/q} (1/p)^{d/p} that appears in the entropy
/// derivation; agrees with lieb_constant only at p = 2. Reported alongside
/// when the two differ.
inline double lieb_constant_alt(double p, int d) {
  if (!(p >= 2.0)) throw std::invalid_argument("lieb_constant_alt: requires p >= 2");
  const double q = p / (p - 1.0);
  return std::pow(4.0 / q, d / q) * std::pow(1.0 / p, d / p);
}

/// B_{p,q} = 2^{2d} p q Gamma(d)^2 / (Gamma(d/p) Gamma(d/q)), evaluated in
/// log space.
inline double heisenberg_B(double p, double q, int d) {
  if (!(p > 0.0) || !(q > 0.0))
    throw std::invalid_argument("heisenberg_B: requires p, q > 0");
  return std::exp(2.0 * d * kLn2 + std::log(p) + std::log(q) + 2.0 * log_gamma(d) -
                  log_gamma(d / p) - log_gamma(d / q));
}

/// Weighted-moment uncertainty constant
///   E_{p,q} = [(p/q)^{q/(p+q)} + (q/p)^{p/(p+q)}]^{-1}
///             exp( pq (2d ln2 + ln B_{p,q}) / (d (p+q)) - 1 ).
/// E_{1,1} = 2/e in one dimension.
inline double heisenberg_constant(double p, double q, int d) {
  if (!(p > 0.0) || !(q > 0.0))
    throw std::invalid_argument("heisenberg_constant: requires p, q > 0");
  const double pref = 1.0 / (std::pow(p / q, q / (p + q)) + std::pow(q / p, p / (p + q)));
  const double lnB = std::log(heisenberg_B(p, q, d));
  return pref * std::exp(p * q * (2.0 * d * kLn2 + lnB) / (d * (p + q)) - 1.0);
}

/// Local concentration constant
///   M_{eps,p} = [ (2d+eps) / ( 2^{eps(2d+2p+2)/((2d+eps)(p+1))} eps^{2eps/(2d+eps)}
///                 Gamma(2d)^{eps/((2d+eps)(p+1))}
///                 (2d-eps)^{(2d-eps)/(2d+eps) + eps/((2d+eps)(p+1))} ) ]^{p(p+1)}.
inline double local_price_constant(double eps, double p, int d) {
  if (!(eps > 0.0) || !(eps < 2.0 * d))
    throw std::invalid_argument("local_price_constant: requires 0 < eps < 2d");
  if (!(p >= 1.0)) throw std::invalid_argument("local_price_constant: requires p >= 1");
  const double td = 2.0 * d;
  const double den = std::pow(2.0, eps * (td + 2.0 * p + 2.0) / ((td + eps) * (p + 1.0))) *
                     std::pow(eps, 2.0 * eps / (td + eps)) *
                     std::pow(gamma_fn(td), eps / ((td + eps) * (p + 1.0))) *
                     std::pow(td - eps,
                              (td - eps) / (td + eps) + eps / ((td + eps) * (p + 1.0)));
  return std::pow((td + eps) / den, p * (p + 1.0));
}

/// N_{eps,p} = 2^{2d(p-2)(p+1) + 4d + 4pd eps/(2d+eps)} M_{eps,p}; the
/// Wigner-side variant of the local concentration constant.
inline double wigner_price_constant(double eps, double p, int d) {
  const double td = 2.0 * d;
  return std::exp2(td * (p - 2.0) * (p + 1.0) + 2.0 * td + 2.0 * p * td * eps / (td + eps)) *
         local_price_constant(eps, p, d);
}

/// Logarithmic uncertainty constant for the ambient space R^{2d}:
/// D_{2d} = psi(d/2) + ln 2.
inline double log_constant(int d) {
  if (d < 1) throw std::invalid_argument("log_constant: requires d >= 1");
  return digamma(0.5 * d) + kLn2;
}

}  // namespace qtfa
