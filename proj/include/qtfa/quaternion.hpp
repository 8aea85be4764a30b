#pragma once

#include <cmath>
#include <complex>
#include <utility>

namespace qtfa {

/// One element of the Hamilton algebra H, stored as four doubles.
/// Unit rules: ij = -ji = k, jk = -kj = i, ki = -ik = j, i^2 = j^2 = k^2 = -1.
struct Quaternion {
  double q0 = 0.0;  // scalar part
  double q1 = 0.0;  // i component
  double q2 = 0.0;  // j component
  double q3 = 0.0;  // k component

  constexpr Quaternion() = default;
  constexpr Quaternion(double s, double i, double j, double k)
      : q0(s), q1(i), q2(j), q3(k) {}

  static constexpr Quaternion real(double s) { return {s, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr Quaternion& operator+=(const Quaternion& r) {
    q0 += r.q0; q1 += r.q1; q2 += r.q2; q3 += r.q3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& r) {
    q0 -= r.q0; q1 -= r.q1; q2 -= r.q2; q3 -= r.q3;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    q0 *= s; q1 *= s; q2 *= s; q3 *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(double s) { return *this *= 1.0 / s; }

  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend constexpr Quaternion operator-(const Quaternion& a) { return {-a.q0, -a.q1, -a.q2, -a.q3}; }
  friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
  friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
  friend constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

  friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.q0 == b.q0 && a.q1 == b.q1 && a.q2 == b.q2 && a.q3 == b.q3;
  }
};

/// Hamilton product. Non-commutative; |pq| = |p||q|.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.q0 * q.q0 - p.q1 * q.q1 - p.q2 * q.q2 - p.q3 * q.q3,
          p.q0 * q.q1 + p.q1 * q.q0 + p.q2 * q.q3 - p.q3 * q.q2,
          p.q0 * q.q2 - p.q1 * q.q3 + p.q2 * q.q0 + p.q3 * q.q1,
          p.q0 * q.q3 + p.q1 * q.q2 - p.q2 * q.q1 + p.q3 * q.q0};
}

constexpr Quaternion conj(const Quaternion& q) { return {q.q0, -q.q1, -q.q2, -q.q3}; }

constexpr double sc(const Quaternion& q) { return q.q0; }

constexpr double norm_sq(const Quaternion& q) {
  return q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3;
}

inline double abs(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

/// Symplectic split q = q_plus + q_minus with q_pm = (q ± iqj)/2.
/// Componentwise: q_pm = {q0 ± q3 + i(q1 ∓ q2)}(1 ± k)/2, so each half lives
/// in a two-dimensional plane spanned by (1 ± k)/2 and i(1 ± k)/2.
constexpr std::pair<Quaternion, Quaternion> split(const Quaternion& q) {
  const double ap = 0.5 * (q.q0 + q.q3), bp = 0.5 * (q.q1 - q.q2);
  const double am = 0.5 * (q.q0 - q.q3), bm = 0.5 * (q.q1 + q.q2);
  return {Quaternion{ap, bp, -bp, ap}, Quaternion{am, bm, bm, -am}};
}

/// Complex amplitude z of the plus half, i.e. q_plus = z (1+k)/2 with z in span{1, i}.
constexpr std::complex<double> plus_amplitude(const Quaternion& q) {
  return {q.q0 + q.q3, q.q1 - q.q2};
}

/// Complex amplitude z of the minus half, q_minus = z (1-k)/2.
constexpr std::complex<double> minus_amplitude(const Quaternion& q) {
  return {q.q0 - q.q3, q.q1 + q.q2};
}

/// Rebuild q from the two split amplitudes: q = zp (1+k)/2 + zm (1-k)/2.
constexpr Quaternion from_split(const std::complex<double>& zp, const std::complex<double>& zm) {
  return {0.5 * (zp.real() + zm.real()), 0.5 * (zp.imag() + zm.imag()),
          0.5 * (zm.imag() - zp.imag()), 0.5 * (zp.real() - zm.real())};
}

/// cos(t) + i sin(t); the left kernel factor of the two-sided transform.
inline Quaternion exp_i(double theta) {
  return {std::cos(theta), std::sin(theta), 0.0, 0.0};
}

/// cos(t) + j sin(t); the right kernel factor.
inline Quaternion exp_j(double theta) {
  return {std::cos(theta), 0.0, std::sin(theta), 0.0};
}

}  // namespace qtfa
