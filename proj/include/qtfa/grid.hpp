#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qtfa {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

inline std::size_t pow_index(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

/// Uniform grid on R^{2d}: N nodes per axis at x_k = -L + k*Delta with
/// Delta = 2L/N. The discrete normalized measure assigns each cell the
/// weight Delta^{2d}/(2pi)^d.
struct GridSpec {
  int d = 1;             // half-dimension; the grid covers R^{2d}
  int n_per_axis = 32;   // N
  double half_extent = 8.0;  // L

  GridSpec() = default;
  GridSpec(int d_, int n, double l) : d(d_), n_per_axis(n), half_extent(l) {
    if (d < 1) throw std::invalid_argument("GridSpec: d must be >= 1");
    if (n_per_axis < 1) throw std::invalid_argument("GridSpec: n_per_axis must be >= 1");
    if (!(half_extent > 0.0)) throw std::invalid_argument("GridSpec: half_extent must be > 0");
  }

  int axes() const { return 2 * d; }
  double spacing() const { return 2.0 * half_extent / n_per_axis; }
  double coord(int k) const { return (k - n_per_axis / 2) * spacing(); }
  std::size_t size() const { return pow_index(static_cast<std::size_t>(n_per_axis), axes()); }
  double cell_weight() const {
    double w = 1.0;
    for (int a = 0; a < axes(); ++a) w *= spacing();
    for (int i = 0; i < d; ++i) w /= kTwoPi;
    return w;
  }

  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.d == b.d && a.n_per_axis == b.n_per_axis && a.half_extent == b.half_extent;
  }
};

/// DFT-dual grid: N nodes per axis at w_k = (k - N/2)*Dw with Dw = 2pi/(N*Delta),
/// so N * Delta * Dw = 2pi per axis.
struct FrequencyGrid {
  int d = 1;
  int n_per_axis = 32;
  double spacing = 0.0;  // Dw

  FrequencyGrid() = default;
  FrequencyGrid(int d_, int n, double dw) : d(d_), n_per_axis(n), spacing(dw) {}

  int axes() const { return 2 * d; }
  double coord(int k) const { return (k - n_per_axis / 2) * spacing; }
  double half_extent() const { return 0.5 * n_per_axis * spacing; }
  std::size_t size() const { return pow_index(static_cast<std::size_t>(n_per_axis), axes()); }
  double cell_weight() const {
    double w = 1.0;
    for (int a = 0; a < axes(); ++a) w *= spacing;
    for (int i = 0; i < d; ++i) w /= kTwoPi;
    return w;
  }

  friend bool operator==(const FrequencyGrid& a, const FrequencyGrid& b) {
    return a.d == b.d && a.n_per_axis == b.n_per_axis && a.spacing == b.spacing;
  }
};

inline FrequencyGrid dual_grid(const GridSpec& g) {
  return FrequencyGrid(g.d, g.n_per_axis, kTwoPi / (g.n_per_axis * g.spacing()));
}

/// Odometer over a multi-index with `axes` digits in [0, n). Increments in
/// row-major order (last axis fastest), matching flat array layout.
struct MultiIndex {
  std::vector<int> idx;
  int n = 0;

  MultiIndex(int axes, int n_) : idx(axes, 0), n(n_) {}

  bool advance() {
    for (int a = static_cast<int>(idx.size()) - 1; a >= 0; --a) {
      if (++idx[a] < n) return true;
      idx[a] = 0;
    }
    return false;
  }
};

inline void unravel(std::size_t flat, int axes, int n, int* out) {
  for (int a = axes - 1; a >= 0; --a) {
    out[a] = static_cast<int>(flat % n);
    flat /= n;
  }
}

inline std::size_t ravel(const int* idx, int axes, int n) {
  std::size_t flat = 0;
  for (int a = 0; a < axes; ++a) flat = flat * n + static_cast<std::size_t>(idx[a]);
  return flat;
}

}  // namespace qtfa
