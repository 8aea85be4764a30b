#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtfa/grid.hpp"
#include "qtfa/quaternion.hpp"

namespace qtfa {

/// Closed-form Gaussian family.
///   signal:          (4a)^{d/2} e^{-a|x|^2}      (unit L2 norm)
///   window:          (4b)^{d/2} e^{-b|x|^2}      (unit L2 norm)
///   separable-axes:  e^{-(a|x|^2 + b|y|^2)/2}    (x = first d coords, y = last d)
struct GaussianSpec {
  enum class Kind { Signal, Window, SeparableAxes };

  double a = 1.0;
  double b = 1.0;
  Kind kind = Kind::Signal;

  GaussianSpec() = default;
  GaussianSpec(double a_, double b_, Kind k) : a(a_), b(b_), kind(k) {
    if (!(a > 0.0) || !(b > 0.0))
      throw std::invalid_argument("GaussianSpec: a and b must be positive");
  }

  static GaussianSpec signal(double a) { return GaussianSpec(a, a, Kind::Signal); }
  static GaussianSpec window(double b) { return GaussianSpec(b, b, Kind::Window); }
  static GaussianSpec separable(double a, double b) {
    return GaussianSpec(a, b, Kind::SeparableAxes);
  }

  /// Evaluate at a point of R^{2d}; `lambda` dilates the argument, f(lambda x).
  double evaluate(const std::vector<double>& x, int d, double lambda = 1.0) const {
    double r2x = 0.0, r2y = 0.0;
    for (int a_ = 0; a_ < d; ++a_) r2x += x[a_] * x[a_];
    for (int a_ = d; a_ < 2 * d; ++a_) r2y += x[a_] * x[a_];
    const double l2 = lambda * lambda;
    switch (kind) {
      case Kind::Signal:
        return std::pow(4.0 * a, 0.5 * d) * std::exp(-a * l2 * (r2x + r2y));
      case Kind::Window:
        return std::pow(4.0 * b, 0.5 * d) * std::exp(-b * l2 * (r2x + r2y));
      case Kind::SeparableAxes:
        return std::exp(-0.5 * l2 * (a * r2x + b * r2y));
    }
    return 0.0;
  }
};

/// Quaternion samples over a GridSpec, row-major in the 2d-dimensional
/// multi-index. Immutable by convention once built.
struct SampledSignal {
  GridSpec grid;
  std::vector<Quaternion> values;

  SampledSignal() = default;
  explicit SampledSignal(const GridSpec& g) : grid(g), values(g.size()) {}

  const Quaternion& operator[](std::size_t i) const { return values[i]; }
  Quaternion& operator[](std::size_t i) { return values[i]; }
  std::size_t size() const { return values.size(); }
};

/// Pointwise evaluation of a real closed form on the grid nodes.
/// Rejects non-finite results.
inline SampledSignal sample(const std::function<double(const std::vector<double>&)>& fn,
                            const GridSpec& grid) {
  SampledSignal out(grid);
  const int axes = grid.axes();
  MultiIndex mi(axes, grid.n_per_axis);
  std::vector<double> x(axes);
  std::size_t flat = 0;
  do {
    for (int a = 0; a < axes; ++a) x[a] = grid.coord(mi.idx[a]);
    const double v = fn(x);
    if (!std::isfinite(v)) throw std::domain_error("sample: non-finite value");
    out.values[flat++] = Quaternion::real(v);
  } while (mi.advance());
  return out;
}

inline SampledSignal sample(const GaussianSpec& spec, const GridSpec& grid,
                            double lambda = 1.0) {
  return sample([&](const std::vector<double>& x) { return spec.evaluate(x, grid.d, lambda); },
                grid);
}

/// L^p norm with the discrete normalized measure; p = infinity gives the max
/// modulus. p < 1 is rejected.
inline double lp_norm(const SampledSignal& f, double p) {
  if (p == std::numeric_limits<double>::infinity()) {
    double m = 0.0;
    for (const auto& q : f.values) m = std::max(m, abs(q));
    return m;
  }
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: requires p >= 1 or p = inf");
  const double w = f.grid.cell_weight();
  double acc = 0.0;
  if (p == 2.0) {
    for (const auto& q : f.values) acc += norm_sq(q);
  } else {
    for (const auto& q : f.values) acc += std::pow(abs(q), p);
  }
  return std::pow(acc * w, 1.0 / p);
}

inline double l2_norm(const SampledSignal& f) { return lp_norm(f, 2.0); }

/// Quaternion-valued inner product sum f(x) conj(g(x)) weight.
inline Quaternion qinner(const SampledSignal& f, const SampledSignal& g) {
  if (!(f.grid == g.grid)) throw std::invalid_argument("qinner: grid mismatch");
  Quaternion acc;
  for (std::size_t i = 0; i < f.values.size(); ++i) acc += f.values[i] * conj(g.values[i]);
  return acc * f.grid.cell_weight();
}

/// Real scalar-part inner product, symmetric in its arguments.
inline double sc_inner(const SampledSignal& f, const SampledSignal& g) {
  return sc(qinner(f, g));
}

/// Cyclic translation by a grid-aligned offset: out(t) = f(t - x0).
/// x0 must be an integer multiple of the spacing per axis.
inline SampledSignal translate(const SampledSignal& f, const std::vector<double>& x0) {
  const GridSpec& g = f.grid;
  const int axes = g.axes();
  if (static_cast<int>(x0.size()) != axes)
    throw std::invalid_argument("translate: offset dimension mismatch");
  std::vector<int> shift(axes);
  for (int a = 0; a < axes; ++a) {
    const double cells = x0[a] / g.spacing();
    const double rounded = std::round(cells);
    if (std::fabs(cells - rounded) > 1e-9)
      throw std::invalid_argument("translate: offset not grid-aligned");
    shift[a] = static_cast<int>(rounded) % g.n_per_axis;
    if (shift[a] < 0) shift[a] += g.n_per_axis;
  }
  SampledSignal out(g);
  MultiIndex mi(axes, g.n_per_axis);
  std::vector<int> src(axes);
  std::size_t flat = 0;
  do {
    for (int a = 0; a < axes; ++a) {
      src[a] = mi.idx[a] - shift[a];
      if (src[a] < 0) src[a] += g.n_per_axis;
    }
    out.values[flat++] = f.values[ravel(src.data(), axes, g.n_per_axis)];
  } while (mi.advance());
  return out;
}

/// Reflection through the origin on the cyclic grid: out(x) = f(-x).
inline SampledSignal reflect(const SampledSignal& f) {
  const GridSpec& g = f.grid;
  const int axes = g.axes();
  const int n = g.n_per_axis;
  SampledSignal out(g);
  MultiIndex mi(axes, n);
  std::vector<int> src(axes);
  std::size_t flat = 0;
  do {
    // node value -x of x = (k - N/2) dx sits at index (N - k) mod N
    for (int a = 0; a < axes; ++a) src[a] = (n - mi.idx[a]) % n;
    out.values[flat++] = f.values[ravel(src.data(), axes, n)];
  } while (mi.advance());
  return out;
}

/// Sample-level dilation f(lambda x) by nearest-node lookup. For integer
/// lambda the lookup is exact (cyclic index scaling); closed forms should be
/// resampled through GaussianSpec instead.
inline SampledSignal dilate_samples(const SampledSignal& f, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("dilate_samples: lambda must be > 0");
  const GridSpec& g = f.grid;
  const int axes = g.axes();
  const int n = g.n_per_axis;
  SampledSignal out(g);
  MultiIndex mi(axes, n);
  std::vector<int> src(axes);
  std::size_t flat = 0;
  do {
    for (int a = 0; a < axes; ++a) {
      const double cells = lambda * (mi.idx[a] - n / 2);
      long k = std::lround(cells) + n / 2;
      k %= n;
      if (k < 0) k += n;
      src[a] = static_cast<int>(k);
    }
    out.values[flat++] = f.values[ravel(src.data(), axes, n)];
  } while (mi.advance());
  return out;
}

/// Discrete convolution sum_y f(y) g(x - y) weight with zero fill outside the
/// box (not cyclic).
inline SampledSignal convolve(const SampledSignal& f, const SampledSignal& g) {
  if (!(f.grid == g.grid)) throw std::invalid_argument("convolve: grid mismatch");
  const GridSpec& gr = f.grid;
  const int axes = gr.axes();
  const int n = gr.n_per_axis;
  const double w = gr.cell_weight();
  SampledSignal out(gr);

  MultiIndex xi(axes, n);
  std::vector<int> diff(axes);
  std::size_t xflat = 0;
  do {
    Quaternion acc;
    MultiIndex yi(axes, n);
    std::size_t yflat = 0;
    do {
      bool inside = true;
      for (int a = 0; a < axes; ++a) {
        diff[a] = xi.idx[a] - yi.idx[a] + n / 2;  // index of x - y
        if (diff[a] < 0 || diff[a] >= n) {
          inside = false;
          break;
        }
      }
      if (inside) acc += f.values[yflat] * g.values[ravel(diff.data(), axes, n)];
      ++yflat;
    } while (yi.advance());
    out.values[xflat++] = acc * w;
  } while (xi.advance());
  return out;
}

}  // namespace qtfa
