#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "qtfa/parallel.hpp"
#include "qtfa/qft.hpp"
#include "qtfa/report.hpp"
#include "qtfa/signal.hpp"

namespace qtfa {

/// Quaternion values over phase space (x, w) in R^{2d} x R^{2d}, stored
/// x-major / w-minor. The x and w lattices are centered grids that may have
/// different node counts and spacings (the half-shift transforms use
/// subgrids), so both are carried explicitly. The cell weight is the product
/// of the two lattice weights, i.e. the discrete normalized measure on
/// R^{4d}.
struct PhaseSpaceField {
  int d = 1;
  int nx = 0;       // nodes per x-axis
  double dx = 0.0;  // x spacing
  int nw = 0;       // nodes per w-axis
  double dw = 0.0;  // w spacing
  std::vector<Quaternion> values;

  PhaseSpaceField() = default;
  PhaseSpaceField(int d_, int nx_, double dx_, int nw_, double dw_)
      : d(d_), nx(nx_), dx(dx_), nw(nw_), dw(dw_),
        values(pow_index(nx_, 2 * d_) * pow_index(nw_, 2 * d_)) {}

  int axes() const { return 2 * d; }
  std::size_t x_count() const { return pow_index(nx, axes()); }
  std::size_t w_count() const { return pow_index(nw, axes()); }
  double x_coord(int k) const { return (k - nx / 2) * dx; }
  double w_coord(int k) const { return (k - nw / 2) * dw; }

  double x_weight() const {
    double w = 1.0;
    for (int a = 0; a < axes(); ++a) w *= dx;
    for (int i = 0; i < d; ++i) w /= kTwoPi;
    return w;
  }
  double w_weight() const {
    double w = 1.0;
    for (int a = 0; a < axes(); ++a) w *= dw;
    for (int i = 0; i < d; ++i) w /= kTwoPi;
    return w;
  }
  double cell_weight() const { return x_weight() * w_weight(); }

  const Quaternion& at(std::size_t xflat, std::size_t wflat) const {
    return values[xflat * w_count() + wflat];
  }
  Quaternion& at(std::size_t xflat, std::size_t wflat) {
    return values[xflat * w_count() + wflat];
  }

  double l2_norm() const {
    double acc = 0.0;
    for (const auto& q : values) acc += norm_sq(q);
    return std::sqrt(acc * cell_weight());
  }
  double lp_norm(double p) const {
    if (!(p >= 1.0)) throw std::invalid_argument("PhaseSpaceField::lp_norm: p >= 1 required");
    double acc = 0.0;
    for (const auto& q : values) acc += std::pow(norm_sq(q), 0.5 * p);
    return std::pow(acc * cell_weight(), 1.0 / p);
  }
  double sup_norm() const {
    double m = 0.0;
    for (const auto& q : values) m = std::max(m, norm_sq(q));
    return std::sqrt(m);
  }
};

namespace detail {

inline void check_window(const SampledSignal& f, const SampledSignal& g) {
  if (!(f.grid == g.grid)) throw std::invalid_argument("qwft: grid mismatch");
  bool nonzero = false;
  for (const auto& q : g.values)
    if (norm_sq(q) != 0.0) {
      nonzero = true;
      break;
    }
  if (!nonzero) throw std::invalid_argument("qwft: zero window");
}

/// f(y) conj(g(y - x)) for the cyclic shift with per-axis offset `shift`.
inline void windowed_product(const SampledSignal& f, const SampledSignal& g,
                             const std::vector<int>& shift, Quaternion* out) {
  const int axes = f.grid.axes();
  const int n = f.grid.n_per_axis;
  MultiIndex yi(axes, n);
  std::vector<int> src(axes);
  std::size_t flat = 0;
  do {
    for (int a = 0; a < axes; ++a) {
      src[a] = yi.idx[a] - shift[a];
      if (src[a] < 0) src[a] += n;
      else if (src[a] >= n) src[a] -= n;
    }
    out[flat] = f.values[flat] * conj(g.values[ravel(src.data(), axes, n)]);
    ++flat;
  } while (yi.advance());
}

}  // namespace detail

/// Streaming windowed transform: for every grid-aligned shift x, calls
/// visit(xflat, slice) with the transform of f conj(T_x g) on the dual grid.
/// Shifts are processed in parallel; each visit sees a private slice.
inline void qwft_visit(
    const SampledSignal& f, const SampledSignal& g,
    const std::function<void(std::size_t, const std::vector<Quaternion>&)>& visit) {
  detail::check_window(f, g);
  const GridSpec& grid = f.grid;
  const int axes = grid.axes();
  const int n = grid.n_per_axis;
  const std::size_t shifts = grid.size();

  parallel_for(shifts, [&](std::size_t xflat) {
    std::vector<int> xi(axes), shift(axes);
    unravel(xflat, axes, n, xi.data());
    for (int a = 0; a < axes; ++a) shift[a] = xi[a] - n / 2;  // cells of x
    std::vector<Quaternion> h(grid.size());
    detail::windowed_product(f, g, shift, h.data());
    std::vector<Quaternion> slice(grid.size());
    detail::two_sided_transform(h.data(), slice.data(), grid.d, n, -1, grid.cell_weight());
    visit(xflat, slice);
  });
}

/// Windowed Fourier transform of f against window g, materialized over the
/// full (x, w) phase-space lattice: x on the signal grid, w on its dual.
inline PhaseSpaceField qwft(const SampledSignal& f, const SampledSignal& g) {
  const GridSpec& grid = f.grid;
  PhaseSpaceField field(grid.d, grid.n_per_axis, grid.spacing(), grid.n_per_axis,
                        dual_grid(grid).spacing);
  const std::size_t wcount = field.w_count();
  qwft_visit(f, g, [&](std::size_t xflat, const std::vector<Quaternion>& slice) {
    std::copy(slice.begin(), slice.end(), field.values.begin() + xflat * wcount);
  });
  return field;
}

/// Single-point brute-force quadrature of the windowed transform; the oracle
/// for the fast path. x must be grid-aligned; w may be any point of R^{2d}.
inline Quaternion qwft_point(const SampledSignal& f, const SampledSignal& g,
                             const std::vector<double>& x, const std::vector<double>& w) {
  detail::check_window(f, g);
  const GridSpec& grid = f.grid;
  const int axes = grid.axes();
  const int n = grid.n_per_axis;
  const int d = grid.d;
  if (static_cast<int>(x.size()) != axes || static_cast<int>(w.size()) != axes)
    throw std::invalid_argument("qwft_point: dimension mismatch");

  std::vector<int> shift(axes);
  for (int a = 0; a < axes; ++a) {
    const double cells = x[a] / grid.spacing();
    const double rounded = std::round(cells);
    if (std::fabs(cells - rounded) > 1e-9)
      throw std::invalid_argument("qwft_point: x not grid-aligned");
    shift[a] = static_cast<int>(rounded);
  }

  Quaternion acc;
  MultiIndex yi(axes, n);
  std::vector<int> src(axes);
  std::size_t flat = 0;
  do {
    double su = 0.0, tv = 0.0;
    for (int a = 0; a < d; ++a) su += grid.coord(yi.idx[a]) * w[a];
    for (int a = d; a < axes; ++a) tv += grid.coord(yi.idx[a]) * w[a];
    for (int a = 0; a < axes; ++a) {
      src[a] = (yi.idx[a] - shift[a]) % n;
      if (src[a] < 0) src[a] += n;
    }
    acc += exp_i(-su) * (f.values[flat] * conj(g.values[ravel(src.data(), axes, n)])) *
           exp_j(-tv);
    ++flat;
  } while (yi.advance());
  return acc * grid.cell_weight();
}

/// Closed-form squared modulus of the windowed transform of the normalized
/// Gaussian pair (a, b):
///   |G|^2 = (4ab)^d/(a+b)^{2d} e^{-2ab|x|^2/(a+b)} e^{-|w|^2/(2(a+b))}.
inline double gaussian_qwft_modulus_sq(double a, double b, int d, double x_sq, double w_sq) {
  return std::pow(4.0 * a * b, d) / std::pow(a + b, 2.0 * d) *
         std::exp(-2.0 * a * b / (a + b) * x_sq) * std::exp(-w_sq / (2.0 * (a + b)));
}

/// Full phased closed form of the same transform, with c = b/(a+b):
///   G(x,w) = (4ab)^{d/2}/(a+b)^d e^{-i c x1.w1} e^{-ab|x|^2/(a+b)}
///            e^{-|w|^2/(4(a+b))} e^{-j c x2.w2},
/// where x1.w1 and x2.w2 are the dot products of the first-d and last-d
/// coordinate blocks.
inline Quaternion gaussian_qwft_closed(double a, double b, int d,
                                       const std::vector<double>& x,
                                       const std::vector<double>& w) {
  if (static_cast<int>(x.size()) != 2 * d || static_cast<int>(w.size()) != 2 * d)
    throw std::invalid_argument("gaussian_qwft_closed: dimension mismatch");
  const double c = b / (a + b);
  double x1w1 = 0.0, x2w2 = 0.0, x_sq = 0.0, w_sq = 0.0;
  for (int i = 0; i < d; ++i) {
    x1w1 += x[i] * w[i];
    x2w2 += x[d + i] * w[d + i];
  }
  for (int i = 0; i < 2 * d; ++i) {
    x_sq += x[i] * x[i];
    w_sq += w[i] * w[i];
  }
  const double env = std::pow(4.0 * a * b, 0.5 * d) / std::pow(a + b, d) *
                     std::exp(-a * b / (a + b) * x_sq) * std::exp(-w_sq / (4.0 * (a + b)));
  return exp_i(-c * x1w1) * Quaternion::real(env) * exp_j(-c * x2w2);
}

/// Two-sided Parseval identity for windowed transforms:
/// <G_{g1} f1, G_{g2} f2> = Sc( sum f1 (conj g1, conj g2) conj f2 ).
inline ComparisonReport qwft_parseval_check(const SampledSignal& f1, const SampledSignal& f2,
                                            const SampledSignal& g1, const SampledSignal& g2,
                                            double tolerance = 1e-8) {
  detail::check_window(f1, g1);
  detail::check_window(f2, g2);
  const GridSpec& grid = f1.grid;
  if (!(f2.grid == grid) || !(g2.grid == grid))
    throw std::invalid_argument("qwft_parseval_check: grid mismatch");

  const PhaseSpaceField F1 = qwft(f1, g1);
  const PhaseSpaceField F2 = qwft(f2, g2);
  double lhs = 0.0;
  for (std::size_t i = 0; i < F1.values.size(); ++i)
    lhs += sc(F1.values[i] * conj(F2.values[i]));
  lhs *= F1.cell_weight();

  // (conj g1, conj g2) = sum conj(g1) g2, a quaternion constant in the middle
  Quaternion mid;
  for (std::size_t i = 0; i < g1.values.size(); ++i)
    mid += conj(g1.values[i]) * g2.values[i];
  mid *= grid.cell_weight();
  double rhs = 0.0;
  for (std::size_t i = 0; i < f1.values.size(); ++i)
    rhs += sc(f1.values[i] * mid * conj(f2.values[i]));
  rhs *= grid.cell_weight();

  ComparisonReport rep;
  rep.name = "qwft-parseval";
  // norms bound both sides, so they set the scale even when the sides vanish
  rep.scale = std::max({std::fabs(lhs), std::fabs(rhs),
                        l2_norm(f1) * l2_norm(g1) * l2_norm(f2) * l2_norm(g2), 1e-300});
  rep.record(std::fabs(lhs - rhs));
  rep.finish(tolerance);
  return rep;
}

/// Inversion against a real-valued window: per-shift inverse transform
/// followed by window-weighted accumulation, algebraically identical to the
/// phase-space double sum. Two passes keep the accumulation order fixed, so
/// the output does not depend on the shift schedule.
inline SampledSignal reconstruct(const PhaseSpaceField& field, const SampledSignal& g) {
  const GridSpec& grid = g.grid;
  if (field.nx != grid.n_per_axis || field.nw != grid.n_per_axis || field.d != grid.d)
    throw std::invalid_argument("reconstruct: field does not match the window grid");
  for (const auto& q : g.values)
    if (q.q1 != 0.0 || q.q2 != 0.0 || q.q3 != 0.0)
      throw std::invalid_argument("reconstruct: window must be real-valued");
  const double g_norm_sq = sc_inner(g, g);
  if (!(g_norm_sq > 0.0)) throw std::invalid_argument("reconstruct: zero window");

  const int axes = grid.axes();
  const int n = grid.n_per_axis;
  const FrequencyGrid wgrid = dual_grid(grid);
  const double xw = field.x_weight();
  const std::size_t shifts = field.x_count();
  const std::size_t points = grid.size();

  // pass 1: recover f(t) conj(g(t - x)) for every shift
  std::vector<Quaternion> recovered(shifts * points);
  parallel_for(shifts, [&](std::size_t xflat) {
    detail::two_sided_transform(field.values.data() + xflat * field.w_count(),
                                recovered.data() + xflat * points, grid.d, n, +1,
                                wgrid.cell_weight());
  });

  // pass 2: window-weighted sum over shifts, in fixed shift order per node
  SampledSignal out(grid);
  parallel_for(points, [&](std::size_t tflat) {
    std::vector<int> ti(axes), src(axes);
    unravel(tflat, axes, n, ti.data());
    Quaternion acc;
    MultiIndex xi(axes, n);
    std::size_t xflat = 0;
    do {
      for (int a = 0; a < axes; ++a) {
        src[a] = (ti[a] - (xi.idx[a] - n / 2)) % n;
        if (src[a] < 0) src[a] += n;
      }
      // g real: scalar factor commutes with the recovered product
      acc += recovered[xflat * points + tflat] *
             (g.values[ravel(src.data(), axes, n)].q0 * xw);
      ++xflat;
    } while (xi.advance());
    out.values[tflat] = acc / g_norm_sq;
  });
  return out;
}

/// Covariance under dilation: G_g(f_lambda)(x, w) = lambda^{-2d}
/// G_{g_{1/lambda}}(f)(lambda x, w/lambda), checked pointwise through the
/// brute-force oracle. The left side lives on the base grid; the right side
/// is evaluated on the nested grid with the same spacing and lambda times the
/// extent, so the widened window never wraps and lambda*x stays on nodes.
/// A signal override (band-limited noise) is continued periodically onto the
/// nested box, which is exact for a trigonometric polynomial.
inline ComparisonReport dilation_covariance_check(const GaussianSpec& f_spec,
                                                  const GaussianSpec& g_spec,
                                                  const GridSpec& grid, double lambda,
                                                  double tolerance = 1e-6,
                                                  bool modulus_only = false,
                                                  const SampledSignal* f_override = nullptr,
                                                  double max_w_fraction = 1.0) {
  const int axes = grid.axes();
  const int n = grid.n_per_axis;
  const int lam = static_cast<int>(std::round(lambda));
  if (!(lambda > 0.0) || std::fabs(lambda - lam) > 1e-12 || lam < 1)
    throw std::invalid_argument(
        "dilation_covariance_check: lambda must be a positive integer for the "
        "nested-grid evaluation");
  const GridSpec nested(grid.d, lam * n, lam * grid.half_extent);  // same spacing

  const SampledSignal f_dil = f_override ? dilate_samples(*f_override, lambda)
                                         : sample(f_spec, grid, lambda);
  const SampledSignal g = sample(g_spec, grid);
  SampledSignal f_nested(nested);
  if (f_override) {
    // periodic continuation: nested index k holds coordinate (k - lam*n/2) dx,
    // which sits at base index (k - lam*n/2 + n/2) mod n
    MultiIndex mi(axes, nested.n_per_axis);
    std::vector<int> src(axes);
    std::size_t flat = 0;
    do {
      for (int a = 0; a < axes; ++a) {
        src[a] = (mi.idx[a] - lam * n / 2 + n / 2) % n;
        if (src[a] < 0) src[a] += n;
      }
      f_nested.values[flat++] = f_override->values[ravel(src.data(), axes, n)];
    } while (mi.advance());
  } else {
    f_nested = sample(f_spec, nested);
  }
  const SampledSignal g_inv = sample(g_spec, nested, 1.0 / lambda);
  const FrequencyGrid wgrid = dual_grid(grid);
  const double scale = std::pow(lambda, -2.0 * grid.d);

  ComparisonReport rep;
  rep.name = "qwft-dilation-covariance";

  std::vector<double> x(axes), w(axes), lx(axes), wl(axes);
  for (int kx = 0; kx < n; ++kx) {
    const double xc = grid.coord(kx);
    if (std::fabs(lambda * xc) >= grid.half_extent) continue;
    for (int kw = 0; kw < n; ++kw) {
      const double wc = wgrid.coord(kw);
      if (std::fabs(wc) > max_w_fraction * wgrid.half_extent()) continue;
      for (int a = 0; a < axes; ++a) {
        x[a] = xc;
        w[a] = wc;
        lx[a] = lambda * xc;
        wl[a] = wc / lambda;
      }
      const Quaternion lhs = qwft_point(f_dil, g, x, w);
      const Quaternion rhs = qwft_point(f_nested, g_inv, lx, wl) * scale;
      rep.scale = std::max(rep.scale, abs(rhs));
      rep.record(modulus_only ? std::fabs(abs(lhs) - abs(rhs)) : abs(lhs - rhs));
    }
  }
  rep.finish(tolerance);
  return rep;
}

}  // namespace qtfa
