#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qtfa/qwft.hpp"

namespace qtfa {

namespace detail {

inline void check_half_shift_grid(const GridSpec& g, const char* who) {
  if (g.n_per_axis % 4 != 0)
    throw std::invalid_argument(std::string(who) +
                                ": half shifts need N divisible by 4 (odd N rejected)");
}

}  // namespace detail

/// Radar ambiguity transform
///   A(f,g)(x,w) = sum_t e^{-i t1.w1} f(t + x/2) conj(g(t - x/2)) e^{-j t2.w2} weight.
/// x runs over the even-index subgrid (spacing 2*Delta) so that t +- x/2 stays
/// on grid nodes; w runs over the full dual grid. One transform per shift.
inline PhaseSpaceField ambiguity(const SampledSignal& f, const SampledSignal& g) {
  detail::check_window(f, g);
  detail::check_half_shift_grid(f.grid, "ambiguity");
  const GridSpec& grid = f.grid;
  const int axes = grid.axes();
  const int n = grid.n_per_axis;
  const int ncoarse = n / 2;

  PhaseSpaceField field(grid.d, ncoarse, 2.0 * grid.spacing(), n, dual_grid(grid).spacing);
  const std::size_t wcount = field.w_count();

  parallel_for(field.x_count(), [&](std::size_t xflat) {
    std::vector<int> xi(axes);
    unravel(xflat, axes, ncoarse, xi.data());
    // x = (2 m - N/2) Delta, so x/2 is a shift of m - N/4 cells
    std::vector<int> half(axes);
    for (int a = 0; a < axes; ++a) half[a] = xi[a] - n / 4;

    std::vector<Quaternion> h(grid.size());
    MultiIndex ti(axes, n);
    std::vector<int> plus(axes), minus(axes);
    std::size_t flat = 0;
    do {
      for (int a = 0; a < axes; ++a) {
        plus[a] = (ti.idx[a] + half[a]) % n;
        if (plus[a] < 0) plus[a] += n;
        minus[a] = (ti.idx[a] - half[a]) % n;
        if (minus[a] < 0) minus[a] += n;
      }
      h[flat++] = f.values[ravel(plus.data(), axes, n)] *
                  conj(g.values[ravel(minus.data(), axes, n)]);
    } while (ti.advance());

    detail::two_sided_transform(h.data(), field.values.data() + xflat * wcount, grid.d, n,
                                -1, grid.cell_weight());
  });
  return field;
}

/// Brute-force ambiguity value at one (x, w); x/2 must be grid-aligned.
inline Quaternion ambiguity_point(const SampledSignal& f, const SampledSignal& g,
                                  const std::vector<double>& x,
                                  const std::vector<double>& w) {
  detail::check_window(f, g);
  const GridSpec& grid = f.grid;
  const int axes = grid.axes();
  const int n = grid.n_per_axis;
  const int d = grid.d;
  std::vector<int> half(axes);
  for (int a = 0; a < axes; ++a) {
    const double cells = 0.5 * x[a] / grid.spacing();
    if (std::fabs(cells - std::round(cells)) > 1e-9)
      throw std::invalid_argument("ambiguity_point: x/2 not grid-aligned");
    half[a] = static_cast<int>(std::round(cells));
  }
  Quaternion acc;
  MultiIndex ti(axes, n);
  std::vector<int> plus(axes), minus(axes);
  std::size_t flat = 0;
  do {
    double su = 0.0, tv = 0.0;
    for (int a = 0; a < d; ++a) su += grid.coord(ti.idx[a]) * w[a];
    for (int a = d; a < axes; ++a) tv += grid.coord(ti.idx[a]) * w[a];
    for (int a = 0; a < axes; ++a) {
      plus[a] = (ti.idx[a] + half[a]) % n;
      if (plus[a] < 0) plus[a] += n;
      minus[a] = (ti.idx[a] - half[a]) % n;
      if (minus[a] < 0) minus[a] += n;
    }
    acc += exp_i(-su) *
           (f.values[ravel(plus.data(), axes, n)] * conj(g.values[ravel(minus.data(), axes, n)])) *
           exp_j(-tv);
    ++flat;
  } while (ti.advance());
  return acc * grid.cell_weight();
}

/// Wigner-Ville transform
///   W(f,g)(x,w) = sum_t e^{-i w1.t1} f(x + t/2) conj(g(x - t/2)) e^{-j w2.t2} weight.
/// The shift variable t runs over the even-spaced lattice (spacing 2*Delta)
/// covering the doubled box [-2L, 2L), so t/2 sweeps every node exactly once
/// and x +- t/2 stays on grid nodes for every x. The dual of that lattice
/// puts w on N nodes of spacing Dw/2 covering [-pi/(2 Delta), pi/(2 Delta)),
/// which is where the transform of a band-resolved signal lives. Beyond
/// |x| = L/2 the cyclic shifts make the field wrap-periodic with period L;
/// wigner_physical extracts the non-wrapped part.
inline PhaseSpaceField wigner(const SampledSignal& f, const SampledSignal& g) {
  detail::check_window(f, g);
  const GridSpec& grid = f.grid;
  const int axes = grid.axes();
  const int n = grid.n_per_axis;
  if (n % 2 != 0) throw std::invalid_argument("wigner: odd N rejected");
  const GridSpec shift_lattice(grid.d, n, 2.0 * grid.half_extent);  // spacing 2*Delta

  PhaseSpaceField field(grid.d, n, grid.spacing(), n, dual_grid(shift_lattice).spacing);
  const std::size_t wcount = field.w_count();

  parallel_for(field.x_count(), [&](std::size_t xflat) {
    std::vector<int> xi(axes);
    unravel(xflat, axes, n, xi.data());

    // t = (m - N/2) * 2*Delta, so t/2 is a shift of m - N/2 cells
    std::vector<Quaternion> h(grid.size());
    MultiIndex mi(axes, n);
    std::vector<int> plus(axes), minus(axes);
    std::size_t flat = 0;
    do {
      for (int a = 0; a < axes; ++a) {
        const int half = mi.idx[a] - n / 2;
        plus[a] = (xi[a] + half) % n;
        if (plus[a] < 0) plus[a] += n;
        minus[a] = (xi[a] - half) % n;
        if (minus[a] < 0) minus[a] += n;
      }
      h[flat++] = f.values[ravel(plus.data(), axes, n)] *
                  conj(g.values[ravel(minus.data(), axes, n)]);
    } while (mi.advance());

    detail::two_sided_transform(h.data(), field.values.data() + xflat * wcount, grid.d, n,
                                -1, shift_lattice.cell_weight());
  });
  return field;
}

/// Brute-force Wigner value at one (x, w); sums over the doubled-box shift
/// lattice with its quadrature weight.
inline Quaternion wigner_point(const SampledSignal& f, const SampledSignal& g,
                               const std::vector<double>& x, const std::vector<double>& w) {
  detail::check_window(f, g);
  const GridSpec& grid = f.grid;
  const int axes = grid.axes();
  const int n = grid.n_per_axis;
  const int d = grid.d;
  if (n % 2 != 0) throw std::invalid_argument("wigner_point: odd N rejected");
  const GridSpec shift_lattice(grid.d, n, 2.0 * grid.half_extent);
  std::vector<int> xi(axes);
  for (int a = 0; a < axes; ++a) {
    const double cells = x[a] / grid.spacing();
    if (std::fabs(cells - std::round(cells)) > 1e-9)
      throw std::invalid_argument("wigner_point: x not grid-aligned");
    xi[a] = static_cast<int>(std::round(cells)) + n / 2;
  }
  Quaternion acc;
  MultiIndex mi(axes, n);
  std::vector<int> plus(axes), minus(axes);
  do {
    double su = 0.0, tv = 0.0;
    for (int a = 0; a < axes; ++a) {
      const double t = shift_lattice.coord(mi.idx[a]);
      if (a < d) su += t * w[a];
      else tv += t * w[a];
      const int half = mi.idx[a] - n / 2;
      plus[a] = (xi[a] + half) % n;
      if (plus[a] < 0) plus[a] += n;
      minus[a] = (xi[a] - half) % n;
      if (minus[a] < 0) minus[a] += n;
    }
    acc += exp_i(-su) *
           (f.values[ravel(plus.data(), axes, n)] * conj(g.values[ravel(minus.data(), axes, n)])) *
           exp_j(-tv);
  } while (mi.advance());
  return acc * shift_lattice.cell_weight();
}

/// The non-wrapped part of a Wigner field: x restricted to [-L/2, L/2),
/// where the doubled argument 2x stays inside the box. This is the honest
/// discretization of the continuous transform for concentrated signals.
inline PhaseSpaceField wigner_physical(const PhaseSpaceField& wig) {
  const int axes = wig.axes();
  const int n = wig.nx;
  PhaseSpaceField out(wig.d, n / 2, wig.dx, wig.nw, wig.dw);
  MultiIndex xi(axes, n / 2);
  std::size_t xflat = 0;
  std::vector<int> src(axes);
  do {
    for (int a = 0; a < axes; ++a) src[a] = xi.idx[a] + n / 4;
    const std::size_t sflat = ravel(src.data(), axes, n);
    std::copy(wig.values.begin() + sflat * wig.w_count(),
              wig.values.begin() + (sflat + 1) * wig.w_count(),
              out.values.begin() + xflat * out.w_count());
    ++xflat;
  } while (xi.advance());
  return out;
}

/// Pointwise identity A(f,g)(x,w) = e^{i w1.x1/2} G_g(f)(x,w) e^{j w2.x2/2},
/// checked on every ambiguity node against the windowed-transform field.
inline ComparisonReport qaf_relation_check(const PhaseSpaceField& amb,
                                           const PhaseSpaceField& wft,
                                           double tolerance = 1e-12) {
  if (amb.d != wft.d || amb.nw != wft.nw || 2 * amb.nx != wft.nx)
    throw std::invalid_argument("qaf_relation_check: field shapes do not match");
  const int axes = amb.axes();
  const int d = amb.d;

  ComparisonReport rep;
  rep.name = "qaf-qwft-relation";
  for (const auto& q : amb.values) rep.scale = std::max(rep.scale, abs(q));

  MultiIndex xi(axes, amb.nx);
  std::size_t xflat = 0;
  std::vector<int> fine(axes);
  do {
    // coarse index m holds x at fine index 2m
    for (int a = 0; a < axes; ++a) fine[a] = 2 * xi.idx[a];
    const std::size_t gx = ravel(fine.data(), axes, wft.nx);
    MultiIndex wi(axes, amb.nw);
    std::size_t wflat = 0;
    do {
      double phase1 = 0.0, phase2 = 0.0;
      for (int a = 0; a < d; ++a)
        phase1 += 0.5 * amb.w_coord(wi.idx[a]) * amb.x_coord(xi.idx[a]);
      for (int a = d; a < axes; ++a)
        phase2 += 0.5 * amb.w_coord(wi.idx[a]) * amb.x_coord(xi.idx[a]);
      const Quaternion expect = exp_i(phase1) * wft.at(gx, wflat) * exp_j(phase2);
      rep.record(abs(amb.at(xflat, wflat) - expect));
      ++wflat;
    } while (wi.advance());
    ++xflat;
  } while (xi.advance());
  rep.finish(tolerance);
  return rep;
}

/// Pointwise identity W(f,g)(x,w) = 2^{2d} e^{2i w1.x1} G_{reflect(g)}(f)(2x, 2w)
/// e^{2j w2.x2} on the subgrid where the doubled arguments stay in range;
/// out-of-range nodes are excluded and counted.
inline ComparisonReport qwvt_relation_check(const PhaseSpaceField& wig,
                                            const PhaseSpaceField& wft_reflected,
                                            double tolerance = 1e-10) {
  if (wig.d != wft_reflected.d || wig.nx != wft_reflected.nx ||
      wig.nw != wft_reflected.nw)
    throw std::invalid_argument("qwvt_relation_check: field shapes do not match");
  const int axes = wig.axes();
  const int d = wig.d;
  const int n = wig.nx;
  const double factor = std::pow(2.0, 2.0 * d);

  ComparisonReport rep;
  rep.name = "qwvt-qwft-relation";
  for (const auto& q : wig.values) rep.scale = std::max(rep.scale, abs(q));

  MultiIndex xi(axes, n);
  std::size_t xflat = 0;
  std::vector<int> dbl(axes);
  do {
    bool in_range = true;
    for (int a = 0; a < axes; ++a) {
      dbl[a] = 2 * xi.idx[a] - n / 2;  // fine index of 2x
      if (dbl[a] < 0 || dbl[a] >= n) {
        in_range = false;
        break;
      }
    }
    if (!in_range) {
      rep.excluded += wig.w_count();
      ++xflat;
      continue;
    }
    const std::size_t gx = ravel(dbl.data(), axes, n);
    // the Wigner w node (k - N/2) Dw/2 doubles to the dual node of index k
    MultiIndex wi(axes, wig.nw);
    std::size_t wflat = 0;
    do {
      double phase1 = 0.0, phase2 = 0.0;
      for (int a = 0; a < d; ++a)
        phase1 += 2.0 * wig.w_coord(wi.idx[a]) * wig.x_coord(xi.idx[a]);
      for (int a = d; a < axes; ++a)
        phase2 += 2.0 * wig.w_coord(wi.idx[a]) * wig.x_coord(xi.idx[a]);
      const Quaternion expect =
          factor * (exp_i(phase1) * wft_reflected.at(gx, wflat) * exp_j(phase2));
      rep.record(abs(wig.at(xflat, wflat) - expect));
      ++wflat;
    } while (wi.advance());
    ++xflat;
  } while (xi.advance());
  rep.finish(tolerance);
  return rep;
}

}  // namespace qtfa
