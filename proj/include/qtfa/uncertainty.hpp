#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtfa/constants.hpp"
#include "qtfa/qft.hpp"
#include "qtfa/qwft.hpp"
#include "qtfa/report.hpp"

namespace qtfa {

/// Which transform a phase-space field came from; selects the corollary
/// constants in the checks below.
enum class FieldKind { Qwft, Qaf, Qwvt };

inline const char* field_kind_name(FieldKind k) {
  switch (k) {
    case FieldKind::Qwft: return "qwft";
    case FieldKind::Qaf: return "qaf";
    case FieldKind::Qwvt: return "qwvt";
  }
  return "?";
}

/// Measurable subset of a field's phase-space lattice: a cell mask plus its
/// discrete normalized measure (cell count times cell weight).
struct ConcentrationSet {
  std::vector<std::uint8_t> membership;  // x-major, matching PhaseSpaceField
  double measure = 0.0;

  static ConcentrationSet from_mask(const PhaseSpaceField& field,
                                    std::vector<std::uint8_t> mask) {
    if (mask.size() != field.values.size())
      throw std::invalid_argument("ConcentrationSet: mask size mismatch");
    ConcentrationSet s;
    s.membership = std::move(mask);
    std::size_t cells = 0;
    for (auto m : s.membership) cells += m ? 1 : 0;
    s.measure = static_cast<double>(cells) * field.cell_weight();
    return s;
  }

  static ConcentrationSet full(const PhaseSpaceField& field) {
    return from_mask(field, std::vector<std::uint8_t>(field.values.size(), 1));
  }
  static ConcentrationSet empty(const PhaseSpaceField& field) {
    return from_mask(field, std::vector<std::uint8_t>(field.values.size(), 0));
  }
};

/// Super-level set {|F| >= tau * max|F|}; the canonical concentration set.
/// tau = 1e-12 stands in for the support of F.
inline ConcentrationSet super_level_set(const PhaseSpaceField& field, double tau) {
  double peak = 0.0;
  for (const auto& q : field.values) peak = std::max(peak, norm_sq(q));
  const double thr_sq = tau * tau * peak;
  std::vector<std::uint8_t> mask(field.values.size());
  for (std::size_t i = 0; i < field.values.size(); ++i)
    mask[i] = norm_sq(field.values[i]) >= thr_sq ? 1 : 0;
  return ConcentrationSet::from_mask(field, std::move(mask));
}

/// Centered box on the field lattice, half-open per axis (-h <= c < h) so the
/// box covers whole cells; doubling such a box scales its measure exactly.
inline ConcentrationSet centered_box(const PhaseSpaceField& field, double x_half,
                                     double w_half) {
  const int axes = field.axes();
  std::vector<std::uint8_t> xin(field.x_count()), win(field.w_count());
  {
    MultiIndex mi(axes, field.nx);
    std::size_t flat = 0;
    do {
      bool in = true;
      for (int a = 0; a < axes && in; ++a) {
        const double c = field.x_coord(mi.idx[a]);
        in = c >= -x_half && c < x_half;
      }
      xin[flat++] = in ? 1 : 0;
    } while (mi.advance());
  }
  {
    MultiIndex mi(axes, field.nw);
    std::size_t flat = 0;
    do {
      bool in = true;
      for (int a = 0; a < axes && in; ++a) {
        const double c = field.w_coord(mi.idx[a]);
        in = c >= -w_half && c < w_half;
      }
      win[flat++] = in ? 1 : 0;
    } while (mi.advance());
  }
  std::vector<std::uint8_t> mask(field.values.size());
  std::size_t i = 0;
  for (std::size_t x = 0; x < xin.size(); ++x)
    for (std::size_t w = 0; w < win.size(); ++w) mask[i++] = xin[x] & win[w];
  return ConcentrationSet::from_mask(field, std::move(mask));
}

/// Smallest eps with ||chi_{U^c} F||_2 <= eps ||F||_2, i.e. the fraction of
/// energy outside U.
inline double epsilon_of(const PhaseSpaceField& field, const ConcentrationSet& set) {
  if (set.membership.size() != field.values.size())
    throw std::invalid_argument("epsilon_of: set does not match field");
  double outside = 0.0, total = 0.0;
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    const double e = norm_sq(field.values[i]);
    total += e;
    if (!set.membership[i]) outside += e;
  }
  if (!(total > 0.0)) throw std::invalid_argument("epsilon_of: zero field");
  return std::sqrt(outside / total);
}

/// Entropy -sum P ln P * weight of a nonnegative density, 0 ln 0 = 0.
inline double entropy(std::span<const double> density, double cell_weight) {
  double acc = 0.0;
  for (double p : density) {
    if (p < 0.0) throw std::invalid_argument("entropy: negative density");
    if (p > 0.0) acc -= p * std::log(p);
  }
  return acc * cell_weight;
}

/// Entropy of the energy density |F|^2 over a phase-space field.
inline double energy_entropy(const PhaseSpaceField& field) {
  double acc = 0.0;
  for (const auto& q : field.values) {
    const double p = norm_sq(q);
    if (p > 0.0) acc -= p * std::log(p);
  }
  return acc * field.cell_weight();
}

namespace detail {

/// Mean of ln|u| over the unit cube [0,1]^m, via the closed form for m = 2
/// and the one-dimensional integral
///   int ln(sum u^2) du = int_0^inf (e^{-t} - I(t)^m)/t dt,
///   I(t) = sqrt(pi/(4t)) erf(sqrt(t))
/// otherwise.
inline double unit_cube_log_radius_mean(int m) {
  if (m == 2) return 0.5 * (kLn2 + 0.5 * kPi - 3.0);

  auto I = [](double t) { return std::sqrt(kPi / (4.0 * t)) * std::erf(std::sqrt(t)); };
  auto h = [&](double t) {
    if (t < 1e-12) return m / 3.0 - 1.0;  // limit of (e^{-t} - I^m)/t
    return (std::exp(-t) - std::pow(I(t), m)) / t;
  };
  // adaptive Simpson on [0, T], analytic tail with erf ~ 1 beyond
  const double T = 40.0;
  std::function<double(double, double, double, double, double, double, int)> rec =
      [&](double a, double b, double fa, double fm, double fb, double whole,
          int depth) -> double {
    const double m1 = 0.5 * (a + b);
    const double lm = 0.5 * (a + m1), rm = 0.5 * (m1 + b);
    const double flm = h(lm), frm = h(rm);
    const double left = (m1 - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m1) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::fabs(left + right - whole) < 1e-13)
      return left + right + (left + right - whole) / 15.0;
    return rec(a, m1, fa, flm, fm, left, depth - 1) +
           rec(m1, b, fm, frm, fb, right, depth - 1);
  };
  double integral = 0.0;
  double lo = 0.0;
  for (double hi : {0.5, 2.0, 8.0, T}) {
    const double fa = h(lo), fb = h(hi), fm = h(0.5 * (lo + hi));
    const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    integral += rec(lo, hi, fa, fm, fb, whole, 40);
    lo = hi;
  }
  // tail: int_T^inf (e^{-t} - I^m)/t dt ~ -(pi/4)^{m/2} (2/m) T^{-m/2} with erf ~ 1
  integral -= std::pow(kPi / 4.0, 0.5 * m) * (2.0 / m) * std::pow(T, -0.5 * m);
  return 0.5 * integral;
}

/// ln|x| sampled at the nodes of a centered lattice over R^{axes}, with the
/// origin node replaced by the analytic cell average of ln|x| over its cell.
inline std::vector<double> log_radius_weights(int axes, int n, double step) {
  const double origin_avg = std::log(step) + unit_cube_log_radius_mean(axes);
  std::vector<double> out(pow_index(n, axes));
  MultiIndex mi(axes, n);
  std::size_t flat = 0;
  do {
    double r2 = 0.0;
    for (int a = 0; a < axes; ++a) {
      const double c = (mi.idx[a] - n / 2) * step;
      r2 += c * c;
    }
    out[flat++] = r2 > 0.0 ? 0.5 * std::log(r2) : origin_avg;
  } while (mi.advance());
  return out;
}

/// |x|^2 at every node of a centered lattice.
inline std::vector<double> radius_sq(int axes, int n, double step) {
  std::vector<double> out(pow_index(n, axes));
  MultiIndex mi(axes, n);
  std::size_t flat = 0;
  do {
    double r2 = 0.0;
    for (int a = 0; a < axes; ++a) {
      const double c = (mi.idx[a] - n / 2) * step;
      r2 += c * c;
    }
    out[flat++] = r2;
  } while (mi.advance());
  return out;
}

/// Per-x and per-w marginal energies of a field: row[x] = sum_w |F|^2,
/// col[w] = sum_x |F|^2 (unweighted).
struct FieldMarginals {
  std::vector<double> row, col;
  explicit FieldMarginals(const PhaseSpaceField& f)
      : row(f.x_count(), 0.0), col(f.w_count(), 0.0) {
    const std::size_t wc = f.w_count();
    for (std::size_t x = 0; x < row.size(); ++x) {
      const Quaternion* slab = f.values.data() + x * wc;
      double acc = 0.0;
      for (std::size_t w = 0; w < wc; ++w) {
        const double e = norm_sq(slab[w]);
        acc += e;
        col[w] += e;
      }
      row[x] = acc;
    }
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Inequality checks. All are oriented so margin = lhs - rhs >= 0 means the
// bound holds; reports carry the constants and parameters used.
// ---------------------------------------------------------------------------

/// ||G_g f||_{p,4d} <= C_{p,q} ||f|| ||g||  (p >= 2; equality at p = 2).
inline InequalityReport lieb_check(const PhaseSpaceField& field, double f_l2, double g_l2,
                                   double p) {
  const int d = field.d;
  const double C = lieb_constant(p, d);
  const double Calt = lieb_constant_alt(p, d);
  InequalityReport r = InequalityReport::make("lieb", C * f_l2 * g_l2, field.lp_norm(p));
  r.constant_values["C_pq"] = C;
  r.parameters["p"] = p;
  r.parameters["d"] = d;
  if (std::fabs(Calt - C) > 1e-14 * C) {
    r.constant_values["C_pq_alt"] = Calt;
    r.note = "alternate constant arrangement differs; the theorem form is used";
  }
  return r;
}

/// 1 - eps^2 <= mu(U) for any set the field is eps-concentrated on.
inline InequalityReport donoho_stark_check(const PhaseSpaceField& field,
                                           const ConcentrationSet& set) {
  const double eps = epsilon_of(field, set);
  InequalityReport r =
      InequalityReport::make("donoho-stark", set.measure, 1.0 - eps * eps);
  r.parameters["epsilon"] = eps;
  return r;
}

/// C^{2p/(2-p)} (1 - eps^2)^{p/(p-2)} <= mu(U), p > 2; the Wigner variant
/// carries an extra 2^{-4d}.
inline InequalityReport lieb_concentration_check(const PhaseSpaceField& field,
                                                 const ConcentrationSet& set, double p,
                                                 FieldKind kind) {
  if (!(p > 2.0))
    throw std::invalid_argument("lieb_concentration_check: requires p > 2");
  const int d = field.d;
  const double eps = epsilon_of(field, set);
  const double C = lieb_constant(p, d);
  double rhs = std::pow(C, 2.0 * p / (2.0 - p)) *
               std::pow(1.0 - eps * eps, p / (p - 2.0));
  if (kind == FieldKind::Qwvt) rhs *= std::exp2(-4.0 * d);
  InequalityReport r = InequalityReport::make(
      std::string("lieb-concentration-") + field_kind_name(kind), set.measure, rhs);
  r.constant_values["C_pq"] = C;
  r.parameters["p"] = p;
  r.parameters["epsilon"] = eps;
  return r;
}

/// mu(supp F) >= C^{2p/(2-p)}, with the thresholded support standing in for
/// the exact zero set.
inline InequalityReport support_bound_check(const PhaseSpaceField& field, double p,
                                            FieldKind kind, double tau_supp = 1e-12) {
  const int d = field.d;
  const ConcentrationSet supp = super_level_set(field, tau_supp);
  const double C = lieb_constant(p, d);
  double rhs = std::pow(C, 2.0 * p / (2.0 - p));
  if (kind == FieldKind::Qwvt) rhs *= std::exp2(-4.0 * d);
  InequalityReport r = InequalityReport::make(
      std::string("support-bound-") + field_kind_name(kind), supp.measure, rhs);
  r.constant_values["C_pq"] = C;
  r.parameters["p"] = p;
  r.parameters["tau_supp"] = tau_supp;
  return r;
}

/// E(|F|^2) >= ||f||^2 ||g||^2 (2d ln2 - ln(||f||^2 ||g||^2)); the Wigner
/// variant subtracts ln(2^{4d}) inside.
inline InequalityReport entropy_bound_check(const PhaseSpaceField& field, double f_l2,
                                            double g_l2, FieldKind kind) {
  const int d = field.d;
  const double fg2 = f_l2 * f_l2 * g_l2 * g_l2;
  if (!(fg2 > 0.0)) throw std::invalid_argument("entropy_bound_check: zero inputs");
  const double lhs = energy_entropy(field);
  double inner = 2.0 * d * kLn2 - std::log(fg2);
  if (kind == FieldKind::Qwvt) inner -= 4.0 * d * kLn2;
  InequalityReport r = InequalityReport::make(
      std::string("entropy-bound-") + field_kind_name(kind), lhs, fg2 * inner);
  r.parameters["norm_product_sq"] = fg2;
  return r;
}

/// Logarithmic uncertainty for the plain transform:
///   int ln|x| |f|^2 + int ln|w| |F f|^2 >= D_{2d} ||f||^2.
inline InequalityReport log_uncertainty_qft_check(const SampledSignal& f) {
  const GridSpec& g = f.grid;
  const int axes = g.axes();
  const SpectrumSignal F = qft_fast(f);
  const auto lx = detail::log_radius_weights(axes, g.n_per_axis, g.spacing());
  const auto lw = detail::log_radius_weights(axes, F.grid.n_per_axis, F.grid.spacing);

  double side_x = 0.0, side_w = 0.0, norm2 = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const double e = norm_sq(f.values[i]);
    side_x += lx[i] * e;
    norm2 += e;
  }
  for (std::size_t i = 0; i < F.values.size(); ++i) side_w += lw[i] * norm_sq(F.values[i]);
  side_x *= g.cell_weight();
  side_w *= F.grid.cell_weight();
  norm2 *= g.cell_weight();

  const double D = log_constant(g.d);
  InequalityReport r =
      InequalityReport::make("log-uncertainty-qft", side_x + side_w, D * norm2);
  r.constant_values["D_2d"] = D;
  r.parameters["x_side"] = side_x;
  r.parameters["w_side"] = side_w;
  return r;
}

/// Logarithmic uncertainty through a window:
///   int int ln|w| |F|^2 + ||g||^2 int ln|t| |f|^2 >= D_{2d} ||f||^2 ||g||^2,
/// with D_{2d} - ln2 for the Wigner field.
inline InequalityReport log_uncertainty_field_check(const PhaseSpaceField& field,
                                                    const SampledSignal& f, double g_l2,
                                                    FieldKind kind) {
  const GridSpec& g = f.grid;
  const int axes = g.axes();
  const detail::FieldMarginals marg(field);
  const auto lw = detail::log_radius_weights(axes, field.nw, field.dw);
  const auto lt = detail::log_radius_weights(axes, g.n_per_axis, g.spacing());

  double wside = 0.0;
  for (std::size_t w = 0; w < marg.col.size(); ++w) wside += lw[w] * marg.col[w];
  wside *= field.cell_weight();

  double tside = 0.0, f2 = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const double e = norm_sq(f.values[i]);
    tside += lt[i] * e;
    f2 += e;
  }
  tside *= g.cell_weight();
  f2 *= g.cell_weight();

  double D = log_constant(g.d);
  if (kind == FieldKind::Qwvt) D -= kLn2;
  InequalityReport r = InequalityReport::make(
      std::string("log-uncertainty-") + field_kind_name(kind),
      wside + g_l2 * g_l2 * tside, D * f2 * g_l2 * g_l2);
  r.constant_values[kind == FieldKind::Qwvt ? "D_2d_minus_ln2" : "D_2d"] = D;
  r.parameters["w_side"] = wside;
  r.parameters["t_side"] = tside;
  return r;
}

/// Component-wise uncertainty for the plain transform along one axis:
///   (int x_p^2 |f|^2)(int w_p^2 |F f|^2) >= 1/4 (int |f|^2)^2.
/// axis = -1 selects the radial form with |x|^2, |w|^2.
inline InequalityReport component_heisenberg_check(const SampledSignal& f, int axis) {
  const GridSpec& g = f.grid;
  const int axes = g.axes();
  if (axis < -1 || axis >= axes)
    throw std::invalid_argument("component_heisenberg_check: axis out of range");
  const SpectrumSignal F = qft_fast(f);

  double mx = 0.0, mw = 0.0, norm2 = 0.0;
  MultiIndex mi(axes, g.n_per_axis);
  std::size_t flat = 0;
  do {
    double cx, cw;
    if (axis >= 0) {
      cx = g.coord(mi.idx[axis]);
      cw = F.grid.coord(mi.idx[axis]);
      cx *= cx;
      cw *= cw;
    } else {
      cx = cw = 0.0;
      for (int a = 0; a < axes; ++a) {
        const double xa = g.coord(mi.idx[a]);
        const double wa = F.grid.coord(mi.idx[a]);
        cx += xa * xa;
        cw += wa * wa;
      }
    }
    mx += cx * norm_sq(f.values[flat]);
    mw += cw * norm_sq(F.values[flat]);
    norm2 += norm_sq(f.values[flat]);
    ++flat;
  } while (mi.advance());
  mx *= g.cell_weight();
  mw *= F.grid.cell_weight();
  norm2 *= g.cell_weight();

  InequalityReport r = InequalityReport::make(
      axis >= 0 ? "component-heisenberg-qft" : "radial-heisenberg-qft", mx * mw,
      0.25 * norm2 * norm2);
  r.parameters["axis"] = axis;
  r.parameters["x_moment"] = mx;
  r.parameters["w_moment"] = mw;
  return r;
}

/// Weighted-moment uncertainty in the separate form:
///   (int |x|^{2p} |F|^2)^{q/(p+q)} (int |w|^{2q} |F|^2)^{p/(p+q)}
///     >= E_{p,q} ||f||^2 ||g||^2       (windowed and ambiguity fields).
inline InequalityReport heisenberg_check(const PhaseSpaceField& field, double f_l2,
                                         double g_l2, double p, double q,
                                         FieldKind kind) {
  if (kind == FieldKind::Qwvt)
    throw std::invalid_argument(
        "heisenberg_check: use heisenberg_radial_check for the Wigner variant");
  const int d = field.d;
  const int axes = field.axes();
  const detail::FieldMarginals marg(field);
  const auto xsq = detail::radius_sq(axes, field.nx, field.dx);
  const auto wsq = detail::radius_sq(axes, field.nw, field.dw);

  double mx = 0.0, mw = 0.0;
  for (std::size_t x = 0; x < marg.row.size(); ++x) mx += std::pow(xsq[x], p) * marg.row[x];
  for (std::size_t w = 0; w < marg.col.size(); ++w) mw += std::pow(wsq[w], q) * marg.col[w];
  mx *= field.cell_weight();
  mw *= field.cell_weight();

  const double E = heisenberg_constant(p, q, d);
  const double fg2 = f_l2 * f_l2 * g_l2 * g_l2;
  InequalityReport r = InequalityReport::make(
      std::string("heisenberg-") + field_kind_name(kind),
      std::pow(mx, q / (p + q)) * std::pow(mw, p / (p + q)), E * fg2);
  r.constant_values["E_pq"] = E;
  r.constant_values["B_pq"] = heisenberg_B(p, q, d);
  r.parameters["p"] = p;
  r.parameters["q"] = q;
  r.parameters["x_moment"] = mx;
  r.parameters["w_moment"] = mw;
  return r;
}

/// Radial form with the joint weight |(x,w)|:
///   || |(x,w)|^p F ||^{q/(p+q)} || |(x,w)|^q F ||^{p/(p+q)}
///     >= sqrt(E_{p,q}) ||f|| ||g||,
/// times 4^{-pq/(p+q)} for the Wigner field. For that variant the report also
/// carries the largest constant that would still pass, for diagnostic
/// comparison.
inline InequalityReport heisenberg_radial_check(const PhaseSpaceField& field, double f_l2,
                                                double g_l2, double p, double q,
                                                FieldKind kind) {
  const int d = field.d;
  const int axes = field.axes();
  const auto xsq = detail::radius_sq(axes, field.nx, field.dx);
  const auto wsq = detail::radius_sq(axes, field.nw, field.dw);
  const std::size_t wc = field.w_count();

  double mp = 0.0, mq = 0.0;
  for (std::size_t x = 0; x < field.x_count(); ++x) {
    const Quaternion* slab = field.values.data() + x * wc;
    for (std::size_t w = 0; w < wc; ++w) {
      const double e = norm_sq(slab[w]);
      if (e == 0.0) continue;
      const double r2 = xsq[x] + wsq[w];
      mp += std::pow(r2, p) * e;
      mq += std::pow(r2, q) * e;
    }
  }
  mp *= field.cell_weight();
  mq *= field.cell_weight();

  const double E = heisenberg_constant(p, q, d);
  const double lhs = std::pow(mp, 0.5 * q / (p + q)) * std::pow(mq, 0.5 * p / (p + q));
  double rhs = std::sqrt(E) * f_l2 * g_l2;
  if (kind == FieldKind::Qwvt) rhs *= std::pow(4.0, -p * q / (p + q));
  InequalityReport r = InequalityReport::make(
      std::string("heisenberg-radial-") + field_kind_name(kind), lhs, rhs);
  r.constant_values["E_pq"] = E;
  r.parameters["p"] = p;
  r.parameters["q"] = q;
  if (kind == FieldKind::Qwvt) {
    r.constant_values["factor"] = std::pow(4.0, -p * q / (p + q));
    r.constant_values["empirical_constant"] = lhs / (f_l2 * g_l2);
    r.note = "empirical_constant is the largest constant the data would admit";
  }
  return r;
}

/// Restriction bound on a finite-measure subset:
///   ||chi_S F||_p^{p(p+1)} <= M_{eps,p} mu(S) || |(x,w)|^eps F ||_2^{4pd/(2d+eps)}
///                             (||f|| ||g||)^{p(p - (2d-eps)/(2d+eps))},
/// with N_{eps,p} in place of M for the Wigner field.
inline InequalityReport local_price_check(const PhaseSpaceField& field,
                                          const ConcentrationSet& set, double eps,
                                          double p, double f_l2, double g_l2,
                                          FieldKind kind) {
  const int d = field.d;
  if (set.membership.size() != field.values.size())
    throw std::invalid_argument("local_price_check: set does not match field");
  const int axes = field.axes();
  const auto xsq = detail::radius_sq(axes, field.nx, field.dx);
  const auto wsq = detail::radius_sq(axes, field.nw, field.dw);
  const std::size_t wc = field.w_count();

  double restricted_p = 0.0;  // sum |F|^p over the set
  double weighted_2 = 0.0;    // sum |(x,w)|^{2 eps} |F|^2
  for (std::size_t x = 0; x < field.x_count(); ++x) {
    const Quaternion* slab = field.values.data() + x * wc;
    const std::uint8_t* in = set.membership.data() + x * wc;
    for (std::size_t w = 0; w < wc; ++w) {
      const double e = norm_sq(slab[w]);
      if (e == 0.0) continue;
      weighted_2 += std::pow(xsq[x] + wsq[w], eps) * e;
      if (in[w]) restricted_p += std::pow(e, 0.5 * p);
    }
  }
  const double restricted_norm = std::pow(restricted_p * field.cell_weight(), 1.0 / p);
  const double weighted_norm = std::sqrt(weighted_2 * field.cell_weight());

  const double M = kind == FieldKind::Qwvt ? wigner_price_constant(eps, p, d)
                                           : local_price_constant(eps, p, d);
  const double td = 2.0 * d;
  const double fg = f_l2 * g_l2;
  const double lhs = M * set.measure *
                     std::pow(weighted_norm, 4.0 * p * d / (td + eps)) *
                     std::pow(fg, p * (p - (td - eps) / (td + eps)));
  const double rhs = std::pow(restricted_norm, p * (p + 1.0));

  InequalityReport r = InequalityReport::make(
      std::string("local-price-") + field_kind_name(kind), lhs, rhs);
  r.constant_values[kind == FieldKind::Qwvt ? "N_eps_p" : "M_eps_p"] = M;
  r.parameters["eps"] = eps;
  r.parameters["p"] = p;
  r.parameters["measure"] = set.measure;
  r.note = "constant transcribed from the stated closed form, which carries "
           "visible typos in its source";
  return r;
}

}  // namespace qtfa
