#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qtfa/io.hpp"
#include "qtfa/tf_dist.hpp"
#include "qtfa/uncertainty.hpp"

namespace qtfa {

/// Grid and seed a verification suite runs at.
struct SuiteConfig {
  int d = 1;
  int n = 32;
  double half_extent = 8.0;
  std::uint64_t seed = 7;

  GridSpec grid() const { return GridSpec(d, n, half_extent); }
};

/// One independent verification job producing a batch of reports.
struct SuiteJob {
  std::string name;
  std::function<std::vector<InequalityReport>()> run;
};

inline InequalityReport equality_report(std::string name, double lhs, double rhs,
                                        double tol, double scale = 0.0) {
  const double s = scale > 0.0 ? scale : std::max({std::fabs(lhs), std::fabs(rhs), 1e-300});
  InequalityReport r = InequalityReport::make(std::move(name), tol, std::fabs(lhs - rhs) / s);
  r.parameters["lhs_value"] = lhs;
  r.parameters["rhs_value"] = rhs;
  return r;
}

/// Streamed entropy of |G_g f|^2 without materializing the field; the per-x
/// partial sums are reduced in a fixed order so results do not depend on the
/// shift schedule.
inline double streamed_energy_entropy(const SampledSignal& f, const SampledSignal& g) {
  std::vector<double> part(f.grid.size(), 0.0);
  qwft_visit(f, g, [&](std::size_t xflat, const std::vector<Quaternion>& slice) {
    double acc = 0.0;
    for (const auto& q : slice) {
      const double p = norm_sq(q);
      if (p > 0.0) acc -= p * std::log(p);
    }
    part[xflat] = acc;
  });
  double total = 0.0;
  for (double v : part) total += v;
  return total * f.grid.cell_weight() * dual_grid(f.grid).cell_weight();
}

/// Streamed closed-form comparison for the Gaussian pair: pointwise relative
/// error of |G|^2 against the analytic modulus over the masked cells. Shifts
/// whose whole slab falls below the mask are skipped without transforming.
inline ComparisonReport gaussian_qwft_closed_check(double a, double b, const GridSpec& grid,
                                                   double tolerance, double mask = 1e-8) {
  const int axes = grid.axes();
  const int n = grid.n_per_axis;
  const SampledSignal f = sample(GaussianSpec::signal(a), grid);
  const SampledSignal g = sample(GaussianSpec::window(b), grid);
  const FrequencyGrid wg = dual_grid(grid);
  const auto xsq = detail::radius_sq(axes, n, grid.spacing());
  const auto wsq = detail::radius_sq(axes, wg.n_per_axis, wg.spacing);
  const double max_closed = std::pow(4.0 * a * b, grid.d) / std::pow(a + b, 2.0 * grid.d);
  const double threshold = mask * max_closed;

  // the |w|-independent factor decides whether a slab can reach the mask
  std::vector<std::size_t> active;
  for (std::size_t x = 0; x < xsq.size(); ++x)
    if (gaussian_qwft_modulus_sq(a, b, grid.d, xsq[x], 0.0) >= threshold)
      active.push_back(x);

  std::vector<double> worst(active.size(), 0.0);
  std::vector<std::uint64_t> counted(active.size(), 0);
  parallel_for(active.size(), [&](std::size_t k) {
    const std::size_t xflat = active[k];
    std::vector<int> xi(axes), shift(axes);
    unravel(xflat, axes, n, xi.data());
    for (int ax = 0; ax < axes; ++ax) shift[ax] = xi[ax] - n / 2;
    std::vector<Quaternion> h(grid.size()), slice(grid.size());
    detail::windowed_product(f, g, shift, h.data());
    detail::two_sided_transform(h.data(), slice.data(), grid.d, n, -1, grid.cell_weight());

    double w = 0.0;
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < slice.size(); ++i) {
      const double closed = gaussian_qwft_modulus_sq(a, b, grid.d, xsq[xflat], wsq[i]);
      if (closed < threshold) continue;
      w = std::max(w, std::fabs(norm_sq(slice[i]) - closed) / closed);
      ++c;
    }
    worst[k] = w;
    counted[k] = c;
  });

  ComparisonReport rep;
  rep.name = "gaussian-qwft-closed";
  rep.scale = 1.0;  // relative errors recorded directly
  for (std::size_t i = 0; i < worst.size(); ++i) {
    rep.max_abs_err = std::max(rep.max_abs_err, worst[i]);
    rep.compared += counted[i];
  }
  rep.excluded = f.grid.size() * wg.size() - rep.compared;
  rep.finish(tolerance);
  return rep;
}

namespace detail {

inline SampledSignal random_pair_f(const GridSpec& g, std::uint64_t seed, int i) {
  return random_bandlimited_signal(g, seed * 1000 + 2 * i);
}
inline SampledSignal random_pair_g(const GridSpec& g, std::uint64_t seed, int i) {
  return random_bandlimited_signal(g, seed * 1000 + 2 * i + 1);
}

inline std::string tag(const std::string& base, const std::string& suffix) {
  return base + "/" + suffix;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Suite builders. Jobs are appended in a fixed order; the runner preserves it.
// ---------------------------------------------------------------------------

inline std::vector<SuiteJob> suite_plancherel(const SuiteConfig& cfg) {
  std::vector<SuiteJob> jobs;
  const GridSpec grid = cfg.grid();

  jobs.push_back({"qft-plancherel", [=]() {
    std::vector<InequalityReport> out;
    for (double a : {0.25, 0.5, 1.0, 2.0}) {
      const SampledSignal f = sample(GaussianSpec::signal(a), grid);
      out.push_back(equality_report("qft-plancherel/gauss-a" + std::to_string(a),
                                    spectrum_l2_norm(qft_fast(f)), l2_norm(f), 1e-10));
    }
    for (int i = 0; i < 5; ++i) {
      const SampledSignal f = random_bandlimited_signal(grid, cfg.seed * 100 + i);
      out.push_back(equality_report("qft-plancherel/random-" + std::to_string(i),
                                    spectrum_l2_norm(qft_fast(f)), l2_norm(f), 1e-10));
    }
    return out;
  }});

  jobs.push_back({"qft-parseval", [=]() {
    std::vector<InequalityReport> out;
    for (int i = 0; i < 3; ++i) {
      const SampledSignal f = detail::random_pair_f(grid, cfg.seed, i);
      const SampledSignal g = detail::random_pair_g(grid, cfg.seed, i);
      out.push_back(equality_report("qft-parseval/random-" + std::to_string(i),
                                    spectrum_sc_inner(qft_fast(f), qft_fast(g)),
                                    sc_inner(f, g), 1e-10,
                                    std::max(1e-300, l2_norm(f) * l2_norm(g))));
    }
    return out;
  }});

  jobs.push_back({"qft-roundtrip", [=]() {
    std::vector<InequalityReport> out;
    auto roundtrip = [&](const SampledSignal& f, const std::string& name) {
      const SampledSignal back = iqft(qft_fast(f), grid);
      double dev = 0.0, scale = 0.0;
      for (std::size_t i = 0; i < f.size(); ++i) {
        dev = std::max(dev, abs(back.values[i] - f.values[i]));
        scale = std::max(scale, abs(f.values[i]));
      }
      out.push_back(equality_report(name, dev, 0.0, 1e-10, scale));
    };
    roundtrip(sample(GaussianSpec::signal(0.5), grid), "qft-roundtrip/gauss");
    roundtrip(random_bandlimited_signal(grid, cfg.seed + 17), "qft-roundtrip/random");
    return out;
  }});

  jobs.push_back({"qft-oracle", [=]() {
    std::vector<InequalityReport> out;
    for (int i = 0; i < 10; ++i) {
      const SampledSignal f = random_bandlimited_signal(grid, cfg.seed * 7 + i);
      const SpectrumSignal fast = qft_fast(f);
      const SpectrumSignal direct = qft_direct_full(f);
      double dev = 0.0, scale = 0.0;
      for (std::size_t k = 0; k < fast.size(); ++k) {
        dev = std::max(dev, abs(fast.values[k] - direct.values[k]));
        scale = std::max(scale, abs(direct.values[k]));
      }
      out.push_back(
          equality_report("qft-oracle/random-" + std::to_string(i), dev, 0.0, 1e-10, scale));
    }
    return out;
  }});

  jobs.push_back({"qft-split-identity", [=]() {
    const SampledSignal f = random_bandlimited_signal(grid, cfg.seed + 23);
    const SpectrumSignal F = qft_fast(f);
    SampledSignal fp(grid), fm(grid);
    for (std::size_t i = 0; i < f.size(); ++i) {
      auto [p, m] = split(f.values[i]);
      fp.values[i] = p;
      fm.values[i] = m;
    }
    const SpectrumSignal Fp = qft_fast(fp);
    const SpectrumSignal Fm = qft_fast(fm);
    double dev = 0.0, scale = 0.0;
    for (std::size_t k = 0; k < F.size(); ++k) {
      dev = std::max(dev, std::fabs(norm_sq(F.values[k]) - norm_sq(Fp.values[k]) -
                                    norm_sq(Fm.values[k])));
      scale = std::max(scale, norm_sq(F.values[k]));
    }
    return std::vector<InequalityReport>{
        equality_report("qft-split-identity/random", dev, 0.0, 1e-12, scale)};
  }});

  jobs.push_back({"gaussian-qft-closed", [=]() {
    std::vector<InequalityReport> out;
    auto check = [&](double a, double b, const GridSpec& g, double tol) {
      const SampledSignal f = sample(GaussianSpec::separable(a, b), g);
      const SpectrumSignal F = qft_fast(f);
      const int axes = g.axes();
      double dev = 0.0;
      const double peak = std::pow(a * b, -0.5 * g.d);
      MultiIndex mi(axes, F.grid.n_per_axis);
      std::size_t flat = 0;
      std::vector<double> u(g.d), v(g.d);
      do {
        for (int ax = 0; ax < g.d; ++ax) u[ax] = F.grid.coord(mi.idx[ax]);
        for (int ax = g.d; ax < axes; ++ax) v[ax - g.d] = F.grid.coord(mi.idx[ax]);
        dev = std::max(dev, abs(F.values[flat++] - gaussian_qft_closed(a, b, u, v)));
      } while (mi.advance());
      out.push_back(equality_report("gaussian-qft-closed/a" + std::to_string(a) + "-b" +
                                        std::to_string(b) + "-n" +
                                        std::to_string(g.n_per_axis),
                                    dev, 0.0, tol, peak));
    };
    check(1.0, 1.0, grid, 1e-4);
    check(1.0, 0.5, grid, 1e-4);
    check(2.0, 1.0, grid, 1e-4);
    const GridSpec fine(grid.d, 2 * grid.n_per_axis, grid.half_extent);
    check(1.0, 1.0, fine, 1e-6);
    check(2.0, 1.0, fine, 1e-6);
    return out;
  }});

  jobs.push_back({"qwft-plancherel", [=]() {
    std::vector<InequalityReport> out;
    auto check = [&](const SampledSignal& f, const SampledSignal& g, const std::string& n) {
      const PhaseSpaceField G = qwft(f, g);
      out.push_back(equality_report("qwft-plancherel/" + n, G.l2_norm(),
                                    l2_norm(f) * l2_norm(g), 1e-10));
      InequalityReport sup = InequalityReport::make(
          "qwft-sup-bound/" + n, l2_norm(f) * l2_norm(g) + 1e-12, G.sup_norm());
      out.push_back(sup);
    };
    for (auto [a, b] : {std::pair{0.5, 0.5}, {1.0, 0.5}, {2.0, 1.0}})
      check(sample(GaussianSpec::signal(a), grid), sample(GaussianSpec::window(b), grid),
            "gauss-a" + std::to_string(a) + "-b" + std::to_string(b));
    for (int i = 0; i < 3; ++i)
      check(detail::random_pair_f(grid, cfg.seed + 1, i),
            detail::random_pair_g(grid, cfg.seed + 1, i), "random-" + std::to_string(i));
    return out;
  }});

  jobs.push_back({"qwft-parseval", [=]() {
    std::vector<InequalityReport> out;
    const GridSpec small(grid.d, std::min(grid.n_per_axis, 16), grid.half_extent);
    const SampledSignal f1 = detail::random_pair_f(small, cfg.seed + 2, 0);
    const SampledSignal f2 = detail::random_pair_f(small, cfg.seed + 2, 1);
    const SampledSignal g1 = detail::random_pair_g(small, cfg.seed + 2, 0);
    SampledSignal g2 = detail::random_pair_g(small, cfg.seed + 2, 1);
    auto named = [&](const char* suffix) {
      auto r = qwft_parseval_check(f1, suffix == std::string("diagonal") ? f1 : f2, g1,
                                   suffix == std::string("diagonal") ? g1 : g2, 1e-8);
      r.name += std::string("/") + suffix;
      return r.as_inequality();
    };
    out.push_back(named("random-quadruple"));
    out.push_back(named("diagonal"));

    // orthogonalized second window makes the right side vanish
    Quaternion c;
    for (std::size_t i = 0; i < g1.size(); ++i) c += conj(g1.values[i]) * g2.values[i];
    c *= small.cell_weight() / (l2_norm(g1) * l2_norm(g1));
    for (std::size_t i = 0; i < g2.size(); ++i) g2.values[i] -= g1.values[i] * c;
    out.push_back(named("orthogonal-windows"));
    return out;
  }});

  jobs.push_back({"qwft-point-oracle", [=]() {
    const SampledSignal f = random_bandlimited_signal(grid, cfg.seed + 3);
    const SampledSignal g = sample(GaussianSpec::window(0.5), grid);
    const PhaseSpaceField G = qwft(f, g);
    std::mt19937_64 rng(cfg.seed + 4);
    const int axes = grid.axes();
    double dev = 0.0, scale = G.sup_norm();
    for (int t = 0; t < 100; ++t) {
      std::vector<double> x(axes), w(axes);
      std::vector<int> xi(axes), wi(axes);
      for (int a = 0; a < axes; ++a) {
        xi[a] = static_cast<int>(rng() % grid.n_per_axis);
        wi[a] = static_cast<int>(rng() % grid.n_per_axis);
        x[a] = G.x_coord(xi[a]);
        w[a] = G.w_coord(wi[a]);
      }
      const Quaternion got = G.at(ravel(xi.data(), axes, G.nx), ravel(wi.data(), axes, G.nw));
      dev = std::max(dev, abs(got - qwft_point(f, g, x, w)));
    }
    return std::vector<InequalityReport>{
        equality_report("qwft-point-oracle/random", dev, 0.0, 1e-10, scale)};
  }});

  jobs.push_back({"reconstruction", [=]() {
    std::vector<InequalityReport> out;
    auto roundtrip = [&](const SampledSignal& f, const SampledSignal& g,
                         const std::string& n) {
      const SampledSignal back = reconstruct(qwft(f, g), g);
      double dev = 0.0, scale = 0.0;
      for (std::size_t i = 0; i < f.size(); ++i) {
        dev = std::max(dev, abs(back.values[i] - f.values[i]));
        scale = std::max(scale, abs(f.values[i]));
      }
      out.push_back(equality_report("reconstruction/" + n, dev, 0.0, 1e-8, scale));
    };
    roundtrip(sample(GaussianSpec::signal(1.0), grid),
              sample(GaussianSpec::window(0.5), grid), "gauss");
    roundtrip(random_bandlimited_signal(grid, cfg.seed + 5),
              sample(GaussianSpec::window(0.5), grid), "random-quaternion");
    return out;
  }});

  jobs.push_back({"gaussian-qwft-closed", [=]() {
    std::vector<InequalityReport> out;
    // the pointwise masked comparison needs the transform resolved out to the
    // mask edge; the widest pair requires one more doubling than the rest
    for (auto [a, b, factor] : {std::tuple{0.5, 0.5, 2}, {1.0, 0.5, 2}, {2.0, 1.0, 4}}) {
      const GridSpec fine(grid.d, factor * grid.n_per_axis, grid.half_extent);
      auto rep = gaussian_qwft_closed_check(a, b, fine, 1e-4);
      auto r = rep.as_inequality();
      r.name = "gaussian-qwft-closed/a" + std::to_string(a) + "-b" + std::to_string(b);
      r.parameters["n_per_axis"] = fine.n_per_axis;
      out.push_back(r);
    }
    return out;
  }});

  return jobs;
}

inline std::vector<SuiteJob> suite_lieb(const SuiteConfig& cfg) {
  std::vector<SuiteJob> jobs;
  const GridSpec grid = cfg.grid();

  jobs.push_back({"lieb-constants", [=]() {
    std::vector<InequalityReport> out;
    out.push_back(equality_report("lieb-constant/p2-equals-1", lieb_constant(2.0, grid.d),
                                  1.0, 1e-15));
    out.push_back(equality_report("lieb-constant/p4-d1", lieb_constant(4.0, 1),
                                  0.805927448867656439665, 1e-14));
    for (double p : {2.0, 2.5, 3.0, 4.0, 8.0})
      out.push_back(InequalityReport::make(
          "lieb-constant/below-one-p" + std::to_string(p), 1.0, lieb_constant(p, 1)));
    return out;
  }});

  jobs.push_back({"lieb-equality-p2", [=]() {
    std::vector<InequalityReport> out;
    auto check = [&](const SampledSignal& f, const SampledSignal& g, const std::string& n) {
      const PhaseSpaceField G = qwft(f, g);
      const double scale = l2_norm(f) * l2_norm(g);
      out.push_back(equality_report("lieb-equality-p2/" + n, G.lp_norm(2.0), scale, 1e-9,
                                    scale));
    };
    check(sample(GaussianSpec::signal(0.5), grid), sample(GaussianSpec::window(0.5), grid),
          "gauss");
    check(detail::random_pair_f(grid, cfg.seed + 6, 0),
          detail::random_pair_g(grid, cfg.seed + 6, 0), "random");
    return out;
  }});

  jobs.push_back({"lieb-gauss", [=]() {
    std::vector<InequalityReport> out;
    for (auto [a, b] : {std::pair{0.25, 0.25}, {0.5, 0.5}, {1.0, 0.5}, {2.0, 1.0}}) {
      const SampledSignal f = sample(GaussianSpec::signal(a), grid);
      const SampledSignal g = sample(GaussianSpec::window(b), grid);
      const PhaseSpaceField G = qwft(f, g);
      for (double p : {2.5, 3.0, 4.0}) {
        auto r = lieb_check(G, l2_norm(f), l2_norm(g), p);
        r.name += "/gauss-a" + std::to_string(a) + "-b" + std::to_string(b) + "-p" +
                  std::to_string(p);
        out.push_back(r);
      }
    }
    return out;
  }});

  for (int i = 0; i < 20; ++i) {
    jobs.push_back({"lieb-random-" + std::to_string(i), [=]() {
      std::vector<InequalityReport> out;
      const SampledSignal f = detail::random_pair_f(grid, cfg.seed + 8, i);
      const SampledSignal g = detail::random_pair_g(grid, cfg.seed + 8, i);
      const PhaseSpaceField G = qwft(f, g);
      for (double p : {2.5, 3.0, 4.0}) {
        auto r = lieb_check(G, l2_norm(f), l2_norm(g), p);
        r.name += "/random-" + std::to_string(i) + "-p" + std::to_string(p);
        out.push_back(r);
      }
      return out;
    }});
  }
  return jobs;
}

inline std::vector<SuiteJob> suite_donoho_stark(const SuiteConfig& cfg) {
  std::vector<SuiteJob> jobs;
  const GridSpec grid = cfg.grid();

  jobs.push_back({"donoho-stark-gauss", [=]() {
    std::vector<InequalityReport> out;
    for (auto [a, b] : {std::pair{0.25, 0.25}, {0.5, 0.5}, {1.0, 0.5}, {2.0, 1.0}}) {
      const SampledSignal f = sample(GaussianSpec::signal(a), grid);
      const SampledSignal g = sample(GaussianSpec::window(b), grid);
      const PhaseSpaceField G = qwft(f, g);
      const std::string pair = "a" + std::to_string(a) + "-b" + std::to_string(b);
      for (double tau : {0.1, 0.3, 0.5}) {
        auto r = donoho_stark_check(G, super_level_set(G, tau));
        r.name += "/gauss-" + pair + "-tau" + std::to_string(tau);
        r.parameters["tau"] = tau;
        out.push_back(r);
        auto c = lieb_concentration_check(G, super_level_set(G, tau), 4.0, FieldKind::Qwft);
        c.name += "/gauss-" + pair + "-tau" + std::to_string(tau);
        c.parameters["tau"] = tau;
        out.push_back(c);
      }
    }
    return out;
  }});

  jobs.push_back({"donoho-stark-degenerate", [=]() {
    std::vector<InequalityReport> out;
    const SampledSignal f = sample(GaussianSpec::signal(0.5), grid);
    const SampledSignal g = sample(GaussianSpec::window(0.5), grid);
    const PhaseSpaceField G = qwft(f, g);
    auto full = donoho_stark_check(G, ConcentrationSet::full(G));
    full.name += "/full-grid";
    out.push_back(full);
    // empty set: eps = 1, both sides vanish
    InequalityReport empty =
        InequalityReport::make("donoho-stark/empty", ConcentrationSet::empty(G).measure,
                               1.0 - epsilon_of(G, ConcentrationSet::empty(G)));
    out.push_back(empty);
    // a tiny box sends eps toward 1 and the concentration bound toward zero
    auto tiny = lieb_concentration_check(G, centered_box(G, grid.spacing(), grid.spacing()),
                                         4.0, FieldKind::Qwft);
    tiny.name += "/tiny-box";
    out.push_back(tiny);
    return out;
  }});

  jobs.push_back({"donoho-stark-random", [=]() {
    std::vector<InequalityReport> out;
    for (int i = 0; i < 3; ++i) {
      const SampledSignal f = detail::random_pair_f(grid, cfg.seed + 9, i);
      const SampledSignal g = detail::random_pair_g(grid, cfg.seed + 9, i);
      const PhaseSpaceField G = qwft(f, g);
      auto r = donoho_stark_check(G, super_level_set(G, 0.3));
      r.name += "/random-" + std::to_string(i);
      out.push_back(r);
    }
    return out;
  }});

  jobs.push_back({"support-bounds", [=]() {
    std::vector<InequalityReport> out;
    const SampledSignal f = sample(GaussianSpec::signal(0.5), grid);
    const SampledSignal g = sample(GaussianSpec::window(0.5), grid);
    const PhaseSpaceField G = qwft(f, g);
    out.push_back(support_bound_check(G, 4.0, FieldKind::Qwft));
    out.push_back(support_bound_check(ambiguity(f, g), 4.0, FieldKind::Qaf));
    out.push_back(support_bound_check(wigner_physical(wigner(f, g)), 4.0, FieldKind::Qwvt));
    return out;
  }});

  return jobs;
}

inline std::vector<SuiteJob> suite_entropy(const SuiteConfig& cfg) {
  std::vector<SuiteJob> jobs;
  const GridSpec grid = cfg.grid();

  jobs.push_back({"entropy-gauss-value", [=]() {
    std::vector<InequalityReport> out;
    // the closed-form value 2d is resolution-critical at the family's wide
    // end, so this equality runs on the doubled grid through the streaming
    // path
    const GridSpec fine(grid.d, 2 * grid.n_per_axis, grid.half_extent);
    for (double a : {0.25, 0.5, 1.0, 2.0}) {
      const SampledSignal f = sample(GaussianSpec::signal(a), fine);
      const SampledSignal g = sample(GaussianSpec::window(a), fine);
      const double E = streamed_energy_entropy(f, g);
      auto r = equality_report("entropy-value/gauss-a" + std::to_string(a), E,
                               2.0 * grid.d, 1e-4, 1.0);
      r.parameters["n_per_axis"] = fine.n_per_axis;
      out.push_back(r);
    }
    return out;
  }});

  jobs.push_back({"entropy-closed-cases", [=]() {
    std::vector<InequalityReport> out;
    const SampledSignal f = sample(GaussianSpec::signal(0.5), grid);
    const SampledSignal g = sample(GaussianSpec::window(0.5), grid);
    PhaseSpaceField F = qwft(f, g);
    const double cw = F.cell_weight();
    // unit mass in a single cell
    std::fill(F.values.begin(), F.values.end(), Quaternion{});
    F.values[0] = Quaternion::real(std::sqrt(1.0 / cw));
    out.push_back(equality_report("entropy-value/one-cell", energy_entropy(F),
                                  std::log(cw), 1e-12, std::fabs(std::log(cw))));
    // uniform density of unit mass; tolerance allows summation rounding over
    // the million-cell field
    const double mu_full = static_cast<double>(F.values.size()) * cw;
    std::fill(F.values.begin(), F.values.end(), Quaternion::real(std::sqrt(1.0 / mu_full)));
    out.push_back(equality_report("entropy-value/uniform", energy_entropy(F),
                                  std::log(mu_full), 1e-9, std::log(mu_full)));
    return out;
  }});

  jobs.push_back({"entropy-bounds", [=]() {
    std::vector<InequalityReport> out;
    for (auto [a, b] : {std::pair{0.25, 0.25}, {0.5, 0.5}, {1.0, 0.5}, {2.0, 1.0}}) {
      const SampledSignal f = sample(GaussianSpec::signal(a), grid);
      const SampledSignal g = sample(GaussianSpec::window(b), grid);
      auto r = entropy_bound_check(qwft(f, g), l2_norm(f), l2_norm(g), FieldKind::Qwft);
      r.name += "/gauss-a" + std::to_string(a) + "-b" + std::to_string(b);
      out.push_back(r);
    }
    for (int i = 0; i < 3; ++i) {
      const SampledSignal f = detail::random_pair_f(grid, cfg.seed + 10, i);
      const SampledSignal g = detail::random_pair_g(grid, cfg.seed + 10, i);
      auto r = entropy_bound_check(qwft(f, g), l2_norm(f), l2_norm(g), FieldKind::Qwft);
      r.name += "/random-" + std::to_string(i);
      out.push_back(r);
    }
    // un-normalized input: the bound adjusts through the log term
    SampledSignal f2 = sample(GaussianSpec::signal(0.5), grid);
    for (auto& q : f2.values) q *= 2.0;
    const SampledSignal g2 = sample(GaussianSpec::window(0.5), grid);
    auto r = entropy_bound_check(qwft(f2, g2), l2_norm(f2), l2_norm(g2), FieldKind::Qwft);
    r.name += "/unnormalized";
    out.push_back(r);
    return out;
  }});

  jobs.push_back({"entropy-bounds-variants", [=]() {
    std::vector<InequalityReport> out;
    const SampledSignal f = sample(GaussianSpec::signal(0.5), grid);
    const SampledSignal g = sample(GaussianSpec::window(0.5), grid);
    const double fl = l2_norm(f), gl = l2_norm(g);
    auto qa = entropy_bound_check(ambiguity(f, g), fl, gl, FieldKind::Qaf);
    out.push_back(qa);
    auto qw = entropy_bound_check(wigner_physical(wigner(f, g)), fl, gl, FieldKind::Qwvt);
    out.push_back(qw);
    return out;
  }});

  return jobs;
}

inline std::vector<SuiteJob> suite_logarithmic(const SuiteConfig& cfg) {
  std::vector<SuiteJob> jobs;
  const GridSpec grid = cfg.grid();

  jobs.push_back({"log-constants", [=]() {
    std::vector<InequalityReport> out;
    out.push_back(equality_report("log-constant/d1", log_constant(1),
                                  -1.270362845461478170024, 1e-12, 1.0));
    out.push_back(equality_report("log-constant/digamma-6", digamma(6.0),
                                  1.706117668431800472727, 1e-12, 1.0));
    return out;
  }});

  jobs.push_back({"log-qft", [=]() {
    std::vector<InequalityReport> out;
    for (double a : {0.25, 0.5, 1.0, 2.0}) {
      auto r = log_uncertainty_qft_check(sample(GaussianSpec::signal(a), grid));
      r.name += "/gauss-a" + std::to_string(a);
      out.push_back(r);
    }
    for (double lambda : {0.5, 1.0, 2.0}) {
      auto r = log_uncertainty_qft_check(sample(GaussianSpec::signal(0.5), grid, lambda));
      r.name += "/dilated-l" + std::to_string(lambda);
      r.parameters["lambda"] = lambda;
      out.push_back(r);
    }
    return out;
  }});

  jobs.push_back({"log-qwft", [=]() {
    std::vector<InequalityReport> out;
    for (auto [a, b] : {std::pair{0.5, 0.5}, {1.0, 0.5}}) {
      const SampledSignal f = sample(GaussianSpec::signal(a), grid);
      const SampledSignal g = sample(GaussianSpec::window(b), grid);
      auto r = log_uncertainty_field_check(qwft(f, g), f, l2_norm(g), FieldKind::Qwft);
      r.name += "/gauss-a" + std::to_string(a) + "-b" + std::to_string(b);
      out.push_back(r);
    }
    for (double lambda : {0.5, 1.0, 2.0}) {
      const SampledSignal f = sample(GaussianSpec::signal(0.5), grid, lambda);
      const SampledSignal g = sample(GaussianSpec::window(0.5), grid, lambda);
      auto r = log_uncertainty_field_check(qwft(f, g), f, l2_norm(g), FieldKind::Qwft);
      r.name += "/dilated-l" + std::to_string(lambda);
      r.parameters["lambda"] = lambda;
      out.push_back(r);
    }
    return out;
  }});

  jobs.push_back({"log-variants", [=]() {
    std::vector<InequalityReport> out;
    const SampledSignal f = sample(GaussianSpec::signal(0.5), grid);
    const SampledSignal g = sample(GaussianSpec::window(0.5), grid);
    out.push_back(
        log_uncertainty_field_check(ambiguity(f, g), f, l2_norm(g), FieldKind::Qaf));
    out.push_back(log_uncertainty_field_check(wigner_physical(wigner(f, g)), f, l2_norm(g),
                                              FieldKind::Qwvt));
    return out;
  }});

  return jobs;
}

inline std::vector<SuiteJob> suite_heisenberg(const SuiteConfig& cfg) {
  std::vector<SuiteJob> jobs;
  const GridSpec grid = cfg.grid();

  jobs.push_back({"heisenberg-constants", [=]() {
    std::vector<InequalityReport> out;
    out.push_back(equality_report("heisenberg-constant/p1q1d1", heisenberg_constant(1, 1, 1),
                                  2.0 / std::exp(1.0), 1e-12, 1.0));
    out.push_back(equality_report("heisenberg-constant/p2q1d1", heisenberg_constant(2, 1, 1),
                                  1.339638504699332802884, 1e-12, 1.0));
    out.push_back(equality_report("heisenberg-constant/symmetry",
                                  heisenberg_constant(2, 1, 1), heisenberg_constant(1, 2, 1),
                                  1e-14, 1.0));
    return out;
  }});

  jobs.push_back({"component-heisenberg", [=]() {
    std::vector<InequalityReport> out;
    const SampledSignal f = sample(GaussianSpec::signal(0.5), grid);
    for (int axis : {0, grid.d}) {
      auto r = component_heisenberg_check(f, axis);
      r.name += "/gauss-axis" + std::to_string(axis);
      out.push_back(r);
    }
    auto rad = component_heisenberg_check(f, -1);
    rad.name += "/gauss";
    out.push_back(rad);
    for (int i = 0; i < 3; ++i) {
      auto r = component_heisenberg_check(
          random_bandlimited_signal(grid, cfg.seed + 11 + i), 0);
      r.name += "/random-" + std::to_string(i);
      out.push_back(r);
    }
    // the product over its squared-norm floor is invariant under dilation;
    // the sweep's narrow end is only quadrature-resolved to ~1e-3 here
    double ratio1 = 0.0;
    for (double lambda : {0.5, 1.0, 2.0}) {
      const SampledSignal fl = sample(GaussianSpec::signal(0.5), grid, lambda);
      auto r = component_heisenberg_check(fl, 0);
      const double ratio = r.lhs / r.rhs;
      if (lambda == 0.5) ratio1 = ratio;
      out.push_back(equality_report(
          "component-heisenberg/dilation-invariance-l" + std::to_string(lambda), ratio,
          ratio1, 2e-3, 1.0));
    }
    return out;
  }});

  jobs.push_back({"heisenberg-qwft", [=]() {
    std::vector<InequalityReport> out;
    const SampledSignal f = sample(GaussianSpec::signal(0.5), grid);
    const SampledSignal g = sample(GaussianSpec::window(0.5), grid);
    const PhaseSpaceField G = qwft(f, g);
    const double fl = l2_norm(f), gl = l2_norm(g);

    auto h11 = heisenberg_check(G, fl, gl, 1, 1, FieldKind::Qwft);
    out.push_back(equality_report("heisenberg-moments/x-moment",
                                  h11.parameters.at("x_moment"), 1.0 / 0.5, 1e-3, 1.0));
    out.push_back(equality_report("heisenberg-moments/w-moment",
                                  h11.parameters.at("w_moment"), 4.0 * 0.5, 1e-3, 1.0));
    out.push_back(equality_report(
        "heisenberg-moments/product",
        h11.parameters.at("x_moment") * h11.parameters.at("w_moment"), 4.0, 1e-3, 1.0));

    for (auto [p, q] : {std::pair{1.0, 1.0}, {1.0, 2.0}, {2.0, 1.0}}) {
      auto r = heisenberg_check(G, fl, gl, p, q, FieldKind::Qwft);
      r.name += "/gauss-p" + std::to_string(p) + "-q" + std::to_string(q);
      out.push_back(r);
    }
    const SampledSignal fr = detail::random_pair_f(grid, cfg.seed + 12, 0);
    const SampledSignal gr = detail::random_pair_g(grid, cfg.seed + 12, 0);
    auto rr = heisenberg_check(qwft(fr, gr), l2_norm(fr), l2_norm(gr), 1, 1, FieldKind::Qwft);
    rr.name += "/random";
    out.push_back(rr);
    return out;
  }});

  jobs.push_back({"heisenberg-dilation", [=]() {
    std::vector<InequalityReport> out;
    for (double lambda : {0.5, 1.0, 2.0}) {
      const SampledSignal f = sample(GaussianSpec::signal(0.5), grid, lambda);
      const SampledSignal g = sample(GaussianSpec::window(0.5), grid, lambda);
      auto r = heisenberg_check(qwft(f, g), l2_norm(f), l2_norm(g), 1, 1, FieldKind::Qwft);
      r.name += "/dilated-l" + std::to_string(lambda);
      r.parameters["lambda"] = lambda;
      out.push_back(r);
    }
    return out;
  }});

  jobs.push_back({"heisenberg-variants", [=]() {
    std::vector<InequalityReport> out;
    const SampledSignal f = sample(GaussianSpec::signal(0.5), grid);
    const SampledSignal g = sample(GaussianSpec::window(0.5), grid);
    const double fl = l2_norm(f), gl = l2_norm(g);
    const PhaseSpaceField G = qwft(f, g);
    auto rad = heisenberg_radial_check(G, fl, gl, 1, 1, FieldKind::Qwft);
    rad.name += "/gauss";
    out.push_back(rad);
    const PhaseSpaceField A = ambiguity(f, g);
    auto qa = heisenberg_radial_check(A, fl, gl, 1, 1, FieldKind::Qaf);
    qa.name += "/gauss";
    out.push_back(qa);
    auto qa2 = heisenberg_check(A, fl, gl, 1, 1, FieldKind::Qaf);
    qa2.name += "/gauss";
    out.push_back(qa2);
    const PhaseSpaceField W = wigner_physical(wigner(f, g));
    for (auto [p, q] : {std::pair{1.0, 1.0}, {1.0, 2.0}, {2.0, 1.0}}) {
      auto qw = heisenberg_radial_check(W, fl, gl, p, q, FieldKind::Qwvt);
      qw.name += "/gauss-p" + std::to_string(p) + "-q" + std::to_string(q);
      out.push_back(qw);
    }
    return out;
  }});

  return jobs;
}

inline std::vector<SuiteJob> suite_price(const SuiteConfig& cfg) {
  std::vector<SuiteJob> jobs;
  const GridSpec grid = cfg.grid();

  jobs.push_back({"price-constants", [=]() {
    std::vector<InequalityReport> out;
    out.push_back(equality_report("price-constant/e0.5-p1", local_price_constant(0.5, 1, 1),
                                  2.684975062405226043785, 1e-12));
    out.push_back(equality_report("price-constant/e1-p2", local_price_constant(1, 2, 1),
                                  18.08149010757527214209, 1e-12));
    out.push_back(equality_report("price-constant/e1.5-p3", local_price_constant(1.5, 3, 1),
                                  56.27253523821915542317, 1e-12));
    const double ratio = wigner_price_constant(1, 2, 1) / local_price_constant(1, 2, 1);
    out.push_back(equality_report("price-constant/wigner-ratio", ratio,
                                  std::exp2(2.0 * (2 - 2) * 3 + 4.0 + 8.0 / 3.0), 1e-13));
    out.push_back(InequalityReport::make("price-constant/small-eps-finite",
                                         local_price_constant(1e-3, 2, 1), 0.0));
    return out;
  }});

  jobs.push_back({"local-price-qwft", [=]() {
    std::vector<InequalityReport> out;
    const SampledSignal f = sample(GaussianSpec::signal(0.5), grid);
    const SampledSignal g = sample(GaussianSpec::window(0.5), grid);
    const PhaseSpaceField G = qwft(f, g);
    const double fl = l2_norm(f), gl = l2_norm(g);
    for (auto [eps, p] : {std::pair{0.5, 1.0}, {1.0, 2.0}, {1.5, 3.0}}) {
      double prev_margin = 0.0;
      for (double hw : {1.0, 2.0, 4.0}) {
        auto r = local_price_check(G, centered_box(G, hw, hw), eps, p, fl, gl,
                                   FieldKind::Qwft);
        r.name += "/gauss-e" + std::to_string(eps) + "-p" + std::to_string(p) + "-box" +
                  std::to_string(hw);
        r.parameters["box_half_width"] = hw;
        r.parameters["margin_delta_vs_smaller_box"] = r.margin - prev_margin;  // logged only
        prev_margin = r.margin;
        out.push_back(r);
      }
    }
    // empty set: restricted norm vanishes
    auto r = local_price_check(G, ConcentrationSet::empty(G), 1.0, 2.0, fl, gl,
                               FieldKind::Qwft);
    r.name += "/empty";
    out.push_back(r);
    return out;
  }});

  jobs.push_back({"local-price-variants", [=]() {
    std::vector<InequalityReport> out;
    const SampledSignal f = sample(GaussianSpec::signal(0.5), grid);
    const SampledSignal g = sample(GaussianSpec::window(0.5), grid);
    const double fl = l2_norm(f), gl = l2_norm(g);
    const PhaseSpaceField A = ambiguity(f, g);
    for (double hw : {1.0, 2.0, 4.0}) {
      auto r = local_price_check(A, centered_box(A, hw, hw), 1.0, 2.0, fl, gl,
                                 FieldKind::Qaf);
      r.name += "/gauss-box" + std::to_string(hw);
      out.push_back(r);
    }
    const PhaseSpaceField W = wigner_physical(wigner(f, g));
    for (double hw : {1.0, 2.0, 4.0}) {
      auto r = local_price_check(W, centered_box(W, hw, hw), 1.0, 2.0, fl, gl,
                                 FieldKind::Qwvt);
      r.name += "/gauss-box" + std::to_string(hw);
      out.push_back(r);
    }
    return out;
  }});

  return jobs;
}

inline std::vector<SuiteJob> suite_relations(const SuiteConfig& cfg) {
  std::vector<SuiteJob> jobs;
  const GridSpec grid = cfg.grid();

  jobs.push_back({"qaf-relation", [=]() {
    std::vector<InequalityReport> out;
    auto check = [&](const SampledSignal& f, const SampledSignal& g, const std::string& n) {
      const PhaseSpaceField A = ambiguity(f, g);
      const PhaseSpaceField G = qwft(f, g);
      auto rel = qaf_relation_check(A, G, 1e-12);
      auto r = rel.as_inequality();
      r.name = "qaf-qwft-relation/" + n;
      out.push_back(r);
      // modulus form of the same identity
      double dev = 0.0, scale = 0.0;
      MultiIndex xi(A.axes(), A.nx);
      std::size_t xflat = 0;
      std::vector<int> fine(A.axes());
      do {
        for (int a = 0; a < A.axes(); ++a) fine[a] = 2 * xi.idx[a];
        const std::size_t gx = ravel(fine.data(), A.axes(), G.nx);
        for (std::size_t w = 0; w < A.w_count(); ++w) {
          dev = std::max(dev, std::fabs(abs(A.at(xflat, w)) - abs(G.at(gx, w))));
          scale = std::max(scale, abs(G.at(gx, w)));
        }
        ++xflat;
      } while (xi.advance());
      out.push_back(equality_report("qaf-modulus-relation/" + n, dev, 0.0, 1e-12, scale));
    };
    check(sample(GaussianSpec::signal(0.5), grid), sample(GaussianSpec::window(0.5), grid),
          "gauss");
    check(random_bandlimited_signal(grid, cfg.seed + 13),
          sample(GaussianSpec::window(0.5), grid), "random");
    return out;
  }});

  jobs.push_back({"qaf-at-zero", [=]() {
    const SampledSignal f = random_bandlimited_signal(grid, cfg.seed + 14);
    const SampledSignal g = sample(GaussianSpec::window(0.5), grid);
    const PhaseSpaceField A = ambiguity(f, g);
    SampledSignal prod(grid);
    for (std::size_t i = 0; i < f.size(); ++i) prod.values[i] = f.values[i] * conj(g.values[i]);
    const SpectrumSignal F = qft_fast(prod);
    const int axes = grid.axes();
    std::vector<int> zero(axes, A.nx / 2);  // coarse index of x = 0
    const std::size_t xflat = ravel(zero.data(), axes, A.nx);
    double dev = 0.0, scale = 0.0;
    for (std::size_t w = 0; w < A.w_count(); ++w) {
      dev = std::max(dev, abs(A.at(xflat, w) - F.values[w]));
      scale = std::max(scale, abs(F.values[w]));
    }
    return std::vector<InequalityReport>{
        equality_report("qaf-at-zero/random", dev, 0.0, 1e-12, scale)};
  }});

  jobs.push_back({"qaf-norm", [=]() {
    const SampledSignal f = sample(GaussianSpec::signal(0.5), grid);
    const SampledSignal g = sample(GaussianSpec::window(0.5), grid);
    const PhaseSpaceField A = ambiguity(f, g);
    return std::vector<InequalityReport>{equality_report(
        "qaf-norm/gauss", A.l2_norm(), l2_norm(f) * l2_norm(g), 1e-4)};
  }});

  jobs.push_back({"qwvt-relation", [=]() {
    std::vector<InequalityReport> out;
    auto check = [&](const SampledSignal& f, const SampledSignal& g, const std::string& n) {
      const PhaseSpaceField W = wigner(f, g);
      const PhaseSpaceField Gr = qwft(f, reflect(g));
      auto r = qwvt_relation_check(W, Gr, 1e-10).as_inequality();
      r.name = "qwvt-qwft-relation/" + n;
      out.push_back(r);
    };
    check(sample(GaussianSpec::signal(0.5), grid), sample(GaussianSpec::window(0.5), grid),
          "gauss");
    check(random_bandlimited_signal(grid, cfg.seed + 15),
          sample(GaussianSpec::window(0.5), grid), "random");
    return out;
  }});

  jobs.push_back({"wigner-norms", [=]() {
    std::vector<InequalityReport> out;
    const SampledSignal f = sample(GaussianSpec::signal(0.5), grid);
    const SampledSignal g = sample(GaussianSpec::window(0.5), grid);
    const PhaseSpaceField W = wigner(f, g);
    const double fg = l2_norm(f) * l2_norm(g);
    const double factor = std::exp2(2.0 * grid.d);
    out.push_back(equality_report("wigner-norm/full-field-sq", W.l2_norm() * W.l2_norm(),
                                  factor * fg * fg, 1e-4));
    const PhaseSpaceField P = wigner_physical(W);
    out.push_back(equality_report("wigner-norm/physical-sq", P.l2_norm() * P.l2_norm(),
                                  fg * fg, 1e-4));
    // real even signal: at (x, w) = (0, 0) the value is a plain energy sum
    const PhaseSpaceField Wf = wigner(f, f);
    std::vector<int> c(grid.axes(), Wf.nx / 2);
    const Quaternion v = Wf.at(ravel(c.data(), grid.axes(), Wf.nx),
                               ravel(c.data(), grid.axes(), Wf.nw));
    out.push_back(equality_report("wigner-at-zero/imag-i", v.q1, 0.0, 1e-12, 1.0));
    out.push_back(equality_report("wigner-at-zero/imag-j", v.q2, 0.0, 1e-12, 1.0));
    return out;
  }});

  jobs.push_back({"measure-scaling", [=]() {
    std::vector<InequalityReport> out;
    const SampledSignal f = sample(GaussianSpec::signal(0.5), grid);
    const SampledSignal g = sample(GaussianSpec::window(0.5), grid);
    const PhaseSpaceField G = qwft(f, g);
    // grid-aligned box edges make the doubled cell count exact; sized from
    // the lattice so the doubled box still fits under grid overrides
    const auto U = centered_box(G, (G.nx / 8) * G.dx, (G.nw / 8) * G.dw);
    const auto V = centered_box(G, (G.nx / 4) * G.dx, (G.nw / 4) * G.dw);  // V = 2U
    out.push_back(equality_report("measure-scaling/doubled-box", V.measure,
                                  std::exp2(4.0 * grid.d) * U.measure, 1e-12));
    return out;
  }});

  jobs.push_back({"dilation-covariance", [=]() {
    std::vector<InequalityReport> out;
    // wide base pair: the dilated signal f(2x) must stay frequency-resolved
    const GaussianSpec fs = GaussianSpec::signal(0.25);
    const GaussianSpec gs = GaussianSpec::window(0.25);
    auto exact = dilation_covariance_check(fs, gs, grid, 1.0, 1e-12).as_inequality();
    exact.name = "dilation-covariance/identity";
    out.push_back(exact);
    auto two = dilation_covariance_check(fs, gs, grid, 2.0, 1e-6).as_inequality();
    two.name = "dilation-covariance/gauss-l2";
    out.push_back(two);
    // random signal: band-limited with headroom so its dilate stays resolved
    const SampledSignal fr = random_bandlimited_signal(grid, cfg.seed + 16, 0.25);
    auto mod = dilation_covariance_check(GaussianSpec::signal(0.25),
                                         GaussianSpec::window(0.5), grid, 2.0, 1e-6, true,
                                         &fr)
                   .as_inequality();
    mod.name = "dilation-covariance/random-modulus-l2";
    out.push_back(mod);
    return out;
  }});

  jobs.push_back({"derivative-theorem", [=]() {
    std::vector<InequalityReport> out;
    for (int axis : {0, grid.d}) {
      auto rep = derivative_theorem_check(GaussianSpec::separable(1.0, 0.5), grid, axis);
      auto p = rep.pointwise.as_inequality();
      p.name = "derivative-theorem/pointwise-axis" + std::to_string(axis);
      out.push_back(p);
      auto n = rep.norm_identity.as_inequality();
      n.name = "derivative-theorem/norm-axis" + std::to_string(axis);
      out.push_back(n);
    }
    return out;
  }});

  jobs.push_back({"qft-scaling-law", [=]() {
    // F(f(x/alpha, y/beta))(w, s) = alpha^d beta^d F(f)(alpha w, beta s),
    // checked on the closed form at sampled frequencies
    std::vector<InequalityReport> out;
    const double alpha = 2.0, beta = 0.5, a = 1.0, b = 0.5;
    double dev = 0.0;
    for (double w = -2.0; w <= 2.0; w += 0.5) {
      for (double s = -2.0; s <= 2.0; s += 0.5) {
        const Quaternion lhs =
            gaussian_qft_closed(a / (alpha * alpha), b / (beta * beta), {w}, {s});
        const Quaternion rhs =
            alpha * beta * gaussian_qft_closed(a, b, {alpha * w}, {beta * s});
        dev = std::max(dev, abs(lhs - rhs));
      }
    }
    out.push_back(equality_report("qft-scaling-law/closed-form", dev, 0.0, 1e-12, 1.0));
    return out;
  }});

  return jobs;
}

inline std::vector<std::string> suite_names() {
  return {"plancherel", "lieb",  "donoho-stark", "entropy", "logarithmic",
          "heisenberg", "price", "relations",    "all"};
}

inline std::vector<SuiteJob> build_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "plancherel") return suite_plancherel(cfg);
  if (name == "lieb") return suite_lieb(cfg);
  if (name == "donoho-stark") return suite_donoho_stark(cfg);
  if (name == "entropy") return suite_entropy(cfg);
  if (name == "logarithmic") return suite_logarithmic(cfg);
  if (name == "heisenberg") return suite_heisenberg(cfg);
  if (name == "price") return suite_price(cfg);
  if (name == "relations") return suite_relations(cfg);
  if (name == "all") {
    std::vector<SuiteJob> jobs;
    for (const auto& n : suite_names()) {
      if (n == "all") continue;
      auto part = build_suite(n, cfg);
      for (auto& j : part) jobs.push_back(std::move(j));
    }
    return jobs;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

/// Runs a suite's jobs concurrently (results keep job order) and returns the
/// flattened reports.
inline std::vector<InequalityReport> run_suite(const std::string& name,
                                               const SuiteConfig& cfg) {
  auto jobs = build_suite(name, cfg);
  std::vector<std::vector<InequalityReport>> slots(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) { slots[i] = jobs[i].run(); });
  std::vector<InequalityReport> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

}  // namespace qtfa
