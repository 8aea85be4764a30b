#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qtfa/qft.hpp"

using namespace qtfa;

namespace {
const GridSpec kGrid(1, 32, 8.0);

double max_rel_dev(const SpectrumSignal& a, const SpectrumSignal& b) {
  double dev = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dev = std::max(dev, abs(a.values[i] - b.values[i]));
    scale = std::max(scale, abs(b.values[i]));
  }
  return dev / scale;
}
}  // namespace

TEST_CASE("fast transform agrees with the direct quadrature") {
  for (int i = 0; i < 10; ++i) {
    const SampledSignal f = random_bandlimited_signal(kGrid, 100 + i);
    CHECK(max_rel_dev(qft_fast(f), qft_direct_full(f)) <= 1e-10);
  }
}

TEST_CASE("zero in, zero out") {
  const SampledSignal z = sample([](const std::vector<double>&) { return 0.0; }, kGrid);
  const SpectrumSignal F = qft_fast(z);
  for (const auto& q : F.values) CHECK(abs(q) == 0.0);
  const SampledSignal back = iqft(F, kGrid);
  for (const auto& q : back.values) CHECK(abs(q) == 0.0);
}

TEST_CASE("Plancherel and Parseval") {
  for (double a : {0.25, 0.5, 1.0, 2.0}) {
    const SampledSignal f = sample(GaussianSpec::signal(a), kGrid);
    CHECK(spectrum_l2_norm(qft_fast(f)) ==
          Catch::Approx(l2_norm(f)).epsilon(1e-12));
  }
  const SampledSignal f = random_bandlimited_signal(kGrid, 7);
  const SampledSignal g = random_bandlimited_signal(kGrid, 8);
  CHECK(spectrum_l2_norm(qft_fast(f)) == Catch::Approx(l2_norm(f)).epsilon(1e-12));
  CHECK(spectrum_sc_inner(qft_fast(f), qft_fast(g)) ==
        Catch::Approx(sc_inner(f, g)).margin(1e-12));
}

TEST_CASE("inversion round trip") {
  const SampledSignal f = sample(GaussianSpec::signal(0.5), kGrid);
  const SampledSignal back = iqft(qft_fast(f), kGrid);
  double dev = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    dev = std::max(dev, abs(back.values[i] - f.values[i]));
  CHECK(dev <= 1e-10 * std::sqrt(2.0));

  const SampledSignal r = random_bandlimited_signal(kGrid, 31);
  const SampledSignal rback = iqft(qft_fast(r), kGrid);
  dev = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i)
    dev = std::max(dev, abs(rback.values[i] - r.values[i]));
  CHECK(dev <= 1e-10);

  CHECK_THROWS_AS(iqft(qft_fast(r), GridSpec(1, 16, 8.0)), std::invalid_argument);
}

TEST_CASE("split identity under the transform") {
  const SampledSignal f = random_bandlimited_signal(kGrid, 32);
  SampledSignal fp(kGrid), fm(kGrid);
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto [p, m] = split(f.values[i]);
    fp.values[i] = p;
    fm.values[i] = m;
  }
  const SpectrumSignal F = qft_fast(f), Fp = qft_fast(fp), Fm = qft_fast(fm);
  for (std::size_t k = 0; k < F.size(); ++k) {
    CHECK(std::fabs(norm_sq(F.values[k]) - norm_sq(Fp.values[k]) - norm_sq(Fm.values[k])) <=
          1e-12);
    // linearity of the split halves
    CHECK(abs(F.values[k] - Fp.values[k] - Fm.values[k]) <= 1e-12);
  }
}

TEST_CASE("linearity over real scalars") {
  const SampledSignal f = random_bandlimited_signal(kGrid, 41);
  const SampledSignal g = random_bandlimited_signal(kGrid, 42);
  const double c = 1.7;
  SampledSignal sum(kGrid);
  for (std::size_t i = 0; i < f.size(); ++i)
    sum.values[i] = f.values[i] + g.values[i] * c;
  const SpectrumSignal Fs = qft_fast(sum), Ff = qft_fast(f), Fg = qft_fast(g);
  for (std::size_t k = 0; k < Fs.size(); ++k)
    CHECK(abs(Fs.values[k] - Ff.values[k] - Fg.values[k] * c) <= 1e-12);
}

TEST_CASE("gaussian closed form") {
  SECTION("pointwise values") {
    CHECK(gaussian_qft_closed(1.0, 1.0, {0.0}, {0.0}).q0 == Catch::Approx(1.0));
    CHECK(gaussian_qft_closed(1.0, 1.0, {1.0}, {1.0}).q0 ==
          Catch::Approx(std::exp(-1.0)));
    CHECK_THROWS_AS(gaussian_qft_closed(-1.0, 1.0, {0.0}, {0.0}), std::invalid_argument);
  }

  SECTION("scaling rule") {
    // F(f(x/alpha, y/beta))(w, s) = alpha^d beta^d F(f)(alpha w, beta s)
    const double alpha = 1.5, beta = 0.75, a = 1.0, b = 0.5;
    for (double w = -2.0; w <= 2.0; w += 0.4)
      for (double s = -2.0; s <= 2.0; s += 0.4) {
        const Quaternion lhs =
            gaussian_qft_closed(a / (alpha * alpha), b / (beta * beta), {w}, {s});
        const Quaternion rhs =
            alpha * beta * gaussian_qft_closed(a, b, {alpha * w}, {beta * s});
        CHECK(abs(lhs - rhs) <= 1e-12);
      }
  }

  SECTION("discrete transform matches, N = 32 then N = 64") {
    auto run = [](const GridSpec& g, double a, double b) {
      const SpectrumSignal F = qft_fast(sample(GaussianSpec::separable(a, b), g));
      double dev = 0.0;
      MultiIndex mi(2, F.grid.n_per_axis);
      std::size_t flat = 0;
      do {
        const Quaternion want = gaussian_qft_closed(
            a, b, {F.grid.coord(mi.idx[0])}, {F.grid.coord(mi.idx[1])});
        dev = std::max(dev, abs(F.values[flat++] - want));
      } while (mi.advance());
      return dev * std::pow(a * b, 0.5 * g.d);  // relative to the peak 1/sqrt(ab)
    };
    CHECK(run(kGrid, 1.0, 1.0) <= 1e-4);
    CHECK(run(kGrid, 1.0, 0.5) <= 1e-4);
    CHECK(run(GridSpec(1, 64, 8.0), 1.0, 1.0) <= 1e-6);
    CHECK(run(GridSpec(1, 64, 8.0), 2.0, 1.0) <= 1e-6);
  }
}

TEST_CASE("component symmetry for real signals at mirrored frequencies") {
  const SampledSignal f = sample(GaussianSpec::separable(1.0, 0.5), kGrid);
  const std::vector<std::vector<double>> pts = {{1.1, 0.7}, {-1.1, -0.7},
                                                {2.3, -0.4}, {-2.3, 0.4}};
  const auto vals = qft_direct(f, pts);
  for (std::size_t i = 0; i < pts.size(); i += 2) {
    CHECK(vals[i].q0 == Catch::Approx(vals[i + 1].q0).margin(1e-12));
    CHECK(vals[i].q3 == Catch::Approx(vals[i + 1].q3).margin(1e-12));
    CHECK(vals[i].q1 == Catch::Approx(-vals[i + 1].q1).margin(1e-12));
    CHECK(vals[i].q2 == Catch::Approx(-vals[i + 1].q2).margin(1e-12));
  }
}

TEST_CASE("derivative theorem on the gaussian") {
  for (int axis : {0, 1}) {
    const auto rep = derivative_theorem_check(GaussianSpec::separable(1.0, 0.5), kGrid, axis);
    CHECK(rep.pointwise.max_rel_err <= 1e-6);
    CHECK(rep.norm_identity.max_rel_err <= 1e-6);
  }
  CHECK_THROWS_AS(derivative_theorem_check(GaussianSpec::signal(1.0), kGrid, 5),
                  std::invalid_argument);

  // zero signal: both sides vanish identically
  const SampledSignal z = sample([](const std::vector<double>&) { return 0.0; }, kGrid);
  const SpectrumSignal Z = qft_fast(z);
  double acc = 0.0;
  for (std::size_t k = 0; k < Z.size(); ++k) acc += norm_sq(Z.values[k]);
  CHECK(acc == 0.0);
}

TEST_CASE("band-limited noise is deterministic and normalized") {
  const SampledSignal a = random_bandlimited_signal(kGrid, 99);
  const SampledSignal b = random_bandlimited_signal(kGrid, 99);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.values[i] == b.values[i]);
  CHECK(l2_norm(a) == Catch::Approx(1.0).epsilon(1e-12));

  // spectrum is confined to the requested band
  const SpectrumSignal F = qft_fast(a);
  MultiIndex mi(2, F.grid.n_per_axis);
  std::size_t flat = 0;
  const double cutoff = 0.5 * F.grid.half_extent();
  do {
    const double w0 = F.grid.coord(mi.idx[0]), w1 = F.grid.coord(mi.idx[1]);
    if (w0 * w0 + w1 * w1 > cutoff * cutoff * (1.0 + 1e-12))
      CHECK(abs(F.values[flat]) <= 1e-12);
    ++flat;
  } while (mi.advance());
}

TEST_CASE("power-of-two enforcement") {
  CHECK_THROWS_AS(qft_fast(SampledSignal(GridSpec(1, 12, 6.0))), std::invalid_argument);
}

TEST_CASE("exact identities in three half-dimensions") {
  // six axes, tiny lattice: the algebraic identities hold at any resolution
  const GridSpec g3(3, 4, 2.0);
  const SampledSignal f = random_bandlimited_signal(g3, 9, 0.75);
  const SpectrumSignal F = qft_fast(f);
  CHECK(spectrum_l2_norm(F) == Catch::Approx(l2_norm(f)).epsilon(1e-12));
  const SampledSignal back = iqft(F, g3);
  double dev = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    dev = std::max(dev, abs(back.values[i] - f.values[i]));
  CHECK(dev <= 1e-13);
}

TEST_CASE("transforms in two half-dimensions") {
  const GridSpec g2(2, 8, 4.0);
  const SampledSignal f = random_bandlimited_signal(g2, 5);
  const SpectrumSignal F = qft_fast(f);
  CHECK(spectrum_l2_norm(F) == Catch::Approx(l2_norm(f)).epsilon(1e-12));
  const SampledSignal back = iqft(F, g2);
  double dev = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    dev = std::max(dev, abs(back.values[i] - f.values[i]));
  CHECK(dev <= 1e-12);

  // fast path vs direct oracle at a handful of dual nodes
  MultiIndex mi(4, 8);
  std::vector<std::vector<double>> pts;
  std::vector<std::size_t> flats;
  std::size_t flat = 0;
  do {
    if (flat % 977 == 0) {
      std::vector<double> p(4);
      for (int a = 0; a < 4; ++a) p[a] = F.grid.coord(mi.idx[a]);
      pts.push_back(p);
      flats.push_back(flat);
    }
    ++flat;
  } while (mi.advance());
  const auto direct = qft_direct(f, pts);
  for (std::size_t i = 0; i < pts.size(); ++i)
    CHECK(abs(F.values[flats[i]] - direct[i]) <= 1e-12);
}
