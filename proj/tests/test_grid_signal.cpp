#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>

#include "qtfa/qft.hpp"
#include "qtfa/signal.hpp"

using namespace qtfa;

namespace {

const GridSpec kGrid(1, 32, 8.0);

SampledSignal random_signal(const GridSpec& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SampledSignal f(g);
  for (auto& q : f.values) q = Quaternion{u(rng), u(rng), u(rng), u(rng)};
  return f;
}

}  // namespace

TEST_CASE("grid geometry") {
  CHECK(kGrid.spacing() == 0.5);
  CHECK(kGrid.coord(0) == -8.0);
  CHECK(kGrid.coord(16) == 0.0);
  CHECK(kGrid.size() == 1024);
  CHECK(kGrid.cell_weight() == Catch::Approx(0.25 / kTwoPi));

  const FrequencyGrid dual = dual_grid(kGrid);
  CHECK(dual.spacing * kGrid.spacing() * kGrid.n_per_axis == Catch::Approx(kTwoPi));
  CHECK(dual.coord(dual.n_per_axis / 2) == 0.0);

  CHECK_THROWS_AS(GridSpec(0, 32, 8.0), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec(1, 32, -1.0), std::invalid_argument);
}

TEST_CASE("gaussian sampling") {
  // normalized signal peaks at (4a)^{d/2} on the origin node
  const SampledSignal f = sample(GaussianSpec::signal(0.5), kGrid);
  std::size_t center = 16 * 32 + 16;
  CHECK(f.values[center].q0 == Catch::Approx(std::sqrt(2.0)));
  CHECK(lp_norm(f, std::numeric_limits<double>::infinity()) ==
        Catch::Approx(std::sqrt(2.0)));

  const SampledSignal z = sample([](const std::vector<double>&) { return 0.0; }, kGrid);
  CHECK(lp_norm(z, 2.0) == 0.0);

  // a = b makes the separable form radially symmetric: swap axes
  const SampledSignal s = sample(GaussianSpec::separable(1.0, 1.0), kGrid);
  for (int i = 0; i < 32; ++i)
    for (int j = 0; j < 32; ++j)
      CHECK(s.values[i * 32 + j].q0 == Catch::Approx(s.values[j * 32 + i].q0));

  CHECK_THROWS_AS(sample([](const std::vector<double>&) {
                    return std::numeric_limits<double>::quiet_NaN();
                  }, kGrid),
                  std::domain_error);
  CHECK_THROWS_AS(GaussianSpec(-1.0, 1.0, GaussianSpec::Kind::Signal),
                  std::invalid_argument);
}

TEST_CASE("lp norms") {
  const SampledSignal f = sample(GaussianSpec::signal(0.7), kGrid);
  CHECK(lp_norm(f, 2.0) == Catch::Approx(1.0).margin(1e-10));

  // indicator of the whole box: ((2L)^2/(2pi))^{1/2} = 16/sqrt(2pi), exact
  const SampledSignal ind = sample([](const std::vector<double>&) { return 1.0; }, kGrid);
  CHECK(lp_norm(ind, 2.0) == Catch::Approx(16.0 / std::sqrt(kTwoPi)).epsilon(1e-14));

  CHECK_THROWS_AS(lp_norm(f, 0.5), std::invalid_argument);

  // consistency with the inner product
  const SampledSignal r = random_signal(kGrid, 5);
  const double n2 = lp_norm(r, 2.0);
  CHECK(std::fabs(n2 * n2 - sc(qinner(r, r))) <= 1e-12 * n2 * n2);
}

TEST_CASE("inner products") {
  const SampledSignal f = random_signal(kGrid, 10);
  const SampledSignal g = random_signal(kGrid, 11);

  const Quaternion self = qinner(f, f);
  CHECK(std::fabs(self.q1) + std::fabs(self.q2) + std::fabs(self.q3) <= 1e-12 * self.q0);

  // Cauchy-Schwarz
  CHECK(abs(qinner(f, g)) <= lp_norm(f, 2.0) * lp_norm(g, 2.0) * (1.0 + 1e-12));

  // symmetric scalar part, equal to the averaged form
  CHECK(sc_inner(f, g) == Catch::Approx(sc_inner(g, f)));
  CHECK(sc_inner(f, g) ==
        Catch::Approx(0.5 * (sc(qinner(f, g)) + sc(qinner(g, f)))));

  // Schwartz-type inequality on the symmetrized pairing
  const double lhs = 2.0 * sc_inner(g, f);
  CHECK(lhs * lhs <= 4.0 * sc(qinner(f, f)) * sc(qinner(g, g)) * (1.0 + 1e-12));

  const GridSpec other(1, 16, 8.0);
  CHECK_THROWS_AS(qinner(f, random_signal(other, 1)), std::invalid_argument);
}

TEST_CASE("translation") {
  const SampledSignal f = random_signal(kGrid, 21);
  const SampledSignal same = translate(f, {0.0, 0.0});
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(same.values[i] == f.values[i]);

  // cyclic shift permutes the samples; the norm survives up to summation order
  const SampledSignal shifted = translate(f, {1.5, -3.0});
  CHECK(lp_norm(shifted, 2.0) == Catch::Approx(lp_norm(f, 2.0)).epsilon(1e-14));

  // a shifted node picks up the original value
  const SampledSignal g = sample(GaussianSpec::signal(0.5), kGrid);
  const SampledSignal tg = translate(g, {2.0, 0.0});
  CHECK(tg.values[(16 + 4) * 32 + 16].q0 == Catch::Approx(g.values[16 * 32 + 16].q0));

  CHECK_THROWS_AS(translate(f, {0.3, 0.0}), std::invalid_argument);
}

TEST_CASE("reflection and dilation") {
  const SampledSignal g = sample(GaussianSpec::signal(0.5), kGrid);
  const SampledSignal rg = reflect(g);
  for (std::size_t i = 0; i < g.size(); ++i)
    CHECK(rg.values[i].q0 == Catch::Approx(g.values[i].q0).margin(1e-15));

  const SampledSignal f = random_signal(kGrid, 33);
  const SampledSignal rrf = reflect(reflect(f));
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(rrf.values[i] == f.values[i]);

  // closed-form dilation: f_lambda(x) = f(lambda x) keeps the amplitude
  const SampledSignal d2 = sample(GaussianSpec::signal(0.5), kGrid, 2.0);
  for (int i = 0; i < 32; ++i)
    for (int j = 0; j < 32; ++j) {
      const double x0 = kGrid.coord(i), x1 = kGrid.coord(j);
      const double want = std::sqrt(2.0) * std::exp(-0.5 * 4.0 * (x0 * x0 + x1 * x1));
      CHECK(d2.values[i * 32 + j].q0 == Catch::Approx(want).margin(1e-14));
    }

  // sample-level dilation by an integer factor is an exact index map
  const SampledSignal fd = dilate_samples(f, 2.0);
  CHECK(fd.values[16 * 32 + 16] == f.values[16 * 32 + 16]);
  CHECK(fd.values[(16 + 3) * 32 + 16] == f.values[(16 + 6) * 32 + 16]);
}

TEST_CASE("convolution") {
  // one-hot of height (2pi)^d / Delta^{2d} acts as the identity
  SampledSignal delta(kGrid);
  delta.values[16 * 32 + 16] = Quaternion::real(kTwoPi / (0.5 * 0.5));
  const SampledSignal f = random_signal(kGrid, 44);
  const SampledSignal conv = convolve(f, delta);
  double dev = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    dev = std::max(dev, abs(conv.values[i] - f.values[i]));
  CHECK(dev <= 1e-12);

  const SampledSignal z = sample([](const std::vector<double>&) { return 0.0; }, kGrid);
  const SampledSignal zc = convolve(z, f);
  CHECK(lp_norm(zc, 2.0) == 0.0);

  // gaussian * gaussian: peak 1/(2(a+b)) and shape parameter ab/(a+b)
  const auto ga = sample([](const std::vector<double>& x) {
    return std::exp(-1.0 * (x[0] * x[0] + x[1] * x[1]));
  }, kGrid);
  const SampledSignal gc = convolve(ga, ga);
  const std::size_t c = 16 * 32 + 16;
  CHECK(gc.values[c].q0 == Catch::Approx(0.25).epsilon(1e-6));
  const double x = kGrid.coord(20);  // off-center node
  CHECK(gc.values[20 * 32 + 16].q0 ==
        Catch::Approx(0.25 * std::exp(-0.5 * x * x)).epsilon(1e-6));

  // brute-force quadrature of the defining integral at one point
  Quaternion expect;
  for (int i = 0; i < 32; ++i)
    for (int j = 0; j < 32; ++j) {
      const int di = 20 - i + 16, dj = 16 - j + 16;
      if (di < 0 || di >= 32 || dj < 0 || dj >= 32) continue;
      expect += ga.values[i * 32 + j] * ga.values[di * 32 + dj];
    }
  expect *= kGrid.cell_weight();
  CHECK(abs(gc.values[20 * 32 + 16] - expect) <= 1e-14);
}
