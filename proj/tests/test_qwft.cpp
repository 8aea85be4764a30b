#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "qtfa/qwft.hpp"

using namespace qtfa;

namespace {
const GridSpec kGrid(1, 32, 8.0);
}

TEST_CASE("windowed transform: Plancherel and sup bound") {
  for (auto [a, b] : {std::pair{0.5, 0.5}, {1.0, 0.5}, {2.0, 1.0}}) {
    const SampledSignal f = sample(GaussianSpec::signal(a), kGrid);
    const SampledSignal g = sample(GaussianSpec::window(b), kGrid);
    const PhaseSpaceField G = qwft(f, g);
    const double fg = l2_norm(f) * l2_norm(g);
    CHECK(G.l2_norm() == Catch::Approx(fg).epsilon(1e-10));
    CHECK(G.sup_norm() <= fg + 1e-12);
  }
  const SampledSignal f = random_bandlimited_signal(kGrid, 51);
  const SampledSignal g = random_bandlimited_signal(kGrid, 52);
  const PhaseSpaceField G = qwft(f, g);
  CHECK(G.l2_norm() == Catch::Approx(l2_norm(f) * l2_norm(g)).epsilon(1e-10));
  CHECK(G.sup_norm() <= l2_norm(f) * l2_norm(g) + 1e-12);

  // zero field only for zero input (injectivity through Plancherel)
  CHECK(G.l2_norm() > 0.0);
}

TEST_CASE("zero window is rejected") {
  const SampledSignal f = sample(GaussianSpec::signal(0.5), kGrid);
  SampledSignal z(kGrid);
  CHECK_THROWS_AS(qwft(f, z), std::invalid_argument);
}

TEST_CASE("gaussian modulus closed form") {
  const double a = 0.5, b = 0.5;
  const SampledSignal f = sample(GaussianSpec::signal(a), kGrid);
  const SampledSignal g = sample(GaussianSpec::window(b), kGrid);
  const PhaseSpaceField G = qwft(f, g);
  const double max_closed = std::pow(4 * a * b, 1.0) / std::pow(a + b, 2.0);
  double dev = 0.0;
  for (int x0 = 0; x0 < 32; ++x0)
    for (int x1 = 0; x1 < 32; ++x1)
      for (int w0 = 0; w0 < 32; ++w0)
        for (int w1 = 0; w1 < 32; ++w1) {
          const double xs = G.x_coord(x0) * G.x_coord(x0) + G.x_coord(x1) * G.x_coord(x1);
          const double ws = G.w_coord(w0) * G.w_coord(w0) + G.w_coord(w1) * G.w_coord(w1);
          const double closed = gaussian_qwft_modulus_sq(a, b, 1, xs, ws);
          const double got =
              norm_sq(G.at(std::size_t(x0) * 32 + x1, std::size_t(w0) * 32 + w1));
          dev = std::max(dev, std::fabs(got - closed) / max_closed);
        }
  CHECK(dev <= 1e-6);  // peak-normalized at the default grid

  // closed form at the origin: (4ab)^{d/2}/(a+b)^d, equal to 1 when a = b
  const Quaternion center = qwft_point(f, g, {0.0, 0.0}, {0.0, 0.0});
  CHECK(abs(center) == Catch::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("gaussian phased closed form") {
  // the full quaternion-valued formula, one-sided phases included
  const double a = 0.5, b = 1.0;
  const SampledSignal f = sample(GaussianSpec::signal(a), kGrid);
  const SampledSignal g = sample(GaussianSpec::window(b), kGrid);
  const PhaseSpaceField G = qwft(f, g);
  const double peak = std::pow(4 * a * b, 0.5) / (a + b);
  double dev = 0.0;
  for (int x0 = 8; x0 < 24; x0 += 2)
    for (int x1 = 8; x1 < 24; x1 += 2)
      for (int w0 = 8; w0 < 24; w0 += 2)
        for (int w1 = 8; w1 < 24; w1 += 2) {
          const Quaternion want = gaussian_qwft_closed(
              a, b, 1, {G.x_coord(x0), G.x_coord(x1)}, {G.w_coord(w0), G.w_coord(w1)});
          const Quaternion got =
              G.at(std::size_t(x0) * 32 + x1, std::size_t(w0) * 32 + w1);
          dev = std::max(dev, abs(got - want));
        }
  CHECK(dev / peak <= 1e-6);

  // the squared modulus of the phased form reproduces the modulus formula
  const Quaternion v = gaussian_qwft_closed(a, b, 1, {1.0, -0.5}, {2.0, 0.5});
  CHECK(norm_sq(v) ==
        Catch::Approx(gaussian_qwft_modulus_sq(a, b, 1, 1.25, 4.25)).epsilon(1e-12));
}

TEST_CASE("point oracle agrees with the fast path") {
  const SampledSignal f = random_bandlimited_signal(kGrid, 61);
  const SampledSignal g = sample(GaussianSpec::window(1.0), kGrid);
  const PhaseSpaceField G = qwft(f, g);
  std::mt19937_64 rng(62);
  double dev = 0.0;
  const double scale = G.sup_norm();
  for (int t = 0; t < 100; ++t) {
    const int xi0 = rng() % 32, xi1 = rng() % 32, wi0 = rng() % 32, wi1 = rng() % 32;
    const Quaternion got = G.at(std::size_t(xi0) * 32 + xi1, std::size_t(wi0) * 32 + wi1);
    const Quaternion want = qwft_point(f, g, {G.x_coord(xi0), G.x_coord(xi1)},
                                       {G.w_coord(wi0), G.w_coord(wi1)});
    dev = std::max(dev, abs(got - want));
  }
  CHECK(dev / scale <= 1e-10);
}

TEST_CASE("disjoint supports give a vanishing value") {
  // f lives on the left half of the box, g in a narrow strip near the origin
  const SampledSignal f = sample([](const std::vector<double>& x) {
    return x[0] < -2.0 ? 1.0 : 0.0;
  }, kGrid);
  const SampledSignal g = sample([](const std::vector<double>& x) {
    return std::fabs(x[0]) <= 1.0 ? 1.0 : 0.0;
  }, kGrid);
  // shift the window to the right half: supports cannot overlap
  const Quaternion v = qwft_point(f, g, {4.0, 0.0}, {1.0, -2.0});
  CHECK(abs(v) == 0.0);
}

TEST_CASE("Parseval for windowed transforms") {
  const GridSpec small(1, 16, 8.0);
  const SampledSignal f1 = random_bandlimited_signal(small, 71);
  const SampledSignal f2 = random_bandlimited_signal(small, 72);
  const SampledSignal g1 = random_bandlimited_signal(small, 73);
  SampledSignal g2 = random_bandlimited_signal(small, 74);

  CHECK(qwft_parseval_check(f1, f2, g1, g2, 1e-8).pass);

  // diagonal case reduces to Plancherel
  const auto diag = qwft_parseval_check(f1, f1, g1, g1, 1e-8);
  CHECK(diag.pass);
  const PhaseSpaceField G = qwft(f1, g1);
  CHECK(G.l2_norm() * G.l2_norm() ==
        Catch::Approx(l2_norm(f1) * l2_norm(f1) * l2_norm(g1) * l2_norm(g1))
            .epsilon(1e-10));

  // orthogonalized windows send the right side to zero
  Quaternion c;
  for (std::size_t i = 0; i < g1.size(); ++i) c += conj(g1.values[i]) * g2.values[i];
  c *= small.cell_weight() / (l2_norm(g1) * l2_norm(g1));
  for (std::size_t i = 0; i < g2.size(); ++i) g2.values[i] -= g1.values[i] * c;
  Quaternion inner;
  for (std::size_t i = 0; i < g1.size(); ++i) inner += conj(g1.values[i]) * g2.values[i];
  CHECK(abs(inner) * small.cell_weight() <= 1e-12);
  CHECK(qwft_parseval_check(f1, f2, g1, g2, 1e-8).pass);
}

TEST_CASE("reconstruction") {
  const SampledSignal g = sample(GaussianSpec::window(0.5), kGrid);

  SECTION("round trip on a gaussian") {
    const SampledSignal f = sample(GaussianSpec::signal(1.0), kGrid);
    const SampledSignal back = reconstruct(qwft(f, g), g);
    double dev = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      dev = std::max(dev, abs(back.values[i] - f.values[i]));
      scale = std::max(scale, abs(f.values[i]));
    }
    CHECK(dev / scale <= 1e-8);
  }

  SECTION("round trip on quaternion-valued noise") {
    const SampledSignal f = random_bandlimited_signal(kGrid, 81);
    const SampledSignal back = reconstruct(qwft(f, g), g);
    double dev = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
      dev = std::max(dev, abs(back.values[i] - f.values[i]));
    CHECK(dev <= 1e-8);
  }

  SECTION("zero field reconstructs to zero") {
    PhaseSpaceField z(1, 32, kGrid.spacing(), 32, dual_grid(kGrid).spacing);
    const SampledSignal back = reconstruct(z, g);
    for (const auto& q : back.values) CHECK(abs(q) == 0.0);
  }

  SECTION("non-real window is rejected") {
    SampledSignal gq = g;
    gq.values[5].q2 = 0.25;
    CHECK_THROWS_AS(reconstruct(qwft(sample(GaussianSpec::signal(1.0), kGrid), g), gq),
                    std::invalid_argument);
  }
}

TEST_CASE("dilation covariance") {
  // wide base pair so the lambda = 2 dilate stays frequency-resolved
  const GaussianSpec fs = GaussianSpec::signal(0.25);
  const GaussianSpec gs = GaussianSpec::window(0.25);

  SECTION("identity at lambda = 1") {
    const auto rep = dilation_covariance_check(fs, gs, kGrid, 1.0, 1e-12);
    CHECK(rep.pass);
    CHECK(rep.max_rel_err <= 1e-14);
  }

  SECTION("lambda = 2 on the gaussian pair") {
    const auto rep = dilation_covariance_check(fs, gs, kGrid, 2.0, 1e-6);
    CHECK(rep.pass);
    CHECK(rep.compared > 0);
  }

  SECTION("modulus comparison for band-limited noise") {
    const SampledSignal fr = random_bandlimited_signal(kGrid, 91, 0.25);
    const auto rep = dilation_covariance_check(fs, GaussianSpec::window(0.5), kGrid, 2.0,
                                               1e-6, true, &fr);
    CHECK(rep.pass);
    CHECK(rep.max_rel_err <= 1e-8);  // exact for trigonometric polynomials
  }
}

TEST_CASE("streaming visitor matches the materialized field") {
  const SampledSignal f = random_bandlimited_signal(kGrid, 95);
  const SampledSignal g = sample(GaussianSpec::window(0.5), kGrid);
  const PhaseSpaceField G = qwft(f, g);
  std::vector<double> rows(G.x_count(), -1.0);
  qwft_visit(f, g, [&](std::size_t xflat, const std::vector<Quaternion>& slice) {
    double acc = 0.0;
    for (const auto& q : slice) acc += norm_sq(q);
    rows[xflat] = acc;
  });
  for (std::size_t x = 0; x < G.x_count(); ++x) {
    double want = 0.0;
    for (std::size_t w = 0; w < G.w_count(); ++w) want += norm_sq(G.at(x, w));
    CHECK(rows[x] == Catch::Approx(want).margin(1e-12));
  }
}
