#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "qtfa/io.hpp"
#include "qtfa/tf_dist.hpp"

using namespace qtfa;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("qtfa-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("signal spec parsing") {
  const auto j = nlohmann::json{{"d", 1},          {"n_per_axis", 32}, {"half_extent", 8.0},
                                {"kind", "signal"}, {"a", 0.5},         {"b", 1.0}};
  const SignalSpec spec = parse_signal_spec(j);
  CHECK(spec.grid.n_per_axis == 32);
  CHECK(spec.shape.kind == GaussianSpec::Kind::Signal);
  CHECK(spec.shape.a == 0.5);

  // round trip through the writer
  CHECK(parse_signal_spec(signal_spec_to_json(spec)).grid.half_extent == 8.0);

  auto missing = j;
  missing.erase("kind");
  CHECK_THROWS_AS(parse_signal_spec(missing), std::invalid_argument);
  auto bad = j;
  bad["kind"] = "wavelet";
  CHECK_THROWS_AS(parse_signal_spec(bad), std::invalid_argument);
}

TEST_CASE("binary signal dump round trip") {
  TempDir tmp;
  const GridSpec grid(1, 16, 8.0);
  const SampledSignal f = random_bandlimited_signal(grid, 42);
  const std::string path = tmp.file("sig.bin");
  write_signal_dump(f, path);

  // header carries {d, N, L} as float64
  std::ifstream in(path, std::ios::binary);
  double header[8];
  in.read(reinterpret_cast<char*>(header), sizeof header);
  CHECK(header[0] == 1.0);
  CHECK(header[1] == 16.0);
  CHECK(header[2] == 8.0);

  const SampledSignal back = read_signal_dump(path);
  REQUIRE(back.size() == f.size());
  CHECK(back.grid == f.grid);
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(back.values[i] == f.values[i]);

  // file size: 8 header doubles + 4 per sample
  CHECK(std::filesystem::file_size(path) == 8 * (8 + 4 * f.size()));
}

TEST_CASE("signal dump round trip across random shapes") {
  TempDir tmp;
  std::mt19937_64 rng(77);
  const std::string path = tmp.file("rt.bin");
  for (int t = 0; t < 8; ++t) {
    const int d = 1 + static_cast<int>(rng() % 2);
    const int n = 4 << (rng() % (d == 1 ? 3 : 1));
    const double L = 2.0 + static_cast<double>(rng() % 12);
    const SampledSignal f = random_bandlimited_signal(GridSpec(d, n, L), rng(), 0.75);
    write_signal_dump(f, path);
    const SampledSignal back = read_signal_dump(path);
    REQUIRE(back.grid == f.grid);
    for (std::size_t i = 0; i < f.size(); ++i) REQUIRE(back.values[i] == f.values[i]);
  }
}

TEST_CASE("corrupt dump headers are rejected") {
  TempDir tmp;
  const std::string path = tmp.file("bad.bin");
  std::ofstream out(path, std::ios::binary);
  const double header[8] = {1.0, -32.0, 8.0, 0, 0, 0, 0, 0};  // negative N
  out.write(reinterpret_cast<const char*>(header), sizeof header);
  out.close();
  CHECK_THROWS_AS(read_signal_dump(path), std::runtime_error);

  // truncated payload
  std::ofstream out2(path, std::ios::binary);
  const double header2[8] = {1.0, 8.0, 4.0, 0, 0, 0, 0, 0};
  out2.write(reinterpret_cast<const char*>(header2), sizeof header2);
  out2.close();
  CHECK_THROWS_AS(read_signal_dump(path), std::runtime_error);
}

TEST_CASE("field dump round trip") {
  TempDir tmp;
  const GridSpec grid(1, 8, 4.0);
  const SampledSignal f = random_bandlimited_signal(grid, 43);
  const SampledSignal g = sample(GaussianSpec::window(0.5), grid);
  const PhaseSpaceField A = ambiguity(f, g);
  const std::string path = tmp.file("field.bin");
  write_field_dump(A, path);
  const PhaseSpaceField back = read_field_dump(path);
  CHECK(back.nx == A.nx);
  CHECK(back.nw == A.nw);
  CHECK(back.dx == A.dx);
  CHECK(back.dw == A.dw);
  REQUIRE(back.values.size() == A.values.size());
  for (std::size_t i = 0; i < A.values.size(); ++i) CHECK(back.values[i] == A.values[i]);
}

TEST_CASE("report serialization") {
  InequalityReport r = InequalityReport::make("demo", 2.0, 1.0);
  r.constant_values["C_pq"] = 0.8;
  r.parameters["p"] = 4.0;
  const auto j = report_to_json(r);
  CHECK(j.at("name") == "demo");
  CHECK(j.at("lhs") == 2.0);
  CHECK(j.at("rhs") == 1.0);
  CHECK(j.at("margin") == 1.0);
  CHECK(j.at("pass") == true);
  CHECK(j.at("constant_values").at("C_pq") == 0.8);
  CHECK(j.at("parameters").at("p") == 4.0);

  const std::string csv = reports_to_csv({r});
  CHECK(csv.find("name,pass,lhs,rhs,margin,c:C_pq,p:p") == 0);
  CHECK(csv.find("demo,true,2,1,1,0.8") != std::string::npos);
}

TEST_CASE("report pass flag follows the oriented margin") {
  const auto good = InequalityReport::make("x", 1.0, 1.0 - 1e-12);
  CHECK(good.pass);
  const auto edge = InequalityReport::make("x", 1.0, 1.0 + 1e-10);  // inside tolerance
  CHECK(edge.pass);
  const auto bad = InequalityReport::make("x", 1.0, 1.1);
  CHECK_FALSE(bad.pass);
}
