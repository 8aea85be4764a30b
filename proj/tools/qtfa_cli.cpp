// Command-line front end: build signals from spec files, compute the four
// transforms, dump fields, and run named verification suites.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtfa/io.hpp"
#include "qtfa/suites.hpp"
#include "qtfa/tf_dist.hpp"

namespace {

using namespace qtfa;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

struct RunConfig {
  std::string command;
  std::string signal_spec;
  std::string window_spec;
  std::optional<int> d;
  std::optional<int> n;
  std::optional<double> half_extent;
  std::string suite = "all";
  std::string output;
  std::string dump_field;
  std::string format = "json";
  std::uint64_t seed = 7;
  bool no_timestamp = false;
};

nlohmann::json config_to_json(const RunConfig& c) {
  nlohmann::json j = {{"command", c.command},
                      {"suite", c.suite},
                      {"format", c.format},
                      {"seed", c.seed},
                      {"no_timestamp", c.no_timestamp}};
  if (!c.signal_spec.empty()) j["signal_spec"] = c.signal_spec;
  if (!c.window_spec.empty()) j["window_spec"] = c.window_spec;
  if (!c.output.empty()) j["output"] = c.output;
  if (!c.dump_field.empty()) j["dump_field"] = c.dump_field;
  if (c.d) j["d"] = *c.d;
  if (c.n) j["n_per_axis"] = *c.n;
  if (c.half_extent) j["half_extent"] = *c.half_extent;
  return j;
}

GridSpec apply_overrides(GridSpec grid, const RunConfig& c) {
  if (c.d) grid.d = *c.d;
  if (c.n) grid.n_per_axis = *c.n;
  if (c.half_extent) grid.half_extent = *c.half_extent;
  if (!is_power_of_two(grid.n_per_axis))
    throw std::invalid_argument("n_per_axis must be a power of two");
  return GridSpec(grid.d, grid.n_per_axis, grid.half_extent);
}

SampledSignal load_signal(const std::string& path, const RunConfig& c, GridSpec* grid_out) {
  const SignalSpec spec = load_signal_spec(path);
  const GridSpec grid = apply_overrides(spec.grid, c);
  if (grid_out) *grid_out = grid;
  return sample(spec.shape, grid);
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write output: " + path);
  out << text;
}

int emit_reports(const RunConfig& c, const std::vector<InequalityReport>& reports) {
  std::size_t failed = 0;
  for (const auto& r : reports)
    if (!r.pass) ++failed;

  if (c.format == "csv") {
    write_text(c.output, reports_to_csv(reports));
  } else {
    nlohmann::json doc;
    doc["schema"] = "qtfa-report-v1";
    doc["config"] = config_to_json(c);
    if (!c.no_timestamp) doc["timestamp"] = timestamp_utc();
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : reports) checks.push_back(report_to_json(r));
    doc["checks"] = checks;
    doc["total"] = reports.size();
    doc["failed"] = failed;
    write_text(c.output, doc.dump(2) + "\n");
  }

  for (const auto& r : reports)
    if (!r.pass)
      std::cerr << "FAIL " << r.name << " (lhs " << r.lhs << ", rhs " << r.rhs << ")\n";
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

int run_transform(const RunConfig& c) {
  GridSpec grid;
  const SampledSignal f = load_signal(c.signal_spec, c, &grid);

  if (c.command == "qft") {
    const SpectrumSignal F = qft_fast(f);
    if (!c.dump_field.empty()) write_spectrum_dump(F, c.dump_field);
    std::cout << "qft: n=" << grid.n_per_axis << " d=" << grid.d
              << " l2=" << spectrum_l2_norm(F) << "\n";
    return kExitOk;
  }

  if (c.window_spec.empty())
    throw std::invalid_argument(c.command + " requires --window");
  const SignalSpec wspec = load_signal_spec(c.window_spec);
  const SampledSignal g = sample(wspec.shape, grid);

  if (c.command == "qwft") {
    const PhaseSpaceField G = qwft(f, g);
    if (!c.dump_field.empty()) write_field_dump(G, c.dump_field);
    std::cout << "qwft: nodes=" << G.values.size() << " l2=" << G.l2_norm()
              << " sup=" << G.sup_norm() << "\n";
    return kExitOk;
  }
  if (c.command == "ambiguity") {
    const PhaseSpaceField A = ambiguity(f, g);
    if (!c.dump_field.empty()) write_field_dump(A, c.dump_field);
    std::cout << "ambiguity: nodes=" << A.values.size() << " l2=" << A.l2_norm() << "\n";
    return kExitOk;
  }
  if (c.command == "wigner") {
    const PhaseSpaceField W = wigner(f, g);
    if (!c.dump_field.empty()) write_field_dump(W, c.dump_field);
    std::cout << "wigner: nodes=" << W.values.size() << " l2=" << W.l2_norm() << "\n";
    return kExitOk;
  }
  if (c.command == "reconstruct") {
    const PhaseSpaceField G = qwft(f, g);
    const SampledSignal back = reconstruct(G, g);
    double dev = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      dev = std::max(dev, abs(back.values[i] - f.values[i]));
      scale = std::max(scale, abs(f.values[i]));
    }
    const double rel = scale > 0 ? dev / scale : dev;
    if (!c.dump_field.empty()) write_signal_dump(back, c.dump_field);
    std::cout << "reconstruct: max relative deviation " << rel << "\n";
    return rel <= 1e-8 ? kExitOk : kExitCheckFailed;
  }
  throw std::invalid_argument("unknown command: " + c.command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quaternion time-frequency analysis toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&](CLI::App* sub, bool needs_signal) {
    auto* sig = sub->add_option("--signal", cfg.signal_spec, "signal spec file (JSON)");
    if (needs_signal) sig->required();
    sub->add_option("--window", cfg.window_spec, "window spec file (JSON)");
    sub->add_option("--d", cfg.d, "override: half-dimension d");
    sub->add_option("--N", cfg.n, "override: nodes per axis (power of two)");
    sub->add_option("--L", cfg.half_extent, "override: half extent L");
    sub->add_option("--dump-field", cfg.dump_field, "write the binary dump here");
    sub->add_option("--output,-o", cfg.output, "output path (default stdout)");
  };

  for (const char* name : {"qft", "qwft", "ambiguity", "wigner", "reconstruct"}) {
    auto* sub = app.add_subcommand(name);
    add_common(sub, true);
    sub->callback([&cfg, name]() { cfg.command = name; });
  }

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("--suite", cfg.suite, "suite name")
      ->check(CLI::IsMember(qtfa::suite_names()));
  verify->add_option("--seed", cfg.seed, "seed for the random-signal sweeps");
  verify->add_option("--d", cfg.d, "override: half-dimension d");
  verify->add_option("--N", cfg.n, "override: nodes per axis (power of two)");
  verify->add_option("--L", cfg.half_extent, "override: half extent L");
  verify->add_option("--output,-o", cfg.output, "report path (default stdout)");
  verify->add_option("--format", cfg.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_flag("--no-timestamp", cfg.no_timestamp,
                   "omit the timestamp field for byte-identical reports");
  verify->callback([&cfg]() { cfg.command = "verify"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitBadInput : kExitOk;
  }

  try {
    if (cfg.command == "verify") {
      qtfa::SuiteConfig sc;
      if (cfg.d) sc.d = *cfg.d;
      if (cfg.n) sc.n = *cfg.n;
      if (cfg.half_extent) sc.half_extent = *cfg.half_extent;
      if (!qtfa::is_power_of_two(sc.n))
        throw std::invalid_argument("n_per_axis must be a power of two");
      // a materialized field has N^{4d} cells; refuse configurations that
      // cannot fit in memory
      if (4.0 * sc.d * std::log2(static_cast<double>(sc.n)) > 26.0)
        throw std::invalid_argument(
            "suite grid too large (needs N^{4d} <= 2^26 phase-space cells); "
            "reduce N or d");
      sc.seed = cfg.seed;
      return emit_reports(cfg, qtfa::run_suite(cfg.suite, sc));
    }
    return run_transform(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
