#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtfa/qft.hpp"
#include "qtfa/qwft.hpp"
#include "qtfa/report.hpp"
#include "qtfa/signal.hpp"

namespace qtfa {

/// A signal spec file: grid parameters plus the Gaussian closed form.
/// Fields: {d, n_per_axis, half_extent, kind, a, b}.
struct SignalSpec {
  GridSpec grid;
  GaussianSpec shape;
};

inline GaussianSpec::Kind parse_gaussian_kind(const std::string& s) {
  if (s == "signal") return GaussianSpec::Kind::Signal;
  if (s == "window") return GaussianSpec::Kind::Window;
  if (s == "separable-axes") return GaussianSpec::Kind::SeparableAxes;
  throw std::invalid_argument("unknown gaussian kind: " + s);
}

inline const char* gaussian_kind_name(GaussianSpec::Kind k) {
  switch (k) {
    case GaussianSpec::Kind::Signal: return "signal";
    case GaussianSpec::Kind::Window: return "window";
    case GaussianSpec::Kind::SeparableAxes: return "separable-axes";
  }
  return "?";
}

inline SignalSpec parse_signal_spec(const nlohmann::json& j) {
  for (const char* key : {"d", "n_per_axis", "half_extent", "kind", "a", "b"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("signal spec: missing field '") + key + "'");
  SignalSpec spec;
  spec.grid = GridSpec(j.at("d").get<int>(), j.at("n_per_axis").get<int>(),
                       j.at("half_extent").get<double>());
  spec.shape = GaussianSpec(j.at("a").get<double>(), j.at("b").get<double>(),
                            parse_gaussian_kind(j.at("kind").get<std::string>()));
  return spec;
}

inline SignalSpec load_signal_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open signal spec: " + path);
  nlohmann::json j;
  in >> j;
  return parse_signal_spec(j);
}

inline nlohmann::json signal_spec_to_json(const SignalSpec& spec) {
  return {{"d", spec.grid.d},
          {"n_per_axis", spec.grid.n_per_axis},
          {"half_extent", spec.grid.half_extent},
          {"kind", gaussian_kind_name(spec.shape.kind)},
          {"a", spec.shape.a},
          {"b", spec.shape.b}};
}

namespace detail {

inline void write_f64(std::ostream& out, const double* data, std::size_t count) {
  // the artifact targets little-endian hosts; dumps are raw float64
  out.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(count * 8));
}

inline void read_f64(std::istream& in, double* data, std::size_t count) {
  in.read(reinterpret_cast<char*>(data), static_cast<std::streamsize>(count * 8));
  if (!in) throw std::runtime_error("binary dump: unexpected end of file");
}

}  // namespace detail

/// Binary signal dump: 8-double header {d, N, L, 0...}, then quaternion
/// components (q0 q1 q2 q3) in row-major multi-index order, little-endian.
inline void write_signal_dump(const SampledSignal& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write dump: " + path);
  double header[8] = {static_cast<double>(f.grid.d), static_cast<double>(f.grid.n_per_axis),
                      f.grid.half_extent, 0, 0, 0, 0, 0};
  detail::write_f64(out, header, 8);
  detail::write_f64(out, reinterpret_cast<const double*>(f.values.data()),
                    f.values.size() * 4);
}

namespace detail {

inline int header_int(double v, int lo, int hi, const char* what) {
  const int n = static_cast<int>(v);
  if (v != n || n < lo || n > hi)
    throw std::runtime_error(std::string("binary dump: bad header field ") + what);
  return n;
}

}  // namespace detail

inline SampledSignal read_signal_dump(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read dump: " + path);
  double header[8];
  detail::read_f64(in, header, 8);
  SampledSignal f(GridSpec(detail::header_int(header[0], 1, 8, "d"),
                           detail::header_int(header[1], 1, 4096, "N"), header[2]));
  detail::read_f64(in, reinterpret_cast<double*>(f.values.data()), f.values.size() * 4);
  return f;
}

/// Spectrum dump reuses the signal layout; the half-extent slot holds the
/// frequency box half-width N*Dw/2.
inline void write_spectrum_dump(const SpectrumSignal& F, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write dump: " + path);
  double header[8] = {static_cast<double>(F.grid.d), static_cast<double>(F.grid.n_per_axis),
                      F.grid.half_extent(), 0, 0, 0, 0, 0};
  detail::write_f64(out, header, 8);
  detail::write_f64(out, reinterpret_cast<const double*>(F.values.data()),
                    F.values.size() * 4);
}

/// Field dump: 8-double header {d, N_x, L_x, N_w, x_spacing, w_spacing, 0, 0},
/// then quaternion components in row-major (x-major, w-minor) order. The
/// spacings make the half-shift subgrids of the ambiguity and Wigner fields
/// self-describing.
inline void write_field_dump(const PhaseSpaceField& field, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write dump: " + path);
  double header[8] = {static_cast<double>(field.d),
                      static_cast<double>(field.nx),
                      0.5 * field.nx * field.dx,
                      static_cast<double>(field.nw),
                      field.dx,
                      field.dw,
                      0,
                      0};
  detail::write_f64(out, header, 8);
  detail::write_f64(out, reinterpret_cast<const double*>(field.values.data()),
                    field.values.size() * 4);
}

inline PhaseSpaceField read_field_dump(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read dump: " + path);
  double header[8];
  detail::read_f64(in, header, 8);
  PhaseSpaceField field(detail::header_int(header[0], 1, 8, "d"),
                        detail::header_int(header[1], 1, 4096, "N_x"), header[4],
                        detail::header_int(header[3], 1, 4096, "N_w"), header[5]);
  detail::read_f64(in, reinterpret_cast<double*>(field.values.data()),
                   field.values.size() * 4);
  return field;
}

inline nlohmann::json report_to_json(const InequalityReport& r) {
  nlohmann::json j = {{"name", r.name},
                      {"lhs", r.lhs},
                      {"rhs", r.rhs},
                      {"margin", r.margin},
                      {"constant_values", r.constant_values},
                      {"parameters", r.parameters},
                      {"pass", r.pass}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

/// Flattens reports to CSV: fixed columns, then the union of constant and
/// parameter keys in sorted order.
inline std::string reports_to_csv(const std::vector<InequalityReport>& reports) {
  std::map<std::string, int> ckeys, pkeys;
  for (const auto& r : reports) {
    for (const auto& [k, v] : r.constant_values) ckeys[k] = 1;
    for (const auto& [k, v] : r.parameters) pkeys[k] = 1;
  }
  std::ostringstream out;
  out.precision(17);
  out << "name,pass,lhs,rhs,margin";
  for (const auto& [k, v] : ckeys) out << ",c:" << k;
  for (const auto& [k, v] : pkeys) out << ",p:" << k;
  out << "\n";
  for (const auto& r : reports) {
    out << r.name << "," << (r.pass ? "true" : "false") << "," << r.lhs << "," << r.rhs
        << "," << r.margin;
    for (const auto& [k, v] : ckeys) {
      out << ",";
      auto it = r.constant_values.find(k);
      if (it != r.constant_values.end()) out << it->second;
    }
    for (const auto& [k, v] : pkeys) {
      out << ",";
      auto it = r.parameters.find(k);
      if (it != r.parameters.end()) out << it->second;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace qtfa
