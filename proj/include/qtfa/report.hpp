#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>

namespace qtfa {

/// Outcome of one verified inequality. Oriented so that margin = lhs - rhs
/// and margin >= 0 means the bound holds.
struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  std::map<std::string, double> constant_values;
  std::map<std::string, double> parameters;
  bool pass = false;
  std::string note;

  static InequalityReport make(std::string name, double lhs, double rhs) {
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = lhs - rhs;
    const double tol = 1e-9 * std::max({std::fabs(lhs), std::fabs(rhs), 1.0});
    r.pass = r.margin >= -tol;
    return r;
  }
};

/// Outcome of a pointwise or aggregate equality comparison.
struct ComparisonReport {
  std::string name;
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
  double scale = 0.0;        // normalization used for the relative error
  std::size_t compared = 0;
  std::size_t excluded = 0;  // points left out of the comparison set
  double tolerance = 0.0;    // bound on max_rel_err
  bool pass = false;

  void record(double abs_err) {
    max_abs_err = std::max(max_abs_err, abs_err);
    ++compared;
  }
  void finish(double tol) {
    tolerance = tol;
    max_rel_err = scale > 0.0 ? max_abs_err / scale : max_abs_err;
    pass = max_rel_err <= tol;
  }

  /// View as an InequalityReport (lhs = tolerance, rhs = observed error).
  InequalityReport as_inequality() const {
    InequalityReport r = InequalityReport::make(name, tolerance, max_rel_err);
    r.parameters["compared"] = static_cast<double>(compared);
    r.parameters["excluded"] = static_cast<double>(excluded);
    r.pass = pass;
    return r;
  }
};

}  // namespace qtfa
