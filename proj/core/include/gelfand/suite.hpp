#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gelfand/catalog.hpp"
#include "gelfand/sobolev.hpp"

namespace gelfand {

/// Names of the verification suites, in canonical execution order.
const std::vector<std::string>& suite_names();

struct SuiteConfig {
  std::vector<std::string> pairs;   // empty = whole catalog
  std::vector<std::string> suites;  // empty = all suites
  int trials = 100;
  std::uint64_t master_seed = 42;
  double tolerance = 1e-10;  // equality/residual checks
  /// "auto" (Cayley weight on D_1 united with its inverse class),
  /// "zero", "cayley:<i>[,<j>...]" or "user:<v0>,<v1>,...".
  std::string weight = "auto";
  double s = 1.0;
  double alpha = 2.0;
  std::vector<double> p_grid = {1.0, 1.25, 1.5, 1.75, 2.0};

  void validate() const;  // throws std::invalid_argument
};

/// One aggregated check: the worst trial of a (pair, check, params) cell.
/// kind "bound": pass = slack >= -tolerance with slack = rhs - lhs.
/// kind "equal": pass = |lhs - rhs| <= tolerance * (1 + |rhs|).
/// kind "verdict": pass = the Gelfand verdict matches the catalog
/// expectation (exactly; lhs echoes the asymmetry).
struct CheckRecord {
  std::string check;
  std::string pair;
  std::string kind;
  std::map<std::string, std::string> params;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::int64_t trial_count = 1;
  std::uint64_t worst_trial_seed = 0;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckRecord> checks;

  std::int64_t total() const { return static_cast<std::int64_t>(checks.size()); }
  std::int64_t passed() const;
  bool all_pass() const { return passed() == total(); }
};

/// Runs the selected suites over the selected pairs. Tolerance violations
/// are failing records in the report, not errors; std::invalid_argument is
/// reserved for configuration mistakes (unknown pair or suite name, bad
/// trial count or tolerance).
SuiteReport run_suite(const SuiteConfig& config);

/// Resolves a weight specification string against a basis (see SuiteConfig).
SobolevWeight resolve_weight(const std::string& spec, const BasisPtr& basis);

}  // namespace gelfand
