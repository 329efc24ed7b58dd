#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hweyl/vector_measure.hpp"

namespace hweyl {

enum class Suite { core, vmeasure, vweyl, vtwisted, all };

std::string to_string(Suite s);
/// Throws DomainError on an unknown name.
Suite suite_from_string(const std::string& name);

struct VerifyConfig {
  std::uint64_t seed = 1;
  /// Default: Z2, Z3, Z4, Z2xZ2, Z6.
  std::vector<FiniteAbelianGroup> groups = default_groups();
  /// Overrides every check's default trial count (per group) when set.
  std::optional<std::size_t> trials;
  std::vector<int> dims = {1, 2, 3};
  std::vector<ScalarField> fields = {ScalarField::real, ScalarField::complex};
  std::vector<Exponent> lq = {Exponent(2.0), Exponent(1.0), Exponent::infinity()};
  /// Search settings for checks that bracket dual-ball suprema.
  SearchConfig search = fast_search();

  static std::vector<FiniteAbelianGroup> default_groups();
  static SearchConfig fast_search();
};

/// One check over all configured groups. `worst_margin` is the smallest
/// normalized slack seen, where the slack of a trial is
/// (margin + optimizer bracket allowance) / scale; the check passes iff
/// worst_margin >= -tolerance.
struct CheckRecord {
  std::string name;
  std::string anchor;  ///< the identity or inequality being checked
  std::size_t trials = 0;
  double worst_margin = 0.0;
  double tolerance = 0.0;
  /// Largest normalized optimizer bracket width; absent for exact checks.
  std::optional<double> bracket_width;
  bool pass = true;
  std::string error;  ///< set when the check threw
};

struct VerificationReport {
  Suite suite = Suite::all;
  VerifyConfig config;
  std::vector<CheckRecord> checks;  ///< sorted by name
  bool pass = true;
};

/// Runs every check of `suite`. Deterministic given (seed, config).
VerificationReport run_verify(Suite suite, const VerifyConfig& config);

/// {"schema": 1, "suite", "pass", "config", "checks": [...]}.
nlohmann::json report_to_json(const VerificationReport& report);
std::string report_table(const VerificationReport& report);
std::string report_csv(const VerificationReport& report);

/// Names of the checks in a suite (sorted).
std::vector<std::string> check_names(Suite suite);

}  // namespace hweyl
