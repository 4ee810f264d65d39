#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tt {

// Effective parameters of one CLI run; unset optionals mean "suite default".
struct RunConfig {
  std::optional<int> m;
  std::optional<int> r;
  std::optional<int> n;  // nullopt = symbolic
  std::optional<double> s;
  std::optional<double> t;
  int grid_volume = 256;
  int grid_dirs = 512;
  int grid_offsets = 512;
  double extent = 8.0;
  int sphere_rings = 96;  // n = 3 identity grid: rings x 2 rings
  int circle_nodes = 512;
  int gram_rings = 24;
  int gram_fields = 50;
  bool refine = false;  // isometry: also run on doubled grids
  std::optional<double> tol;
  std::uint64_t seed = 20240601;
  std::string suite;
  std::string out;
};

struct CheckResult {
  std::string name;
  std::string kind;  // "exact" (value = differing terms), "residual", "rel_err", "min_eig", "report"
  double value = 0;
  double tol = 0;
  bool pass = false;
  bool asserted = true;
  std::vector<std::pair<std::string, double>> extra;  // lhs, rhs, ...
  std::string note;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
  int pass_count() const;
  int asserted_count() const;
};

const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown name; "all" runs every suite.
std::vector<SuiteResult> run_suite(const std::string& name, const RunConfig& cfg);

SuiteResult suite_symbolic_regression(const RunConfig& cfg);
SuiteResult suite_contraction_oracle(const RunConfig& cfg);
SuiteResult suite_sphere_identities(const RunConfig& cfg);
SuiteResult suite_slice(const RunConfig& cfg);
SuiteResult suite_isometry(const RunConfig& cfg);

// Deterministic JSON: config echo, suites, checks, summary. No timings.
std::string render_report_json(const RunConfig& cfg, const std::vector<SuiteResult>& suites);
// Human-readable table from a report document; throws on malformed input.
std::string render_report_table(const std::string& json_text);

std::string config_json(const RunConfig& cfg);

}  // namespace tt
