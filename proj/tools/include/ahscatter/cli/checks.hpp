#pragma once

// Acceptance check suites shared by `ahscatter check` and the acceptance
// test binary. Each criterion produces one or more cases; a criterion passes
// when none of its non-informational cases fail.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ahscatter::cli {

enum class CaseStatus { pass, fail, skip };

const char* to_string(CaseStatus s);

struct CheckCase {
  std::string id;
  int criterion = 0;
  CaseStatus status = CaseStatus::pass;
  double measured = 0.0;
  double tolerance = 0.0;
  std::optional<double> reference;
  std::string basis;  // what the measured value is compared against
  std::string detail;
  bool informational = false;  // reported, never counted as a failure
};

struct CheckSummary {
  int pass = 0;
  int fail = 0;
  int skip = 0;
  int informational_mismatch = 0;
};

struct CheckReport {
  std::string suite;
  std::uint64_t seed = 42;
  double tol_scale = 1.0;
  std::vector<CheckCase> cases;  // sorted by id

  CheckSummary summary() const;
  bool ok() const { return summary().fail == 0; }
};

struct CheckContext {
  std::uint64_t seed = 42;
  double tol_scale = 1.0;
};

struct Criterion {
  int number;
  const char* suite;
  const char* title;
  double runtime_budget_s;  // 0 when none is stated
  std::function<void(const CheckContext&, std::vector<CheckCase>&)> run;
};

const std::vector<Criterion>& criteria();
const std::vector<std::string>& suite_names();

/// Runs every criterion belonging to `suite` ("all" selects everything).
/// Throws std::invalid_argument for an unknown suite.
CheckReport run_suite(const std::string& suite, const CheckContext& ctx);

}  // namespace ahscatter::cli
