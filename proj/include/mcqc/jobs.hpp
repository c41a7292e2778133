#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcqc/exact.hpp"
#include "mcqc/exec.hpp"

namespace mcqc {

inline constexpr const char* kToolVersion = "1.0.0";

/// One batch job. Unset windows fall back to the per-check defaults in
/// check_defaults().
struct JobConfig {
  std::string check;
  Scalar u{2, 3};
  Scalar hbar = 1;
  Scalar lambda = 1;
  std::optional<int> ncut;
  std::optional<int> xdeg;
  std::optional<int> tdeg;
  std::optional<int> jmax;
  std::vector<Scalar> points;
  unsigned seed = 0;
  std::string model = "5d";    // compute-z
  nlohmann::json chain;        // vev
  bool profile = false;
  Exec exec = Exec::Parallel;
};

enum class Status { Pass, Fail, Untrusted };
const char* status_name(Status s);

struct CheckEntry {
  std::string name;
  std::string window;
  Status status = Status::Fail;
  nlohmann::json witness;
};

struct Report {
  nlohmann::json job;
  std::vector<CheckEntry> entries;
  std::optional<double> wall_time;
  nlohmann::json profile;  // per-stage seconds, only with --profile
  bool pass() const;
};

const std::vector<std::string>& check_names();

// Resolved windows for a check, for echoing and for the runner.
struct Windows {
  int ncut = 0;
  int xdeg = 0;
  int tdeg = 0;
  int jmax = 0;
};
Windows check_defaults(const std::string& check);
Windows resolve_windows(const JobConfig& cfg);

/// Runs the named check. Module errors become "fail" (or "untrusted" for
/// window violations) entries; unknown check names raise ConfigError.
Report run_job(const JobConfig& cfg);

nlohmann::json to_json(const Report& r);
int exit_code(const Report& r);

// JSON forms of exact values.
nlohmann::json scalar_json(const Scalar& s);

}  // namespace mcqc
