#pragma once

// Command execution behind the CLI: ingest, compute, build a JSON report,
// and pick an exit code. Reports contain no wall-clock data unless asked,
// so identical inputs give identical bytes.

#include <filesystem>
#include <optional>
#include <string>

#include "nacoh/io.hpp"

namespace nacoh {

enum class ExitCode : int { pass = 0, violation = 1, error = 2 };

struct RunConfig {
  std::uint64_t budget = kDefaultBudget;
  int jobs = 1;
  std::optional<std::filesystem::path> cache_dir;
  bool timing = false;  // adds timing_ms; bypasses the cache
};

// Errors: ValidationError when budget or jobs is below 1.
void validate(const RunConfig& config);

struct Command {
  std::string name;                   // validate, z1, h1, z2, h2, ...
  std::filesystem::path input;        // group / Gamma-group / crossed module file
  std::filesystem::path ses;
  std::filesystem::path cocycle;
  std::filesystem::path corpus;
  H2Kind kind = H2Kind::thin;
};

struct RunResult {
  Json report;
  int exit_code = 0;
  bool cache_hit = false;
};

const std::vector<std::string>& command_names();

// Never throws for computation errors; they become exit code 2 with an
// "error" object in the report.
RunResult run(const Command& command, const RunConfig& config);

// JSON with sorted keys, two-space indent, trailing newline.
std::string render_json(const RunResult& result);
// Short human summary.
std::string render_text(const RunResult& result);

// Pure report builders, also used by tests.
Json h2_report(const GammaCrossedModule& m, const H2Classes& h);
Json exactness_report(const ShortExactSequence& ses, const SesCohomology& h, const ExactnessReport& e,
                      const PiCorollaryReport& pi);
Json serre_report(const SerreReport& s);

}  // namespace nacoh
