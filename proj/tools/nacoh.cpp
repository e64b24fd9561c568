#include <iostream>

#include <CLI11.hpp>

#include "nacoh/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"nacoh: nonabelian cohomology of finite Gamma-groups"};
  app.require_subcommand(1);

  nacoh::RunConfig config;
  std::string cache_dir;
  std::string format = "json";
  app.add_option("--budget", config.budget, "candidate-state cap")->envname("NACOH_BUDGET")->check(CLI::PositiveNumber);
  app.add_option("--jobs", config.jobs, "worker threads")->envname("NACOH_JOBS")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cache_dir, "result cache directory")->envname("NACOH_CACHE_DIR");
  app.add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", config.timing, "include wall-clock timing (disables the cache)");

  nacoh::Command cmd;
  std::string kind = "thin";
  auto input = [&](CLI::App* sub, const char* names, const char* what) {
    sub->add_option(names, cmd.input, what)->required()->check(CLI::ExistingFile);
  };
  auto ses = [&](CLI::App* sub) { sub->add_option("--ses", cmd.ses, "short exact sequence file")->required()->check(CLI::ExistingFile); };

  // Options may be given before or after the subcommand name.
  app.fallthrough();

  auto* validate = app.add_subcommand("validate", "validate any input file");
  validate->add_option("file", cmd.input)->required()->check(CLI::ExistingFile);
  input(app.add_subcommand("z1", "1-cocycles of a Gamma-group"), "--group,--coefficients", "Gamma-group file");
  input(app.add_subcommand("h1", "H^1 of a Gamma-group"), "--group,--coefficients", "Gamma-group file");
  input(app.add_subcommand("z2", "2-cocycles with crossed-module coefficients"), "--coefficients", "crossed module file");
  auto* h2 = app.add_subcommand("h2", "thick or thin H^2 with crossed-module coefficients");
  input(h2, "--coefficients", "crossed module file");
  h2->add_option("--kind", kind)->check(CLI::IsMember({"thick", "thin"}));
  input(app.add_subcommand("h2-kernel", "H^2 with Gamma-kernel coefficients"), "--group,--coefficients", "Gamma-group file");
  input(app.add_subcommand("lambda-check", "lambda bijection and center action"), "--group,--coefficients", "Gamma-group file");
  input(app.add_subcommand("h2-abelian", "classical H^2 of an abelian Gamma-module"), "--group,--coefficients", "Gamma-group file");
  auto* delta = app.add_subcommand("delta", "connecting map on one 1-cocycle");
  ses(delta);
  delta->add_option("--cocycle", cmd.cocycle, "1-cocycle file")->required()->check(CLI::ExistingFile);
  ses(app.add_subcommand("verify-exactness", "exact sequence and pi corollary, class by class"));
  ses(app.add_subcommand("serre-check", "abelian-kernel comparison"));
  app.add_subcommand("report-all", "verify every sequence in a corpus directory")
      ->add_option("--corpus", cmd.corpus)
      ->required()
      ->check(CLI::ExistingDirectory);

  CLI11_PARSE(app, argc, argv);

  cmd.name = app.get_subcommands().front()->get_name();
  cmd.kind = kind == "thick" ? nacoh::H2Kind::thick : nacoh::H2Kind::thin;
  if (!cache_dir.empty()) config.cache_dir = cache_dir;

  const nacoh::RunResult result = nacoh::run(cmd, config);
  std::cout << (format == "json" ? nacoh::render_json(result) : nacoh::render_text(result));
  return result.exit_code;
}
