#include "nacoh/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <omp.h>

namespace nacoh {

namespace {

Json error_json(const Error& e) {
  Json j{{"code", to_string(e.code())}, {"message", e.what()}};
  if (const auto* b = dynamic_cast<const BudgetExceeded*>(&e)) {
    j["budget"] = b->budget();
    j["estimated_space"] = b->estimated_space();
  }
  return j;
}

Json budget_json(const RunConfig& config, std::uint64_t states) {
  return Json{{"limit", config.budget}, {"states", states}};
}

Json class_map_json(const ClassMap& m) {
  return Json{{"image", m.image},
              {"well_defined", m.well_defined},
              {"surjective", m.surjective},
              {"injective", m.injective},
              {"preserves_neutral", m.preserves_neutral},
              {"preserves_unit", m.preserves_unit}};
}

Json clause_json(const ClauseTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows)
    rows.push_back(Json{{"class", r.cls}, {"in_image", r.in_image}, {"condition", r.condition}, {"ok", r.ok()}});
  return Json{{"name", t.name}, {"rows", rows}, {"ok", t.ok()}};
}

Json cocycle2_json(const Cocycle2Crossed& z) { return Json{{"u", z.u}, {"psi", z.psi}}; }

SearchOptions options_of(const RunConfig& config) { return SearchOptions{config.budget, config.jobs}; }

// --- per-command bodies; each returns (report, exit code) -------------------

struct Outcome {
  Json report;
  int exit_code = 0;
};

struct Prepared {
  std::string key;  // cache key material; empty disables caching
  std::function<Outcome()> compute;
};

Prepared prepare_validate(const Command& c, const RunConfig&) {
  Loader in(c.input);
  const InputKind kind = in.detect();
  Json r{{"kind", to_string(kind)}, {"valid", true}};
  std::string key;
  switch (kind) {
    case InputKind::group: {
      auto g = in.group();
      r["order"] = g->order();
      r["abelian"] = g->is_abelian();
      r["generators"] = g->generators();
      key = canonical(*g).dump();
      break;
    }
    case InputKind::gamma_group: {
      auto x = in.gamma_group();
      r["order"] = x.order();
      r["gamma_order"] = x.gamma_order();
      r["trivial_action"] = x.is_trivial();
      key = canonical(x).dump();
      break;
    }
    case InputKind::crossed_module: {
      auto m = in.crossed_module();
      r["A_order"] = m->A().order();
      r["G_order"] = m->G().order();
      r["rho"] = m->rho().images();
      key = canonical(*m).dump();
      break;
    }
    case InputKind::ses: {
      auto s = in.ses();
      r["orders"] = {s.A().order(), s.B().order(), s.C().order()};
      key = canonical(s).dump();
      break;
    }
    case InputKind::cocycle1:
      r["values"] = in.cocycle1();
      key = r.dump();
      break;
    case InputKind::cocycle2: {
      auto z = in.cocycle2();
      r["u"] = z.u;
      r["psi"] = z.psi;
      key = r.dump();
      break;
    }
  }
  return {key, [r] { return Outcome{r, 0}; }};
}

Prepared prepare_z1(const Command& c, const RunConfig& config) {
  auto x = Loader(c.input).gamma_group();
  return {canonical(x).dump(), [x, config] {
            auto z = enumerate_z1(x, options_of(config));
            Json list = Json::array();
            for (const auto& v : z.cocycles) list.push_back(v.values);
            return Outcome{Json{{"count", z.cocycles.size()}, {"cocycles", list}, {"budget", budget_json(config, z.states)}}, 0};
          }};
}

Prepared prepare_h1(const Command& c, const RunConfig& config) {
  auto x = Loader(c.input).gamma_group();
  return {canonical(x).dump(), [x, config] {
            auto h = h1_classes(x, options_of(config));
            Json classes = Json::array();
            const std::size_t triv = h.trivial_class();
            for (std::size_t k = 0; k < h.size(); ++k)
              classes.push_back(Json{{"representative", h.representative(k).values},
                                     {"size", h.partition.members[k].size()},
                                     {"trivial", k == triv}});
            return Outcome{Json{{"count", h.size()},
                                {"cocycles", h.cocycles.size()},
                                {"classes", classes},
                                {"budget", budget_json(config, h.states)}},
                           0};
          }};
}

Prepared prepare_z2(const Command& c, const RunConfig& config) {
  auto m = Loader(c.input).crossed_module();
  return {canonical(*m).dump(), [m, config] {
            auto z = enumerate_z2_crossed(*m, options_of(config));
            Json list = Json::array();
            for (const auto& v : z.cocycles) list.push_back(cocycle2_json(v));
            return Outcome{Json{{"count", z.cocycles.size()},
                                {"cocycles", list},
                                {"space", z.space},
                                {"budget", budget_json(config, z.states)}},
                           0};
          }};
}

Prepared prepare_h2(const Command& c, const RunConfig& config) {
  auto m = Loader(c.input).crossed_module();
  const H2Kind kind = c.kind;
  return {canonical(*m).dump() + "|" + to_string(kind), [m, kind, config] {
            auto h = h2_quotient(*m, kind, options_of(config));
            Json r = h2_report(*m, h);
            r["budget"] = budget_json(config, h.states);
            return Outcome{r, 0};
          }};
}

Prepared prepare_h2_kernel(const Command& c, const RunConfig& config) {
  auto a = Loader(c.input).gamma_group();
  return {canonical(a).dump(), [a, config] {
            auto h = h2_kernel(a, options_of(config));
            Json classes = Json::array();
            for (std::size_t k = 0; k < h.size(); ++k) {
              const auto& z = h.representative(k);
              classes.push_back(Json{{"u", z.u},
                                     {"f", z.f},
                                     {"size", h.partition.members[k].size()},
                                     {"neutral", h.flags[k].neutral},
                                     {"unit", h.flags[k].unit}});
            }
            return Outcome{Json{{"count", h.size()},
                                {"cocycles", h.cocycles.size()},
                                {"classes", classes},
                                {"space", h.space},
                                {"budget", budget_json(config, h.states)}},
                           0};
          }};
}

Prepared prepare_lambda(const Command& c, const RunConfig& config) {
  auto a = Loader(c.input).gamma_group();
  return {canonical(a).dump(), [a, config] {
            auto l = lambda_map(a, options_of(config));
            auto z = center_h2_action(a, options_of(config));
            Json lam{{"kernel_classes", l.kernel_classes},
                     {"thick_classes", l.thick_classes},
                     {"thin_classes", l.thin_classes},
                     {"cocycle_bijection", l.cocycle_bijection},
                     {"thick_bijection", l.thick_bijection},
                     {"flags_preserved", l.flags_preserved},
                     {"map", l.map},
                     {"injective", l.injective},
                     {"surjective", l.surjective},
                     {"second_proof_checks", l.second_proof_checks},
                     {"second_proof_violations", l.second_proof_violations},
                     {"ok", l.ok()}};
            Json center{{"center_classes", z.center_classes},
                        {"kernel_classes", z.kernel_classes},
                        {"thin_classes", z.thin_classes},
                        {"action", z.action},
                        {"well_defined", z.well_defined},
                        {"simply_transitive", z.simply_transitive},
                        {"mu", z.mu},
                        {"mu_bijective", z.mu_bijective},
                        {"iota", z.iota},
                        {"iota_bijective", z.iota_bijective},
                        {"center_matches_crossed", z.center_matches_crossed},
                        {"lambda_equivariant", z.lambda_equivariant},
                        {"ok", z.ok()}};
            const bool ok = l.ok() && z.ok();
            return Outcome{Json{{"lambda", lam},
                                {"center_action", center},
                                {"ok", ok},
                                {"budget", budget_json(config, l.states + z.states)}},
                           ok ? 0 : 1};
          }};
}

Prepared prepare_h2_abelian(const Command& c, const RunConfig& config) {
  auto a = Loader(c.input).gamma_group();
  return {canonical(a).dump(), [a, config] {
            auto h = h2_abelian(a, options_of(config));
            Json classes = Json::array();
            for (std::size_t k = 0; k < h.size(); ++k)
              classes.push_back(Json{{"u", h.representative(k)},
                                     {"size", h.partition.members[k].size()},
                                     {"zero", k == h.zero_class}});
            return Outcome{Json{{"count", h.size()},
                                {"cocycles", h.cocycles.size()},
                                {"coboundaries", h.coboundaries},
                                {"classes", classes},
                                {"budget", budget_json(config, h.states)}},
                           0};
          }};
}

Prepared prepare_delta(const Command& c, const RunConfig& config) {
  auto s = std::make_shared<ShortExactSequence>(Loader(c.ses).ses());
  auto values = Loader(c.cocycle).cocycle1();
  return {canonical(*s).dump() + "|" + Json(values).dump(), [s, values, config] {
            auto h = ses_cohomology(*s, options_of(config));
            const std::size_t cls = delta(*s, h, values);
            auto b = least_lift(*s, values);
            auto z = delta_cocycle(*s, h.modules, b);
            return Outcome{Json{{"cocycle", values},
                                {"h1_class", h.h1_c.class_of(values)},
                                {"lift", b},
                                {"delta_cocycle", cocycle2_json(z)},
                                {"class", cls},
                                {"representative", cocycle2_json(h.kernel.representative(cls))},
                                {"neutral", h.kernel.flags[cls].neutral},
                                {"unit", h.kernel.flags[cls].unit},
                                {"budget", budget_json(config, h.states)}},
                           0};
          }};
}

Outcome exactness_outcome(const ShortExactSequence& s, const RunConfig& config) {
  auto h = ses_cohomology(s, options_of(config));
  auto e = verify_exactness_theorem(s, h, config.budget);
  auto pi = verify_pi_corollary(s, h, config.budget);
  Json r = exactness_report(s, h, e, pi);
  r["budget"] = budget_json(config, e.states);
  return {r, e.ok() && pi.ok() ? 0 : 1};
}

Outcome serre_outcome(const ShortExactSequence& s, const RunConfig& config) {
  auto h = ses_cohomology(s, options_of(config));
  auto sr = verify_serre_criterion(s, h, options_of(config));
  Json r = serre_report(sr);
  r["budget"] = budget_json(config, h.states + sr.states);
  return {r, sr.ok() ? 0 : 1};
}

Prepared prepare_exactness(const Command& c, const RunConfig& config) {
  auto s = std::make_shared<ShortExactSequence>(Loader(c.ses).ses());
  return {canonical(*s).dump(), [s, config] { return exactness_outcome(*s, config); }};
}

Prepared prepare_serre(const Command& c, const RunConfig& config) {
  auto s = std::make_shared<ShortExactSequence>(Loader(c.ses).ses());
  return {canonical(*s).dump(), [s, config] { return serre_outcome(*s, config); }};
}

// --- cache ------------------------------------------------------------------

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& op, const std::string& key) {
  return dir / (op + "-" + hex64(fnv1a(key)) + ".json");
}

std::optional<Outcome> cache_read(const std::filesystem::path& file, const std::string& key) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    if (j.at("key_hash").get<std::string>() != hex64(fnv1a(key)) || j.at("key_size").get<std::size_t>() != key.size())
      return std::nullopt;
    return Outcome{j.at("report"), j.at("exit_code").get<int>()};
  } catch (const std::exception&) {
    return std::nullopt;  // corrupt entries are recomputed
  }
}

void cache_write(const std::filesystem::path& file, const std::string& key, const Outcome& o) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  Json j{{"key_hash", hex64(fnv1a(key))}, {"key_size", key.size()}, {"report", o.report}, {"exit_code", o.exit_code}};
  auto tmp = file;
  tmp += "." + std::to_string(omp_get_thread_num()) + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump();
  }
  std::filesystem::rename(tmp, file, ec);
}

Prepared prepare(const Command& c, const RunConfig& config) {
  const auto& n = c.name;
  if (n == "validate") return prepare_validate(c, config);
  if (n == "z1") return prepare_z1(c, config);
  if (n == "h1") return prepare_h1(c, config);
  if (n == "z2") return prepare_z2(c, config);
  if (n == "h2") return prepare_h2(c, config);
  if (n == "h2-kernel") return prepare_h2_kernel(c, config);
  if (n == "lambda-check") return prepare_lambda(c, config);
  if (n == "h2-abelian") return prepare_h2_abelian(c, config);
  if (n == "delta") return prepare_delta(c, config);
  if (n == "verify-exactness") return prepare_exactness(c, config);
  if (n == "serre-check") return prepare_serre(c, config);
  throw Error(ErrorCode::ValidationError, "unknown command \"" + n + "\"");
}

RunResult run_single(const Command& c, const RunConfig& config) {
  RunResult result;
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    validate(config);
    Prepared p = prepare(c, config);
    const std::string key = c.name + "|" + std::to_string(config.budget) + "|" + p.key;
    const bool use_cache = config.cache_dir && !config.timing;
    std::optional<Outcome> hit;
    if (use_cache) hit = cache_read(cache_path(*config.cache_dir, c.name, key), key);
    if (hit) {
      out = *hit;
      result.cache_hit = true;
    } else {
      try {
        out = p.compute();
      } catch (const Error& e) {
        out = Outcome{Json{{"error", error_json(e)}}, 2};
      }
      if (use_cache) cache_write(cache_path(*config.cache_dir, c.name, key), key, out);
    }
  } catch (const Error& e) {
    out = Outcome{Json{{"error", error_json(e)}}, 2};
  }
  out.report["command"] = c.name;
  if (config.timing)
    out.report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  result.report = std::move(out.report);
  result.exit_code = out.exit_code;
  return result;
}

std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw Error(ErrorCode::ParseError, dir.string() + ": not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  return files;
}

RunResult run_report_all(const Command& c, const RunConfig& config) {
  RunResult result;
  std::vector<std::filesystem::path> files;
  try {
    validate(config);
    files = corpus_files(c.corpus);
  } catch (const Error& e) {
    result.report = Json{{"command", c.name}, {"error", error_json(e)}};
    result.exit_code = 2;
    return result;
  }
  // Entries run in parallel, each computation serially; merged in file order.
  RunConfig inner = config;
  inner.jobs = 1;
  inner.timing = false;
  std::vector<Json> entries(files.size());
  std::vector<int> codes(files.size(), 0);
  const auto n = static_cast<std::ptrdiff_t>(files.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, config.jobs))
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    Command sub = c;
    sub.ses = files[k];
    sub.name = "verify-exactness";
    RunResult ex = run_single(sub, inner);
    sub.name = "serre-check";
    RunResult se = run_single(sub, inner);
    // Serre applies only to abelian kernels.
    const bool skipped = se.report.contains("error") && se.report["error"]["code"] == "NotAbelian";
    Json entry{{"file", files[k].filename().string()}, {"verify_exactness", ex.report}};
    entry["serre_check"] = skipped ? Json{{"skipped", "NotAbelian"}} : se.report;
    codes[k] = std::max(ex.exit_code, skipped ? 0 : se.exit_code);
    entry["exit_code"] = codes[k];
    entries[k] = std::move(entry);
  }
  int code = 0;
  for (int v : codes) code = std::max(code, v);
  result.report = Json{{"command", c.name}, {"entries", entries}, {"ok", code == 0}};
  result.exit_code = code;
  return result;
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.budget < 1) throw Error(ErrorCode::ValidationError, "budget must be at least 1");
  if (config.jobs < 1) throw Error(ErrorCode::ValidationError, "jobs must be at least 1");
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate",   "z1",    "h1",          "z2",
                                              "h2",         "h2-kernel", "lambda-check", "h2-abelian",
                                              "delta",      "verify-exactness", "serre-check", "report-all"};
  return names;
}

RunResult run(const Command& command, const RunConfig& config) {
  if (command.name == "report-all") return run_report_all(command, config);
  return run_single(command, config);
}

std::string render_json(const RunResult& result) { return result.report.dump(2) + "\n"; }

std::string render_text(const RunResult& result) {
  std::ostringstream out;
  const Json& r = result.report;
  out << r.value("command", std::string("?")) << ": exit " << result.exit_code << "\n";
  for (auto it = r.begin(); it != r.end(); ++it) {
    if (it.key() == "command") continue;
    if (it->is_primitive()) out << "  " << it.key() << " = " << it->dump() << "\n";
  }
  if (r.contains("error")) out << "  error: " << r["error"]["code"].get<std::string>() << ": " << r["error"]["message"].get<std::string>() << "\n";
  if (r.contains("entries"))
    for (const auto& e : r["entries"]) out << "  " << e["file"].get<std::string>() << ": exit " << e["exit_code"] << "\n";
  return out.str();
}

Json h2_report(const GammaCrossedModule& m, const H2Classes& h) {
  (void)m;
  Json classes = Json::array();
  for (std::size_t k = 0; k < h.size(); ++k) {
    Json c = cocycle2_json(h.representative(k));
    c["size"] = h.partition.members[k].size();
    c["neutral"] = h.flags[k].neutral;
    c["unit"] = h.flags[k].unit;
    classes.push_back(c);
  }
  return Json{{"kind", to_string(h.kind)},
              {"count", h.size()},
              {"cocycles", h.cocycles.size()},
              {"neutral_count", h.neutral_count()},
              {"classes", classes},
              {"space", h.space}};
}

Json exactness_report(const ShortExactSequence& ses, const SesCohomology& h, const ExactnessReport& e,
                      const PiCorollaryReport& pi) {
  Json sizes{{"A", ses.A().order()},
             {"B", ses.B().order()},
             {"C", ses.C().order()},
             {"h1_b", e.h1_b},
             {"h1_c", e.h1_c},
             {"h2_kernel", e.h2_kernel},
             {"h2_middle", e.h2_middle},
             {"h2_quotient", e.h2_quotient},
             {"h2_restricted", pi.h2_restricted}};
  Json neutral = Json::array();
  for (const auto& f : h.kernel.flags) neutral.push_back(f.neutral);
  Json d{{"ok", e.delta.ok}, {"paths", e.delta.paths}, {"image", e.delta.image}, {"witnesses", e.delta.witnesses}};
  Json maps{{"j_h1", class_map_json(e.j_h1)},
            {"i_star", class_map_json(e.i_star)},
            {"j_star", class_map_json(e.j_star)},
            {"delta", d}};
  Json clauses{{"i", clause_json(e.clause_i)}, {"ii", clause_json(e.clause_ii)}, {"iii", clause_json(e.clause_iii)}};
  Json pic{{"pi", class_map_json(pi.pi)},
           {"lemma", clause_json(pi.lemma)},
           {"corollary", clause_json(pi.corollary)},
           {"matches_clause_i", pi.matches_clause_i},
           {"ok", pi.ok()}};
  return Json{{"sizes", sizes},
              {"kernel_neutral", neutral},
              {"maps", maps},
              {"clauses", clauses},
              {"pi_corollary", pic},
              {"theorem_ok", e.ok()},
              {"ok", e.ok() && pi.ok()}};
}

Json serre_report(const SerreReport& s) {
  Json zeta{{"h1_g", s.zeta.h1_g}, {"map", s.zeta.map}, {"well_defined", s.zeta.well_defined}, {"surjective", s.zeta.surjective}};
  Json lambdas = Json::array();
  for (const auto& l : s.lambdas)
    lambdas.push_back(Json{{"psi", l.psi},
                           {"h1_class", l.h1_class},
                           {"twisted_classes", l.twisted_classes},
                           {"image", l.image},
                           {"injective", l.injective},
                           {"onto_fiber", l.onto_fiber},
                           {"neutral_iff_zero", l.neutral_iff_zero},
                           {"ok", l.ok()}});
  Json rows = Json::array();
  for (const auto& r : s.rows)
    rows.push_back(Json{{"h1_class", r.h1_class},
                        {"lifts", r.lifts},
                        {"delta_s_zero", r.delta_s_zero},
                        {"image_formula", r.image_formula},
                        {"ok", r.ok()}});
  return Json{{"zeta", zeta}, {"lambdas", lambdas}, {"rows", rows}, {"ok", s.ok()}};
}

}  // namespace nacoh
