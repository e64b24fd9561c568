#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "nacoh/report.hpp"

using namespace nacoh;
namespace fs = std::filesystem;

namespace {

std::string examples(const char* f) { return fixtures::data_dir() + "/examples/" + f; }
std::string corpus_file(const std::string& f) { return fixtures::data_dir() + "/corpus/" + f + ".json"; }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

fs::path scratch(const char* name) {
  auto dir = fs::temp_directory_path() / ("nacoh-test-" + std::to_string(::getpid())) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("group files") {
  auto g = Loader(examples("z4.json")).group();
  CHECK(g->order() == 4);
  CHECK(*g == *cyclic_group(4));
  CHECK(Loader(examples("z4.json")).detect() == InputKind::group);
}

TEST_CASE("non-associative table names the triple") {
  auto msg = message_of([] { Loader(examples("bad_table.json")).group(); });
  CHECK(code_of([] { Loader(examples("bad_table.json")).group(); }) == ErrorCode::ValidationError);
  CHECK(msg.find("triple") != std::string::npos);
  CHECK(msg.find("bad_table.json") != std::string::npos);
}

TEST_CASE("unresolved references are parse errors") {
  CHECK(code_of([] { Loader(examples("missing_ref.json")).ses(); }) == ErrorCode::ParseError);
  CHECK(message_of([] { Loader(examples("missing_ref.json")).ses(); }).find("no_such_group") != std::string::npos);
  CHECK(code_of([] { Loader(examples("nope.json")); }) == ErrorCode::ParseError);
  Loader bad(Json::parse(R"({"gamma": "Z2"})"), ".", "inline");
  CHECK(code_of([&] { bad.gamma_group(); }) == ErrorCode::ParseError);
}

TEST_CASE("sibling files resolve by name") {
  auto x = Loader(examples("z4_gamma_z2.json")).gamma_group();
  CHECK(x.order() == 4);
  CHECK(x.is_trivial());
}

TEST_CASE("inline objects, local maps and standard names") {
  Json doc = Json::parse(R"({
    "groups": {"V": {"order": 4, "table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]}},
    "gamma_groups": {"A": {"gamma": "Z2", "group": "V", "action": [[0,1,2,3],[0,2,1,3]]}},
    "module": "aut", "A": "A"})");
  Loader in(doc, ".", "inline");
  CHECK(in.detect() == InputKind::crossed_module);
  auto m = in.crossed_module();
  CHECK(m->G().order() == 6);
  CHECK_FALSE(m->A().is_trivial());
}

TEST_CASE("explicit crossed module files are validated") {
  Json good = Json::parse(R"({"A": {"gamma": "Z2", "group": "Z3"}, "G": {"gamma": "Z2", "group": "Z2"},
                              "rho": [0, 0, 0], "action": [[0,1,2],[0,2,1]]})");
  CHECK(Loader(good, ".", "good").crossed_module()->G().order() == 2);
  Json bad = good;
  bad["rho"] = {0, 1, 1};
  CHECK(code_of([&] { Loader(bad, ".", "bad").crossed_module(); }) == ErrorCode::ValidationError);
  Json notaut = good;
  notaut["action"] = {{0, 1, 2}, {0, 1, 1}};
  CHECK(code_of([&] { Loader(notaut, ".", "x").crossed_module(); }) == ErrorCode::NotAnAction);
}

TEST_CASE("cocycle files") {
  CHECK(Loader(examples("c_nontrivial.json")).cocycle1() == std::vector<Elem>{0, 1});
  Loader z(Json::parse(R"({"u": [0,0,0,1], "psi": [0,0]})"), ".", "z");
  CHECK(z.detect() == InputKind::cocycle2);
  CHECK(z.cocycle2().u.size() == 4);
}

TEST_CASE("canonical content hashes follow tables, not names") {
  auto a = Loader(examples("z4.json")).group();
  auto b = cyclic_group(4);
  CHECK(canonical(*a).dump() == canonical(*b).dump());
  CHECK(canonical(*a).dump() != canonical(*standard_group_by_name("Z2xZ2")).dump());
  CHECK(fnv1a("") == 14695981039346656037ull);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("run: example reports") {
  RunConfig cfg;
  Command h2{"h2", examples("z2_trivial_module.json")};
  auto r = run(h2, cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.report["count"] == 2);
  CHECK(r.report["kind"] == "thin");

  Command ex{"verify-exactness"};
  ex.ses = corpus_file("z2_z4_z2_gamma_z2");
  auto e = run(ex, cfg);
  CHECK(e.exit_code == 0);
  CHECK(e.report["ok"] == true);

  Command bad{"validate", examples("missing_ref.json")};
  auto b = run(bad, cfg);
  CHECK(b.exit_code == 2);
  CHECK(b.report["error"]["code"] == "ParseError");
}

TEST_CASE("run: budget overruns exit 2 with the space estimate") {
  RunConfig cfg;
  cfg.budget = 10;
  Command z2{"z2", examples("s3_inn_module.json")};
  auto r = run(z2, cfg);
  CHECK(r.exit_code == 2);
  CHECK(r.report["error"]["code"] == "EnumerationBudgetExceeded");
  CHECK(r.report["error"]["estimated_space"].get<double>() == doctest::Approx(46656.0));
  cfg.budget = 0;
  CHECK(run(z2, cfg).exit_code == 2);
}

TEST_CASE("run: warm cache returns identical bytes") {
  RunConfig cfg;
  cfg.cache_dir = scratch("cache");
  for (const auto& name : fixtures::corpus()) {
    Command c{"verify-exactness"};
    c.ses = corpus_file(name);
    auto cold = run(c, cfg);
    auto warm = run(c, cfg);
    CHECK_FALSE(cold.cache_hit);
    CHECK(warm.cache_hit);
    CHECK(render_json(cold) == render_json(warm));
    CHECK(cold.exit_code == warm.exit_code);
  }
  // a different budget is a different key
  RunConfig other = cfg;
  other.budget = 12345678;
  Command c{"verify-exactness"};
  c.ses = corpus_file("z2_z4_z2_gamma_z2");
  CHECK_FALSE(run(c, other).cache_hit);
}

TEST_CASE("run: content hash, not path, keys the cache") {
  RunConfig cfg;
  cfg.cache_dir = scratch("cache2");
  auto dir = scratch("copy");
  fs::copy_file(corpus_file("z2_z4_z2_gamma_z2"), dir / "renamed.json");
  Command a{"verify-exactness"};
  a.ses = corpus_file("z2_z4_z2_gamma_z2");
  Command b = a;
  b.ses = dir / "renamed.json";
  CHECK_FALSE(run(a, cfg).cache_hit);
  CHECK(run(b, cfg).cache_hit);
  // editing a table changes the key
  auto j = Json::parse(std::ifstream(b.ses));
  j["gamma_groups"]["B"]["group"] = "Z2xZ2";
  j["j"]["images"] = {0, 1, 0, 1};
  std::ofstream(b.ses) << j.dump();
  auto edited = run(b, cfg);
  CHECK_FALSE(edited.cache_hit);
  CHECK(edited.exit_code == 0);
}

TEST_CASE("run: reports do not depend on jobs") {
  for (const auto& name : command_names()) {
    CAPTURE(name);
    Command c{name};
    c.input = examples("s3_inn_module.json");
    c.ses = corpus_file("z3_s3_z2_gamma_z2_inner");
    c.cocycle = examples("c_nontrivial.json");
    c.corpus = fixtures::data_dir() + "/corpus";
    if (name == "z1" || name == "h1" || name == "h2-kernel" || name == "lambda-check" || name == "h2-abelian")
      c.input = examples("z3_inversion.json");
    RunConfig one, eight;
    eight.jobs = 8;
    auto a = run(c, one);
    CHECK(render_json(a) == render_json(run(c, one)));
    CHECK(render_json(a) == render_json(run(c, eight)));
    CHECK(a.exit_code < 2);
  }
}

TEST_CASE("text output summarises") {
  Command h2{"h2", examples("z2_trivial_module.json")};
  auto t = render_text(run(h2, RunConfig{}));
  CHECK(t.find("h2: exit 0") != std::string::npos);
  CHECK(t.find("count = 2") != std::string::npos);
}

}
