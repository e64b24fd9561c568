// Prints one PASS/FAIL line per acceptance criterion.
//   acceptance [path-to-nacoh-cli]
// Exit status is 0 only if every criterion passes.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "nacoh/report.hpp"
#include "oracles.hpp"

using namespace nacoh;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (!pass) detail << "; ";
    else detail.str("");
    pass = false;
    detail << what;
  }
};

using Check = Verdict (*)();

Verdict closure() {
  Verdict v;
  std::size_t checks = 0;
  for (const auto& c : fixtures::grid()) {
    auto m = inn_crossed_module(c.a);
    auto z2 = enumerate_z2_crossed(*m);
    const std::size_t n = m->gamma_order(), na = m->a_group().order(), ng = m->g_group().order();
    std::vector<Elem> w(n, 0);
    std::size_t local = 0;
    do {
      for (const auto& z : z2.cocycles) {
        local += !is_cocycle2_crossed(*m, act_w(*m, w, z)).ok;
        for (Elem g = 0; g < static_cast<Elem>(ng); ++g) {
          local += !is_cocycle2_crossed(*m, act_c1(*m, C1Element{w, g}, z)).ok;
          checks += 2;
        }
        ++checks;
      }
    } while (oracle::next_tuple(w, na));
    for (const auto& z : z2.cocycles)
      for (Elem g = 0; g < static_cast<Elem>(ng); ++g, ++checks) local += !is_cocycle2_crossed(*m, act_g(*m, g, z)).ok;
    if (local) v.fail(c.name + ": " + std::to_string(local) + " non-cocycles");
  }
  if (v.pass) v.detail << checks << " action outputs over " << fixtures::grid().size() << " coefficient cases, 0 violations";
  return v;
}

Verdict action_laws() {
  Verdict v;
  std::size_t checks = 0;
  for (const auto& c : fixtures::grid()) {
    auto m = inn_crossed_module(c.a);
    auto z2 = enumerate_z2_crossed(*m);
    const std::size_t n = m->gamma_order();
    std::vector<C1Element> gens;
    for (std::size_t s = 0; s < n; ++s)
      for (Elem a : m->a_group().generators()) {
        C1Element e = c1_identity(*m);
        e.w[s] = a;
        gens.push_back(e);
      }
    for (Elem g = 1; g < static_cast<Elem>(m->g_group().order()); ++g)
      gens.push_back(C1Element{std::vector<Elem>(n, 0), g});
    std::size_t bad = 0;
    const C1Element one = c1_identity(*m);
    for (const auto& z : z2.cocycles) {
      bad += act_c1(*m, one, z) != z;
      ++checks;
      for (const auto& x : gens) {
        bad += act_g(*m, x.g, act_w(*m, x.w, z)) != act_w(*m, g_star_w(*m, x.g, x.w), act_g(*m, x.g, z));
        ++checks;
        for (const auto& y : gens) {
          bad += act_c1(*m, x, act_c1(*m, y, z)) != act_c1(*m, c1_multiply(*m, x, y), z);
          ++checks;
        }
      }
    }
    if (bad) v.fail(c.name + ": " + std::to_string(bad) + " law violations");
  }
  if (v.pass) v.detail << checks << " identity/associativity/compatibility checks, 0 violations";
  return v;
}

Verdict lambda_bijection() {
  Verdict v;
  std::uint64_t proofs = 0;
  for (const auto& c : fixtures::grid()) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = lambda_map(c.a);
    proofs += r.second_proof_checks;
    if (!r.ok()) v.fail(c.name + ": lambda not bijective or identity violated");
    if (std::chrono::steady_clock::now() - t0 > std::chrono::minutes(5)) v.fail(c.name + ": over 5 minutes");
  }
  if (v.pass) v.detail << "lambda bijective on " << fixtures::grid().size() << " cases; " << proofs << " second-proof identities hold";
  return v;
}

Verdict center_action() {
  Verdict v;
  for (const char* a : {"Z2", "Z4", "Z2xZ2", "S3"}) {
    auto r = center_h2_action(fixtures::trivial("Z2", a));
    if (!r.ok()) v.fail(std::string(a) + ": action or mu fails");
  }
  if (v.pass) v.detail << "simply transitive, mu bijective for Z2, Z4, Z2xZ2, S3 (Gamma = Z2)";
  return v;
}

Verdict exactness() {
  Verdict v;
  for (const auto& name : fixtures::corpus()) {
    auto ses = fixtures::corpus_ses(name);
    if (!verify_exactness_theorem(ses).ok()) v.fail(name + ": clause violated");
  }
  auto ses = fixtures::corpus_ses("z2_z4_z2_gamma_z2");
  auto h = ses_cohomology(ses);
  auto r = verify_exactness_theorem(ses, h);
  std::set<std::size_t> image(r.j_h1.image.begin(), r.j_h1.image.end());
  std::size_t neutral = 0;
  bool trivial_neutral = h.kernel.flags[r.delta.image[h.h1_c.trivial_class()]].neutral;
  for (std::size_t c = 0; c < r.h1_c; ++c) neutral += h.kernel.flags[r.delta.image[c]].neutral;
  if (r.h1_c != 2 || image.size() != 1 || neutral != 1 || !trivial_neutral) v.fail("Z2->Z4->Z2 checkpoints");
  if (v.pass) v.detail << "clauses (i)-(iii) hold on " << fixtures::corpus().size() << " sequences; Z4 checkpoints |H1(C)|=2, |im j*|=1, one neutral";
  return v;
}

Verdict pi_corollary() {
  Verdict v;
  for (const auto& name : fixtures::corpus())
    if (!verify_pi_corollary(fixtures::corpus_ses(name)).ok()) v.fail(name + ": neutrality transfer or lifting table differs");
  if (v.pass) v.detail << "lemma and corollary tables agree with clause (i) on every sequence";
  return v;
}

Verdict serre() {
  Verdict v;
  for (const auto& name : fixtures::corpus()) {
    auto ses = fixtures::corpus_ses(name);
    auto h = ses_cohomology(ses);
    auto r = verify_serre_criterion(ses, h);
    if (!r.zeta.surjective) v.fail(name + ": zeta not surjective");
    for (const auto& row : r.rows)
      if (!row.ok()) v.fail(name + ": lifting vs delta_S row " + std::to_string(row.h1_class));
    for (const auto& l : r.lambdas) {
      if (!l.injective)
        v.fail(name + ": lambda_psi not injective (" + std::to_string(l.twisted_classes) + " classes onto " +
               std::to_string(std::set<std::size_t>(l.image.begin(), l.image.end()).size()) + ")");
      if (!l.onto_fiber) v.fail(name + ": lambda_psi not onto its fiber");
      if (!l.neutral_iff_zero) v.fail(name + ": neutral vs zero");
    }
  }
  if (oracle::abelian_h2(fixtures::trivial("Z2", "Z2")).h2() != 2) v.fail("|H2(Z2,Z2)| != 2");
  auto z4 = fixtures::corpus_ses("z2_z4_z2_gamma_z2");
  auto hz = ses_cohomology(z4);
  if (delta_serre(z4, hz.modules, std::vector<Elem>{0, 1}).zero) v.fail("delta_S vanishes for Z4");
  auto s3 = fixtures::corpus_ses("z3_s3_z2_gamma_z2");
  auto hs = ses_cohomology(s3);
  for (const auto& c : hs.h1_c.cocycles)
    if (!delta_serre(s3, hs.modules, c.values).zero) v.fail("delta_S nonzero for S3");
  if (v.pass) v.detail << "lifting iff delta_S = 0, image formula, zeta onto, lambda_psi bijective on every abelian-kernel sequence";
  return v;
}

Verdict oracles() {
  Verdict v;
  std::size_t n = 0;
  for (int k = 1; k <= 6; ++k) {
    auto g = cyclic_group(k);
    auto aut = compute_aut(g);
    auto ref = oracle::automorphisms(*g);
    bool same = aut->carrier()->order() == ref.size();
    for (std::size_t a = 0; same && a < ref.size(); ++a) same = aut->realize(static_cast<Elem>(a)) == ref[a];
    if (!same) v.fail("Aut Z" + std::to_string(k));
    ++n;
  }
  for (const char* name : {"Z2xZ2", "S3"}) {
    auto g = standard_group_by_name(name);
    auto aut = compute_aut(g);
    auto ref = oracle::automorphisms(*g);
    bool same = aut->carrier()->order() == ref.size();
    for (std::size_t a = 0; same && a < ref.size(); ++a) same = aut->realize(static_cast<Elem>(a)) == ref[a];
    if (!same) v.fail(std::string("Aut ") + name);
    ++n;
  }
  std::vector<CrossedModulePtr> mods;
  for (const char* a : {"Z1", "Z2", "Z3"}) {
    auto x = fixtures::trivial("Z2", a);
    mods.push_back(trivial_crossed_module(x));
    mods.push_back(inn_crossed_module(x));
    mods.push_back(aut_crossed_module(x));
  }
  mods.push_back(trivial_crossed_module(fixtures::z3_inversion()));
  mods.push_back(aut_crossed_module(fixtures::z3_inversion()));
  for (const auto& m : mods) {
    std::vector<oracle::Code> got;
    for (const auto& z : enumerate_z2_crossed(*m).cocycles) got.push_back(z.encode());
    if (got != oracle::z2_full_scan(*m)) v.fail("Z2 scan differs for " + m->label());
    ++n;
  }
  for (const auto& c : fixtures::grid()) {
    if (!c.a.group()->is_abelian()) continue;
    auto h = h2_abelian(c.a);
    if (h.size() != oracle::abelian_h2(c.a).h2()) v.fail("abelian H2 vs scan for " + c.name);
    if (h.size() != h2_quotient(*trivial_crossed_module(c.a), H2Kind::thin).size()) v.fail("abelian H2 vs thin for " + c.name);
    ++n;
  }
  if (v.pass) v.detail << n << " oracle comparisons, 0 discrepancies";
  return v;
}

std::string cli_output(const std::string& command, int& status) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
  status = pclose(pipe.release());
  return out;
}

std::string cli_path;

Verdict determinism() {
  Verdict v;
  const std::string data = fixtures::data_dir();
  std::vector<std::string> invocations;
  const std::string gamma_inputs[] = {data + "/examples/z3_inversion.json", data + "/examples/z4_gamma_z2.json"};
  for (const auto& g : gamma_inputs)
    for (const char* cmd : {"z1", "h1", "h2-kernel", "lambda-check", "h2-abelian"})
      invocations.push_back(std::string(cmd) + " --group " + g);
  for (const char* m : {"z2_trivial_module.json", "s3_inn_module.json"}) {
    invocations.push_back("z2 --coefficients " + data + "/examples/" + m);
    invocations.push_back("h2 --kind thick --coefficients " + data + "/examples/" + m);
    invocations.push_back("h2 --kind thin --coefficients " + data + "/examples/" + m);
    invocations.push_back("validate " + data + "/examples/" + m);
  }
  for (const auto& name : fixtures::corpus()) {
    const std::string ses = " --ses " + data + "/corpus/" + name + ".json";
    invocations.push_back("verify-exactness" + ses);
    invocations.push_back("serre-check" + ses);
    invocations.push_back("delta" + ses + " --cocycle " + data + "/examples/c_nontrivial.json");
  }
  invocations.push_back("report-all --corpus " + data + "/corpus");

  if (cli_path.empty()) {
    v.fail("no CLI path given");
    return v;
  }
  for (const auto& inv : invocations) {
    int s1 = 0, s2 = 0, s8 = 0;
    auto a = cli_output(cli_path + " --jobs 1 " + inv + " 2>&1", s1);
    auto b = cli_output(cli_path + " --jobs 1 " + inv + " 2>&1", s2);
    auto c = cli_output(cli_path + " --jobs 8 " + inv + " 2>&1", s8);
    if (a.empty() || a != b || a != c || s1 != s2 || s1 != s8) v.fail("differs: " + inv);
  }
  if (v.pass) v.detail << invocations.size() << " CLI reports byte-identical across two runs and --jobs 1 vs 8";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) cli_path = argv[1];
  const std::array<Check, 9> checks{closure, action_laws, lambda_bijection, center_action, exactness,
                                    pi_corollary, serre, oracles, determinism};
  bool all = true;
  for (std::size_t k = 0; k < checks.size(); ++k) {
    Verdict v;
    try {
      v = checks[k]();
    } catch (const std::exception& e) {
      v.fail(std::string("error: ") + e.what());
    }
    all = all && v.pass;
    std::cout << "criterion " << k + 1 << ": " << (v.pass ? "PASS" : "FAIL") << "  " << v.detail.str() << std::endl;
  }
  return all ? 0 : 1;
}
