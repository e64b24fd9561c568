#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace nacoh;

namespace {

std::vector<oracle::Code> codes(const Z2Enumeration& z) {
  std::vector<oracle::Code> out;
  for (const auto& c : z.cocycles) out.push_back(c.encode());
  return out;
}

// Crossed modules with Gamma = Z2, |A| <= 3, |G| <= 2.
std::vector<std::pair<std::string, CrossedModulePtr>> small_modules() {
  std::vector<std::pair<std::string, CrossedModulePtr>> out;
  auto z2 = cyclic_group(2);
  for (const char* a : {"Z1", "Z2", "Z3"}) {
    auto x = fixtures::trivial("Z2", a);
    out.emplace_back(std::string(a) + "->1", trivial_crossed_module(x));
    out.emplace_back(std::string(a) + "->Inn", inn_crossed_module(x));
    out.emplace_back(std::string(a) + "->Aut", aut_crossed_module(x));
  }
  auto inv = fixtures::z3_inversion();
  out.emplace_back("Z3 inverted->1", trivial_crossed_module(inv));
  out.emplace_back("Z3 inverted->Aut", aut_crossed_module(inv));
  // Z2 -> Z2 identity, trivial actions
  auto a = fixtures::trivial("Z2", "Z2");
  out.emplace_back("Z2->Z2", validate_crossed_module(a, a, GroupHom::identity(z2),
                                                     GroupHom::trivial(z2, a.aut()->carrier())));
  return out;
}

}  // namespace

TEST_SUITE("cohomology") {

TEST_CASE("Z2 enumeration agrees with the unpruned product scan") {
  for (const auto& [name, m] : small_modules()) {
    CAPTURE(name);
    REQUIRE(m->G().order() <= 2);
    CHECK(codes(enumerate_z2_crossed(*m)) == oracle::z2_full_scan(*m));
    CHECK(codes(enumerate_z2_crossed_serial(*m)) == oracle::z2_full_scan(*m));
  }
  // and on the grid where the scan is affordable
  for (const auto& c : fixtures::grid()) {
    auto m = inn_crossed_module(c.a);
    if (z2_space_size(*m) > 2e6) continue;
    CAPTURE(c.name);
    CHECK(codes(enumerate_z2_crossed(*m)) == oracle::z2_full_scan(*m));
  }
}

TEST_CASE("thick and thin class counts match whole-group orbit scans") {
  for (const auto& c : fixtures::grid()) {
    CAPTURE(c.name);
    auto m = inn_crossed_module(c.a);
    auto z = enumerate_z2_crossed(*m);
    auto all = codes(z);
    CHECK(h2_classes(*m, z, H2Kind::thick).size() == oracle::orbit_count(*m, all, false));
    CHECK(h2_classes(*m, z, H2Kind::thin).size() == oracle::orbit_count(*m, all, true));
  }
  for (const auto& [name, m] : small_modules()) {
    CAPTURE(name);
    auto z = enumerate_z2_crossed(*m);
    CHECK(h2_classes(*m, z, H2Kind::thin).size() == oracle::orbit_count(*m, codes(z), true));
  }
}

TEST_CASE("abelian H2 matches brute force and thin H2(A -> 1)") {
  std::vector<fixtures::Case> cases;
  for (const auto& c : fixtures::grid())
    if (c.a.group()->is_abelian()) cases.push_back(c);
  for (const auto& c : cases) {
    CAPTURE(c.name);
    auto h = h2_abelian(c.a);
    auto o = oracle::abelian_h2(c.a);
    CHECK(h.cocycles.size() == o.z2);
    CHECK(h.coboundaries == o.b2);
    CHECK(h.size() == o.h2());
    CHECK(h2_quotient(*trivial_crossed_module(c.a), H2Kind::thin).size() == h.size());
    // representatives multiply like a group
    for (std::size_t x = 0; x < h.size(); ++x) CHECK(h.product[h.zero_class * h.size() + x] == x);
  }
  CHECK_THROWS_AS(h2_abelian(fixtures::trivial("Z2", "S3")), Error);
}

TEST_CASE("known H2 values") {
  // H^2(Z2, Z2) = Z2; H^2(Z2, Z3) = 0; H^2(Z3, Z3) = Z3; H^2(Z2, Z4) = Z2
  CHECK(h2_abelian(fixtures::trivial("Z2", "Z2")).size() == 2);
  CHECK(h2_abelian(fixtures::trivial("Z2", "Z3")).size() == 1);
  CHECK(h2_abelian(fixtures::trivial("Z3", "Z3")).size() == 3);
  CHECK(h2_abelian(fixtures::trivial("Z2", "Z4")).size() == 2);
  CHECK(h2_abelian(fixtures::trivial("Z2", "Z2xZ2")).size() == 4);
  auto h = h2_quotient(*trivial_crossed_module(fixtures::trivial("Z2", "Z2")), H2Kind::thin);
  CHECK(h.size() == 2);
  CHECK(h.neutral_count() == 1);
  CHECK(h.flags[h.unit_class()].unit);
}

TEST_CASE("lambda is bijective and the second proof identity holds") {
  for (const auto& c : fixtures::grid()) {
    CAPTURE(c.name);
    auto r = lambda_map(c.a);
    CHECK(r.cocycle_bijection);
    CHECK(r.thick_bijection);
    CHECK(r.flags_preserved);
    CHECK(r.bijective());
    CHECK(r.second_proof_checks > 0);
    CHECK(r.second_proof_violations == 0);
  }
}

TEST_CASE("center action is simply transitive and mu is bijective") {
  for (const char* a : {"Z2", "Z4", "Z2xZ2", "S3"}) {
    CAPTURE(a);
    auto r = center_h2_action(fixtures::trivial("Z2", a));
    CHECK(r.well_defined);
    CHECK(r.simply_transitive);
    CHECK(r.mu_bijective);
    CHECK(r.iota_bijective);
    CHECK(r.center_matches_crossed);
    CHECK(r.lambda_equivariant);
  }
}

TEST_CASE("kappa is surjective and respects flags") {
  for (const auto& c : fixtures::grid()) {
    CAPTURE(c.name);
    auto m = inn_crossed_module(c.a);
    auto z = enumerate_z2_crossed(*m);
    auto k = kappa(h2_classes(*m, z, H2Kind::thick), h2_classes(*m, z, H2Kind::thin));
    CHECK(k.well_defined);
    CHECK(k.surjective);
    CHECK(k.preserves_neutral);
    CHECK(k.preserves_unit);
  }
}

TEST_CASE("parallel kernels match the serial reference") {
  for (const auto& c : fixtures::grid()) {
    CAPTURE(c.name);
    auto m = inn_crossed_module(c.a);
    auto serial = enumerate_z2_crossed_serial(*m);
    for (int jobs : {1, 2, 8}) {
      auto par = enumerate_z2_crossed(*m, SearchOptions{kDefaultBudget, jobs});
      CHECK(codes(par) == codes(serial));
      for (auto kind : {H2Kind::thick, H2Kind::thin}) {
        auto a = h2_classes(*m, serial, kind, 1);
        auto b = h2_classes(*m, par, kind, jobs);
        CHECK(a.partition.class_of == b.partition.class_of);
        CHECK(a.partition.members == b.partition.members);
      }
    }
    auto k1 = enumerate_z2_kernel(c.a, SearchOptions{kDefaultBudget, 1});
    auto k8 = enumerate_z2_kernel(c.a, SearchOptions{kDefaultBudget, 8});
    CHECK(k1.cocycles == k8.cocycles);
  }
}

TEST_CASE("orbit partition: serial and union-find agree") {
  // Z12 codes of width 1, generators +3 and +4 give one orbit; +4 alone three.
  std::vector<std::vector<Elem>> raw;
  for (Elem k = 0; k < 12; ++k) raw.push_back({k});
  CodeIndex idx(1, raw);
  MoveFn move = [](std::size_t g, std::span<const Elem> in, std::span<Elem> out) {
    out[0] = (in[0] + (g == 0 ? 4 : 3)) % 12;
  };
  auto one = orbit_partition_serial(idx, 1, move);
  CHECK(one.size() == 4);
  CHECK(one.members[1] == std::vector<std::size_t>{1, 5, 9});
  CHECK(orbit_partition(idx, 1, move, 4).members == one.members);
  CHECK(orbit_partition(idx, 2, move, 4).size() == 1);
  MoveFn escape = [](std::size_t, std::span<const Elem> in, std::span<Elem> out) { out[0] = in[0] + 100; };
  CHECK_THROWS_AS(orbit_partition_serial(idx, 1, escape), Error);
  CHECK_THROWS_AS(orbit_partition(idx, 1, escape, 4), Error);
}

TEST_CASE("budget overruns are errors with a size estimate") {
  auto m = inn_crossed_module(fixtures::trivial("Z3", "S3"));
  for (int jobs : {1, 4}) {
    try {
      enumerate_z2_crossed(*m, SearchOptions{50, jobs});
      FAIL("budget not enforced");
    } catch (const BudgetExceeded& e) {
      CHECK(e.budget() == 50);
      CHECK(e.estimated_space() == doctest::Approx(z2_space_size(*m)));
    }
  }
  CHECK_THROWS_AS(h1_classes(fixtures::trivial("Z3", "S3"), SearchOptions{1, 1}), BudgetExceeded);
}

}
