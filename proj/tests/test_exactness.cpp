#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace nacoh;

namespace {

// Is the extension class of the lift b over c zero in H^2 of A with the
// twisted action s.a = b_s ^s a b_s^-1? Computed from B's table alone.
bool lift_class_is_zero(const ShortExactSequence& ses, const std::vector<Elem>& b) {
  const auto& B = *ses.B().group();
  const auto& A = *ses.A().group();
  const auto& gamma = *ses.A().gamma();
  const std::size_t n = gamma.order(), na = A.order();
  auto twisted = [&](std::size_t s, Elem a) { return ses.i_inverse(B.conj(b[s], ses.B().act(s, ses.i()(a)))); };
  std::vector<Elem> u(n * n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      u[s * n + t] = ses.i_inverse(B.mul(B.mul(b[s], ses.B().act(s, b[t])), B.inv(b[gamma.mul(s, t)])));
  std::set<std::vector<Elem>> b2;
  std::vector<Elem> w(n, 0);
  do {
    std::vector<Elem> d(n * n);
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t)
        d[s * n + t] = A.mul(A.mul(twisted(s, w[t]), w[s]), A.inv(w[gamma.mul(s, t)]));
    b2.insert(d);
  } while (oracle::next_tuple(w, na));
  return b2.count(u) > 0;
}

}  // namespace

TEST_SUITE("exactness") {

TEST_CASE("exact sequence holds class by class on the corpus") {
  for (const auto& name : fixtures::corpus()) {
    CAPTURE(name);
    auto ses = fixtures::corpus_ses(name);
    auto h = ses_cohomology(ses);
    auto r = verify_exactness_theorem(ses, h);
    CHECK(r.maps_well_defined());
    CHECK(r.delta.witnesses.empty());
    CHECK(r.clause_i.ok());
    CHECK(r.clause_ii.ok());
    CHECK(r.clause_iii.ok());
    CHECK(r.h1_c == oracle::h1_count(ses.C()));
    CHECK(r.h1_b == oracle::h1_count(ses.B()));
  }
}

TEST_CASE("Z2 -> Z4 -> Z2 checkpoints") {
  auto ses = fixtures::corpus_ses("z2_z4_z2_gamma_z2");
  auto h = ses_cohomology(ses);
  auto r = verify_exactness_theorem(ses, h);
  CHECK(r.h1_c == 2);
  std::set<std::size_t> image(r.j_h1.image.begin(), r.j_h1.image.end());
  CHECK(image.size() == 1);
  const std::size_t triv = h.h1_c.trivial_class();
  for (std::size_t c = 0; c < r.h1_c; ++c) CHECK(h.kernel.flags[r.delta.image[c]].neutral == (c == triv));
}

TEST_CASE("delta does not depend on the lift") {
  auto ses = fixtures::corpus_ses("z3_s3_z2_gamma_z2_inner");
  auto h = ses_cohomology(ses);
  auto d = delta_well_defined_check(ses, h);
  CHECK(d.ok);
  // every cocycle times every choice of lift
  CHECK(d.paths >= h.h1_c.cocycles.size());
  for (const auto& c : h.h1_c.cocycles) {
    auto b = least_lift(ses, c.values);
    auto z = delta_cocycle(ses, h.modules, b);
    CHECK(is_cocycle2_crossed(*h.modules.kernel, z).ok);
  }
  CHECK_THROWS_AS(delta(ses, h, std::vector<Elem>{1, 1}), Error);
}

TEST_CASE("pi corollary matches the lifting table") {
  for (const auto& name : fixtures::corpus()) {
    CAPTURE(name);
    auto ses = fixtures::corpus_ses(name);
    auto r = verify_pi_corollary(ses);
    CHECK(r.pi.well_defined);
    CHECK(r.lemma.ok());
    CHECK(r.corollary.ok());
    CHECK(r.matches_clause_i);
  }
}

TEST_CASE("Serre comparison on abelian kernels") {
  for (const auto& name : fixtures::corpus()) {
    CAPTURE(name);
    auto ses = fixtures::corpus_ses(name);
    auto h = ses_cohomology(ses);
    auto r = verify_serre_criterion(ses, h);
    CHECK(r.zeta.well_defined);
    CHECK(r.zeta.surjective);
    for (const auto& row : r.rows) CHECK(row.ok());
    for (const auto& l : r.lambdas) {
      CHECK(l.onto_fiber);
      CHECK(l.neutral_iff_zero);
    }
  }
}

TEST_CASE("delta_S against an independent coboundary scan") {
  for (const auto& name : fixtures::corpus()) {
    CAPTURE(name);
    auto ses = fixtures::corpus_ses(name);
    auto h = ses_cohomology(ses);
    for (const auto& c : h.h1_c.cocycles) {
      auto s = delta_serre(ses, h.modules, c.values);
      CHECK(s.zero == lift_class_is_zero(ses, least_lift(ses, c.values)));
    }
  }
  // Z4: the nontrivial class does not lift and its obstruction is nonzero
  auto z4 = fixtures::corpus_ses("z2_z4_z2_gamma_z2");
  auto hz = ses_cohomology(z4);
  CHECK_FALSE(delta_serre(z4, hz.modules, std::vector<Elem>{0, 1}).zero);
  CHECK(delta_serre(z4, hz.modules, std::vector<Elem>{0, 0}).zero);
  // S3: every obstruction vanishes
  auto s3 = fixtures::corpus_ses("z3_s3_z2_gamma_z2");
  auto hs = ses_cohomology(s3);
  for (const auto& c : hs.h1_c.cocycles) CHECK(delta_serre(s3, hs.modules, c.values).zero);
  CHECK(oracle::abelian_h2(fixtures::trivial("Z2", "Z2")).h2() == 2);
}

// G = (Inn S3)|_A3 = Aut Z3 fixes the trivial psi and inverts u, so the
// three classes of H^2(Z3, Z3) fall into two thin classes.
TEST_CASE("lambda_psi identifies classes swapped by the stabilizer of psi") {
  auto ses = fixtures::corpus_ses("z3_s3_z2_gamma_z3");
  auto h = ses_cohomology(ses);
  auto r = verify_serre_criterion(ses, h);
  REQUIRE(r.lambdas.size() == 1);
  const auto& l = r.lambdas.front();
  CHECK(l.twisted_classes == oracle::abelian_h2(fixtures::trivial("Z3", "Z3")).h2());
  CHECK(l.twisted_classes == 3);
  CHECK(h.restricted.size() == oracle::orbit_count(*h.modules.restricted, [&] {
          std::vector<oracle::Code> all;
          for (const auto& z : h.restricted.cocycles) all.push_back(z.encode());
          return all;
        }(), true));
  CHECK(h.restricted.size() == 2);
  CHECK_FALSE(l.injective);
  CHECK(l.onto_fiber);
  CHECK_FALSE(r.ok());
}

TEST_CASE("Serre functions need an abelian kernel") {
  auto a = fixtures::trivial("Z2", "S3");
  auto b = trivial_gamma_group(cyclic_group(2), direct_product(symmetric_group(3), cyclic_group(2)));
  auto c = fixtures::trivial("Z2", "Z2");
  ShortExactSequence ses(a, b, c, GroupHom(a.group(), b.group(), {0, 2, 4, 6, 8, 10}),
                         GroupHom(b.group(), c.group(), {0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}));
  CHECK(verify_exactness_theorem(ses).ok());
  try {
    verify_serre_criterion(ses);
    FAIL("expected NotAbelian");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAbelian);
  }
}

TEST_CASE("sequence validation") {
  auto a = fixtures::trivial("Z2", "Z2");
  auto b = fixtures::trivial("Z2", "Z4");
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code([&] { ShortExactSequence(a, b, a, GroupHom::trivial(a.group(), b.group()), GroupHom(b.group(), a.group(), {0, 1, 0, 1})); }) ==
        ErrorCode::NotInjective);
  CHECK(code([&] { ShortExactSequence(a, b, a, GroupHom(a.group(), b.group(), {0, 2}), GroupHom::trivial(b.group(), a.group())); }) ==
        ErrorCode::NotSurjective);
  auto v = fixtures::trivial("Z2", "Z2xZ2");
  CHECK(code([&] { ShortExactSequence(a, v, a, GroupHom(a.group(), v.group(), {0, 1}), GroupHom(v.group(), a.group(), {0, 1, 0, 1})); }) ==
        ErrorCode::ImageKernelMismatch);
}

}
