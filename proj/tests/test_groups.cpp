#include <doctest.h>

#include "oracles.hpp"
#include "nacoh/io.hpp"

using namespace nacoh;

TEST_SUITE("groups") {

TEST_CASE("cyclic groups") {
  CHECK(cyclic_group(1)->order() == 1);
  auto z4 = cyclic_group(4);
  for (Elem i = 0; i < 4; ++i)
    for (Elem j = 0; j < 4; ++j) CHECK(z4->mul(i, j) == (i + j) % 4);
  CHECK(z4->is_abelian());
  CHECK(z4->element_order(1) == 4);
}

TEST_CASE("symmetric group numbering and orders") {
  auto s3 = symmetric_group(3);
  CHECK(s3->order() == 6);
  CHECK_FALSE(s3->is_abelian());
  // 1 = 021 and 2 = 102 are transpositions; 3 = 120 is a 3-cycle
  CHECK(s3->element_order(1) == 2);
  CHECK(s3->element_order(2) == 2);
  CHECK(s3->element_order(3) == 3);
  CHECK(s3->closure(std::vector<Elem>{3}) == std::vector<Elem>{0, 3, 4});
}

TEST_CASE("quaternion and dihedral") {
  auto q8 = quaternion_group();
  CHECK(q8->order() == 8);
  CHECK(compute_center(q8).group->order() == 2);
  auto d4 = dihedral_group(4);
  CHECK(d4->order() == 8);
  CHECK(compute_center(d4).group->order() == 2);
  CHECK(compute_aut(q8)->carrier()->order() == 24);
}

TEST_CASE("standard names") {
  CHECK(standard_group_by_name("Z2xZ2")->order() == 4);
  CHECK_FALSE(standard_group_by_name("Z2xZ2")->generators().size() == 1);
  CHECK(standard_group_by_name("C5")->order() == 5);
  CHECK(standard_group_by_name("Q8")->order() == 8);
  CHECK(standard_group_by_name("nope") == nullptr);
}

TEST_CASE("Aut agrees with a full bijection scan for |A| <= 6") {
  std::vector<GroupPtr> groups;
  for (int n = 1; n <= 6; ++n) groups.push_back(cyclic_group(n));
  groups.push_back(standard_group_by_name("Z2xZ2"));
  groups.push_back(symmetric_group(3));
  for (const auto& g : groups) {
    CAPTURE(g->order());
    auto aut = compute_aut(g);
    auto expected = oracle::automorphisms(*g);
    REQUIRE(aut->carrier()->order() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) CHECK(aut->realize(static_cast<Elem>(k)) == expected[k]);
  }
}

TEST_CASE("Aut, Inn and Out of small groups") {
  auto s3 = compute_aut(symmetric_group(3));
  CHECK(s3->inn_subgroup().size() == 6);
  CHECK(outer_automorphisms(*s3).group->order() == 1);
  auto v4 = compute_aut(standard_group_by_name("Z2xZ2"));
  CHECK(v4->carrier()->order() == 6);
  CHECK(inner_automorphisms(*v4).group->order() == 1);
  CHECK(outer_automorphisms(*v4).group->order() == 6);
}

TEST_CASE("restricted Inn of A3 in S3") {
  auto s3 = symmetric_group(3);
  auto sub = make_subgroup(s3, std::vector<Elem>{0, 3, 4}, "A3");
  auto r = restricted_inn_group(sub.embedding);
  CHECK(r.restricted.group->order() == 2);
  CHECK(r.collisions.size() == 3);
  CHECK(r.restriction.is_surjective());
}

TEST_CASE("quotients") {
  auto z4 = cyclic_group(4);
  auto q = quotient_group(z4, std::vector<Elem>{0, 2});
  CHECK(q.group->order() == 2);
  CHECK(q.projection.images() == std::vector<Elem>{0, 1, 0, 1});
  CHECK(is_normal_subgroup(*symmetric_group(3), std::vector<Elem>{0, 3, 4}));
  CHECK_FALSE(is_normal_subgroup(*symmetric_group(3), std::vector<Elem>{0, 1}));
}

TEST_CASE("invalid tables are rejected") {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  // identity not at 0
  CHECK(code_of([] { FiniteGroup("g", 2, {1, 0, 0, 1}); }) == ErrorCode::InvalidGroup);
  // not a latin square
  CHECK(code_of([] { FiniteGroup("g", 2, {0, 1, 1, 1}); }) == ErrorCode::InvalidGroup);
  // latin square, not associative
  CHECK(code_of([] {
          FiniteGroup("g", 5, {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0});
        }) == ErrorCode::InvalidGroup);
  CHECK(code_of([] { symmetric_group(5); }) == ErrorCode::UnsupportedSize);
}

TEST_CASE("invalid homomorphisms are rejected") {
  auto z2 = cyclic_group(2), z3 = cyclic_group(3);
  CHECK_THROWS_AS(GroupHom(z3, z2, {0, 1, 1}), Error);
  CHECK_THROWS_AS(GroupHom(z2, z3, {0}), Error);
  GroupHom ok(cyclic_group(4), z2, {0, 1, 0, 1});
  CHECK(ok.kernel() == std::vector<Elem>{0, 2});
  CHECK(ok.is_surjective());
  CHECK_FALSE(ok.is_injective());
}

}
