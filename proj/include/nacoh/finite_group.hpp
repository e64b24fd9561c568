#pragma once

// Finite groups given by multiplication tables, homomorphisms between them,
// and the automorphism machinery (Aut, Inn, Out) built on top.
//
// Elements are dense indices 0..n-1 with 0 the identity. Automorphisms are
// composed as (alpha * beta)(a) = alpha(beta(a)).

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nacoh/error.hpp"

namespace nacoh {

using Elem = std::int32_t;

struct GroupLimits {
  std::size_t max_order = 24;
};

class FiniteGroup {
 public:
  // Validates closure, identity, associativity and inverses. Errors name the
  // offending element or triple.
  FiniteGroup(std::string name, std::size_t order, std::vector<Elem> table);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return n_; }
  const std::vector<Elem>& table() const noexcept { return table_; }

  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  // g a g^-1
  Elem conj(Elem g, Elem a) const { return mul(mul(g, a), inverse_[g]); }

  std::size_t element_order(Elem a) const { return orders_[a]; }
  bool is_abelian() const noexcept { return abelian_; }

  // Deterministic generating set: greedily picks elements of largest order
  // not yet generated.
  const std::vector<Elem>& generators() const noexcept { return generators_; }

  // Subgroup generated by `gens`, sorted ascending.
  std::vector<Elem> closure(std::span<const Elem> gens) const;

  // Two groups are equal when their tables coincide; names are labels only.
  bool operator==(const FiniteGroup& other) const { return n_ == other.n_ && table_ == other.table_; }

 private:
  std::string name_;
  std::size_t n_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::size_t> orders_;
  std::vector<Elem> generators_;
  bool abelian_ = true;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

class GroupHom {
 public:
  GroupHom(GroupPtr source, GroupPtr target, std::vector<Elem> images);

  static GroupHom identity(const GroupPtr& g);
  static GroupHom trivial(const GroupPtr& source, const GroupPtr& target);

  const GroupPtr& source() const noexcept { return source_; }
  const GroupPtr& target() const noexcept { return target_; }
  const std::vector<Elem>& images() const noexcept { return images_; }

  Elem operator()(Elem x) const { return images_[x]; }

  bool is_injective() const;
  bool is_surjective() const;
  std::vector<Elem> kernel() const;
  std::vector<Elem> image() const;
  // Least preimage of every target element; nullopt where none exists.
  std::vector<std::optional<Elem>> least_preimages() const;

  // (*this) after `first`.
  GroupHom after(const GroupHom& first) const;

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Elem> images_;
};

// A subgroup repackaged as a group in its own right. Elements are numbered
// by ascending parent index, so the identity stays at 0.
struct Subgroup {
  GroupPtr group;
  GroupHom embedding;
};

Subgroup make_subgroup(const GroupPtr& parent, std::span<const Elem> elements, std::string name);

bool is_normal_subgroup(const FiniteGroup& g, std::span<const Elem> elements);

class AutGroup {
 public:
  // `perms` must be all automorphisms of `base`, sorted lexicographically.
  AutGroup(GroupPtr base, std::vector<std::vector<Elem>> perms);

  const GroupPtr& base() const noexcept { return base_; }
  const GroupPtr& carrier() const noexcept { return carrier_; }

  const std::vector<Elem>& realize(Elem alpha) const { return perms_[alpha]; }
  Elem apply(Elem alpha, Elem a) const { return perms_[alpha][a]; }
  std::optional<Elem> index_of(const std::vector<Elem>& perm) const;

  Elem inn_of(Elem a) const { return inn_of_[a]; }
  // Sorted carrier indices of inner automorphisms.
  const std::vector<Elem>& inn_subgroup() const noexcept { return inn_; }

 private:
  GroupPtr base_;
  GroupPtr carrier_;
  std::vector<std::vector<Elem>> perms_;
  std::map<std::vector<Elem>, Elem> index_;
  std::vector<Elem> inn_of_;
  std::vector<Elem> inn_;
};

using AutPtr = std::shared_ptr<const AutGroup>;

enum class StandardKind { cyclic, dihedral, symmetric, quaternion8, direct_product };

// Element numbering:
//   cyclic n      : k  <-> k (mod n), generator 1.
//   dihedral n    : r^a s^b <-> a + n*b (order 2n), generators r = 1, s = n.
//   symmetric n   : permutations of {0..n-1} in lexicographic order of
//                   their image lists; product (p*q)(x) = p(q(x)).
//   quaternion8   : 1,-1,i,-i,j,-j,k,-k <-> 0..7.
//   direct_product: (g,h) <-> g*|H| + h.
GroupPtr make_standard_group(StandardKind kind, std::span<const int> params,
                             std::span<const GroupPtr> factors = {}, GroupLimits limits = {});

GroupPtr cyclic_group(int n, GroupLimits limits = {});
GroupPtr dihedral_group(int n, GroupLimits limits = {});
GroupPtr symmetric_group(int n, GroupLimits limits = {});
GroupPtr quaternion_group();
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h, GroupLimits limits = {});

Subgroup compute_center(const GroupPtr& g);

// Enumerates Aut(A) by backtracking over images of a generating set,
// restricted to elements of matching order.
AutPtr compute_aut(const GroupPtr& a, GroupLimits limits = {});

// Inn A as a subgroup of the Aut A carrier.
Subgroup inner_automorphisms(const AutGroup& aut);

// Automorphisms listed as carrier indices, repackaged as a group whose
// embedding lands in the Aut carrier.
Subgroup aut_subgroup(const AutGroup& aut, std::span<const Elem> carrier_elements, std::string name);

struct Quotient {
  GroupPtr group;
  GroupHom projection;
};

// Cosets are numbered by their least member.
Quotient quotient_group(const GroupPtr& g, std::span<const Elem> normal);

// Out A = Aut A / Inn A.
Quotient outer_automorphisms(const AutGroup& aut);

// G = (Inn B)|_A for a normal subgroup A of B given through its embedding.
struct RestrictedInn {
  AutPtr aut_a;
  AutPtr aut_b;
  Subgroup inn_b;              // Inn B inside the Aut B carrier
  Subgroup restricted;         // G inside the Aut A carrier
  GroupHom restriction;        // Inn B -> G, surjective
  std::vector<Elem> collisions;  // kernel of `restriction`, as Inn B elements
};

RestrictedInn restricted_inn_group(const GroupHom& embedding, AutPtr aut_a = nullptr,
                                   AutPtr aut_b = nullptr, GroupLimits limits = {});

}  // namespace nacoh
