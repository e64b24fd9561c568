#pragma once

// Groups with an action of a fixed finite group Gamma by automorphisms.

#include <span>
#include <vector>

#include "nacoh/finite_group.hpp"

namespace nacoh {

class GammaGroup {
 public:
  // `action` must be a homomorphism Gamma -> carrier of `aut`.
  GammaGroup(GroupPtr gamma, AutPtr aut, GroupHom action);

  const GroupPtr& gamma() const noexcept { return gamma_; }
  const GroupPtr& group() const noexcept { return aut_->base(); }
  const AutPtr& aut() const noexcept { return aut_; }
  const GroupHom& action() const noexcept { return action_; }

  std::size_t gamma_order() const noexcept { return gamma_->order(); }
  std::size_t order() const noexcept { return group()->order(); }

  // ^sigma a
  Elem act(Elem sigma, Elem a) const { return table_[static_cast<std::size_t>(sigma) * order() + a]; }
  // (f_A)_sigma as an Aut carrier element
  Elem action_of(Elem sigma) const { return action_(sigma); }

  bool is_trivial() const;

 private:
  GroupPtr gamma_;
  AutPtr aut_;
  GroupHom action_;
  std::vector<Elem> table_;
};

// Errors: NotAnAction if `action` does not target the Aut carrier of `group`.
GammaGroup make_gamma_group(const GroupPtr& gamma, const AutPtr& aut, const GroupHom& action);

// One permutation of the group's elements per Gamma element. Errors:
// NotAnAction if a permutation is not an automorphism or sigma -> perm is
// not a homomorphism.
GammaGroup make_gamma_group(const GroupPtr& gamma, const GroupPtr& group,
                            const std::vector<std::vector<Elem>>& perms, AutPtr aut = nullptr,
                            GroupLimits limits = {});

GammaGroup trivial_gamma_group(const GroupPtr& gamma, const GroupPtr& group, AutPtr aut = nullptr,
                               GroupLimits limits = {});

// A Gamma-stable subgroup with the restricted action. Errors: NotAnAction
// when the subgroup is not stable.
GammaGroup restrict_gamma_group(const GammaGroup& x, const Subgroup& sub, GroupLimits limits = {});

// Gamma acts on a subgroup of Aut X by ^sigma alpha = f_sigma o alpha o f_sigma^-1.
// Errors: NotAnAction when the subgroup is not stable under this conjugation.
GammaGroup conjugation_action(const GammaGroup& x, const Subgroup& aut_sub, GroupLimits limits = {});

struct InducedAutAction {
  Subgroup aut_carrier;   // the whole carrier, as a subgroup of itself
  GammaGroup aut;         // Gamma acting on Aut X
  Subgroup inn_subgroup;  // Inn X inside the carrier
  GammaGroup inn;         // Gamma acting on Inn X
  GroupHom inn_of;        // X -> Inn X, b -> inn(b)
};

InducedAutAction induced_action_on_aut(const GammaGroup& x, GroupLimits limits = {});

// Inn X with the induced action, plus b -> inn(b).
struct InnData {
  Subgroup subgroup;
  GammaGroup gamma_group;
  GroupHom inn_of;
};

InnData induced_action_on_inn(const GammaGroup& x, GroupLimits limits = {});

bool is_equivariant(const GroupHom& h, const GammaGroup& source, const GammaGroup& target);

// c_{st} = c_s * ^s c_t for all s, t.
bool is_cocycle1(const GammaGroup& c, std::span<const Elem> values);

// An abelian Gamma-group whose action is twisted by a 1-cocycle psi valued
// in a group G acting on it: sigma * a = psi_sigma(^sigma a).
struct TwistedModule {
  GammaGroup base;
  GammaGroup acting;    // G with its Gamma-action
  GroupHom g_action;    // G -> Aut A
  std::vector<Elem> psi;
  GammaGroup twisted;
};

// Errors: NotAbelian; NotACocycle when psi fails the 1-cocycle identity.
TwistedModule twist_by_cocycle(const GammaGroup& base, const GammaGroup& acting, const GroupHom& g_action,
                               std::vector<Elem> psi);

}  // namespace nacoh
