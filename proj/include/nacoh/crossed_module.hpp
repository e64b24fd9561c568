#pragma once

// Crossed modules rho: A -> G with a G-action on A and compatible
// Gamma-actions, plus the canonical constructions the exact sequence needs.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nacoh/gamma.hpp"
#include "nacoh/ses.hpp"

namespace nacoh {

// First violated axiom instance, with the element indices involved.
struct AxiomFailure {
  ErrorCode code;
  std::string axiom;
  std::vector<Elem> witness;

  std::string message() const;
};

class GammaCrossedModule {
 public:
  // Errors: PeifferViolation, EquivarianceViolation.
  GammaCrossedModule(GammaGroup a, GammaGroup g, GroupHom rho, GroupHom g_action);

  const GammaGroup& A() const noexcept { return a_; }
  const GammaGroup& G() const noexcept { return g_; }
  const GroupHom& rho() const noexcept { return rho_; }
  const GroupHom& g_action() const noexcept { return g_action_; }

  std::size_t gamma_order() const noexcept { return a_.gamma_order(); }
  const FiniteGroup& gamma() const noexcept { return *a_.gamma(); }
  const FiniteGroup& a_group() const noexcept { return *a_.group(); }
  const FiniteGroup& g_group() const noexcept { return *g_.group(); }

  // ^g a
  Elem gact(Elem g, Elem a) const { return gact_[static_cast<std::size_t>(g) * a_.order() + a]; }

  std::string label() const;

 private:
  GammaGroup a_;
  GammaGroup g_;
  GroupHom rho_;
  GroupHom g_action_;
  std::vector<Elem> gact_;
};

using CrossedModulePtr = std::shared_ptr<const GammaCrossedModule>;

std::optional<AxiomFailure> check_crossed_module(const GammaGroup& a, const GammaGroup& g, const GroupHom& rho,
                                                 const GroupHom& g_action);

CrossedModulePtr validate_crossed_module(GammaGroup a, GammaGroup g, GroupHom rho, GroupHom g_action);

struct CrossedModuleMorphism {
  // Errors: ValidationError naming the failed compatibility.
  CrossedModuleMorphism(CrossedModulePtr source, CrossedModulePtr target, GroupHom phi_a, GroupHom phi_g);

  CrossedModulePtr source;
  CrossedModulePtr target;
  GroupHom phi_a;
  GroupHom phi_g;
};

std::optional<AxiomFailure> check_morphism(const GammaCrossedModule& source, const GammaCrossedModule& target,
                                           const GroupHom& phi_a, const GroupHom& phi_g);

CrossedModuleMorphism identity_morphism(const CrossedModulePtr& m);

// B -> Inn B with conjugation action.
CrossedModulePtr inn_crossed_module(const GammaGroup& b, GroupLimits limits = {});
// A -> Aut A.
CrossedModulePtr aut_crossed_module(const GammaGroup& a, GroupLimits limits = {});
// Z_A -> 1.
CrossedModulePtr center_crossed_module(const GammaGroup& a, GroupLimits limits = {});
// A -> 1 for abelian A (Errors: NotAbelian).
CrossedModulePtr trivial_crossed_module(const GammaGroup& a, GroupLimits limits = {});

// (Z_A -> 1) into (A -> Inn A).
CrossedModuleMorphism center_inclusion(const GammaGroup& a, const CrossedModulePtr& center,
                                       const CrossedModulePtr& inn);

// A -> Inn B, rho(a) = inn(i(a)), ^{inn b} a = i^-1(b i(a) b^-1).
CrossedModulePtr ses_kernel_crossed_module(const ShortExactSequence& ses, GroupLimits limits = {});

struct RestrictedCrossedModule {
  CrossedModulePtr module;  // A -> G, G = (Inn B)|_A
  CrossedModuleMorphism pi;  // (A -> Inn B) -> (A -> G)
};

RestrictedCrossedModule restricted_crossed_module(const ShortExactSequence& ses, GroupLimits limits = {});

// j_*: (B -> Inn B) -> (C -> Inn C). Errors: WellDefinednessViolation.
CrossedModuleMorphism quotient_inn_morphism(const ShortExactSequence& ses, GroupLimits limits = {});

// Every crossed module and morphism attached to a short exact sequence,
// sharing one Inn B so that the morphisms compose.
struct SesModules {
  CrossedModulePtr kernel;      // A -> Inn B
  CrossedModulePtr middle;      // B -> Inn B
  CrossedModulePtr quotient;    // C -> Inn C
  CrossedModulePtr restricted;  // A -> (Inn B)|_A
  CrossedModuleMorphism i_star;
  CrossedModuleMorphism j_star;
  CrossedModuleMorphism pi;
};

SesModules ses_modules(const ShortExactSequence& ses, GroupLimits limits = {});

}  // namespace nacoh
