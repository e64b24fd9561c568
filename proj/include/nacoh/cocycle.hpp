#pragma once

// Cocycles with coefficients in a crossed module or a Gamma-kernel, and the
// group actions on them. All maps out of Gamma are stored as dense arrays
// indexed by Gamma elements; u is stored row-major, u[s*|Gamma| + t].

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "nacoh/crossed_module.hpp"

namespace nacoh {

struct Cocycle1 {
  std::vector<Elem> values;

  auto operator<=>(const Cocycle1&) const = default;
};

struct Cocycle2Crossed {
  std::vector<Elem> u;
  std::vector<Elem> psi;

  auto operator<=>(const Cocycle2Crossed&) const = default;

  bool is_neutral() const;
  bool is_unit() const;
  // u values row-major followed by psi values: the canonical-form key.
  std::vector<Elem> encode() const;
  static Cocycle2Crossed decode(std::span<const Elem> code, std::size_t gamma_order);
};

// An element (w, g) of C^1 = Maps(Gamma, A) x| G.
struct C1Element {
  std::vector<Elem> w;
  Elem g = 0;

  auto operator<=>(const C1Element&) const = default;
};

// (u, f) with f valued in the Aut A carrier.
struct KernelCocycle2 {
  std::vector<Elem> u;
  std::vector<Elem> f;

  auto operator<=>(const KernelCocycle2&) const = default;

  std::vector<Elem> encode() const;
  static KernelCocycle2 decode(std::span<const Elem> code, std::size_t gamma_order);
};

struct CocycleCheck {
  bool ok = true;
  int condition = 0;                 // which displayed condition failed
  std::array<Elem, 3> witness{};     // (s, t, v) or (s, t, -1)

  explicit operator bool() const noexcept { return ok; }
};

CocycleCheck is_cocycle2_crossed(const GammaCrossedModule& m, const Cocycle2Crossed& z);
CocycleCheck is_kernel_cocycle(const GammaGroup& a, const KernelCocycle2& z);

Cocycle2Crossed unit_cocycle(const GammaCrossedModule& m);
KernelCocycle2 unit_kernel_cocycle(const GammaGroup& a);

// The actions below check that their output is again a cocycle and throw
// NotACocycle otherwise.

// w * (u, psi)
Cocycle2Crossed act_w(const GammaCrossedModule& m, std::span<const Elem> w, const Cocycle2Crossed& z);
// g * (u, psi)
Cocycle2Crossed act_g(const GammaCrossedModule& m, Elem g, const Cocycle2Crossed& z);
// (w, g) * z = w * (g * z)
Cocycle2Crossed act_c1(const GammaCrossedModule& m, const C1Element& e, const Cocycle2Crossed& z);

// (g * w)_s = ^g w_s
std::vector<Elem> g_star_w(const GammaCrossedModule& m, Elem g, std::span<const Elem> w);
C1Element c1_multiply(const GammaCrossedModule& m, const C1Element& x, const C1Element& y);
C1Element c1_identity(const GammaCrossedModule& m);
std::vector<Elem> pointwise_inverse(const FiniteGroup& a, std::span<const Elem> w);

KernelCocycle2 act_w_kernel(const GammaGroup& a, std::span<const Elem> w, const KernelCocycle2& z);

// (u, f) -> (u, psi) with psi_s = f_s o (f_A)_s^-1, over the given A -> Inn A.
Cocycle2Crossed kernel_to_crossed(const GammaGroup& a, const GammaCrossedModule& inn, const KernelCocycle2& z);
KernelCocycle2 crossed_to_kernel(const GammaGroup& a, const GammaCrossedModule& inn, const Cocycle2Crossed& z);

// (phi_A o u, phi_G o psi)
Cocycle2Crossed pushforward(const CrossedModuleMorphism& m, const Cocycle2Crossed& z);

namespace detail {

// Unchecked versions used on hot paths; inputs must be cocycles.
void act_w_into(const GammaCrossedModule& m, std::span<const Elem> w, std::span<const Elem> code, std::span<Elem> out);
void act_g_into(const GammaCrossedModule& m, Elem g, std::span<const Elem> code, std::span<Elem> out);
void act_w_kernel_into(const GammaGroup& a, std::span<const Elem> w, std::span<const Elem> code, std::span<Elem> out);

}  // namespace detail

}  // namespace nacoh
