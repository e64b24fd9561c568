#pragma once

// First and second cohomology by enumeration and orbit partitioning:
// H^1 of a Gamma-group, thick and thin H^2 with crossed-module
// coefficients, H^2 with Gamma-kernel coefficients, abelian H^2, and the
// comparison maps between them.

#include <cstdint>
#include <vector>

#include "nacoh/enumerate.hpp"
#include "nacoh/orbits.hpp"

namespace nacoh {

// ---------------------------------------------------------------------------
// H^1

struct H1Classes {
  std::vector<Cocycle1> cocycles;  // index order = encoding order
  CodeIndex index;
  OrbitPartition partition;
  std::uint64_t states = 0;

  std::size_t size() const noexcept { return partition.size(); }
  const Cocycle1& representative(std::size_t c) const { return cocycles[partition.representative(c)]; }
  // Errors: NotACocycle if `values` is not in Z^1.
  std::size_t class_of(std::span<const Elem> values) const;
  // Class of the trivial cocycle.
  std::size_t trivial_class() const;
};

// c ~ c' iff c'_s = x c_s ^s x^-1 for some x.
H1Classes h1_classes(const GammaGroup& c, SearchOptions options = {});

// ---------------------------------------------------------------------------
// H^2 with crossed-module coefficients

enum class H2Kind { thick, thin };

const char* to_string(H2Kind kind);

struct ClassFlags {
  bool neutral = false;
  bool unit = false;
};

struct H2Classes {
  H2Kind kind = H2Kind::thin;
  std::vector<Cocycle2Crossed> cocycles;  // index order = encoding order
  CodeIndex index;
  OrbitPartition partition;
  std::vector<ClassFlags> flags;
  std::uint64_t states = 0;
  double space = 0;

  std::size_t size() const noexcept { return partition.size(); }
  const Cocycle2Crossed& representative(std::size_t c) const { return cocycles[partition.representative(c)]; }
  // Errors: NotACocycle if `z` was not enumerated.
  std::size_t class_of(const Cocycle2Crossed& z) const;
  std::size_t unit_class() const;
  std::size_t neutral_count() const;
};

// Thick: orbits of Maps(Gamma, A). Thin: orbits of C^1 = Maps(Gamma, A) x| G.
H2Classes h2_quotient(const GammaCrossedModule& m, H2Kind kind, SearchOptions options = {});
// Reuses an existing enumeration of Z^2.
H2Classes h2_classes(const GammaCrossedModule& m, const Z2Enumeration& z2, H2Kind kind, int jobs = 1);

struct ClassMap {
  std::vector<std::size_t> image;
  bool well_defined = true;
  bool surjective = false;
  bool injective = false;
  bool preserves_neutral = true;
  bool preserves_unit = true;
};

// kappa: thick classes -> thin classes.
ClassMap kappa(const H2Classes& thick, const H2Classes& thin);

// Class-level map induced by a crossed-module morphism; well_defined is
// checked on every member of every source class.
ClassMap pushforward_classes(const CrossedModuleMorphism& m, const H2Classes& source, const H2Classes& target);

// ---------------------------------------------------------------------------
// H^2(A) = H^2(Gamma, A, kappa_A)

struct KernelH2 {
  std::vector<KernelCocycle2> cocycles;
  CodeIndex index;
  OrbitPartition partition;
  std::vector<ClassFlags> flags;
  std::uint64_t states = 0;
  double space = 0;

  std::size_t size() const noexcept { return partition.size(); }
  const KernelCocycle2& representative(std::size_t c) const { return cocycles[partition.representative(c)]; }
  std::size_t class_of(const KernelCocycle2& z) const;
  std::size_t unit_class() const;
};

KernelH2 h2_kernel(const GammaGroup& a, SearchOptions options = {});

struct LambdaReport {
  std::size_t kernel_classes = 0;
  std::size_t thick_classes = 0;
  std::size_t thin_classes = 0;
  bool cocycle_bijection = false;   // (u,f) -> (u,psi) bijective with round trip
  bool thick_bijection = false;     // descends to H^2(A) -> thick H^2(A -> Inn A)
  bool flags_preserved = false;     // neutral and unit classes correspond
  std::vector<std::size_t> map;     // lambda on class indices
  bool injective = false;
  bool surjective = false;
  std::uint64_t second_proof_checks = 0;
  std::uint64_t second_proof_violations = 0;
  std::uint64_t states = 0;

  bool bijective() const noexcept { return injective && surjective; }
  bool ok() const noexcept {
    return cocycle_bijection && thick_bijection && flags_preserved && bijective() && second_proof_violations == 0;
  }
};

// lambda_A: H^2(A) -> thick H^2(A -> Inn A) -> thin H^2(A -> Inn A), with
// g * (u,psi) = w * (u,psi), w_s = b psi_s(^s b)^-1, checked for every b.
LambdaReport lambda_map(const GammaGroup& a, SearchOptions options = {});

// ---------------------------------------------------------------------------
// Abelian H^2

struct AbelianH2 {
  std::vector<std::vector<Elem>> cocycles;  // u maps, sorted
  CodeIndex index;
  OrbitPartition partition;                 // cosets of B^2
  std::size_t coboundaries = 0;
  std::size_t zero_class = 0;
  std::vector<std::size_t> product;         // size() x size(), pointwise product of representatives
  std::uint64_t states = 0;

  std::size_t size() const noexcept { return partition.size(); }
  const std::vector<Elem>& representative(std::size_t c) const { return cocycles[partition.representative(c)]; }
  // Errors: NotACocycle if `u` is not in Z^2.
  std::size_t class_of(std::span<const Elem> u) const;
};

// Classical Z^2 / B^2 for an abelian Gamma-module. Errors: NotAbelian.
AbelianH2 h2_abelian(const GammaGroup& module, SearchOptions options = {});
AbelianH2 h2_abelian(const TwistedModule& module, SearchOptions options = {});

// w_{st} (s*w_t)^-1 w_s^-1
std::vector<Elem> abelian_coboundary(const GammaGroup& module, std::span<const Elem> w);

// ---------------------------------------------------------------------------
// H^2(Z_A) acting on H^2(A)

struct CenterActionReport {
  std::size_t center_classes = 0;   // |H^2(Z_A)|
  std::size_t kernel_classes = 0;   // |H^2(A)|
  std::size_t thin_classes = 0;     // |H^2(A -> Inn A)|
  std::vector<std::vector<std::size_t>> action;       // [z][x] -> [z]*x on H^2(A)
  std::vector<std::vector<std::size_t>> thin_action;  // [z][y] -> [z]*y on thin H^2(A -> Inn A)
  bool well_defined = false;
  bool simply_transitive = false;
  std::vector<std::size_t> mu;  // H^2(Z_A) -> thin H^2(A -> Inn A)
  bool mu_bijective = false;
  std::vector<std::size_t> iota;  // thin H^2(Z_A -> 1) -> thin H^2(A -> Inn A)
  bool iota_bijective = false;
  bool center_matches_crossed = false;  // H^2(Z_A) = thin H^2(Z_A -> 1) via [z] -> [z, 1]
  bool lambda_equivariant = false;
  std::uint64_t states = 0;

  bool ok() const noexcept {
    return well_defined && simply_transitive && mu_bijective && iota_bijective && center_matches_crossed &&
           lambda_equivariant;
  }
};

CenterActionReport center_h2_action(const GammaGroup& a, SearchOptions options = {});

}  // namespace nacoh
