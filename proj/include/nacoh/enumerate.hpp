#pragma once

// Exhaustive, budgeted cocycle enumeration.
//
// Z^2 searches split into a "head" (psi, or f for Gamma-kernels) chosen by a
// small backtracking pass, and a per-head search over u with pruning on
// every completed (s, t, v) triple. Heads are independent, so the u-search
// runs as an OpenMP parallel loop over heads; results are concatenated in
// head order and sorted by encoding, so output never depends on scheduling.

#include <cstdint>
#include <vector>

#include "nacoh/cocycle.hpp"

namespace nacoh {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;  // cap on candidate states visited
  int jobs = 1;                           // OpenMP worker count; 1 runs serially
};

struct Z1Enumeration {
  std::vector<Cocycle1> cocycles;  // sorted
  std::uint64_t states = 0;
};

struct Z2Enumeration {
  std::vector<Cocycle2Crossed> cocycles;  // sorted by encoding
  std::uint64_t states = 0;
  double space = 0;  // unpruned search-space size |G|^|Gamma| * |A|^(|Gamma|^2)
};

struct KernelZ2Enumeration {
  std::vector<KernelCocycle2> cocycles;  // sorted by encoding
  std::uint64_t states = 0;
  double space = 0;
};

struct AbelianZ2Enumeration {
  std::vector<std::vector<Elem>> cocycles;  // u maps, sorted
  std::uint64_t states = 0;
  double space = 0;
};

// Values fixed on the generators of Gamma and propagated.
Z1Enumeration enumerate_z1(const GammaGroup& c, SearchOptions options = {});

Z2Enumeration enumerate_z2_crossed(const GammaCrossedModule& m, SearchOptions options = {});
// Single-threaded reference for the same search.
Z2Enumeration enumerate_z2_crossed_serial(const GammaCrossedModule& m, std::uint64_t budget = kDefaultBudget);

KernelZ2Enumeration enumerate_z2_kernel(const GammaGroup& a, SearchOptions options = {});

// u with u_{s,tv} (s*u_{t,v}) = u_{st,v} u_{s,t} for an abelian Gamma-module.
// Errors: NotAbelian.
AbelianZ2Enumeration enumerate_z2_abelian(const GammaGroup& module, SearchOptions options = {});

double z2_space_size(const GammaCrossedModule& m);

}  // namespace nacoh
