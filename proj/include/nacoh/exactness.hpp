#pragma once

// The connecting map H^1(C) -> H^2(A -> Inn B) of a short exact sequence of
// Gamma-groups, class-by-class verification of the exact sequence, its
// (Inn B)|_A variant, and the abelian-kernel comparison with the classical
// obstruction class in H^2(_c A).

#include <cstdint>
#include <string>
#include <vector>

#include "nacoh/cohomology.hpp"

namespace nacoh {

// Every H^1 and thin H^2 set attached to one sequence.
struct SesCohomology {
  SesModules modules;
  H1Classes h1_b;
  H1Classes h1_c;
  H2Classes kernel;      // A -> Inn B
  H2Classes middle;      // B -> Inn B
  H2Classes quotient;    // C -> Inn C
  H2Classes restricted;  // A -> (Inn B)|_A
  std::uint64_t states = 0;
};

SesCohomology ses_cohomology(const ShortExactSequence& ses, SearchOptions options = {});

// Least preimage of every c_s.
std::vector<Elem> least_lift(const ShortExactSequence& ses, std::span<const Elem> c);

// (u, psi) for a lift b of c. Errors: ValidationError if some u_{s,t} is
// outside i(A) (b is not a lift of a cocycle).
Cocycle2Crossed delta_cocycle(const ShortExactSequence& ses, const SesModules& modules, std::span<const Elem> b);

// Thin class over A -> Inn B, using the least lift. Errors: NotACocycle if c
// is not a 1-cocycle.
std::size_t delta(const ShortExactSequence& ses, const SesCohomology& h, std::span<const Elem> c);

struct DeltaCheck {
  bool ok = true;
  std::uint64_t paths = 0;              // (cocycle, lift) pairs tried
  std::vector<std::size_t> image;       // per H^1(C) class
  std::vector<std::string> witnesses;   // first few discrepancies
};

// Every c in Z^1(C) and every lift b land in the same class per H^1 class.
DeltaCheck delta_well_defined_check(const ShortExactSequence& ses, const SesCohomology& h,
                                    std::uint64_t budget = kDefaultBudget);
DeltaCheck delta_well_defined_check(const ShortExactSequence& ses, SearchOptions options = {});

struct ClauseRow {
  std::size_t cls = 0;
  bool in_image = false;
  bool condition = false;  // neutral / unit, depending on the clause

  bool ok() const noexcept { return in_image == condition; }
};

struct ClauseTable {
  std::string name;
  std::vector<ClauseRow> rows;

  bool ok() const;
};

struct ExactnessReport {
  std::size_t h1_b = 0, h1_c = 0, h2_kernel = 0, h2_middle = 0, h2_quotient = 0;
  ClassMap j_h1;       // H^1(B) -> H^1(C)
  ClassMap i_star;     // H^2(A -> Inn B) -> H^2(B -> Inn B)
  ClassMap j_star;     // H^2(B -> Inn B) -> H^2(C -> Inn C)
  DeltaCheck delta;    // H^1(C) -> H^2(A -> Inn B)
  ClauseTable clause_i, clause_ii, clause_iii;
  std::uint64_t states = 0;

  bool maps_well_defined() const noexcept {
    return j_h1.well_defined && i_star.well_defined && j_star.well_defined && delta.ok;
  }
  bool ok() const { return maps_well_defined() && clause_i.ok() && clause_ii.ok() && clause_iii.ok(); }
};

ExactnessReport verify_exactness_theorem(const ShortExactSequence& ses, const SesCohomology& h,
                                         std::uint64_t budget = kDefaultBudget);
ExactnessReport verify_exactness_theorem(const ShortExactSequence& ses, SearchOptions options = {});

struct PiCorollaryReport {
  std::size_t h2_restricted = 0;
  ClassMap pi;              // H^2(A -> Inn B) -> H^2(A -> G)
  ClauseTable lemma;        // per class: neutral vs pi-image neutral
  ClauseTable corollary;    // per H^1(C) class: lifts vs pi(delta) neutral
  bool matches_clause_i = false;

  bool ok() const { return pi.well_defined && lemma.ok() && corollary.ok() && matches_clause_i; }
};

PiCorollaryReport verify_pi_corollary(const ShortExactSequence& ses, const SesCohomology& h,
                                      std::uint64_t budget = kDefaultBudget);
PiCorollaryReport verify_pi_corollary(const ShortExactSequence& ses, SearchOptions options = {});

// ---------------------------------------------------------------------------
// Abelian A

struct ZetaReport {
  std::size_t h1_g = 0;
  std::vector<std::size_t> map;  // thin H^2(A -> G) class -> H^1(G) class
  bool well_defined = true;
  bool surjective = false;
};

// [u, psi] -> [psi]. Errors: NotAbelian.
ZetaReport zeta(const ShortExactSequence& ses, const SesCohomology& h, SearchOptions options = {});

struct LambdaPsiReport {
  std::vector<Elem> psi;
  std::size_t h1_class = 0;              // class of psi in H^1(G)
  std::size_t twisted_classes = 0;       // |H^2(_psi A)|
  std::vector<std::size_t> image;        // [u] -> thin class of (u, psi)
  bool injective = false;
  bool onto_fiber = false;
  bool neutral_iff_zero = false;

  bool ok() const noexcept { return injective && onto_fiber && neutral_iff_zero; }
};

// Errors: NotAbelian; NotACocycle if psi is not in Z^1(Gamma, G).
LambdaPsiReport lambda_psi(const ShortExactSequence& ses, const SesCohomology& h, std::span<const Elem> psi,
                           SearchOptions options = {});

// p: C -> G = (Inn B)|_A, c -> inn(b)|_A for any b over c.
GroupHom serre_p(const ShortExactSequence& ses, const SesModules& modules);

struct SerreClass {
  std::vector<Elem> psi;   // p o c
  std::vector<Elem> u;     // u of the least lift, as A-indices
  std::size_t cls = 0;     // class in H^2(_c A)
  bool zero = false;
};

// Errors: NotAbelian.
SerreClass delta_serre(const ShortExactSequence& ses, const SesModules& modules, std::span<const Elem> c,
                       SearchOptions options = {});
// Same, for an explicit lift b of c.
SerreClass delta_serre_lift(const ShortExactSequence& ses, const SesModules& modules, std::span<const Elem> c,
                            std::span<const Elem> b, SearchOptions options = {});

struct SerreRow {
  std::size_t h1_class = 0;
  bool lifts = false;          // in the image of H^1(B)
  bool delta_s_zero = false;
  bool image_formula = false;  // pi(delta[c]) = lambda_psi(delta_S(c))

  bool ok() const noexcept { return lifts == delta_s_zero && image_formula; }
};

struct SerreReport {
  ZetaReport zeta;
  std::vector<LambdaPsiReport> lambdas;  // one per psi in Z^1(Gamma, G)
  std::vector<SerreRow> rows;
  std::uint64_t states = 0;

  bool ok() const;
};

SerreReport verify_serre_criterion(const ShortExactSequence& ses, const SesCohomology& h, SearchOptions options = {});
SerreReport verify_serre_criterion(const ShortExactSequence& ses, SearchOptions options = {});

}  // namespace nacoh
