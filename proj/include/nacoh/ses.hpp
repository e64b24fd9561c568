#pragma once

#include "nacoh/gamma.hpp"

namespace nacoh {

// 1 -> A -i-> B -j-> C -> 1, Gamma-equivariant, validated on construction.
class ShortExactSequence {
 public:
  // Errors: NotInjective, NotSurjective, ImageKernelMismatch, NotEquivariant.
  ShortExactSequence(GammaGroup a, GammaGroup b, GammaGroup c, GroupHom i, GroupHom j);

  const GammaGroup& A() const noexcept { return a_; }
  const GammaGroup& B() const noexcept { return b_; }
  const GammaGroup& C() const noexcept { return c_; }
  const GroupHom& i() const noexcept { return i_; }
  const GroupHom& j() const noexcept { return j_; }

  // i^-1 on i(A); -1 elsewhere.
  Elem i_inverse(Elem b) const { return i_back_[b]; }
  // Deterministic lift: least b with j(b) = c.
  Elem least_lift(Elem c) const { return lift_[c]; }
  // All b with j(b) = c, ascending.
  const std::vector<Elem>& fiber(Elem c) const { return fibers_[c]; }

 private:
  GammaGroup a_, b_, c_;
  GroupHom i_, j_;
  std::vector<Elem> i_back_;
  std::vector<Elem> lift_;
  std::vector<std::vector<Elem>> fibers_;
};

inline ShortExactSequence validate_ses(GammaGroup a, GammaGroup b, GammaGroup c, GroupHom i, GroupHom j) {
  return ShortExactSequence(std::move(a), std::move(b), std::move(c), std::move(i), std::move(j));
}

}  // namespace nacoh
