#include "nacoh/gamma.hpp"

#include <string>

namespace nacoh {

GammaGroup::GammaGroup(GroupPtr gamma, AutPtr aut, GroupHom action)
    : gamma_(std::move(gamma)), aut_(std::move(aut)), action_(std::move(action)) {
  if (!(*action_.source() == *gamma_)) {
    throw Error(ErrorCode::NotAnAction, "action source is not " + gamma_->name());
  }
  if (!(*action_.target() == *aut_->carrier())) {
    throw Error(ErrorCode::NotAnAction, "action does not target Aut(" + aut_->base()->name() + ")");
  }
  const std::size_t n = aut_->base()->order();
  table_.resize(gamma_->order() * n);
  for (std::size_t s = 0; s < gamma_->order(); ++s) {
    const auto& perm = aut_->realize(action_(static_cast<Elem>(s)));
    std::copy(perm.begin(), perm.end(), table_.begin() + static_cast<std::ptrdiff_t>(s * n));
  }
}

bool GammaGroup::is_trivial() const {
  for (Elem v : action_.images())
    if (v != 0) return false;
  return true;
}

GammaGroup make_gamma_group(const GroupPtr& gamma, const AutPtr& aut, const GroupHom& action) {
  return GammaGroup(gamma, aut, action);
}

GammaGroup make_gamma_group(const GroupPtr& gamma, const GroupPtr& group, const std::vector<std::vector<Elem>>& perms,
                            AutPtr aut, GroupLimits limits) {
  if (!aut) aut = compute_aut(group, limits);
  if (perms.size() != gamma->order()) {
    throw Error(ErrorCode::NotAnAction, "expected " + std::to_string(gamma->order()) + " permutations, got " +
                                            std::to_string(perms.size()));
  }
  std::vector<Elem> images(perms.size());
  for (std::size_t s = 0; s < perms.size(); ++s) {
    auto idx = aut->index_of(perms[s]);
    if (!idx) {
      throw Error(ErrorCode::NotAnAction, "permutation for gamma element " + std::to_string(s) +
                                              " is not an automorphism of " + group->name());
    }
    images[s] = *idx;
  }
  try {
    return GammaGroup(gamma, aut, GroupHom(gamma, aut->carrier(), std::move(images)));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidHom) throw;
    throw Error(ErrorCode::NotAnAction, std::string("not an action: ") + e.what());
  }
}

GammaGroup trivial_gamma_group(const GroupPtr& gamma, const GroupPtr& group, AutPtr aut, GroupLimits limits) {
  if (!aut) aut = compute_aut(group, limits);
  return GammaGroup(gamma, aut, GroupHom::trivial(gamma, aut->carrier()));
}

GammaGroup restrict_gamma_group(const GammaGroup& x, const Subgroup& sub, GroupLimits limits) {
  const auto local = sub.embedding.least_preimages();
  const std::size_t m = sub.group->order();
  std::vector<std::vector<Elem>> perms(x.gamma_order(), std::vector<Elem>(m));
  for (std::size_t s = 0; s < x.gamma_order(); ++s) {
    for (std::size_t k = 0; k < m; ++k) {
      const auto img = local[x.act(static_cast<Elem>(s), sub.embedding(static_cast<Elem>(k)))];
      if (!img) throw Error(ErrorCode::NotAnAction, sub.group->name() + " is not Gamma-stable");
      perms[s][k] = *img;
    }
  }
  return make_gamma_group(x.gamma(), sub.group, perms, nullptr, limits);
}

GammaGroup conjugation_action(const GammaGroup& x, const Subgroup& aut_sub, GroupLimits limits) {
  const FiniteGroup& carrier = *x.aut()->carrier();
  const auto local = aut_sub.embedding.least_preimages();
  const std::size_t m = aut_sub.group->order();
  std::vector<std::vector<Elem>> perms(x.gamma_order(), std::vector<Elem>(m));
  for (std::size_t s = 0; s < x.gamma_order(); ++s) {
    const Elem f = x.action_of(static_cast<Elem>(s));
    for (std::size_t k = 0; k < m; ++k) {
      const auto img = local[carrier.conj(f, aut_sub.embedding(static_cast<Elem>(k)))];
      if (!img) throw Error(ErrorCode::NotAnAction, aut_sub.group->name() + " is not stable under the Gamma-action");
      perms[s][k] = *img;
    }
  }
  return make_gamma_group(x.gamma(), aut_sub.group, perms, nullptr, limits);
}

InnData induced_action_on_inn(const GammaGroup& x, GroupLimits limits) {
  Subgroup inn = inner_automorphisms(*x.aut());
  GammaGroup gg = conjugation_action(x, inn, limits);
  const auto local = inn.embedding.least_preimages();
  std::vector<Elem> images(x.order());
  for (std::size_t b = 0; b < x.order(); ++b) images[b] = *local[x.aut()->inn_of(static_cast<Elem>(b))];
  GroupHom inn_of(x.group(), inn.group, std::move(images));
  return InnData{std::move(inn), std::move(gg), std::move(inn_of)};
}

InducedAutAction induced_action_on_aut(const GammaGroup& x, GroupLimits limits) {
  const auto& carrier = x.aut()->carrier();
  std::vector<Elem> all(carrier->order());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<Elem>(k);
  Subgroup whole = make_subgroup(carrier, all, carrier->name());
  GammaGroup aut = conjugation_action(x, whole, limits);
  InnData inn = induced_action_on_inn(x, limits);
  return InducedAutAction{std::move(whole), std::move(aut), std::move(inn.subgroup), std::move(inn.gamma_group),
                          std::move(inn.inn_of)};
}

bool is_equivariant(const GroupHom& h, const GammaGroup& source, const GammaGroup& target) {
  if (!(*source.gamma() == *target.gamma())) return false;
  for (std::size_t s = 0; s < source.gamma_order(); ++s)
    for (std::size_t x = 0; x < source.order(); ++x)
      if (h(source.act(static_cast<Elem>(s), static_cast<Elem>(x))) != target.act(static_cast<Elem>(s), h(static_cast<Elem>(x))))
        return false;
  return true;
}

bool is_cocycle1(const GammaGroup& c, std::span<const Elem> values) {
  const FiniteGroup& gamma = *c.gamma();
  const FiniteGroup& group = *c.group();
  if (values.size() != gamma.order()) return false;
  for (std::size_t s = 0; s < gamma.order(); ++s) {
    const auto sigma = static_cast<Elem>(s);
    for (std::size_t t = 0; t < gamma.order(); ++t) {
      const auto tau = static_cast<Elem>(t);
      if (values[gamma.mul(sigma, tau)] != group.mul(values[s], c.act(sigma, values[t]))) return false;
    }
  }
  return true;
}

TwistedModule twist_by_cocycle(const GammaGroup& base, const GammaGroup& acting, const GroupHom& g_action,
                               std::vector<Elem> psi) {
  if (!base.group()->is_abelian()) throw Error(ErrorCode::NotAbelian, base.group()->name() + " is not abelian");
  if (!(*g_action.target() == *base.aut()->carrier()) || !(*g_action.source() == *acting.group())) {
    throw Error(ErrorCode::ValidationError, "G-action must map " + acting.group()->name() + " into Aut(" +
                                                base.group()->name() + ")");
  }
  if (!is_cocycle1(acting, psi)) throw Error(ErrorCode::NotACocycle, "psi is not a 1-cocycle");
  const std::size_t n = base.order();
  std::vector<std::vector<Elem>> perms(base.gamma_order(), std::vector<Elem>(n));
  for (std::size_t s = 0; s < base.gamma_order(); ++s) {
    const Elem g = g_action(psi[s]);
    for (std::size_t a = 0; a < n; ++a) perms[s][a] = base.aut()->apply(g, base.act(static_cast<Elem>(s), static_cast<Elem>(a)));
  }
  GammaGroup twisted = make_gamma_group(base.gamma(), base.group(), perms, base.aut());
  return TwistedModule{base, acting, g_action, std::move(psi), std::move(twisted)};
}

}  // namespace nacoh
