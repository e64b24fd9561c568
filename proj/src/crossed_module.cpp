#include "nacoh/crossed_module.hpp"

#include <sstream>

namespace nacoh {

std::string AxiomFailure::message() const {
  std::ostringstream os;
  os << to_string(code) << ": " << axiom << " fails at (";
  for (std::size_t k = 0; k < witness.size(); ++k) os << (k ? "," : "") << witness[k];
  os << ")";
  return os.str();
}

std::optional<AxiomFailure> check_crossed_module(const GammaGroup& a, const GammaGroup& g, const GroupHom& rho,
                                                 const GroupHom& g_action) {
  using F = AxiomFailure;
  if (!(*a.gamma() == *g.gamma())) return F{ErrorCode::EquivarianceViolation, "shared Gamma", {}};
  if (!(*rho.source() == *a.group()) || !(*rho.target() == *g.group()))
    return F{ErrorCode::ValidationError, "rho: A -> G", {}};
  if (!(*g_action.source() == *g.group()) || !(*g_action.target() == *a.aut()->carrier()))
    return F{ErrorCode::ValidationError, "action: G -> Aut A", {}};

  const FiniteGroup& ag = *a.group();
  const FiniteGroup& gg = *g.group();
  const AutGroup& aut = *a.aut();
  const auto na = static_cast<Elem>(ag.order());
  const auto ng = static_cast<Elem>(gg.order());
  const auto ns = static_cast<Elem>(a.gamma_order());
  auto gact = [&](Elem x, Elem y) { return aut.apply(g_action(x), y); };

  for (Elem x = 0; x < na; ++x)
    for (Elem y = 0; y < na; ++y)
      if (ag.conj(x, y) != gact(rho(x), y)) return F{ErrorCode::PeifferViolation, "a a' a^-1 = ^{rho(a)} a'", {x, y}};
  for (Elem h = 0; h < ng; ++h)
    for (Elem x = 0; x < na; ++x)
      if (rho(gact(h, x)) != gg.conj(h, rho(x)))
        return F{ErrorCode::PeifferViolation, "rho(^g a) = g rho(a) g^-1", {h, x}};
  for (Elem s = 0; s < ns; ++s)
    for (Elem x = 0; x < na; ++x)
      if (rho(a.act(s, x)) != g.act(s, rho(x)))
        return F{ErrorCode::EquivarianceViolation, "rho(^s a) = ^s rho(a)", {s, x}};
  for (Elem s = 0; s < ns; ++s)
    for (Elem h = 0; h < ng; ++h)
      for (Elem x = 0; x < na; ++x)
        if (a.act(s, gact(h, x)) != gact(g.act(s, h), a.act(s, x)))
          return F{ErrorCode::EquivarianceViolation, "^s(^g a) = ^{^s g}(^s a)", {s, h, x}};
  return std::nullopt;
}

GammaCrossedModule::GammaCrossedModule(GammaGroup a, GammaGroup g, GroupHom rho, GroupHom g_action)
    : a_(std::move(a)), g_(std::move(g)), rho_(std::move(rho)), g_action_(std::move(g_action)) {
  if (auto failure = check_crossed_module(a_, g_, rho_, g_action_)) throw Error(failure->code, failure->message());
  const std::size_t na = a_.order();
  gact_.resize(g_.order() * na);
  for (std::size_t h = 0; h < g_.order(); ++h) {
    const auto& perm = a_.aut()->realize(g_action_(static_cast<Elem>(h)));
    std::copy(perm.begin(), perm.end(), gact_.begin() + static_cast<std::ptrdiff_t>(h * na));
  }
}

std::string GammaCrossedModule::label() const { return a_.group()->name() + " -> " + g_.group()->name(); }

CrossedModulePtr validate_crossed_module(GammaGroup a, GammaGroup g, GroupHom rho, GroupHom g_action) {
  return std::make_shared<const GammaCrossedModule>(std::move(a), std::move(g), std::move(rho), std::move(g_action));
}

// ---------------------------------------------------------------------------
// Morphisms

std::optional<AxiomFailure> check_morphism(const GammaCrossedModule& s, const GammaCrossedModule& t,
                                           const GroupHom& phi_a, const GroupHom& phi_g) {
  using F = AxiomFailure;
  if (!(*phi_a.source() == s.a_group()) || !(*phi_a.target() == t.a_group()))
    return F{ErrorCode::ValidationError, "phi_A: A -> A'", {}};
  if (!(*phi_g.source() == s.g_group()) || !(*phi_g.target() == t.g_group()))
    return F{ErrorCode::ValidationError, "phi_G: G -> G'", {}};
  const auto na = static_cast<Elem>(s.a_group().order());
  const auto ng = static_cast<Elem>(s.g_group().order());
  const auto ns = static_cast<Elem>(s.gamma_order());
  for (Elem x = 0; x < na; ++x)
    if (phi_g(s.rho()(x)) != t.rho()(phi_a(x)))
      return F{ErrorCode::ValidationError, "phi_G o rho = rho' o phi_A", {x}};
  for (Elem h = 0; h < ng; ++h)
    for (Elem x = 0; x < na; ++x)
      if (phi_a(s.gact(h, x)) != t.gact(phi_g(h), phi_a(x)))
        return F{ErrorCode::ValidationError, "phi_A(^g a) = ^{phi_G(g)} phi_A(a)", {h, x}};
  for (Elem sg = 0; sg < ns; ++sg) {
    for (Elem x = 0; x < na; ++x)
      if (phi_a(s.A().act(sg, x)) != t.A().act(sg, phi_a(x)))
        return F{ErrorCode::EquivarianceViolation, "phi_A equivariant", {sg, x}};
    for (Elem h = 0; h < ng; ++h)
      if (phi_g(s.G().act(sg, h)) != t.G().act(sg, phi_g(h)))
        return F{ErrorCode::EquivarianceViolation, "phi_G equivariant", {sg, h}};
  }
  return std::nullopt;
}

CrossedModuleMorphism::CrossedModuleMorphism(CrossedModulePtr s, CrossedModulePtr t, GroupHom a, GroupHom g)
    : source(std::move(s)), target(std::move(t)), phi_a(std::move(a)), phi_g(std::move(g)) {
  if (auto failure = check_morphism(*source, *target, phi_a, phi_g)) throw Error(failure->code, failure->message());
}

CrossedModuleMorphism identity_morphism(const CrossedModulePtr& m) {
  return CrossedModuleMorphism(m, m, GroupHom::identity(m->A().group()), GroupHom::identity(m->G().group()));
}

// ---------------------------------------------------------------------------
// Canonical constructions

namespace {

CrossedModulePtr inn_module_from(const GammaGroup& b, const InnData& inn) {
  return validate_crossed_module(b, inn.gamma_group, inn.inn_of, inn.subgroup.embedding);
}

GammaGroup trivial_gamma(const GroupPtr& gamma) { return trivial_gamma_group(gamma, cyclic_group(1)); }

struct KernelParts {
  InnData inn_b;
  RestrictedInn restricted;
  CrossedModulePtr kernel;
};

KernelParts kernel_parts(const ShortExactSequence& ses, GroupLimits limits) {
  InnData inn_b = induced_action_on_inn(ses.B(), limits);
  RestrictedInn r = restricted_inn_group(ses.i(), ses.A().aut(), ses.B().aut(), limits);
  GroupHom rho = inn_b.inn_of.after(ses.i());
  GroupHom action = r.restricted.embedding.after(r.restriction);
  auto kernel = validate_crossed_module(ses.A(), inn_b.gamma_group, std::move(rho), std::move(action));
  return KernelParts{std::move(inn_b), std::move(r), std::move(kernel)};
}

RestrictedCrossedModule restricted_from(const ShortExactSequence& ses, const KernelParts& parts, GroupLimits limits) {
  const RestrictedInn& r = parts.restricted;
  GammaGroup g = conjugation_action(ses.A(), r.restricted, limits);
  GroupHom rho = r.restriction.after(parts.kernel->rho());
  auto module = validate_crossed_module(ses.A(), std::move(g), std::move(rho), r.restricted.embedding);
  CrossedModuleMorphism pi(parts.kernel, module, GroupHom::identity(ses.A().group()), r.restriction);
  return RestrictedCrossedModule{std::move(module), std::move(pi)};
}

CrossedModuleMorphism quotient_morphism_from(const ShortExactSequence& ses, const CrossedModulePtr& middle,
                                             const CrossedModulePtr& quotient) {
  const GroupHom& inn_b = middle->rho();
  const GroupHom& inn_c = quotient->rho();
  std::vector<Elem> images(middle->g_group().order(), -1);
  for (std::size_t b = 0; b < ses.B().order(); ++b) {
    const Elem k = inn_b(static_cast<Elem>(b));
    const Elem v = inn_c(ses.j()(static_cast<Elem>(b)));
    if (images[k] < 0) {
      images[k] = v;
    } else if (images[k] != v) {
      throw Error(ErrorCode::WellDefinednessViolation,
                  "inn(b) -> inn(j(b)) is not well defined at b = " + std::to_string(b));
    }
  }
  GroupHom phi_g(middle->G().group(), quotient->G().group(), std::move(images));
  return CrossedModuleMorphism(middle, quotient, ses.j(), std::move(phi_g));
}

}  // namespace

CrossedModulePtr inn_crossed_module(const GammaGroup& b, GroupLimits limits) {
  return inn_module_from(b, induced_action_on_inn(b, limits));
}

CrossedModulePtr aut_crossed_module(const GammaGroup& a, GroupLimits limits) {
  InducedAutAction induced = induced_action_on_aut(a, limits);
  std::vector<Elem> images(a.order());
  for (std::size_t x = 0; x < a.order(); ++x) images[x] = a.aut()->inn_of(static_cast<Elem>(x));
  GroupHom rho(a.group(), induced.aut_carrier.group, std::move(images));
  return validate_crossed_module(a, induced.aut, std::move(rho), induced.aut_carrier.embedding);
}

CrossedModulePtr center_crossed_module(const GammaGroup& a, GroupLimits limits) {
  Subgroup z = compute_center(a.group());
  GammaGroup za = restrict_gamma_group(a, z, limits);
  GammaGroup one = trivial_gamma(a.gamma());
  GroupHom rho = GroupHom::trivial(za.group(), one.group());
  GroupHom action = GroupHom::trivial(one.group(), za.aut()->carrier());
  return validate_crossed_module(std::move(za), std::move(one), std::move(rho), std::move(action));
}

CrossedModulePtr trivial_crossed_module(const GammaGroup& a, GroupLimits) {
  if (!a.group()->is_abelian()) throw Error(ErrorCode::NotAbelian, a.group()->name() + " is not abelian");
  GammaGroup one = trivial_gamma(a.gamma());
  GroupHom rho = GroupHom::trivial(a.group(), one.group());
  GroupHom action = GroupHom::trivial(one.group(), a.aut()->carrier());
  return validate_crossed_module(a, std::move(one), std::move(rho), std::move(action));
}

CrossedModuleMorphism center_inclusion(const GammaGroup& a, const CrossedModulePtr& center,
                                       const CrossedModulePtr& inn) {
  Subgroup z = compute_center(a.group());
  GroupHom phi_a(center->A().group(), a.group(), z.embedding.images());
  GroupHom phi_g = GroupHom::trivial(center->G().group(), inn->G().group());
  return CrossedModuleMorphism(center, inn, std::move(phi_a), std::move(phi_g));
}

CrossedModulePtr ses_kernel_crossed_module(const ShortExactSequence& ses, GroupLimits limits) {
  return kernel_parts(ses, limits).kernel;
}

RestrictedCrossedModule restricted_crossed_module(const ShortExactSequence& ses, GroupLimits limits) {
  return restricted_from(ses, kernel_parts(ses, limits), limits);
}

CrossedModuleMorphism quotient_inn_morphism(const ShortExactSequence& ses, GroupLimits limits) {
  return quotient_morphism_from(ses, inn_crossed_module(ses.B(), limits), inn_crossed_module(ses.C(), limits));
}

SesModules ses_modules(const ShortExactSequence& ses, GroupLimits limits) {
  KernelParts parts = kernel_parts(ses, limits);
  CrossedModulePtr middle = inn_module_from(ses.B(), parts.inn_b);
  CrossedModulePtr quotient = inn_crossed_module(ses.C(), limits);
  RestrictedCrossedModule restricted = restricted_from(ses, parts, limits);
  CrossedModuleMorphism i_star(parts.kernel, middle, ses.i(), GroupHom::identity(middle->G().group()));
  CrossedModuleMorphism j_star = quotient_morphism_from(ses, middle, quotient);
  return SesModules{parts.kernel, middle, quotient, restricted.module, std::move(i_star), std::move(j_star),
                    std::move(restricted.pi)};
}

// ---------------------------------------------------------------------------
// Short exact sequences

ShortExactSequence::ShortExactSequence(GammaGroup a, GammaGroup b, GammaGroup c, GroupHom i, GroupHom j)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), i_(std::move(i)), j_(std::move(j)) {
  if (!(*a_.gamma() == *b_.gamma()) || !(*b_.gamma() == *c_.gamma()))
    throw Error(ErrorCode::NotEquivariant, "A, B, C must share Gamma");
  if (!(*i_.source() == *a_.group()) || !(*i_.target() == *b_.group()))
    throw Error(ErrorCode::ValidationError, "i must map A to B");
  if (!(*j_.source() == *b_.group()) || !(*j_.target() == *c_.group()))
    throw Error(ErrorCode::ValidationError, "j must map B to C");
  if (!i_.is_injective()) throw Error(ErrorCode::NotInjective, "i is not injective");
  if (!j_.is_surjective()) throw Error(ErrorCode::NotSurjective, "j is not surjective");
  if (i_.image() != j_.kernel()) throw Error(ErrorCode::ImageKernelMismatch, "image(i) != kernel(j)");
  if (!is_equivariant(i_, a_, b_)) throw Error(ErrorCode::NotEquivariant, "i is not Gamma-equivariant");
  if (!is_equivariant(j_, b_, c_)) throw Error(ErrorCode::NotEquivariant, "j is not Gamma-equivariant");
  i_back_.assign(b_.order(), -1);
  for (std::size_t x = 0; x < a_.order(); ++x) i_back_[i_(static_cast<Elem>(x))] = static_cast<Elem>(x);
  fibers_.assign(c_.order(), {});
  for (std::size_t x = 0; x < b_.order(); ++x) fibers_[j_(static_cast<Elem>(x))].push_back(static_cast<Elem>(x));
  lift_.resize(c_.order());
  for (std::size_t x = 0; x < c_.order(); ++x) lift_[x] = fibers_[x].front();
}

}  // namespace nacoh
