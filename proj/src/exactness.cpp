#include "nacoh/exactness.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nacoh {

namespace {

constexpr auto kUnset = static_cast<std::size_t>(-1);
constexpr std::size_t kMaxWitnesses = 8;

std::string show(std::span<const Elem> xs) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < xs.size(); ++k) os << (k ? "," : "") << xs[k];
  os << "]";
  return os.str();
}

void fill_bijection_flags(ClassMap& m, std::size_t target_size) {
  std::vector<char> hit(target_size, 0);
  m.injective = true;
  for (std::size_t c : m.image) {
    if (c == kUnset) continue;
    if (hit[c]) m.injective = false;
    hit[c] = 1;
  }
  m.surjective = std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

ClassMap j_on_h1(const ShortExactSequence& ses, const SesCohomology& h) {
  ClassMap out;
  out.image.assign(h.h1_b.size(), kUnset);
  std::vector<Elem> c(ses.A().gamma_order());
  for (std::size_t k = 0; k < h.h1_b.cocycles.size(); ++k) {
    const auto& b = h.h1_b.cocycles[k].values;
    for (std::size_t s = 0; s < b.size(); ++s) c[s] = ses.j()(b[s]);
    const std::size_t t = h.h1_c.class_of(c);
    auto& slot = out.image[h.h1_b.partition.class_of[k]];
    if (slot == kUnset) {
      slot = t;
    } else if (slot != t) {
      out.well_defined = false;
    }
  }
  fill_bijection_flags(out, h.h1_c.size());
  return out;
}

std::vector<char> image_mask(const ClassMap& m, std::size_t target_size) {
  std::vector<char> mask(target_size, 0);
  for (std::size_t c : m.image)
    if (c != kUnset) mask[c] = 1;
  return mask;
}

ClauseTable clause_one(const SesCohomology& h, const ClassMap& j_h1, const DeltaCheck& d) {
  ClauseTable t{"(i) lifts to H1(B) iff delta is neutral", {}};
  const auto lifted = image_mask(j_h1, h.h1_c.size());
  for (std::size_t x = 0; x < h.h1_c.size(); ++x)
    t.rows.push_back({x, lifted[x] != 0, h.kernel.flags[d.image[x]].neutral});
  return t;
}

void require_abelian(const ShortExactSequence& ses) {
  if (!ses.A().group()->is_abelian())
    throw Error(ErrorCode::NotAbelian, ses.A().group()->name() + " is not abelian");
}

TwistedModule twisted_module(const SesModules& modules, std::vector<Elem> psi) {
  const GammaCrossedModule& r = *modules.restricted;
  return twist_by_cocycle(r.A(), r.G(), r.g_action(), std::move(psi));
}

// u_{s,t} = b_{st} ^s b_t^-1 b_s^-1 as elements of B
Elem delta_u(const ShortExactSequence& ses, std::span<const Elem> b, Elem s, Elem t) {
  const FiniteGroup& gamma = *ses.B().gamma();
  const FiniteGroup& bg = *ses.B().group();
  return bg.mul(bg.mul(b[gamma.mul(s, t)], bg.inv(ses.B().act(s, b[t]))), bg.inv(b[s]));
}

}  // namespace

bool ClauseTable::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const ClauseRow& r) { return r.ok(); });
}

SesCohomology ses_cohomology(const ShortExactSequence& ses, SearchOptions options) {
  SesCohomology h{ses_modules(ses), {}, {}, {}, {}, {}, {}, 0};
  h.h1_b = h1_classes(ses.B(), options);
  h.h1_c = h1_classes(ses.C(), options);
  h.kernel = h2_quotient(*h.modules.kernel, H2Kind::thin, options);
  h.middle = h2_quotient(*h.modules.middle, H2Kind::thin, options);
  h.quotient = h2_quotient(*h.modules.quotient, H2Kind::thin, options);
  h.restricted = h2_quotient(*h.modules.restricted, H2Kind::thin, options);
  h.states = h.h1_b.states + h.h1_c.states + h.kernel.states + h.middle.states + h.quotient.states +
             h.restricted.states;
  return h;
}

std::vector<Elem> least_lift(const ShortExactSequence& ses, std::span<const Elem> c) {
  std::vector<Elem> b(c.size());
  for (std::size_t s = 0; s < c.size(); ++s) b[s] = ses.least_lift(c[s]);
  return b;
}

Cocycle2Crossed delta_cocycle(const ShortExactSequence& ses, const SesModules& modules, std::span<const Elem> b) {
  const std::size_t n = ses.A().gamma_order();
  Cocycle2Crossed z{std::vector<Elem>(n * n), std::vector<Elem>(n)};
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      const Elem x = delta_u(ses, b, static_cast<Elem>(s), static_cast<Elem>(t));
      const Elem a = ses.i_inverse(x);
      if (a < 0)
        throw Error(ErrorCode::ValidationError, "u(" + std::to_string(s) + "," + std::to_string(t) +
                                                    ") = " + std::to_string(x) + " is not in i(A)");
      z.u[s * n + t] = a;
    }
  for (std::size_t s = 0; s < n; ++s) z.psi[s] = modules.middle->rho()(b[s]);
  return z;
}

std::size_t delta(const ShortExactSequence& ses, const SesCohomology& h, std::span<const Elem> c) {
  if (!is_cocycle1(ses.C(), c)) throw Error(ErrorCode::NotACocycle, "c = " + show(c) + " is not a 1-cocycle");
  return h.kernel.class_of(delta_cocycle(ses, h.modules, least_lift(ses, c)));
}

DeltaCheck delta_well_defined_check(const ShortExactSequence& ses, const SesCohomology& h, std::uint64_t budget) {
  const std::size_t n = ses.A().gamma_order();
  DeltaCheck out;
  out.image.assign(h.h1_c.size(), kUnset);
  auto fail = [&](std::string w) {
    out.ok = false;
    if (out.witnesses.size() < kMaxWitnesses) out.witnesses.push_back(std::move(w));
  };
  std::vector<std::size_t> pick(n);
  std::vector<Elem> b(n);
  for (std::size_t k = 0; k < h.h1_c.cocycles.size(); ++k) {
    const auto& c = h.h1_c.cocycles[k].values;
    const std::size_t x = h.h1_c.partition.class_of[k];
    std::fill(pick.begin(), pick.end(), 0);
    for (;;) {
      if (++out.paths > budget) {
        std::ostringstream os;
        os << "delta check: enumeration exceeded budget " << budget;
        double space = static_cast<double>(h.h1_c.cocycles.size());
        for (std::size_t s = 0; s < n; ++s) space *= static_cast<double>(ses.A().order());
        throw BudgetExceeded(budget, space, os.str());
      }
      for (std::size_t s = 0; s < n; ++s) b[s] = ses.fiber(c[s])[pick[s]];
      try {
        const Cocycle2Crossed z = delta_cocycle(ses, h.modules, b);
        const std::size_t y = h.kernel.class_of(z);
        if (out.image[x] == kUnset) {
          out.image[x] = y;
        } else if (out.image[x] != y) {
          fail("c = " + show(c) + ", b = " + show(b) + " gives class " + std::to_string(y) + ", expected " +
               std::to_string(out.image[x]));
        }
      } catch (const Error& e) {
        fail("c = " + show(c) + ", b = " + show(b) + ": " + e.what());
      }
      std::size_t p = 0;
      while (p < n && ++pick[p] == ses.fiber(c[p]).size()) pick[p++] = 0;
      if (p == n) break;
    }
  }
  return out;
}

DeltaCheck delta_well_defined_check(const ShortExactSequence& ses, SearchOptions options) {
  return delta_well_defined_check(ses, ses_cohomology(ses, options), options.budget);
}

ExactnessReport verify_exactness_theorem(const ShortExactSequence& ses, const SesCohomology& h, std::uint64_t budget) {
  ExactnessReport r;
  r.h1_b = h.h1_b.size();
  r.h1_c = h.h1_c.size();
  r.h2_kernel = h.kernel.size();
  r.h2_middle = h.middle.size();
  r.h2_quotient = h.quotient.size();
  r.j_h1 = j_on_h1(ses, h);
  r.delta = delta_well_defined_check(ses, h, budget);
  r.i_star = pushforward_classes(h.modules.i_star, h.kernel, h.middle);
  r.j_star = pushforward_classes(h.modules.j_star, h.middle, h.quotient);
  r.states = h.states + r.delta.paths;
  if (!r.delta.ok) return r;

  r.clause_i = clause_one(h, r.j_h1, r.delta);

  r.clause_ii.name = "(ii) in the image of delta iff i_* gives the unit";
  std::vector<char> from_delta(h.kernel.size(), 0);
  for (std::size_t y : r.delta.image) from_delta[y] = 1;
  const std::size_t unit = h.middle.unit_class();
  for (std::size_t y = 0; y < h.kernel.size(); ++y)
    r.clause_ii.rows.push_back({y, from_delta[y] != 0, r.i_star.image[y] == unit});

  r.clause_iii.name = "(iii) in the image of i_* iff j_* is neutral";
  const auto from_i = image_mask(r.i_star, h.middle.size());
  for (std::size_t z = 0; z < h.middle.size(); ++z)
    r.clause_iii.rows.push_back({z, from_i[z] != 0, h.quotient.flags[r.j_star.image[z]].neutral});
  return r;
}

ExactnessReport verify_exactness_theorem(const ShortExactSequence& ses, SearchOptions options) {
  return verify_exactness_theorem(ses, ses_cohomology(ses, options), options.budget);
}

PiCorollaryReport verify_pi_corollary(const ShortExactSequence& ses, const SesCohomology& h, std::uint64_t budget) {
  PiCorollaryReport r;
  r.h2_restricted = h.restricted.size();
  r.pi = pushforward_classes(h.modules.pi, h.kernel, h.restricted);

  r.lemma.name = "neutral iff pi_* image neutral";
  for (std::size_t y = 0; y < h.kernel.size(); ++y)
    r.lemma.rows.push_back({y, h.kernel.flags[y].neutral, h.restricted.flags[r.pi.image[y]].neutral});

  const ClassMap j_h1 = j_on_h1(ses, h);
  const DeltaCheck d = delta_well_defined_check(ses, h, budget);
  if (!d.ok || !j_h1.well_defined) return r;
  r.corollary.name = "lifts to H1(B) iff pi_* delta is neutral";
  const auto lifted = image_mask(j_h1, h.h1_c.size());
  for (std::size_t x = 0; x < h.h1_c.size(); ++x)
    r.corollary.rows.push_back({x, lifted[x] != 0, h.restricted.flags[r.pi.image[d.image[x]]].neutral});

  const ClauseTable one = clause_one(h, j_h1, d);
  r.matches_clause_i = one.rows.size() == r.corollary.rows.size();
  for (std::size_t k = 0; r.matches_clause_i && k < one.rows.size(); ++k)
    r.matches_clause_i = one.rows[k].in_image == r.corollary.rows[k].in_image &&
                         one.rows[k].condition == r.corollary.rows[k].condition;
  return r;
}

PiCorollaryReport verify_pi_corollary(const ShortExactSequence& ses, SearchOptions options) {
  return verify_pi_corollary(ses, ses_cohomology(ses, options), options.budget);
}

// ---------------------------------------------------------------------------
// Abelian A

ZetaReport zeta(const ShortExactSequence& ses, const SesCohomology& h, SearchOptions options) {
  require_abelian(ses);
  const H1Classes h1g = h1_classes(h.modules.restricted->G(), options);
  ZetaReport out;
  out.h1_g = h1g.size();
  out.map.assign(h.restricted.size(), kUnset);
  for (std::size_t k = 0; k < h.restricted.cocycles.size(); ++k) {
    const auto& psi = h.restricted.cocycles[k].psi;
    if (!is_cocycle1(h.modules.restricted->G(), psi)) {
      out.well_defined = false;
      continue;
    }
    const std::size_t t = h1g.class_of(psi);
    auto& slot = out.map[h.restricted.partition.class_of[k]];
    if (slot == kUnset) {
      slot = t;
    } else if (slot != t) {
      out.well_defined = false;
    }
  }
  std::vector<char> hit(h1g.size(), 0);
  for (std::size_t t : out.map)
    if (t != kUnset) hit[t] = 1;
  out.surjective = std::all_of(hit.begin(), hit.end(), [](char x) { return x != 0; });
  return out;
}

LambdaPsiReport lambda_psi(const ShortExactSequence& ses, const SesCohomology& h, std::span<const Elem> psi,
                           SearchOptions options) {
  require_abelian(ses);
  const GammaGroup& g = h.modules.restricted->G();
  if (!is_cocycle1(g, psi)) throw Error(ErrorCode::NotACocycle, "psi = " + show(psi) + " is not a 1-cocycle");
  const H1Classes h1g = h1_classes(g, options);
  const ZetaReport z = zeta(ses, h, options);
  const AbelianH2 ah = h2_abelian(twisted_module(h.modules, {psi.begin(), psi.end()}), options);

  LambdaPsiReport r;
  r.psi.assign(psi.begin(), psi.end());
  r.h1_class = h1g.class_of(psi);
  r.twisted_classes = ah.size();
  for (std::size_t c = 0; c < ah.size(); ++c)
    r.image.push_back(h.restricted.class_of(Cocycle2Crossed{ah.representative(c), r.psi}));

  std::vector<char> hit(h.restricted.size(), 0);
  r.injective = true;
  for (std::size_t y : r.image) {
    if (hit[y]) r.injective = false;
    hit[y] = 1;
  }
  r.onto_fiber = true;
  for (std::size_t y = 0; y < h.restricted.size(); ++y)
    if ((z.map[y] == r.h1_class) != (hit[y] != 0)) r.onto_fiber = false;
  r.neutral_iff_zero = true;
  for (std::size_t c = 0; c < ah.size(); ++c)
    if (h.restricted.flags[r.image[c]].neutral != (c == ah.zero_class)) r.neutral_iff_zero = false;
  return r;
}

GroupHom serre_p(const ShortExactSequence& ses, const SesModules& modules) {
  const std::size_t nc = ses.C().order();
  std::vector<Elem> images(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    const auto& fiber = ses.fiber(static_cast<Elem>(c));
    images[c] = modules.pi.phi_g(modules.middle->rho()(fiber.front()));
    for (Elem b : fiber)
      if (modules.pi.phi_g(modules.middle->rho()(b)) != images[c])
        throw Error(ErrorCode::WellDefinednessViolation,
                    "inn(b)|_A depends on the lift of c = " + std::to_string(c));
  }
  return GroupHom(ses.C().group(), modules.restricted->G().group(), std::move(images));
}

SerreClass delta_serre_lift(const ShortExactSequence& ses, const SesModules& modules, std::span<const Elem> c,
                            std::span<const Elem> b, SearchOptions options) {
  require_abelian(ses);
  if (!is_cocycle1(ses.C(), c)) throw Error(ErrorCode::NotACocycle, "c = " + show(c) + " is not a 1-cocycle");
  const std::size_t n = c.size();
  for (std::size_t s = 0; s < n; ++s)
    if (ses.j()(b[s]) != c[s]) throw Error(ErrorCode::ValidationError, "b = " + show(b) + " does not lift c");
  const GroupHom p = serre_p(ses, modules);
  SerreClass out;
  out.psi.resize(n);
  for (std::size_t s = 0; s < n; ++s) out.psi[s] = p(c[s]);
  out.u.resize(n * n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      const Elem a = ses.i_inverse(delta_u(ses, b, static_cast<Elem>(s), static_cast<Elem>(t)));
      if (a < 0) throw Error(ErrorCode::ValidationError, "u leaves i(A)");
      out.u[s * n + t] = a;
    }
  const AbelianH2 ah = h2_abelian(twisted_module(modules, out.psi), options);
  out.cls = ah.class_of(out.u);
  out.zero = out.cls == ah.zero_class;
  return out;
}

SerreClass delta_serre(const ShortExactSequence& ses, const SesModules& modules, std::span<const Elem> c,
                       SearchOptions options) {
  return delta_serre_lift(ses, modules, c, least_lift(ses, c), options);
}

bool SerreReport::ok() const {
  return zeta.well_defined && zeta.surjective &&
         std::all_of(lambdas.begin(), lambdas.end(), [](const LambdaPsiReport& l) { return l.ok(); }) &&
         std::all_of(rows.begin(), rows.end(), [](const SerreRow& r) { return r.ok(); });
}

SerreReport verify_serre_criterion(const ShortExactSequence& ses, const SesCohomology& h, SearchOptions options) {
  require_abelian(ses);
  SerreReport r;
  r.states = h.states;
  r.zeta = zeta(ses, h, options);
  const Z1Enumeration z1g = enumerate_z1(h.modules.restricted->G(), options);
  r.states += z1g.states;
  for (const auto& psi : z1g.cocycles) r.lambdas.push_back(lambda_psi(ses, h, psi.values, options));

  const ClassMap j_h1 = j_on_h1(ses, h);
  const auto lifted = image_mask(j_h1, h.h1_c.size());
  const ClassMap pi = pushforward_classes(h.modules.pi, h.kernel, h.restricted);
  std::map<std::vector<Elem>, AbelianH2> twisted;
  for (std::size_t x = 0; x < h.h1_c.size(); ++x) {
    const auto& c = h.h1_c.representative(x).values;
    const SerreClass ds = delta_serre(ses, h.modules, c, options);
    auto it = twisted.find(ds.psi);
    if (it == twisted.end())
      it = twisted.emplace(ds.psi, h2_abelian(twisted_module(h.modules, ds.psi), options)).first;
    SerreRow row;
    row.h1_class = x;
    row.lifts = lifted[x] != 0;
    row.delta_s_zero = ds.zero;
    const std::size_t lam = h.restricted.class_of(Cocycle2Crossed{it->second.representative(ds.cls), ds.psi});
    row.image_formula = pi.image[delta(ses, h, c)] == lam;
    r.rows.push_back(row);
  }
  return r;
}

SerreReport verify_serre_criterion(const ShortExactSequence& ses, SearchOptions options) {
  require_abelian(ses);
  return verify_serre_criterion(ses, ses_cohomology(ses, options), options);
}

}  // namespace nacoh
