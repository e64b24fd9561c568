#include "nacoh/cohomology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nacoh {

namespace {

constexpr auto kUnset = static_cast<std::size_t>(-1);

// Delta maps s -> a, t != s -> 1: these generate Maps(Gamma, A).
std::vector<std::vector<Elem>> delta_maps(const FiniteGroup& gamma, const FiniteGroup& a) {
  std::vector<std::vector<Elem>> out;
  for (std::size_t s = 0; s < gamma.order(); ++s)
    for (Elem x : a.generators()) {
      std::vector<Elem> w(gamma.order(), 0);
      w[s] = x;
      out.push_back(std::move(w));
    }
  return out;
}

OrbitPartition partition_with(const CodeIndex& index, std::size_t moves, const MoveFn& move, int jobs) {
  return jobs > 1 ? orbit_partition(index, moves, move, jobs) : orbit_partition_serial(index, moves, move);
}

bool all_zero(std::span<const Elem> xs) {
  return std::all_of(xs.begin(), xs.end(), [](Elem x) { return x == 0; });
}

void fill_map_flags(ClassMap& m, std::size_t target_size) {
  std::vector<char> hit(target_size, 0);
  m.injective = true;
  for (std::size_t c : m.image) {
    if (hit[c]) m.injective = false;
    hit[c] = 1;
  }
  m.surjective = std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

void charge(std::uint64_t& states, std::uint64_t amount, std::uint64_t budget, double space, const char* what) {
  states += amount;
  if (states > budget) {
    std::ostringstream os;
    os << what << ": enumeration exceeded budget " << budget << " (unpruned space ~ " << space << ")";
    throw BudgetExceeded(budget, space, os.str());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// H^1

std::size_t H1Classes::class_of(std::span<const Elem> values) const {
  auto k = index.find(values);
  if (!k) throw Error(ErrorCode::NotACocycle, "not a 1-cocycle");
  return partition.class_of[*k];
}

std::size_t H1Classes::trivial_class() const {
  std::vector<Elem> zero(index.stride(), 0);
  return class_of(zero);
}

H1Classes h1_classes(const GammaGroup& c, SearchOptions options) {
  Z1Enumeration z1 = enumerate_z1(c, options);
  const FiniteGroup& grp = *c.group();
  const std::size_t n = c.gamma_order();
  H1Classes out;
  out.states = z1.states;
  std::vector<std::vector<Elem>> codes;
  for (const auto& z : z1.cocycles) codes.push_back(z.values);
  out.index = CodeIndex(n, std::move(codes));
  for (std::size_t k = 0; k < out.index.size(); ++k) {
    auto row = out.index.at(k);
    out.cocycles.push_back(Cocycle1{{row.begin(), row.end()}});
  }
  const auto gens = grp.generators();
  MoveFn move = [&](std::size_t m, std::span<const Elem> in, std::span<Elem> o) {
    const Elem x = gens[m];
    for (std::size_t s = 0; s < n; ++s)
      o[s] = grp.mul(grp.mul(x, in[s]), grp.inv(c.act(static_cast<Elem>(s), x)));
  };
  out.partition = partition_with(out.index, gens.size(), move, options.jobs);
  return out;
}

// ---------------------------------------------------------------------------
// Crossed H^2

const char* to_string(H2Kind kind) { return kind == H2Kind::thick ? "thick" : "thin"; }

std::size_t H2Classes::class_of(const Cocycle2Crossed& z) const {
  auto k = index.find(z.encode());
  if (!k) throw Error(ErrorCode::NotACocycle, "not an enumerated 2-cocycle");
  return partition.class_of[*k];
}

std::size_t H2Classes::unit_class() const {
  for (std::size_t c = 0; c < flags.size(); ++c)
    if (flags[c].unit) return c;
  throw Error(ErrorCode::ValidationError, "unit cocycle missing from enumeration");
}

std::size_t H2Classes::neutral_count() const {
  return static_cast<std::size_t>(std::count_if(flags.begin(), flags.end(), [](const ClassFlags& f) { return f.neutral; }));
}

H2Classes h2_classes(const GammaCrossedModule& m, const Z2Enumeration& z2, H2Kind kind, int jobs) {
  const std::size_t n = m.gamma_order();
  H2Classes out;
  out.kind = kind;
  out.states = z2.states;
  out.space = z2.space;
  std::vector<std::vector<Elem>> codes;
  codes.reserve(z2.cocycles.size());
  for (const auto& z : z2.cocycles) codes.push_back(z.encode());
  out.index = CodeIndex(n * n + n, std::move(codes));
  out.cocycles.reserve(out.index.size());
  for (std::size_t k = 0; k < out.index.size(); ++k) out.cocycles.push_back(Cocycle2Crossed::decode(out.index.at(k), n));

  const auto ws = delta_maps(m.gamma(), m.a_group());
  std::vector<Elem> gs;
  if (kind == H2Kind::thin) gs = m.g_group().generators();
  const GammaCrossedModule* mp = &m;
  MoveFn move = [mp, &ws, &gs](std::size_t k, std::span<const Elem> in, std::span<Elem> o) {
    if (k < ws.size()) {
      detail::act_w_into(*mp, ws[k], in, o);
    } else {
      detail::act_g_into(*mp, gs[k - ws.size()], in, o);
    }
  };
  out.partition = partition_with(out.index, ws.size() + gs.size(), move, jobs);

  out.flags.assign(out.partition.size(), {});
  for (std::size_t k = 0; k < out.index.size(); ++k) {
    auto code = out.index.at(k);
    auto& f = out.flags[out.partition.class_of[k]];
    if (all_zero(code.first(n * n))) f.neutral = true;
    if (all_zero(code)) f.unit = true;
  }
  return out;
}

H2Classes h2_quotient(const GammaCrossedModule& m, H2Kind kind, SearchOptions options) {
  return h2_classes(m, enumerate_z2_crossed(m, options), kind, options.jobs);
}

ClassMap kappa(const H2Classes& thick, const H2Classes& thin) {
  ClassMap out;
  out.image.assign(thick.size(), kUnset);
  for (std::size_t k = 0; k < thick.cocycles.size(); ++k) {
    const std::size_t c = thick.partition.class_of[k];
    const std::size_t t = thin.class_of(thick.cocycles[k]);
    if (out.image[c] == kUnset) {
      out.image[c] = t;
    } else if (out.image[c] != t) {
      out.well_defined = false;
    }
  }
  for (std::size_t c = 0; c < thick.size(); ++c)
    if (thick.flags[c].neutral && !thin.flags[out.image[c]].neutral) out.preserves_neutral = false;
  out.preserves_unit = out.image[thick.unit_class()] == thin.unit_class();
  fill_map_flags(out, thin.size());
  return out;
}

ClassMap pushforward_classes(const CrossedModuleMorphism& m, const H2Classes& source, const H2Classes& target) {
  const std::size_t n = m.source->gamma_order();
  ClassMap out;
  out.image.assign(source.size(), kUnset);
  std::vector<Elem> code(n * n + n);
  for (std::size_t k = 0; k < source.index.size(); ++k) {
    auto in = source.index.at(k);
    for (std::size_t p = 0; p < n * n; ++p) code[p] = m.phi_a(in[p]);
    for (std::size_t p = n * n; p < code.size(); ++p) code[p] = m.phi_g(in[p]);
    auto t = target.index.find(code);
    if (!t) throw Error(ErrorCode::NotACocycle, "pushforward left Z^2 of the target");
    const std::size_t tc = target.partition.class_of[*t];
    auto& slot = out.image[source.partition.class_of[k]];
    if (slot == kUnset) {
      slot = tc;
    } else if (slot != tc) {
      out.well_defined = false;
    }
  }
  for (std::size_t c = 0; c < source.size(); ++c)
    if (source.flags[c].neutral && !target.flags[out.image[c]].neutral) out.preserves_neutral = false;
  out.preserves_unit = out.image[source.unit_class()] == target.unit_class();
  fill_map_flags(out, target.size());
  return out;
}

// ---------------------------------------------------------------------------
// H^2(A)

std::size_t KernelH2::class_of(const KernelCocycle2& z) const {
  auto k = index.find(z.encode());
  if (!k) throw Error(ErrorCode::NotACocycle, "not an enumerated kernel 2-cocycle");
  return partition.class_of[*k];
}

std::size_t KernelH2::unit_class() const {
  for (std::size_t c = 0; c < flags.size(); ++c)
    if (flags[c].unit) return c;
  throw Error(ErrorCode::ValidationError, "unit cocycle missing from enumeration");
}

KernelH2 h2_kernel(const GammaGroup& a, SearchOptions options) {
  KernelZ2Enumeration z2 = enumerate_z2_kernel(a, options);
  const std::size_t n = a.gamma_order();
  KernelH2 out;
  out.states = z2.states;
  out.space = z2.space;
  std::vector<std::vector<Elem>> codes;
  for (const auto& z : z2.cocycles) codes.push_back(z.encode());
  out.index = CodeIndex(n * n + n, std::move(codes));
  for (std::size_t k = 0; k < out.index.size(); ++k) out.cocycles.push_back(KernelCocycle2::decode(out.index.at(k), n));

  const auto ws = delta_maps(*a.gamma(), *a.group());
  const GammaGroup* ap = &a;
  MoveFn move = [ap, &ws](std::size_t k, std::span<const Elem> in, std::span<Elem> o) {
    detail::act_w_kernel_into(*ap, ws[k], in, o);
  };
  out.partition = partition_with(out.index, ws.size(), move, options.jobs);

  const auto unit = unit_kernel_cocycle(a).encode();
  out.flags.assign(out.partition.size(), {});
  for (std::size_t k = 0; k < out.index.size(); ++k) {
    auto code = out.index.at(k);
    auto& f = out.flags[out.partition.class_of[k]];
    if (all_zero(code.first(n * n))) f.neutral = true;
    if (std::equal(code.begin(), code.end(), unit.begin())) f.unit = true;
  }
  return out;
}

namespace {

struct LambdaParts {
  CrossedModulePtr inn;
  KernelH2 kernel;
  H2Classes thick;
  H2Classes thin;
  LambdaReport report;
};

LambdaParts lambda_parts(const GammaGroup& a, SearchOptions options) {
  CrossedModulePtr inn = inn_crossed_module(a);
  KernelH2 kernel = h2_kernel(a, options);
  Z2Enumeration z2 = enumerate_z2_crossed(*inn, options);
  H2Classes thick = h2_classes(*inn, z2, H2Kind::thick, options.jobs);
  H2Classes thin = h2_classes(*inn, z2, H2Kind::thin, options.jobs);
  const GammaCrossedModule& m = *inn;
  const std::size_t n = a.gamma_order();

  LambdaReport r;
  r.kernel_classes = kernel.size();
  r.thick_classes = thick.size();
  r.thin_classes = thin.size();
  r.states = kernel.states + z2.states;

  // cocycle level
  bool cocycles_ok = kernel.cocycles.size() == thick.cocycles.size();
  std::vector<char> seen(thick.cocycles.size(), 0);
  std::vector<std::size_t> thick_of_kernel(kernel.cocycles.size(), kUnset);
  for (std::size_t k = 0; k < kernel.cocycles.size(); ++k) {
    const Cocycle2Crossed z = kernel_to_crossed(a, m, kernel.cocycles[k]);
    auto t = thick.index.find(z.encode());
    if (!t || seen[*t] || crossed_to_kernel(a, m, z) != kernel.cocycles[k]) {
      cocycles_ok = false;
      continue;
    }
    seen[*t] = 1;
    thick_of_kernel[k] = *t;
  }
  for (const auto& z : thick.cocycles)
    if (!kernel.index.find(crossed_to_kernel(a, m, z).encode())) cocycles_ok = false;
  r.cocycle_bijection = cocycles_ok;

  // class level, thick
  ClassMap to_thick;
  to_thick.image.assign(kernel.size(), kUnset);
  for (std::size_t k = 0; k < kernel.cocycles.size(); ++k) {
    if (thick_of_kernel[k] == kUnset) {
      to_thick.well_defined = false;
      continue;
    }
    const std::size_t tc = thick.partition.class_of[thick_of_kernel[k]];
    auto& slot = to_thick.image[kernel.partition.class_of[k]];
    if (slot == kUnset) {
      slot = tc;
    } else if (slot != tc) {
      to_thick.well_defined = false;
    }
  }
  bool flags_ok = to_thick.well_defined;
  if (to_thick.well_defined) {
    fill_map_flags(to_thick, thick.size());
    for (std::size_t c = 0; c < kernel.size(); ++c) {
      const auto& kf = kernel.flags[c];
      const auto& tf = thick.flags[to_thick.image[c]];
      if (kf.neutral != tf.neutral || kf.unit != tf.unit) flags_ok = false;
    }
  }
  r.thick_bijection = to_thick.well_defined && to_thick.injective && to_thick.surjective;

  // lambda: thick class -> thin class of the same cocycle
  r.map.assign(kernel.size(), kUnset);
  for (std::size_t c = 0; c < kernel.size(); ++c) {
    const Cocycle2Crossed z = kernel_to_crossed(a, m, kernel.representative(c));
    r.map[c] = thin.class_of(z);
    const auto& kf = kernel.flags[c];
    const auto& tf = thin.flags[r.map[c]];
    if (kf.neutral && !tf.neutral) flags_ok = false;
    if (kf.unit != tf.unit) flags_ok = false;
  }
  r.flags_preserved = flags_ok;
  ClassMap lam;
  lam.image = r.map;
  fill_map_flags(lam, thin.size());
  r.injective = lam.injective;
  r.surjective = lam.surjective;

  // g * z = w * z for g = inn(b), w_s = b psi_s(^s b)^-1
  const FiniteGroup& ag = m.a_group();
  std::vector<Elem> w(n), lhs(n * n + n), rhs(n * n + n);
  for (std::size_t b = 0; b < ag.order(); ++b) {
    const Elem g = m.rho()(static_cast<Elem>(b));
    for (std::size_t k = 0; k < thick.index.size(); ++k) {
      auto code = thick.index.at(k);
      for (std::size_t s = 0; s < n; ++s) {
        const Elem psi = code[n * n + s];
        w[s] = ag.mul(static_cast<Elem>(b), ag.inv(m.gact(psi, a.act(static_cast<Elem>(s), static_cast<Elem>(b)))));
      }
      detail::act_g_into(m, g, code, lhs);
      detail::act_w_into(m, w, code, rhs);
      ++r.second_proof_checks;
      if (lhs != rhs) ++r.second_proof_violations;
    }
  }
  charge(r.states, r.second_proof_checks, options.budget, z2.space, "lambda check");
  return LambdaParts{std::move(inn), std::move(kernel), std::move(thick), std::move(thin), std::move(r)};
}

}  // namespace

LambdaReport lambda_map(const GammaGroup& a, SearchOptions options) { return lambda_parts(a, options).report; }

// ---------------------------------------------------------------------------
// Abelian H^2

std::size_t AbelianH2::class_of(std::span<const Elem> u) const {
  auto k = index.find(u);
  if (!k) throw Error(ErrorCode::NotACocycle, "not an abelian 2-cocycle");
  return partition.class_of[*k];
}

std::vector<Elem> abelian_coboundary(const GammaGroup& module, std::span<const Elem> w) {
  const FiniteGroup& gamma = *module.gamma();
  const FiniteGroup& a = *module.group();
  const std::size_t n = gamma.order();
  std::vector<Elem> out(n * n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      const auto st = gamma.mul(static_cast<Elem>(s), static_cast<Elem>(t));
      out[s * n + t] =
          a.mul(a.mul(w[st], a.inv(module.act(static_cast<Elem>(s), w[t]))), a.inv(w[s]));
    }
  return out;
}

AbelianH2 h2_abelian(const GammaGroup& module, SearchOptions options) {
  AbelianZ2Enumeration z2 = enumerate_z2_abelian(module, options);
  const FiniteGroup& a = *module.group();
  const std::size_t n = module.gamma_order();
  AbelianH2 out;
  out.states = z2.states;
  out.index = CodeIndex(n * n, z2.cocycles);
  for (std::size_t k = 0; k < out.index.size(); ++k) {
    auto row = out.index.at(k);
    out.cocycles.emplace_back(row.begin(), row.end());
  }

  // B^2 by scanning all of Maps(Gamma, A)
  std::set<std::vector<Elem>> b2;
  std::vector<Elem> w(n, 0);
  double maps = 1;
  for (std::size_t s = 0; s < n; ++s) maps *= static_cast<double>(a.order());
  for (;;) {
    charge(out.states, 1, options.budget, maps, "B2(Gamma, A)");
    b2.insert(abelian_coboundary(module, w));
    std::size_t p = 0;
    while (p < n && ++w[p] == static_cast<Elem>(a.order())) w[p++] = 0;
    if (p == n) break;
  }
  out.coboundaries = b2.size();

  // cosets z B^2
  out.partition.class_of.assign(out.index.size(), kUnset);
  std::vector<Elem> prod(n * n);
  for (std::size_t k = 0; k < out.index.size(); ++k) {
    if (out.partition.class_of[k] != kUnset) continue;
    const std::size_t c = out.partition.members.size();
    auto& members = out.partition.members.emplace_back();
    auto z = out.index.at(k);
    for (const auto& b : b2) {
      for (std::size_t p = 0; p < n * n; ++p) prod[p] = a.mul(z[p], b[p]);
      auto j = out.index.find(prod);
      if (!j) throw Error(ErrorCode::NotACocycle, "coboundary times cocycle left Z^2");
      out.partition.class_of[*j] = c;
      members.push_back(*j);
    }
    std::sort(members.begin(), members.end());
  }

  std::vector<Elem> zero(n * n, 0);
  out.zero_class = out.class_of(zero);
  const std::size_t h = out.size();
  out.product.assign(h * h, 0);
  for (std::size_t x = 0; x < h; ++x)
    for (std::size_t y = 0; y < h; ++y) {
      const auto& u = out.representative(x);
      const auto& v = out.representative(y);
      for (std::size_t p = 0; p < n * n; ++p) prod[p] = a.mul(u[p], v[p]);
      out.product[x * h + y] = out.class_of(prod);
    }
  return out;
}

AbelianH2 h2_abelian(const TwistedModule& module, SearchOptions options) {
  return h2_abelian(module.twisted, options);
}

// ---------------------------------------------------------------------------
// H^2(Z_A) on H^2(A)

CenterActionReport center_h2_action(const GammaGroup& a, SearchOptions options) {
  CenterActionReport r;
  CrossedModulePtr center = center_crossed_module(a);
  AbelianH2 hz = h2_abelian(center->A(), options);
  H2Classes thin_z = h2_quotient(*center, H2Kind::thin, options);
  LambdaParts lp = lambda_parts(a, options);
  const KernelH2& kernel = lp.kernel;
  const H2Classes& thin = lp.thin;
  CrossedModuleMorphism iota = center_inclusion(a, center, lp.inn);
  const FiniteGroup& ag = *a.group();
  const std::size_t n = a.gamma_order();

  r.center_classes = hz.size();
  r.kernel_classes = kernel.size();
  r.thin_classes = thin.size();
  r.states = hz.states + thin_z.states + lp.report.states;

  // [z] -> [z, 1] into thin H^2(Z_A -> 1)
  {
    ClassMap m;
    for (std::size_t c = 0; c < hz.size(); ++c) {
      const auto& u = hz.representative(c);
      m.image.push_back(thin_z.class_of(Cocycle2Crossed{u, std::vector<Elem>(n, 0)}));
    }
    fill_map_flags(m, thin_z.size());
    r.center_matches_crossed = hz.size() == thin_z.size() && m.injective && m.surjective;
  }

  const double space = static_cast<double>(hz.cocycles.size()) *
                       static_cast<double>(kernel.cocycles.size() + thin.cocycles.size());
  charge(r.states, static_cast<std::uint64_t>(space), options.budget, space, "H2(Z_A) action");

  auto embed = [&](std::span<const Elem> z, std::span<const Elem> u, std::span<Elem> out) {
    for (std::size_t p = 0; p < n * n; ++p) out[p] = ag.mul(iota.phi_a(z[p]), u[p]);
  };

  r.well_defined = kernel.size() > 0;
  r.action.assign(hz.size(), std::vector<std::size_t>(kernel.size(), kUnset));
  std::vector<Elem> code(n * n + n);
  for (std::size_t zi = 0; zi < hz.cocycles.size(); ++zi) {
    const std::size_t zc = hz.partition.class_of[zi];
    for (std::size_t k = 0; k < kernel.index.size(); ++k) {
      auto in = kernel.index.at(k);
      embed(hz.cocycles[zi], in, code);
      std::copy(in.begin() + static_cast<std::ptrdiff_t>(n * n), in.end(), code.begin() + static_cast<std::ptrdiff_t>(n * n));
      auto t = kernel.index.find(code);
      if (!t) {
        r.well_defined = false;
        continue;
      }
      auto& slot = r.action[zc][kernel.partition.class_of[k]];
      const std::size_t tc = kernel.partition.class_of[*t];
      if (slot == kUnset) {
        slot = tc;
      } else if (slot != tc) {
        r.well_defined = false;
      }
    }
  }

  bool thin_ok = thin.size() > 0;
  r.thin_action.assign(hz.size(), std::vector<std::size_t>(thin.size(), kUnset));
  for (std::size_t zi = 0; zi < hz.cocycles.size(); ++zi) {
    const std::size_t zc = hz.partition.class_of[zi];
    for (std::size_t k = 0; k < thin.index.size(); ++k) {
      auto in = thin.index.at(k);
      embed(hz.cocycles[zi], in, code);
      std::copy(in.begin() + static_cast<std::ptrdiff_t>(n * n), in.end(), code.begin() + static_cast<std::ptrdiff_t>(n * n));
      auto t = thin.index.find(code);
      if (!t) {
        thin_ok = false;
        continue;
      }
      auto& slot = r.thin_action[zc][thin.partition.class_of[k]];
      const std::size_t tc = thin.partition.class_of[*t];
      if (slot == kUnset) {
        slot = tc;
      } else if (slot != tc) {
        thin_ok = false;
      }
    }
  }

  if (r.well_defined) {
    r.simply_transitive = true;
    for (std::size_t x = 0; x < kernel.size(); ++x) {
      std::vector<char> hit(kernel.size(), 0);
      for (std::size_t z = 0; z < hz.size(); ++z) {
        if (hit[r.action[z][x]]) r.simply_transitive = false;
        hit[r.action[z][x]] = 1;
      }
      if (!std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; })) r.simply_transitive = false;
    }
  }

  {
    ClassMap m;
    for (std::size_t c = 0; c < hz.size(); ++c) {
      const auto& z = hz.representative(c);
      std::vector<Elem> u(n * n);
      for (std::size_t p = 0; p < n * n; ++p) u[p] = iota.phi_a(z[p]);
      m.image.push_back(thin.class_of(Cocycle2Crossed{u, std::vector<Elem>(n, 0)}));
    }
    fill_map_flags(m, thin.size());
    r.mu = m.image;
    r.mu_bijective = m.injective && m.surjective;
  }

  {
    ClassMap m = pushforward_classes(iota, thin_z, thin);
    r.iota = m.image;
    r.iota_bijective = m.well_defined && m.injective && m.surjective;
  }

  r.lambda_equivariant = r.well_defined && thin_ok && lp.report.ok();
  if (r.lambda_equivariant) {
    const auto& lam = lp.report.map;
    for (std::size_t z = 0; z < hz.size(); ++z)
      for (std::size_t x = 0; x < kernel.size(); ++x)
        if (lam[r.action[z][x]] != r.thin_action[z][lam[x]]) r.lambda_equivariant = false;
  }
  return r;
}

}  // namespace nacoh
