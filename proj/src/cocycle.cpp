#include "nacoh/cocycle.hpp"

#include <algorithm>
#include <string>

namespace nacoh {

namespace {

std::size_t idx(std::size_t n, Elem s, Elem t) { return static_cast<std::size_t>(s) * n + static_cast<std::size_t>(t); }

void require_cocycle(const GammaCrossedModule& m, const Cocycle2Crossed& z, const char* what) {
  auto check = is_cocycle2_crossed(m, z);
  if (!check) {
    throw Error(ErrorCode::NotACocycle, std::string(what) + " produced a non-cocycle: condition " +
                                            std::to_string(check.condition) + " at (" +
                                            std::to_string(check.witness[0]) + "," + std::to_string(check.witness[1]) +
                                            "," + std::to_string(check.witness[2]) + ")");
  }
}

}  // namespace

bool Cocycle2Crossed::is_neutral() const {
  return std::all_of(u.begin(), u.end(), [](Elem x) { return x == 0; });
}

bool Cocycle2Crossed::is_unit() const {
  return is_neutral() && std::all_of(psi.begin(), psi.end(), [](Elem x) { return x == 0; });
}

std::vector<Elem> Cocycle2Crossed::encode() const {
  std::vector<Elem> out(u);
  out.insert(out.end(), psi.begin(), psi.end());
  return out;
}

Cocycle2Crossed Cocycle2Crossed::decode(std::span<const Elem> code, std::size_t n) {
  return Cocycle2Crossed{{code.begin(), code.begin() + static_cast<std::ptrdiff_t>(n * n)},
                         {code.begin() + static_cast<std::ptrdiff_t>(n * n), code.end()}};
}

std::vector<Elem> KernelCocycle2::encode() const {
  std::vector<Elem> out(u);
  out.insert(out.end(), f.begin(), f.end());
  return out;
}

KernelCocycle2 KernelCocycle2::decode(std::span<const Elem> code, std::size_t n) {
  return KernelCocycle2{{code.begin(), code.begin() + static_cast<std::ptrdiff_t>(n * n)},
                        {code.begin() + static_cast<std::ptrdiff_t>(n * n), code.end()}};
}

CocycleCheck is_cocycle2_crossed(const GammaCrossedModule& m, const Cocycle2Crossed& z) {
  const FiniteGroup& gamma = m.gamma();
  const FiniteGroup& a = m.a_group();
  const FiniteGroup& g = m.g_group();
  const std::size_t n = gamma.order();
  if (z.u.size() != n * n || z.psi.size() != n) return CocycleCheck{false, 0, {-1, -1, -1}};
  for (Elem x : z.u)
    if (x < 0 || static_cast<std::size_t>(x) >= a.order()) return CocycleCheck{false, 0, {-1, -1, -1}};
  for (Elem x : z.psi)
    if (x < 0 || static_cast<std::size_t>(x) >= g.order()) return CocycleCheck{false, 0, {-1, -1, -1}};

  const auto ns = static_cast<Elem>(n);
  for (Elem s = 0; s < ns; ++s)
    for (Elem t = 0; t < ns; ++t) {
      const Elem st = gamma.mul(s, t);
      for (Elem v = 0; v < ns; ++v) {
        const Elem lhs = a.mul(z.u[idx(n, s, gamma.mul(t, v))], m.gact(z.psi[s], m.A().act(s, z.u[idx(n, t, v)])));
        const Elem rhs = a.mul(z.u[idx(n, st, v)], z.u[idx(n, s, t)]);
        if (lhs != rhs) return CocycleCheck{false, 1, {s, t, v}};
      }
    }
  for (Elem s = 0; s < ns; ++s)
    for (Elem t = 0; t < ns; ++t) {
      const Elem rhs = g.mul(g.mul(m.rho()(z.u[idx(n, s, t)]), z.psi[s]), m.G().act(s, z.psi[t]));
      if (z.psi[gamma.mul(s, t)] != rhs) return CocycleCheck{false, 2, {s, t, -1}};
    }
  return {};
}

CocycleCheck is_kernel_cocycle(const GammaGroup& a, const KernelCocycle2& z) {
  const FiniteGroup& gamma = *a.gamma();
  const FiniteGroup& grp = *a.group();
  const AutGroup& aut = *a.aut();
  const FiniteGroup& carrier = *aut.carrier();
  const std::size_t n = gamma.order();
  if (z.u.size() != n * n || z.f.size() != n) return CocycleCheck{false, 0, {-1, -1, -1}};
  const auto ns = static_cast<Elem>(n);
  for (Elem s = 0; s < ns; ++s)
    for (Elem t = 0; t < ns; ++t) {
      const Elem rhs = carrier.mul(aut.inn_of(z.u[idx(n, s, t)]), carrier.mul(z.f[s], z.f[t]));
      if (z.f[gamma.mul(s, t)] != rhs) return CocycleCheck{false, 1, {s, t, -1}};
    }
  for (Elem s = 0; s < ns; ++s)
    for (Elem t = 0; t < ns; ++t)
      for (Elem v = 0; v < ns; ++v) {
        const Elem lhs = grp.mul(z.u[idx(n, s, gamma.mul(t, v))], aut.apply(z.f[s], z.u[idx(n, t, v)]));
        const Elem rhs = grp.mul(z.u[idx(n, gamma.mul(s, t), v)], z.u[idx(n, s, t)]);
        if (lhs != rhs) return CocycleCheck{false, 2, {s, t, v}};
      }
  const auto& inn = aut.inn_subgroup();
  for (Elem s = 0; s < ns; ++s) {
    const Elem psi = carrier.mul(z.f[s], carrier.inv(a.action_of(s)));
    if (!std::binary_search(inn.begin(), inn.end(), psi)) return CocycleCheck{false, 3, {s, -1, -1}};
  }
  return {};
}

Cocycle2Crossed unit_cocycle(const GammaCrossedModule& m) {
  const std::size_t n = m.gamma_order();
  return Cocycle2Crossed{std::vector<Elem>(n * n, 0), std::vector<Elem>(n, 0)};
}

KernelCocycle2 unit_kernel_cocycle(const GammaGroup& a) {
  const std::size_t n = a.gamma_order();
  return KernelCocycle2{std::vector<Elem>(n * n, 0), a.action().images()};
}

namespace detail {

void act_w_into(const GammaCrossedModule& m, std::span<const Elem> w, std::span<const Elem> code, std::span<Elem> out) {
  const FiniteGroup& gamma = m.gamma();
  const FiniteGroup& a = m.a_group();
  const FiniteGroup& g = m.g_group();
  const std::size_t n = gamma.order();
  const Elem* psi = code.data() + n * n;
  const auto ns = static_cast<Elem>(n);
  for (Elem s = 0; s < ns; ++s) {
    const Elem ws_inv = a.inv(w[s]);
    for (Elem t = 0; t < ns; ++t) {
      const Elem twisted = m.gact(psi[s], m.A().act(s, w[t]));
      out[idx(n, s, t)] = a.mul(a.mul(a.mul(w[gamma.mul(s, t)], code[idx(n, s, t)]), a.inv(twisted)), ws_inv);
    }
  }
  for (Elem s = 0; s < ns; ++s) out[n * n + s] = g.mul(m.rho()(w[s]), psi[s]);
}

void act_g_into(const GammaCrossedModule& m, Elem h, std::span<const Elem> code, std::span<Elem> out) {
  const FiniteGroup& g = m.g_group();
  const std::size_t n = m.gamma_order();
  for (std::size_t k = 0; k < n * n; ++k) out[k] = m.gact(h, code[k]);
  const Elem h_inv = g.inv(h);
  for (std::size_t s = 0; s < n; ++s)
    out[n * n + s] = g.mul(g.mul(h, code[n * n + s]), m.G().act(static_cast<Elem>(s), h_inv));
}

void act_w_kernel_into(const GammaGroup& a, std::span<const Elem> w, std::span<const Elem> code, std::span<Elem> out) {
  const FiniteGroup& gamma = *a.gamma();
  const FiniteGroup& grp = *a.group();
  const AutGroup& aut = *a.aut();
  const FiniteGroup& carrier = *aut.carrier();
  const std::size_t n = gamma.order();
  const Elem* f = code.data() + n * n;
  const auto ns = static_cast<Elem>(n);
  for (Elem s = 0; s < ns; ++s) {
    const Elem ws_inv = grp.inv(w[s]);
    for (Elem t = 0; t < ns; ++t) {
      const Elem fw = aut.apply(f[s], w[t]);
      out[idx(n, s, t)] = grp.mul(grp.mul(grp.mul(w[gamma.mul(s, t)], code[idx(n, s, t)]), grp.inv(fw)), ws_inv);
    }
  }
  for (Elem s = 0; s < ns; ++s) out[n * n + s] = carrier.mul(aut.inn_of(w[s]), f[s]);
}

}  // namespace detail

Cocycle2Crossed act_w(const GammaCrossedModule& m, std::span<const Elem> w, const Cocycle2Crossed& z) {
  const auto code = z.encode();
  std::vector<Elem> out(code.size());
  detail::act_w_into(m, w, code, out);
  auto result = Cocycle2Crossed::decode(out, m.gamma_order());
  require_cocycle(m, result, "act_w");
  return result;
}

Cocycle2Crossed act_g(const GammaCrossedModule& m, Elem g, const Cocycle2Crossed& z) {
  const auto code = z.encode();
  std::vector<Elem> out(code.size());
  detail::act_g_into(m, g, code, out);
  auto result = Cocycle2Crossed::decode(out, m.gamma_order());
  require_cocycle(m, result, "act_g");
  return result;
}

Cocycle2Crossed act_c1(const GammaCrossedModule& m, const C1Element& e, const Cocycle2Crossed& z) {
  return act_w(m, e.w, act_g(m, e.g, z));
}

std::vector<Elem> g_star_w(const GammaCrossedModule& m, Elem g, std::span<const Elem> w) {
  std::vector<Elem> out(w.size());
  for (std::size_t s = 0; s < w.size(); ++s) out[s] = m.gact(g, w[s]);
  return out;
}

C1Element c1_multiply(const GammaCrossedModule& m, const C1Element& x, const C1Element& y) {
  const FiniteGroup& a = m.a_group();
  auto moved = g_star_w(m, x.g, y.w);
  std::vector<Elem> w(x.w.size());
  for (std::size_t s = 0; s < w.size(); ++s) w[s] = a.mul(x.w[s], moved[s]);
  return C1Element{std::move(w), m.g_group().mul(x.g, y.g)};
}

C1Element c1_identity(const GammaCrossedModule& m) { return C1Element{std::vector<Elem>(m.gamma_order(), 0), 0}; }

std::vector<Elem> pointwise_inverse(const FiniteGroup& a, std::span<const Elem> w) {
  std::vector<Elem> out(w.size());
  for (std::size_t s = 0; s < w.size(); ++s) out[s] = a.inv(w[s]);
  return out;
}

KernelCocycle2 act_w_kernel(const GammaGroup& a, std::span<const Elem> w, const KernelCocycle2& z) {
  const auto code = z.encode();
  std::vector<Elem> out(code.size());
  detail::act_w_kernel_into(a, w, code, out);
  auto result = KernelCocycle2::decode(out, a.gamma_order());
  if (!is_kernel_cocycle(a, result)) throw Error(ErrorCode::NotACocycle, "act_w_kernel produced a non-cocycle");
  return result;
}

Cocycle2Crossed kernel_to_crossed(const GammaGroup& a, const GammaCrossedModule& inn, const KernelCocycle2& z) {
  const FiniteGroup& carrier = *a.aut()->carrier();
  const auto local = inn.g_action().least_preimages();
  std::vector<Elem> psi(z.f.size());
  for (std::size_t s = 0; s < psi.size(); ++s) {
    const auto g = local[carrier.mul(z.f[s], carrier.inv(a.action_of(static_cast<Elem>(s))))];
    if (!g) throw Error(ErrorCode::NotACocycle, "f_s o (f_A)_s^-1 is not inner at s = " + std::to_string(s));
    psi[s] = *g;
  }
  return Cocycle2Crossed{z.u, std::move(psi)};
}

KernelCocycle2 crossed_to_kernel(const GammaGroup& a, const GammaCrossedModule& inn, const Cocycle2Crossed& z) {
  const FiniteGroup& carrier = *a.aut()->carrier();
  std::vector<Elem> f(z.psi.size());
  for (std::size_t s = 0; s < f.size(); ++s) f[s] = carrier.mul(inn.g_action()(z.psi[s]), a.action_of(static_cast<Elem>(s)));
  return KernelCocycle2{z.u, std::move(f)};
}

Cocycle2Crossed pushforward(const CrossedModuleMorphism& m, const Cocycle2Crossed& z) {
  Cocycle2Crossed out{z.u, z.psi};
  for (auto& x : out.u) x = m.phi_a(x);
  for (auto& x : out.psi) x = m.phi_g(x);
  require_cocycle(*m.target, out, "pushforward");
  return out;
}

}  // namespace nacoh
