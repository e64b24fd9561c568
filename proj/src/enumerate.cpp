#include "nacoh/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <sstream>

#include <omp.h>

namespace nacoh {

namespace {

constexpr std::uint64_t kFlushEvery = 1024;

// Per-task state counter flushed into a shared total; once the total passes
// the budget every task stops at its next tick.
class StateCounter {
 public:
  StateCounter(std::atomic<std::uint64_t>& total, std::atomic<bool>& stop, std::uint64_t budget)
      : total_(total), stop_(stop), budget_(budget) {}
  StateCounter(const StateCounter&) = delete;
  StateCounter& operator=(const StateCounter&) = delete;
  ~StateCounter() { flush(); }

  bool tick() {
    if (++local_ >= kFlushEvery) flush();
    return !stop_.load(std::memory_order_relaxed);
  }

  void flush() {
    if (local_ == 0) return;
    const auto now = total_.fetch_add(local_, std::memory_order_relaxed) + local_;
    local_ = 0;
    if (now > budget_) stop_.store(true, std::memory_order_relaxed);
  }

 private:
  std::atomic<std::uint64_t>& total_;
  std::atomic<bool>& stop_;
  std::uint64_t budget_;
  std::uint64_t local_ = 0;
};

[[noreturn]] void budget_exceeded(std::uint64_t budget, double space, const char* what) {
  std::ostringstream os;
  os << what << ": enumeration exceeded budget " << budget << " (unpruned space ~ " << space << ")";
  throw BudgetExceeded(budget, space, os.str());
}

using Triple = std::array<Elem, 3>;

// Triples (s, t, v) of the u-condition grouped by the last row-major u
// position they read, so each is checked as soon as it is fully assigned.
struct TripleSchedule {
  std::vector<std::vector<Triple>> at;

  explicit TripleSchedule(const FiniteGroup& gamma) {
    const std::size_t n = gamma.order();
    at.resize(n * n);
    const auto ns = static_cast<Elem>(n);
    for (Elem s = 0; s < ns; ++s)
      for (Elem t = 0; t < ns; ++t)
        for (Elem v = 0; v < ns; ++v) {
          const std::size_t p = std::max({s * n + gamma.mul(t, v), t * n + v, gamma.mul(s, t) * n + v, s * n + t});
          at[p].push_back({s, t, v});
        }
  }
};

// Pairs (s, t) grouped by max(s, t, st): the head position that completes them.
std::vector<std::vector<std::array<Elem, 2>>> pair_schedule(const FiniteGroup& gamma) {
  const auto ns = static_cast<Elem>(gamma.order());
  std::vector<std::vector<std::array<Elem, 2>>> at(gamma.order());
  for (Elem s = 0; s < ns; ++s)
    for (Elem t = 0; t < ns; ++t) at[std::max({s, t, gamma.mul(s, t)})].push_back({s, t});
  return at;
}

struct USystem {
  std::vector<const std::vector<Elem>*> allowed;  // per row-major position
  std::vector<Elem> twist;                        // s * |A| + x
};

// Depth-first search over u; returns false when the budget stopped it.
template <class Emit>
bool search_u(const FiniteGroup& gamma, const FiniteGroup& a, const USystem& sys, const TripleSchedule& sched,
              StateCounter& counter, Emit&& emit) {
  const std::size_t n = gamma.order();
  const std::size_t na = a.order();
  const std::size_t positions = n * n;
  std::vector<Elem> u(positions, 0);

  auto consistent = [&](std::size_t p) {
    for (const auto& [s, t, v] : sched.at[p]) {
      const Elem lhs = a.mul(u[s * n + gamma.mul(t, v)], sys.twist[s * na + u[t * n + v]]);
      const Elem rhs = a.mul(u[gamma.mul(s, t) * n + v], u[s * n + t]);
      if (lhs != rhs) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t p) -> bool {
    if (p == positions) {
      emit(u);
      return true;
    }
    for (Elem x : *sys.allowed[p]) {
      if (!counter.tick()) return false;
      u[p] = x;
      if (consistent(p) && !self(self, p + 1)) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

// Everything a two-stage search needs. `required(head, s, t)` is the element
// of the target group whose `preimages` are the allowed values of u_{s,t};
// `twist(head, s, x)` is the automorphism applied to u_{t,v} in the u-condition.
template <class Required, class Twist>
struct TwoStage {
  const FiniteGroup& gamma;
  const FiniteGroup& a;
  std::vector<std::vector<Elem>> head_choices;
  std::vector<std::vector<Elem>> preimages;
  Required required;
  Twist twist;
  double space;
  const char* what;

  std::vector<std::vector<Elem>> heads(StateCounter& counter) const {
    const std::size_t n = gamma.order();
    const auto pairs = pair_schedule(gamma);
    std::vector<std::vector<Elem>> out;
    std::vector<Elem> head(n, 0);
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == n) {
        out.push_back(head);
        return;
      }
      for (Elem x : head_choices[k]) {
        if (!counter.tick()) return;
        head[k] = x;
        bool ok = true;
        for (const auto& [s, t] : pairs[k]) {
          if (preimages[required(head, s, t)].empty()) {
            ok = false;
            break;
          }
        }
        if (ok) self(self, k + 1);
      }
    };
    rec(rec, 0);
    return out;
  }

  USystem system(const std::vector<Elem>& head) const {
    const std::size_t n = gamma.order();
    const std::size_t na = a.order();
    USystem sys;
    sys.allowed.resize(n * n);
    const auto ns = static_cast<Elem>(n);
    for (Elem s = 0; s < ns; ++s)
      for (Elem t = 0; t < ns; ++t) sys.allowed[s * n + t] = &preimages[required(head, s, t)];
    sys.twist.resize(n * na);
    for (Elem s = 0; s < ns; ++s)
      for (std::size_t x = 0; x < na; ++x) sys.twist[s * na + x] = twist(head, s, static_cast<Elem>(x));
    return sys;
  }

  // Codes are u (row-major) followed by the head, sorted.
  std::vector<std::vector<Elem>> run(std::uint64_t budget, int jobs, bool parallel, std::uint64_t& states) const {
    std::atomic<std::uint64_t> total{0};
    std::atomic<bool> stop{false};
    std::vector<std::vector<Elem>> hs;
    {
      StateCounter counter(total, stop, budget);
      hs = heads(counter);
    }
    if (total.load() > budget) budget_exceeded(budget, space, what);

    const TripleSchedule sched(gamma);
    std::vector<std::vector<std::vector<Elem>>> per_head(hs.size());
    auto body = [&](std::size_t k) {
      if (stop.load(std::memory_order_relaxed)) return;
      StateCounter counter(total, stop, budget);
      const USystem sys = system(hs[k]);
      search_u(gamma, a, sys, sched, counter, [&](const std::vector<Elem>& u) {
        std::vector<Elem> code(u);
        code.insert(code.end(), hs[k].begin(), hs[k].end());
        per_head[k].push_back(std::move(code));
      });
    };
    if (parallel) {
      const auto count = static_cast<std::int64_t>(hs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
      for (std::int64_t k = 0; k < count; ++k) body(static_cast<std::size_t>(k));
    } else {
      for (std::size_t k = 0; k < hs.size(); ++k) body(k);
    }
    states = total.load();
    if (states > budget) budget_exceeded(budget, space, what);

    std::vector<std::vector<Elem>> codes;
    for (auto& v : per_head)
      for (auto& code : v) codes.push_back(std::move(code));
    std::sort(codes.begin(), codes.end());
    return codes;
  }
};

template <class Required, class Twist>
TwoStage<Required, Twist> two_stage(const FiniteGroup& gamma, const FiniteGroup& a,
                                    std::vector<std::vector<Elem>> head_choices,
                                    std::vector<std::vector<Elem>> preimages, Required required, Twist twist,
                                    double space, const char* what) {
  return TwoStage<Required, Twist>{gamma, a, std::move(head_choices), std::move(preimages), required, twist, space,
                                   what};
}

std::vector<std::vector<Elem>> preimage_table(const GroupHom& h) {
  std::vector<std::vector<Elem>> out(h.target()->order());
  for (std::size_t x = 0; x < h.source()->order(); ++x) out[h(static_cast<Elem>(x))].push_back(static_cast<Elem>(x));
  return out;
}

auto crossed_search(const GammaCrossedModule& m) {
  const FiniteGroup& gamma = m.gamma();
  const FiniteGroup& g = m.g_group();
  std::vector<Elem> all(g.order());
  for (std::size_t x = 0; x < all.size(); ++x) all[x] = static_cast<Elem>(x);
  // rho(u_{s,t}) = psi_{st} (psi_s ^s psi_t)^-1
  const GammaCrossedModule* mp = &m;
  auto required = [mp](const std::vector<Elem>& psi, Elem s, Elem t) {
    const FiniteGroup& g = mp->g_group();
    return g.mul(psi[mp->gamma().mul(s, t)], g.inv(g.mul(psi[s], mp->G().act(s, psi[t]))));
  };
  auto twist = [mp](const std::vector<Elem>& psi, Elem s, Elem x) { return mp->gact(psi[s], mp->A().act(s, x)); };
  return two_stage(gamma, m.a_group(), std::vector<std::vector<Elem>>(gamma.order(), all), preimage_table(m.rho()),
                   required, twist, z2_space_size(m), "Z2(Gamma, A -> G)");
}

Z2Enumeration decode_crossed(const std::vector<std::vector<Elem>>& codes, std::size_t n, std::uint64_t states,
                             double space) {
  Z2Enumeration out;
  out.cocycles.reserve(codes.size());
  for (const auto& code : codes) out.cocycles.push_back(Cocycle2Crossed::decode(code, n));
  out.states = states;
  out.space = space;
  return out;
}

}  // namespace

double z2_space_size(const GammaCrossedModule& m) {
  const double n = static_cast<double>(m.gamma_order());
  return std::pow(static_cast<double>(m.g_group().order()), n) *
         std::pow(static_cast<double>(m.a_group().order()), n * n);
}

Z2Enumeration enumerate_z2_crossed(const GammaCrossedModule& m, SearchOptions options) {
  auto search = crossed_search(m);
  std::uint64_t states = 0;
  auto codes = search.run(options.budget, std::max(1, options.jobs), options.jobs > 1, states);
  return decode_crossed(codes, m.gamma_order(), states, search.space);
}

Z2Enumeration enumerate_z2_crossed_serial(const GammaCrossedModule& m, std::uint64_t budget) {
  auto search = crossed_search(m);
  std::uint64_t states = 0;
  auto codes = search.run(budget, 1, false, states);
  return decode_crossed(codes, m.gamma_order(), states, search.space);
}

KernelZ2Enumeration enumerate_z2_kernel(const GammaGroup& a, SearchOptions options) {
  const FiniteGroup& gamma = *a.gamma();
  const AutGroup& aut = *a.aut();
  const FiniteGroup& carrier = *aut.carrier();
  const std::size_t n = gamma.order();
  // f_s ranges over Inn A o (f_A)_s
  std::vector<std::vector<Elem>> choices(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (Elem inner : aut.inn_subgroup()) choices[s].push_back(carrier.mul(inner, a.action_of(static_cast<Elem>(s))));
    std::sort(choices[s].begin(), choices[s].end());
  }
  std::vector<std::vector<Elem>> preimages(carrier.order());
  for (std::size_t x = 0; x < a.order(); ++x) preimages[aut.inn_of(static_cast<Elem>(x))].push_back(static_cast<Elem>(x));
  // inn(u_{s,t}) = f_{st} f_t^-1 f_s^-1
  auto required = [&gamma, &carrier](const std::vector<Elem>& f, Elem s, Elem t) {
    return carrier.mul(carrier.mul(f[gamma.mul(s, t)], carrier.inv(f[t])), carrier.inv(f[s]));
  };
  auto twist = [&aut](const std::vector<Elem>& f, Elem s, Elem x) { return aut.apply(f[s], x); };
  const double space = std::pow(static_cast<double>(aut.inn_subgroup().size()), static_cast<double>(n)) *
                       std::pow(static_cast<double>(a.order()), static_cast<double>(n * n));
  auto search = two_stage(gamma, *a.group(), std::move(choices), std::move(preimages), required, twist, space,
                          "Z2(Gamma, A, kappa_A)");
  KernelZ2Enumeration out;
  auto codes = search.run(options.budget, std::max(1, options.jobs), options.jobs > 1, out.states);
  out.space = space;
  for (const auto& code : codes) out.cocycles.push_back(KernelCocycle2::decode(code, n));
  return out;
}

AbelianZ2Enumeration enumerate_z2_abelian(const GammaGroup& module, SearchOptions options) {
  if (!module.group()->is_abelian()) throw Error(ErrorCode::NotAbelian, module.group()->name() + " is not abelian");
  const FiniteGroup& gamma = *module.gamma();
  const std::size_t n = gamma.order();
  std::vector<std::vector<Elem>> preimages(1);
  for (std::size_t x = 0; x < module.order(); ++x) preimages[0].push_back(static_cast<Elem>(x));
  auto required = [](const std::vector<Elem>&, Elem, Elem) { return Elem{0}; };
  auto twist = [&module](const std::vector<Elem>&, Elem s, Elem x) { return module.act(s, x); };
  const double space = std::pow(static_cast<double>(module.order()), static_cast<double>(n * n));
  auto search = two_stage(gamma, *module.group(), std::vector<std::vector<Elem>>(n, std::vector<Elem>{0}),
                          std::move(preimages), required, twist, space, "Z2(Gamma, A)");
  AbelianZ2Enumeration out;
  auto codes = search.run(options.budget, std::max(1, options.jobs), options.jobs > 1, out.states);
  out.space = space;
  for (auto& code : codes) {
    code.resize(n * n);
    out.cocycles.push_back(std::move(code));
  }
  return out;
}

Z1Enumeration enumerate_z1(const GammaGroup& c, SearchOptions options) {
  const FiniteGroup& gamma = *c.gamma();
  const FiniteGroup& grp = *c.group();
  const std::size_t n = gamma.order();
  const auto& gens = gamma.generators();
  const double space = std::pow(static_cast<double>(grp.order()), static_cast<double>(gens.size()));
  Z1Enumeration out;

  std::vector<Elem> on_gens(gens.size(), 0);
  std::vector<Elem> values(n);
  std::vector<Elem> queue;
  // c_{x g} = c_x ^x c_g determines c from its generator values.
  auto propagate = [&]() -> bool {
    std::fill(values.begin(), values.end(), -1);
    values[0] = 0;
    queue.assign(1, 0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Elem x = queue[head];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const Elem y = gamma.mul(x, gens[k]);
        const Elem cy = grp.mul(values[x], c.act(x, on_gens[k]));
        if (values[y] < 0) {
          values[y] = cy;
          queue.push_back(y);
        } else if (values[y] != cy) {
          return false;
        }
      }
    }
    return is_cocycle1(c, values);
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == gens.size()) {
      if (++out.states > options.budget) budget_exceeded(options.budget, space, "Z1(Gamma, C)");
      if (propagate()) out.cocycles.push_back(Cocycle1{values});
      return;
    }
    for (std::size_t x = 0; x < grp.order(); ++x) {
      on_gens[k] = static_cast<Elem>(x);
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.cocycles.begin(), out.cocycles.end());
  return out;
}

}  // namespace nacoh
