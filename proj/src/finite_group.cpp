#include "nacoh/finite_group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <sstream>

namespace nacoh {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::InvalidHom: return "InvalidHom";
    case ErrorCode::UnsupportedSize: return "UnsupportedSize";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotAnAction: return "NotAnAction";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::PeifferViolation: return "PeifferViolation";
    case ErrorCode::EquivarianceViolation: return "EquivarianceViolation";
    case ErrorCode::WellDefinednessViolation: return "WellDefinednessViolation";
    case ErrorCode::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::ImageKernelMismatch: return "ImageKernelMismatch";
    case ErrorCode::NotEquivariant: return "NotEquivariant";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void group_error(const std::string& name, const std::string& msg) {
  throw Error(ErrorCode::InvalidGroup, "group '" + name + "': " + msg);
}

void check_order(std::size_t order, const GroupLimits& limits, const std::string& what) {
  if (order > limits.max_order) {
    throw Error(ErrorCode::UnsupportedSize, what + " has order " + std::to_string(order) +
                                                " above the bound " + std::to_string(limits.max_order));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(std::string name, std::size_t order, std::vector<Elem> table)
    : name_(std::move(name)), n_(order), table_(std::move(table)) {
  if (n_ == 0) group_error(name_, "order must be positive");
  if (table_.size() != n_ * n_) {
    group_error(name_, "table has " + std::to_string(table_.size()) + " entries, expected " +
                           std::to_string(n_ * n_));
  }
  const auto n = static_cast<Elem>(n_);
  for (std::size_t k = 0; k < table_.size(); ++k) {
    if (table_[k] < 0 || table_[k] >= n) {
      group_error(name_, "entry (" + std::to_string(k / n_) + "," + std::to_string(k % n_) +
                             ") = " + std::to_string(table_[k]) + " is out of range");
    }
  }
  for (Elem a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) {
      group_error(name_, "element 0 is not a two-sided identity at element " + std::to_string(a));
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = mul(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) {
          group_error(name_, "not associative at triple (" + std::to_string(a) + "," + std::to_string(b) +
                                 "," + std::to_string(c) + ")");
        }
      }
    }
  }
  inverse_.assign(n_, -1);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0) group_error(name_, "element " + std::to_string(a) + " has no inverse");
  }
  orders_.assign(n_, 0);
  for (Elem a = 0; a < n; ++a) {
    std::size_t k = 1;
    for (Elem x = a; x != 0; x = mul(x, a)) ++k;
    orders_[a] = k;
  }
  for (Elem a = 0; a < n && abelian_; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }

  std::vector<Elem> by_order(n_);
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Elem x, Elem y) { return orders_[x] > orders_[y]; });
  std::vector<char> covered(n_, 0);
  covered[0] = 1;
  for (Elem g : by_order) {
    if (covered[g]) continue;
    generators_.push_back(g);
    for (Elem x : closure(generators_)) covered[x] = 1;
  }
}

std::vector<Elem> FiniteGroup::closure(std::span<const Elem> gens) const {
  std::vector<char> seen(n_, 0);
  std::vector<Elem> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Elem g : gens) {
      const Elem y = mul(queue[head], g);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

// ---------------------------------------------------------------------------
// GroupHom

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<Elem> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  const auto& s = *source_;
  const auto& t = *target_;
  const std::string label = "hom " + s.name() + " -> " + t.name();
  if (images_.size() != s.order()) {
    throw Error(ErrorCode::InvalidHom, label + ": expected " + std::to_string(s.order()) + " images, got " +
                                           std::to_string(images_.size()));
  }
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] < 0 || static_cast<std::size_t>(images_[x]) >= t.order()) {
      throw Error(ErrorCode::InvalidHom, label + ": image of " + std::to_string(x) + " out of range");
    }
  }
  if (images_[0] != 0) throw Error(ErrorCode::InvalidHom, label + ": identity not sent to identity");
  const auto n = static_cast<Elem>(s.order());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (images_[s.mul(x, y)] != t.mul(images_[x], images_[y])) {
        throw Error(ErrorCode::InvalidHom, label + ": not multiplicative at (" + std::to_string(x) + "," +
                                               std::to_string(y) + ")");
      }
    }
  }
}

GroupHom GroupHom::identity(const GroupPtr& g) {
  std::vector<Elem> images(g->order());
  std::iota(images.begin(), images.end(), 0);
  return GroupHom(g, g, std::move(images));
}

GroupHom GroupHom::trivial(const GroupPtr& source, const GroupPtr& target) {
  return GroupHom(source, target, std::vector<Elem>(source->order(), 0));
}

bool GroupHom::is_injective() const { return kernel().size() == 1; }

bool GroupHom::is_surjective() const { return image().size() == target_->order(); }

std::vector<Elem> GroupHom::kernel() const {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] == 0) out.push_back(static_cast<Elem>(x));
  return out;
}

std::vector<Elem> GroupHom::image() const {
  std::vector<Elem> out(images_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::optional<Elem>> GroupHom::least_preimages() const {
  std::vector<std::optional<Elem>> out(target_->order());
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (!out[images_[x]]) out[images_[x]] = static_cast<Elem>(x);
  return out;
}

GroupHom GroupHom::after(const GroupHom& first) const {
  if (!(*first.target() == *source_)) {
    throw Error(ErrorCode::InvalidHom, "cannot compose: " + first.target()->name() + " vs " + source_->name());
  }
  std::vector<Elem> images(first.source()->order());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = images_[first(static_cast<Elem>(x))];
  return GroupHom(first.source(), target_, std::move(images));
}

// ---------------------------------------------------------------------------
// Subgroups

Subgroup make_subgroup(const GroupPtr& parent, std::span<const Elem> elements, std::string name) {
  std::vector<Elem> elems(elements.begin(), elements.end());
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty() || elems.front() != 0) {
    throw Error(ErrorCode::ValidationError, "subgroup of " + parent->name() + " must contain the identity");
  }
  std::vector<Elem> local(parent->order(), -1);
  for (std::size_t k = 0; k < elems.size(); ++k) local[elems[k]] = static_cast<Elem>(k);
  const std::size_t m = elems.size();
  std::vector<Elem> table(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const Elem p = parent->mul(elems[x], elems[y]);
      if (local[p] < 0) {
        throw Error(ErrorCode::ValidationError, "subset of " + parent->name() + " not closed: " +
                                                    std::to_string(elems[x]) + "*" + std::to_string(elems[y]));
      }
      table[x * m + y] = local[p];
    }
  }
  auto group = std::make_shared<const FiniteGroup>(std::move(name), m, std::move(table));
  return Subgroup{group, GroupHom(group, parent, elems)};
}

bool is_normal_subgroup(const FiniteGroup& g, std::span<const Elem> elements) {
  std::vector<char> in(g.order(), 0);
  for (Elem x : elements) in[x] = 1;
  for (std::size_t h = 0; h < g.order(); ++h)
    for (Elem x : elements)
      if (!in[g.conj(static_cast<Elem>(h), x)]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Standard groups

namespace {

GroupPtr build(std::string name, std::size_t n, auto&& product) {
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>(product(a, b));
  return std::make_shared<const FiniteGroup>(std::move(name), n, std::move(table));
}

}  // namespace

GroupPtr cyclic_group(int n, GroupLimits limits) {
  if (n < 1) throw Error(ErrorCode::ValidationError, "cyclic group needs n >= 1");
  check_order(static_cast<std::size_t>(n), limits, "cyclic group");
  return build("C" + std::to_string(n), static_cast<std::size_t>(n),
               [n](std::size_t a, std::size_t b) { return (a + b) % static_cast<std::size_t>(n); });
}

GroupPtr dihedral_group(int n, GroupLimits limits) {
  if (n < 1) throw Error(ErrorCode::ValidationError, "dihedral group needs n >= 1");
  check_order(2 * static_cast<std::size_t>(n), limits, "dihedral group");
  const auto N = static_cast<std::size_t>(n);
  return build("D" + std::to_string(n), 2 * N, [N](std::size_t x, std::size_t y) {
    const std::size_t a = x % N, b = x / N, c = y % N, d = y / N;
    // r^a s^b r^c s^d = r^(a + (-1)^b c) s^(b+d)
    const std::size_t rot = b == 0 ? (a + c) % N : (a + N - c) % N;
    return rot + N * ((b + d) % 2);
  });
}

GroupPtr symmetric_group(int n, GroupLimits limits) {
  if (n < 1) throw Error(ErrorCode::ValidationError, "symmetric group needs n >= 1");
  std::size_t order = 1;
  for (int k = 2; k <= n; ++k) order *= static_cast<std::size_t>(k);
  check_order(order, limits, "symmetric group");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < perms.size(); ++k) index[perms[k]] = k;
  return build("S" + std::to_string(n), order, [&](std::size_t a, std::size_t b) {
    std::vector<int> r(static_cast<std::size_t>(n));
    for (std::size_t x = 0; x < r.size(); ++x) r[x] = perms[a][static_cast<std::size_t>(perms[b][x])];
    return index.at(r);
  });
}

GroupPtr quaternion_group() {
  // Units 1,i,j,k with sign bit: index = 2*unit + sign.
  static constexpr std::array<std::array<int, 4>, 4> unit{{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  static constexpr std::array<std::array<int, 4>, 4> sign{{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
  return build("Q8", 8, [](std::size_t x, std::size_t y) {
    const std::size_t ux = x / 2, uy = y / 2;
    const int s = static_cast<int>(x % 2) ^ static_cast<int>(y % 2) ^ sign[ux][uy];
    return static_cast<std::size_t>(2 * unit[ux][uy] + s);
  });
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h, GroupLimits limits) {
  const std::size_t m = h->order();
  check_order(g->order() * m, limits, "direct product");
  return build(g->name() + "x" + h->name(), g->order() * m, [&](std::size_t x, std::size_t y) {
    return static_cast<std::size_t>(g->mul(static_cast<Elem>(x / m), static_cast<Elem>(y / m))) * m +
           static_cast<std::size_t>(h->mul(static_cast<Elem>(x % m), static_cast<Elem>(y % m)));
  });
}

GroupPtr make_standard_group(StandardKind kind, std::span<const int> params, std::span<const GroupPtr> factors,
                             GroupLimits limits) {
  auto need = [&](std::size_t k) {
    if (params.size() < k) throw Error(ErrorCode::ValidationError, "missing integer parameter");
    return params[0];
  };
  switch (kind) {
    case StandardKind::cyclic: return cyclic_group(need(1), limits);
    case StandardKind::dihedral: return dihedral_group(need(1), limits);
    case StandardKind::symmetric: return symmetric_group(need(1), limits);
    case StandardKind::quaternion8: return quaternion_group();
    case StandardKind::direct_product: {
      if (factors.empty()) throw Error(ErrorCode::ValidationError, "direct product needs factors");
      GroupPtr out = factors[0];
      for (std::size_t k = 1; k < factors.size(); ++k) out = direct_product(out, factors[k], limits);
      return out;
    }
  }
  throw Error(ErrorCode::ValidationError, "unknown group kind");
}

// ---------------------------------------------------------------------------
// Center, Aut, quotients

Subgroup compute_center(const GroupPtr& g) {
  std::vector<Elem> z;
  const auto n = static_cast<Elem>(g->order());
  for (Elem x = 0; x < n; ++x) {
    bool central = true;
    for (Elem y = 0; y < n && central; ++y) central = g->mul(x, y) == g->mul(y, x);
    if (central) z.push_back(x);
  }
  return make_subgroup(g, z, "Z(" + g->name() + ")");
}

AutGroup::AutGroup(GroupPtr base, std::vector<std::vector<Elem>> perms)
    : base_(std::move(base)), perms_(std::move(perms)) {
  for (std::size_t k = 0; k < perms_.size(); ++k) index_[perms_[k]] = static_cast<Elem>(k);
  const std::size_t m = perms_.size();
  const std::size_t n = base_->order();
  std::vector<Elem> table(m * m);
  std::vector<Elem> comp(n);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t a = 0; a < n; ++a) comp[a] = perms_[x][static_cast<std::size_t>(perms_[y][a])];
      table[x * m + y] = index_.at(comp);
    }
  }
  carrier_ = std::make_shared<const FiniteGroup>("Aut(" + base_->name() + ")", m, std::move(table));
  inn_of_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < n; ++x) comp[x] = base_->conj(static_cast<Elem>(a), static_cast<Elem>(x));
    inn_of_[a] = index_.at(comp);
  }
  inn_ = inn_of_;
  std::sort(inn_.begin(), inn_.end());
  inn_.erase(std::unique(inn_.begin(), inn_.end()), inn_.end());
}

std::optional<Elem> AutGroup::index_of(const std::vector<Elem>& perm) const {
  auto it = index_.find(perm);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

AutPtr compute_aut(const GroupPtr& a, GroupLimits limits) {
  check_order(a->order(), limits, "Aut input " + a->name());
  const FiniteGroup& g = *a;
  const std::size_t n = g.order();
  const auto& gens = g.generators();
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t x = 1; x < n; ++x)
      if (g.element_order(static_cast<Elem>(x)) == g.element_order(gens[k])) candidates[k].push_back(static_cast<Elem>(x));

  std::vector<std::vector<Elem>> found;
  std::vector<Elem> choice(gens.size());
  std::vector<Elem> img(n);
  std::vector<Elem> queue;
  std::vector<char> used(n);

  // Extends a choice of generator images to a map by x*g_k -> img(x)*img(g_k);
  // rejects inconsistent or non-bijective extensions.
  auto extend = [&]() -> bool {
    std::fill(img.begin(), img.end(), -1);
    img[0] = 0;
    queue.assign(1, 0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Elem x = queue[head];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const Elem y = g.mul(x, gens[k]);
        const Elem iy = g.mul(img[x], choice[k]);
        if (img[y] < 0) {
          img[y] = iy;
          queue.push_back(y);
        } else if (img[y] != iy) {
          return false;
        }
      }
    }
    std::fill(used.begin(), used.end(), 0);
    for (Elem v : img) {
      if (used[v]) return false;
      used[v] = 1;
    }
    return true;
  };

  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == gens.size()) {
      if (extend()) found.push_back(img);
      return;
    }
    for (Elem c : candidates[k]) {
      choice[k] = c;
      self(self, k + 1);
    }
  };
  if (gens.empty()) {
    found.push_back({0});
  } else {
    recurse(recurse, 0);
  }
  std::sort(found.begin(), found.end());
  return std::make_shared<const AutGroup>(a, std::move(found));
}

Subgroup aut_subgroup(const AutGroup& aut, std::span<const Elem> carrier_elements, std::string name) {
  return make_subgroup(aut.carrier(), carrier_elements, std::move(name));
}

Subgroup inner_automorphisms(const AutGroup& aut) {
  return aut_subgroup(aut, aut.inn_subgroup(), "Inn(" + aut.base()->name() + ")");
}

Quotient quotient_group(const GroupPtr& g, std::span<const Elem> normal) {
  const std::size_t n = g->order();
  std::vector<Elem> members(normal.begin(), normal.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members != g->closure(members)) {
    throw Error(ErrorCode::NotNormal, "subset of " + g->name() + " is not a subgroup");
  }
  for (std::size_t h = 0; h < n; ++h) {
    for (Elem x : members) {
      const Elem c = g->conj(static_cast<Elem>(h), x);
      if (!std::binary_search(members.begin(), members.end(), c)) {
        throw Error(ErrorCode::NotNormal, "subgroup of " + g->name() + " not normal: " + std::to_string(h) +
                                              " conjugates " + std::to_string(x) + " to " + std::to_string(c));
      }
    }
  }
  // coset_of[x] = index of the coset xN, numbered by least member
  std::vector<Elem> coset_of(n, -1);
  std::vector<Elem> least;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    const auto id = static_cast<Elem>(least.size());
    least.push_back(static_cast<Elem>(x));
    for (Elem m : members) coset_of[g->mul(static_cast<Elem>(x), m)] = id;
  }
  const std::size_t q = least.size();
  std::vector<Elem> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) table[a * q + b] = coset_of[g->mul(least[a], least[b])];
  auto group = std::make_shared<const FiniteGroup>(g->name() + "/N", q, std::move(table));
  return Quotient{group, GroupHom(g, group, std::move(coset_of))};
}

Quotient outer_automorphisms(const AutGroup& aut) { return quotient_group(aut.carrier(), aut.inn_subgroup()); }

RestrictedInn restricted_inn_group(const GroupHom& embedding, AutPtr aut_a, AutPtr aut_b, GroupLimits limits) {
  const GroupPtr& a = embedding.source();
  const GroupPtr& b = embedding.target();
  if (!embedding.is_injective()) throw Error(ErrorCode::NotInjective, "embedding " + a->name() + " -> " + b->name());
  const auto image = embedding.image();
  if (!is_normal_subgroup(*b, image)) {
    throw Error(ErrorCode::NotNormal, "image of " + a->name() + " is not normal in " + b->name());
  }
  if (!aut_a) aut_a = compute_aut(a, limits);
  if (!aut_b) aut_b = compute_aut(b, limits);
  std::vector<Elem> back(b->order(), -1);
  for (std::size_t x = 0; x < a->order(); ++x) back[embedding(static_cast<Elem>(x))] = static_cast<Elem>(x);

  Subgroup inn_b = inner_automorphisms(*aut_b);
  const std::size_t inn_order = inn_b.group->order();
  std::vector<Elem> restricted_of(inn_order);
  std::vector<Elem> perm(a->order());
  for (std::size_t k = 0; k < inn_order; ++k) {
    const Elem alpha = inn_b.embedding(static_cast<Elem>(k));
    for (std::size_t x = 0; x < a->order(); ++x) perm[x] = back[aut_b->apply(alpha, embedding(static_cast<Elem>(x)))];
    restricted_of[k] = *aut_a->index_of(perm);
  }
  std::vector<Elem> carrier_elems(restricted_of);
  Subgroup restricted = aut_subgroup(*aut_a, carrier_elems, "Inn(" + b->name() + ")|" + a->name());
  const auto local = restricted.embedding.least_preimages();
  std::vector<Elem> images(inn_order);
  for (std::size_t k = 0; k < inn_order; ++k) images[k] = *local[restricted_of[k]];
  GroupHom restriction(inn_b.group, restricted.group, std::move(images));
  auto collisions = restriction.kernel();
  return RestrictedInn{aut_a, aut_b, std::move(inn_b), std::move(restricted), std::move(restriction),
                       std::move(collisions)};
}

}  // namespace nacoh
