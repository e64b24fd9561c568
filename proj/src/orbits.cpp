#include "nacoh/orbits.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include <omp.h>

namespace nacoh {

CodeIndex::CodeIndex(std::size_t stride, std::vector<std::vector<Elem>> codes) : stride_(stride) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  flat_.reserve(codes.size() * stride);
  for (const auto& c : codes) {
    if (c.size() != stride) throw Error(ErrorCode::ValidationError, "code of wrong width in CodeIndex");
    flat_.insert(flat_.end(), c.begin(), c.end());
  }
}

std::optional<std::size_t> CodeIndex::find(std::span<const Elem> code) const {
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto row = at(mid);
    if (std::lexicographical_compare(row.begin(), row.end(), code.begin(), code.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < size() && std::equal(code.begin(), code.end(), at(lo).begin())) return lo;
  return std::nullopt;
}

namespace {

[[noreturn]] void left_set() { throw Error(ErrorCode::ValidationError, "orbit move left the enumerated set"); }

OrbitPartition from_labels(std::vector<std::size_t> root) {
  // Roots are arbitrary members; renumber classes by least member.
  OrbitPartition out;
  out.class_of.assign(root.size(), 0);
  std::vector<std::size_t> class_of_root(root.size(), static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < root.size(); ++k) {
    auto& c = class_of_root[root[k]];
    if (c == static_cast<std::size_t>(-1)) {
      c = out.members.size();
      out.members.emplace_back();
    }
    out.class_of[k] = c;
    out.members[c].push_back(k);
  }
  return out;
}

}  // namespace

OrbitPartition orbit_partition_serial(const CodeIndex& codes, std::size_t moves, const MoveFn& move) {
  const std::size_t n = codes.size();
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> root(n, unset);
  std::vector<Elem> image(codes.stride());
  std::vector<std::size_t> queue;
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (root[seed] != unset) continue;
    root[seed] = seed;
    queue.assign(1, seed);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::size_t m = 0; m < moves; ++m) {
        move(m, codes.at(queue[head]), image);
        auto k = codes.find(image);
        if (!k) left_set();
        if (root[*k] == unset) {
          root[*k] = seed;
          queue.push_back(*k);
        }
      }
    }
  }
  return from_labels(std::move(root));
}

OrbitPartition orbit_partition(const CodeIndex& codes, std::size_t moves, const MoveFn& move, int jobs) {
  const std::size_t n = codes.size();
  std::vector<std::size_t> edges(n * moves);
  std::atomic<bool> escaped{false};
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel num_threads(std::max(1, jobs))
  {
    std::vector<Elem> image(codes.stride());
#pragma omp for schedule(static)
    for (std::int64_t k = 0; k < count; ++k) {
      const auto item = static_cast<std::size_t>(k);
      for (std::size_t m = 0; m < moves; ++m) {
        move(m, codes.at(item), image);
        auto target = codes.find(image);
        if (!target) {
          escaped.store(true, std::memory_order_relaxed);
          edges[item * moves + m] = item;
        } else {
          edges[item * moves + m] = *target;
        }
      }
    }
  }
  if (escaped.load()) left_set();

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < moves; ++m) {
      const std::size_t a = find(k), b = find(edges[k * moves + m]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::size_t> root(n);
  for (std::size_t k = 0; k < n; ++k) root[k] = find(k);
  return from_labels(std::move(root));
}

}  // namespace nacoh
