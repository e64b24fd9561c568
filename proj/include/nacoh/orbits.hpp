#pragma once

// Orbit partition of a finite set of fixed-width codes under a group given
// by generator moves.
//
// The serial reference is a breadth-first closure from each unvisited code.
// The parallel version tabulates every generator edge in an OpenMP loop and
// merges with union-find. Both label classes by their least code, so their
// outputs are identical.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "nacoh/finite_group.hpp"

namespace nacoh {

class CodeIndex {
 public:
  CodeIndex() = default;
  // `codes` must all have length `stride`; they are sorted and deduplicated.
  CodeIndex(std::size_t stride, std::vector<std::vector<Elem>> codes);

  std::size_t size() const noexcept { return stride_ == 0 ? 0 : flat_.size() / stride_; }
  std::size_t stride() const noexcept { return stride_; }
  std::span<const Elem> at(std::size_t k) const { return {flat_.data() + k * stride_, stride_}; }
  std::optional<std::size_t> find(std::span<const Elem> code) const;

 private:
  std::size_t stride_ = 0;
  std::vector<Elem> flat_;
};

// Applies generator `move` to `in`, writing the image to `out`. Must be
// safe to call concurrently.
using MoveFn = std::function<void(std::size_t move, std::span<const Elem> in, std::span<Elem> out)>;

struct OrbitPartition {
  std::vector<std::size_t> class_of;              // per code
  std::vector<std::vector<std::size_t>> members;  // per class, ascending

  std::size_t size() const noexcept { return members.size(); }
  std::size_t representative(std::size_t c) const { return members[c].front(); }
};

// Errors: ValidationError if a move maps a code outside the set.
OrbitPartition orbit_partition_serial(const CodeIndex& codes, std::size_t moves, const MoveFn& move);
OrbitPartition orbit_partition(const CodeIndex& codes, std::size_t moves, const MoveFn& move, int jobs);

}  // namespace nacoh
