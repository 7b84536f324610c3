#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rcl/error.hpp"

namespace rcl {

// A permutation of {0..degree-1} stored as its image sequence.
// External formats (JSON, C API) are 1-based; everything in here is 0-based.
class Perm {
public:
  Perm() = default;

  static Perm identity(int degree);
  // Validates that `images` is a bijection of {0..degree-1}.
  static Perm from_images(std::vector<int32_t> images);
  static Perm from_one_based(const std::vector<int64_t>& images);

  int degree() const { return static_cast<int>(img_.size()); }
  int32_t operator()(int32_t point) const { return img_[static_cast<size_t>(point)]; }
  const std::vector<int32_t>& images() const { return img_; }
  std::vector<int64_t> one_based() const;

  bool is_identity() const;
  Perm inverse() const;

  // Ordering is lexicographic on image sequences; the identity is the
  // least element of any group of a fixed degree.
  auto operator<=>(const Perm&) const = default;

  // Disjoint cycle notation on 1-based points, e.g. "(1 2 3)(5 6)".
  std::string cycle_string() const;

private:
  explicit Perm(std::vector<int32_t> img) : img_(std::move(img)) {}
  std::vector<int32_t> img_;

  friend Perm compose(const Perm& p, const Perm& q);
};

// compose(p, q) maps i to p(q(i)): q acts first.
Perm compose(const Perm& p, const Perm& q);
Perm conjugate(const Perm& g, const Perm& x);  // g x g^-1

struct PermHash {
  size_t operator()(const Perm& p) const noexcept;
};

}  // namespace rcl
