#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "rcl/perm.hpp"

namespace rcl {

// Enumeration caps. Every operation that can blow up checks against these.
struct Limits {
  int64_t max_order = 200000;
  int32_t max_degree = 5000;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// A fully enumerated permutation group. `elements()` is the complete element
// list, sorted lexicographically by image sequence; that order is the
// canonical order used for every deterministic choice downstream.
class Group {
public:
  // Breadth-first closure of the generators, capped at limits.max_order.
  // An empty generator list yields the trivial group.
  static GroupPtr closure(int degree, std::vector<Perm> generators, const Limits& limits = {});
  static GroupPtr trivial(int degree, const Limits& limits = {});

  int degree() const { return degree_; }
  int64_t order() const { return static_cast<int64_t>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const Limits& limits() const { return limits_; }

  bool contains(const Perm& p) const;
  // Position in the sorted element list, or -1.
  int64_t index_of(const Perm& p) const;

  // Same degree and same element set.
  bool operator==(const Group& other) const;

private:
  friend class GroupBuilder;
  Group() = default;
  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  Limits limits_;
};

// Internal escape hatch for constructing a Group whose element set is already
// known and closed (coset images, normalizers rebuilt as groups, products).
class GroupBuilder {
public:
  static GroupPtr adopt_sorted(int degree, std::vector<Perm> generators,
                               std::vector<Perm> sorted_elements, const Limits& limits);
};

// A subgroup given by its sorted element subsequence inside a parent group.
class Subgroup {
public:
  // Empty handle; only assignment and destruction are valid on it.
  Subgroup() = default;
  // Closes the generators inside the parent; every generator must belong to it.
  static Subgroup from_generators(GroupPtr parent, std::vector<Perm> generators);
  // Validates membership in the parent and full closure under the group laws.
  static Subgroup from_elements(GroupPtr parent, std::vector<Perm> elements);
  // Trusted path: `sorted_elements` must already be a subgroup of the parent.
  static Subgroup adopt_sorted(GroupPtr parent, std::vector<Perm> sorted_elements);
  static Subgroup trivial(GroupPtr parent);
  static Subgroup full(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Perm>& elements() const { return elements_; }
  int64_t order() const { return static_cast<int64_t>(elements_.size()); }
  int64_t index() const { return parent_->order() / order(); }
  int degree() const { return parent_->degree(); }

  bool contains(const Perm& p) const;
  bool contains_all(const Subgroup& other) const;
  bool same_parent(const Subgroup& other) const;

  // Equal element sets inside equal parents.
  bool operator==(const Subgroup& other) const;

private:
  Subgroup(GroupPtr parent, std::vector<Perm> elements)
      : parent_(std::move(parent)), elements_(std::move(elements)) {}
  GroupPtr parent_;
  std::vector<Perm> elements_;
};

// True iff `elems` is a subset of g closed under composition and inverse and
// containing the identity.
bool is_subgroup(const Group& g, std::span<const Perm> elems);

// Greedy minimal generating sequence in canonical order.
std::vector<Perm> minimal_generators(std::span<const Perm> elements, int degree);

// Plain BFS closure of a generator list, with a hard cap; the building block
// shared by Group::closure, joins and normal closures.
std::vector<Perm> bfs_closure(int degree, std::span<const Perm> generators, int64_t cap);

}  // namespace rcl
