#include "rcl/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace rcl {

std::vector<Perm> bfs_closure(int degree, std::span<const Perm> generators, int64_t cap) {
  for (const Perm& g : generators)
    if (g.degree() != degree) fail(Errc::degree_mismatch, "generator degree mismatch");
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> work;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  work.push_back(id);
  while (!work.empty()) {
    Perm cur = std::move(work.front());
    work.pop_front();
    for (const Perm& g : generators) {
      Perm next = compose(cur, g);
      if (seen.insert(next).second) {
        if (static_cast<int64_t>(seen.size()) > cap)
          fail(Errc::group_too_large, "closure exceeds cap of " + std::to_string(cap) + " elements");
        work.push_back(std::move(next));
      }
    }
  }
  std::vector<Perm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

GroupPtr Group::closure(int degree, std::vector<Perm> generators, const Limits& limits) {
  if (degree < 1) fail(Errc::bad_parameter, "degree must be positive");
  if (degree > limits.max_degree)
    fail(Errc::group_too_large, "degree " + std::to_string(degree) + " exceeds cap " +
                                    std::to_string(limits.max_degree));
  std::vector<Perm> elems = bfs_closure(degree, generators, limits.max_order);
  auto g = std::shared_ptr<Group>(new Group());
  g->degree_ = degree;
  g->generators_ = std::move(generators);
  g->elements_ = std::move(elems);
  g->limits_ = limits;
  return g;
}

GroupPtr Group::trivial(int degree, const Limits& limits) { return closure(degree, {}, limits); }

bool Group::contains(const Perm& p) const { return index_of(p) >= 0; }

int64_t Group::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return -1;
  return it - elements_.begin();
}

bool Group::operator==(const Group& other) const {
  return degree_ == other.degree_ && elements_ == other.elements_;
}

GroupPtr GroupBuilder::adopt_sorted(int degree, std::vector<Perm> generators,
                                    std::vector<Perm> sorted_elements, const Limits& limits) {
  auto g = std::shared_ptr<Group>(new Group());
  g->degree_ = degree;
  g->generators_ = std::move(generators);
  g->elements_ = std::move(sorted_elements);
  g->limits_ = limits;
  return g;
}

Subgroup Subgroup::from_generators(GroupPtr parent, std::vector<Perm> generators) {
  for (const Perm& g : generators) {
    if (g.degree() != parent->degree()) fail(Errc::degree_mismatch, "subgroup generator degree mismatch");
    if (!parent->contains(g)) fail(Errc::not_a_subgroup, "generator not in parent group");
  }
  std::vector<Perm> elems = bfs_closure(parent->degree(), generators, parent->order());
  return Subgroup(std::move(parent), std::move(elems));
}

Subgroup Subgroup::from_elements(GroupPtr parent, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!is_subgroup(*parent, elements)) fail(Errc::not_a_subgroup, "element set is not a subgroup");
  return Subgroup(std::move(parent), std::move(elements));
}

Subgroup Subgroup::adopt_sorted(GroupPtr parent, std::vector<Perm> sorted_elements) {
  return Subgroup(std::move(parent), std::move(sorted_elements));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  std::vector<Perm> e{Perm::identity(parent->degree())};
  return Subgroup(std::move(parent), std::move(e));
}

Subgroup Subgroup::full(GroupPtr parent) {
  std::vector<Perm> e = parent->elements();
  return Subgroup(std::move(parent), std::move(e));
}

bool Subgroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool Subgroup::contains_all(const Subgroup& other) const {
  if (other.order() > order()) return false;
  for (const Perm& p : other.elements_)
    if (!contains(p)) return false;
  return true;
}

bool Subgroup::same_parent(const Subgroup& other) const {
  return parent_ == other.parent_ || *parent_ == *other.parent_;
}

bool Subgroup::operator==(const Subgroup& other) const {
  return same_parent(other) && elements_ == other.elements_;
}

bool is_subgroup(const Group& g, std::span<const Perm> elems) {
  if (elems.empty()) return false;
  std::vector<Perm> sorted(elems.begin(), elems.end());
  std::sort(sorted.begin(), sorted.end());
  bool has_identity = false;
  for (const Perm& p : sorted) {
    if (p.degree() != g.degree()) fail(Errc::degree_mismatch, "element degree mismatch");
    if (!g.contains(p)) return false;
    if (p.is_identity()) has_identity = true;
  }
  if (!has_identity) return false;
  auto member = [&](const Perm& p) {
    return std::binary_search(sorted.begin(), sorted.end(), p);
  };
  for (const Perm& a : sorted) {
    if (!member(a.inverse())) return false;
    for (const Perm& b : sorted)
      if (!member(compose(a, b))) return false;
  }
  return true;
}

std::vector<Perm> minimal_generators(std::span<const Perm> elements, int degree) {
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> closed;
  closed.insert(Perm::identity(degree));
  for (const Perm& e : elements) {
    if (closed.count(e)) continue;
    gens.push_back(e);
    // grow the closure: old elements are already closed under the old
    // generators, so only right-multiples by the new one leave the set
    std::deque<Perm> work;
    std::vector<Perm> snapshot(closed.begin(), closed.end());
    for (const Perm& x : snapshot) {
      Perm next = compose(x, e);
      if (closed.insert(next).second) work.push_back(std::move(next));
    }
    while (!work.empty()) {
      Perm cur = std::move(work.front());
      work.pop_front();
      for (const Perm& g : gens) {
        Perm next = compose(cur, g);
        if (closed.insert(next).second) work.push_back(std::move(next));
      }
    }
    if (closed.size() >= elements.size()) break;  // elements form a group
  }
  return gens;
}

}  // namespace rcl
