#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rcl/group.hpp"

namespace rcl {

// N_G(H) = {g in G : g H g^-1 = H}, by exhaustive test over the parent.
Subgroup normalizer(const Subgroup& h);

// Smallest subgroup of `within` containing h and normal in `within`.
Subgroup normal_closure_in(const Subgroup& h, const Subgroup& within);
// Normal closure in the full parent group.
Subgroup normal_closure(const Subgroup& h);

// Intersection of all parent-conjugates of h; trivial iff the coset action of
// the parent on parent/h is faithful.
Subgroup core(const Subgroup& h);

// Does every element of `by` normalize h? (h and by share a parent.)
bool is_normal_under(const Subgroup& h, const Subgroup& by);

// Left cosets of h in its parent, in canonical order: cosets are sorted by
// their lexicographically least element, so reps[0] is the identity.
struct CosetTable {
  std::vector<Perm> reps;
  std::vector<int32_t> coset_of;  // parent element index -> coset index
};
CosetTable coset_table(const Subgroup& h);
std::vector<Perm> coset_reps(const Subgroup& h);

// Permutation of the cosets induced by g (g must lie in the parent).
Perm coset_image(const CosetTable& table, const Group& parent, const Perm& g);

// The permutation group induced by the parent on parent/h. Its order is
// |parent| / |core(h)|.
GroupPtr coset_action(const Subgroup& h);

std::vector<int32_t> fixed_points(std::span<const Perm> elems, int degree);

std::vector<std::vector<int32_t>> orbits(const Group& g);
bool is_transitive(const Group& g);

Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);

// Pointwise stabilizer of the given points.
Subgroup stabilizer(const GroupPtr& g, std::span<const int32_t> points);

// G x R acting on the disjoint union of the point sets.
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& r);
Perm embed_left(const Perm& p, int right_degree);
Perm embed_right(const Perm& p, int left_degree);
// {embed_left(a) * embed_right(b) : a in left, b in right} as a subgroup of a
// direct product built by direct_product().
Subgroup product_subgroup(const GroupPtr& product, std::span<const Perm> left_elems,
                          int left_degree, std::span<const Perm> right_elems, int right_degree);

// All normal subgroups: normal closures of cyclic subgroups, closed under
// pairwise join, plus the trivial and full groups. Sorted by order, then by
// canonical element order.
std::vector<Subgroup> normal_subgroups(const GroupPtr& g);

// All subgroups U with h <= U <= parent, sorted canonically.
std::vector<Subgroup> intermediate_subgroups(const Subgroup& h);

}  // namespace rcl
