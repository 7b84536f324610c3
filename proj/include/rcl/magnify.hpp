#pragma once

#include "rcl/cluster.hpp"

namespace rcl {

// Reduce (ambient, sub) to the faithful transitive pair of the coset action
// on ambient/sub. Cluster invariants are unchanged; the stabilizer of point 0
// in the image is the image of sub.
RootPair to_galois_pair(const ExtensionPair& e);

// Build the product pair (G x R, H x 1) and reduce it. Degree multiplies by
// |R|, cluster size and ascending index multiply by |R|, the cluster count
// and u are unchanged. Requires n > 2; a trivial R is allowed.
RootPair magnify(const RootPair& p, const GroupPtr& by);

struct Decomposition {
  Subgroup a;           // normal factor containing the stabilizer
  Subgroup b;           // commuting complement; |b| is the magnification factor
  Subgroup a_prime;     // the stabilizer, viewed inside a
  Subgroup l_subgroup;  // a_prime * b: fixes the demagnified extension
  Subgroup f_subgroup;  // = a: fixes the magnifying extension
  int64_t factor = 0;
  uint64_t fingerprint = 0;
};

// All internal decompositions G = A x B with nontrivial normal A, B,
// stabilizer inside A and [A : stabilizer] > 2, in canonical order. Empty
// means the pair admits no nontrivial strong magnification (it is primitive).
std::vector<Decomposition> detect_strong_magnification(const RootPair& p);

struct WeakMagnification {
  bool holds = false;
  int64_t r_m = 0, r_l = 0;
  int64_t factor_num = 0, factor_den = 1;  // reduced; den == 1 when holds
  uint64_t fingerprint = 0;
};

// Divisibility r(L) | r(M) for sub_m <= sub_l, both cluster sizes computed on
// reduced pairs.
WeakMagnification weak_magnification(const GroupPtr& ambient, const Subgroup& sub_m,
                                     const Subgroup& sub_l);

struct BaseChangeFlags {
  bool cluster_size = false;
  bool capacity = false;
  bool descending_chain = false;
  bool ascending_chain = false;
  bool ascending_index = false;
  uint64_t fingerprint = 0;
  bool all() const {
    return cluster_size && capacity && descending_chain && ascending_chain && ascending_index;
  }
};

// Model base change by the linearly disjoint product: the new base corresponds
// to the left factor inside G x R. Verifies that cluster size, capacities (for
// every intermediate subgroup when [G:H] <= 24), both chains and the ascending
// index are preserved.
BaseChangeFlags base_change_verify(const RootPair& p, const GroupPtr& by);

struct StrongChainFlags {
  bool descending = false;
  bool ascending = false;
  uint64_t fingerprint = 0;
};

// Chain correspondences between a pair and its magnification by `by`:
// the first step multiplies by |by|, later steps and stage degrees agree.
StrongChainFlags strong_magnification_chains(const RootPair& p, const GroupPtr& by);

}  // namespace rcl
