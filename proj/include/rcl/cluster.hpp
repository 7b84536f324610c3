#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rcl/groupops.hpp"

namespace rcl {

// A faithful transitive pair (G, Stab(point 0)). Point stabilizers of a
// transitive permutation group always have trivial core, so faithfulness
// comes for free; transitivity is validated.
struct RootPair {
  GroupPtr group;
  Subgroup stabilizer;
  int n;

  static RootPair from_group(GroupPtr g);
};

// An ambient group together with a subgroup; models the extension fixed by
// the subgroup inside a Galois extension of the base.
struct ExtensionPair {
  GroupPtr ambient;
  Subgroup sub;

  ExtensionPair(GroupPtr ambient_, Subgroup sub_);
  int64_t extension_degree() const { return sub.index(); }
};

struct ClusterReport {
  int64_t n = 0;
  int64_t r = 0;          // cluster size
  int64_t s = 0;          // number of clusters
  int64_t aut_order = 0;  // always equals r
  uint64_t fingerprint = 0;
};

// r is computed three ways (fixed points of the stabilizer, normalizer index,
// automorphism group order) and cross-checked; s = [G : N_G(H)].
ClusterReport cluster_report(const RootPair& p);

// Points i, j share a block iff Stab(i) = Stab(j). Blocks are sorted by least
// point; every block has size r and the block of j equals Fix(Stab(j)).
std::vector<std::vector<int32_t>> cluster_partition(const RootPair& p);

struct TowerReport {
  std::vector<int32_t> ordering;       // representative points, 0-based
  std::vector<int32_t> jump_indices;   // 1-based positions where the tower grows
  std::vector<int64_t> degree_sequence;
  int32_t length = 0;
  bool order_bound_holds = false;  // |G| <= n * prod(n - (m_i - 1) r)
  uint64_t fingerprint = 0;
};

// `ordering` must list exactly one point from every cluster.
TowerReport cluster_tower(const RootPair& p, std::span<const int32_t> ordering);

struct TowerOutcome {
  std::vector<int64_t> degree_sequence;
  int32_t length = 0;
  int64_t count = 0;                     // orderings yielding this outcome
  std::vector<int32_t> example_ordering; // first one in canonical order
};

struct TowerSweep {
  std::vector<TowerOutcome> outcomes;
  int64_t orderings = 0;
  bool order_bound_holds = false;
  uint64_t fingerprint = 0;
};

// All s! orderings of the canonical cluster representatives (s <= 7).
TowerSweep tower_all_orderings(const RootPair& p);

// Aut of the modeled extension: the coset action of N_ambient(U) on its
// cosets mod U. Order = [N : U], which is the cluster size; this is valid in
// any ambient group, not just the Galois closure, because normalizers pass
// through the quotient by core(U).
GroupPtr aut_group(const ExtensionPair& e);

struct CapacityReport {
  int64_t rho = 0;  // cosets of sub_l whose stabilizer contains sub_m
  int64_t a = 0;    // clusters counted; rho = a * r
  int64_t r = 0;    // cluster size of the lower extension
  Subgroup support;                   // intersection of the witnessed conjugates
  std::vector<int32_t> witness_cosets;  // cluster indices (0-based)
  uint64_t fingerprint = 0;
};

// sub_m <= sub_l <= ambient: how many roots of the lower extension's minimal
// polynomial land in the field fixed by sub_m.
CapacityReport root_capacity(const GroupPtr& ambient, const Subgroup& sub_m, const Subgroup& sub_l);

enum class ChainStop { self_normalizing, closure_fixed, degenerate };
const char* chain_stop_name(ChainStop s);

struct ChainReport {
  bool descending = true;
  // Chain inside the reduced pair's group: ascending subgroups for the
  // descending field chain, descending subgroups for the ascending one.
  std::vector<Subgroup> chain;
  std::vector<int64_t> step_indices;
  std::vector<int64_t> field_degrees;  // [G : chain_i] per stage
  int64_t t = 0, u = 0;                // ascending chains only
  ChainStop stop = ChainStop::degenerate;
  uint64_t fingerprint = 0;
};

// Iterated normalizers H, N(H), N(N(H)), ... until self-normalizing.
ChainReport descending_chain(const ExtensionPair& e);
// Iterated normal closures G, H^G, H^{H^G}, ... until fixed; also reports the
// ascending index t = [G : H^G] and u = [H^G : H].
ChainReport ascending_chain(const ExtensionPair& e);

struct LinkProfile {
  int64_t n = 0, r = 0, s = 0, t = 0, u = 0;
  bool n_eq_f = false;              // H^G == N_G(H)
  bool h_normal_in_hg = false;      // H normal in its normal closure
  bool ngh_normal_in_g = false;     // N_G(H) normal in G
  bool hg_inside_ngh = false;       // H^G <= N_G(H)
  bool h_normal_in_g = false;       // Galois case
  // consistency of the linked-chain clauses, checked on this pair
  bool clause1 = false, clause2 = false, clause3 = false, clause4 = false, clause5 = false;
  bool r_t_eq_n = false, t_eq_s = false;  // meaningful when n_eq_f
  uint64_t fingerprint = 0;
};

LinkProfile link_profile(const RootPair& p);

struct HintReport {
  bool capacity_hypothesis = false;  // exactly one cluster of lower-roots in M
  bool degree_hypothesis = false;    // [M:L] * r(L) == r(M)
  bool hypotheses_hold = false;
  bool conclusion_verified = false;  // sub_m normal in sub_l, checked when hypotheses hold
  uint64_t fingerprint = 0;
};

HintReport hint_check(const GroupPtr& ambient, const Subgroup& sub_m, const Subgroup& sub_l);

// Cluster size of the extension modeled by (ambient, sub), computed through
// the reduced faithful pair.
int64_t cluster_size_of(const ExtensionPair& e);
int64_t ascending_index_of(const ExtensionPair& e);

uint64_t fingerprint_pair(const Group& g, const Subgroup& h);

}  // namespace rcl
