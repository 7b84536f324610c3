#include "rcl/cluster.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rcl/magnify.hpp"

namespace rcl {

namespace {

struct Fnv {
  uint64_t h = 1469598103934665603ull;
  void byte(uint8_t b) {
    h ^= b;
    h *= 1099511628211ull;
  }
  void i64(int64_t v) {
    for (int i = 0; i < 8; ++i) byte(static_cast<uint8_t>((static_cast<uint64_t>(v) >> (8 * i)) & 0xff));
  }
  void perm(const Perm& p) {
    for (int32_t v : p.images()) i64(v);
  }
  void perms(std::span<const Perm> ps) {
    i64(static_cast<int64_t>(ps.size()));
    for (const Perm& p : ps) perm(p);
  }
};

int64_t checked_ratio(int64_t num, int64_t den, const char* what) {
  if (den == 0 || num % den != 0) fail(Errc::internal, std::string("non-integral ratio in ") + what);
  return num / den;
}

}  // namespace

const char* chain_stop_name(ChainStop s) {
  switch (s) {
    case ChainStop::self_normalizing: return "self_normalizing";
    case ChainStop::closure_fixed: return "closure_fixed";
    case ChainStop::degenerate: return "degenerate";
  }
  return "unknown";
}

uint64_t fingerprint_pair(const Group& g, const Subgroup& h) {
  Fnv f;
  f.i64(g.degree());
  f.perms(g.elements());
  f.perms(h.elements());
  return f.h;
}

RootPair RootPair::from_group(GroupPtr g) {
  if (!is_transitive(*g)) fail(Errc::invalid_root_pair, "group is not transitive");
  int32_t pt = 0;
  Subgroup stab = rcl::stabilizer(g, std::span<const int32_t>(&pt, 1));
  int n = g->degree();
  if (stab.index() != n) fail(Errc::internal, "orbit-stabilizer mismatch");
  return RootPair{std::move(g), std::move(stab), n};
}

ExtensionPair::ExtensionPair(GroupPtr ambient_, Subgroup sub_)
    : ambient(std::move(ambient_)), sub(std::move(sub_)) {
  if (!(sub.parent() == ambient || *sub.parent() == *ambient))
    fail(Errc::invalid_extension_pair, "subgroup does not live in the ambient group");
}

ClusterReport cluster_report(const RootPair& p) {
  const Subgroup& h = p.stabilizer;
  int64_t r_fixed = static_cast<int64_t>(fixed_points(h.elements(), p.n).size());
  Subgroup ngh = normalizer(h);
  int64_t r_norm = checked_ratio(ngh.order(), h.order(), "normalizer index");
  GroupPtr aut = aut_group(ExtensionPair(p.group, h));
  int64_t r_aut = aut->order();
  if (r_fixed != r_norm || r_norm != r_aut)
    fail(Errc::internal, "cluster size cross-check failed: " + std::to_string(r_fixed) + "/" +
                             std::to_string(r_norm) + "/" + std::to_string(r_aut));
  int64_t s = checked_ratio(p.group->order(), ngh.order(), "cluster count");
  if (r_fixed * s != p.n) fail(Errc::internal, "r*s != n");
  ClusterReport rep;
  rep.n = p.n;
  rep.r = r_fixed;
  rep.s = s;
  rep.aut_order = r_aut;
  rep.fingerprint = fingerprint_pair(*p.group, p.stabilizer);
  return rep;
}

std::vector<std::vector<int32_t>> cluster_partition(const RootPair& p) {
  std::map<std::vector<Perm>, std::vector<int32_t>> blocks;
  for (int32_t i = 0; i < p.n; ++i)
    blocks[stabilizer(p.group, std::span<const int32_t>(&i, 1)).elements()].push_back(i);
  std::vector<std::vector<int32_t>> out;
  for (auto& [_, pts] : blocks) out.push_back(std::move(pts));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

TowerReport cluster_tower(const RootPair& p, std::span<const int32_t> ordering) {
  auto blocks = cluster_partition(p);
  std::vector<int32_t> block_of(static_cast<size_t>(p.n), -1);
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int32_t pt : blocks[b]) block_of[static_cast<size_t>(pt)] = static_cast<int32_t>(b);
  if (ordering.size() != blocks.size())
    fail(Errc::bad_ordering, "ordering must list one representative per cluster");
  std::vector<bool> hit(blocks.size(), false);
  for (int32_t pt : ordering) {
    if (pt < 0 || pt >= p.n) fail(Errc::bad_ordering, "ordering point out of range");
    int32_t b = block_of[static_cast<size_t>(pt)];
    if (hit[static_cast<size_t>(b)]) fail(Errc::bad_ordering, "two representatives of one cluster");
    hit[static_cast<size_t>(b)] = true;
  }

  TowerReport rep;
  rep.ordering.assign(ordering.begin(), ordering.end());
  int64_t r = checked_ratio(static_cast<int64_t>(p.n), static_cast<int64_t>(blocks.size()), "tower r");

  if (p.n == 1) {  // trivial extension: the tower collapses to the base field
    rep.length = 1;
    rep.order_bound_holds = true;
    Fnv f;
    f.i64(fingerprint_pair(*p.group, p.stabilizer));
    rep.fingerprint = f.h;
    return rep;
  }

  Subgroup j = stabilizer(p.group, std::span<const int32_t>(&ordering[0], 1));
  rep.degree_sequence.push_back(j.index());
  int64_t order = p.group->order();
  __int128 bound = p.n;
  for (size_t m = 1; m < ordering.size(); ++m) {
    Subgroup next = intersect(j, stabilizer(p.group, std::span<const int32_t>(&ordering[m], 1)));
    if (next.order() != j.order()) {
      rep.jump_indices.push_back(static_cast<int32_t>(m + 1));  // 1-based position
      rep.degree_sequence.push_back(next.index());
      bound *= static_cast<int64_t>(p.n) - static_cast<int64_t>(m) * r;
      if (bound > order) bound = order;  // saturate; only the comparison matters
    }
    j = std::move(next);
  }
  rep.length = static_cast<int32_t>(rep.jump_indices.size()) + 2;
  rep.order_bound_holds = bound >= order;

  Fnv f;
  f.i64(fingerprint_pair(*p.group, p.stabilizer));
  for (int32_t pt : ordering) f.i64(pt);
  rep.fingerprint = f.h;
  return rep;
}

TowerSweep tower_all_orderings(const RootPair& p) {
  auto blocks = cluster_partition(p);
  if (blocks.size() > 7) fail(Errc::bad_parameter, "all-orderings sweep capped at 7 clusters");
  std::vector<int32_t> reps;
  for (const auto& b : blocks) reps.push_back(b.front());
  std::sort(reps.begin(), reps.end());

  TowerSweep sweep;
  sweep.order_bound_holds = true;
  std::map<std::pair<std::vector<int64_t>, int32_t>, std::pair<int64_t, std::vector<int32_t>>> seen;
  do {
    TowerReport rep = cluster_tower(p, reps);
    sweep.orderings += 1;
    sweep.order_bound_holds = sweep.order_bound_holds && rep.order_bound_holds;
    auto key = std::make_pair(rep.degree_sequence, rep.length);
    auto it = seen.find(key);
    if (it == seen.end())
      seen.emplace(key, std::make_pair(int64_t{1}, rep.ordering));
    else
      it->second.first += 1;
  } while (std::next_permutation(reps.begin(), reps.end()));

  for (auto& [key, val] : seen) {
    TowerOutcome o;
    o.degree_sequence = key.first;
    o.length = key.second;
    o.count = val.first;
    o.example_ordering = val.second;
    sweep.outcomes.push_back(std::move(o));
  }
  Fnv f;
  f.i64(fingerprint_pair(*p.group, p.stabilizer));
  sweep.fingerprint = f.h;
  return sweep;
}

GroupPtr aut_group(const ExtensionPair& e) {
  Subgroup n = normalizer(e.sub);
  GroupPtr n_group = GroupBuilder::adopt_sorted(e.ambient->degree(),
                                                minimal_generators(n.elements(), n.degree()),
                                                n.elements(), e.ambient->limits());
  Subgroup u_in_n = Subgroup::adopt_sorted(n_group, e.sub.elements());
  return coset_action(u_in_n);
}

CapacityReport root_capacity(const GroupPtr& ambient, const Subgroup& sub_m, const Subgroup& sub_l) {
  ExtensionPair check_l(ambient, sub_l);  // validates parenthood
  ExtensionPair check_m(ambient, sub_m);
  if (!sub_l.contains_all(sub_m))
    fail(Errc::not_an_extension, "sub_m must be contained in sub_l");

  // roots <-> cosets of sub_l; a root lies in M iff sub_m fixes it, i.e. iff
  // sub_m is inside the coset's stabilizer (the matching conjugate of sub_l)
  CosetTable roots = coset_table(sub_l);
  int64_t rho = 0;
  for (const Perm& rep : roots.reps) {
    Perm inv = rep.inverse();
    bool inside = true;
    for (const Perm& x : sub_m.elements()) {
      if (!sub_l.contains(compose(compose(inv, x), rep))) {
        inside = false;
        break;
      }
    }
    if (inside) ++rho;
  }

  // clusters <-> cosets of the normalizer; collect the witnessed ones
  Subgroup ngl = normalizer(sub_l);
  CosetTable clusters = coset_table(ngl);
  int64_t r = checked_ratio(ngl.order(), sub_l.order(), "capacity r");
  CapacityReport rep;
  rep.r = r;
  rep.rho = rho;
  std::vector<Perm> support = ambient->elements();
  for (size_t i = 0; i < clusters.reps.size(); ++i) {
    const Perm& sigma = clusters.reps[i];
    Perm inv = sigma.inverse();
    bool inside = true;
    for (const Perm& x : sub_m.elements()) {
      if (!sub_l.contains(compose(compose(inv, x), sigma))) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    rep.witness_cosets.push_back(static_cast<int32_t>(i));
    std::vector<Perm> conj;
    conj.reserve(sub_l.elements().size());
    for (const Perm& x : sub_l.elements()) conj.push_back(compose(compose(sigma, x), inv));
    std::sort(conj.begin(), conj.end());
    std::vector<Perm> next;
    std::set_intersection(support.begin(), support.end(), conj.begin(), conj.end(),
                          std::back_inserter(next));
    support = std::move(next);
  }
  rep.a = static_cast<int64_t>(rep.witness_cosets.size());
  if (rep.rho != rep.a * rep.r) fail(Errc::internal, "capacity cross-check rho != a*r");
  rep.support = Subgroup::adopt_sorted(ambient, std::move(support));
  Fnv f;
  f.i64(fingerprint_pair(*ambient, sub_l));
  f.perms(sub_m.elements());
  rep.fingerprint = f.h;
  return rep;
}

ChainReport descending_chain(const ExtensionPair& e) {
  RootPair p = to_galois_pair(e);
  ChainReport rep;
  rep.descending = true;
  rep.chain.push_back(p.stabilizer);
  rep.field_degrees.push_back(p.stabilizer.index());
  for (;;) {
    Subgroup next = normalizer(rep.chain.back());
    if (next.order() == rep.chain.back().order()) {
      rep.stop = ChainStop::self_normalizing;
      break;
    }
    rep.step_indices.push_back(checked_ratio(next.order(), rep.chain.back().order(), "descending step"));
    rep.field_degrees.push_back(next.index());
    rep.chain.push_back(std::move(next));
  }
  rep.fingerprint = fingerprint_pair(*p.group, p.stabilizer);
  return rep;
}

ChainReport ascending_chain(const ExtensionPair& e) {
  RootPair p = to_galois_pair(e);
  ChainReport rep;
  rep.descending = false;
  rep.chain.push_back(Subgroup::full(p.group));
  rep.field_degrees.push_back(1);
  for (;;) {
    Subgroup next = normal_closure_in(p.stabilizer, rep.chain.back());
    if (next.order() == rep.chain.back().order()) {
      rep.stop = ChainStop::closure_fixed;
      break;
    }
    rep.step_indices.push_back(checked_ratio(rep.chain.back().order(), next.order(), "ascending step"));
    rep.field_degrees.push_back(next.index());
    rep.chain.push_back(std::move(next));
  }
  rep.t = rep.step_indices.empty() ? 1 : rep.step_indices.front();
  rep.u = checked_ratio(static_cast<int64_t>(p.n), rep.t, "u = n/t");
  rep.fingerprint = fingerprint_pair(*p.group, p.stabilizer);
  return rep;
}

LinkProfile link_profile(const RootPair& p) {
  LinkProfile lp;
  lp.n = p.n;
  const Subgroup& h = p.stabilizer;
  Subgroup ngh = normalizer(h);
  Subgroup hg = normal_closure(h);
  Subgroup g_full = Subgroup::full(p.group);
  lp.r = checked_ratio(ngh.order(), h.order(), "link r");
  lp.s = checked_ratio(p.group->order(), ngh.order(), "link s");
  lp.t = checked_ratio(p.group->order(), hg.order(), "link t");
  lp.u = checked_ratio(hg.order(), h.order(), "link u");
  lp.n_eq_f = hg.elements() == ngh.elements();
  lp.h_normal_in_hg = is_normal_under(h, hg);
  lp.ngh_normal_in_g = is_normal_under(ngh, g_full);
  lp.hg_inside_ngh = ngh.contains_all(hg);
  lp.h_normal_in_g = is_normal_under(h, g_full);

  bool ngh_is_g = ngh.order() == p.group->order();
  bool hg_is_h = hg.order() == h.order();
  lp.clause1 = (ngh_is_g == (lp.r == lp.n)) && ((lp.r == lp.n) == (lp.t == lp.n)) &&
               ((lp.t == lp.n) == hg_is_h);
  lp.clause2 = lp.h_normal_in_hg == lp.hg_inside_ngh;
  lp.clause3 = !lp.ngh_normal_in_g || lp.hg_inside_ngh;
  bool ngh_proper_normal = lp.ngh_normal_in_g && ngh.order() < p.group->order();
  bool h_proper_normal_in_hg = lp.h_normal_in_hg && h.order() < hg.order();
  lp.clause4 = !lp.n_eq_f || lp.n == 1 || (ngh_proper_normal && h_proper_normal_in_hg);
  lp.r_t_eq_n = lp.r * lp.t == lp.n;
  lp.t_eq_s = lp.t == lp.s;
  if (lp.n == 1) {
    lp.clause5 = true;
  } else if (lp.n_eq_f) {
    // both chains must be the three-term linked chain through the shared
    // middle subgroup; the pair is already faithful, so walk in place
    bool three_down = ngh.order() > h.order() && ngh.order() < p.group->order() &&
                      normalizer(ngh).order() == p.group->order();
    bool three_up = hg.order() < p.group->order() && hg.order() > h.order() &&
                    is_normal_under(h, hg);
    lp.clause5 = three_down && three_up && lp.r_t_eq_n && lp.t_eq_s;
  } else {
    lp.clause5 = true;  // nothing asserted when the linked condition fails
  }
  lp.fingerprint = fingerprint_pair(*p.group, h);
  return lp;
}

HintReport hint_check(const GroupPtr& ambient, const Subgroup& sub_m, const Subgroup& sub_l) {
  CapacityReport cap = root_capacity(ambient, sub_m, sub_l);
  HintReport rep;
  rep.capacity_hypothesis = cap.a == 1 && cap.support.elements() == sub_l.elements();
  Subgroup ngl = normalizer(sub_l);
  Subgroup ngm = normalizer(sub_m);
  int64_t r_l = checked_ratio(ngl.order(), sub_l.order(), "hint r_l");
  int64_t r_m = checked_ratio(ngm.order(), sub_m.order(), "hint r_m");
  int64_t m_over_l = checked_ratio(sub_l.order(), sub_m.order(), "hint [M:L]");
  rep.degree_hypothesis = m_over_l * r_l == r_m;
  rep.hypotheses_hold = rep.capacity_hypothesis && rep.degree_hypothesis;
  if (rep.hypotheses_hold) rep.conclusion_verified = is_normal_under(sub_m, sub_l);
  rep.fingerprint = cap.fingerprint;
  return rep;
}

int64_t cluster_size_of(const ExtensionPair& e) {
  return cluster_report(to_galois_pair(e)).r;
}

int64_t ascending_index_of(const ExtensionPair& e) { return ascending_chain(e).t; }

}  // namespace rcl
