#include "rcl/report_json.hpp"

#include <cinttypes>
#include <cstdio>

namespace rcl {

std::string fingerprint_hex(uint64_t fp) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, fp);
  return buf;
}

Json perm_json(const Perm& p) { return Json(p.one_based()); }

Json subgroup_json(const Subgroup& h) {
  Json j;
  j["order"] = h.order();
  j["generators"] = Json::array();
  for (const Perm& g : minimal_generators(h.elements(), h.degree()))
    j["generators"].push_back(perm_json(g));
  return j;
}

Json group_json(const Group& g) {
  Json j;
  j["degree"] = g.degree();
  j["order"] = g.order();
  j["generators"] = Json::array();
  for (const Perm& p : g.generators()) j["generators"].push_back(perm_json(p));
  return j;
}

Json cluster_report_json(const ClusterReport& r) {
  Json j;
  j["type"] = "cluster_report";
  j["n"] = r.n;
  j["r"] = r.r;
  j["s"] = r.s;
  j["aut_order"] = r.aut_order;
  j["fingerprint"] = fingerprint_hex(r.fingerprint);
  return j;
}

Json partition_json(const std::vector<std::vector<int32_t>>& blocks) {
  Json j;
  j["type"] = "cluster_partition";
  j["blocks"] = Json::array();
  for (const auto& b : blocks) {
    Json blk = Json::array();
    for (int32_t p : b) blk.push_back(p + 1);
    j["blocks"].push_back(std::move(blk));
  }
  return j;
}

namespace {
Json one_based_points(const std::vector<int32_t>& pts) {
  Json a = Json::array();
  for (int32_t p : pts) a.push_back(p + 1);
  return a;
}
}  // namespace

Json tower_report_json(const TowerReport& r) {
  Json j;
  j["type"] = "tower_report";
  j["ordering"] = one_based_points(r.ordering);
  j["jump_indices"] = r.jump_indices;
  j["degree_sequence"] = r.degree_sequence;
  j["length"] = r.length;
  j["order_bound_holds"] = r.order_bound_holds;
  j["fingerprint"] = fingerprint_hex(r.fingerprint);
  return j;
}

Json tower_sweep_json(const TowerSweep& s) {
  Json j;
  j["type"] = "tower_sweep";
  j["orderings"] = s.orderings;
  j["outcomes"] = Json::array();
  for (const auto& o : s.outcomes) {
    Json oj;
    oj["degree_sequence"] = o.degree_sequence;
    oj["length"] = o.length;
    oj["count"] = o.count;
    oj["example_ordering"] = one_based_points(o.example_ordering);
    j["outcomes"].push_back(std::move(oj));
  }
  j["order_bound_holds"] = s.order_bound_holds;
  j["fingerprint"] = fingerprint_hex(s.fingerprint);
  return j;
}

Json capacity_report_json(const CapacityReport& r) {
  Json j;
  j["type"] = "capacity_report";
  j["rho"] = r.rho;
  j["a"] = r.a;
  j["r"] = r.r;
  j["support_subgroup"] = subgroup_json(r.support);
  j["witness_cosets"] = one_based_points(r.witness_cosets);
  j["fingerprint"] = fingerprint_hex(r.fingerprint);
  return j;
}

Json chain_report_json(const ChainReport& r) {
  Json j;
  j["type"] = "chain_report";
  j["direction"] = r.descending ? "descending" : "ascending";
  j["subgroup_chain"] = Json::array();
  for (const Subgroup& h : r.chain) {
    Json stage = subgroup_json(h);
    stage["field_degree"] = h.index();
    j["subgroup_chain"].push_back(std::move(stage));
  }
  j["step_indices"] = r.step_indices;
  j["field_degrees"] = r.field_degrees;
  if (!r.descending) {
    j["t"] = r.t;
    j["u"] = r.u;
  }
  j["terminal"] = chain_stop_name(r.stop);
  j["fingerprint"] = fingerprint_hex(r.fingerprint);
  return j;
}

Json link_profile_json(const LinkProfile& p) {
  Json j;
  j["type"] = "link_profile";
  j["n"] = p.n;
  j["r"] = p.r;
  j["s"] = p.s;
  j["t"] = p.t;
  j["u"] = p.u;
  j["N_eq_F"] = p.n_eq_f;
  j["H_normal_in_HG"] = p.h_normal_in_hg;
  j["NGH_normal_in_G"] = p.ngh_normal_in_g;
  Json rel;
  rel["HG_inside_NGH"] = p.hg_inside_ngh;
  rel["H_normal_in_G"] = p.h_normal_in_g;
  rel["clause1"] = p.clause1;
  rel["clause2"] = p.clause2;
  rel["clause3"] = p.clause3;
  rel["clause4"] = p.clause4;
  rel["clause5"] = p.clause5;
  rel["r_t_eq_n"] = p.r_t_eq_n;
  rel["t_eq_s"] = p.t_eq_s;
  j["relations"] = std::move(rel);
  j["fingerprint"] = fingerprint_hex(p.fingerprint);
  return j;
}

Json hint_report_json(const HintReport& r) {
  Json j;
  j["type"] = "hint_report";
  j["capacity_hypothesis"] = r.capacity_hypothesis;
  j["degree_hypothesis"] = r.degree_hypothesis;
  j["hypotheses_hold"] = r.hypotheses_hold;
  j["conclusion_verified"] = r.conclusion_verified;
  j["fingerprint"] = fingerprint_hex(r.fingerprint);
  return j;
}

Json decomposition_list_json(const std::vector<Decomposition>& ds) {
  Json j;
  j["type"] = "decomposition_reports";
  j["found"] = !ds.empty();
  j["reports"] = Json::array();
  for (const Decomposition& d : ds) {
    Json dj;
    dj["A"] = subgroup_json(d.a);
    dj["B"] = subgroup_json(d.b);
    dj["A_prime"] = subgroup_json(d.a_prime);
    dj["L_subgroup"] = subgroup_json(d.l_subgroup);
    dj["F_subgroup"] = subgroup_json(d.f_subgroup);
    dj["magnification_factor"] = d.factor;
    dj["fingerprint"] = fingerprint_hex(d.fingerprint);
    j["reports"].push_back(std::move(dj));
  }
  return j;
}

Json weak_magnification_json(const WeakMagnification& w) {
  Json j;
  j["type"] = "weak_magnification";
  j["holds"] = w.holds;
  if (w.holds) {
    j["factor"] = w.factor_num;
  } else {
    j["factor"] = Json{{"num", w.factor_num}, {"den", w.factor_den}};
  }
  j["r_m"] = w.r_m;
  j["r_l"] = w.r_l;
  j["fingerprint"] = fingerprint_hex(w.fingerprint);
  return j;
}

Json base_change_json(const BaseChangeFlags& f) {
  Json j;
  j["type"] = "base_change";
  j["cluster_size"] = f.cluster_size;
  j["capacity"] = f.capacity;
  j["descending_chain"] = f.descending_chain;
  j["ascending_chain"] = f.ascending_chain;
  j["ascending_index"] = f.ascending_index;
  j["all"] = f.all();
  j["fingerprint"] = fingerprint_hex(f.fingerprint);
  return j;
}

Json strong_chain_json(const StrongChainFlags& f) {
  Json j;
  j["type"] = "strong_chain_correspondence";
  j["descending"] = f.descending;
  j["ascending"] = f.ascending;
  j["fingerprint"] = fingerprint_hex(f.fingerprint);
  return j;
}

Json euler_checks_json(const EulerChecks& c) {
  Json j;
  j["type"] = "euler_checks";
  j["ratio_identity"] = c.ratio_identity;
  j["divisibility"] = c.divisibility;
  j["equality_case"] = c.equality_case;
  j["ratio_is_m"] = c.ratio_is_m;
  j["m"] = c.m;
  j["k"] = c.k;
  j["phi_n"] = c.phi_n;
  j["phi_l"] = c.phi_l;
  return j;
}

}  // namespace rcl
