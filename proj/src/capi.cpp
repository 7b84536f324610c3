#include "rootcluster.h"

#include <cstring>
#include <string>

#include "rcl/catalog.hpp"
#include "rcl/report_json.hpp"

using rcl::Errc;

struct rc_group {
  rcl::GroupPtr g;
};
struct rc_subgroup {
  rcl::Subgroup s;
};
struct rc_pair {
  rcl::RootPair p;
};

namespace {

thread_local std::string t_last_error;
thread_local rcl::Limits t_limits;

rc_status map_errc(Errc c) {
  switch (c) {
    case Errc::ok: return RC_OK;
    case Errc::degree_mismatch: return RC_ERR_DEGREE_MISMATCH;
    case Errc::invalid_permutation: return RC_ERR_INVALID_PERMUTATION;
    case Errc::group_too_large: return RC_ERR_GROUP_TOO_LARGE;
    case Errc::not_a_subgroup: return RC_ERR_NOT_A_SUBGROUP;
    case Errc::parent_mismatch: return RC_ERR_PARENT_MISMATCH;
    case Errc::invalid_root_pair: return RC_ERR_INVALID_ROOT_PAIR;
    case Errc::invalid_extension_pair: return RC_ERR_INVALID_EXTENSION_PAIR;
    case Errc::not_an_extension: return RC_ERR_NOT_AN_EXTENSION;
    case Errc::bad_parameter: return RC_ERR_BAD_PARAMETER;
    case Errc::bad_ordering: return RC_ERR_BAD_ORDERING;
    case Errc::degree_too_small: return RC_ERR_DEGREE_TOO_SMALL;
    case Errc::parse_error: return RC_ERR_PARSE;
    case Errc::internal: return RC_ERR_INTERNAL;
  }
  return RC_ERR_INTERNAL;
}

template <typename Fn>
rc_status guarded(Fn&& fn) {
  try {
    fn();
    return RC_OK;
  } catch (const rcl::Error& e) {
    t_last_error = e.what();
    return map_errc(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return RC_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<rcl::Perm> parse_generator_rows(int32_t degree, const int64_t* images, int32_t rows) {
  if (degree < 1) rcl::fail(Errc::bad_parameter, "degree must be positive");
  if (rows < 0 || (rows > 0 && images == nullptr))
    rcl::fail(Errc::bad_parameter, "null generator array");
  std::vector<rcl::Perm> gens;
  gens.reserve(static_cast<size_t>(rows));
  for (int32_t i = 0; i < rows; ++i) {
    std::vector<int64_t> row(images + static_cast<size_t>(i) * degree,
                             images + static_cast<size_t>(i + 1) * degree);
    gens.push_back(rcl::Perm::from_one_based(row));
  }
  return gens;
}

rcl::Json assertions_json(const std::string& title, const std::vector<rcl::Assertion>& as) {
  rcl::Json j;
  j["type"] = "verify_report";
  j["name"] = title;
  j["pass"] = rcl::all_pass(as);
  j["assertions"] = rcl::Json::array();
  for (const auto& a : as) {
    rcl::Json aj;
    aj["name"] = a.name;
    aj["pass"] = a.pass;
    if (!a.detail.empty()) aj["detail"] = a.detail;
    j["assertions"].push_back(std::move(aj));
  }
  return j;
}

}  // namespace

extern "C" {

const char* rc_status_name(rc_status status) {
  switch (status) {
    case RC_OK: return "ok";
    case RC_ERR_DEGREE_MISMATCH: return "degree_mismatch";
    case RC_ERR_INVALID_PERMUTATION: return "invalid_permutation";
    case RC_ERR_GROUP_TOO_LARGE: return "group_too_large";
    case RC_ERR_NOT_A_SUBGROUP: return "not_a_subgroup";
    case RC_ERR_PARENT_MISMATCH: return "parent_mismatch";
    case RC_ERR_INVALID_ROOT_PAIR: return "invalid_root_pair";
    case RC_ERR_INVALID_EXTENSION_PAIR: return "invalid_extension_pair";
    case RC_ERR_NOT_AN_EXTENSION: return "not_an_extension";
    case RC_ERR_BAD_PARAMETER: return "bad_parameter";
    case RC_ERR_BAD_ORDERING: return "bad_ordering";
    case RC_ERR_DEGREE_TOO_SMALL: return "degree_too_small";
    case RC_ERR_PARSE: return "parse_error";
    case RC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* rc_last_error(void) { return t_last_error.c_str(); }

const char* rc_version(void) { return "1.0.0"; }

void rc_set_limits(int64_t max_order, int32_t max_degree) {
  if (max_order > 0) t_limits.max_order = max_order;
  if (max_degree > 0) t_limits.max_degree = max_degree;
}

rc_status rc_group_create(int32_t degree, const int64_t* images, int32_t n_generators,
                          rc_group** out) {
  return guarded([&] {
    auto gens = parse_generator_rows(degree, images, n_generators);
    *out = new rc_group{rcl::Group::closure(degree, std::move(gens), t_limits)};
  });
}

rc_status rc_group_from_expr(const char* expr, rc_group** out) {
  return guarded([&] {
    if (!expr) rcl::fail(Errc::bad_parameter, "null expression");
    *out = new rc_group{rcl::build_group_expr(expr, t_limits)};
  });
}

rc_status rc_group_direct_product(const rc_group* g, const rc_group* r, rc_group** out) {
  return guarded([&] { *out = new rc_group{rcl::direct_product(g->g, r->g)}; });
}

void rc_group_free(rc_group* g) { delete g; }
int32_t rc_group_degree(const rc_group* g) { return g->g->degree(); }
int64_t rc_group_order(const rc_group* g) { return g->g->order(); }

rc_status rc_subgroup_from_generators(const rc_group* g, const int64_t* images,
                                      int32_t n_generators, rc_subgroup** out) {
  return guarded([&] {
    auto gens = parse_generator_rows(g->g->degree(), images, n_generators);
    *out = new rc_subgroup{rcl::Subgroup::from_generators(g->g, std::move(gens))};
  });
}

rc_status rc_subgroup_stabilizer(const rc_group* g, const int64_t* points, int32_t n_points,
                                 rc_subgroup** out) {
  return guarded([&] {
    std::vector<int32_t> pts;
    for (int32_t i = 0; i < n_points; ++i) {
      int64_t p = points[i];
      if (p < 1 || p > g->g->degree()) rcl::fail(Errc::bad_parameter, "stabilizer point out of range");
      pts.push_back(static_cast<int32_t>(p - 1));
    }
    *out = new rc_subgroup{rcl::stabilizer(g->g, pts)};
  });
}

rc_status rc_subgroup_core(const rc_group* g, const rc_subgroup* h, rc_subgroup** out) {
  return guarded([&] {
    rcl::ExtensionPair e(g->g, h->s);  // validates that h lives in g
    *out = new rc_subgroup{rcl::core(h->s)};
  });
}

void rc_subgroup_free(rc_subgroup* h) { delete h; }
int64_t rc_subgroup_order(const rc_subgroup* h) { return h->s.order(); }

rc_status rc_pair_reduce(const rc_group* g, const rc_subgroup* h, rc_pair** out) {
  return guarded([&] {
    *out = new rc_pair{rcl::to_galois_pair(rcl::ExtensionPair(g->g, h->s))};
  });
}

rc_status rc_pair_from_expr(const char* expr, rc_pair** out) {
  return guarded([&] {
    if (!expr) rcl::fail(Errc::bad_parameter, "null expression");
    *out = new rc_pair{rcl::build_pair_expr(expr, t_limits)};
  });
}

rc_status rc_pair_magnify(const rc_pair* p, const rc_group* by, rc_pair** out) {
  return guarded([&] { *out = new rc_pair{rcl::magnify(p->p, by->g)}; });
}

rc_status rc_pair_group(const rc_pair* p, rc_group** out) {
  return guarded([&] { *out = new rc_group{p->p.group}; });
}

rc_status rc_pair_stabilizer(const rc_pair* p, rc_subgroup** out) {
  return guarded([&] { *out = new rc_subgroup{p->p.stabilizer}; });
}

void rc_pair_free(rc_pair* p) { delete p; }
int32_t rc_pair_degree(const rc_pair* p) { return p->p.n; }

rc_status rc_cluster_report_json(const rc_pair* p, char** out_json) {
  return guarded([&] {
    *out_json = dup_string(rcl::cluster_report_json(rcl::cluster_report(p->p)).dump());
  });
}

rc_status rc_partition_json(const rc_pair* p, char** out_json) {
  return guarded([&] {
    *out_json = dup_string(rcl::partition_json(rcl::cluster_partition(p->p)).dump());
  });
}

rc_status rc_tower_json(const rc_pair* p, const int64_t* ordering, int32_t n, char** out_json) {
  return guarded([&] {
    std::vector<int32_t> pts;
    for (int32_t i = 0; i < n; ++i) {
      if (ordering[i] < 1 || ordering[i] > p->p.n)
        rcl::fail(Errc::bad_ordering, "ordering point out of range");
      pts.push_back(static_cast<int32_t>(ordering[i] - 1));
    }
    *out_json = dup_string(rcl::tower_report_json(rcl::cluster_tower(p->p, pts)).dump());
  });
}

rc_status rc_tower_sweep_json(const rc_pair* p, char** out_json) {
  return guarded([&] {
    *out_json = dup_string(rcl::tower_sweep_json(rcl::tower_all_orderings(p->p)).dump());
  });
}

rc_status rc_chain_json(const rc_group* g, const rc_subgroup* h, int32_t descending,
                        char** out_json) {
  return guarded([&] {
    rcl::ExtensionPair e(g->g, h->s);
    rcl::ChainReport rep = descending ? rcl::descending_chain(e) : rcl::ascending_chain(e);
    *out_json = dup_string(rcl::chain_report_json(rep).dump());
  });
}

rc_status rc_capacity_json(const rc_group* g, const rc_subgroup* upper, const rc_subgroup* lower,
                           char** out_json) {
  return guarded([&] {
    *out_json = dup_string(
        rcl::capacity_report_json(rcl::root_capacity(g->g, upper->s, lower->s)).dump());
  });
}

rc_status rc_hint_json(const rc_group* g, const rc_subgroup* upper, const rc_subgroup* lower,
                       char** out_json) {
  return guarded([&] {
    *out_json = dup_string(rcl::hint_report_json(rcl::hint_check(g->g, upper->s, lower->s)).dump());
  });
}

rc_status rc_weak_magnification_json(const rc_group* g, const rc_subgroup* upper,
                                     const rc_subgroup* lower, char** out_json) {
  return guarded([&] {
    *out_json = dup_string(
        rcl::weak_magnification_json(rcl::weak_magnification(g->g, upper->s, lower->s)).dump());
  });
}

rc_status rc_detect_json(const rc_pair* p, char** out_json) {
  return guarded([&] {
    *out_json =
        dup_string(rcl::decomposition_list_json(rcl::detect_strong_magnification(p->p)).dump());
  });
}

rc_status rc_basechange_json(const rc_pair* p, const rc_group* by, char** out_json) {
  return guarded([&] {
    rcl::Json j = rcl::base_change_json(rcl::base_change_verify(p->p, by->g));
    if (p->p.n > 2) {  // the product construction needs degree > 2
      rcl::StrongChainFlags strong = rcl::strong_magnification_chains(p->p, by->g);
      j["strong_chain_correspondence"] = rcl::strong_chain_json(strong);
    }
    *out_json = dup_string(j.dump());
  });
}

rc_status rc_link_profile_json(const rc_pair* p, char** out_json) {
  return guarded([&] {
    *out_json = dup_string(rcl::link_profile_json(rcl::link_profile(p->p)).dump());
  });
}

rc_status rc_catalog_list_json(char** out_json) {
  return guarded([&] {
    rcl::Json j;
    j["type"] = "catalog";
    j["fixtures"] = rcl::Json::array();
    for (const auto& f : rcl::catalog()) {
      rcl::Json fj;
      fj["name"] = f.name;
      if (!f.pair_expr.empty()) fj["pair"] = f.pair_expr;
      fj["note"] = f.note;
      j["fixtures"].push_back(std::move(fj));
    }
    *out_json = dup_string(j.dump());
  });
}

rc_status rc_catalog_run_json(const char* name, int32_t* all_pass, char** out_json) {
  return guarded([&] {
    if (!name) rcl::fail(Errc::bad_parameter, "null fixture name");
    auto as = rcl::catalog_run(name, t_limits);
    if (all_pass) *all_pass = rcl::all_pass(as) ? 1 : 0;
    *out_json = dup_string(assertions_json(name, as).dump());
  });
}

rc_status rc_verify_json(const rc_group* g, const rc_subgroup* h, int32_t* all_pass,
                         char** out_json) {
  return guarded([&] {
    auto as = rcl::verify_pair(g->g, h->s, t_limits);
    if (all_pass) *all_pass = rcl::all_pass(as) ? 1 : 0;
    *out_json = dup_string(assertions_json("verify", as).dump());
  });
}

void rc_string_free(char* s) { delete[] s; }

}  // extern "C"
