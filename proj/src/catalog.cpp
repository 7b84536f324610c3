#include "rcl/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "rcl/report_json.hpp"

namespace rcl {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(Errc::parse_error, std::string("expected an integer for ") + what + ", got '" + s + "'");
  }
}

GroupPtr build_group_atom(const std::string& atom, const Limits& limits) {
  auto parts = split(atom, ':');
  if (parts[0] == "cyclic" && parts.size() == 2)
    return cyclic_group(parse_int(parts[1], "cyclic order"), limits);
  if (parts[0] == "klein4" && parts.size() == 1) return klein_four(limits);
  if (parts[0] == "sym" && parts.size() == 2) {
    int n = parse_int(parts[1], "symmetric degree");
    return tuple_action(n, 1, limits).group;
  }
  if (parts[0] == "alt" && parts.size() == 2)
    return alternating_pair(parse_int(parts[1], "alternating degree"), limits).group;
  fail(Errc::parse_error, "unknown group expression '" + atom + "'");
}

}  // namespace

GroupPtr build_group_expr(const std::string& expr, const Limits& limits) {
  auto atoms = split(expr, ',');
  GroupPtr g = build_group_atom(atoms[0], limits);
  for (size_t i = 1; i < atoms.size(); ++i) g = direct_product(g, build_group_atom(atoms[i], limits));
  return g;
}

RootPair build_pair_expr(const std::string& expr, const Limits& limits) {
  auto plus = expr.find('+');
  if (plus != std::string::npos) {
    RootPair base = build_pair_expr(expr.substr(0, plus), limits);
    GroupPtr by = build_group_expr(expr.substr(plus + 1), limits);
    return magnify(base, by);
  }
  auto parts = split(expr, ':');
  if (parts[0] == "metacyclic" && parts.size() == 2)
    return metacyclic(parse_int(parts[1], "metacyclic n"), limits);
  if (parts[0] == "wreathlike" && parts.size() == 3)
    return wreathlike(parse_int(parts[1], "wreathlike r"), parse_int(parts[2], "wreathlike s"), limits);
  if (parts[0] == "tuples" && parts.size() == 3)
    return tuple_action(parse_int(parts[1], "tuples n"), parse_int(parts[2], "tuples k"), limits);
  if (parts[0] == "sym" && parts.size() == 2)
    return tuple_action(parse_int(parts[1], "sym n"), 1, limits);
  if (parts[0] == "alt" && parts.size() == 2)
    return alternating_pair(parse_int(parts[1], "alt n"), limits);
  fail(Errc::parse_error, "unknown pair expression '" + expr + "'");
}

namespace {

struct Checker {
  std::vector<Assertion> items;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    items.push_back({name, ok, ok ? "" : detail});
  }
  template <class A, class B>
  void eq(const std::string& name, const A& got, const B& want) {
    std::ostringstream os;
    os << "got " << got << ", want " << want;
    check(name, got == static_cast<A>(want), os.str());
  }
  void run(const std::string& name, const std::function<void(Checker&)>& fn) {
    size_t before = items.size();
    try {
      fn(*this);
    } catch (const std::exception& e) {
      items.push_back({name, false, std::string("exception: ") + e.what()});
      return;
    }
    if (items.size() == before) items.push_back({name, true, ""});
  }
};

std::string seq_str(const std::vector<int64_t>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

GroupPtr subgroup_as_group(const Subgroup& h) {
  return GroupBuilder::adopt_sorted(h.degree(), minimal_generators(h.elements(), h.degree()),
                                    h.elements(), h.parent()->limits());
}

// ---- the generic invariant suite -----------------------------------------

void closure_laws(Checker& c, const Group& g) {
  bool closed = true, inverses = true;
  if (g.order() <= 2000) {
    for (const Perm& a : g.elements()) {
      if (!g.contains(a.inverse())) inverses = false;
      for (const Perm& b : g.elements())
        if (!g.contains(compose(a, b))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
  } else {
    // deterministic stride sample above the exhaustive bound
    int64_t stride = g.order() / 41 + 1;
    for (int64_t i = 0; i < g.order(); i += stride) {
      const Perm& a = g.elements()[static_cast<size_t>(i)];
      if (!g.contains(a.inverse())) inverses = false;
      for (int64_t j = 0; j < g.order(); j += stride)
        if (!g.contains(compose(a, g.elements()[static_cast<size_t>(j)]))) closed = false;
    }
  }
  c.check("group-closure-laws", closed && inverses, "element set not closed under the group laws");
}

void relabel_invariance(Checker& c, const RootPair& p, const ClusterReport& base) {
  // conjugating the whole pair by a relabeling permutation must not change
  // any invariant
  std::vector<int32_t> rot(static_cast<size_t>(p.n));
  for (int32_t i = 0; i < p.n; ++i) rot[static_cast<size_t>(i)] = (i + 1) % p.n;
  std::vector<int32_t> rev(static_cast<size_t>(p.n));
  for (int32_t i = 0; i < p.n; ++i) rev[static_cast<size_t>(i)] = p.n - 1 - i;
  for (const Perm& pi : {Perm::from_images(rot), Perm::from_images(rev)}) {
    std::vector<Perm> gens;
    for (const Perm& x : p.group->generators()) gens.push_back(conjugate(pi, x));
    RootPair q = RootPair::from_group(Group::closure(p.n, std::move(gens), p.group->limits()));
    ClusterReport rq = cluster_report(q);
    c.check("relabel-invariance", rq.r == base.r && rq.s == base.s && rq.n == base.n,
            "cluster invariants changed under a point relabeling");
  }
}

void tower_checks(Checker& c, const RootPair& p, const ClusterReport& rep) {
  auto blocks = cluster_partition(p);
  std::vector<int32_t> reps;
  for (const auto& b : blocks) reps.push_back(b.front());
  if (static_cast<int64_t>(blocks.size()) <= 6) {
    TowerSweep sweep = tower_all_orderings(p);
    c.check("tower-order-bound", sweep.order_bound_holds, "order bound failed for some ordering");
    for (const auto& o : sweep.outcomes) {
      bool increasing = std::is_sorted(o.degree_sequence.begin(), o.degree_sequence.end()) &&
                        std::adjacent_find(o.degree_sequence.begin(), o.degree_sequence.end()) ==
                            o.degree_sequence.end();
      c.check("tower-degrees-increase", increasing, "degree sequence not strictly increasing");
      if (p.n > 1)
        c.check("tower-reaches-closure", o.degree_sequence.back() == p.group->order(),
                "tower does not end at the full closure");
    }
  } else {
    TowerReport t = cluster_tower(p, reps);
    c.check("tower-order-bound", t.order_bound_holds, "order bound failed");
    if (p.n > 1)
      c.check("tower-reaches-closure", t.degree_sequence.back() == p.group->order(),
              "tower does not end at the full closure");
  }
  // block structure
  bool sizes_ok = true, fix_ok = true;
  for (const auto& b : blocks) {
    if (static_cast<int64_t>(b.size()) != rep.r) sizes_ok = false;
    auto stab = stabilizer(p.group, std::span<const int32_t>(&b.front(), 1));
    if (fixed_points(stab.elements(), p.n) != b) fix_ok = false;
  }
  c.eq("partition-block-count", static_cast<int64_t>(blocks.size()), rep.s);
  c.check("partition-block-size", sizes_ok, "some block does not have size r");
  c.check("partition-blocks-are-fixed-sets", fix_ok, "block differs from Fix(Stab(point))");
}

void chain_checks(Checker& c, const RootPair& p, const ClusterReport& rep) {
  ExtensionPair e(p.group, p.stabilizer);
  ChainReport down = descending_chain(e);
  bool strict = true;
  for (size_t i = 1; i < down.chain.size(); ++i)
    if (down.chain[i].order() <= down.chain[i - 1].order()) strict = false;
  c.check("descending-strict", strict, "descending chain is not strictly increasing in order");
  Subgroup last = down.chain.back();
  c.check("descending-terminal", normalizer(last).order() == last.order(),
          "final subgroup is not self-normalizing");
  // each step index equals the cluster size of that stage, recomputed through
  // the reduced stage pair
  RootPair reduced = to_galois_pair(e);
  for (size_t i = 0; i + 1 < down.chain.size(); ++i) {
    int64_t stage_r = cluster_size_of(ExtensionPair(reduced.group, down.chain[i]));
    c.eq("descending-step-equals-stage-cluster-size", down.step_indices[i], stage_r);
  }

  ChainReport up = ascending_chain(e);
  c.eq("ascending-t-times-u", up.t * up.u, static_cast<int64_t>(p.n));
  bool desc_strict = true;
  for (size_t i = 1; i < up.chain.size(); ++i)
    if (up.chain[i].order() >= up.chain[i - 1].order()) desc_strict = false;
  c.check("ascending-strict", desc_strict, "ascending chain is not strictly decreasing in order");
  // r | t * r_F with r_F computed over the first ascending field
  GroupPtr f_ambient = subgroup_as_group(up.chain.size() > 1 ? up.chain[1] : up.chain[0]);
  Subgroup h_in_f = Subgroup::adopt_sorted(f_ambient, reduced.stabilizer.elements());
  int64_t r_f = cluster_size_of(ExtensionPair(f_ambient, h_in_f));
  c.check("r-divides-t-times-rF", (up.t * r_f) % rep.r == 0,
          "r does not divide t * r_F (" + std::to_string(up.t) + "*" + std::to_string(r_f) + ")");
}

void link_checks(Checker& c, const RootPair& p) {
  LinkProfile lp = link_profile(p);
  c.check("link-clause1", lp.clause1, "normalizer/closure degeneracy clauses disagree");
  c.check("link-clause2", lp.clause2, "H normal in H^G iff H^G inside N_G(H) failed");
  c.check("link-clause3", lp.clause3, "N_G(H) normal in G but H^G not inside N_G(H)");
  c.check("link-clause4", lp.clause4, "N=F but one of the proper normality claims failed");
  c.check("link-clause5", lp.clause5, "N=F chain shape or r*t=n / t=s failed");
}

void capacity_and_divisibility_checks(Checker& c, const RootPair& p, const ClusterReport& rep) {
  if (p.n > 24) return;
  const GroupPtr& g = p.group;
  const Subgroup& h = p.stabilizer;
  std::vector<Subgroup> mids = intermediate_subgroups(h);

  ChainReport up_top = ascending_chain(ExtensionPair(g, h));
  Subgroup ngh = normalizer(h);
  GroupPtr aut_mk = aut_group(ExtensionPair(g, h));
  GroupPtr ngh_group = subgroup_as_group(ngh);
  Subgroup h_in_ngh = Subgroup::adopt_sorted(ngh_group, h.elements());
  CosetTable ngh_table = coset_table(h_in_ngh);

  for (const Subgroup& u : mids) {
    CapacityReport cap = root_capacity(g, h, u);
    c.check("capacity-r-divides-rho", cap.rho % cap.r == 0 && cap.rho == cap.a * cap.r,
            "rho is not a multiple of r");
    Subgroup ngu = normalizer(u);
    int64_t s_u = g->order() / ngu.order();
    c.check("capacity-a-range", cap.a >= 1 && cap.a <= s_u, "a outside 1..s");
    // the field spanned by the witnessed clusters soaks up the full capacity
    int64_t r_support = normalizer(cap.support).order() / cap.support.order();
    c.eq("capacity-on-own-span", root_capacity(g, h, cap.support).rho, r_support);
    c.eq("capacity-span-inherits", root_capacity(g, cap.support, u).rho, cap.rho);

    // divisibility of automorphism counts down the tower
    GroupPtr u_ambient = subgroup_as_group(u);
    Subgroup h_in_u = Subgroup::adopt_sorted(u_ambient, h.elements());
    int64_t r_rel = cluster_size_of(ExtensionPair(u_ambient, h_in_u));
    c.check("aut-divisibility", rep.r % r_rel == 0,
            "relative cluster size does not divide the absolute one");
    int64_t t_mid = ascending_index_of(ExtensionPair(g, u));
    c.check("t-monotone", up_top.t % t_mid == 0, "t of the subextension does not divide t");

    // normalizer-restriction embedding, by order divisibility
    {
      Subgroup n_u_h = intersect(u, ngh);
      std::vector<Perm> image;
      for (const Perm& x : n_u_h.elements()) image.push_back(coset_image(ngh_table, *ngh_group, x));
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      Subgroup b = Subgroup::adopt_sorted(aut_mk, std::move(image));
      Subgroup n_a_b = normalizer(b);
      Subgroup w = join(h, n_u_h);
      int64_t target = normalizer(w).order() / w.order();
      c.check("normalizer-restriction-embedding", target % (n_a_b.order() / b.order()) == 0,
              "embedded normalizer quotient does not divide the target order");
    }

    WeakMagnification wm = weak_magnification(g, h, u);
    if (wm.holds)
      c.check("weak-magnification-factor", wm.factor_num * wm.r_l == wm.r_m && wm.factor_den == 1,
              "factor does not match the cluster-size ratio");
  }

  // the sweeps below are quadratic/cubic in the lattice; cap the slice
  std::vector<const Subgroup*> slice;
  for (const Subgroup& u : mids) {
    slice.push_back(&u);
    if (slice.size() >= 12) break;
  }

  // capacity monotone in the upper field, on nested triples
  for (const Subgroup* lower : slice)
    for (const Subgroup* a : slice) {
      if (!lower->contains_all(*a)) continue;
      for (const Subgroup* b : slice) {
        if (!a->contains_all(*b)) continue;
        int64_t rho_small = root_capacity(g, *a, *lower).rho;
        int64_t rho_big = root_capacity(g, *b, *lower).rho;
        c.check("capacity-monotone", rho_big >= rho_small,
                "capacity decreased when the upper field grew");
      }
    }

  // compositum inequality on pairs under each lower field
  for (const Subgroup* lower : slice) {
    std::vector<const Subgroup*> subs;
    for (const Subgroup* x : slice)
      if (lower->contains_all(*x)) subs.push_back(x);
    for (size_t i = 0; i < subs.size(); ++i)
      for (size_t j = i; j < subs.size(); ++j) {
        int64_t lhs = root_capacity(g, intersect(*subs[i], *subs[j]), *lower).rho;
        int64_t rhs = root_capacity(g, *subs[i], *lower).rho +
                      root_capacity(g, *subs[j], *lower).rho -
                      root_capacity(g, join(*subs[i], *subs[j]), *lower).rho;
        c.check("capacity-compositum", lhs >= rhs, "compositum inequality failed");
      }
  }

  // hint sweep: wherever both hypotheses hold the inner field is normal
  for (const Subgroup* um : slice)
    for (const Subgroup* ul : slice) {
      if (!ul->contains_all(*um)) continue;
      HintReport hint = hint_check(g, *um, *ul);
      if (hint.hypotheses_hold)
        c.check("hint-conclusion", hint.conclusion_verified,
                "hypotheses hold but the extension is not normal");
    }
}

void determinism_checks(Checker& c, const RootPair& p) {
  ClusterReport a = cluster_report(p);
  ClusterReport b = cluster_report(p);
  c.check("determinism-cluster-report",
          cluster_report_json(a).dump() == cluster_report_json(b).dump(),
          "serialized reports differ between runs");
  auto blocks = cluster_partition(p);
  std::vector<int32_t> reps;
  for (const auto& blk : blocks) reps.push_back(blk.front());
  c.check("determinism-tower",
          tower_report_json(cluster_tower(p, reps)).dump() ==
              tower_report_json(cluster_tower(p, reps)).dump(),
          "tower reports differ between runs");
}

}  // namespace

std::vector<Assertion> verify_pair(const GroupPtr& g, const Subgroup& h, const Limits& limits) {
  (void)limits;
  Checker c;
  RootPair p = to_galois_pair(ExtensionPair(g, h));
  ClusterReport rep = cluster_report(p);
  c.eq("cluster-identity", rep.r * rep.s, static_cast<int64_t>(p.n));
  c.check("cluster-size-three-ways", rep.aut_order == rep.r, "aut order differs from r");
  c.run("group-laws", [&](Checker& cc) { closure_laws(cc, *p.group); });
  c.run("core-and-kernel", [&](Checker& cc) {
    Subgroup ker = core(p.stabilizer);
    cc.eq("core-trivial", ker.order(), int64_t{1});
    CosetTable table = coset_table(p.stabilizer);
    int64_t fixed_all = 0;
    for (const Perm& e : p.group->elements())
      if (coset_image(table, *p.group, e).is_identity()) ++fixed_all;
    cc.eq("coset-kernel-equals-core", fixed_all, ker.order());
  });
  c.run("conjugate-fixed-points", [&](Checker& cc) {
    auto base = fixed_points(p.stabilizer.elements(), p.n).size();
    int samples = 0;
    for (const Perm& e : p.group->elements()) {
      if (samples >= 8) break;
      std::vector<Perm> conj;
      for (const Perm& x : p.stabilizer.elements()) conj.push_back(conjugate(e, x));
      cc.check("conjugate-fixed-points", fixed_points(conj, p.n).size() == base,
               "conjugate stabilizer fixes a different number of points");
      ++samples;
    }
  });
  c.run("relabel-invariance", [&](Checker& cc) { relabel_invariance(cc, p, rep); });
  c.run("towers", [&](Checker& cc) { tower_checks(cc, p, rep); });
  c.run("chains", [&](Checker& cc) { chain_checks(cc, p, rep); });
  c.run("link-profile", [&](Checker& cc) { link_checks(cc, p); });
  c.run("capacity-and-divisibility",
        [&](Checker& cc) { capacity_and_divisibility_checks(cc, p, rep); });
  c.run("determinism", [&](Checker& cc) { determinism_checks(cc, p); });
  return c.items;
}

bool all_pass(const std::vector<Assertion>& as) {
  for (const auto& a : as)
    if (!a.pass) return false;
  return true;
}

namespace {

using FixtureFn = std::function<void(Checker&, const Limits&)>;

struct FixtureDef {
  Fixture meta;
  FixtureFn expectations;
};

void expect_invariants(Checker& c, const RootPair& p, int64_t n, int64_t r, int64_t s) {
  ClusterReport rep = cluster_report(p);
  c.eq("n", rep.n, n);
  c.eq("r", rep.r, r);
  c.eq("s", rep.s, s);
}

void expect_chain_shapes(Checker& c, const RootPair& p, size_t down_size,
                         const std::vector<int64_t>& down_steps, size_t up_size,
                         const std::vector<int64_t>& up_steps, int64_t t) {
  ExtensionPair e(p.group, p.stabilizer);
  ChainReport down = descending_chain(e);
  c.eq("descending-chain-size", down.chain.size(), down_size);
  c.check("descending-steps", down.step_indices == down_steps,
          "steps " + seq_str(down.step_indices) + " want " + seq_str(down_steps));
  ChainReport up = ascending_chain(e);
  c.eq("ascending-chain-size", up.chain.size(), up_size);
  c.check("ascending-steps", up.step_indices == up_steps,
          "steps " + seq_str(up.step_indices) + " want " + seq_str(up_steps));
  c.eq("t", up.t, t);
}

const std::vector<FixtureDef>& fixture_defs() {
  static const std::vector<FixtureDef> defs = [] {
    std::vector<FixtureDef> v;
    auto add = [&](std::string name, std::string expr, std::string note, FixtureFn fn) {
      v.push_back({{std::move(name), std::move(expr), std::move(note)}, std::move(fn)});
    };

    auto npk = [](int n, int k, int64_t r, int64_t s) {
      return [=](Checker& c, const Limits& lim) {
        RootPair p = tuple_action(n, k, lim);
        expect_invariants(c, p, r * s, r, s);
        ChainReport up = ascending_chain(ExtensionPair(p.group, p.stabilizer));
        c.eq("ascending-singleton", up.chain.size(), size_t{1});
        c.eq("t", up.t, int64_t{1});
      };
    };
    add("nPk-4-1", "tuples:4:1", "natural degree-4 action: r=1, s=4, ascending chain collapses",
        [npk](Checker& c, const Limits& lim) {
          npk(4, 1, 1, 4)(c, lim);
          RootPair p = tuple_action(4, 1, lim);
          std::vector<int32_t> reps{0, 1, 2, 3};
          TowerReport t = cluster_tower(p, reps);
          c.check("tower-degrees", t.degree_sequence == std::vector<int64_t>{4, 12, 24},
                  "got " + seq_str(t.degree_sequence));
          c.eq("tower-length", t.length, 4);
        });
    add("nPk-4-2", "tuples:4:2", "ordered pairs from 4 points: r=2, s=6", npk(4, 2, 2, 6));
    add("nPk-5-2", "tuples:5:2", "ordered pairs from 5 points: r=2, s=10", npk(5, 2, 2, 10));
    add("nPk-5-3", "tuples:5:3", "ordered triples from 5 points: r=6, s=10", npk(5, 3, 6, 10));

    auto linked_wreath = [](int r, int s) {
      return [=](Checker& c, const Limits& lim) {
        RootPair p = wreathlike(r, s, lim);
        expect_invariants(c, p, static_cast<int64_t>(r) * s, r, s);
        Subgroup ngh = normalizer(p.stabilizer);
        Subgroup hg = normal_closure(p.stabilizer);
        c.check("normalizer-equals-closure", ngh.elements() == hg.elements(),
                "N_G(H) and H^G differ");
        int64_t want = 1;
        for (int i = 0; i < s; ++i) want *= r;
        c.eq("base-factor-order", ngh.order(), want);
        LinkProfile lp = link_profile(p);
        c.check("linked-chains", lp.n_eq_f && lp.r_t_eq_n && lp.t_eq_s, "link profile mismatch");
      };
    };
    add("perlis-wreath-2-3", "wreathlike:2:3", "six points in three packets: N = F of order 8",
        linked_wreath(2, 3));
    add("perlis-wreath-3-2", "wreathlike:3:2", "six points in two packets: N = F of order 9",
        linked_wreath(3, 2));

    add("tower-metacyclic-9", "metacyclic:9", "ordering-dependent tower degrees (9,54) vs (9,18,54)",
        [](Checker& c, const Limits& lim) {
          RootPair p = metacyclic(9, lim);
          expect_invariants(c, p, 9, 1, 9);
          TowerReport t1 = cluster_tower(p, std::vector<int32_t>{0, 1, 2, 3, 4, 5, 6, 7, 8});
          c.check("short-tower-degrees", t1.degree_sequence == std::vector<int64_t>{9, 54},
                  "got " + seq_str(t1.degree_sequence));
          c.eq("short-tower-length", t1.length, 3);
          TowerReport t2 = cluster_tower(p, std::vector<int32_t>{0, 3, 1, 2, 4, 5, 6, 7, 8});
          c.check("long-tower-degrees", t2.degree_sequence == std::vector<int64_t>{9, 18, 54},
                  "got " + seq_str(t2.degree_sequence));
          c.eq("long-tower-length", t2.length, 4);
        });
    add("tower-metacyclic-8", "metacyclic:8", "ordering-dependent tower degrees (8,32) vs (8,16,32)",
        [](Checker& c, const Limits& lim) {
          RootPair p = metacyclic(8, lim);
          expect_invariants(c, p, 8, 2, 4);
          TowerReport t1 = cluster_tower(p, std::vector<int32_t>{0, 1, 2, 3});
          c.check("short-tower-degrees", t1.degree_sequence == std::vector<int64_t>{8, 32},
                  "got " + seq_str(t1.degree_sequence));
          c.eq("short-tower-length", t1.length, 3);
          TowerReport t2 = cluster_tower(p, std::vector<int32_t>{0, 2, 1, 3});
          c.check("long-tower-degrees", t2.degree_sequence == std::vector<int64_t>{8, 16, 32},
                  "got " + seq_str(t2.degree_sequence));
          c.eq("long-tower-length", t2.length, 4);
        });

    auto even_chain = [](int n) {
      return [=](Checker& c, const Limits& lim) {
        RootPair p = metacyclic(n, lim);
        int v2 = arith(n).v2;
        std::vector<int64_t> twos(static_cast<size_t>(v2), 2);
        expect_chain_shapes(c, p, static_cast<size_t>(v2) + 1, twos, static_cast<size_t>(v2) + 1,
                            twos, 2);
      };
    };
    auto odd_chain = [](int n) {
      return [=](Checker& c, const Limits& lim) {
        RootPair p = metacyclic(n, lim);
        expect_invariants(c, p, n, 1, n);
        expect_chain_shapes(c, p, 1, {}, 1, {}, 1);
      };
    };
    add("chain-metacyclic-12", "metacyclic:12", "radical degree 12: both chains have two steps of index 2",
        [even_chain](Checker& c, const Limits& lim) {
          RootPair p = metacyclic(12, lim);
          expect_invariants(c, p, 12, 2, 6);
          even_chain(12)(c, lim);
        });
    add("chain-metacyclic-16", "metacyclic:16", "radical degree 16: chains of length 5", even_chain(16));
    add("chain-metacyclic-20", "metacyclic:20", "radical degree 20: chains of length 3", even_chain(20));
    add("chain-metacyclic-9", "metacyclic:9", "odd radical degree: singleton chains", odd_chain(9));
    add("chain-metacyclic-15", "metacyclic:15", "odd radical degree: singleton chains", odd_chain(15));
    add("chain-metacyclic-21", "metacyclic:21", "odd radical degree: singleton chains", odd_chain(21));
    add("metacyclic-4", "metacyclic:4", "quartic radical: N = F halfway",
        [](Checker& c, const Limits& lim) {
          RootPair p = metacyclic(4, lim);
          expect_invariants(c, p, 4, 2, 2);
          LinkProfile lp = link_profile(p);
          c.check("N-eq-F", lp.n_eq_f, "expected the two halfway fields to agree");
          expect_chain_shapes(c, p, 3, {2, 2}, 3, {2, 2}, 2);
        });

    add("capacity-metacyclic-12", "metacyclic:12", "capacities 6, 4 and 12 with a strict compositum gap",
        [](Checker& c, const Limits& lim) {
          RootPair p = metacyclic(12, lim);
          const GroupPtr& g = p.group;
          std::vector<int32_t> pts1{0, 2}, pts2{0, 3}, pt0{0};
          Subgroup ul = stabilizer(g, pt0);
          Subgroup m1 = stabilizer(g, pts1);
          Subgroup m2 = stabilizer(g, pts2);
          CapacityReport c1 = root_capacity(g, m1, ul);
          CapacityReport c2 = root_capacity(g, m2, ul);
          CapacityReport cc = root_capacity(g, intersect(m1, m2), ul);
          c.eq("rho-even-powers", c1.rho, int64_t{6});
          c.eq("rho-cube-powers", c2.rho, int64_t{4});
          c.eq("rho-compositum", cc.rho, int64_t{12});
          int64_t meet = root_capacity(g, join(m1, m2), ul).rho;
          c.check("compositum-strict", cc.rho > c1.rho + c2.rho - meet,
                  "expected a strict compositum inequality");
          c.eq("self-capacity", root_capacity(g, ul, ul).rho, int64_t{2});
          c.eq("closure-capacity", root_capacity(g, core(ul), ul).rho, int64_t{12});
        });

    add("magnify-wreath-3-2-c2", "wreathlike:3:2+cyclic:2", "product magnification doubles r and t",
        [](Checker& c, const Limits& lim) {
          RootPair p = wreathlike(3, 2, lim);
          GroupPtr by = cyclic_group(2, lim);
          RootPair m = magnify(p, by);
          expect_invariants(c, m, 12, 6, 2);
          c.eq("t-doubles", ascending_index_of(ExtensionPair(m.group, m.stabilizer)), int64_t{4});
          auto found = detect_strong_magnification(m);
          bool hit = false;
          for (const auto& d : found) {
            if (d.factor != 2) continue;
            RootPair l = to_galois_pair(ExtensionPair(m.group, d.l_subgroup));
            ClusterReport lr = cluster_report(l);
            if (lr.n == 6 && lr.r == 3 && lr.s == 2) hit = true;
          }
          c.check("roundtrip-decomposition", hit,
                  "no decomposition with factor 2 recovering the base pair");
        });
    add("primitive-metacyclic-4", "metacyclic:4", "degree-4 pairs admit no strong magnification",
        [](Checker& c, const Limits& lim) {
          RootPair p = metacyclic(4, lim);
          c.eq("no-decomposition", detect_strong_magnification(p).size(), size_t{0});
        });
    add("primitive-alt-5", "alt:5", "simple closure group: no strong magnification",
        [](Checker& c, const Limits& lim) {
          RootPair p = alternating_pair(5, lim);
          expect_invariants(c, p, 5, 1, 5);
          c.eq("no-decomposition", detect_strong_magnification(p).size(), size_t{0});
        });

    auto basechange = [](const char* pair_expr, const char* group_expr) {
      return [pair_expr = std::string(pair_expr), group_expr = std::string(group_expr)](
                 Checker& c, const Limits& lim) {
        RootPair p = build_pair_expr(pair_expr, lim);
        GroupPtr by = build_group_expr(group_expr, lim);
        BaseChangeFlags f = base_change_verify(p, by);
        c.check("cluster-size-preserved", f.cluster_size, "");
        c.check("capacity-preserved", f.capacity, "");
        c.check("descending-chain-preserved", f.descending_chain, "");
        c.check("ascending-chain-preserved", f.ascending_chain, "");
        c.check("ascending-index-preserved", f.ascending_index, "");
      };
    };
    add("basechange-wreath-2-3-c5", "wreathlike:2:3", "base change by a disjoint quintic extension",
        basechange("wreathlike:2:3", "cyclic:5"));
    add("basechange-metacyclic-12-c3", "metacyclic:12", "base change by a disjoint cubic extension",
        basechange("metacyclic:12", "cyclic:3"));

    add("hint-magnified-9-c2", "metacyclic:9+cyclic:2", "magnified pair satisfies both hypotheses",
        [](Checker& c, const Limits& lim) {
          RootPair p = metacyclic(9, lim);
          GroupPtr by = cyclic_group(2, lim);
          GroupPtr product = direct_product(p.group, by);
          Perm id_r = Perm::identity(by->degree());
          Subgroup um = product_subgroup(product, p.stabilizer.elements(), p.group->degree(),
                                         std::span<const Perm>(&id_r, 1), by->degree());
          Subgroup ul = product_subgroup(product, p.stabilizer.elements(), p.group->degree(),
                                         by->elements(), by->degree());
          HintReport hint = hint_check(product, um, ul);
          c.check("hypotheses-hold", hint.hypotheses_hold, "expected both hypotheses to hold");
          c.check("normality-confirmed", hint.conclusion_verified, "inner field not normal");
        });
    add("hint-npk-5-lk", "tuples:5:1", "adjoined-roots counterexample: capacity hypothesis fails",
        [](Checker& c, const Limits& lim) {
          RootPair p = tuple_action(5, 1, lim);
          std::vector<int32_t> three{0, 1, 2}, two{0, 1};
          Subgroup um = stabilizer(p.group, three);
          Subgroup ul = stabilizer(p.group, two);
          HintReport hint = hint_check(p.group, um, ul);
          c.check("degree-hypothesis-holds", hint.degree_hypothesis, "");
          c.check("capacity-hypothesis-fails", !hint.capacity_hypothesis,
                  "capacity hypothesis unexpectedly holds");
          c.check("no-assertion", !hint.hypotheses_hold && !hint.conclusion_verified, "");
          c.check("not-normal", !is_normal_under(um, ul),
                  "counterexample field is normal after all");
        });
    add("hint-closure-12", "metacyclic:12", "closure of a non-normal field: both hypotheses fail",
        [](Checker& c, const Limits& lim) {
          RootPair p = metacyclic(12, lim);
          std::vector<int32_t> pt0{0};
          Subgroup ul = stabilizer(p.group, pt0);
          HintReport hint = hint_check(p.group, core(ul), ul);
          c.check("hypotheses-fail", !hint.hypotheses_hold, "");
        });

    add("euler-totient-cases", "", "totient ratio and equality cases on divisor pairs",
        [](Checker& c, const Limits&) {
          EulerChecks e93 = euler_checks(9, 3);
          c.check("phi-divides", e93.divisibility, "");
          c.check("equality-case-9-3", !e93.equality_case, "phi(9) == phi(3)?");
          EulerChecks e63 = euler_checks(6, 3);
          c.check("equality-case-6-3", e63.equality_case, "phi(6) != phi(3)?");
          EulerChecks e12 = euler_checks(12, 4);
          c.check("ratio-identity", e12.ratio_identity, "");
          c.check("ratio-is-m-12-4", !e12.ratio_is_m, "");
          EulerChecks e84 = euler_checks(8, 4);
          c.check("ratio-is-m-8-4", e84.ratio_is_m, "");
        });

    return v;
  }();
  return defs;
}

}  // namespace

const std::vector<Fixture>& catalog() {
  static const std::vector<Fixture> metas = [] {
    std::vector<Fixture> out;
    for (const auto& def : fixture_defs()) out.push_back(def.meta);
    return out;
  }();
  return metas;
}

bool catalog_has(const std::string& name) {
  for (const auto& def : fixture_defs())
    if (def.meta.name == name) return true;
  return false;
}

std::vector<Assertion> catalog_run(const std::string& name, const Limits& limits) {
  for (const auto& def : fixture_defs()) {
    if (def.meta.name != name) continue;
    Checker c;
    c.run(name, [&](Checker& cc) { def.expectations(cc, limits); });
    if (!def.meta.pair_expr.empty()) {
      c.run("invariant-suite", [&](Checker& cc) {
        RootPair p = build_pair_expr(def.meta.pair_expr, limits);
        auto extra = verify_pair(p.group, p.stabilizer, limits);
        cc.items.insert(cc.items.end(), extra.begin(), extra.end());
      });
    }
    return c.items;
  }
  fail(Errc::parse_error, "unknown catalog fixture '" + name + "'");
}

}  // namespace rcl
