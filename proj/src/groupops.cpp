#include "rcl/groupops.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace rcl {

namespace {

void require_subgroup_of(const Subgroup& h, const char* who) {
  if (!h.parent()) fail(Errc::not_a_subgroup, std::string(who) + ": subgroup has no parent");
}

void require_same_parent(const Subgroup& a, const Subgroup& b, const char* who) {
  if (!a.same_parent(b)) fail(Errc::parent_mismatch, std::string(who) + ": different parent groups");
}

std::vector<Perm> sorted_conjugate(const std::vector<Perm>& elems, const Perm& g) {
  std::vector<Perm> out;
  out.reserve(elems.size());
  Perm ginv = g.inverse();
  for (const Perm& x : elems) out.push_back(compose(compose(g, x), ginv));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Subgroup normalizer(const Subgroup& h) {
  require_subgroup_of(h, "normalizer");
  const Group& g = *h.parent();
  if (h.order() == g.order()) return Subgroup::full(h.parent());
  // conjugation is an automorphism, so testing a generating set of h is
  // enough: all conjugated generators inside h forces g h g^-1 = h
  std::vector<Perm> hgens = minimal_generators(h.elements(), h.degree());
  std::vector<Perm> result;
  for (const Perm& cand : g.elements()) {
    Perm inv = cand.inverse();
    bool ok = true;
    for (const Perm& x : hgens) {
      if (!h.contains(compose(compose(cand, x), inv))) {
        ok = false;
        break;
      }
    }
    if (ok) result.push_back(cand);
  }
  return Subgroup::adopt_sorted(h.parent(), std::move(result));
}

Subgroup normal_closure_in(const Subgroup& h, const Subgroup& within) {
  require_same_parent(h, within, "normal_closure");
  if (!within.contains_all(h)) fail(Errc::not_a_subgroup, "normal_closure: h not inside the ambient subgroup");
  int degree = h.degree();
  std::vector<Perm> conj_gens = within.order() == within.parent()->order()
                                    ? within.parent()->generators()
                                    : minimal_generators(within.elements(), degree);
  std::vector<Perm> gens = minimal_generators(h.elements(), degree);
  std::vector<Perm> elems = h.elements();
  for (;;) {
    bool grew = false;
    auto member = [&](const Perm& p) { return std::binary_search(elems.begin(), elems.end(), p); };
    std::vector<Perm> fresh;
    for (const Perm& x : gens)
      for (const Perm& c : conj_gens) {
        Perm y = compose(compose(c, x), c.inverse());
        if (!member(y)) fresh.push_back(y);
      }
    if (!fresh.empty()) {
      gens.insert(gens.end(), fresh.begin(), fresh.end());
      elems = bfs_closure(degree, gens, within.order());
      grew = true;
    }
    if (!grew) break;
  }
  return Subgroup::adopt_sorted(h.parent(), std::move(elems));
}

Subgroup normal_closure(const Subgroup& h) {
  return normal_closure_in(h, Subgroup::full(h.parent()));
}

Subgroup core(const Subgroup& h) {
  require_subgroup_of(h, "core");
  std::vector<Perm> current = h.elements();
  for (const Perm& g : h.parent()->elements()) {
    if (current.size() == 1) break;
    std::vector<Perm> conj = sorted_conjugate(h.elements(), g);
    std::vector<Perm> next;
    std::set_intersection(current.begin(), current.end(), conj.begin(), conj.end(),
                          std::back_inserter(next));
    current = std::move(next);
  }
  return Subgroup::adopt_sorted(h.parent(), std::move(current));
}

bool is_normal_under(const Subgroup& h, const Subgroup& by) {
  require_same_parent(h, by, "is_normal_under");
  std::vector<Perm> hgens = minimal_generators(h.elements(), h.degree());
  std::vector<Perm> bgens = by.order() == by.parent()->order()
                                ? by.parent()->generators()
                                : minimal_generators(by.elements(), by.degree());
  for (const Perm& b : bgens) {
    Perm binv = b.inverse();
    for (const Perm& x : hgens)
      if (!h.contains(compose(compose(b, x), binv))) return false;
  }
  return true;
}

CosetTable coset_table(const Subgroup& h) {
  const Group& g = *h.parent();
  CosetTable table;
  table.coset_of.assign(static_cast<size_t>(g.order()), -1);
  for (int64_t idx = 0; idx < g.order(); ++idx) {
    if (table.coset_of[static_cast<size_t>(idx)] != -1) continue;
    const Perm& rep = g.elements()[static_cast<size_t>(idx)];
    int32_t c = static_cast<int32_t>(table.reps.size());
    table.reps.push_back(rep);
    for (const Perm& x : h.elements()) {
      int64_t j = g.index_of(compose(rep, x));
      if (j < 0) fail(Errc::not_a_subgroup, "coset_table: subgroup element outside parent");
      table.coset_of[static_cast<size_t>(j)] = c;
    }
  }
  return table;
}

std::vector<Perm> coset_reps(const Subgroup& h) { return coset_table(h).reps; }

Perm coset_image(const CosetTable& table, const Group& parent, const Perm& g) {
  std::vector<int32_t> img(table.reps.size());
  for (size_t j = 0; j < table.reps.size(); ++j) {
    int64_t idx = parent.index_of(compose(g, table.reps[j]));
    if (idx < 0) fail(Errc::not_a_subgroup, "coset_image: element outside parent");
    img[j] = table.coset_of[static_cast<size_t>(idx)];
  }
  return Perm::from_images(std::move(img));
}

GroupPtr coset_action(const Subgroup& h) {
  const GroupPtr& parent = h.parent();
  CosetTable table = coset_table(h);
  int new_degree = static_cast<int>(table.reps.size());
  if (new_degree > parent->limits().max_degree)
    fail(Errc::group_too_large, "coset action degree " + std::to_string(new_degree) +
                                    " exceeds cap " + std::to_string(parent->limits().max_degree));
  std::vector<Perm> gens;
  gens.reserve(parent->generators().size());
  for (const Perm& g : parent->generators()) gens.push_back(coset_image(table, *parent, g));
  return Group::closure(new_degree, std::move(gens), parent->limits());
}

std::vector<int32_t> fixed_points(std::span<const Perm> elems, int degree) {
  std::vector<int32_t> out;
  for (int32_t i = 0; i < degree; ++i) {
    bool fixed = true;
    for (const Perm& p : elems)
      if (p(i) != i) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<int32_t>> orbits(const Group& g) {
  int n = g.degree();
  std::vector<int32_t> root(static_cast<size_t>(n));
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int32_t x) {
    while (root[static_cast<size_t>(x)] != x) {
      root[static_cast<size_t>(x)] = root[static_cast<size_t>(root[static_cast<size_t>(x)])];
      x = root[static_cast<size_t>(x)];
    }
    return x;
  };
  for (const Perm& p : g.generators())
    for (int32_t i = 0; i < n; ++i) {
      int32_t a = find(i), b = find(p(i));
      if (a != b) root[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
  std::map<int32_t, std::vector<int32_t>> buckets;
  for (int32_t i = 0; i < n; ++i) buckets[find(i)].push_back(i);
  std::vector<std::vector<int32_t>> out;
  for (auto& [_, v] : buckets) out.push_back(std::move(v));
  return out;
}

bool is_transitive(const Group& g) { return orbits(g).size() == 1; }

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b, "intersect");
  std::vector<Perm> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(out));
  return Subgroup::adopt_sorted(a.parent(), std::move(out));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b, "join");
  std::vector<Perm> gens = minimal_generators(a.elements(), a.degree());
  std::vector<Perm> bgens = minimal_generators(b.elements(), b.degree());
  gens.insert(gens.end(), bgens.begin(), bgens.end());
  std::vector<Perm> elems = bfs_closure(a.degree(), gens, a.parent()->order());
  return Subgroup::adopt_sorted(a.parent(), std::move(elems));
}

Subgroup stabilizer(const GroupPtr& g, std::span<const int32_t> points) {
  for (int32_t p : points)
    if (p < 0 || p >= g->degree()) fail(Errc::bad_parameter, "stabilizer: point out of range");
  std::vector<Perm> out;
  for (const Perm& e : g->elements()) {
    bool fixes = true;
    for (int32_t p : points)
      if (e(p) != p) {
        fixes = false;
        break;
      }
    if (fixes) out.push_back(e);
  }
  return Subgroup::adopt_sorted(g, std::move(out));
}

Perm embed_left(const Perm& p, int right_degree) {
  std::vector<int32_t> img = p.images();
  img.reserve(img.size() + static_cast<size_t>(right_degree));
  for (int32_t i = 0; i < right_degree; ++i) img.push_back(p.degree() + i);
  return Perm::from_images(std::move(img));
}

Perm embed_right(const Perm& p, int left_degree) {
  std::vector<int32_t> img(static_cast<size_t>(left_degree));
  std::iota(img.begin(), img.end(), 0);
  for (int32_t v : p.images()) img.push_back(left_degree + v);
  return Perm::from_images(std::move(img));
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& r) {
  const Limits& limits = g->limits();
  int degree = g->degree() + r->degree();
  if (degree > limits.max_degree)
    fail(Errc::group_too_large, "product degree exceeds cap");
  if (g->order() > limits.max_order / r->order())
    fail(Errc::group_too_large, "product order exceeds cap");
  std::vector<Perm> elems;
  elems.reserve(static_cast<size_t>(g->order() * r->order()));
  // iterating left-major keeps the concatenated image sequences sorted
  for (const Perm& a : g->elements())
    for (const Perm& b : r->elements())
      elems.push_back(compose(embed_left(a, r->degree()), embed_right(b, g->degree())));
  std::vector<Perm> gens;
  for (const Perm& a : g->generators()) gens.push_back(embed_left(a, r->degree()));
  for (const Perm& b : r->generators()) gens.push_back(embed_right(b, g->degree()));
  return GroupBuilder::adopt_sorted(degree, std::move(gens), std::move(elems), limits);
}

Subgroup product_subgroup(const GroupPtr& product, std::span<const Perm> left_elems,
                          int left_degree, std::span<const Perm> right_elems, int right_degree) {
  std::vector<Perm> elems;
  elems.reserve(left_elems.size() * right_elems.size());
  for (const Perm& a : left_elems)
    for (const Perm& b : right_elems)
      elems.push_back(compose(embed_left(a, right_degree), embed_right(b, left_degree)));
  std::sort(elems.begin(), elems.end());
  for (const Perm& e : elems)
    if (!product->contains(e)) fail(Errc::not_a_subgroup, "product_subgroup: element outside product");
  return Subgroup::adopt_sorted(product, std::move(elems));
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
  std::set<std::vector<Perm>> seen;
  std::vector<std::vector<Perm>> pool;
  auto add = [&](std::vector<Perm> elems) {
    if (seen.insert(elems).second) pool.push_back(std::move(elems));
  };
  add({Perm::identity(g->degree())});
  add(g->elements());

  // atoms: normal closures of cyclic subgroups
  std::set<std::vector<Perm>> cyclic_seen;
  for (const Perm& e : g->elements()) {
    if (e.is_identity()) continue;
    std::vector<Perm> cyc = bfs_closure(g->degree(), std::span<const Perm>(&e, 1), g->order());
    if (!cyclic_seen.insert(cyc).second) continue;
    Subgroup c = Subgroup::adopt_sorted(g, std::move(cyc));
    add(normal_closure(c).elements());
  }

  // close under pairwise join
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = i + 1; j < pool.size(); ++j) {
      Subgroup a = Subgroup::adopt_sorted(g, pool[i]);
      Subgroup b = Subgroup::adopt_sorted(g, pool[j]);
      add(join(a, b).elements());
    }

  std::vector<Subgroup> out;
  out.reserve(pool.size());
  for (auto& elems : pool) out.push_back(Subgroup::adopt_sorted(g, std::move(elems)));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

std::vector<Subgroup> intermediate_subgroups(const Subgroup& h) {
  const GroupPtr& g = h.parent();
  std::set<std::vector<Perm>> seen;
  std::vector<std::vector<Perm>> pool;
  seen.insert(h.elements());
  pool.push_back(h.elements());
  for (size_t i = 0; i < pool.size(); ++i) {
    Subgroup u = Subgroup::adopt_sorted(g, pool[i]);
    if (u.order() == g->order()) continue;
    std::vector<Perm> gens = minimal_generators(u.elements(), u.degree());
    gens.push_back(Perm::identity(g->degree()));  // placeholder slot for the extension element
    CosetTable cosets = coset_table(u);
    for (size_t c = 1; c < cosets.reps.size(); ++c) {
      gens.back() = cosets.reps[c];
      std::vector<Perm> bigger = bfs_closure(g->degree(), gens, g->order());
      if (seen.insert(bigger).second) pool.push_back(std::move(bigger));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(pool.size());
  for (auto& elems : pool) out.push_back(Subgroup::adopt_sorted(g, std::move(elems)));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

}  // namespace rcl
