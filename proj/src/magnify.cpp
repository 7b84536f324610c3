#include "rcl/magnify.hpp"

#include <algorithm>
#include <numeric>

namespace rcl {

namespace {

struct Fnv {
  uint64_t h = 1469598103934665603ull;
  void i64(int64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= static_cast<uint8_t>((static_cast<uint64_t>(v) >> (8 * i)) & 0xff);
      h *= 1099511628211ull;
    }
  }
};

// The left factor of a product, as a group in its own right. Embedding keeps
// the lexicographic element order, so the element list stays sorted.
GroupPtr left_factor_group(const GroupPtr& g, int right_degree) {
  std::vector<Perm> gens;
  for (const Perm& x : g->generators()) gens.push_back(embed_left(x, right_degree));
  std::vector<Perm> elems;
  elems.reserve(g->elements().size());
  for (const Perm& x : g->elements()) elems.push_back(embed_left(x, right_degree));
  return GroupBuilder::adopt_sorted(g->degree() + right_degree, std::move(gens), std::move(elems),
                                    g->limits());
}

Subgroup embed_left_subgroup(const GroupPtr& target, const Subgroup& h, int right_degree) {
  std::vector<Perm> elems;
  elems.reserve(h.elements().size());
  for (const Perm& x : h.elements()) elems.push_back(embed_left(x, right_degree));
  return Subgroup::adopt_sorted(target, std::move(elems));
}

bool same_chain(const ChainReport& a, const ChainReport& b) {
  if (a.chain.size() != b.chain.size()) return false;
  if (a.step_indices != b.step_indices) return false;
  if (a.field_degrees != b.field_degrees) return false;
  for (size_t i = 0; i < a.chain.size(); ++i)
    if (a.chain[i].elements() != b.chain[i].elements()) return false;
  return true;
}

}  // namespace

RootPair to_galois_pair(const ExtensionPair& e) {
  Subgroup sub = e.sub;
  return RootPair::from_group(coset_action(sub));
}

RootPair magnify(const RootPair& p, const GroupPtr& by) {
  if (p.n <= 2) fail(Errc::degree_too_small, "magnification requires degree > 2");
  GroupPtr product = direct_product(p.group, by);
  Perm id_r = Perm::identity(by->degree());
  Subgroup u = product_subgroup(product, p.stabilizer.elements(), p.group->degree(),
                                std::span<const Perm>(&id_r, 1), by->degree());
  return to_galois_pair(ExtensionPair(product, u));
}

std::vector<Decomposition> detect_strong_magnification(const RootPair& p) {
  const Subgroup& h = p.stabilizer;
  std::vector<Subgroup> normals = normal_subgroups(p.group);
  std::vector<Decomposition> out;
  for (const Subgroup& a : normals) {
    if (a.order() <= 1 || a.order() == p.group->order()) continue;
    if (!a.contains_all(h)) continue;
    if (a.order() / h.order() <= 2) continue;  // [A : H'] > 2
    std::vector<Perm> a_gens = minimal_generators(a.elements(), a.degree());
    for (const Subgroup& b : normals) {
      if (b.order() <= 1) continue;
      if (a.order() * b.order() != p.group->order()) continue;
      if (intersect(a, b).order() != 1) continue;
      bool commute = true;
      std::vector<Perm> b_gens = minimal_generators(b.elements(), b.degree());
      for (const Perm& x : a_gens) {
        for (const Perm& y : b_gens)
          if (!(compose(x, y) == compose(y, x))) {
            commute = false;
            break;
          }
        if (!commute) break;
      }
      if (!commute) continue;
      Decomposition d;
      d.a = a;
      d.b = b;
      d.a_prime = h;
      d.l_subgroup = join(h, b);
      d.f_subgroup = a;
      d.factor = b.order();
      Fnv f;
      f.i64(static_cast<int64_t>(fingerprint_pair(*p.group, h)));
      f.i64(a.order());
      f.i64(b.order());
      d.fingerprint = f.h;
      out.push_back(std::move(d));
    }
  }
  return out;  // normals are canonically sorted, so the scan order is canonical
}

WeakMagnification weak_magnification(const GroupPtr& ambient, const Subgroup& sub_m,
                                     const Subgroup& sub_l) {
  ExtensionPair em(ambient, sub_m);
  ExtensionPair el(ambient, sub_l);
  if (!sub_l.contains_all(sub_m)) fail(Errc::not_an_extension, "sub_m must be contained in sub_l");
  WeakMagnification w;
  w.r_m = cluster_size_of(em);
  w.r_l = cluster_size_of(el);
  w.holds = w.r_m % w.r_l == 0;
  int64_t g = std::gcd(w.r_m, w.r_l);
  w.factor_num = w.r_m / g;
  w.factor_den = w.r_l / g;
  Fnv f;
  f.i64(static_cast<int64_t>(fingerprint_pair(*ambient, sub_l)));
  f.i64(static_cast<int64_t>(fingerprint_pair(*ambient, sub_m)));
  w.fingerprint = f.h;
  return w;
}

BaseChangeFlags base_change_verify(const RootPair& p, const GroupPtr& by) {
  // the new base corresponds to the left factor of G x R; every relative
  // quantity lives inside that factor, embedded in the product's point set
  GroupPtr over_base = left_factor_group(p.group, by->degree());
  Subgroup h_prime = embed_left_subgroup(over_base, p.stabilizer, by->degree());

  ExtensionPair over_k(p.group, p.stabilizer);
  ExtensionPair over_kprime(over_base, h_prime);

  BaseChangeFlags flags;
  flags.cluster_size = cluster_size_of(over_k) == cluster_size_of(over_kprime);

  ChainReport down_k = descending_chain(over_k);
  ChainReport down_kp = descending_chain(over_kprime);
  flags.descending_chain = same_chain(down_k, down_kp);

  ChainReport up_k = ascending_chain(over_k);
  ChainReport up_kp = ascending_chain(over_kprime);
  flags.ascending_chain = same_chain(up_k, up_kp);
  flags.ascending_index = up_k.t == up_kp.t;

  // capacity is compared for every intermediate field when the sweep is
  // small enough, otherwise for the canonical landmarks
  std::vector<Subgroup> mids;
  if (p.n <= 24) {
    mids = intermediate_subgroups(p.stabilizer);
  } else {
    mids = {p.stabilizer, normalizer(p.stabilizer), normal_closure(p.stabilizer),
            Subgroup::full(p.group)};
  }
  flags.capacity = true;
  for (const Subgroup& u : mids) {
    int64_t rho_k = root_capacity(p.group, p.stabilizer, u).rho;
    Subgroup u_prime = embed_left_subgroup(over_base, u, by->degree());
    int64_t rho_kp = root_capacity(over_base, h_prime, u_prime).rho;
    if (rho_k != rho_kp) {
      flags.capacity = false;
      break;
    }
  }
  Fnv f;
  f.i64(static_cast<int64_t>(fingerprint_pair(*p.group, p.stabilizer)));
  f.i64(by->order());
  flags.fingerprint = f.h;
  return flags;
}

StrongChainFlags strong_magnification_chains(const RootPair& p, const GroupPtr& by) {
  int64_t d = by->order();
  RootPair m = magnify(p, by);
  ExtensionPair el(p.group, p.stabilizer);
  ExtensionPair em(m.group, m.stabilizer);

  ChainReport down_l = descending_chain(el);
  ChainReport down_m = descending_chain(em);
  StrongChainFlags flags;
  if (down_l.chain.size() == 1) {
    // r(L) = 1: the magnified chain drops straight to the demagnified field
    if (d == 1) {
      flags.descending = down_m.chain.size() == 1;
    } else {
      flags.descending = down_m.chain.size() == 2 && down_m.step_indices == std::vector<int64_t>{d} &&
                         down_m.field_degrees ==
                             std::vector<int64_t>{static_cast<int64_t>(p.n) * d, p.n};
    }
  } else {
    bool ok = down_m.chain.size() == down_l.chain.size() &&
              down_m.step_indices.size() == down_l.step_indices.size();
    if (ok) {
      ok = down_m.step_indices[0] == d * down_l.step_indices[0];
      for (size_t i = 1; ok && i < down_l.step_indices.size(); ++i)
        ok = down_m.step_indices[i] == down_l.step_indices[i];
      ok = ok && down_m.field_degrees[0] == d * down_l.field_degrees[0];
      for (size_t i = 1; ok && i < down_l.field_degrees.size(); ++i)
        ok = down_m.field_degrees[i] == down_l.field_degrees[i];
    }
    flags.descending = ok;
  }

  ChainReport up_l = ascending_chain(el);
  ChainReport up_m = ascending_chain(em);
  if (up_l.chain.size() == 1) {
    if (d == 1) {
      flags.ascending = up_m.chain.size() == 1;
    } else {
      flags.ascending = up_m.chain.size() == 2 && up_m.step_indices == std::vector<int64_t>{d} &&
                        up_m.field_degrees == std::vector<int64_t>{1, d};
    }
  } else {
    bool ok = up_m.chain.size() == up_l.chain.size();
    if (ok) {
      ok = up_m.step_indices[0] == d * up_l.step_indices[0];
      for (size_t i = 1; ok && i < up_l.step_indices.size(); ++i)
        ok = up_m.step_indices[i] == up_l.step_indices[i];
      // stages past the top sit under the demagnified closure: degrees scale by d
      ok = ok && up_m.field_degrees[0] == up_l.field_degrees[0];
      for (size_t i = 1; ok && i < up_l.field_degrees.size(); ++i)
        ok = up_m.field_degrees[i] == d * up_l.field_degrees[i];
    }
    flags.ascending = ok;
  }
  Fnv f;
  f.i64(static_cast<int64_t>(fingerprint_pair(*p.group, p.stabilizer)));
  f.i64(d);
  flags.fingerprint = f.h;
  return flags;
}

}  // namespace rcl
