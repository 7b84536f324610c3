#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "rcl/cluster.hpp"
#include "rcl/groupops.hpp"

namespace testutil {

using namespace rcl;

inline Perm perm1(std::vector<int64_t> one_based) { return Perm::from_one_based(one_based); }

// Every element of the symmetric group on `degree` points, via exhaustive
// enumeration. Independent of the closure machinery under test.
inline std::vector<Perm> symmetric_elements(int degree) {
  std::vector<int32_t> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

inline int parity(const Perm& p) {
  int n = p.degree();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  int sign = 1;
  for (int32_t i = 0; i < n; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0;
    int32_t j = i;
    do {
      seen[static_cast<size_t>(j)] = true;
      j = p(j);
      ++len;
    } while (j != i);
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

// Brute-force enumeration of the entire subgroup lattice: grow every known
// subgroup by every element and close. Only usable for small orders, which
// is the point: it is a slow independent oracle.
inline std::vector<std::vector<Perm>> all_subgroups_oracle(const Group& g) {
  std::set<std::vector<Perm>> seen;
  std::vector<std::vector<Perm>> pool;
  std::vector<Perm> triv{Perm::identity(g.degree())};
  seen.insert(triv);
  pool.push_back(triv);
  for (size_t i = 0; i < pool.size(); ++i) {
    for (const Perm& e : g.elements()) {
      std::vector<Perm> gens = pool[i];
      gens.push_back(e);
      std::vector<Perm> bigger = bfs_closure(g.degree(), gens, g.order());
      if (seen.insert(bigger).second) pool.push_back(std::move(bigger));
    }
  }
  return pool;
}

inline bool oracle_is_normal(const Group& g, const std::vector<Perm>& elems) {
  std::set<Perm> in(elems.begin(), elems.end());
  for (const Perm& x : g.elements())
    for (const Perm& h : elems)
      if (!in.count(conjugate(x, h))) return false;
  return true;
}

// Deterministic pseudo-random faithful transitive pairs.
struct RandomPairs {
  std::mt19937 rng;
  explicit RandomPairs(uint32_t seed) : rng(seed) {}

  Perm random_perm(int degree) {
    std::vector<int32_t> img(static_cast<size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    for (int i = degree - 1; i > 0; --i) {
      int j = static_cast<int>(rng() % static_cast<uint32_t>(i + 1));
      std::swap(img[static_cast<size_t>(i)], img[static_cast<size_t>(j)]);
    }
    return Perm::from_images(std::move(img));
  }

  RootPair next(int64_t max_order) {
    for (;;) {
      int degree = 3 + static_cast<int>(rng() % 6);
      std::vector<Perm> gens{random_perm(degree), random_perm(degree)};
      Limits lim;
      lim.max_order = max_order;
      try {
        GroupPtr g = Group::closure(degree, gens, lim);
        if (!is_transitive(*g)) continue;
        return RootPair::from_group(g);
      } catch (const Error& e) {
        if (e.code() == Errc::group_too_large) continue;
        throw;
      }
    }
  }
};

}  // namespace testutil
