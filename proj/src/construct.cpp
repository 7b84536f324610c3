#include "rcl/construct.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rcl {

namespace {

// Minimal generating set of (Z/n)^* found by ascending search. No primitive
// root is assumed; the unit group need not be cyclic.
std::vector<int64_t> unit_group_generators(int64_t n) {
  std::vector<int64_t> units;
  for (int64_t u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1) units.push_back(u);
  std::set<int64_t> generated{1 % n};
  std::vector<int64_t> gens;
  for (int64_t u : units) {
    if (generated.count(u)) continue;
    gens.push_back(u);
    // close under multiplication mod n
    std::vector<int64_t> work(generated.begin(), generated.end());
    while (!work.empty()) {
      int64_t x = work.back();
      work.pop_back();
      for (int64_t g : gens) {
        int64_t y = (x * g) % n;
        if (generated.insert(y).second) work.push_back(y);
      }
    }
    if (static_cast<int64_t>(generated.size()) == static_cast<int64_t>(units.size())) break;
  }
  return gens;
}

}  // namespace

RootPair metacyclic(int n, const Limits& limits) {
  if (n < 3) fail(Errc::bad_parameter, "metacyclic: n must be at least 3");
  std::vector<Perm> gens;
  {
    std::vector<int32_t> img(static_cast<size_t>(n));
    for (int32_t j = 0; j < n; ++j) img[static_cast<size_t>(j)] = (j + 1) % n;
    gens.push_back(Perm::from_images(std::move(img)));
  }
  for (int64_t u : unit_group_generators(n)) {
    std::vector<int32_t> img(static_cast<size_t>(n));
    for (int32_t j = 0; j < n; ++j)
      img[static_cast<size_t>(j)] = static_cast<int32_t>((u * j) % n);
    gens.push_back(Perm::from_images(std::move(img)));
  }
  return RootPair::from_group(Group::closure(n, std::move(gens), limits));
}

RootPair wreathlike(int r, int s, const Limits& limits) {
  if (r < 1 || s < 1 || r * s < 3) fail(Errc::bad_parameter, "wreathlike: need r,s >= 1 and rs >= 3");
  int n = r * s;
  std::vector<Perm> gens;
  for (int p = 0; p < s; ++p) {
    if (r == 1) break;  // packet cycles are trivial
    std::vector<int32_t> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < r; ++i) img[static_cast<size_t>(p * r + i)] = p * r + (i + 1) % r;
    gens.push_back(Perm::from_images(std::move(img)));
  }
  if (s > 1) {
    std::vector<int32_t> img(static_cast<size_t>(n));
    for (int p = 0; p < s; ++p)
      for (int i = 0; i < r; ++i) img[static_cast<size_t>(p * r + i)] = ((p + 1) % s) * r + i;
    gens.push_back(Perm::from_images(std::move(img)));
  }
  return RootPair::from_group(Group::closure(n, std::move(gens), limits));
}

RootPair tuple_action(int n, int k, const Limits& limits) {
  if (n < 3 || k < 1 || k > n - 2) fail(Errc::bad_parameter, "tuple_action: need n >= 3 and 1 <= k <= n-2");
  int64_t degree = 1;
  for (int i = 0; i < k; ++i) {
    degree *= n - i;
    if (degree > limits.max_degree)
      fail(Errc::group_too_large, "tuple space larger than the degree cap");
  }

  // lexicographic enumeration of k-tuples with distinct entries
  std::vector<std::vector<int32_t>> tuples;
  std::vector<int32_t> cur;
  std::vector<bool> used(static_cast<size_t>(n), false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == k) {
      tuples.push_back(cur);
      return;
    }
    for (int32_t v = 0; v < n; ++v) {
      if (used[static_cast<size_t>(v)]) continue;
      used[static_cast<size_t>(v)] = true;
      cur.push_back(v);
      self(self);
      cur.pop_back();
      used[static_cast<size_t>(v)] = false;
    }
  };
  rec(rec);

  std::map<std::vector<int32_t>, int32_t> index_of;
  for (size_t i = 0; i < tuples.size(); ++i) index_of[tuples[i]] = static_cast<int32_t>(i);

  auto induced = [&](const Perm& g) {
    std::vector<int32_t> img(tuples.size());
    for (size_t i = 0; i < tuples.size(); ++i) {
      std::vector<int32_t> moved;
      moved.reserve(static_cast<size_t>(k));
      for (int32_t v : tuples[i]) moved.push_back(g(v));
      img[i] = index_of.at(moved);
    }
    return Perm::from_images(std::move(img));
  };

  std::vector<int32_t> swap01(static_cast<size_t>(n));
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  std::vector<int32_t> cycle(static_cast<size_t>(n));
  for (int32_t j = 0; j < n; ++j) cycle[static_cast<size_t>(j)] = (j + 1) % n;

  std::vector<Perm> gens{induced(Perm::from_images(std::move(swap01))),
                         induced(Perm::from_images(std::move(cycle)))};
  return RootPair::from_group(Group::closure(static_cast<int>(degree), std::move(gens), limits));
}

GroupPtr cyclic_group(int k, const Limits& limits) {
  if (k < 1) fail(Errc::bad_parameter, "cyclic_group: k must be positive");
  std::vector<Perm> gens;
  if (k > 1) {
    std::vector<int32_t> img(static_cast<size_t>(k));
    for (int32_t j = 0; j < k; ++j) img[static_cast<size_t>(j)] = (j + 1) % k;
    gens.push_back(Perm::from_images(std::move(img)));
  }
  return Group::closure(k, std::move(gens), limits);
}

GroupPtr klein_four(const Limits& limits) {
  std::vector<Perm> gens{Perm::from_images({1, 0, 3, 2}), Perm::from_images({2, 3, 0, 1})};
  return Group::closure(4, std::move(gens), limits);
}

RootPair alternating_pair(int n, const Limits& limits) {
  if (n < 3) fail(Errc::bad_parameter, "alternating_pair: n must be at least 3");
  std::vector<int32_t> three(static_cast<size_t>(n));
  std::iota(three.begin(), three.end(), 0);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  std::vector<Perm> gens{Perm::from_images(std::move(three))};
  if (n > 3) {
    std::vector<int32_t> img(static_cast<size_t>(n));
    if (n % 2 == 1) {
      for (int32_t j = 0; j < n; ++j) img[static_cast<size_t>(j)] = (j + 1) % n;
    } else {
      img[0] = 0;  // even degree: cycle the last n-1 points
      for (int32_t j = 1; j < n; ++j) img[static_cast<size_t>(j)] = j % (n - 1) + 1;
    }
    gens.push_back(Perm::from_images(std::move(img)));
  }
  return RootPair::from_group(Group::closure(n, std::move(gens), limits));
}

ArithProfile arith(int64_t n) {
  if (n < 1) fail(Errc::bad_parameter, "arith: n must be positive");
  ArithProfile p;
  p.n = n;
  int64_t rest = n;
  for (int64_t d = 2; d * d <= rest; ++d)
    while (rest % d == 0) {
      p.factorization[d] += 1;
      rest /= d;
    }
  if (rest > 1) p.factorization[rest] += 1;
  p.phi = 1;
  for (auto [prime, e] : p.factorization) {
    int64_t pe = 1;
    for (int i = 1; i < e; ++i) pe *= prime;
    p.phi *= pe * (prime - 1);
  }
  auto it = p.factorization.find(2);
  p.v2 = it == p.factorization.end() ? 0 : it->second;
  return p;
}

int64_t totient(int64_t n) { return arith(n).phi; }

EulerChecks euler_checks(int64_t n, int64_t l) {
  if (n < 1 || l < 1 || n % l != 0) fail(Errc::bad_parameter, "euler_checks: need l | n");
  ArithProfile pn = arith(n);
  ArithProfile pl = arith(l);
  EulerChecks c;
  c.m = n / l;
  c.k = 1;
  for (auto [prime, e] : pn.factorization) {
    if (pl.factorization.count(prime)) continue;
    for (int i = 0; i < e; ++i) c.k *= prime;
  }
  c.phi_n = pn.phi;
  c.phi_l = pl.phi;
  int64_t phi_k = totient(c.k);
  c.ratio_identity = c.phi_n * c.k == c.phi_l * c.m * phi_k;
  c.divisibility = (c.m % c.k == 0) && (c.phi_n % c.phi_l == 0);
  c.equality_case = c.phi_n == c.phi_l;
  bool equality_rhs = (n == l) || (l % 2 == 1 && n == 2 * l);
  if (c.equality_case != equality_rhs) fail(Errc::internal, "totient equality case mismatch");
  c.ratio_is_m = c.phi_n == c.m * c.phi_l;
  bool same_support = true;
  for (auto [prime, e] : pn.factorization)
    if (!pl.factorization.count(prime)) same_support = false;
  if (c.ratio_is_m != same_support) fail(Errc::internal, "totient ratio case mismatch");
  return c;
}

}  // namespace rcl
