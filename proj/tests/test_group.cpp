#include "doctest.h"
#include "helpers.hpp"

using namespace rcl;
using testutil::perm1;

TEST_CASE("closure of two transpositions gives the full symmetric group on 3 points") {
  GroupPtr g = Group::closure(3, {perm1({2, 1, 3}), perm1({2, 3, 1})});
  CHECK(g->order() == 6);
  auto all = testutil::symmetric_elements(3);
  std::sort(all.begin(), all.end());
  CHECK(g->elements() == all);
}

TEST_CASE("empty generator list yields the trivial group") {
  GroupPtr g = Group::closure(4, {});
  CHECK(g->order() == 1);
  CHECK(g->elements().front().is_identity());
}

TEST_CASE("enumeration cap raises group_too_large") {
  Limits lim;
  lim.max_order = 5;
  CHECK_THROWS_AS(Group::closure(3, {perm1({2, 1, 3}), perm1({2, 3, 1})}, lim), Error);
  try {
    Group::closure(3, {perm1({2, 1, 3}), perm1({2, 3, 1})}, lim);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::group_too_large);
  }
}

TEST_CASE("degree cap raises group_too_large") {
  Limits lim;
  lim.max_degree = 3;
  CHECK_THROWS_AS(Group::closure(4, {}, lim), Error);
}

TEST_CASE("closure laws hold exhaustively on a sample of small groups") {
  std::vector<GroupPtr> groups{
      Group::closure(3, {perm1({2, 1, 3}), perm1({2, 3, 1})}),
      Group::closure(4, {perm1({2, 3, 4, 1})}),
      Group::closure(4, {perm1({2, 1, 4, 3}), perm1({3, 4, 1, 2})}),
  };
  for (const GroupPtr& g : groups) {
    for (const Perm& a : g->elements()) {
      CHECK(g->contains(a.inverse()));
      for (const Perm& b : g->elements()) CHECK(g->contains(compose(a, b)));
    }
    for (const Perm& gen : g->generators()) CHECK(g->contains(gen));
    CHECK(std::is_sorted(g->elements().begin(), g->elements().end()));
  }
}

TEST_CASE("order divides the factorial of the degree") {
  testutil::RandomPairs rnd(11);
  for (int i = 0; i < 12; ++i) {
    RootPair p = rnd.next(5000);
    int64_t fact = 1;
    for (int k = 2; k <= p.n; ++k) fact *= k;
    CHECK(fact % p.group->order() == 0);
  }
}

TEST_CASE("is_subgroup recognizes subgroups and rejects non-groups") {
  GroupPtr s3 = Group::closure(3, {perm1({2, 1, 3}), perm1({2, 3, 1})});
  std::vector<Perm> sub{Perm::identity(3), perm1({2, 1, 3})};
  CHECK(is_subgroup(*s3, sub));
  std::vector<Perm> no_identity{perm1({2, 1, 3})};
  CHECK_FALSE(is_subgroup(*s3, no_identity));
  std::vector<Perm> not_closed{Perm::identity(3), perm1({2, 3, 1})};
  CHECK_FALSE(is_subgroup(*s3, not_closed));
}

TEST_CASE("subgroup construction validates membership") {
  GroupPtr a3 = Group::closure(3, {perm1({2, 3, 1})});
  CHECK_THROWS_AS(Subgroup::from_generators(a3, {perm1({2, 1, 3})}), Error);
  Subgroup h = Subgroup::from_generators(a3, {perm1({2, 3, 1})});
  CHECK(h.order() == 3);
  CHECK(h.index() == 1);
}

TEST_CASE("minimal generators regenerate the group") {
  GroupPtr g = Group::closure(4, {perm1({2, 1, 4, 3}), perm1({3, 4, 1, 2})});
  auto gens = minimal_generators(g->elements(), 4);
  CHECK(gens.size() == 2);  // the four-group needs exactly two generators
  CHECK(bfs_closure(4, gens, 100) == g->elements());
}
