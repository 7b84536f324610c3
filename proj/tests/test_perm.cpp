#include "doctest.h"
#include "helpers.hpp"

using namespace rcl;
using testutil::perm1;

TEST_CASE("composition acts right-to-left") {
  Perm p = perm1({2, 3, 1});
  Perm q = perm1({2, 1, 3});
  CHECK(compose(p, q) == perm1({3, 2, 1}));
  CHECK(compose(q, p) == perm1({1, 3, 2}));
}

TEST_CASE("inverse of a 3-cycle") {
  Perm p = perm1({2, 3, 1});
  CHECK(p.inverse() == perm1({3, 1, 2}));
  CHECK(compose(p, p.inverse()).is_identity());
}

TEST_CASE("identity laws hold for every permutation up to degree 6") {
  for (int degree = 1; degree <= 6; ++degree) {
    Perm id = Perm::identity(degree);
    for (const Perm& p : testutil::symmetric_elements(degree)) {
      CHECK(compose(p, id) == p);
      CHECK(compose(id, p) == p);
      CHECK(compose(p, p.inverse()) == id);
      CHECK(compose(p.inverse(), p) == id);
    }
  }
}

TEST_CASE("invalid image sequences are rejected") {
  CHECK_THROWS_AS(Perm::from_images({0, 0, 2}), Error);
  CHECK_THROWS_AS(Perm::from_images({0, 3, 1}), Error);
  CHECK_THROWS_AS(perm1({0, 1, 2}), Error);
  try {
    Perm::from_images({1, 1, 0});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_permutation);
  }
}

TEST_CASE("degree mismatch is reported") {
  CHECK_THROWS_AS(compose(perm1({1, 2}), perm1({1, 2, 3})), Error);
}

TEST_CASE("lexicographic order puts the identity first") {
  auto elems = testutil::symmetric_elements(4);
  std::sort(elems.begin(), elems.end());
  CHECK(elems.front().is_identity());
}

TEST_CASE("cycle notation") {
  CHECK(perm1({2, 3, 1}).cycle_string() == "(1 2 3)");
  CHECK(perm1({2, 1, 3, 4}).cycle_string() == "(1 2)");
  CHECK(Perm::identity(5).cycle_string() == "()");
}

TEST_CASE("round trip through the 1-based form") {
  testutil::RandomPairs rnd(7);
  for (int i = 0; i < 20; ++i) {
    Perm p = rnd.random_perm(6);
    CHECK(Perm::from_one_based(p.one_based()) == p);
  }
}
