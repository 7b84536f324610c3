#pragma once

#include <string>
#include <vector>

#include "rcl/construct.hpp"
#include "rcl/magnify.hpp"

namespace rcl {

// Pair expressions: "metacyclic:12", "wreathlike:2:3", "tuples:5:2", "sym:4",
// "alt:5", optionally magnified as "<base>+<groupexpr>".
RootPair build_pair_expr(const std::string& expr, const Limits& limits = {});

// Group expressions: "cyclic:6", "klein4", "sym:4", "alt:5", and products
// joined with commas, e.g. "cyclic:2,cyclic:3".
GroupPtr build_group_expr(const std::string& expr, const Limits& limits = {});

struct Fixture {
  std::string name;
  std::string pair_expr;  // empty for fixtures that build their own scene
  std::string note;
};

const std::vector<Fixture>& catalog();
bool catalog_has(const std::string& name);

struct Assertion {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Frozen expectations of a named fixture followed by the generic invariant
// suite on its pair.
std::vector<Assertion> catalog_run(const std::string& name, const Limits& limits = {});

// The cross-module invariant suite on an arbitrary (group, subgroup) pair.
std::vector<Assertion> verify_pair(const GroupPtr& g, const Subgroup& h, const Limits& limits = {});

bool all_pass(const std::vector<Assertion>& as);

}  // namespace rcl
