#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rcl/cluster.hpp"

namespace rcl {

// Affine group of Z/n on the points {0..n-1}: generated by j -> j+1 and
// j -> u*j for a generating set of the unit group. Order n * phi(n); the
// stabilizer of point 0 is the unit-multiplication part.
RootPair metacyclic(int n, const Limits& limits = {});

// s packets of r points; generated by a cyclic shift inside each packet plus
// a cyclic shift of the packets. Order r^s * s, transitive; for r > 1 a point
// stabilizer fixes exactly the r points of its packet.
RootPair wreathlike(int r, int s, const Limits& limits = {});

// Full symmetric group acting coordinatewise on ordered k-tuples of distinct
// points, tuples enumerated lexicographically. Degree n!/(n-k)!; point 0 is
// the tuple (0,..,k-1) whose stabilizer is the pointwise stabilizer.
RootPair tuple_action(int n, int k, const Limits& limits = {});

GroupPtr cyclic_group(int k, const Limits& limits = {});
GroupPtr klein_four(const Limits& limits = {});
// Alternating group in its natural action.
RootPair alternating_pair(int n, const Limits& limits = {});

struct ArithProfile {
  int64_t n = 0;
  std::map<int64_t, int> factorization;  // prime -> exponent
  int64_t phi = 0;
  int v2 = 0;
};

ArithProfile arith(int64_t n);
int64_t totient(int64_t n);

struct EulerChecks {
  // clause values for a divisor pair l | n with m = n/l and k the part of n
  // coprime to l
  bool ratio_identity = false;   // phi(n) * k == phi(l) * m * phi(k)
  bool divisibility = false;     // k | m and phi(l) | phi(n)
  bool equality_case = false;    // phi(n) == phi(l) (iff n == l, or l odd and n == 2l)
  bool ratio_is_m = false;       // phi(n) == m * phi(l) (iff same prime support)
  int64_t m = 0, k = 0;
  int64_t phi_n = 0, phi_l = 0;
};

EulerChecks euler_checks(int64_t n, int64_t l);

}  // namespace rcl
