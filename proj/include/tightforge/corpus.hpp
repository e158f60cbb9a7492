#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tightforge/gpd.hpp"
#include "tightforge/isg.hpp"
#include "tightforge/latt.hpp"
#include "tightforge/tlk.hpp"

namespace tightforge::corpus {

/// {0 < 1 < ... < n-1}, zero "0".
SemilatticePtr chain(int n);
/// {0, e, f, 1} with e, f incomparable atoms.
SemilatticePtr diamond();
/// Zero plus k pairwise orthogonal atoms named a, b, ...
SemilatticePtr fan(int atoms);

/// Every semilattice with n elements up to isomorphism, in a fixed order.
/// Elements are named 0, a, b, ... with 0 the zero.
std::vector<SemilatticePtr> all_semilattices(int n);

struct NamedSemilattice {
  std::string id;
  SemilatticePtr E;
};

/// All semilattices with at most six elements up to isomorphism (77 of
/// them) followed by a few seven-element ones.
std::vector<NamedSemilattice> semilattices();

/// The symmetric inverse monoid on n points, or a SizeCapExceeded.
InverseSemigroupPtr symmetric_inverse_monoid(int n, std::size_t cap = 64);
/// The closure of the chain of partial maps 1>2, 2>3, ...: n^2 + 1 elements.
InverseSemigroupPtr brandt(int n);
/// The cyclic group of order n with a zero adjoined.
InverseSemigroupPtr cyclic_with_zero(int n);

/// Random injective partial map on {1..degree}, drawn from raw engine output.
PartialMap random_partial_bijection(std::mt19937_64& rng, int degree);

/// Closures of two random generators each, skipping draws over the cap.
/// Deterministic in (seed, count, degree, cap).
std::vector<std::pair<std::vector<PartialMap>, InverseSemigroupPtr>> random_closures(std::uint64_t seed, int count,
                                                                                      int degree, std::size_t cap);

struct NamedSemigroup {
  std::string id;
  InverseSemigroupPtr S;
};

/// Named inverse semigroups, all with at most twelve elements, followed by
/// seeded random closures that are pairwise non-isomorphic.
std::vector<NamedSemigroup> semigroups(std::uint64_t seed = 7);

/// Copy with elements renamed by `prefix` + new position, permuted by perm
/// (new index of old element i is perm[i]).
InverseSemigroupPtr relabeled(const FiniteInverseSemigroup& S, const std::vector<int>& perm,
                              const std::string& prefix = "x");
SemilatticePtr relabeled(const FiniteSemilattice& E, const std::vector<int>& perm, const std::string& prefix = "x");

/// Pair groupoid on two units, x <= y between the units and nothing else;
/// fails restriction because no arrow below x->y starts at x.
GroupoidPtr non_re_groupoid();

struct NamedSpace {
  std::string id;
  FiniteOrderedSpace X;
};

/// Small ordered spaces, tight-like or not.
std::vector<NamedSpace> spaces();

}  // namespace tightforge::corpus
