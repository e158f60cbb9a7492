#pragma once

#include <vector>

#include "tightforge/isg.hpp"
#include "tightforge/latt.hpp"

namespace tightforge {

/// A zero-preserving semilattice homomorphism, map[e] = h(e).
struct SemilatticeHom {
  SemilatticePtr dom;
  SemilatticePtr cod;
  std::vector<int> map;

  /// Validates multiplicativity and zero preservation (InvalidStructure).
  static SemilatticeHom make(SemilatticePtr dom, SemilatticePtr cod, std::vector<int> map);
  static SemilatticeHom identity(const SemilatticePtr& E);

  int operator()(int e) const { return map[e]; }
};

/// A zero-preserving homomorphism of inverse semigroups.
struct SemigroupHom {
  InverseSemigroupPtr dom;
  InverseSemigroupPtr cod;
  std::vector<int> map;

  static SemigroupHom make(InverseSemigroupPtr dom, InverseSemigroupPtr cod, std::vector<int> map);
  static SemigroupHom identity(const InverseSemigroupPtr& S);

  int operator()(int s) const { return map[s]; }
  /// The restriction h° to the idempotent semilattices.
  SemilatticeHom restrict_to_idempotents() const;
  /// Composite g after h.
  friend SemigroupHom compose(const SemigroupHom& g, const SemigroupHom& h);
};

/// Every zero-preserving homomorphism dom -> cod (backtracking over images of
/// a generating set).  Intended for small corpus instances.
std::vector<SemilatticeHom> all_homs(const SemilatticePtr& dom, const SemilatticePtr& cod);
std::vector<SemigroupHom> all_homs(const InverseSemigroupPtr& dom, const InverseSemigroupPtr& cod);

/// An isomorphism S -> T as an index map, or nothing.
std::optional<std::vector<int>> find_isomorphism(const FiniteInverseSemigroup& S, const FiniteInverseSemigroup& T);
bool isomorphic(const FiniteInverseSemigroup& S, const FiniteInverseSemigroup& T);

/// The tight quotient S/~ realised as the image of s -> Delta_s in the slice
/// semigroup of the tight groupoid, together with the quotient map.  Each
/// class is named after its lexicographically least member.
struct TightQuotient {
  InverseSemigroupPtr quotient;
  SemigroupHom map;
};
TightQuotient tight_quotient(const InverseSemigroupPtr& S);

}  // namespace tightforge
