#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tightforge/gpd.hpp"
#include "tightforge/morphism.hpp"

namespace tightforge {

/// {e : h(e) = 0}.
std::vector<int> kernel(const SemilatticeHom& h);
/// {s : h(s) = 0}.  Reported on its own: for inverse semigroups a trivial
/// kernel is not known to be equivalent to tight injectivity.
std::vector<int> kernel(const SemigroupHom& h);

struct TightHomReport {
  /// For every f, the products f h(e) cover f.  Witness: failing f.
  bool covers_targets = true;
  int target_witness = -1;
  /// Images of covers are covers.  Witness: element e and the nonzero g below
  /// h(e) that the image of a cover of e misses.
  bool preserves_covers = true;
  int cover_element_witness = -1;
  int cover_gap_witness = -1;

  bool tight() const { return covers_targets && preserves_covers; }
};

TightHomReport is_tight_hom(const SemilatticeHom& h);

struct InjectivityVerdict {
  bool holds = true;
  /// Pair with tightly equivalent images that are not tightly equivalent.
  int first = -1, second = -1;
};

struct SurjectivityVerdict {
  bool holds = true;
  /// Target that the range fails to reach.
  int target = -1;
};

InjectivityVerdict tightly_injective(const SemilatticeHom& h);
SurjectivityVerdict tightly_surjective(const SemilatticeHom& h);
InjectivityVerdict tightly_injective(const SemigroupHom& h);
SurjectivityVerdict tightly_surjective(const SemigroupHom& h);

inline bool is_tightly_injective(const SemilatticeHom& h) { return tightly_injective(h).holds; }
inline bool is_tightly_surjective(const SemilatticeHom& h) { return tightly_surjective(h).holds; }
inline bool is_tightly_injective(const SemigroupHom& h) { return tightly_injective(h).holds; }
inline bool is_tightly_surjective(const SemigroupHom& h) { return tightly_surjective(h).holds; }

struct ConsonanceVerdict {
  InjectivityVerdict injective;
  SurjectivityVerdict surjective;
  bool is_consonance = false;
  /// Only filled for inverse semigroup homomorphisms: the verdict on the
  /// restriction to idempotents.
  bool has_restriction = false;
  bool restriction_consonance = false;
};

ConsonanceVerdict check_consonance(const SemilatticeHom& h);
ConsonanceVerdict check_consonance(const SemigroupHom& h);

struct DualMap {
  TightSpectrum dom_spectrum;
  TightSpectrum cod_spectrum;
  /// hat[y] is the dom point { e : h(e) in y } for cod point y.
  std::vector<int> hat;
  bool surjective = false;
  /// Plain injectivity, reported as a diagnostic.
  bool injective = false;
  bool order_preserving = false;
  bool order_injective = false;
};

/// The dual map on tight spectra.  Throws NotTight unless h is tight.
DualMap dual_map(const SemilatticeHom& h);

/// Evaluates xi -> { f : h(e) tightly below f for some e in xi } on every
/// point without any precondition; entries are -1 where the result is not a
/// tight filter.
std::vector<int> inverse_dual_candidate(const SemilatticeHom& h);

/// The inverse of the dual map for a consonance, with the inverse and
/// order-isomorphism properties asserted.  PreconditionFailed otherwise.
std::vector<int> check_inverse(const SemilatticeHom& h);

struct InducedMap {
  TightGroupoid source;
  TightGroupoid target;
  /// Arrow map Gt(dom) -> Gt(cod).
  std::vector<int> map;
  /// Map on units, i.e. on tight spectra.
  std::vector<int> point_map;
  bool injective = false;
  bool surjective = false;
  bool functor = false;
  bool order_preserving = false;
  bool order_reflecting = false;
};

/// [s, xi] -> [h(s), inverse dual of the restriction at xi].  Requires the
/// restriction to idempotents to be a consonance.
InducedMap induced_groupoid_map(const SemigroupHom& h);

enum class Covariance { none, covariant, epimorphism };
const char* to_string(Covariance c);

struct CovarianceReport {
  Covariance level = Covariance::none;
  std::string violated;
};

/// Classifies the pair (h, f) where f maps the points of alpha to those of
/// beta.  Also checks how h x f moves fundamental slices.
CovarianceReport check_covariant(const SemigroupHom& h, const std::vector<int>& f, const SemigroupAction& alpha,
                                 const SemigroupAction& beta);

struct ConsonantVerdict {
  bool consonant = false;
  std::string reason;
  /// Ordered isomorphism Gt(S1) -> Gt(S2).
  std::vector<int> groupoid_iso;
  /// Mediator generated inside the slice semigroup of Gt(S2).
  SliceSemigroup mediator;
  SemigroupHom h1, h2;
  /// Consonance S2 -> Cpl(S1) when the envelope fits the arrow cap.
  bool has_envelope_route = false;
  SemigroupHom envelope_route;
};

ConsonantVerdict decide_consonant(const InverseSemigroupPtr& S1, const InverseSemigroupPtr& S2,
                                  const Limits& limits = {});

struct Factorization {
  Envelope envelope;
  /// k : cod(h) -> Cpl(dom(h)) with k o h equal to the fundamental map.
  SemigroupHom k;
};

Factorization factor_through(const SemigroupHom& h, const Limits& limits = {});

}  // namespace tightforge
