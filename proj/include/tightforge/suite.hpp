#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tightforge/corpus.hpp"
#include "tightforge/limits.hpp"
#include "tightforge/morphism.hpp"

namespace tightforge::suite {

/// Outcome of one property check over the corpus.
struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Instances skipped because they exceed a size cap.
  std::size_t skipped = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

struct Context {
  std::uint64_t seed = 7;
  Limits limits;
  std::vector<corpus::NamedSemilattice> semilattices;
  std::vector<corpus::NamedSemigroup> semigroups;
  std::vector<corpus::NamedSpace> spaces;
  /// Every consonance between corpus semigroups, found by exhaustive
  /// homomorphism enumeration.
  std::vector<SemigroupHom> consonances;
  std::size_t homs_enumerated = 0;
};

Context make_context(std::uint64_t seed = 7, const Limits& limits = {});

/// A pair of inverse semigroups with the expected consonance verdict.
struct PairCase {
  std::string first, second;
  InverseSemigroupPtr a, b;
  bool expected = false;
};

/// Nontrivial consonant pairs and non-consonant pairs with different tight
/// groupoid invariants.
std::vector<PairCase> consonance_pairs(const Context& ctx);

/// Corpus semilattices with at most `max_size` elements.
std::vector<corpus::NamedSemilattice> small_semilattices(const Context& ctx, int max_size);

// Semilattice tight order.
CheckResult tight_order_characterizations(const Context& ctx);
CheckResult tight_order_is_preorder(const Context& ctx);
CheckResult tight_order_via_spectrum_sets(const Context& ctx);
CheckResult nonzero_elements_lie_in_tight_filters(const Context& ctx);
CheckResult tight_filters_are_ultra(const Context& ctx);
CheckResult kernel_criteria_for_tight_injectivity(const Context& ctx);

// Inverse semigroup tight order.
CheckResult semigroup_tight_order_on_idempotents(const Context& ctx);
CheckResult tight_order_passes_to_sources(const Context& ctx);
CheckResult tight_order_via_germ_sets(const Context& ctx);
CheckResult tight_order_under_translation(const Context& ctx);

// Semilattice homomorphisms and dual maps.
CheckResult tight_hom_character_conditions(const Context& ctx);
CheckResult dual_map_properties(const Context& ctx);

// Tight groupoids and slices.
CheckResult induced_groupoid_maps(const Context& ctx);
CheckResult germ_order_is_partial_order(const Context& ctx);
CheckResult upsets_are_unions_of_germ_sets(const Context& ctx);
CheckResult up_slice_closure(const Context& ctx);
CheckResult germ_sets_are_multiplicative(const Context& ctx);
CheckResult singleton_germs_are_open(const Context& ctx);
CheckResult re_axioms(const Context& ctx);
CheckResult idempotent_slice_covers_are_unions(const Context& ctx);

// Joins, envelopes and consonance.
CheckResult compatibility_formulations(const Context& ctx);
CheckResult joins_from_covers(const Context& ctx);
CheckResult envelope_is_distributive(const Context& ctx);
CheckResult tight_quotient_is_consonance(const Context& ctx);
CheckResult consonance_decisions(const Context& ctx);
CheckResult envelope_uniqueness(const Context& ctx);

// Dualities.
CheckResult space_duality_round_trip(const Context& ctx);
CheckResult groupoid_round_trips(const Context& ctx);
CheckResult full_dual_isomorphism_criterion(const Context& ctx);

// Documents.
CheckResult document_round_trip(const Context& ctx);

/// Every check above, in a fixed order.
std::vector<CheckResult> run_all(const Context& ctx);

/// Deterministic report: one line per check plus a summary line.
std::string format_report(const std::vector<CheckResult>& results);

}  // namespace tightforge::suite
