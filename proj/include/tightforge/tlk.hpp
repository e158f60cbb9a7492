#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tightforge/gpd.hpp"
#include "tightforge/latt.hpp"
#include "tightforge/limits.hpp"

namespace tightforge {

/// A finite partially ordered set carrying the discrete topology.
class FiniteOrderedSpace {
 public:
  static FiniteOrderedSpace validate(std::vector<std::string> names, Relation order);
  /// The tight spectrum of E with the inclusion order, points named after
  /// the minima of the filters.
  static FiniteOrderedSpace from_spectrum(const FiniteSemilattice& E, const TightSpectrum& sp);
  /// The unit space of an ordered groupoid.
  static FiniteOrderedSpace units_of(const FiniteOrderedGroupoid& G);

  int size() const noexcept { return static_cast<int>(names_.size()); }
  bool leq(int x, int y) const { return order_[x][y]; }
  const std::string& name(int x) const { return names_[x]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const Relation& order() const noexcept { return order_; }
  int find(std::string_view label) const;
  /// Principal up-set [x, inf).
  std::vector<int> up(int x) const;

  friend bool operator==(const FiniteOrderedSpace& a, const FiniteOrderedSpace& b) {
    return a.names_ == b.names_ && a.order_ == b.order_;
  }

 private:
  FiniteOrderedSpace() = default;
  std::vector<std::string> names_;
  Relation order_;
};

struct SpaceReport {
  bool upset_neighbourhoods = true;
  bool separated = true;
  bool maximal_dense = true;
  std::string neighbourhood_witness, separation_witness, density_witness;
  std::string note;

  bool tight_like() const { return upset_neighbourhoods && separated && maximal_dense; }
};

SpaceReport check_tight_like_space(const FiniteOrderedSpace& X);

/// All up-sets of X as a semilattice under intersection, the empty set being
/// the zero.  upsets[i] lists the points of element i.
struct UpSetLattice {
  SemilatticePtr lattice;
  std::vector<std::vector<int>> upsets;
};

/// Throws SizeCapExceeded when X has more than 64 points or more than
/// limits.max_elements up-sets.
UpSetLattice compact_open_upsets(const FiniteOrderedSpace& X, const Limits& limits = {});

struct SpaceDuality {
  bool ok = false;
  std::string failure;
  UpSetLattice upsets;
  TightSpectrum spectrum;
  /// phi[x] is the spectrum point of the filter of up-sets containing x.
  std::vector<int> phi;
};

/// Requires a tight-like space (PreconditionFailed).
SpaceDuality space_duality(const FiniteOrderedSpace& X, const Limits& limits = {});

struct TightLikeGroupoidReport {
  REReport re;
  SpaceReport units;
  bool covered = false;
  int uncovered = -1;

  bool tight_like() const { return re.all() && units.tight_like() && covered; }
};

TightLikeGroupoidReport check_tight_like_groupoid(const FiniteOrderedGroupoid& G, const Limits& limits = {});

struct RoundTripReport {
  bool tight_like = false;
  /// U(G) and the tight envelope agree (semigroup side input only).
  bool envelope_iso = true;
  /// Gt(U(G)) and G are isomorphic by search.
  bool search_iso = false;
  /// The explicit germ-to-arrow map is an isomorphism.
  bool mu_iso = false;
  bool flat = false;
  bool distributive = false;
  /// Every arrow in U and V sits in an up-slice W contained in both.
  bool refinement = false;
  /// Present when the input semigroup is flat and distributive: whether it is
  /// recovered up to isomorphism.
  std::optional<bool> recovers_semigroup;
  std::string failure;

  bool ok() const {
    return tight_like && envelope_iso && search_iso && mu_iso && flat && distributive && refinement &&
           recovers_semigroup.value_or(true);
  }
};

RoundTripReport groupoid_duality_roundtrip(const InverseSemigroupPtr& S, const Limits& limits = {});
RoundTripReport groupoid_duality_roundtrip(const GroupoidPtr& G, const Limits& limits = {});

}  // namespace tightforge
