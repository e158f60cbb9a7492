#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tightforge/isg.hpp"
#include "tightforge/latt.hpp"
#include "tightforge/limits.hpp"
#include "tightforge/morphism.hpp"

namespace tightforge {

/// Sorted list of arrow indices.
using ArrowSet = std::vector<int>;

/// A finite groupoid with a partial order on its arrows.  Units are the
/// arrows u with source(u) == u; source and range return unit arrows.
class FiniteOrderedGroupoid {
 public:
  /// compose[a][b] is a*b when source(a) == range(b) and -1 otherwise.
  static FiniteOrderedGroupoid validate(std::vector<std::string> names, std::vector<int> source,
                                        std::vector<int> range, Table compose, std::vector<int> inverse,
                                        Relation order);

  int size() const noexcept { return static_cast<int>(names_.size()); }
  bool is_unit(int a) const { return source_[a] == a; }
  int source(int a) const { return source_[a]; }
  int range(int a) const { return range_[a]; }
  int inverse(int a) const { return inverse_[a]; }
  int compose(int a, int b) const { return compose_[a][b]; }
  bool leq(int a, int b) const { return order_[a][b]; }
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<int>& units() const noexcept { return units_; }
  const Relation& order() const noexcept { return order_; }
  const Table& compose_table() const noexcept { return compose_; }
  int find(std::string_view label) const;
  /// True when the order relation is just equality.
  bool trivial_order() const;

  friend bool operator==(const FiniteOrderedGroupoid& a, const FiniteOrderedGroupoid& b) {
    return a.names_ == b.names_ && a.source_ == b.source_ && a.range_ == b.range_ && a.compose_ == b.compose_ &&
           a.inverse_ == b.inverse_ && a.order_ == b.order_;
  }

 private:
  FiniteOrderedGroupoid() = default;

  std::vector<std::string> names_;
  std::vector<int> source_, range_, inverse_, units_;
  Table compose_;
  Relation order_;
};

using GroupoidPtr = std::shared_ptr<const FiniteOrderedGroupoid>;

/// An action of a finite inverse semigroup on a finite ordered (discrete)
/// space by partial bijections.
struct SemigroupAction {
  InverseSemigroupPtr semigroup;
  std::vector<std::string> point_names;
  Relation order;
  /// theta[s][x] is the image of point x, or -1 when x is outside dom(theta_s).
  Table theta;

  int size() const noexcept { return static_cast<int>(point_names.size()); }
  bool in_domain(int s, int x) const { return theta[s][x] >= 0; }
  /// Throws InvalidStructure when an action axiom fails.
  void validate() const;
};

/// The groupoid of germs of an action.  Arrow a is the germ
/// [germ[a].first, germ[a].second] with canonical representative s*m_x,
/// where m_x is the least idempotent whose domain contains x.
struct GermGroupoid {
  GroupoidPtr groupoid;
  std::vector<std::pair<int, int>> germ;
  /// delta[s] is the fundamental slice of s.
  std::vector<ArrowSet> delta;
  std::vector<int> unit_of_point;
  std::vector<int> min_idempotent;

  /// Arrow [s, x], or -1 when x is outside dom(theta_s).
  int arrow_of(int s, int x) const;
  int point_of(int arrow) const { return germ[arrow].second; }

  InverseSemigroupPtr semigroup;
  std::map<std::pair<int, int>, int> index;
};

/// The canonical action on the tight spectrum of E(S):
/// theta_s(xi) is the filter generated by { s e s* : e in xi }.
SemigroupAction canonical_action(const InverseSemigroupPtr& S);

GermGroupoid germ_groupoid(const SemigroupAction& action);

struct TightGroupoid {
  InverseSemigroupPtr semigroup;
  TightSpectrum spectrum;
  SemigroupAction action;
  GermGroupoid germs;

  const FiniteOrderedGroupoid& groupoid() const { return *germs.groupoid; }
  const ArrowSet& delta(int s) const { return germs.delta[s]; }
};

TightGroupoid tight_groupoid(const InverseSemigroupPtr& S);

// ---- slices ---------------------------------------------------------------

struct Slice {
  GroupoidPtr groupoid;
  ArrowSet arrows;
};

ArrowSet set_product(const FiniteOrderedGroupoid& G, const ArrowSet& U, const ArrowSet& V);
ArrowSet set_inverse(const FiniteOrderedGroupoid& G, const ArrowSet& U);
/// Source units of the arrows in U.
ArrowSet set_source(const FiniteOrderedGroupoid& G, const ArrowSet& U);
ArrowSet set_range(const FiniteOrderedGroupoid& G, const ArrowSet& U);
bool is_bisection(const FiniteOrderedGroupoid& G, const ArrowSet& A);
bool is_up_set(const FiniteOrderedGroupoid& G, const ArrowSet& A);
bool is_up_slice(const FiniteOrderedGroupoid& G, const ArrowSet& A);

/// Throws PreconditionFailed when U and V live in different groupoids.
Slice slice_product(const Slice& U, const Slice& V);
Slice slice_inverse(const Slice& U);

/// Every up-slice, ordered by size and then lexicographically.
/// Throws SizeCapExceeded beyond limits.max_arrows arrows.
std::vector<ArrowSet> up_slices(const FiniteOrderedGroupoid& G, const Limits& limits = {});

/// An inverse semigroup of slices under the slice product, named by their
/// sorted arrow lists.
struct SliceSemigroup {
  InverseSemigroupPtr semigroup;
  std::vector<ArrowSet> slices;
  std::map<ArrowSet, int> index;

  int find(const ArrowSet& A) const;
};

/// The slices must be closed under product and inverse and contain the empty
/// set; they are renamed and reordered canonically.
SliceSemigroup slice_semigroup(const FiniteOrderedGroupoid& G, std::vector<ArrowSet> slices);
std::string slice_name(const FiniteOrderedGroupoid& G, const ArrowSet& A);

/// Inverse subsemigroup of the slice semigroup generated by `generators`.
SliceSemigroup generated_slice_semigroup(const FiniteOrderedGroupoid& G, const std::vector<ArrowSet>& generators,
                                         const Limits& limits = {});

struct Envelope {
  TightGroupoid gt;
  SliceSemigroup cpl;
  /// rho(s) = Delta_s.
  SemigroupHom rho;
};

/// The inverse semigroup of up-slices of Gt(S) with the map s -> Delta_s.
Envelope tight_envelope(const InverseSemigroupPtr& S, const Limits& limits = {});

struct REReport {
  bool inversion_monotone = true;
  bool composition_monotone = true;
  bool source_restriction = true;
  bool range_restriction = true;
  std::string inversion_witness, composition_witness, source_witness, range_witness;

  bool all() const { return inversion_monotone && composition_monotone && source_restriction && range_restriction; }
};

REReport check_re_axioms(const FiniteOrderedGroupoid& G);

/// Nonzero elements of S, composable when s*s = t t*, ordered by the reverse
/// of the natural order.
FiniteOrderedGroupoid ehresmann_re(const FiniteInverseSemigroup& S);

struct FundamentalSemigroup {
  SliceSemigroup slices;
  bool covers = true;
  /// First arrow lying in no up-slice, or -1.
  int uncovered = -1;
};

FundamentalSemigroup fundamental_inverse_semigroup(const FiniteOrderedGroupoid& G, const Limits& limits = {});

/// First arrow of G not contained in any of the given sets, or -1.
int first_uncovered(const FiniteOrderedGroupoid& G, const std::vector<ArrowSet>& family);

struct Reconstruction {
  bool iso = false;
  std::string failure;
  FundamentalSemigroup fundamental;
  SemigroupAction action;
  GermGroupoid germs;
  /// mu[a] is the arrow of G matching germ a.
  std::vector<int> mu;
};

/// Rebuilds G as the germ groupoid of the natural action of its up-slices on
/// its units and checks the germ-to-arrow map is an ordered isomorphism.
/// Requires a tight-like groupoid.
Reconstruction reconstruct(const GroupoidPtr& G, const Limits& limits = {});

/// An isomorphism of ordered groupoids, as an arrow map, or nothing.
std::optional<std::vector<int>> groupoid_iso_search(const FiniteOrderedGroupoid& G, const FiniteOrderedGroupoid& H,
                                                    const Limits& limits = {});

/// Checks that `map` is a bijective functor preserving and reflecting order.
bool is_groupoid_isomorphism(const FiniteOrderedGroupoid& G, const FiniteOrderedGroupoid& H,
                             const std::vector<int>& map);

}  // namespace tightforge
