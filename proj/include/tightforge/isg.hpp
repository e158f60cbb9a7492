#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tightforge/latt.hpp"
#include "tightforge/limits.hpp"

namespace tightforge {

/// A finite inverse semigroup with zero, stored as its multiplication table.
/// Inverses, idempotents, the idempotent semilattice and the natural order
/// are derived once at validation time.
class FiniteInverseSemigroup {
 public:
  static FiniteInverseSemigroup validate(std::vector<std::string> names, Table product, int zero);
  /// A semilattice is an inverse semigroup whose star is the identity.
  static FiniteInverseSemigroup from_semilattice(const FiniteSemilattice& E);

  int size() const noexcept { return static_cast<int>(names_.size()); }
  int zero() const noexcept { return zero_; }
  int mul(int s, int t) const { return product_[s][t]; }
  int mul(int s, int t, int u) const { return product_[product_[s][t]][u]; }
  int star(int s) const { return star_[s]; }
  /// s* s, the source idempotent.
  int dom(int s) const { return product_[star_[s]][s]; }
  /// s s*, the range idempotent.
  int ran(int s) const { return product_[s][star_[s]]; }
  bool is_idempotent(int s) const { return idem_pos_[s] >= 0; }
  /// Natural order: s <= t iff s = t s* s.
  bool leq(int s, int t) const { return natural_[s][t]; }

  const std::string& name(int s) const { return names_[s]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const Table& table() const noexcept { return product_; }
  int find(std::string_view label) const;

  /// The idempotent semilattice E(S), indexed separately.
  const FiniteSemilattice& idempotents() const noexcept { return *E_; }
  const SemilatticePtr& idempotents_ptr() const noexcept { return E_; }
  /// Semigroup index of the idempotent with semilattice index e.
  int from_e(int e) const { return idem_[e]; }
  /// Semilattice index of an idempotent s, or -1.
  int to_e(int s) const { return idem_pos_[s]; }
  const std::vector<int>& idempotent_list() const noexcept { return idem_; }

  friend bool operator==(const FiniteInverseSemigroup& a, const FiniteInverseSemigroup& b) {
    return a.names_ == b.names_ && a.product_ == b.product_ && a.zero_ == b.zero_;
  }

 private:
  FiniteInverseSemigroup() = default;

  std::vector<std::string> names_;
  Table product_;
  int zero_ = 0;
  std::vector<int> star_;
  std::vector<int> idem_;
  std::vector<int> idem_pos_;
  Relation natural_;
  SemilatticePtr E_;
};

using InverseSemigroupPtr = std::shared_ptr<const FiniteInverseSemigroup>;

/// An injective partial map on {1..degree}, stored 0-based with -1 for
/// "undefined".
using PartialMap = std::vector<int>;

std::string partial_map_name(const PartialMap& m);

/// Closure of the generators and the empty map under composition and
/// inversion.  Products compose right to left: (st)(x) = s(t(x)).
FiniteInverseSemigroup from_partial_bijections(int degree, const std::vector<PartialMap>& generators,
                                               std::size_t cap = Limits{}.max_elements);

/// Tight order between elements: the agreement set {e <= s*s : se = te}
/// covers s*s (vacuously true for s = 0).
bool tight_leq_s(const FiniteInverseSemigroup& S, int s, int t);
bool tight_equiv_s(const FiniteInverseSemigroup& S, int s, int t);

/// s t* and s* t are both idempotent.
bool compatible(const FiniteInverseSemigroup& S, int s, int t);

struct JoinVerdict {
  bool pairwise_compatible = true;
  /// Least upper bound in the natural order, or -1.
  int join = -1;
};

/// Compatibility of a family and its join.  Also asserts that the three
/// equivalent formulations of pairwise compatibility agree.
JoinVerdict compatibility_and_join(const FiniteInverseSemigroup& S, const std::vector<int>& elements);
/// Least upper bound of a family in the natural order, or -1.
int join_of(const FiniteInverseSemigroup& S, const std::vector<int>& elements);

struct Classification {
  bool flat = false;
  bool has_finite_joins = false;
  bool distributive = false;
  /// Human-readable witness for the first failing property, empty otherwise.
  std::string flat_witness;
  std::string joins_witness;
  std::string distributive_witness;
  std::size_t families_tested = 0;
};

/// Pairwise compatible families tested by classify(): every compatible
/// family of nonzero elements when |S| <= 12, else those of size <= 4.
std::vector<std::vector<int>> compatible_families(const FiniteInverseSemigroup& S);

Classification classify(const FiniteInverseSemigroup& S, const Limits& limits = {});

}  // namespace tightforge
