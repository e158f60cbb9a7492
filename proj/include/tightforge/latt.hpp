#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tightforge/error.hpp"

namespace tightforge {

using Table = std::vector<std::vector<int>>;
using Relation = std::vector<std::vector<bool>>;

/// A finite meet-semilattice with a zero, stored as its meet table.
///
/// Instances only come out of validate(), so every accessor may assume the
/// axioms hold.  The order e <= f iff meet(e, f) == e is precomputed.
class FiniteSemilattice {
 public:
  static FiniteSemilattice validate(std::vector<std::string> names, Table meet, int zero);

  int size() const noexcept { return static_cast<int>(names_.size()); }
  int zero() const noexcept { return zero_; }
  int meet(int e, int f) const { return meet_[e][f]; }
  bool leq(int e, int f) const { return leq_[e][f]; }
  /// e and f are orthogonal: their meet is zero.
  bool perp(int e, int f) const { return meet_[e][f] == zero_; }

  const std::string& name(int e) const { return names_[e]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const Table& table() const noexcept { return meet_; }
  /// Index of the element with the given label, or -1.
  int find(std::string_view label) const;

  /// Elements g with g <= f, in index order.
  std::vector<int> down_set(int f) const;
  /// Minimal nonzero elements.
  std::vector<int> atoms() const;
  bool is_atom(int e) const;

  friend bool operator==(const FiniteSemilattice& a, const FiniteSemilattice& b) {
    return a.names_ == b.names_ && a.meet_ == b.meet_ && a.zero_ == b.zero_;
  }

 private:
  FiniteSemilattice() = default;

  std::vector<std::string> names_;
  Table meet_;
  int zero_ = 0;
  Relation leq_;
};

using SemilatticePtr = std::shared_ptr<const FiniteSemilattice>;

/// A filter of a finite semilattice.  Finite filters are principal, so the
/// minimum is cached next to the member list (sorted indices).
struct Filter {
  int minimum = -1;
  std::vector<int> members;
  bool ultra = false;

  bool contains(int e) const;
  friend bool operator==(const Filter& a, const Filter& b) { return a.members == b.members; }
};

/// The tight filters with inclusion order and the sets D_e.
struct TightSpectrum {
  std::vector<Filter> points;
  Relation order;
  /// d_sets[e] lists the indices of the points containing e.
  std::vector<std::vector<int>> d_sets;
  /// point_of_min[e] is the index of the point with minimum e, or -1.
  std::vector<int> point_of_min;

  int size() const noexcept { return static_cast<int>(points.size()); }
};

/// True iff C is a cover of f: every c in C lies below f and every nonzero
/// g <= f meets some member of C.  Throws ZeroTarget when f is zero.
bool is_cover(const FiniteSemilattice& E, const std::vector<int>& C, int f);

/// Tight order: no nonzero g with g <= e is orthogonal to f.
bool tight_leq(const FiniteSemilattice& E, int e, int f);
/// Nonzero witness g <= e with meet(g, f) == 0, or -1 when e is tightly below f.
int tight_leq_witness(const FiniteSemilattice& E, int e, int f);
bool tight_equiv(const FiniteSemilattice& E, int e, int f);

/// Principal up-set of a nonzero element.
Filter principal_filter(const FiniteSemilattice& E, int m);
/// Checks the filter axioms on an arbitrary member set.
bool is_filter(const FiniteSemilattice& E, const std::vector<int>& members);

/// Every filter, one per nonzero element, with ultra flags set.
std::vector<Filter> filters(const FiniteSemilattice& E);

/// Tightness through the maximal avoiding set: xi is tight iff for no f in xi
/// do the nonzero elements below f outside xi form a cover of f.
bool is_tight_filter(const FiniteSemilattice& E, const Filter& xi);

TightSpectrum tight_spectrum(const FiniteSemilattice& E);

/// Element labels in index order, rendered as "{a,b}".
std::string format_set(const FiniteSemilattice& E, const std::vector<int>& elements);

}  // namespace tightforge
