#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tightforge/latt.hpp"

namespace tightforge {

/// A finite meet-semilattice with no zero requirement.  A designated zero may
/// be carried along but plays no role in the spectrum.
class PlainSemilattice {
 public:
  static PlainSemilattice validate(std::vector<std::string> names, Table meet, std::optional<int> zero = std::nullopt);
  static PlainSemilattice from(const FiniteSemilattice& E);

  int size() const noexcept { return static_cast<int>(names_.size()); }
  int meet(int a, int b) const { return meet_[a][b]; }
  bool leq(int a, int b) const { return meet_[a][b] == a; }
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const Table& table() const noexcept { return meet_; }
  std::optional<int> zero() const noexcept { return zero_; }
  int find(std::string_view label) const;
  /// The least element; every finite semilattice has one.
  int minimum() const noexcept { return minimum_; }

 private:
  PlainSemilattice() = default;
  std::vector<std::string> names_;
  Table meet_;
  std::optional<int> zero_;
  int minimum_ = 0;
};

using PlainSemilatticePtr = std::shared_ptr<const PlainSemilattice>;

/// A nonzero homomorphism E -> {0,1}, stored through its support.
struct Character {
  int minimum = 0;
  std::vector<int> support;
  /// True when E carries a zero that the character sends to 0.
  bool kills_zero = false;

  bool operator==(const Character& o) const { return support == o.support; }
};

/// All characters, ordered by the index of the support minimum.
std::vector<Character> full_spectrum(const PlainSemilattice& E);

struct PlainHom {
  PlainSemilatticePtr dom, cod;
  std::vector<int> map;

  /// Checks multiplicativity only.
  static PlainHom make(PlainSemilatticePtr dom, PlainSemilatticePtr cod, std::vector<int> map);
  static PlainHom identity(const PlainSemilatticePtr& E);
  int operator()(int e) const { return map[e]; }
};

std::vector<PlainHom> all_plain_homs(const PlainSemilatticePtr& dom, const PlainSemilatticePtr& cod);

struct FullDual {
  std::vector<Character> dom_spectrum;
  std::vector<Character> cod_spectrum;
  /// in_domain[y]: the composite of cod character y with h is nonzero.
  std::vector<bool> in_domain;
  /// hat[y] indexes dom_spectrum, -1 outside the domain.
  std::vector<int> hat;
};

FullDual full_dual(const PlainHom& h);

struct IsoCriterion {
  bool iso = false;
  bool total_and_bijective = false;
  /// Identical to the previous condition in the finite discrete setting.
  bool total_and_homeomorphism = false;
  std::string witness;

  bool holds() const { return iso; }
};

/// h is an isomorphism iff the dual map is everywhere defined and bijective.
/// The three conditions are asserted to agree.
IsoCriterion full_dual_iso_criterion(const PlainHom& h);

}  // namespace tightforge
