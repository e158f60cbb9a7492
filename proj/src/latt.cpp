#include "tightforge/latt.hpp"

#include <algorithm>
#include <set>

namespace tightforge {

namespace {

std::string triple(const std::vector<std::string>& names, int a, int b, int c) {
  return "(" + names[a] + ", " + names[b] + ", " + names[c] + ")";
}

}  // namespace

FiniteSemilattice FiniteSemilattice::validate(std::vector<std::string> names, Table meet, int zero) {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw InvalidStructure("empty carrier", "");
  if (static_cast<int>(meet.size()) != n) throw InvalidStructure("meet table has wrong number of rows", "");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(meet[i].size()) != n)
      throw InvalidStructure("meet table row has wrong length", "(" + names[i] + ")");
    for (int j = 0; j < n; ++j)
      if (meet[i][j] < 0 || meet[i][j] >= n)
        throw InvalidStructure("meet table entry out of range", "(" + names[i] + ", " + names[j] + ")");
  }
  {
    std::set<std::string> seen;
    for (const auto& s : names)
      if (!seen.insert(s).second) throw InvalidStructure("duplicate element name", "(" + s + ")");
  }
  if (zero < 0 || zero >= n) throw InvalidStructure("no zero", "");

  for (int e = 0; e < n; ++e)
    if (meet[e][e] != e) throw InvalidStructure("not idempotent", triple(names, e, e, meet[e][e]));
  for (int e = 0; e < n; ++e)
    for (int f = 0; f < n; ++f)
      if (meet[e][f] != meet[f][e]) throw InvalidStructure("not commutative", triple(names, e, f, meet[e][f]));
  for (int e = 0; e < n; ++e)
    for (int f = 0; f < n; ++f)
      for (int g = 0; g < n; ++g)
        if (meet[meet[e][f]][g] != meet[e][meet[f][g]])
          throw InvalidStructure("not associative", triple(names, e, f, g));
  for (int e = 0; e < n; ++e)
    if (meet[zero][e] != zero) throw InvalidStructure("zero not absorbing", triple(names, zero, e, meet[zero][e]));

  FiniteSemilattice E;
  E.names_ = std::move(names);
  E.meet_ = std::move(meet);
  E.zero_ = zero;
  E.leq_.assign(n, std::vector<bool>(n, false));
  for (int e = 0; e < n; ++e)
    for (int f = 0; f < n; ++f) E.leq_[e][f] = E.meet_[e][f] == e;
  return E;
}

int FiniteSemilattice::find(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == label) return i;
  return -1;
}

std::vector<int> FiniteSemilattice::down_set(int f) const {
  std::vector<int> out;
  for (int g = 0; g < size(); ++g)
    if (leq_[g][f]) out.push_back(g);
  return out;
}

bool FiniteSemilattice::is_atom(int e) const {
  if (e == zero_) return false;
  for (int g = 0; g < size(); ++g)
    if (g != zero_ && g != e && leq_[g][e]) return false;
  return true;
}

std::vector<int> FiniteSemilattice::atoms() const {
  std::vector<int> out;
  for (int e = 0; e < size(); ++e)
    if (is_atom(e)) out.push_back(e);
  return out;
}

bool Filter::contains(int e) const { return std::binary_search(members.begin(), members.end(), e); }

bool is_cover(const FiniteSemilattice& E, const std::vector<int>& C, int f) {
  if (f == E.zero()) throw ZeroTarget();
  for (int c : C)
    if (!E.leq(c, f)) return false;
  for (int g = 0; g < E.size(); ++g) {
    if (g == E.zero() || !E.leq(g, f)) continue;
    bool meets = std::any_of(C.begin(), C.end(), [&](int c) { return !E.perp(g, c); });
    if (!meets) return false;
  }
  return true;
}

int tight_leq_witness(const FiniteSemilattice& E, int e, int f) {
  for (int g = 0; g < E.size(); ++g)
    if (g != E.zero() && E.leq(g, e) && E.perp(g, f)) return g;
  return -1;
}

bool tight_leq(const FiniteSemilattice& E, int e, int f) { return tight_leq_witness(E, e, f) < 0; }

bool tight_equiv(const FiniteSemilattice& E, int e, int f) { return tight_leq(E, e, f) && tight_leq(E, f, e); }

Filter principal_filter(const FiniteSemilattice& E, int m) {
  if (m == E.zero()) throw PreconditionFailed("the principal up-set of zero is not a filter");
  Filter xi;
  xi.minimum = m;
  for (int e = 0; e < E.size(); ++e)
    if (E.leq(m, e)) xi.members.push_back(e);
  xi.ultra = E.is_atom(m);
  return xi;
}

bool is_filter(const FiniteSemilattice& E, const std::vector<int>& members) {
  if (members.empty()) return false;
  std::vector<bool> in(E.size(), false);
  for (int e : members) in[e] = true;
  if (in[E.zero()]) return false;
  for (int e : members) {
    for (int f : members)
      if (!in[E.meet(e, f)]) return false;
    for (int f = 0; f < E.size(); ++f)
      if (E.leq(e, f) && !in[f]) return false;
  }
  return true;
}

std::vector<Filter> filters(const FiniteSemilattice& E) {
  std::vector<Filter> out;
  for (int m = 0; m < E.size(); ++m)
    if (m != E.zero()) out.push_back(principal_filter(E, m));
  return out;
}

bool is_tight_filter(const FiniteSemilattice& E, const Filter& xi) {
  for (int f : xi.members) {
    std::vector<int> avoiding;
    for (int e = 0; e < E.size(); ++e)
      if (e != E.zero() && E.leq(e, f) && !xi.contains(e)) avoiding.push_back(e);
    if (is_cover(E, avoiding, f)) return false;
  }
  return true;
}

TightSpectrum tight_spectrum(const FiniteSemilattice& E) {
  TightSpectrum sp;
  for (auto& xi : filters(E)) {
    const bool tight = is_tight_filter(E, xi);
    // Finite semilattices have no tight filters beyond the ultra-filters.
    ensure(tight == xi.ultra, "tight filters coincide with ultra-filters");
    if (tight) sp.points.push_back(std::move(xi));
  }
  const int p = sp.size();
  sp.order.assign(p, std::vector<bool>(p, false));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      sp.order[i][j] = std::includes(sp.points[j].members.begin(), sp.points[j].members.end(),
                                     sp.points[i].members.begin(), sp.points[i].members.end());
  sp.d_sets.assign(E.size(), {});
  sp.point_of_min.assign(E.size(), -1);
  for (int i = 0; i < p; ++i) {
    sp.point_of_min[sp.points[i].minimum] = i;
    for (int e : sp.points[i].members) sp.d_sets[e].push_back(i);
  }
  return sp;
}

std::string format_set(const FiniteSemilattice& E, const std::vector<int>& elements) {
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ",";
    out += E.name(elements[i]);
  }
  return out + "}";
}

}  // namespace tightforge
