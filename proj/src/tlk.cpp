#include "tightforge/tlk.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace tightforge {

FiniteOrderedSpace FiniteOrderedSpace::validate(std::vector<std::string> names, Relation order) {
  const int n = static_cast<int>(names.size());
  if (static_cast<int>(order.size()) != n) throw InvalidStructure("order has wrong number of rows", "");
  {
    std::set<std::string> seen;
    for (const auto& s : names)
      if (!seen.insert(s).second) throw InvalidStructure("duplicate point name", "(" + s + ")");
  }
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(order[x].size()) != n) throw InvalidStructure("order row has wrong length", "(" + names[x] + ")");
    if (!order[x][x]) throw InvalidStructure("order not reflexive", "(" + names[x] + ")");
    for (int y = 0; y < n; ++y) {
      if (x != y && order[x][y] && order[y][x])
        throw InvalidStructure("order not antisymmetric", "(" + names[x] + ", " + names[y] + ")");
      if (!order[x][y]) continue;
      for (int z = 0; z < n; ++z)
        if (order[y][z] && !order[x][z])
          throw InvalidStructure("order not transitive", "(" + names[x] + ", " + names[y] + ", " + names[z] + ")");
    }
  }
  FiniteOrderedSpace X;
  X.names_ = std::move(names);
  X.order_ = std::move(order);
  return X;
}

FiniteOrderedSpace FiniteOrderedSpace::from_spectrum(const FiniteSemilattice& E, const TightSpectrum& sp) {
  std::vector<std::string> names;
  for (const auto& xi : sp.points) names.push_back(E.name(xi.minimum));
  return validate(std::move(names), sp.order);
}

FiniteOrderedSpace FiniteOrderedSpace::units_of(const FiniteOrderedGroupoid& G) {
  const auto& u = G.units();
  std::vector<std::string> names;
  Relation order(u.size(), std::vector<bool>(u.size(), false));
  for (std::size_t i = 0; i < u.size(); ++i) {
    names.push_back(G.name(u[i]));
    for (std::size_t j = 0; j < u.size(); ++j) order[i][j] = G.leq(u[i], u[j]);
  }
  return validate(std::move(names), std::move(order));
}

int FiniteOrderedSpace::find(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == label) return i;
  return -1;
}

std::vector<int> FiniteOrderedSpace::up(int x) const {
  std::vector<int> out;
  for (int y = 0; y < size(); ++y)
    if (order_[x][y]) out.push_back(y);
  return out;
}

SpaceReport check_tight_like_space(const FiniteOrderedSpace& X) {
  SpaceReport r;
  const int n = X.size();
  auto is_up = [&](const std::vector<int>& A) {
    for (int a : A)
      for (int b = 0; b < n; ++b)
        if (X.leq(a, b) && std::find(A.begin(), A.end(), b) == A.end()) return false;
    return true;
  };
  for (int x = 0; x < n && r.upset_neighbourhoods; ++x) {
    // Every subset is compact and open, so [x, inf) is the natural candidate.
    const auto U = X.up(x);
    if (!is_up(U) || std::find(U.begin(), U.end(), x) == U.end()) {
      r.upset_neighbourhoods = false;
      r.neighbourhood_witness = X.name(x);
    }
  }
  for (int x = 0; x < n && r.separated; ++x)
    for (int y = 0; y < n; ++y) {
      if (X.leq(x, y)) continue;
      const auto U = X.up(x);
      if (std::find(U.begin(), U.end(), y) != U.end()) {
        r.separated = false;
        r.separation_witness = "(" + X.name(x) + ", " + X.name(y) + ")";
        break;
      }
    }
  // In the discrete topology the closure of the maximal points is the set of
  // maximal points itself.
  for (int x = 0; x < n; ++x) {
    bool maximal = true;
    for (int y = 0; y < n; ++y)
      if (y != x && X.leq(x, y)) maximal = false;
    if (!maximal) {
      r.maximal_dense = false;
      r.density_witness = X.name(x);
      break;
    }
  }
  r.note = "discrete topology: density of maximal points forces a trivial order";
  return r;
}

UpSetLattice compact_open_upsets(const FiniteOrderedSpace& X, const Limits& limits) {
  const int n = X.size();
  if (n > 64) throw SizeCapExceeded("up-set enumeration (points)", n, 64);
  std::vector<std::uint64_t> above(n, 0), below(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (X.leq(x, y)) {
        above[x] |= std::uint64_t{1} << y;
        below[y] |= std::uint64_t{1} << x;
      }
  std::vector<std::uint64_t> found;
  auto rec = [&](auto&& self, int x, std::uint64_t in, std::uint64_t out) -> void {
    if (x == n) {
      found.push_back(in);
      if (found.size() > limits.max_elements)
        throw SizeCapExceeded("up-set enumeration (up-sets)", found.size(), limits.max_elements);
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << x;
    if ((in | out) & bit) {
      self(self, x + 1, in, out);
      return;
    }
    self(self, x + 1, in, out | below[x]);
    self(self, x + 1, in | above[x], out);
  };
  rec(rec, 0, 0, 0);

  std::vector<std::vector<int>> sets;
  for (auto m : found) {
    std::vector<int> pts;
    for (int x = 0; x < n; ++x)
      if (m >> x & 1) pts.push_back(x);
    sets.push_back(std::move(pts));
  }
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  const int k = static_cast<int>(sets.size());
  std::vector<std::string> names;
  for (const auto& s : sets) {
    std::string name = "{";
    for (std::size_t i = 0; i < s.size(); ++i) name += (i ? "," : "") + X.name(s[i]);
    names.push_back(name + "}");
  }
  Table meet(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<int> both;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(), std::back_inserter(both));
      meet[i][j] = static_cast<int>(std::find(sets.begin(), sets.end(), both) - sets.begin());
    }
  UpSetLattice out;
  out.lattice = std::make_shared<const FiniteSemilattice>(FiniteSemilattice::validate(std::move(names), std::move(meet), 0));
  out.upsets = std::move(sets);

  // On a tight-like space, covers in the semilattice sense are exactly the
  // families whose union is everything; check it on the family of all proper
  // nonzero up-subsets.  Elsewhere (a chain, say) a cover may leave points out.
  if (!check_tight_like_space(X).tight_like()) return out;
  const auto& E = *out.lattice;
  for (int u = 1; u < k; ++u) {
    std::vector<int> family;
    std::vector<bool> covered(n, false);
    for (int v = 1; v < k; ++v)
      if (v != u && E.leq(v, u)) {
        family.push_back(v);
        for (int x : out.upsets[v]) covered[x] = true;
      }
    bool union_eq = true;
    for (int x : out.upsets[u]) union_eq = union_eq && covered[x];
    ensure(is_cover(E, family, u) == union_eq, "semilattice covers of up-sets are unions");
  }
  return out;
}

SpaceDuality space_duality(const FiniteOrderedSpace& X, const Limits& limits) {
  if (!check_tight_like_space(X).tight_like()) throw PreconditionFailed("space is not tight-like");
  SpaceDuality d;
  d.upsets = compact_open_upsets(X, limits);
  const auto& E = *d.upsets.lattice;
  d.spectrum = tight_spectrum(E);
  for (int x = 0; x < X.size(); ++x) {
    Filter xi;
    for (int v = 0; v < E.size(); ++v)
      if (std::binary_search(d.upsets.upsets[v].begin(), d.upsets.upsets[v].end(), x)) xi.members.push_back(v);
    if (!is_filter(E, xi.members) || !is_tight_filter(E, xi)) {
      d.failure = "up-sets containing " + X.name(x) + " do not form a tight filter";
      return d;
    }
    int p = -1;
    for (int i = 0; i < d.spectrum.size(); ++i)
      if (d.spectrum.points[i].members == xi.members) p = i;
    d.phi.push_back(p);
  }
  std::vector<bool> hit(d.spectrum.size(), false);
  for (int p : d.phi) {
    if (p < 0 || hit[p]) {
      d.failure = "point map is not injective";
      return d;
    }
    hit[p] = true;
  }
  if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
    d.failure = "point map is not surjective";
    return d;
  }
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < X.size(); ++y)
      if (X.leq(x, y) != d.spectrum.order[d.phi[x]][d.phi[y]]) {
        d.failure = "point map is not an order-isomorphism at (" + X.name(x) + ", " + X.name(y) + ")";
        return d;
      }
  d.ok = true;
  return d;
}

TightLikeGroupoidReport check_tight_like_groupoid(const FiniteOrderedGroupoid& G, const Limits& limits) {
  TightLikeGroupoidReport r;
  r.re = check_re_axioms(G);
  r.units = check_tight_like_space(FiniteOrderedSpace::units_of(G));
  r.uncovered = first_uncovered(G, up_slices(G, limits));
  r.covered = r.uncovered < 0;
  return r;
}

namespace {

bool refinement_holds(const FiniteOrderedGroupoid& G, const std::vector<ArrowSet>& slices) {
  for (const auto& U : slices)
    for (const auto& V : slices) {
      ArrowSet both;
      std::set_intersection(U.begin(), U.end(), V.begin(), V.end(), std::back_inserter(both));
      for (int g : both) {
        bool found = false;
        for (const auto& W : slices) {
          if (!std::binary_search(W.begin(), W.end(), g)) continue;
          if (std::includes(both.begin(), both.end(), W.begin(), W.end())) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  (void)G;
  return true;
}

void fill_common(RoundTripReport& r, const GroupoidPtr& G, const FundamentalSemigroup& U, const Limits& limits) {
  const auto back = tight_groupoid(U.slices.semigroup);
  r.search_iso = groupoid_iso_search(back.groupoid(), *G, limits).has_value();
  r.mu_iso = reconstruct(G, limits).iso;
  const auto cls = classify(*U.slices.semigroup, limits);
  r.flat = cls.flat;
  r.distributive = cls.distributive;
  r.refinement = refinement_holds(*G, U.slices.slices);
  if (!r.search_iso) r.failure = "Gt(U(G)) is not isomorphic to G";
  else if (!r.mu_iso) r.failure = "germ-to-arrow map is not an isomorphism";
  else if (!r.flat || !r.distributive) r.failure = "U(G) is not flat and distributive";
  else if (!r.refinement) r.failure = "refinement property fails";
}

}  // namespace

RoundTripReport groupoid_duality_roundtrip(const InverseSemigroupPtr& S, const Limits& limits) {
  RoundTripReport r;
  const auto env = tight_envelope(S, limits);
  const auto G = env.gt.germs.groupoid;
  r.tight_like = check_tight_like_groupoid(*G, limits).tight_like();
  if (!r.tight_like) {
    r.failure = "tight groupoid is not tight-like";
    return r;
  }
  const auto U = fundamental_inverse_semigroup(*G, limits);
  r.envelope_iso = *U.slices.semigroup == *env.cpl.semigroup && isomorphic(*U.slices.semigroup, *env.cpl.semigroup);
  fill_common(r, G, U, limits);
  if (!r.envelope_iso) r.failure = "U(Gt(S)) differs from the tight envelope";
  const auto cls = classify(*S, limits);
  if (cls.flat && cls.distributive) {
    r.recovers_semigroup = isomorphic(*S, *U.slices.semigroup);
    if (!*r.recovers_semigroup) r.failure = "flat distributive semigroup not recovered";
  }
  return r;
}

RoundTripReport groupoid_duality_roundtrip(const GroupoidPtr& G, const Limits& limits) {
  RoundTripReport r;
  r.tight_like = check_tight_like_groupoid(*G, limits).tight_like();
  if (!r.tight_like) {
    r.failure = "groupoid is not tight-like";
    return r;
  }
  const auto U = fundamental_inverse_semigroup(*G, limits);
  fill_common(r, G, U, limits);
  return r;
}

}  // namespace tightforge
