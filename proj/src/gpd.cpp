#include "tightforge/gpd.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tightforge/hom.hpp"
#include "tightforge/tlk.hpp"

namespace tightforge {

namespace {

std::string tuple_of(const std::vector<std::string>& names, std::initializer_list<int> idx) {
  std::string out = "(";
  bool first = true;
  for (int i : idx) {
    if (!first) out += ", ";
    out += names[i];
    first = false;
  }
  return out + ")";
}

}  // namespace

// ---- FiniteOrderedGroupoid ---------------------------------------------------

FiniteOrderedGroupoid FiniteOrderedGroupoid::validate(std::vector<std::string> names, std::vector<int> source,
                                                      std::vector<int> range, Table compose,
                                                      std::vector<int> inverse, Relation order) {
  const int n = static_cast<int>(names.size());
  if (static_cast<int>(source.size()) != n || static_cast<int>(range.size()) != n ||
      static_cast<int>(inverse.size()) != n || static_cast<int>(compose.size()) != n ||
      static_cast<int>(order.size()) != n)
    throw InvalidStructure("groupoid tables have inconsistent sizes", "");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(compose[a].size()) != n || static_cast<int>(order[a].size()) != n)
      throw InvalidStructure("groupoid table row has wrong length", tuple_of(names, {a}));
    for (int v : {source[a], range[a], inverse[a]})
      if (v < 0 || v >= n) throw InvalidStructure("arrow reference out of range", tuple_of(names, {a}));
    for (int b = 0; b < n; ++b)
      if (compose[a][b] < -1 || compose[a][b] >= n)
        throw InvalidStructure("composition entry out of range", tuple_of(names, {a, b}));
  }
  {
    std::set<std::string> seen;
    for (const auto& s : names)
      if (!seen.insert(s).second) throw InvalidStructure("duplicate arrow name", "(" + s + ")");
  }
  for (int a = 0; a < n; ++a) {
    if (source[source[a]] != source[a]) throw InvalidStructure("source is not a unit", tuple_of(names, {a, source[a]}));
    if (source[range[a]] != range[a]) throw InvalidStructure("range is not a unit", tuple_of(names, {a, range[a]}));
    if (source[a] == a && range[a] != a) throw InvalidStructure("unit with distinct range", tuple_of(names, {a}));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const bool composable = source[a] == range[b];
      const int c = compose[a][b];
      if (composable && c < 0) throw InvalidStructure("composition missing", tuple_of(names, {a, b}));
      if (!composable && c >= 0)
        throw InvalidStructure("composition defined on a non-composable pair", tuple_of(names, {a, b, c}));
      if (c >= 0 && (source[c] != source[b] || range[c] != range[a]))
        throw InvalidStructure("composition has wrong endpoints", tuple_of(names, {a, b, c}));
    }
  for (int a = 0; a < n; ++a)
    if (compose[range[a]][a] != a || compose[a][source[a]] != a)
      throw InvalidStructure("unit is not an identity", tuple_of(names, {a}));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (compose[a][b] < 0) continue;
      for (int c = 0; c < n; ++c) {
        if (compose[b][c] < 0) continue;
        if (compose[compose[a][b]][c] != compose[a][compose[b][c]])
          throw InvalidStructure("not associative", tuple_of(names, {a, b, c}));
      }
    }
  for (int a = 0; a < n; ++a) {
    const int i = inverse[a];
    if (compose[a][i] != range[a] || compose[i][a] != source[a])
      throw InvalidStructure("inverse does not invert", tuple_of(names, {a, i}));
  }
  for (int a = 0; a < n; ++a) {
    if (!order[a][a]) throw InvalidStructure("order not reflexive", tuple_of(names, {a}));
    for (int b = 0; b < n; ++b) {
      if (a != b && order[a][b] && order[b][a]) throw InvalidStructure("order not antisymmetric", tuple_of(names, {a, b}));
      if (!order[a][b]) continue;
      for (int c = 0; c < n; ++c)
        if (order[b][c] && !order[a][c]) throw InvalidStructure("order not transitive", tuple_of(names, {a, b, c}));
    }
  }

  FiniteOrderedGroupoid G;
  G.names_ = std::move(names);
  G.source_ = std::move(source);
  G.range_ = std::move(range);
  G.compose_ = std::move(compose);
  G.inverse_ = std::move(inverse);
  G.order_ = std::move(order);
  for (int a = 0; a < n; ++a)
    if (G.source_[a] == a) G.units_.push_back(a);
  return G;
}

int FiniteOrderedGroupoid::find(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == label) return i;
  return -1;
}

bool FiniteOrderedGroupoid::trivial_order() const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (a != b && order_[a][b]) return false;
  return true;
}

// ---- actions and germs -------------------------------------------------------

void SemigroupAction::validate() const {
  const auto& S = *semigroup;
  const int P = size();
  if (static_cast<int>(theta.size()) != S.size()) throw InvalidStructure("action table has wrong size", "");
  for (int s = 0; s < S.size(); ++s) {
    std::set<int> image;
    for (int x = 0; x < P; ++x) {
      const int y = theta[s][x];
      if (y >= P) throw InvalidStructure("action image out of range", "(" + S.name(s) + ")");
      if (y >= 0 && !image.insert(y).second)
        throw InvalidStructure("action map not injective", "(" + S.name(s) + ", " + point_names[x] + ")");
    }
  }
  for (int x = 0; x < P; ++x)
    if (theta[S.zero()][x] >= 0) throw InvalidStructure("zero acts nontrivially", "(" + point_names[x] + ")");
  for (int s = 0; s < S.size(); ++s)
    for (int t = 0; t < S.size(); ++t)
      for (int x = 0; x < P; ++x) {
        const int tx = theta[t][x];
        const int lhs = tx >= 0 ? theta[s][tx] : -1;
        if (lhs != theta[S.mul(s, t)][x])
          throw InvalidStructure("action not multiplicative",
                                 "(" + S.name(s) + ", " + S.name(t) + ", " + point_names[x] + ")");
      }
  for (int x = 0; x < P; ++x) {
    bool covered = false;
    for (int s = 0; s < S.size() && !covered; ++s) covered = theta[s][x] >= 0;
    if (!covered) throw InvalidStructure("point outside every domain", "(" + point_names[x] + ")");
  }
}

int GermGroupoid::arrow_of(int s, int x) const {
  auto it = index.find({semigroup->mul(s, min_idempotent[x]), x});
  return it == index.end() ? -1 : it->second;
}

SemigroupAction canonical_action(const InverseSemigroupPtr& Sp) {
  const auto& S = *Sp;
  const auto& E = S.idempotents();
  SemigroupAction act;
  act.semigroup = Sp;
  const auto sp = tight_spectrum(E);
  for (const auto& xi : sp.points) act.point_names.push_back(S.name(S.from_e(xi.minimum)));
  act.order = sp.order;
  act.theta.assign(S.size(), std::vector<int>(sp.size(), -1));
  for (int s = 0; s < S.size(); ++s) {
    const int d = S.to_e(S.dom(s));
    for (int x = 0; x < sp.size(); ++x) {
      const auto& xi = sp.points[x];
      if (!xi.contains(d)) continue;
      std::vector<bool> generated(E.size(), false);
      for (int e : xi.members) {
        const int g = S.to_e(S.mul(s, S.from_e(e), S.star(s)));
        for (int f = 0; f < E.size(); ++f)
          if (E.leq(g, f)) generated[f] = true;
      }
      std::vector<int> members;
      for (int f = 0; f < E.size(); ++f)
        if (generated[f]) members.push_back(f);
      int image = -1;
      for (int y = 0; y < sp.size(); ++y)
        if (sp.points[y].members == members) image = y;
      ensure(image >= 0, "the canonical action maps tight filters to tight filters");
      act.theta[s][x] = image;
    }
  }
  act.validate();
  return act;
}

GermGroupoid germ_groupoid(const SemigroupAction& act) {
  const auto& S = *act.semigroup;
  const int P = act.size();
  GermGroupoid gg;
  gg.semigroup = act.semigroup;
  gg.min_idempotent.assign(P, -1);
  for (int x = 0; x < P; ++x) {
    int m = -1;
    for (int e : S.idempotent_list())
      if (act.in_domain(e, x)) m = m < 0 ? e : S.mul(m, e);
    ensure(m >= 0 && act.in_domain(m, x), "each point has a least idempotent neighbourhood");
    gg.min_idempotent[x] = m;
  }
  for (int x = 0; x < P; ++x) {
    std::set<int> reps;
    for (int s = 0; s < S.size(); ++s)
      if (act.in_domain(s, x)) reps.insert(S.mul(s, gg.min_idempotent[x]));
    for (int u : reps) gg.germ.emplace_back(u, x);
  }
  const int n = static_cast<int>(gg.germ.size());
  for (int a = 0; a < n; ++a) gg.index[gg.germ[a]] = a;
  gg.unit_of_point.assign(P, -1);
  for (int x = 0; x < P; ++x) gg.unit_of_point[x] = gg.index.at({gg.min_idempotent[x], x});

  std::vector<std::string> names(n);
  std::vector<int> source(n), range(n), inverse(n);
  Table compose(n, std::vector<int>(n, -1));
  Relation order(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    const auto [u, x] = gg.germ[a];
    const int y = act.theta[u][x];
    names[a] = "[" + S.name(u) + "," + act.point_names[x] + "]";
    source[a] = gg.unit_of_point[x];
    range[a] = gg.unit_of_point[y];
    inverse[a] = gg.index.at({S.mul(S.star(u), gg.min_idempotent[y]), y});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto [u, y] = gg.germ[a];
      const auto [v, x] = gg.germ[b];
      if (act.theta[v][x] != y) continue;
      compose[a][b] = gg.index.at({S.mul(S.mul(u, v), gg.min_idempotent[x]), x});
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto [u, x] = gg.germ[a];
      const auto [v, y] = gg.germ[b];
      if (!act.order[x][y]) continue;
      for (int s = 0; s < S.size(); ++s)
        if (act.in_domain(s, x) && act.in_domain(s, y) && S.mul(s, gg.min_idempotent[x]) == u &&
            S.mul(s, gg.min_idempotent[y]) == v) {
          order[a][b] = true;
          break;
        }
    }
  gg.delta.assign(S.size(), {});
  for (int s = 0; s < S.size(); ++s) {
    for (int x = 0; x < P; ++x)
      if (act.in_domain(s, x)) gg.delta[s].push_back(gg.arrow_of(s, x));
    std::sort(gg.delta[s].begin(), gg.delta[s].end());
  }
  gg.groupoid = std::make_shared<const FiniteOrderedGroupoid>(FiniteOrderedGroupoid::validate(
      std::move(names), std::move(source), std::move(range), std::move(compose), std::move(inverse), std::move(order)));
  return gg;
}

TightGroupoid tight_groupoid(const InverseSemigroupPtr& S) {
  TightGroupoid tg;
  tg.semigroup = S;
  tg.spectrum = tight_spectrum(S->idempotents());
  tg.action = canonical_action(S);
  tg.germs = germ_groupoid(tg.action);
  const auto& G = tg.groupoid();
  ensure(check_re_axioms(G).all(), "tight groupoids are RE-groupoids");
  // Singletons are open: {[u, x]} is the fundamental slice of u cut down to
  // the source fibre of x, so the germ topology is discrete.
  for (int a = 0; a < G.size(); ++a) {
    const auto [u, x] = tg.germs.germ[a];
    ArrowSet fibre;
    for (int b : tg.delta(u))
      if (G.source(b) == G.source(a)) fibre.push_back(b);
    ensure(fibre == ArrowSet{a}, "germ topology is discrete");
  }
  for (int s = 0; s < S->size(); ++s)
    ensure(set_source(G, tg.delta(s)) == [&] {
      ArrowSet units;
      for (int x : tg.spectrum.d_sets[S->to_e(S->dom(s))]) units.push_back(tg.germs.unit_of_point[x]);
      std::sort(units.begin(), units.end());
      return units;
    }(), "the source of a fundamental slice is the matching D-set");
  return tg;
}

// ---- slices --------------------------------------------------------------------

ArrowSet set_product(const FiniteOrderedGroupoid& G, const ArrowSet& U, const ArrowSet& V) {
  ArrowSet out;
  for (int a : U)
    for (int b : V)
      if (int c = G.compose(a, b); c >= 0) out.push_back(c);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ArrowSet set_inverse(const FiniteOrderedGroupoid& G, const ArrowSet& U) {
  ArrowSet out;
  for (int a : U) out.push_back(G.inverse(a));
  std::sort(out.begin(), out.end());
  return out;
}

ArrowSet set_source(const FiniteOrderedGroupoid& G, const ArrowSet& U) {
  ArrowSet out;
  for (int a : U) out.push_back(G.source(a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ArrowSet set_range(const FiniteOrderedGroupoid& G, const ArrowSet& U) {
  ArrowSet out;
  for (int a : U) out.push_back(G.range(a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_bisection(const FiniteOrderedGroupoid& G, const ArrowSet& A) {
  return set_source(G, A).size() == A.size() && set_range(G, A).size() == A.size();
}

bool is_up_set(const FiniteOrderedGroupoid& G, const ArrowSet& A) {
  for (int a : A)
    for (int b = 0; b < G.size(); ++b)
      if (G.leq(a, b) && !std::binary_search(A.begin(), A.end(), b)) return false;
  return true;
}

bool is_up_slice(const FiniteOrderedGroupoid& G, const ArrowSet& A) { return is_bisection(G, A) && is_up_set(G, A); }

Slice slice_product(const Slice& U, const Slice& V) {
  if (U.groupoid != V.groupoid) throw PreconditionFailed("slices belong to different groupoids");
  return Slice{U.groupoid, set_product(*U.groupoid, U.arrows, V.arrows)};
}

Slice slice_inverse(const Slice& U) { return Slice{U.groupoid, set_inverse(*U.groupoid, U.arrows)}; }

namespace {

bool slice_less(const ArrowSet& a, const ArrowSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<ArrowSet> up_slices(const FiniteOrderedGroupoid& G, const Limits& limits) {
  if (static_cast<std::size_t>(G.size()) > limits.max_arrows)
    throw SizeCapExceeded("up-slice enumeration (arrows)", G.size(), limits.max_arrows);
  std::vector<ArrowSet> out;
  std::vector<bool> used_source(G.size(), false), used_range(G.size(), false);
  ArrowSet current;
  auto rec = [&](auto&& self, int a) -> void {
    if (a == G.size()) {
      if (is_up_set(G, current)) out.push_back(current);
      return;
    }
    self(self, a + 1);
    if (!used_source[G.source(a)] && !used_range[G.range(a)]) {
      used_source[G.source(a)] = used_range[G.range(a)] = true;
      current.push_back(a);
      self(self, a + 1);
      current.pop_back();
      used_source[G.source(a)] = used_range[G.range(a)] = false;
    }
  };
  rec(rec, 0);
  if (out.size() > limits.max_elements) throw SizeCapExceeded("up-slice enumeration (slices)", out.size(), limits.max_elements);
  std::sort(out.begin(), out.end(), slice_less);
  return out;
}

std::string slice_name(const FiniteOrderedGroupoid& G, const ArrowSet& A) {
  std::string out = "{";
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (i) out += "|";
    out += G.name(A[i]);
  }
  return out + "}";
}

int SliceSemigroup::find(const ArrowSet& A) const {
  auto it = index.find(A);
  return it == index.end() ? -1 : it->second;
}

SliceSemigroup slice_semigroup(const FiniteOrderedGroupoid& G, std::vector<ArrowSet> slices) {
  std::sort(slices.begin(), slices.end(), slice_less);
  slices.erase(std::unique(slices.begin(), slices.end()), slices.end());
  SliceSemigroup out;
  out.slices = std::move(slices);
  const int n = static_cast<int>(out.slices.size());
  for (int i = 0; i < n; ++i) out.index[out.slices[i]] = i;
  ensure(out.find({}) >= 0, "the slice family contains the empty slice");
  std::vector<std::string> names;
  Table product(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    names.push_back(slice_name(G, out.slices[i]));
    for (int j = 0; j < n; ++j) {
      product[i][j] = out.find(set_product(G, out.slices[i], out.slices[j]));
      ensure(product[i][j] >= 0, "the slice family is closed under products");
    }
  }
  out.semigroup = std::make_shared<const FiniteInverseSemigroup>(
      FiniteInverseSemigroup::validate(std::move(names), std::move(product), out.find({})));
  for (int i = 0; i < n; ++i)
    ensure(out.slices[out.semigroup->star(i)] == set_inverse(G, out.slices[i]), "the star of a slice is its inverse");
  return out;
}

SliceSemigroup generated_slice_semigroup(const FiniteOrderedGroupoid& G, const std::vector<ArrowSet>& generators,
                                         const Limits& limits) {
  std::set<ArrowSet> seen;
  std::vector<ArrowSet> elems;
  auto add = [&](const ArrowSet& A) {
    if (seen.insert(A).second) {
      elems.push_back(A);
      if (elems.size() > limits.max_elements)
        throw SizeCapExceeded("generated slice semigroup", elems.size(), limits.max_elements);
    }
  };
  add({});
  for (const auto& g : generators) {
    add(g);
    add(set_inverse(G, g));
  }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      add(set_product(G, elems[i], elems[j]));
      add(set_product(G, elems[j], elems[i]));
    }
  return slice_semigroup(G, std::move(elems));
}

Envelope tight_envelope(const InverseSemigroupPtr& S, const Limits& limits) {
  auto gt = tight_groupoid(S);
  auto cpl = slice_semigroup(gt.groupoid(), up_slices(gt.groupoid(), limits));
  std::vector<int> rho(S->size());
  for (int s = 0; s < S->size(); ++s) {
    rho[s] = cpl.find(gt.delta(s));
    ensure(rho[s] >= 0, "fundamental slices are up-slices");
  }
  Envelope env{std::move(gt), std::move(cpl), SemigroupHom{}};
  env.rho = SemigroupHom::make(S, env.cpl.semigroup, std::move(rho));
  ensure(check_consonance(env.rho).is_consonance, "the fundamental map into the envelope is a consonance");
  return env;
}

// ---- ordered groupoid axioms -------------------------------------------------

REReport check_re_axioms(const FiniteOrderedGroupoid& G) {
  REReport r;
  const int n = G.size();
  const auto& names = G.names();
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (G.leq(a, b)) pairs.emplace_back(a, b);

  for (auto [a, b] : pairs)
    if (!G.leq(G.inverse(a), G.inverse(b))) {
      r.inversion_monotone = false;
      r.inversion_witness = tuple_of(names, {a, b});
      break;
    }
  for (auto [g1, g2] : pairs) {
    if (!r.composition_monotone) break;
    for (auto [d1, d2] : pairs) {
      const int lhs = G.compose(g1, d1), rhs = G.compose(g2, d2);
      if (lhs >= 0 && rhs >= 0 && !G.leq(lhs, rhs)) {
        r.composition_monotone = false;
        r.composition_witness = tuple_of(names, {g1, g2, d1, d2});
        break;
      }
    }
  }
  auto restriction = [&](bool by_source, bool& ok, std::string& witness) {
    for (int g = 0; g < n && ok; ++g) {
      const int end = by_source ? G.source(g) : G.range(g);
      for (int x : G.units()) {
        if (!G.leq(end, x)) continue;
        int count = 0;
        for (int d = 0; d < n; ++d)
          if (G.leq(g, d) && (by_source ? G.source(d) : G.range(d)) == x) ++count;
        if (count != 1) {
          ok = false;
          witness = tuple_of(names, {g, x}) + (count == 0 ? " none" : " several");
          break;
        }
      }
    }
  };
  restriction(true, r.source_restriction, r.source_witness);
  restriction(false, r.range_restriction, r.range_witness);
  return r;
}

FiniteOrderedGroupoid ehresmann_re(const FiniteInverseSemigroup& S) {
  std::vector<int> elems, pos(S.size(), -1);
  for (int s = 0; s < S.size(); ++s)
    if (s != S.zero()) {
      pos[s] = static_cast<int>(elems.size());
      elems.push_back(s);
    }
  const int n = static_cast<int>(elems.size());
  std::vector<std::string> names;
  std::vector<int> source(n), range(n), inverse(n);
  Table compose(n, std::vector<int>(n, -1));
  Relation order(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    const int s = elems[a];
    names.push_back(S.name(s));
    source[a] = pos[S.dom(s)];
    range[a] = pos[S.ran(s)];
    inverse[a] = pos[S.star(s)];
    for (int b = 0; b < n; ++b) {
      const int t = elems[b];
      if (S.dom(s) == S.ran(t)) compose[a][b] = pos[S.mul(s, t)];
      order[a][b] = S.leq(t, s);
    }
  }
  return FiniteOrderedGroupoid::validate(std::move(names), std::move(source), std::move(range), std::move(compose),
                                         std::move(inverse), std::move(order));
}

int first_uncovered(const FiniteOrderedGroupoid& G, const std::vector<ArrowSet>& family) {
  std::vector<bool> covered(G.size(), false);
  for (const auto& A : family)
    for (int a : A) covered[a] = true;
  for (int a = 0; a < G.size(); ++a)
    if (!covered[a]) return a;
  return -1;
}

FundamentalSemigroup fundamental_inverse_semigroup(const FiniteOrderedGroupoid& G, const Limits& limits) {
  if (!check_re_axioms(G).all()) throw PreconditionFailed("not an RE-groupoid");
  FundamentalSemigroup out;
  out.slices = slice_semigroup(G, up_slices(G, limits));
  out.uncovered = first_uncovered(G, out.slices.slices);
  out.covers = out.uncovered < 0;
  return out;
}

bool is_groupoid_isomorphism(const FiniteOrderedGroupoid& G, const FiniteOrderedGroupoid& H,
                             const std::vector<int>& map) {
  const int n = G.size();
  if (H.size() != n || static_cast<int>(map.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int a : map) {
    if (a < 0 || a >= n || hit[a]) return false;
    hit[a] = true;
  }
  for (int a = 0; a < n; ++a) {
    if (map[G.inverse(a)] != H.inverse(map[a])) return false;
    if (map[G.source(a)] != H.source(map[a]) || map[G.range(a)] != H.range(map[a])) return false;
    for (int b = 0; b < n; ++b) {
      const int c = G.compose(a, b), d = H.compose(map[a], map[b]);
      if ((c < 0) != (d < 0) || (c >= 0 && map[c] != d)) return false;
      if (G.leq(a, b) != H.leq(map[a], map[b])) return false;
    }
  }
  return true;
}

Reconstruction reconstruct(const GroupoidPtr& Gp, const Limits& limits) {
  const auto& G = *Gp;
  const auto report = check_tight_like_groupoid(G, limits);
  if (!report.tight_like()) throw PreconditionFailed("groupoid is not tight-like");

  Reconstruction rec;
  rec.fundamental = fundamental_inverse_semigroup(G, limits);
  const auto& U = rec.fundamental.slices;
  const auto& units = G.units();
  const int P = static_cast<int>(units.size());
  std::vector<int> point(G.size(), -1);
  for (int i = 0; i < P; ++i) point[units[i]] = i;

  rec.action.semigroup = U.semigroup;
  rec.action.order.assign(P, std::vector<bool>(P, false));
  for (int i = 0; i < P; ++i) {
    rec.action.point_names.push_back(G.name(units[i]));
    for (int j = 0; j < P; ++j) rec.action.order[i][j] = G.leq(units[i], units[j]);
  }
  rec.action.theta.assign(U.semigroup->size(), std::vector<int>(P, -1));
  for (int k = 0; k < U.semigroup->size(); ++k)
    for (int g : U.slices[k]) rec.action.theta[k][point[G.source(g)]] = point[G.range(g)];
  rec.action.validate();
  rec.germs = germ_groupoid(rec.action);

  const auto& H = *rec.germs.groupoid;
  rec.mu.assign(H.size(), -1);
  for (int a = 0; a < H.size(); ++a) {
    const auto [k, x] = rec.germs.germ[a];
    for (int g : U.slices[k])
      if (G.source(g) == units[x]) rec.mu[a] = g;
  }
  rec.iso = is_groupoid_isomorphism(H, G, rec.mu);
  if (!rec.iso) rec.failure = "germ-to-arrow map is not an ordered isomorphism";
  return rec;
}

// ---- isomorphism search --------------------------------------------------------

namespace {

std::vector<int> arrow_signature(const FiniteOrderedGroupoid& G, int a) {
  int same_source = 0, same_range = 0, parallel = 0, below = 0, above = 0;
  for (int b = 0; b < G.size(); ++b) {
    same_source += G.source(b) == G.source(a);
    same_range += G.range(b) == G.range(a);
    parallel += G.source(b) == G.source(a) && G.range(b) == G.range(a);
    below += G.leq(b, a);
    above += G.leq(a, b);
  }
  int period = 0;
  if (G.source(a) == G.range(a)) {
    int x = a;
    period = 1;
    while (x != G.source(a) && period <= G.size()) {
      x = G.compose(x, a);
      ++period;
    }
  }
  return {G.is_unit(a) ? 1 : 0, same_source, same_range, parallel, below, above, period, G.inverse(a) == a ? 1 : 0};
}

}  // namespace

std::optional<std::vector<int>> groupoid_iso_search(const FiniteOrderedGroupoid& G, const FiniteOrderedGroupoid& H,
                                                    const Limits& limits) {
  const int n = G.size();
  if (static_cast<std::size_t>(std::max(n, H.size())) > limits.max_elements)
    throw SizeCapExceeded("groupoid isomorphism search", std::max(n, H.size()), limits.max_elements);
  if (H.size() != n || G.units().size() != H.units().size()) return std::nullopt;
  std::vector<std::vector<int>> sigG(n), sigH(n);
  for (int a = 0; a < n; ++a) {
    sigG[a] = arrow_signature(G, a);
    sigH[a] = arrow_signature(H, a);
  }
  {
    auto sa = sigG, sb = sigH;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<int> img(n, -1), pre(n, -1), assigned;
  auto assign = [&](int a0, int b0, std::vector<int>& trail) {
    std::vector<std::pair<int, int>> work{{a0, b0}};
    while (!work.empty()) {
      auto [a, b] = work.back();
      work.pop_back();
      if (img[a] >= 0) {
        if (img[a] != b) return false;
        continue;
      }
      if (pre[b] >= 0 || sigG[a] != sigH[b]) return false;
      for (int c : assigned) {
        if (G.leq(a, c) != H.leq(b, img[c]) || G.leq(c, a) != H.leq(img[c], b)) return false;
        if ((G.compose(a, c) < 0) != (H.compose(b, img[c]) < 0)) return false;
        if ((G.compose(c, a) < 0) != (H.compose(img[c], b) < 0)) return false;
      }
      img[a] = b;
      pre[b] = a;
      trail.push_back(a);
      assigned.push_back(a);
      work.emplace_back(G.source(a), H.source(b));
      work.emplace_back(G.range(a), H.range(b));
      work.emplace_back(G.inverse(a), H.inverse(b));
      for (std::size_t k = 0; k < assigned.size(); ++k) {
        const int c = assigned[k];
        if (G.compose(a, c) >= 0) work.emplace_back(G.compose(a, c), H.compose(b, img[c]));
        if (G.compose(c, a) >= 0) work.emplace_back(G.compose(c, a), H.compose(img[c], b));
      }
    }
    return true;
  };
  auto undo = [&](std::vector<int>& trail) {
    for (int a : trail) {
      pre[img[a]] = -1;
      img[a] = -1;
    }
    assigned.resize(assigned.size() - trail.size());
    trail.clear();
  };

  std::optional<std::vector<int>> found;
  auto rec = [&](auto&& self, int a) -> void {
    if (found) return;
    while (a < n && img[a] >= 0) ++a;
    if (a == n) {
      if (is_groupoid_isomorphism(G, H, img)) found = img;
      return;
    }
    for (int b = 0; b < n && !found; ++b) {
      if (pre[b] >= 0) continue;
      std::vector<int> trail;
      if (assign(a, b, trail)) self(self, a + 1);
      undo(trail);
    }
  };
  rec(rec, 0);
  return found;
}

// ---- tight quotient --------------------------------------------------------------

TightQuotient tight_quotient(const InverseSemigroupPtr& Sp) {
  const auto& S = *Sp;
  const auto gt = tight_groupoid(Sp);
  std::map<ArrowSet, int> class_of_slice;
  std::vector<int> cls(S.size());
  std::vector<int> rep;
  std::vector<std::string> names;
  for (int s = 0; s < S.size(); ++s) {
    auto [it, fresh] = class_of_slice.emplace(gt.delta(s), static_cast<int>(rep.size()));
    if (fresh) {
      rep.push_back(s);
      names.push_back(S.name(s));
    } else if (S.name(s) < names[it->second]) {
      names[it->second] = S.name(s);
    }
    cls[s] = it->second;
  }
  const int k = static_cast<int>(rep.size());
  Table product(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) product[i][j] = cls[S.mul(rep[i], rep[j])];
  auto Q = std::make_shared<const FiniteInverseSemigroup>(
      FiniteInverseSemigroup::validate(std::move(names), std::move(product), cls[S.zero()]));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      ensure(tight_leq_s(*Q, i, j) == Q->leq(i, j), "the tight quotient is flat");
  return TightQuotient{Q, SemigroupHom::make(Sp, Q, std::move(cls))};
}

}  // namespace tightforge
