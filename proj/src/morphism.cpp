#include "tightforge/morphism.hpp"

#include <algorithm>
#include <functional>

namespace tightforge {

SemilatticeHom SemilatticeHom::make(SemilatticePtr dom, SemilatticePtr cod, std::vector<int> map) {
  if (static_cast<int>(map.size()) != dom->size()) throw InvalidStructure("hom map has wrong length", "");
  for (int x : map)
    if (x < 0 || x >= cod->size()) throw InvalidStructure("hom image out of range", "");
  if (map[dom->zero()] != cod->zero()) throw InvalidStructure("zero not preserved", "(" + dom->name(dom->zero()) + ")");
  for (int e = 0; e < dom->size(); ++e)
    for (int f = 0; f < dom->size(); ++f)
      if (map[dom->meet(e, f)] != cod->meet(map[e], map[f]))
        throw InvalidStructure("not multiplicative", "(" + dom->name(e) + ", " + dom->name(f) + ")");
  return SemilatticeHom{std::move(dom), std::move(cod), std::move(map)};
}

SemilatticeHom SemilatticeHom::identity(const SemilatticePtr& E) {
  std::vector<int> id(E->size());
  for (int i = 0; i < E->size(); ++i) id[i] = i;
  return SemilatticeHom{E, E, std::move(id)};
}

SemigroupHom SemigroupHom::make(InverseSemigroupPtr dom, InverseSemigroupPtr cod, std::vector<int> map) {
  if (static_cast<int>(map.size()) != dom->size()) throw InvalidStructure("hom map has wrong length", "");
  for (int x : map)
    if (x < 0 || x >= cod->size()) throw InvalidStructure("hom image out of range", "");
  if (map[dom->zero()] != cod->zero()) throw InvalidStructure("zero not preserved", "(" + dom->name(dom->zero()) + ")");
  for (int s = 0; s < dom->size(); ++s)
    for (int t = 0; t < dom->size(); ++t)
      if (map[dom->mul(s, t)] != cod->mul(map[s], map[t]))
        throw InvalidStructure("not multiplicative", "(" + dom->name(s) + ", " + dom->name(t) + ")");
  return SemigroupHom{std::move(dom), std::move(cod), std::move(map)};
}

SemigroupHom SemigroupHom::identity(const InverseSemigroupPtr& S) {
  std::vector<int> id(S->size());
  for (int i = 0; i < S->size(); ++i) id[i] = i;
  return SemigroupHom{S, S, std::move(id)};
}

SemilatticeHom SemigroupHom::restrict_to_idempotents() const {
  const auto& E = dom->idempotents();
  std::vector<int> m(E.size());
  for (int e = 0; e < E.size(); ++e) m[e] = cod->to_e(map[dom->from_e(e)]);
  return SemilatticeHom{dom->idempotents_ptr(), cod->idempotents_ptr(), std::move(m)};
}

SemigroupHom compose(const SemigroupHom& g, const SemigroupHom& h) {
  if (h.cod.get() != g.dom.get() && !(*h.cod == *g.dom)) throw PreconditionFailed("composable homomorphisms");
  std::vector<int> m(h.dom->size());
  for (int s = 0; s < h.dom->size(); ++s) m[s] = g.map[h.map[s]];
  return SemigroupHom{h.dom, g.cod, std::move(m)};
}

namespace {

/// Greedy generating set: scan in index order, keep anything not yet generated.
std::vector<int> generating_set(const FiniteInverseSemigroup& S) {
  std::vector<bool> reached(S.size(), false);
  std::vector<int> members;
  std::vector<int> gens;
  auto add = [&](int s) {
    std::vector<int> work{s};
    while (!work.empty()) {
      int a = work.back();
      work.pop_back();
      if (reached[a]) continue;
      reached[a] = true;
      members.push_back(a);
      work.push_back(S.star(a));
      for (int b : members) {
        work.push_back(S.mul(a, b));
        work.push_back(S.mul(b, a));
      }
    }
  };
  add(S.zero());
  for (int s = 0; s < S.size(); ++s)
    if (!reached[s]) {
      gens.push_back(s);
      add(s);
    }
  return gens;
}

/// Element invariants preserved by isomorphisms.
std::vector<int> signature(const FiniteInverseSemigroup& S, int s) {
  int below = 0, above = 0, dom_below = 0, power = 1, x = s;
  for (int t = 0; t < S.size(); ++t) {
    below += S.leq(t, s);
    above += S.leq(s, t);
    dom_below += S.leq(t, S.dom(s));
  }
  while (power < 2 * S.size() && S.mul(x, s) != s) {
    x = S.mul(x, s);
    ++power;
  }
  return {S.is_idempotent(s) ? 1 : 0, s == S.zero() ? 1 : 0, below, above, dom_below, power,
          S.star(s) == s ? 1 : 0, S.dom(s) == S.ran(s) ? 1 : 0};
}

/// Backtracking over images of a generating set; every full assignment that
/// respects products (and injectivity when asked) is handed to `emit`, which
/// returns false to stop the search.
void search(const FiniteInverseSemigroup& S, const FiniteInverseSemigroup& T, bool bijective,
            const std::function<bool(const std::vector<int>&)>& emit) {
  if (bijective && S.size() != T.size()) return;
  const auto gens = generating_set(S);
  std::vector<std::vector<int>> sigS, sigT;
  if (bijective) {
    for (int s = 0; s < S.size(); ++s) sigS.push_back(signature(S, s));
    for (int t = 0; t < T.size(); ++t) sigT.push_back(signature(T, t));
  }

  std::vector<int> img(S.size(), -1);
  std::vector<int> pre(T.size(), -1);
  std::vector<int> assigned;

  // Assign s -> t and close under products and star.  Returns false on a
  // conflict; the trail records what to undo.
  auto assign = [&](int s0, int t0, std::vector<int>& trail) {
    std::vector<std::pair<int, int>> work{{s0, t0}};
    while (!work.empty()) {
      auto [s, t] = work.back();
      work.pop_back();
      if (img[s] >= 0) {
        if (img[s] != t) return false;
        continue;
      }
      if (bijective && (pre[t] >= 0 || sigS[s] != sigT[t])) return false;
      img[s] = t;
      if (bijective) pre[t] = s;
      trail.push_back(s);
      assigned.push_back(s);
      work.emplace_back(S.star(s), T.star(t));
      for (std::size_t k = 0; k < assigned.size(); ++k) {
        int a = assigned[k];
        work.emplace_back(S.mul(s, a), T.mul(t, img[a]));
        work.emplace_back(S.mul(a, s), T.mul(img[a], t));
      }
    }
    return true;
  };
  auto undo = [&](std::vector<int>& trail) {
    for (int s : trail) {
      if (bijective) pre[img[s]] = -1;
      img[s] = -1;
    }
    assigned.resize(assigned.size() - trail.size());
    trail.clear();
  };

  std::vector<int> base_trail;
  if (!assign(S.zero(), T.zero(), base_trail)) return;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (stop) return;
    if (k == gens.size()) {
      stop = !emit(img);
      return;
    }
    const int g = gens[k];
    if (img[g] >= 0) {
      self(self, k + 1);
      return;
    }
    for (int t = 0; t < T.size() && !stop; ++t) {
      std::vector<int> trail;
      if (assign(g, t, trail)) self(self, k + 1);
      undo(trail);
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<SemigroupHom> all_homs(const InverseSemigroupPtr& dom, const InverseSemigroupPtr& cod) {
  std::vector<SemigroupHom> out;
  search(*dom, *cod, false, [&](const std::vector<int>& m) {
    out.push_back(SemigroupHom{dom, cod, m});
    return true;
  });
  return out;
}

std::vector<SemilatticeHom> all_homs(const SemilatticePtr& dom, const SemilatticePtr& cod) {
  const auto S = FiniteInverseSemigroup::from_semilattice(*dom);
  const auto T = FiniteInverseSemigroup::from_semilattice(*cod);
  std::vector<SemilatticeHom> out;
  search(S, T, false, [&](const std::vector<int>& m) {
    out.push_back(SemilatticeHom{dom, cod, m});
    return true;
  });
  return out;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteInverseSemigroup& S, const FiniteInverseSemigroup& T) {
  std::optional<std::vector<int>> found;
  search(S, T, true, [&](const std::vector<int>& m) {
    found = m;
    return false;
  });
  return found;
}

bool isomorphic(const FiniteInverseSemigroup& S, const FiniteInverseSemigroup& T) {
  return find_isomorphism(S, T).has_value();
}

}  // namespace tightforge
