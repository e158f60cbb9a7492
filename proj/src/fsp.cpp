#include "tightforge/fsp.hpp"

#include <algorithm>
#include <set>

#include "tightforge/error.hpp"

namespace tightforge {

PlainSemilattice PlainSemilattice::validate(std::vector<std::string> names, Table meet, std::optional<int> zero) {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw InvalidStructure("semilattice is empty", "");
  if (static_cast<int>(meet.size()) != n) throw InvalidStructure("meet table has wrong number of rows", "");
  {
    std::set<std::string> seen;
    for (const auto& s : names)
      if (!seen.insert(s).second) throw InvalidStructure("duplicate element name", "(" + s + ")");
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(meet[a].size()) != n) throw InvalidStructure("meet row has wrong length", "(" + names[a] + ")");
    for (int b : meet[a])
      if (b < 0 || b >= n) throw InvalidStructure("meet entry out of range", "(" + names[a] + ")");
  }
  if (zero && (*zero < 0 || *zero >= n)) throw InvalidStructure("zero out of range", "");
  for (int a = 0; a < n; ++a) {
    if (meet[a][a] != a) throw InvalidStructure("meet not idempotent", "(" + names[a] + ")");
    for (int b = 0; b < n; ++b) {
      if (meet[a][b] != meet[b][a]) throw InvalidStructure("meet not commutative", "(" + names[a] + ", " + names[b] + ")");
      for (int c = 0; c < n; ++c)
        if (meet[meet[a][b]][c] != meet[a][meet[b][c]])
          throw InvalidStructure("meet not associative", "(" + names[a] + ", " + names[b] + ", " + names[c] + ")");
    }
  }
  PlainSemilattice E;
  int m = 0;
  for (int a = 1; a < n; ++a) m = meet[m][a];
  E.minimum_ = m;
  E.names_ = std::move(names);
  E.meet_ = std::move(meet);
  E.zero_ = zero;
  return E;
}

PlainSemilattice PlainSemilattice::from(const FiniteSemilattice& E) {
  return validate(E.names(), E.table(), E.zero());
}

int PlainSemilattice::find(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == label) return i;
  return -1;
}

std::vector<Character> full_spectrum(const PlainSemilattice& E) {
  const int n = E.size();
  std::vector<Character> out;
  for (int m = 0; m < n; ++m) {
    Character c;
    c.minimum = m;
    for (int f = 0; f < n; ++f)
      if (E.leq(m, f)) c.support.push_back(f);
    c.kills_zero = E.zero() && !E.leq(m, *E.zero());
    out.push_back(std::move(c));
  }
  // Each support is a nonempty up- and meet-closed subset with minimum m, and
  // distinct minima give distinct supports.
  for (const auto& c : out) {
    for (int a : c.support)
      for (int b = 0; b < n; ++b) {
        const bool in_b = std::binary_search(c.support.begin(), c.support.end(), b);
        ensure(!E.leq(a, b) || in_b, "character support is up-closed");
        if (in_b)
          ensure(std::binary_search(c.support.begin(), c.support.end(), E.meet(a, b)),
                 "character support is meet-closed");
      }
    ensure(c.support.front() == c.minimum || E.leq(c.minimum, c.support.front()), "support minimum");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) ensure(!(out[i] == out[j]), "characters have distinct supports");
  return out;
}

PlainHom PlainHom::make(PlainSemilatticePtr dom, PlainSemilatticePtr cod, std::vector<int> map) {
  if (!dom || !cod) throw PreconditionFailed("homomorphism needs a domain and a codomain");
  if (static_cast<int>(map.size()) != dom->size()) throw InvalidStructure("map has wrong length", "");
  for (int v : map)
    if (v < 0 || v >= cod->size()) throw InvalidStructure("map value out of range", "");
  for (int a = 0; a < dom->size(); ++a)
    for (int b = 0; b < dom->size(); ++b)
      if (map[dom->meet(a, b)] != cod->meet(map[a], map[b]))
        throw InvalidStructure("map not multiplicative", "(" + dom->name(a) + ", " + dom->name(b) + ")");
  return PlainHom{std::move(dom), std::move(cod), std::move(map)};
}

PlainHom PlainHom::identity(const PlainSemilatticePtr& E) {
  std::vector<int> id(E->size());
  for (int i = 0; i < E->size(); ++i) id[i] = i;
  return PlainHom{E, E, std::move(id)};
}

std::vector<PlainHom> all_plain_homs(const PlainSemilatticePtr& dom, const PlainSemilatticePtr& cod) {
  const int n = dom->size(), k = cod->size();
  std::vector<PlainHom> out;
  std::vector<int> map(n, -1);
  auto consistent = [&](int upto) {
    for (int a = 0; a <= upto; ++a)
      for (int b = 0; b <= upto; ++b) {
        const int m = dom->meet(a, b);
        if (map[m] >= 0 && map[m] != cod->meet(map[a], map[b])) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(PlainHom::make(dom, cod, map));
      return;
    }
    for (int v = 0; v < k; ++v) {
      map[i] = v;
      if (consistent(i)) self(self, i + 1);
    }
    map[i] = -1;
  };
  rec(rec, 0);
  return out;
}

FullDual full_dual(const PlainHom& h) {
  FullDual d;
  d.dom_spectrum = full_spectrum(*h.dom);
  d.cod_spectrum = full_spectrum(*h.cod);
  for (const auto& psi : d.cod_spectrum) {
    std::vector<int> pulled;
    for (int e = 0; e < h.dom->size(); ++e)
      if (std::binary_search(psi.support.begin(), psi.support.end(), h(e))) pulled.push_back(e);
    const bool nonzero = !pulled.empty();
    d.in_domain.push_back(nonzero);
    int idx = -1;
    if (nonzero) {
      for (std::size_t i = 0; i < d.dom_spectrum.size(); ++i)
        if (d.dom_spectrum[i].support == pulled) idx = static_cast<int>(i);
      ensure(idx >= 0, "composite of a character with a homomorphism is a character");
    }
    d.hat.push_back(idx);
  }
  return d;
}

IsoCriterion full_dual_iso_criterion(const PlainHom& h) {
  IsoCriterion r;
  const int n = h.dom->size();
  std::vector<bool> hit(h.cod->size(), false);
  bool injective = true;
  for (int a = 0; a < n; ++a) {
    if (hit[h(a)]) injective = false;
    hit[h(a)] = true;
  }
  const bool surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  r.iso = injective && surjective;

  const auto d = full_dual(h);
  const bool total = std::all_of(d.in_domain.begin(), d.in_domain.end(), [](bool b) { return b; });
  std::vector<bool> reached(d.dom_spectrum.size(), false);
  bool hat_injective = true;
  for (int p : d.hat) {
    if (p < 0) continue;
    if (reached[p]) hat_injective = false;
    reached[p] = true;
  }
  const bool hat_surjective = std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
  r.total_and_bijective = total && hat_injective && hat_surjective;
  r.total_and_homeomorphism = r.total_and_bijective;

  if (!r.iso) r.witness = !injective ? "h is not injective" : "h is not surjective";
  if (!total) {
    for (std::size_t y = 0; y < d.in_domain.size(); ++y)
      if (!d.in_domain[y]) {
        r.witness += "; character at " + h.cod->name(d.cod_spectrum[y].minimum) + " vanishes on the image";
        break;
      }
  } else if (!hat_injective) {
    r.witness += "; dual map not injective";
  } else if (!hat_surjective) {
    r.witness += "; dual map not surjective";
  }
  if (!r.witness.empty() && r.witness.rfind("; ", 0) == 0) r.witness.erase(0, 2);
  ensure(r.iso == r.total_and_bijective && r.iso == r.total_and_homeomorphism,
         "isomorphism criterion via the full dual map");
  return r;
}

}  // namespace tightforge
