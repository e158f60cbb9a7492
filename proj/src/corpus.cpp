#include "tightforge/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tightforge/error.hpp"
#include "tightforge/morphism.hpp"

namespace tightforge::corpus {

namespace {

std::string letter_name(int i) { return i == 0 ? "0" : std::string(1, static_cast<char>('a' + i - 1)); }

/// Builds the meet table of a poset with bottom 0 given as leq[a][b], or
/// returns an empty table when some pair has no greatest lower bound.
Table meets_of(const Relation& leq) {
  const int n = static_cast<int>(leq.size());
  Table meet(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int best = -1;
      for (int c = 0; c < n; ++c) {
        if (!leq[c][a] || !leq[c][b]) continue;
        bool greatest = true;
        for (int d = 0; d < n; ++d)
          if (leq[d][a] && leq[d][b] && !leq[d][c]) greatest = false;
        if (greatest) best = c;
      }
      if (best < 0) return {};
      meet[a][b] = best;
    }
  return meet;
}

/// Smallest bit encoding of the order over relabelings fixing 0.
std::vector<bool> canonical_code(const Relation& leq) {
  const int n = static_cast<int>(leq.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    code.reserve(n * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) code.push_back(leq[perm[a]][perm[b]]);
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

SemilatticePtr make_semilattice(std::vector<std::string> names, Table meet) {
  return std::make_shared<const FiniteSemilattice>(FiniteSemilattice::validate(std::move(names), std::move(meet), 0));
}

SemilatticePtr from_order(const Relation& leq, std::vector<std::string> names) {
  return make_semilattice(std::move(names), meets_of(leq));
}

InverseSemigroupPtr share(FiniteInverseSemigroup S) { return std::make_shared<const FiniteInverseSemigroup>(std::move(S)); }

}  // namespace

SemilatticePtr chain(int n) {
  if (n < 1) throw PreconditionFailed("chain needs at least one element");
  std::vector<std::string> names;
  Table meet(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) meet[a][b] = std::min(a, b);
  }
  return make_semilattice(std::move(names), std::move(meet));
}

SemilatticePtr diamond() {
  return make_semilattice({"0", "e", "f", "1"}, {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}});
}

SemilatticePtr fan(int atoms) {
  const int n = atoms + 1;
  std::vector<std::string> names;
  Table meet(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a) {
    names.push_back(letter_name(a));
    meet[a][a] = a;
  }
  return make_semilattice(std::move(names), std::move(meet));
}

std::vector<SemilatticePtr> all_semilattices(int n) {
  if (n < 1) throw PreconditionFailed("semilattice needs at least one element");
  // Posets with bottom 0 in which every element is added after everything
  // below it: element k chooses its strict down-set among 0..k-1.
  std::vector<Relation> posets;
  Relation start(n, std::vector<bool>(n, false));
  start[0][0] = true;
  for (int b = 1; b < n; ++b) start[0][b] = true;
  auto rec = [&](auto&& self, int k, Relation& leq) -> void {
    if (k == n) {
      posets.push_back(leq);
      return;
    }
    // Enumerate down-closed subsets of {1..k-1}; 0 is always below.
    const int m = k - 1;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      bool closed = true;
      for (int i = 0; i < m && closed; ++i)
        if (mask >> i & 1)
          for (int j = 0; j < m; ++j)
            if (leq[j + 1][i + 1] && !(mask >> j & 1)) closed = false;
      if (!closed) continue;
      for (int i = 0; i < m; ++i) leq[i + 1][k] = mask >> i & 1;
      leq[k][k] = true;
      self(self, k + 1, leq);
      for (int i = 0; i < m; ++i) leq[i + 1][k] = false;
      leq[k][k] = false;
    }
  };
  rec(rec, 1, start);

  std::set<std::vector<bool>> seen;
  std::vector<std::pair<std::vector<bool>, Relation>> reps;
  for (const auto& leq : posets) {
    if (meets_of(leq).empty()) continue;
    auto code = canonical_code(leq);
    if (seen.insert(code).second) reps.emplace_back(std::move(code), leq);
  }
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(letter_name(i));
  std::vector<SemilatticePtr> out;
  for (const auto& [code, leq] : reps) out.push_back(from_order(leq, names));
  return out;
}

std::vector<NamedSemilattice> semilattices() {
  std::vector<NamedSemilattice> out;
  for (int n = 1; n <= 6; ++n) {
    const auto all = all_semilattices(n);
    for (std::size_t i = 0; i < all.size(); ++i)
      out.push_back({"sl" + std::to_string(n) + "_" + std::to_string(i), all[i]});
  }
  out.push_back({"chain7", chain(7)});
  out.push_back({"fan6", fan(6)});
  // Zero, three atoms, and the three pairwise joins of atoms as maximal
  // elements above them.
  {
    Relation leq(7, std::vector<bool>(7, false));
    for (int a = 0; a < 7; ++a) leq[0][a] = leq[a][a] = true;
    const int tops[3][2] = {{1, 2}, {2, 3}, {1, 3}};
    for (int t = 0; t < 3; ++t)
      for (int i = 0; i < 2; ++i) leq[tops[t][i]][4 + t] = true;
    std::vector<std::string> names;
    for (int i = 0; i < 7; ++i) names.push_back(letter_name(i));
    out.push_back({"crown7", from_order(leq, names)});
  }
  return out;
}

InverseSemigroupPtr symmetric_inverse_monoid(int n, std::size_t cap) {
  std::vector<PartialMap> gens;
  if (n >= 2) {
    PartialMap swap(n);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    gens.push_back(swap);
    PartialMap cycle(n);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gens.push_back(cycle);
  }
  PartialMap partial(n);
  std::iota(partial.begin(), partial.end(), 0);
  partial[n - 1] = -1;
  gens.push_back(partial);
  PartialMap id(n);
  std::iota(id.begin(), id.end(), 0);
  gens.push_back(id);
  return share(from_partial_bijections(n, gens, cap));
}

InverseSemigroupPtr brandt(int n) {
  std::vector<PartialMap> gens;
  for (int i = 0; i + 1 < n; ++i) {
    PartialMap g(n, -1);
    g[i] = i + 1;
    gens.push_back(g);
  }
  if (n == 1) gens.push_back(PartialMap{0});
  return share(from_partial_bijections(n, gens));
}

InverseSemigroupPtr cyclic_with_zero(int n) {
  PartialMap cycle(n);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return share(from_partial_bijections(n, {cycle}));
}

PartialMap random_partial_bijection(std::mt19937_64& rng, int degree) {
  PartialMap perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = degree - 1; i > 0; --i) std::swap(perm[i], perm[rng() % static_cast<std::uint64_t>(i + 1)]);
  for (int i = 0; i < degree; ++i)
    if (rng() % 3 == 0) perm[i] = -1;
  return perm;
}

std::vector<std::pair<std::vector<PartialMap>, InverseSemigroupPtr>> random_closures(std::uint64_t seed, int count,
                                                                                      int degree, std::size_t cap) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::vector<PartialMap>, InverseSemigroupPtr>> out;
  const int max_draws = 1000 * std::max(count, 1);
  for (int draw = 0; draw < max_draws && static_cast<int>(out.size()) < count; ++draw) {
    std::vector<PartialMap> gens{random_partial_bijection(rng, degree), random_partial_bijection(rng, degree)};
    try {
      out.emplace_back(gens, share(from_partial_bijections(degree, gens, cap)));
    } catch (const SizeCapExceeded&) {
    }
  }
  return out;
}

std::vector<NamedSemigroup> semigroups(std::uint64_t seed) {
  std::vector<NamedSemigroup> out;
  out.push_back({"I_2", symmetric_inverse_monoid(2)});
  out.push_back({"B_2", brandt(2)});
  out.push_back({"B_3", brandt(3)});
  out.push_back({"Z2_0", cyclic_with_zero(2)});
  out.push_back({"Z3_0", cyclic_with_zero(3)});
  out.push_back({"chain3", share(FiniteInverseSemigroup::from_semilattice(*chain(3)))});
  out.push_back({"diamond", share(FiniteInverseSemigroup::from_semilattice(*diamond()))});
  out.push_back({"fan2", share(FiniteInverseSemigroup::from_semilattice(*fan(2)))});
  // Degree three, swap of the first two points together with the idempotent
  // on them: the symmetric inverse monoid on two points sitting inside three.
  out.push_back({"I_2_in_3", share(from_partial_bijections(3, {{1, 0, -1}, {0, -1, -1}}, 12))});
  // Keep random closures with at least four elements that are new up to
  // isomorphism.
  std::vector<InverseSemigroupPtr> picked;
  for (const auto& [gens, S] : random_closures(seed, 40, 3, 12)) {
    if (S->size() < 4) continue;
    if (std::any_of(picked.begin(), picked.end(), [&](const auto& T) { return isomorphic(*S, *T); })) continue;
    picked.push_back(S);
    if (picked.size() == 6) break;
  }
  for (std::size_t i = 0; i < picked.size(); ++i) out.push_back({"rand" + std::to_string(i), picked[i]});
  return out;
}

InverseSemigroupPtr relabeled(const FiniteInverseSemigroup& S, const std::vector<int>& perm, const std::string& prefix) {
  const int n = S.size();
  std::vector<std::string> names(n);
  Table product(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    names[perm[i]] = prefix + std::to_string(perm[i]);
    for (int j = 0; j < n; ++j) product[perm[i]][perm[j]] = perm[S.mul(i, j)];
  }
  return share(FiniteInverseSemigroup::validate(std::move(names), std::move(product), perm[S.zero()]));
}

SemilatticePtr relabeled(const FiniteSemilattice& E, const std::vector<int>& perm, const std::string& prefix) {
  const int n = E.size();
  std::vector<std::string> names(n);
  Table meet(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    names[perm[i]] = prefix + std::to_string(perm[i]);
    for (int j = 0; j < n; ++j) meet[perm[i]][perm[j]] = perm[E.meet(i, j)];
  }
  return std::make_shared<const FiniteSemilattice>(
      FiniteSemilattice::validate(std::move(names), std::move(meet), perm[E.zero()]));
}

GroupoidPtr non_re_groupoid() {
  // Arrows: x, y (units), a : x -> y, b = a^-1.
  const int x = 0, y = 1, a = 2, b = 3;
  Table compose(4, std::vector<int>(4, -1));
  compose[x][x] = x;
  compose[y][y] = y;
  compose[a][x] = a;
  compose[y][a] = a;
  compose[b][y] = b;
  compose[x][b] = b;
  compose[a][b] = y;
  compose[b][a] = x;
  Relation order(4, std::vector<bool>(4, false));
  for (int i = 0; i < 4; ++i) order[i][i] = true;
  order[x][y] = true;
  return std::make_shared<const FiniteOrderedGroupoid>(FiniteOrderedGroupoid::validate(
      {"x", "y", "a", "b"}, {x, y, x, y}, {x, y, y, x}, std::move(compose), {x, y, b, a}, std::move(order)));
}

std::vector<NamedSpace> spaces() {
  std::vector<NamedSpace> out;
  auto discrete = [](int n) {
    std::vector<std::string> names;
    Relation leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) {
      names.push_back("p" + std::to_string(i));
      leq[i][i] = true;
    }
    return FiniteOrderedSpace::validate(std::move(names), std::move(leq));
  };
  out.push_back({"empty", discrete(0)});
  out.push_back({"point", discrete(1)});
  out.push_back({"antichain3", discrete(3)});
  out.push_back({"antichain5", discrete(5)});
  out.push_back({"chain2", FiniteOrderedSpace::validate({"p", "q"}, {{true, true}, {false, true}})});
  out.push_back({"vee3", FiniteOrderedSpace::validate(
                             {"p", "q", "r"}, {{true, true, true}, {false, true, false}, {false, false, true}})});
  return out;
}

}  // namespace tightforge::corpus
