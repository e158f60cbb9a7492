// Frozen counts computed by the brute-force oracles, checked against both the
// oracles and the library.

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "oracle.hpp"
#include "tightforge/corpus.hpp"
#include "tightforge/hom.hpp"

namespace tf = tightforge;

namespace {

std::vector<tf::corpus::NamedSemilattice> upto(int n) {
  std::vector<tf::corpus::NamedSemilattice> out;
  for (const auto& e : tf::corpus::semilattices())
    if (e.E->size() <= n) out.push_back(e);
  return out;
}

/// Zero-preserving meet homomorphisms by trying every map.
std::size_t brute_hom_count(const tf::FiniteSemilattice& E, const tf::FiniteSemilattice& F,
                            std::vector<std::vector<int>>* out = nullptr) {
  const int n = E.size(), m = F.size();
  std::vector<int> map(n, 0);
  std::size_t count = 0;
  for (;;) {
    bool ok = map[E.zero()] == F.zero();
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) ok = map[E.table()[a][b]] == F.table()[map[a]][map[b]];
    if (ok) {
      ++count;
      if (out) out->push_back(map);
    }
    int i = 0;
    while (i < n && ++map[i] == m) map[i++] = 0;
    if (i == n) break;
  }
  return count;
}

/// Meet-semilattices with zero on n elements up to isomorphism, by trying
/// every commutative idempotent table with 0 absorbing.
std::size_t brute_semilattice_count(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::vector<int> choice(pairs.size(), 0);
  std::set<std::vector<int>> seen;
  for (;;) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
    for (int a = 1; a < n; ++a) t[a][a] = a;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      t[pairs[k].first][pairs[k].second] = t[pairs[k].second][pairs[k].first] = choice[k];
    bool assoc = true;
    for (int a = 0; a < n && assoc; ++a)
      for (int b = 0; b < n && assoc; ++b)
        for (int c = 0; c < n && assoc; ++c) assoc = t[t[a][b]][c] == t[a][t[b][c]];
    if (assoc) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<int> best;
      do {
        std::vector<int> code(n * n);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) code[perm[a] * n + perm[b]] = perm[t[a][b]];
        if (best.empty() || code < best) best = code;
      } while (std::next_permutation(perm.begin() + 1, perm.end()));
      seen.insert(best);
    }
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == n) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  return seen.size();
}

}  // namespace

TEST(Frozen, SemilatticeCountsByBruteForce) {
  EXPECT_EQ(brute_semilattice_count(1), 1u);
  EXPECT_EQ(brute_semilattice_count(2), 1u);
  EXPECT_EQ(brute_semilattice_count(3), 2u);
  EXPECT_EQ(brute_semilattice_count(4), 5u);
  EXPECT_EQ(brute_semilattice_count(5), 15u);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(tf::corpus::all_semilattices(n).size(), brute_semilattice_count(n));
}

TEST(Frozen, FilterAndTightFilterTotals) {
  std::size_t filters = 0, tight = 0, lib_filters = 0, lib_tight = 0;
  for (const auto& [id, E] : upto(6)) {
    for (const auto& xi : oracle::filters(*E)) {
      ++filters;
      tight += oracle::is_tight_filter(*E, xi);
    }
    lib_filters += tf::filters(*E).size();
    lib_tight += tf::tight_spectrum(*E).size();
  }
  EXPECT_EQ(filters, 345u);
  EXPECT_EQ(tight, 157u);
  EXPECT_EQ(lib_filters, filters);
  EXPECT_EQ(lib_tight, tight);
}

TEST(Frozen, HomCountsAndTightHomCounts) {
  std::size_t homs = 0, tight = 0, consonances = 0, lib_homs = 0, lib_tight = 0, lib_consonances = 0;
  const auto small = upto(4);
  for (const auto& [ida, E] : small)
    for (const auto& [idb, F] : small) {
      std::vector<std::vector<int>> maps;
      homs += brute_hom_count(*E, *F, &maps);
      for (const auto& m : maps) {
        const auto h = tf::SemilatticeHom::make(E, F, m);
        const bool t = oracle::covers_targets(h) && oracle::preserves_covers(h);
        tight += t;
        consonances += oracle::tightly_injective(h) && oracle::tightly_surjective(h);
      }
      for (const auto& h : tf::all_homs(E, F)) {
        ++lib_homs;
        lib_tight += tf::is_tight_hom(h).tight();
        lib_consonances += tf::check_consonance(h).is_consonance;
      }
    }
  EXPECT_EQ(homs, 672u);
  EXPECT_EQ(tight, 239u);
  EXPECT_EQ(consonances, 95u);
  EXPECT_EQ(lib_homs, homs);
  EXPECT_EQ(lib_tight, tight);
  EXPECT_EQ(lib_consonances, consonances);
}

TEST(Frozen, SymmetricInverseMonoidSizes) {
  // Partial bijections of an n-set: sum over k of C(n,k)^2 k!.
  auto brute = [](int n) {
    std::size_t total = 0, binom = 1, fact = 1;
    for (int k = 0; k <= n; ++k) {
      if (k > 0) {
        binom = binom * (n - k + 1) / k;
        fact *= k;
      }
      total += binom * binom * fact;
    }
    return total;
  };
  EXPECT_EQ(brute(2), 7u);
  EXPECT_EQ(brute(3), 34u);
  EXPECT_EQ(tf::corpus::symmetric_inverse_monoid(2)->size(), int(brute(2)));
  EXPECT_EQ(tf::corpus::symmetric_inverse_monoid(3)->size(), int(brute(3)));
}
