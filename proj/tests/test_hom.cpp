#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tightforge/corpus.hpp"
#include "tightforge/hom.hpp"

namespace tf = tightforge;
using tf::corpus::chain;
using tf::corpus::diamond;
using tf::corpus::fan;

namespace {

tf::SemilatticeHom inclusion() {
  const auto D = diamond();
  return tf::SemilatticeHom::make(chain(2), D, {D->find("0"), D->find("1")});
}

tf::InverseSemigroupPtr as_semigroup(const tf::SemilatticePtr& E) {
  return std::make_shared<const tf::FiniteInverseSemigroup>(tf::FiniteInverseSemigroup::from_semilattice(*E));
}

}  // namespace

TEST(SemilatticeHom, MakeRejectsNonHomomorphisms) {
  const auto D = diamond();
  // Both atoms to the top: their meet 0 would have to map to 1.
  EXPECT_THROW(tf::SemilatticeHom::make(D, chain(2), {0, 1, 1, 1}), tf::InvalidStructure);
  // Zero not preserved.
  EXPECT_THROW(tf::SemilatticeHom::make(chain(2), chain(2), {1, 1}), tf::InvalidStructure);
}

TEST(SemilatticeHom, InclusionIntoTheDiamond) {
  const auto h = inclusion();
  const auto r = tf::is_tight_hom(h);
  EXPECT_TRUE(r.tight());
  EXPECT_TRUE(tf::is_tightly_injective(h));
  const auto s = tf::tightly_surjective(h);
  EXPECT_FALSE(s.holds);
  EXPECT_EQ(h.cod->name(s.target), "e");
  const auto d = tf::dual_map(h);
  EXPECT_TRUE(d.surjective);
  EXPECT_FALSE(d.injective);
  EXPECT_FALSE(d.order_injective);
  EXPECT_EQ(d.hat, (std::vector<int>{0, 0}));
  EXPECT_FALSE(tf::check_consonance(h).is_consonance);
  EXPECT_THROW(tf::check_inverse(h), tf::PreconditionFailed);
}

TEST(SemilatticeHom, NonTightHomHasNoDualMap) {
  // fan2 -> diamond sending a to e and b to 0 never reaches f.
  const auto D = diamond();
  const auto F = fan(2);
  const auto h = tf::SemilatticeHom::make(F, D, {D->find("0"), D->find("e"), D->find("0")});
  const auto r = tf::is_tight_hom(h);
  EXPECT_FALSE(r.covers_targets);
  EXPECT_EQ(D->name(r.target_witness), "f");
  EXPECT_THROW(tf::dual_map(h), tf::NotTight);
  EXPECT_EQ(tf::kernel(h), (std::vector<int>{0, 2}));
}

TEST(SemilatticeHom, CollapsingTheChainIsAConsonance) {
  // chain3 -> chain2 sending both nonzero elements to 1.
  const auto h = tf::SemilatticeHom::make(chain(3), chain(2), {0, 1, 1});
  const auto c = tf::check_consonance(h);
  EXPECT_TRUE(c.is_consonance);
  const auto inv = tf::check_inverse(h);
  EXPECT_EQ(inv, (std::vector<int>{0}));
}

TEST(SemilatticeHom, IdentityIsAConsonance) {
  for (const auto& [id, E] : tf::corpus::semilattices()) {
    if (E->size() > 5) continue;
    SCOPED_TRACE(id);
    const auto h = tf::SemilatticeHom::identity(E);
    EXPECT_TRUE(tf::is_tight_hom(h).tight());
    EXPECT_TRUE(tf::check_consonance(h).is_consonance);
  }
}

TEST(SemilatticeHom, HomCountsBetweenSmallSemilattices) {
  // Zero-preserving homs fan2 -> fan2: a and b go to orthogonal images,
  // {0,a,b} each, with a,b not both on the same atom: 1 + 2 + 2 + 2 = 7.
  EXPECT_EQ(tf::all_homs(fan(2), fan(2)).size(), 7u);
  // chain3 -> chain3: monotone maps fixing 0: 0<=h(1)<=h(2): 6.
  EXPECT_EQ(tf::all_homs(chain(3), chain(3)).size(), 6u);
}

TEST(SemilatticeHom, ExhaustiveHomsMatchOracles) {
  const auto corpus = tf::corpus::semilattices();
  for (const auto& [ida, E] : corpus)
    for (const auto& [idb, F] : corpus) {
      if (E->size() > 4 || F->size() > 4) continue;
      for (const auto& h : tf::all_homs(E, F)) {
        const auto r = tf::is_tight_hom(h);
        EXPECT_EQ(r.covers_targets, oracle::covers_targets(h)) << ida << "->" << idb;
        EXPECT_EQ(r.preserves_covers, oracle::preserves_covers(h)) << ida << "->" << idb;
        EXPECT_EQ(tf::is_tightly_injective(h), oracle::tightly_injective(h)) << ida << "->" << idb;
        EXPECT_EQ(tf::is_tightly_surjective(h), oracle::tightly_surjective(h)) << ida << "->" << idb;
      }
    }
}

TEST(SemigroupHom, I2AndB2AreConsonant) {
  const auto I2 = tf::corpus::symmetric_inverse_monoid(2);
  const auto B2 = tf::corpus::brandt(2);
  const auto v = tf::decide_consonant(I2, B2);
  EXPECT_TRUE(v.consonant) << v.reason;
  EXPECT_TRUE(tf::check_consonance(v.h1).is_consonance);
  EXPECT_TRUE(tf::check_consonance(v.h2).is_consonance);
  EXPECT_EQ(v.groupoid_iso.size(), 4u);
}

TEST(SemigroupHom, GroupsOfDifferentOrderAreNotConsonant) {
  const auto v = tf::decide_consonant(tf::corpus::cyclic_with_zero(3), tf::corpus::cyclic_with_zero(2));
  EXPECT_FALSE(v.consonant);
  EXPECT_FALSE(v.reason.empty());
}

TEST(SemigroupHom, InclusionOfB2IntoI2IsAConsonance) {
  const auto I2 = tf::corpus::symmetric_inverse_monoid(2);
  const auto B2 = tf::corpus::brandt(2);
  int consonances = 0;
  for (const auto& h : tf::all_homs(B2, I2)) {
    const auto c = tf::check_consonance(h);
    EXPECT_TRUE(c.has_restriction);
    if (!c.is_consonance) continue;
    ++consonances;
    const auto m = tf::induced_groupoid_map(h);
    EXPECT_TRUE(m.injective && m.surjective && m.functor);
  }
  EXPECT_GT(consonances, 0);
}

TEST(SemigroupHom, FactorThroughTheEnvelope) {
  const auto S = tf::corpus::brandt(3);
  const auto env = tf::tight_envelope(S);
  const auto f = tf::factor_through(env.rho);
  EXPECT_EQ(compose(f.k, env.rho).map, f.envelope.rho.map);
  EXPECT_TRUE(tf::check_consonance(f.k).is_consonance);
}

TEST(SemigroupHom, FactorRequiresAConsonance) {
  const auto S = as_semigroup(chain(2));
  const auto D = diamond();
  const auto T = as_semigroup(D);
  const auto h = tf::SemigroupHom::make(S, T, {T->find("0"), T->find("1")});
  EXPECT_THROW(tf::factor_through(h), tf::PreconditionFailed);
}

TEST(TightQuotient, ChainCollapsesToTwoElements) {
  const auto S = as_semigroup(chain(3));
  const auto q = tf::tight_quotient(S);
  EXPECT_EQ(q.quotient->size(), 2);
  EXPECT_EQ(q.map(S->find("1")), q.map(S->find("2")));
  EXPECT_TRUE(tf::check_consonance(q.map).is_consonance);
}

TEST(TightQuotient, FlatSemigroupsAreUnchanged) {
  const auto S = tf::corpus::symmetric_inverse_monoid(2);
  EXPECT_EQ(tf::tight_quotient(S).quotient->size(), S->size());
}

TEST(Kernel, SemigroupKernelIsReportedSeparately) {
  const auto I2 = tf::corpus::symmetric_inverse_monoid(2);
  const auto h = tf::SemigroupHom::identity(I2);
  EXPECT_EQ(tf::kernel(h), std::vector<int>{I2->zero()});
}
