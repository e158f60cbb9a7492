#include <gtest/gtest.h>

#include "tightforge/corpus.hpp"
#include "tightforge/gpd.hpp"
#include "tightforge/isg.hpp"

namespace tf = tightforge;

namespace {

tf::InverseSemigroupPtr I2() { return tf::corpus::symmetric_inverse_monoid(2); }

int element(const tf::FiniteInverseSemigroup& S, const tf::PartialMap& m) {
  return S.find(tf::partial_map_name(m));
}

}  // namespace

TEST(TightGroupoid, OfI2IsThePairGroupoidOnTwoPoints) {
  const auto S = I2();
  const auto T = tf::tight_groupoid(S);
  const auto& G = T.groupoid();
  EXPECT_EQ(G.size(), 4);
  EXPECT_EQ(G.units().size(), 2u);
  EXPECT_TRUE(G.trivial_order());
  EXPECT_EQ(T.delta(S->zero()).size(), 0u);
  const auto& id = T.delta(element(*S, {0, 1}));
  ASSERT_EQ(id.size(), 2u);
  for (int a : id) EXPECT_TRUE(G.is_unit(a));
  const auto& swap = T.delta(element(*S, {1, 0}));
  ASSERT_EQ(swap.size(), 2u);
  for (int a : swap) {
    EXPECT_FALSE(G.is_unit(a));
    EXPECT_EQ(G.compose(G.inverse(a), a), G.source(a));
  }
}

TEST(TightGroupoid, OfTheChainHasOnePoint) {
  const auto S = std::make_shared<const tf::FiniteInverseSemigroup>(
      tf::FiniteInverseSemigroup::from_semilattice(*tf::corpus::chain(3)));
  const auto T = tf::tight_groupoid(S);
  EXPECT_EQ(T.groupoid().size(), 1);
  EXPECT_EQ(T.delta(S->find("1")), T.delta(S->find("2")));
}

TEST(TightGroupoid, OfCyclicGroupWithZeroIsTheGroup) {
  const auto T = tf::tight_groupoid(tf::corpus::cyclic_with_zero(3));
  EXPECT_EQ(T.groupoid().size(), 3);
  EXPECT_EQ(T.groupoid().units().size(), 1u);
}

TEST(TightGroupoid, CanonicalActionSatisfiesActionAxioms) {
  for (const auto& [id, S] : tf::corpus::semigroups(7)) {
    SCOPED_TRACE(id);
    const auto a = tf::canonical_action(S);
    EXPECT_NO_THROW(a.validate());
    EXPECT_EQ(a.size(), static_cast<int>(S->idempotents().atoms().size()));
  }
}

TEST(Slices, UpSlicesOfThePairGroupoid) {
  const auto T = tf::tight_groupoid(I2());
  const auto& G = T.groupoid();
  const auto slices = tf::up_slices(G);
  EXPECT_EQ(slices.size(), 7u);
  EXPECT_TRUE(slices.front().empty());
  for (const auto& U : slices) EXPECT_TRUE(tf::is_up_slice(G, U));
  EXPECT_FALSE(tf::is_bisection(G, {0, 1, 2, 3}));
  EXPECT_THROW(tf::up_slices(G, tf::Limits{64, 3}), tf::SizeCapExceeded);
}

TEST(Slices, ProductOfSlicesFromDifferentGroupoidsIsRejected) {
  const auto G = tf::tight_groupoid(I2()).germs.groupoid;
  const auto H = tf::tight_groupoid(tf::corpus::brandt(2)).germs.groupoid;
  EXPECT_THROW(tf::slice_product(tf::Slice{G, {}}, tf::Slice{H, {}}), tf::PreconditionFailed);
  const int x = G->units().front();
  const auto U = tf::slice_product(tf::Slice{G, {x}}, tf::Slice{G, {x}});
  EXPECT_EQ(U.arrows, tf::ArrowSet{x});
}

TEST(Envelope, OfI2HasSevenSlicesAndRhoIsBijective) {
  const auto S = I2();
  const auto env = tf::tight_envelope(S);
  EXPECT_EQ(env.cpl.semigroup->size(), 7);
  std::vector<bool> hit(7, false);
  for (int x : env.rho.map) hit[x] = true;
  for (bool b : hit) EXPECT_TRUE(b);
  EXPECT_TRUE(tf::isomorphic(*env.cpl.semigroup, *S));
}

TEST(Envelope, OfB2AddsTheMissingJoin) {
  // Gt(B_2) is the pair groupoid as well, so the envelope is I_2.
  const auto env = tf::tight_envelope(tf::corpus::brandt(2));
  EXPECT_EQ(env.cpl.semigroup->size(), 7);
  EXPECT_TRUE(tf::isomorphic(*env.cpl.semigroup, *I2()));
}

TEST(OrderedGroupoid, EhresmannGroupoidHasNontrivialOrder) {
  const auto R = tf::ehresmann_re(*I2());
  EXPECT_EQ(R.size(), 6);
  EXPECT_FALSE(R.trivial_order());
  EXPECT_TRUE(tf::check_re_axioms(R).all());
}

TEST(OrderedGroupoid, NegativeFixtureFailsRestriction) {
  const auto r = tf::check_re_axioms(*tf::corpus::non_re_groupoid());
  EXPECT_TRUE(r.inversion_monotone);
  EXPECT_TRUE(r.composition_monotone);
  EXPECT_FALSE(r.source_restriction);
  EXPECT_FALSE(r.range_restriction);
  EXPECT_FALSE(r.source_witness.empty());
}

TEST(OrderedGroupoid, ValidateRejectsBadInverse) {
  tf::Table compose{{0, -1}, {-1, 1}};
  tf::Relation order{{true, false}, {false, true}};
  EXPECT_NO_THROW(tf::FiniteOrderedGroupoid::validate({"x", "y"}, {0, 1}, {0, 1}, compose, {0, 1}, order));
  EXPECT_THROW(tf::FiniteOrderedGroupoid::validate({"x", "y"}, {0, 1}, {0, 1}, compose, {1, 0}, order),
               tf::InvalidStructure);
}

TEST(OrderedGroupoid, IsoSearchMatchesPairGroupoids) {
  const auto T = tf::tight_groupoid(I2());
  const auto& G = T.groupoid();
  const auto H = tf::tight_groupoid(tf::corpus::brandt(2));
  const auto iso = tf::groupoid_iso_search(G, H.groupoid());
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(tf::is_groupoid_isomorphism(G, H.groupoid(), *iso));
  const auto K = tf::tight_groupoid(tf::corpus::cyclic_with_zero(2));
  EXPECT_FALSE(tf::groupoid_iso_search(G, K.groupoid()).has_value());
}

TEST(Reconstruction, GermsOfUpSlicesRecoverTheGroupoid) {
  for (const auto& [id, S] : tf::corpus::semigroups(7)) {
    SCOPED_TRACE(id);
    const auto G = tf::tight_groupoid(S).germs.groupoid;
    const auto r = tf::reconstruct(G);
    EXPECT_TRUE(r.iso) << r.failure;
    EXPECT_TRUE(r.fundamental.covers);
    EXPECT_TRUE(tf::is_groupoid_isomorphism(*r.germs.groupoid, *G, r.mu));
  }
}

TEST(Reconstruction, RequiresATightLikeGroupoid) {
  EXPECT_THROW(tf::reconstruct(tf::corpus::non_re_groupoid()), tf::PreconditionFailed);
}
