#include <gtest/gtest.h>

#include "tightforge/corpus.hpp"
#include "tightforge/tlk.hpp"

namespace tf = tightforge;

namespace {

tf::FiniteOrderedSpace space(const std::string& id) {
  for (const auto& [name, X] : tf::corpus::spaces())
    if (name == id) return X;
  throw std::runtime_error("no space " + id);
}

}  // namespace

TEST(OrderedSpace, ValidateRejectsNonPartialOrders) {
  EXPECT_THROW(tf::FiniteOrderedSpace::validate({"p", "q"}, {{true, true}, {true, true}}), tf::InvalidStructure);
  EXPECT_THROW(tf::FiniteOrderedSpace::validate({"p"}, {{false}}), tf::InvalidStructure);
}

TEST(OrderedSpace, AntichainsAreTightLike) {
  EXPECT_TRUE(tf::check_tight_like_space(space("antichain3")).tight_like());
  EXPECT_TRUE(tf::check_tight_like_space(space("empty")).tight_like());
}

TEST(OrderedSpace, ChainOfTwoIsNotTightLike) {
  const auto r = tf::check_tight_like_space(space("chain2"));
  EXPECT_FALSE(r.tight_like());
  EXPECT_THROW(tf::space_duality(space("chain2")), tf::PreconditionFailed);
}

TEST(OrderedSpace, UpSetsOfTheVee) {
  // p below q and r: up-sets {}, {q}, {r}, {q,r}, {p,q,r}.
  const auto U = tf::compact_open_upsets(space("vee3"));
  EXPECT_EQ(U.lattice->size(), 5);
  EXPECT_EQ(U.lattice->name(U.lattice->zero()), "{}");
  EXPECT_EQ(U.upsets.back(), (std::vector<int>{0, 1, 2}));
}

TEST(OrderedSpace, UpSetCountIsCapped) {
  EXPECT_EQ(tf::compact_open_upsets(space("antichain5")).lattice->size(), 32);
  EXPECT_THROW(tf::compact_open_upsets(space("antichain5"), tf::Limits{16, 16}), tf::SizeCapExceeded);
}

TEST(OrderedSpace, SpaceDualityOnAntichain) {
  const auto d = tf::space_duality(space("antichain3"));
  EXPECT_TRUE(d.ok) << d.failure;
  EXPECT_EQ(d.spectrum.size(), 3);
  EXPECT_EQ(d.phi.size(), 3u);
}

TEST(OrderedSpace, SpectraOfSemilatticesAreTightLike) {
  for (const auto& [id, E] : tf::corpus::semilattices()) {
    SCOPED_TRACE(id);
    const auto X = tf::FiniteOrderedSpace::from_spectrum(*E, tf::tight_spectrum(*E));
    EXPECT_TRUE(tf::check_tight_like_space(X).tight_like());
    EXPECT_TRUE(tf::space_duality(X).ok);
  }
}

TEST(GroupoidDuality, RoundTripOfI2RecoversTheSemigroup) {
  const auto r = tf::groupoid_duality_roundtrip(tf::corpus::symmetric_inverse_monoid(2));
  EXPECT_TRUE(r.ok()) << r.failure;
  ASSERT_TRUE(r.recovers_semigroup.has_value());
  EXPECT_TRUE(*r.recovers_semigroup);
}

TEST(GroupoidDuality, NonFlatInputIsNotRecovered) {
  // B_2 is flat but lacks joins, so it is not compared with the envelope.
  const auto r = tf::groupoid_duality_roundtrip(tf::corpus::brandt(2));
  EXPECT_TRUE(r.ok()) << r.failure;
  EXPECT_FALSE(r.recovers_semigroup.has_value());
}

TEST(GroupoidDuality, TightGroupoidsAreTightLike) {
  for (const auto& [id, S] : tf::corpus::semigroups(7)) {
    SCOPED_TRACE(id);
    EXPECT_TRUE(tf::check_tight_like_groupoid(tf::tight_groupoid(S).groupoid()).tight_like());
  }
}

TEST(GroupoidDuality, NegativeFixtureIsNotTightLike) {
  const auto r = tf::check_tight_like_groupoid(*tf::corpus::non_re_groupoid());
  EXPECT_FALSE(r.tight_like());
  EXPECT_FALSE(r.re.all());
}
