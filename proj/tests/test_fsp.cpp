#include <gtest/gtest.h>

#include <set>

#include "tightforge/corpus.hpp"
#include "tightforge/fsp.hpp"

namespace tf = tightforge;

namespace {

tf::PlainSemilatticePtr plain_chain(int n) {
  const auto C = tf::corpus::chain(n);
  return std::make_shared<const tf::PlainSemilattice>(tf::PlainSemilattice::validate(C->names(), C->table()));
}

}  // namespace

TEST(PlainSemilattice, ValidateWithoutZero) {
  const auto E = plain_chain(3);
  EXPECT_FALSE(E->zero().has_value());
  EXPECT_EQ(E->minimum(), 0);
  EXPECT_THROW(tf::PlainSemilattice::validate({"a", "b"}, {{0, 1}, {0, 1}}), tf::InvalidStructure);
}

TEST(PlainSemilattice, FromKeepsTheZero) {
  const auto E = tf::PlainSemilattice::from(*tf::corpus::diamond());
  ASSERT_TRUE(E.zero().has_value());
  EXPECT_EQ(*E.zero(), 0);
}

TEST(FullSpectrum, OneCharacterPerElement) {
  // Every principal up-set is a character when no zero must be killed.
  const auto E = plain_chain(3);
  const auto sp = tf::full_spectrum(*E);
  ASSERT_EQ(sp.size(), 3u);
  for (std::size_t i = 0; i < sp.size(); ++i) EXPECT_EQ(sp[i].minimum, static_cast<int>(i));
  EXPECT_EQ(sp[0].support.size(), 3u);
}

TEST(FullSpectrum, ZeroCharacterIsFlagged) {
  const auto E = tf::PlainSemilattice::from(*tf::corpus::fan(2));
  const auto sp = tf::full_spectrum(E);
  int kills = 0;
  for (const auto& c : sp) kills += c.kills_zero;
  EXPECT_EQ(sp.size(), 3u);
  EXPECT_EQ(kills, 2);
}

TEST(FullDual, InclusionOfTheTopIsNotAnIsomorphism) {
  const auto E = plain_chain(3);
  const auto top = std::make_shared<const tf::PlainSemilattice>(tf::PlainSemilattice::validate({"2"}, {{0}}));
  const auto h = tf::PlainHom::make(top, E, {2});
  const auto d = tf::full_dual(h);
  EXPECT_EQ(d.hat, (std::vector<int>{0, 0, 0}));
  const auto c = tf::full_dual_iso_criterion(h);
  EXPECT_FALSE(c.iso);
  EXPECT_FALSE(c.total_and_bijective);
  EXPECT_FALSE(c.witness.empty());
}

TEST(FullDual, IdentityIsAnIsomorphism) {
  const auto E = plain_chain(4);
  const auto c = tf::full_dual_iso_criterion(tf::PlainHom::identity(E));
  EXPECT_TRUE(c.iso);
  EXPECT_TRUE(c.total_and_bijective);
  EXPECT_TRUE(c.total_and_homeomorphism);
}

TEST(FullDual, PlainHomMayMissEveryCharacter) {
  // Constant map onto the top of a chain: a hom whose dual is defined
  // everywhere and constant.
  const auto E = plain_chain(2), F = plain_chain(2);
  const auto h = tf::PlainHom::make(E, F, {1, 1});
  const auto d = tf::full_dual(h);
  for (bool b : d.in_domain) EXPECT_TRUE(b);
  EXPECT_FALSE(tf::full_dual_iso_criterion(h).iso);
}

TEST(FullDual, CriterionMatchesBijectivityOnSmallHoms) {
  std::vector<tf::PlainSemilatticePtr> small;
  for (const auto& [id, E] : tf::corpus::semilattices())
    if (E->size() <= 4) {
      small.push_back(std::make_shared<const tf::PlainSemilattice>(tf::PlainSemilattice::from(*E)));
      small.push_back(
          std::make_shared<const tf::PlainSemilattice>(tf::PlainSemilattice::validate(E->names(), E->table())));
    }
  std::size_t homs = 0;
  for (const auto& E : small)
    for (const auto& F : small)
      for (const auto& h : tf::all_plain_homs(E, F)) {
        ++homs;
        const bool bijective =
            E->size() == F->size() && std::set<int>(h.map.begin(), h.map.end()).size() == h.map.size();
        EXPECT_EQ(tf::full_dual_iso_criterion(h).iso, bijective);
      }
  EXPECT_GT(homs, 0u);
}
