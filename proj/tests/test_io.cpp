#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "tightforge/corpus.hpp"
#include "tightforge/io.hpp"

namespace tf = tightforge;
namespace io = tightforge::io;

namespace {

std::string read(const std::string& name) {
  std::ifstream in(std::string(TIGHTFORGE_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string input_error_where(const std::string& text) {
  try {
    io::parse_document_text(text);
  } catch (const tf::InputError& e) {
    return e.where();
  }
  return "<accepted>";
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(Documents, FixturesParseToTheExpectedKinds) {
  EXPECT_EQ(io::kind_of(io::parse_document_text(read("chain.json"))), "semilattice");
  EXPECT_EQ(io::kind_of(io::parse_document_text(read("i2.json"))), "partial_bijections");
  EXPECT_EQ(io::kind_of(io::parse_document_text(read("inclusion.json"))), "hom");
  EXPECT_EQ(io::kind_of(io::parse_document_text(read("antichain.json"))), "ordered_space");
  const auto plain = io::parse_document_text(read("plain_inclusion.json"));
  EXPECT_TRUE(std::holds_alternative<tf::PlainHom>(plain));
}

TEST(Documents, PartialBijectionsCloseUp) {
  const auto doc = io::parse_document_text(read("i2.json"));
  const auto& P = std::get<io::PartialBijections>(doc);
  EXPECT_EQ(P.degree, 2);
  EXPECT_EQ(P.generators.size(), 2u);
  EXPECT_EQ(P.closure->size(), 7);
}

TEST(Documents, UnknownNameReportsTheFieldPath) {
  EXPECT_EQ(input_error_where(read("bad_reference.json")), "meet[1][1]");
}

TEST(Documents, MalformedJsonReportsTheLine) {
  EXPECT_EQ(input_error_where(read("malformed.json")), "line 2");
}

TEST(Documents, SchemaErrors) {
  EXPECT_EQ(input_error_where(R"({"kind": "lattice"})"), "kind");
  EXPECT_EQ(input_error_where(R"({"kind": "semilattice", "elements": ["0"]})"), "meet");
  EXPECT_EQ(input_error_where(R"({"kind": "semilattice", "elements": ["0", "0"], "meet": []})"), "elements[1]");
  EXPECT_EQ(input_error_where(R"({"kind": "partial_bijections", "degree": 2, "generators": [[1, 1]]})"),
            "generators[0][1]");
  EXPECT_EQ(input_error_where(R"([1, 2])"), "");
}

TEST(Documents, AxiomFailuresAreInvalidStructure) {
  try {
    io::parse_document_text(read("non_associative.json"));
    FAIL() << "accepted a non-associative table";
  } catch (const tf::InvalidStructure& e) {
    EXPECT_EQ(e.reason(), "not associative");
    EXPECT_EQ(e.witness(), "(a, a, b)");
  }
}

TEST(Documents, SizeCapAppliesToClosures) {
  EXPECT_THROW(io::parse_document_text(read("i2.json"), tf::Limits{5, 16}), tf::SizeCapExceeded);
}

TEST(Documents, PrintThenParseIsIdentity) {
  std::vector<io::Document> docs;
  for (const auto& [id, E] : tf::corpus::semilattices()) docs.emplace_back(E);
  for (const auto& [id, S] : tf::corpus::semigroups(7)) {
    docs.emplace_back(S);
    docs.emplace_back(tf::tight_groupoid(S).germs.groupoid);
    docs.emplace_back(std::make_shared<const tf::FiniteOrderedGroupoid>(tf::ehresmann_re(*S)));
  }
  for (const auto& [id, X] : tf::corpus::spaces()) docs.emplace_back(X);
  for (const auto& doc : docs) {
    const auto text = io::to_json(doc).dump();
    const auto back = io::parse_document_text(text);
    EXPECT_TRUE(io::same_document(doc, back)) << text;
    EXPECT_EQ(io::to_json(back).dump(), text);
  }
}

TEST(Dot, PairGroupoidHasTwoNodesAndOneMergedEdge) {
  const auto T = tf::tight_groupoid(tf::corpus::symmetric_inverse_monoid(2));
  const auto& G = T.groupoid();
  const auto dot = io::export_dot(G);
  EXPECT_EQ(dot.rfind("digraph G {\n", 0), 0u);
  EXPECT_EQ(count(dot, "->"), 1u);
  EXPECT_EQ(count(dot, "dir=both"), 1u);
  EXPECT_EQ(count(dot, "dashed"), 0u);
}

TEST(Dot, OrderBetweenUnitsIsDashed) {
  const auto dot = io::export_dot(*tf::corpus::non_re_groupoid());
  EXPECT_EQ(count(dot, "dashed"), 1u);
  EXPECT_NE(dot.find("a / b"), std::string::npos);
}

TEST(Dot, GroupElementsBecomeLoops) {
  const auto T = tf::tight_groupoid(tf::corpus::cyclic_with_zero(3));
  const auto& G = T.groupoid();
  const auto dot = io::export_dot(G);
  // One unit; the two non-identity elements are mutually inverse.
  EXPECT_EQ(count(dot, "->"), 1u);
}
