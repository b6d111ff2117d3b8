#include <gtest/gtest.h>

#include "elhcf/model.hpp"
#include "test_util.hpp"

namespace elhcf {
namespace {

using testing::A;
using testing::kb_of;

TEST(Concept, IntersectionIsFlatSortedAndDuplicateFree) {
  const Concept c = Concept::intersection(
      {A("C"), Concept::intersection({A("B"), A("C")}), A("A")});
  ASSERT_TRUE(c.is_intersection());
  EXPECT_EQ(c.children(), (std::vector<Concept>{A("A"), A("B"), A("C")}));
}

TEST(Concept, SingletonIntersectionCollapses) {
  EXPECT_EQ(Concept::intersection({A("B"), A("B")}), A("B"));
  EXPECT_TRUE(Concept::intersection({}).is_top());
}

TEST(Concept, RoleDepthAndNames) {
  const Concept c = Concept::exists("r", Concept::intersection({A("A"), Concept::exists("s", A("B"))}));
  EXPECT_EQ(c.role_depth(), 2);
  std::set<std::string> concepts, roles;
  c.collect_names(concepts, roles);
  EXPECT_EQ(concepts, (std::set<std::string>{"A", "B"}));
  EXPECT_EQ(roles, (std::set<std::string>{"r", "s"}));
}

TEST(KnowledgeBase, NameUsedAsConceptAndRoleIsRejected) {
  EXPECT_THROW(KnowledgeBase::create({}, {ConceptAssertion{"a", "Male"}, RoleAssertion{"a", "Male", "b"}}),
               SignatureError);
}

TEST(KnowledgeBase, WithAboxKeepsSignature) {
  const KnowledgeBase kb = kb_of("Male(x)\n");
  const KnowledgeBase empty = kb.with_abox({});
  EXPECT_TRUE(empty.has_individual("x"));
  EXPECT_THROW(kb.require_individual("nobody"), SignatureError);
}

TEST(FeatureSet, ConjunctionKbHasThreeConceptNames) {
  const FeatureSet f = feature_set(kb_of("B and C SubClassOf D\nB(x)\nC(x)\nD(x)\n"), "x");
  EXPECT_EQ(f.concept_names, (std::set<std::string>{"B", "C", "D"}));
  EXPECT_TRUE(f.role_names.empty());
}

TEST(FeatureSet, EmptyAbox) {
  const FeatureSet f = feature_set(KnowledgeBase{}, "x");
  EXPECT_TRUE(f.concept_names.empty());
  EXPECT_TRUE(f.role_names.empty());
}

TEST(FeatureSet, IncomingEdgesAreNotFeatures) {
  const KnowledgeBase kb = kb_of("Male(x)\nhasSibling(x, a)\nFemale(a)\n");
  EXPECT_EQ(feature_set(kb, "x"), (FeatureSet{{"Male"}, {"hasSibling"}}));
  EXPECT_EQ(feature_set(kb, "a"), (FeatureSet{{"Female"}, {}}));
}

TEST(ApplyChangeset, ConjunctionRemoval) {
  const KnowledgeBase kb = kb_of("B and C SubClassOf D\nB(x)\nC(x)\nD(x)\n");
  const KnowledgeBase k1 = apply_changeset(kb, {{ConceptAssertion{"x", "C"}, ConceptAssertion{"x", "D"}}, {}});
  EXPECT_EQ(k1.abox(), (AssertionSet{ConceptAssertion{"x", "B"}}));
  EXPECT_EQ(k1.tbox(), kb.tbox());
}

TEST(ApplyChangeset, EmptyIsIdentity) {
  const KnowledgeBase kb = kb_of("B(x)\nr(x, y)\n");
  EXPECT_EQ(apply_changeset(kb, {}), kb);
}

TEST(ApplyChangeset, AdditionOnEmptyAbox) {
  const KnowledgeBase k = apply_changeset(KnowledgeBase{}, {{}, {ConceptAssertion{"x", "Male"}}});
  EXPECT_EQ(k.abox(), (AssertionSet{ConceptAssertion{"x", "Male"}}));
}

TEST(ApplyChangeset, Errors) {
  const KnowledgeBase kb = kb_of("B(x)\n");
  EXPECT_THROW(apply_changeset(kb, {{ConceptAssertion{"x", "C"}}, {}}), ConsistencyError);
  EXPECT_THROW(apply_changeset(kb, {{}, {ConceptAssertion{"x", "B"}}}), ConsistencyError);
  EXPECT_THROW(apply_changeset(kb, {{}, {}, false}), InfeasibleError);
}

TEST(Rational, LowestTermsAndOrder) {
  EXPECT_EQ(Rational(6, 4), Rational(3, 2));
  EXPECT_EQ(Rational(6, 4).to_string(), "3/2");
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_DOUBLE_EQ(Rational(3, 2).to_double(), 1.5);
  EXPECT_THROW(Rational(1, 0), std::invalid_argument);
}

TEST(Direction, ParseAndPrint) {
  EXPECT_EQ(parse_direction("rem"), Direction::kRemove);
  EXPECT_EQ(parse_direction("add"), Direction::kAdd);
  EXPECT_FALSE(parse_direction("flip"));
  EXPECT_EQ(to_string(Direction::kRemove), "rem");
}

}  // namespace
}  // namespace elhcf
