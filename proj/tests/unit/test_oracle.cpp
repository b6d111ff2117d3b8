// The oracle checks itself on hand-worked cases before it is trusted
// elsewhere.

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "test_util.hpp"

namespace elhcf::oracle {
namespace {

using testing::A;
using testing::concept_of;
using testing::kb_of;

TEST(Oracle, InstanceChecks) {
  const KnowledgeBase kb = kb_of("B and C SubClassOf D\nA SubClassOf r some (B and C)\nr some D SubClassOf E\nA(x)\n");
  EXPECT_TRUE(naive_instance_check(kb, A("E"), "x"));
  EXPECT_TRUE(naive_instance_check(kb, concept_of("r some (B and C and D)"), "x"));
  EXPECT_FALSE(naive_instance_check(kb, A("D"), "x"));
}

TEST(Oracle, Subrole) {
  const KnowledgeBase kb = kb_of("a SubRoleOf b\nb SubRoleOf c\n");
  EXPECT_TRUE(naive_is_subrole(kb, "a", "c"));
  EXPECT_TRUE(naive_is_subrole(kb, "c", "c"));
  EXPECT_FALSE(naive_is_subrole(kb, "c", "a"));
}

TEST(Oracle, BruteForceConjunction) {
  const KnowledgeBase kb = kb_of("B and C SubClassOf D\nB(x)\nC(x)\nD(x)\n");
  EXPECT_EQ(brute_force_neg_candidates(kb, A("D"), "x"),
            (std::set<AssertionSet>{{ConceptAssertion{"x", "B"}, ConceptAssertion{"x", "D"}},
                                    {ConceptAssertion{"x", "C"}, ConceptAssertion{"x", "D"}}}));
}

TEST(Oracle, BruteForceTopHasNoRemoval) {
  EXPECT_TRUE(brute_force_neg_candidates(kb_of("B(x)\n"), Concept::top(), "x").empty());
}

TEST(Oracle, BruteForceSibling) {
  const KnowledgeBase kb = kb_of("Male(x)\nhasSibling(x, a)\nFemale(a)\n");
  EXPECT_EQ(brute_force_neg_candidates(kb, concept_of("Male and hasSibling some Female"), "x"),
            (std::set<AssertionSet>{{ConceptAssertion{"x", "Male"}}, {RoleAssertion{"x", "hasSibling", "a"}}}));
}

TEST(Oracle, BruteForceBound) {
  std::string text;
  for (int i = 0; i < 20; ++i) text += "C" + std::to_string(i) + "(x)\n";
  EXPECT_THROW(brute_force_neg_candidates(kb_of(text), A("C0"), "x"), std::invalid_argument);
}

TEST(Oracle, AdditionChecker) {
  const Concept c = concept_of("Male and hasChild some Female");
  const ChangeSet good{{}, {ConceptAssertion{"x", "Male"}, RoleAssertion{"x", "hasChild", "n1"},
                            ConceptAssertion{"n1", "Female"}}};
  const KnowledgeBase kx = kb_of("Female(f)\nMale(y)\nTall(x)\n");
  EXPECT_TRUE(verify_addition(kx, c, "x", good));
  ChangeSet tampered = good;
  tampered.added.insert(ConceptAssertion{"n1", "Tall"});
  std::string why;
  EXPECT_FALSE(verify_addition(kx, c, "x", tampered, &why));
  EXPECT_EQ(why, "redundant addition");
  const ChangeSet foreign{{}, {ConceptAssertion{"x", "Male"}, RoleAssertion{"x", "hasChild", "f"}}};
  EXPECT_FALSE(verify_addition(kx, c, "x", foreign));
}

TEST(Oracle, GeneratorNeverPointsAtTarget) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RandomKbGenerator gen(seed);
    const KnowledgeBase kb = gen.kb();
    EXPECT_TRUE(kb.has_individual("x"));
    for (const auto& a : kb.abox()) {
      if (const auto* ra = std::get_if<RoleAssertion>(&a)) EXPECT_NE(ra->object, "x");
    }
  }
}

TEST(Oracle, GeneratorIsDeterministic) {
  RandomKbGenerator a(42), b(42);
  EXPECT_EQ(a.kb(), b.kb());
}

}  // namespace
}  // namespace elhcf::oracle
