// Slow, independent reference implementations used by the tests.
//
// Entailment is decided on a canonical model built directly from the
// original (non-normalized) axioms: the named individuals plus one witness
// element per existential restriction occurring on a right-hand side. Rules
// are applied by naive iteration until nothing changes.

#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "elhcf/model.hpp"

namespace elhcf::oracle {

bool naive_instance_check(const KnowledgeBase& kb, const Concept& c, const std::string& x);
bool naive_is_subsumed(const KnowledgeBase& kb, const Concept& lhs, const Concept& rhs);
bool naive_is_subrole(const KnowledgeBase& kb, const std::string& r, const std::string& s);
KnowledgeBase naive_materialize(const KnowledgeBase& kb);

// Every removal set R of assertions with subject x such that K \ R does not
// entail c(x) and putting back any single member of R restores the
// entailment. Throws std::invalid_argument when x has more than
// max_assertions assertions.
std::set<AssertionSet> brute_force_neg_candidates(const KnowledgeBase& kb, const Concept& c,
                                                  const std::string& x, std::size_t max_assertions = 14);

// The addition fulfills <c(x), add>, touches only x and individuals absent
// from kb, links x only to such fresh individuals, and no single added
// assertion can be dropped.
bool verify_addition(const KnowledgeBase& kb, const Concept& c, const std::string& x,
                     const ChangeSet& cs, std::string* why = nullptr);

// Symmetric-difference distance of subject-position feature names.
int naive_feature_distance(const KnowledgeBase& a, const std::string& x, const KnowledgeBase& b,
                           const std::string& y);

struct GeneratorBounds {
  int concepts = 8;
  int roles = 3;
  int individuals = 6;
  int concept_axioms = 8;
  int role_axioms = 2;
  int concept_assertions = 12;
  int role_assertions = 8;
  int max_width = 3;
  int max_depth = 2;
};

// Random ELH KBs over names C0.., r0.., and individuals x, a0... The
// individual x never occurs as the object of a role assertion.
class RandomKbGenerator {
 public:
  explicit RandomKbGenerator(std::uint64_t seed, GeneratorBounds bounds = {});

  KnowledgeBase kb();
  Concept concept_expr(int depth);
  std::string concept_name();
  std::string role_name();
  std::mt19937_64& rng() { return rng_; }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  GeneratorBounds b_;
  std::mt19937_64 rng_;
};

struct Instance {
  KnowledgeBase kb;
  Concept target;
  std::uint64_t seed;
};

// A materialized random KB with target x and a concept that x is an instance
// of, small enough for brute_force_neg_candidates.
Instance random_rem_instance(std::uint64_t seed, std::size_t max_assertions = 12);
// A random KB and a concept that x is not an instance of.
Instance random_add_instance(std::uint64_t seed);

}  // namespace elhcf::oracle
