#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;

namespace {

const Clause kStep = C("p(f(X)) :- p(X).");
const Clause kWide = C("p(f(f(a))) :- p(a), p(b).");
const Clause kSelfLoop = C("p(X) :- p(b).");

bool any_variant(const std::vector<LayerEntry>& layer, const Clause& c) {
  return std::any_of(layer.begin(), layer.end(), [&](const LayerEntry& e) { return is_variant(e.clause, c); });
}

bool any_variant(const std::vector<ResolutionStep>& steps, const Clause& c) {
  return std::any_of(steps.begin(), steps.end(), [&](const ResolutionStep& s) { return is_variant(s.resolvent, c); });
}

Generator small_generator(std::uint32_t seed) {
  Vocabulary v;
  v.predicates = {{"p", 1}, {"q", 1}};
  v.functors = {{"f", 1}};
  v.constants = {"a"};
  v.variables = {"X", "Y"};
  return Generator(seed, v);
}

}  // namespace

TEST(Resolvents, CyclicSelfResolution) {
  const Clause c = C("p(X,Y,Z) :- p(Y,Z,X).");
  EXPECT_TRUE(any_variant(resolvents(c, c), C("p(X,Y,Z) :- p(Z,X,Y).")));
}

TEST(Resolvents, GroundParents) {
  const auto steps = resolvents(C("p(f(f(a))) :- p(f(a)), p(a)."), C("p(f(f(a))); p(f(a)) :- p(a)."));
  EXPECT_TRUE(std::any_of(steps.begin(), steps.end(),
                          [](const ResolutionStep& s) { return s.resolvent == C("p(f(f(a))) :- p(a)."); }));
}

TEST(Resolvents, EmptyClauseAndNoClash) {
  const auto steps = resolvents(C("p(a)."), C(":- p(a)."));
  ASSERT_EQ(steps.size(), 1u);
  EXPECT_TRUE(steps.front().resolvent.empty());
  EXPECT_TRUE(resolvents(C("p(a)."), C("q(a).")).empty());
  EXPECT_TRUE(resolvents(C("p(a)."), C(":- p(b).")).empty());
}

TEST(Resolvents, UsesFactors) {
  // Only the factor p(X) of p(X);p(Y) resolves to the empty clause with both
  // negative literals gone.
  const auto steps = resolvents(C("p(X); p(Y)."), C(":- p(U)."));
  EXPECT_TRUE(any_variant(steps, Clause{}));
}

TEST(Resolvents, StepInvariantHolds) {
  Generator gen = small_generator(41);
  std::size_t steps_seen = 0;
  for (int i = 0; i < 300; ++i) {
    const Clause c = gen.clause(3, 3), d = gen.clause(3, 3);
    for (const ResolutionStep& s : resolvents(c, d)) {
      ++steps_seen;
      EXPECT_TRUE(s.left_factor.contains(s.left_literal));
      EXPECT_TRUE(s.right_factor.contains(s.right_literal));
      EXPECT_NE(s.left_literal.positive(), s.right_literal.positive());
      EXPECT_EQ(apply(s.left_literal.atom(), s.mgu), apply(s.right_literal.atom(), s.mgu));
      EXPECT_EQ(s.resolvent, apply(s.left_factor.without(s.left_literal).united(s.right_factor.without(s.right_literal)),
                                   s.mgu));
      EXPECT_TRUE(oracle_subsumes(s.left_parent, s.left_factor));
      EXPECT_TRUE(oracle_subsumes(s.right_parent, s.right_factor));
    }
  }
  EXPECT_GT(steps_seen, 100u);
}

// Each resolvent R has a literal L with left ⪯ R ∪ {L} and right ⪯ R ∪ {¬L}.
TEST(Resolvents, InvertsToSubsumedParents) {
  Generator gen = small_generator(42);
  for (int i = 0; i < 300; ++i) {
    const Clause c = gen.clause(3, 3), d = gen.clause(3, 3);
    for (const ResolutionStep& s : resolvents(c, d)) {
      const Literal l = apply(s.left_literal, s.mgu);
      EXPECT_TRUE(oracle_subsumes(s.left_parent, s.resolvent.with(l)));
      EXPECT_TRUE(oracle_subsumes(s.right_parent, s.resolvent.with(l.complement())));
    }
  }
}

// Grounds each step with fresh constants and checks, by truth table, that the
// two ground parent instances entail the ground resolvent.
TEST(Resolvents, AreEntailedByParents) {
  Generator gen = small_generator(43);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const Clause c = gen.clause(3, 3), d = gen.clause(3, 3);
    for (const ResolutionStep& s : resolvents(c, d)) {
      const Clause left = apply(s.left_factor, s.mgu), right = apply(s.right_factor, s.mgu);
      Substitution ground;
      std::uint32_t k = 0;
      for (const Clause& part : {left, right})
        for (const Variable& v : variables_of(part))
          if (!ground.binds(v)) ground.bind(v, Term::app("k" + std::to_string(k++)));
      const Clause gl = apply(left, ground), gr = apply(right, ground);
      ASSERT_TRUE(oracle_subsumes(s.left_parent, gl));
      ASSERT_TRUE(oracle_subsumes(s.right_parent, gr));
      EXPECT_TRUE(truth_table_entails({gl, gr}, apply(s.resolvent, ground))) << to_string(s.resolvent);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Layers, PowersOfTheStepClause) {
  const Clause t[] = {kStep};
  const LayerIndex index = resolution_layers(t, 3);
  ASSERT_EQ(index.depth(), 3u);
  ASSERT_EQ(index.layer(1).size(), 1u);
  EXPECT_EQ(index.layer(1).front().clause, kStep);
  EXPECT_TRUE(any_variant(index.layer(2), C("p(f(f(X))) :- p(X).")));
  EXPECT_TRUE(any_variant(index.layer(3), C("p(f(f(f(X)))) :- p(X).")));
  EXPECT_FALSE(any_variant(index.layer(2), C("p(f(f(f(X)))) :- p(X).")));
}

TEST(Layers, FirstLayerIsInput) {
  const std::vector<Clause> t{kStep, kWide};
  const LayerIndex index = resolution_layers(t, 1);
  ASSERT_EQ(index.layer(1).size(), 2u);
  EXPECT_THROW(resolution_layers(t, 0), PreconditionError);
}

TEST(Layers, ProvenanceSumsToLayer) {
  const std::vector<Clause> t{kStep, C("p(a).")};
  const LayerIndex index = resolution_layers(t, 4);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const LayerEntry& e : index.layer(n)) {
      ASSERT_TRUE(e.step);
      EXPECT_EQ(e.left_layer + e.right_layer, n);
      EXPECT_TRUE(is_variant(index.layer(e.left_layer)[e.left_index].clause, e.step->left_parent));
      EXPECT_TRUE(is_variant(index.layer(e.right_layer)[e.right_index].clause, e.step->right_parent));
      EXPECT_FALSE(is_tautology(e.clause));
    }
  }
  EXPECT_TRUE(any_variant(index.layer(4), C("p(f(f(f(a))))."))) ;
}

TEST(Layers, CapIsReported) {
  const std::vector<Clause> t{kStep, C("p(a).")};
  ResolutionLimits limits;
  limits.max_layer_clauses = 1;
  EXPECT_THROW(resolution_layers(t, 3, limits), ResourceError);
}

TEST(Layers, ContainedInNthResolution) {
  Generator gen = small_generator(44);
  for (int i = 0; i < 40; ++i) {
    const std::vector<Clause> t{gen.clause(2, 2), gen.clause(2, 2)};
    const LayerIndex index = resolution_layers(t, 3);
    const auto r = nth_resolution(t, 2);
    VariantSet all;
    for (const Clause& c : r) all.insert(c);
    for (std::size_t k = 1; k <= 3; ++k)
      for (const LayerEntry& e : index.layer(k)) EXPECT_TRUE(all.contains(e.clause)) << to_string(e.clause);
  }
}

TEST(ImpliesBounded, Examples) {
  const ImplicationResult two = implies_bounded(kStep, kWide, 2);
  ASSERT_EQ(two.answer, Answer::yes);
  EXPECT_EQ(two.layer, 2u);
  ASSERT_TRUE(two.witness);
  EXPECT_TRUE(validate_witness(two.clause(), kWide, *two.witness));

  EXPECT_EQ(implies_bounded(kStep, kWide, 1).answer, Answer::unknown);
  EXPECT_EQ(implies_bounded(kStep, kStep, 1).answer, Answer::yes);
}

TEST(ImpliesBounded, TautologiesAnsweredUpfront) {
  const ImplicationResult r = implies_bounded(C("q(a)."), C("p(X) :- p(X)."), 1);
  EXPECT_EQ(r.answer, Answer::yes);
  EXPECT_TRUE(r.tautology);
}

TEST(ImpliesBounded, NeverAnswersNo) {
  Generator gen = small_generator(45);
  for (int i = 0; i < 150; ++i) {
    const Clause c = gen.clause(2, 2), d = gen.clause(3, 3);
    EXPECT_NE(implies_bounded(c, d, 2).answer, Answer::no);
  }
}

TEST(ImpliesBounded, SubsumptionAnswersAtFirstLayer) {
  Generator gen(46);
  for (int i = 0; i < 200; ++i) {
    const Clause c = gen.clause(3, 2);
    const Clause d = apply(c, gen.instance_of(c, 2)).united(gen.clause(1, 2));
    const ImplicationResult r = implies_bounded(c, d, 1);
    EXPECT_EQ(r.answer, Answer::yes);
  }
}

TEST(ImpliesBounded, YesIsTImplied) {
  Generator gen = small_generator(47);
  int yes = 0;
  for (int i = 0; i < 200; ++i) {
    const Clause c = gen.clause(2, 2), d = gen.clause(3, 3);
    if (is_tautology(d) || implies_bounded(c, d, 3).answer != Answer::yes) continue;
    ++yes;
    // A resolution proof is an implication, so some term set witnesses it;
    // the minimal one extended twice covers every proof here.
    const Clause context[] = {c};
    EXPECT_TRUE(t_implies(c, d, term_set(d, context, 2))) << to_string(c) << " / " << to_string(d);
  }
  EXPECT_GT(yes, 10);
}

TEST(IndirectRoot, Examples) {
  EXPECT_EQ(is_indirect_root(kStep, kWide, 2), RootKind::proper);
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_NE(is_indirect_root(kSelfLoop, kSelfLoop, n), RootKind::proper);
  EXPECT_EQ(is_indirect_root(kSelfLoop, kSelfLoop, 1), RootKind::indirect);
  EXPECT_EQ(is_indirect_root(kStep, C("q(a)."), 2), RootKind::no);
}
