#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;

namespace {

const Clause kStep = C("p(f(X)) :- p(X).");
const Clause kTwoStep = C("p(f(f(Y))) :- p(Y).");
const Clause kThree = C("p(f(f(f(a)))) :- p(a).");
const Clause kFour = C("p(f(f(f(f(a))))) :- p(a).");

ExpansionScript script(std::initializer_list<std::pair<std::size_t, const char*>> steps) {
  ExpansionScript s;
  for (const auto& [target, lit] : steps) s.push_back(ExpansionStep{target, L(lit)});
  return s;
}

std::vector<Clause> sorted(std::vector<Clause> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Generator small_generator(std::uint32_t seed) {
  Vocabulary v;
  v.predicates = {{"p", 1}, {"q", 1}};
  v.functors = {{"f", 1}};
  v.constants = {"a", "b"};
  v.variables = {"X", "Y"};
  return Generator(seed, v);
}

// A random valid script of the given length over ground literals of `gen`.
ExpansionScript random_script(Generator& gen, std::size_t length) {
  ExpansionScript s;
  for (std::size_t k = 0; k < length; ++k) s.push_back(ExpansionStep{gen.below(k + 1), gen.literal(2, true)});
  return s;
}

// Depth-first search for an expansion of `d` by at most `max_len` literals
// from `candidates` whose result `c` θ-subsumes.
bool some_expansion_subsumed(const Clause& c, std::vector<Clause> set, const std::vector<Literal>& candidates,
                             std::size_t max_len) {
  if (oracle_subsumes(c, lgg_set(set))) return true;
  if (max_len == 0) return false;
  for (std::size_t target = 0; target < set.size(); ++target) {
    for (const Literal& l : candidates) {
      const Clause& member = set[target];
      if (member.contains(l) || member.contains(l.complement())) continue;
      std::vector<Clause> next = set;
      next[target] = member.with(l);
      next.push_back(member.with(l.complement()));
      if (some_expansion_subsumed(c, std::move(next), candidates, max_len - 1)) return true;
    }
  }
  return false;
}

}  // namespace

TEST(OrIntroduce, Example) {
  const auto set = or_introduce(kThree, script({{0, "p(f(f(a)))"}, {0, "p(f(a))"}}));
  const std::vector<Clause> expected{
      C("p(f(f(f(a)))) :- p(f(f(a))), p(a)."),
      C("p(f(f(f(a)))); p(f(f(a))); p(f(a)) :- p(a)."),
      C("p(f(f(f(a)))); p(f(f(a))) :- p(f(a)), p(a)."),
  };
  EXPECT_EQ(sorted(set), sorted(expected));
  ASSERT_EQ(set.size(), 3u);
  // The split clause keeps its position; the negative child is appended.
  EXPECT_EQ(set[1], expected[0]);
}

TEST(OrIntroduce, EmptyAndSingleStep) {
  EXPECT_EQ(or_introduce(kThree, {}), std::vector<Clause>{kThree});
  const Literal l = L("q(b)");
  EXPECT_EQ(or_introduce(kStep, script({{0, "q(b)"}})), (std::vector<Clause>{kStep.with(l), kStep.with(l.complement())}));
}

TEST(OrIntroduce, RejectsBadTarget) {
  EXPECT_THROW(or_introduce(kThree, script({{1, "p(a)"}})), PreconditionError);
  EXPECT_THROW(or_introduce(kThree, script({{0, "p(a)"}, {2, "p(b)"}})), PreconditionError);
}

TEST(Expand, Examples) {
  const Expansion e = expand(kThree, script({{0, "p(f(f(a)))"}, {0, "p(f(a))"}}));
  EXPECT_TRUE(theta_equivalent(e.result, C("p(f(X)); p(f(f(f(a)))) :- p(a), p(X).")));
  EXPECT_TRUE(subsumes(kStep, e.result));
  EXPECT_FALSE(subsumes(kStep, kThree));

  EXPECT_TRUE(theta_equivalent(expand(kThree, {}).result, kThree));

  const Expansion e1 = expand(kFour, script({{0, "p(f(f(a)))"}}));
  EXPECT_TRUE(theta_equivalent(e1.result, C("p(f(f(Y))); p(f(f(f(f(a))))) :- p(a), p(Y).")));
}

TEST(Expand, FourStepExample) {
  const Expansion e1 = expand(kFour, script({{0, "p(f(f(a)))"}}));
  EXPECT_TRUE(subsumes(kTwoStep, e1.result));
  EXPECT_FALSE(subsumes(kStep, e1.result));

  const Expansion e2 = expand(kFour, script({{0, "p(f(f(a)))"}, {1, "p(f(f(f(a))))"}, {0, "p(f(a))"}}));
  EXPECT_TRUE(subsumes(kStep, e2.result));
  EXPECT_TRUE(subsumes(kTwoStep, e2.result));
  EXPECT_TRUE(theta_equivalent(e2.result, C("p(f(X)); p(f(f(Y))); p(f(f(f(f(a))))) :- p(a), p(Y), p(X).")));
}

TEST(Replay, RederivesTheSource) {
  const ExpansionScript s = script({{0, "p(f(f(a)))"}, {0, "p(f(a))"}});
  EXPECT_EQ(replay_resolutions(or_introduce(kThree, s), s, kThree), std::optional<std::size_t>(2));
  EXPECT_FALSE(replay_resolutions(or_introduce(kThree, s), s, kFour));
}

TEST(CandidateLiterals, Examples) {
  const TermSet t = term_set(kFour);
  EXPECT_EQ(t.terms.size(), 5u);
  const auto lits = candidate_literals(kFour, t);
  EXPECT_EQ(lits.size(), 10u);
  for (const Term& term : t.terms) {
    EXPECT_EQ(std::count(lits.begin(), lits.end(), Literal(true, "p", {term})), 1);
    EXPECT_EQ(std::count(lits.begin(), lits.end(), Literal(false, "p", {term})), 1);
  }

  const Clause q(std::vector<Literal>{Literal(true, "q")});
  const auto qs = candidate_literals(q, std::span<const Term>{});
  EXPECT_EQ(qs, (std::vector<Literal>{Literal(true, "q"), Literal(false, "q")}));

  const Term three[] = {T("a"), T("b"), T("f(a)")};
  EXPECT_EQ(candidate_literals(C("r(a,b)."), three).size(), 18u);
}

TEST(TCompleteExpansion, FourStepExample) {
  const TermSet t = term_set(kFour);
  const TCompleteResult r = t_complete_expansion(kFour, t);
  ASSERT_TRUE(r.expansion);
  EXPECT_TRUE(subsumes(kStep, r.expansion->result));
  EXPECT_TRUE(subsumes(kTwoStep, r.expansion->result));
  for (const Clause& c : r.audit) EXPECT_TRUE(subsumes(c, r.expansion->result)) << to_string(c);
  EXPECT_TRUE(subsumes(kFour, r.expansion->result));
  EXPECT_TRUE(t_implies(r.expansion->result, kFour));
}

TEST(TCompleteExpansion, SingleSplitFailsTheAudit) {
  const TermSet t = term_set(kFour);
  const auto audit = audit_family(kFour, t);
  EXPECT_TRUE(std::any_of(audit.begin(), audit.end(), [](const Clause& c) { return is_variant(c, kStep); }));
  EXPECT_TRUE(t_implies(kStep, kFour, t));
  const Expansion e1 = expand(apply(kFour, t.skolem.forward), script({{0, "p(f(f(a)))"}}));
  EXPECT_FALSE(subsumes(kStep, e1.result));
}

TEST(TCompleteExpansion, NonAmbivalentNeedsNoSplit) {
  const Clause d = C("p(f(X)) :- q(X), q(a).");
  const TCompleteResult r = t_complete_expansion(d, term_set(d));
  ASSERT_TRUE(r.expansion);
  EXPECT_TRUE(r.expansion->script.empty());
  EXPECT_TRUE(theta_equivalent(r.expansion->result, d));
}

TEST(TCompleteExpansion, LargeNonAmbivalentClauseIsItsOwnExpansion) {
  const Clause c = C("p(X) :- q(X,Y), q(Y,Z), q(Z,W), q(W,X).");
  const TCompleteResult r = t_complete_expansion(c, term_set(c));
  ASSERT_TRUE(r.expansion);
  EXPECT_TRUE(r.expansion->script.empty());
  EXPECT_EQ(r.expansion->result, c);
  EXPECT_TRUE(r.audit.empty());
}

TEST(TCompleteExpansion, BudgetMissIsNotFound) {
  ExpansionOptions o;
  o.max_script_length = 1;
  const TCompleteResult r = t_complete_expansion(kFour, term_set(kFour), o);
  EXPECT_FALSE(r.expansion);
  EXPECT_GT(r.expansions_tried, 1u);
}

TEST(TCompleteExpansion, RejectsTautology) {
  const Clause d = C("p(a) :- p(a).");
  EXPECT_THROW(t_complete_expansion(d, term_set(d)), PreconditionError);
}

TEST(Lggt, RecursivePair) {
  const std::vector<Clause> s{C("p(f(a)) :- p(a)."), C("p(f(f(b))) :- p(b).")};
  const TermSet t = term_set(s);
  const LggtResult r = lggt(s, t);
  EXPECT_TRUE(theta_equivalent(r.clause, C("p(f(Z)) :- p(Z).")));
  EXPECT_TRUE(is_generalization_T(r.clause, s, t));
  EXPECT_TRUE(theta_equivalent(lgg_set(s), C("p(f(X)) :- p(Y).")));
}

TEST(Lggt, NumberPairIsStrictlyBelowLgg) {
  const std::vector<Clause> s{C("number(s(0)) :- number(0)."), C("number(s(s(s(0)))) :- number(s(0)).")};
  const TermSet t = term_set(s);
  const LggtResult r = lggt(s, t);
  EXPECT_TRUE(theta_equivalent(r.clause, C("number(s(X)) :- number(X).")));
  const Clause plain = lgg_set(s);
  EXPECT_TRUE(theta_equivalent(plain, C("number(s(X)) :- number(Y).")));
  EXPECT_TRUE(subsumes(plain, r.clause));
  EXPECT_FALSE(subsumes(r.clause, plain));
}

TEST(Lggt, SingletonIsTEquivalent) {
  const std::vector<Clause> s{kTwoStep};
  const LggtResult r = lggt(s, term_set(s));
  EXPECT_TRUE(t_equivalent(r.clause, kTwoStep));
}

TEST(Lggt, TautologiesAreDropped) {
  const std::vector<Clause> s{C("q(a) :- q(a)."), C("p(f(a)) :- p(a).")};
  const LggtResult r = lggt(s, term_set(s));
  EXPECT_FALSE(r.all_tautologies);
  EXPECT_EQ(r.expansions.size(), 1u);
  EXPECT_TRUE(theta_equivalent(r.clause, s[1]));

  const std::vector<Clause> only{C("q(a) :- q(a).")};
  const LggtResult t = lggt(only, term_set(only));
  EXPECT_TRUE(t.all_tautologies);
  EXPECT_TRUE(is_tautology(t.clause));
}

TEST(Lggt, Preconditions) {
  EXPECT_THROW(lggt(std::vector<Clause>{}, TermSet{}), PreconditionError);
  const std::vector<Clause> s{kStep};
  EXPECT_THROW(lggt(s, term_set(std::vector<Clause>{kStep, kTwoStep})), PreconditionError);
}

TEST(LggtBruteforce, AgreesOnExamples) {
  const std::vector<Clause> pair{C("p(f(a)) :- p(a)."), C("p(f(f(b))) :- p(b).")};
  const std::vector<Clause> number{C("number(s(0)) :- number(0)."), C("number(s(s(s(0)))) :- number(s(0)).")};
  for (const auto& s : {pair, number}) {
    const TermSet t = term_set(s);
    const BruteforceResult b = lggt_bruteforce(s, t, 2, 2);
    const LggtResult r = lggt(s, t);
    EXPECT_TRUE(t_equivalent(b.clause, r.clause)) << to_string(b.clause) << " / " << to_string(r.clause);
    for (const Clause& g : b.generalizations) EXPECT_TRUE(subsumes(g, r.clause)) << to_string(g);
  }
}

TEST(LggtBruteforce, GroundSingleton) {
  const std::vector<Clause> s{C("p(a).")};
  const BruteforceResult b = lggt_bruteforce(s, term_set(s), 1, 1);
  EXPECT_TRUE(t_equivalent(b.clause, s[0]));
}

// ---- properties of or-introduction and expansion ----

TEST(OrIntroduceProperty, TargetIsResolventOfItsChildren) {
  Generator gen = small_generator(51);
  for (int i = 0; i < 150; ++i) {
    const Clause d = gen.clause(3, 2, gen.coin());
    const Literal l = gen.literal(2, true);
    if (d.contains(l) || d.contains(l.complement())) continue;
    const auto children = or_introduce(d, ExpansionScript{{0, l}});
    const auto steps = resolvents(children[0], children[1]);
    if (d.is_ground()) {
      EXPECT_TRUE(std::any_of(steps.begin(), steps.end(), [&](const ResolutionStep& s) { return s.resolvent == d; }))
          << to_string(d);
    } else {
      // Renaming apart leaves a copy of d on each side; that union is θ-equivalent to d.
      EXPECT_TRUE(std::any_of(steps.begin(), steps.end(),
                              [&](const ResolutionStep& s) { return theta_equivalent(s.resolvent, d); }))
          << to_string(d);
    }
    EXPECT_EQ(resolve_on(children[0], children[1], l), std::optional<Clause>(d));
  }
}

TEST(OrIntroduceProperty, MembersContainSourceAndReplay) {
  Generator gen = small_generator(52);
  for (int i = 0; i < 200; ++i) {
    const Clause d = gen.clause(3, 2);
    ExpansionScript s = random_script(gen, gen.below(4));
    // Drop steps that do not change their target; they cannot be replayed.
    std::vector<Clause> set{d};
    ExpansionScript valid;
    for (const ExpansionStep& step : s) {
      if (step.target >= set.size() || set[step.target].contains(step.literal) ||
          set[step.target].contains(step.literal.complement()))
        continue;
      valid.push_back(step);
      set = or_introduce(d, valid);
    }
    set = or_introduce(d, valid);
    ASSERT_EQ(set.size(), valid.size() + 1);
    for (const Clause& m : set) EXPECT_TRUE(d.is_subset_of(m));
    EXPECT_EQ(replay_resolutions(set, valid, d), std::optional<std::size_t>(valid.size()));
  }
}

TEST(ExpandProperty, ResultIsEquivalentToSource) {
  Generator gen = small_generator(53);
  for (int i = 0; i < 120; ++i) {
    const Clause d = gen.clause(2, 2, true);
    std::vector<Clause> set{d};
    ExpansionScript valid;
    for (const ExpansionStep& step : random_script(gen, 1 + gen.below(3))) {
      if (step.target >= set.size() || set[step.target].contains(step.literal) ||
          set[step.target].contains(step.literal.complement()))
        continue;
      valid.push_back(step);
      set = or_introduce(d, valid);
    }
    const Expansion e = expand(d, valid);
    EXPECT_TRUE(oracle_subsumes(d, e.result));
    EXPECT_EQ(implies_bounded(e.result, d, valid.size() + 1).answer, Answer::yes)
        << to_string(e.result) << " / " << to_string(d);
  }
}

TEST(ExpandProperty, PowersHaveSubsumedExpansions) {
  Vocabulary v;
  v.predicates = {{"p", 1}};
  v.functors = {{"f", 1}};
  v.constants = {"a"};
  v.variables = {"X", "Y"};
  Generator gen(54, v);
  int checked = 0;
  for (int i = 0; i < 60 && checked < 25; ++i) {
    const Clause c = gen.clause(3, 3);
    const Clause roots[] = {c};
    const LayerIndex index = resolution_layers(roots, 3);
    for (std::size_t n = 2; n <= 3; ++n) {
      for (const LayerEntry& e : index.layer(n)) {
        // A ground power: the layer clause with fresh constants for its variables.
        Substitution fresh;
        for (const Variable& x : variables_of(e.clause))
          fresh.bind(x, Term::app("k" + std::to_string(fresh.size())));
        const Clause d = apply(e.clause, fresh);
        if (is_tautology(d) || d.size() > 4) continue;
        const Clause context[] = {c};
        const TermSet t = term_set(d, context, 1);
        const auto candidates = candidate_literals(d, t.terms);
        EXPECT_TRUE(some_expansion_subsumed(c, {d}, candidates, n - 1)) << to_string(c) << " / " << to_string(d);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 10);
}
