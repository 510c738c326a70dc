#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "clausegen.hpp"

namespace testing_support {

using namespace clausegen;

inline Clause C(const std::string& text) { return parse_clause(text); }
inline Term T(const std::string& text) { return parse_term(text); }
inline Literal L(const std::string& text) { return parse_literal(text); }

inline std::vector<Clause> Cs(const std::string& text) { return parse_clause_file(text).clauses; }

inline Substitution S(std::initializer_list<std::pair<const char*, const char*>> bindings) {
  Substitution s;
  for (const auto& [v, t] : bindings) s.bind(Variable{v, 0}, T(t));
  return s;
}

// ---- independent oracles ----

// One-way matching written from scratch, without the library's matcher.
inline bool oracle_match(const Term& g, const Term& s, std::map<Variable, Term>& b) {
  if (g.is_variable()) {
    auto [it, inserted] = b.emplace(g.variable(), s);
    return inserted || it->second == s;
  }
  if (s.is_variable() || g.functor() != s.functor() || g.arity() != s.arity()) return false;
  for (std::size_t i = 0; i < g.arity(); ++i)
    if (!oracle_match(g.args()[i], s.args()[i], b)) return false;
  return true;
}

// C ⪯ D by trying every map from literals of C to literals of D.
inline bool oracle_subsumes(const Clause& c, const Clause& d) {
  if (c.empty()) return true;
  if (d.empty()) return false;
  std::vector<std::size_t> pick(c.size(), 0);
  while (true) {
    std::map<Variable, Term> b;
    bool ok = true;
    for (std::size_t i = 0; i < c.size() && ok; ++i) {
      const Literal& g = c[i];
      const Literal& s = d[pick[i]];
      ok = g.positive() == s.positive() && oracle_match(g.atom(), s.atom(), b);
    }
    if (ok) return true;
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == d.size()) pick[k++] = 0;
    if (k == pick.size()) return false;
  }
}

// Ground entailment by enumerating every truth assignment.
inline bool truth_table_entails(const std::vector<Clause>& premises, const Clause& goal) {
  std::vector<Term> atoms;
  auto id = [&](const Term& a) {
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (atoms[i] == a) return i;
    atoms.push_back(a);
    return atoms.size() - 1;
  };
  for (const Clause& c : premises)
    for (const Literal& l : c) id(l.atom());
  for (const Literal& l : goal) id(l.atom());
  if (atoms.size() > 20) throw std::runtime_error("truth table too large");
  auto holds = [&](const Clause& c, std::uint32_t m) {
    for (const Literal& l : c)
      if (((m >> id(l.atom())) & 1u) == (l.positive() ? 1u : 0u)) return true;
    return false;
  };
  for (std::uint32_t m = 0; m < (1u << atoms.size()); ++m) {
    bool all = true;
    for (const Clause& c : premises) all = all && holds(c, m);
    if (all && !holds(goal, m)) return false;
  }
  return true;
}

// ---- random generation ----

struct Vocabulary {
  std::vector<Symbol> predicates{{"p", 1}, {"q", 2}};
  std::vector<Symbol> functors{{"f", 1}, {"g", 2}};
  std::vector<std::string> constants{"a", "b"};
  std::vector<std::string> variables{"X", "Y", "Z"};
};

class Generator {
 public:
  explicit Generator(std::uint32_t seed, Vocabulary vocab = {}) : rng_(seed), vocab_(std::move(vocab)) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Term term(std::size_t depth, bool ground = false) {
    const bool leaf = depth <= 1 || coin(0.5);
    if (leaf) {
      if (!ground && !vocab_.variables.empty() && coin(0.5))
        return Term::var(vocab_.variables[below(vocab_.variables.size())]);
      return Term::app(vocab_.constants[below(vocab_.constants.size())]);
    }
    const Symbol& f = vocab_.functors[below(vocab_.functors.size())];
    std::vector<Term> args;
    for (std::size_t i = 0; i < f.arity; ++i) args.push_back(term(depth - 1, ground));
    return Term::app(f.name, std::move(args));
  }

  Literal literal(std::size_t depth, bool ground = false) {
    const Symbol& p = vocab_.predicates[below(vocab_.predicates.size())];
    std::vector<Term> args;
    for (std::size_t i = 0; i < p.arity; ++i) args.push_back(term(depth, ground));
    return Literal(coin(), p.name, std::move(args));
  }

  Clause clause(std::size_t max_literals, std::size_t depth, bool ground = false) {
    std::vector<Literal> lits;
    const std::size_t n = 1 + below(max_literals);
    for (std::size_t i = 0; i < n; ++i) lits.push_back(literal(depth, ground));
    return Clause(std::move(lits));
  }

  /// A substitution binding each variable of `c` to a random term or leaving it.
  Substitution instance_of(const Clause& c, std::size_t depth) {
    Substitution s;
    for (const Variable& v : variables_of(c))
      if (coin(0.6)) s.bind(v, term(depth));
    return s;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
  Vocabulary vocab_;
};

}  // namespace testing_support
