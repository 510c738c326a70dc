#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "clausegen/substitution.hpp"

namespace clausegen {

namespace detail {

// Extends the idempotent substitution `theta` so that a and b become equal.
// Occurs check is always performed.
inline bool unify_into(const Term& a0, const Term& b0, Substitution& theta) {
  std::vector<std::pair<Term, Term>> work{{a0, b0}};
  while (!work.empty()) {
    auto [a, b] = std::move(work.back());
    work.pop_back();
    a = apply(a, theta);
    b = apply(b, theta);
    if (a == b) continue;
    if (!a.is_variable() && b.is_variable()) std::swap(a, b);
    if (a.is_variable()) {
      if (occurs_in(a.variable(), b)) return false;
      Substitution single;
      single.bind(a.variable(), b);
      theta = compose(theta, single);
      continue;
    }
    if (a.functor() != b.functor() || a.arity() != b.arity()) return false;
    for (std::size_t i = 0; i < a.arity(); ++i) work.emplace_back(a.args()[i], b.args()[i]);
  }
  return true;
}

// One-way matching into raw bindings. Identity bindings are kept so that a
// variable shared by both sides stays fixed on later occurrences.
using Bindings = std::map<Variable, Term>;

inline bool match_into(const Term& g, const Term& s, Bindings& b) {
  if (g.is_variable()) {
    auto [it, inserted] = b.try_emplace(g.variable(), s);
    return inserted || it->second == s;
  }
  if (s.is_variable()) return false;
  if (g.is_ground()) return g == s;
  if (g.functor() != s.functor() || g.arity() != s.arity()) return false;
  for (std::size_t i = 0; i < g.arity(); ++i) {
    if (!match_into(g.args()[i], s.args()[i], b)) return false;
  }
  return true;
}

}  // namespace detail

/// Most general unifier of two terms, or nullopt.
inline std::optional<Substitution> unify(const Term& a, const Term& b) {
  Substitution theta;
  if (!detail::unify_into(a, b, theta)) return std::nullopt;
  return theta;
}

/// Most general unifier of a finite set of terms; the empty set is unified
/// by the empty substitution.
inline std::optional<Substitution> unify(std::span<const Term> terms) {
  Substitution theta;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (!detail::unify_into(terms[0], terms[i], theta)) return std::nullopt;
  }
  return theta;
}

/// Most general unifier of a set of literals. Literals of different sign
/// never unify; complement first to resolve A against B.
inline std::optional<Substitution> unify(std::span<const Literal> lits) {
  Substitution theta;
  for (std::size_t i = 1; i < lits.size(); ++i) {
    if (lits[i].positive() != lits[0].positive()) return std::nullopt;
    if (!detail::unify_into(lits[0].atom(), lits[i].atom(), theta)) return std::nullopt;
  }
  return theta;
}

/// One-way matching: a substitution s over variables of `general` with
/// apply(general, s) == specific, or nullopt.
inline std::optional<Substitution> match(const Term& general, const Term& specific) {
  detail::Bindings b;
  if (!detail::match_into(general, specific, b)) return std::nullopt;
  return Substitution(std::move(b));
}

inline std::optional<Substitution> match(const Literal& general, const Literal& specific) {
  if (general.positive() != specific.positive()) return std::nullopt;
  return match(general.atom(), specific.atom());
}

inline std::optional<Substitution> unify(const Literal& a, const Literal& b) {
  const Literal both[] = {a, b};
  return unify(std::span<const Literal>(both));
}

}  // namespace clausegen
