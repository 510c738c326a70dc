#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "clausegen/clause_ops.hpp"

namespace clausegen {

/// Evidence that C θ-subsumes D: apply(C, substitution) ⊆ D, with
/// mapping[i] the literal of D that literal i of C lands on.
struct SubsumptionWitness {
  Substitution substitution;
  std::vector<std::size_t> mapping;
};

/// Checks a witness independently of the search that produced it.
inline bool validate_witness(const Clause& c, const Clause& d, const SubsumptionWitness& w) {
  if (w.mapping.size() != c.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (w.mapping[i] >= d.size() || !(apply(c[i], w.substitution) == d[w.mapping[i]])) return false;
  }
  return apply(c, w.substitution).is_subset_of(d);
}

/// Decides C ⪯ D by backtracking over literal assignments with consistent
/// bindings. Variables of D are treated as constants.
inline std::optional<SubsumptionWitness> theta_subsumes(const Clause& c, const Clause& d) {
  auto r = detail::LiteralSearch(c, d, detail::SearchMode::subsume).run();
  if (!r) return std::nullopt;
  SubsumptionWitness w{std::move(r->substitution), std::move(r->mapping)};
  if (!validate_witness(c, d, w)) throw Fault("internal error: invalid subsumption witness");
  return w;
}

/// Like theta_subsumes, but prefers the witness that moves the fewest
/// variables of c, then the one whose image c·θ is smallest. Past
/// `node_budget` search nodes the best witness seen so far is returned.
inline std::optional<SubsumptionWitness> theta_subsumes_closest(const Clause& c, const Clause& d,
                                                                std::size_t node_budget = 200'000) {
  auto r = detail::LiteralSearch(c, d, detail::SearchMode::subsume).closest(node_budget).run();
  if (!r) return std::nullopt;
  SubsumptionWitness w{std::move(r->substitution), std::move(r->mapping)};
  if (!validate_witness(c, d, w)) throw Fault("internal error: invalid subsumption witness");
  return w;
}

inline bool subsumes(const Clause& c, const Clause& d) { return theta_subsumes(c, d).has_value(); }

inline bool theta_equivalent(const Clause& c, const Clause& d) { return subsumes(c, d) && subsumes(d, c); }

/// A minimal θ-equivalent subset of c. Whenever c·θ ⊆ c − {l}, c is replaced
/// by the image c·θ, which can drop many literals at once.
inline Clause reduce(const Clause& c) {
  Clause current = c;
  std::size_t i = 0;
  while (i < current.size()) {
    Clause smaller = current.without(i);
    if (auto w = theta_subsumes(current, smaller)) {
      current = apply(current, w->substitution);
      i = 0;
    } else {
      ++i;
    }
  }
  return current;
}

/// Injective map from term pairs to generated variables, shared across one
/// anti-unification. Variables are numbered in insertion order.
class PairTable {
 public:
  explicit PairTable(VarSupply& supply, std::string base = "X") : supply_(supply), base_(std::move(base)) {}

  Term variable_for(const Term& a, const Term& b) {
    auto key = std::make_pair(a, b);
    auto it = table_.find(key);
    if (it != table_.end()) return Term::var(it->second);
    Variable v = supply_.fresh(base_);
    table_.emplace(std::move(key), v);
    return Term::var(v);
  }

  std::size_t size() const noexcept { return table_.size(); }
  const std::map<std::pair<Term, Term>, Variable>& entries() const noexcept { return table_; }

 private:
  VarSupply& supply_;
  std::string base_;
  std::map<std::pair<Term, Term>, Variable> table_;
};

/// Plotkin anti-unification of two terms.
inline Term lgg(const Term& a, const Term& b, PairTable& table) {
  if (a == b) return a;
  if (a.is_compound() && b.is_compound() && a.functor() == b.functor() && a.arity() == b.arity()) {
    std::vector<Term> args;
    args.reserve(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) args.push_back(lgg(a.args()[i], b.args()[i], table));
    return Term::app(a.functor(), std::move(args));
  }
  return table.variable_for(a, b);
}

/// Anti-unification of two literals with the same sign and predicate.
inline std::optional<Literal> lgg(const Literal& a, const Literal& b, PairTable& table) {
  if (a.positive() != b.positive() || a.predicate() != b.predicate() || a.arity() != b.arity())
    return std::nullopt;
  return Literal(a.positive(), lgg(a.atom(), b.atom(), table));
}

/// An LGGθ of {c, d}: anti-unifies every compatible literal pair through one
/// shared PairTable. Not reduced; see lgg_set.
inline Clause lgg(const Clause& c, const Clause& d, VarSupply& supply) {
  PairTable table(supply);
  std::vector<Literal> out;
  for (const Literal& a : c) {
    for (const Literal& b : d) {
      if (auto l = lgg(a, b, table)) out.push_back(std::move(*l));
    }
  }
  return Clause(std::move(out));
}

inline Clause lgg(const Clause& c, const Clause& d) {
  VarSupply supply;
  supply.reserve_above(std::max(max_variable_index(c), max_variable_index(d)));
  return lgg(c, d, supply);
}

/// Reduced LGGθ of a nonempty clause list: a left fold of lgg, reducing
/// after every step to keep the intermediate clauses small.
inline Clause lgg_set(std::span<const Clause> s) {
  if (s.empty()) throw PreconditionError("lgg_set requires a nonempty clause list");
  VarSupply supply;
  for (const Clause& c : s) supply.reserve_above(max_variable_index(c));
  Clause acc = reduce(s.front());
  for (std::size_t i = 1; i < s.size(); ++i) acc = reduce(lgg(acc, s[i], supply));
  return acc;
}

}  // namespace clausegen
