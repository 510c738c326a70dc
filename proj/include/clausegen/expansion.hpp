#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "clausegen/enumerate.hpp"
#include "clausegen/grounding.hpp"
#include "clausegen/resolution.hpp"

namespace clausegen {

/// One or-introduction: replace member `target` D of the evolving set by
/// D ∪ {literal} (same position) and append D ∪ {¬literal}.
struct ExpansionStep {
  std::size_t target = 0;
  Literal literal;
};

using ExpansionScript = std::vector<ExpansionStep>;

/// The set or-introduced from `c` by `script`, in insertion order; it has
/// script.size() + 1 members.
inline std::vector<Clause> or_introduce(const Clause& c, std::span<const ExpansionStep> script) {
  std::vector<Clause> set{c};
  for (const ExpansionStep& step : script) {
    if (step.target >= set.size())
      throw PreconditionError("or-introduction target " + std::to_string(step.target) + " out of range (set has " +
                              std::to_string(set.size()) + " clauses)");
    const Clause d = set[step.target];
    set[step.target] = d.with(step.literal);
    set.push_back(d.with(step.literal.complement()));
  }
  return set;
}

/// Re-derives the source of an or-introduced set by resolving the two
/// children of each step upon its literal, last step first. Returns the
/// number of resolutions performed, or nullopt when the replay fails.
inline std::optional<std::size_t> replay_resolutions(std::vector<Clause> set, std::span<const ExpansionStep> script,
                                                     const Clause& source) {
  std::size_t count = 0;
  for (std::size_t k = script.size(); k-- > 0;) {
    const ExpansionStep& step = script[k];
    const std::size_t appended = k + 1;  // the ¬literal child of step k
    if (appended >= set.size() || step.target >= appended) return std::nullopt;
    auto r = resolve_on(set[step.target], set[appended], step.literal);
    if (!r) return std::nullopt;
    set[step.target] = std::move(*r);
    set.erase(set.begin() + static_cast<std::ptrdiff_t>(appended));
    ++count;
  }
  if (set.size() != 1 || !(set.front() == source)) return std::nullopt;
  return count;
}

/// An expansion: the LGGθ of a set or-introduced from `source` by `script`.
struct Expansion {
  Clause source;
  ExpansionScript script;
  std::vector<Clause> or_set;
  Clause result;
};

inline Expansion expand(const Clause& d, const ExpansionScript& script) {
  Expansion e{d, script, or_introduce(d, script), Clause{}};
  e.result = lgg_set(e.or_set);
  return e;
}

/// Ground literals over the predicates of `target` and the given terms, both
/// signs. Literals whose atom already occurs in the target are kept; the
/// script search skips them since they leave a child equal to its parent.
inline std::vector<Literal> candidate_literals(const Clause& target, std::span<const Term> terms) {
  std::vector<Literal> out;
  for (const Symbol& p : predicates_of(target)) {
    std::vector<std::size_t> pick(p.arity, 0);
    if (p.arity > 0 && terms.empty()) continue;
    while (true) {
      std::vector<Term> args;
      for (std::size_t i : pick) args.push_back(terms[i]);
      Term atom = Term::app(p.name, std::move(args));
      out.emplace_back(true, atom);
      out.emplace_back(false, atom);
      std::size_t i = 0;
      while (i < p.arity && ++pick[i] == terms.size()) pick[i++] = 0;
      if (i == p.arity) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Candidate literals for `d` w.r.t. term set `t` (d is Skolemized by t).
inline std::vector<Literal> candidate_literals(const Clause& d, const TermSet& t) {
  Clause target = apply(d, t.skolem.forward);
  check_term_set_covers(t, target);
  return candidate_literals(target, t.terms);
}

struct ExpansionOptions {
  std::size_t max_script_length = 3;
  /// Audit family bounds; 0 selects |d| + 1 literals and depth(d).
  std::size_t audit_max_literals = 0;
  std::size_t audit_max_depth = 0;
  std::size_t audit_max_variables = 0;  // 0: audit literal bound × max predicate arity
  TImplicationOptions implication;
};

/// Clauses of the audit space that T-imply `d` w.r.t. `t`.
inline std::vector<Clause> audit_family(const Clause& d, const TermSet& t, const ExpansionOptions& options = {}) {
  const Clause target = apply(d, t.skolem.forward);
  check_term_set_covers(t, target);
  ClauseSpace space = space_of(std::span<const Clause>(&d, 1));
  space.max_literals = options.audit_max_literals ? options.audit_max_literals : d.size() + 1;
  space.max_depth = options.audit_max_depth ? options.audit_max_depth : std::max<std::size_t>(depth_of(d), 1);
  std::size_t arity = 0;
  for (const Symbol& p : space.predicates) arity = std::max(arity, p.arity);
  space.max_variables = options.audit_max_variables ? options.audit_max_variables : space.max_literals * arity;
  std::vector<Clause> out;
  enumerate_clauses(space, [&](const Clause& c) {
    if (t_implies_ground(c, target, t.terms, options.implication)) out.push_back(c);
  });
  return out;
}

struct TCompleteResult {
  std::optional<Expansion> expansion;  // unset: not found within budget
  std::vector<Clause> audit;           // T-impliers the expansion had to capture
  std::size_t expansions_tried = 0;
};

/// Searches scripts over candidate_literals(d, t) breadth-first by length and
/// returns the first expansion θ-subsumed by every audit clause. The result
/// is un-Skolemized. A miss means "not found within budget", nothing more.
inline TCompleteResult t_complete_expansion(const Clause& d, const TermSet& t, const ExpansionOptions& options = {}) {
  if (is_tautology(d)) throw PreconditionError("T-complete expansions are defined for non-tautological clauses");
  const Clause target = apply(d, t.skolem.forward);
  check_term_set_covers(t, target);

  TCompleteResult out;
  if (!is_ambivalent(d)) {
    // Every T-implier of a non-ambivalent clause already θ-subsumes it.
    out.expansions_tried = 1;
    out.expansion = Expansion{d, {}, {d}, d};
    return out;
  }
  out.audit = audit_family(d, t, options);
  const auto candidates = candidate_literals(target, t.terms);

  std::set<std::vector<Clause>> tried;
  auto attempt = [&](const ExpansionScript& script, std::vector<Clause> set) -> bool {
    std::vector<Clause> key = set;
    std::sort(key.begin(), key.end());
    if (!tried.insert(std::move(key)).second) return false;
    ++out.expansions_tried;
    Clause result = unskolemize(lgg_set(set), t.skolem);
    for (const Clause& c : out.audit) {
      if (!subsumes(c, result)) return false;
    }
    out.expansion = Expansion{d, script, std::move(set), std::move(result)};
    // Script literals and members are reported in d's own vocabulary.
    for (ExpansionStep& s : out.expansion->script) s.literal = unskolemize(s.literal, t.skolem);
    for (Clause& m : out.expansion->or_set) m = unskolemize(m, t.skolem);
    return true;
  };

  // Frontier of (script, or-set) pairs of the current length.
  std::vector<std::pair<ExpansionScript, std::vector<Clause>>> frontier{{{}, {target}}};
  for (std::size_t length = 0;; ++length) {
    for (const auto& [script, set] : frontier) {
      if (attempt(script, set)) return out;
    }
    if (length == options.max_script_length) break;
    std::vector<std::pair<ExpansionScript, std::vector<Clause>>> next;
    std::set<std::vector<Clause>> queued;
    for (const auto& [script, set] : frontier) {
      for (const Literal& lit : candidates) {
        for (std::size_t target_index = 0; target_index < set.size(); ++target_index) {
          const Clause& member = set[target_index];
          // Steps that leave a child equal to its parent add nothing.
          if (member.contains(lit) || member.contains(lit.complement())) continue;
          ExpansionScript s = script;
          s.push_back(ExpansionStep{target_index, lit});
          std::vector<Clause> child = set;
          child[target_index] = member.with(lit);
          child.push_back(member.with(lit.complement()));
          std::vector<Clause> key = child;
          std::sort(key.begin(), key.end());
          if (!queued.insert(std::move(key)).second) continue;
          next.emplace_back(std::move(s), std::move(child));
        }
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return out;
}

struct LggtOptions {
  ExpansionOptions expansion;
};

struct LggtResult {
  Clause clause;
  std::vector<Expansion> expansions;  // one per non-tautological input
  bool all_tautologies = false;
};

/// LGGT of `s` w.r.t. term set `t` (computed from s): the reduced LGGθ of a
/// T-complete expansion of each non-tautological member, checked to be a
/// generalization under T-implication before it is returned.
inline LggtResult lggt(std::span<const Clause> s, const TermSet& t, const LggtOptions& options = {}) {
  if (s.empty()) throw PreconditionError("lggt requires a nonempty clause list");
  if (t.origin.size() != s.size()) throw PreconditionError("term set was not computed from this clause list");
  LggtResult out;
  std::vector<Clause> expansions;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Clause& d = t.origin[i];
    if (is_tautology(d)) continue;
    TCompleteResult r = t_complete_expansion(d, t, options.expansion);
    if (!r.expansion)
      throw ResourceError("T-complete expansion script length for clause " + std::to_string(i), "--max-len",
                          options.expansion.max_script_length);
    expansions.push_back(r.expansion->result);
    out.expansions.push_back(std::move(*r.expansion));
  }
  if (expansions.empty()) {
    // Every member is a tautology, and every tautology is an LGGT.
    out.all_tautologies = true;
    for (const Literal& l : s.front()) {
      if (l.positive() && s.front().contains(l.complement())) {
        out.clause = Clause{l, l.complement()};
        break;
      }
    }
    return out;
  }
  out.clause = reduce(lgg_set(expansions));
  if (!is_generalization_T(out.clause, s, t, options.expansion.implication))
    throw Fault("lggt candidate failed verification: not a generalization under T-implication of the input");
  return out;
}

struct BruteforceResult {
  Clause clause;
  std::size_t enumerated = 0;
  std::vector<Clause> generalizations;
};

/// Oracle for lggt: enumerates every clause over the symbols of `s` with at
/// most `size_bound` literals and argument depth `depth_bound`, keeps the
/// generalizations under T-implication w.r.t. `t`, and returns one that every
/// other kept clause T-implies w.r.t. its own minimal term set.
inline BruteforceResult lggt_bruteforce(std::span<const Clause> s, const TermSet& t, std::size_t size_bound,
                                        std::size_t depth_bound, const TImplicationOptions& options = {},
                                        std::size_t max_variables = 0, std::size_t max_clauses = 200'000) {
  if (s.empty()) throw PreconditionError("lggt_bruteforce requires a nonempty clause list");
  ClauseSpace space = space_of(s);
  space.max_literals = size_bound;
  space.max_depth = depth_bound;
  std::size_t arity = 0;
  for (const Symbol& p : space.predicates) arity = std::max(arity, p.arity);
  space.max_variables = max_variables ? max_variables : size_bound * arity;
  space.max_clauses = max_clauses;

  BruteforceResult out;
  out.enumerated = enumerate_clauses(space, [&](const Clause& c) {
    if (is_generalization_T(c, s, t, options)) out.generalizations.push_back(c);
  });
  // Most specific candidates first.
  std::vector<std::size_t> order(out.generalizations.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return out.generalizations[a].size() > out.generalizations[b].size();
  });
  for (std::size_t i : order) {
    const Clause& candidate = out.generalizations[i];
    bool least = true;
    for (const Clause& other : out.generalizations) {
      if (!t_implies(other, candidate, std::nullopt, options)) {
        least = false;
        break;
      }
    }
    if (least) {
      out.clause = candidate;
      return out;
    }
  }
  throw ResourceError("lggt_bruteforce bounds (no least generalization in the enumerated space)", "--size/--depth",
                      size_bound);
}

}  // namespace clausegen
