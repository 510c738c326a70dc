#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "clausegen/propositional.hpp"
#include "clausegen/subsumption.hpp"

namespace clausegen {

/// Finite, subterm-closed universe of ground terms for T-implication, with
/// the Skolem substitution used to ground the clauses it was computed from.
struct TermSet {
  std::vector<Term> terms;         // sorted, unique
  SkolemMap skolem;
  std::vector<Clause> origin;      // the clauses, renamed apart
  std::vector<Clause> skolemized;  // origin under skolem.forward

  bool contains(const Term& t) const { return std::binary_search(terms.begin(), terms.end(), t); }

  /// True iff every subterm of every member is a member.
  bool subterm_closed() const {
    for (const Term& t : terms)
      for (const Term& a : t.args())
        if (!contains(a)) return false;
    return true;
  }

  /// True iff every argument term of the ground clause `g` (and its subterms) is a member.
  bool covers(const Clause& g) const {
    for (const Term& t : subterms_of(g))
      if (!contains(t)) return false;
    return true;
  }

  /// A term set given explicitly, without an origin. Subterms are added.
  static TermSet from_terms(std::span<const Term> ground_terms) {
    std::set<Term> all;
    for (const Term& t : ground_terms) {
      if (!t.is_ground()) throw PreconditionError("term sets contain ground terms only");
      collect_subterms(t, all);
    }
    TermSet out;
    out.terms.assign(all.begin(), all.end());
    return out;
  }
};

struct GroundingLimits {
  std::size_t max_instances = 1'000'000;
  std::size_t max_terms = 100'000;
};

/// Term set of `s` w.r.t. `context`. With extra_depth = 0 this is the minimal
/// term set: the terms and subterms of the Skolemized clauses. Each extra
/// round applies every function symbol of s ∪ context (constants included) to
/// the current terms.
inline TermSet term_set(std::span<const Clause> s, std::span<const Clause> context = {},
                        std::size_t extra_depth = 0, const GroundingLimits& limits = {}) {
  TermSet out;
  out.origin = rename_apart(s);
  auto [ground, map] = skolemize(out.origin, context);
  out.skolemized = std::move(ground);
  out.skolem = std::move(map);

  std::set<Term> terms;
  for (const Clause& g : out.skolemized) {
    auto sub = subterms_of(g);
    terms.insert(sub.begin(), sub.end());
  }

  std::set<Symbol> symbols;
  for (const Clause& c : s) {
    auto f = functors_of(c);
    symbols.insert(f.begin(), f.end());
  }
  for (const Clause& c : context) {
    auto f = functors_of(c);
    symbols.insert(f.begin(), f.end());
  }

  for (std::size_t round = 0; round < extra_depth; ++round) {
    std::vector<Term> current(terms.begin(), terms.end());
    for (const Symbol& f : symbols) {
      if (f.arity == 0) {
        terms.insert(Term::app(f.name));
        continue;
      }
      std::vector<std::size_t> pick(f.arity, 0);
      if (current.empty()) break;
      while (true) {
        std::vector<Term> args;
        args.reserve(f.arity);
        for (std::size_t i : pick) args.push_back(current[i]);
        terms.insert(Term::app(f.name, std::move(args)));
        if (terms.size() > limits.max_terms) throw ResourceError("term set size", "--max-terms", limits.max_terms);
        std::size_t k = 0;
        while (k < f.arity && ++pick[k] == current.size()) pick[k++] = 0;
        if (k == f.arity) break;
      }
    }
  }
  out.terms.assign(terms.begin(), terms.end());
  return out;
}

inline TermSet term_set(const Clause& d, std::span<const Clause> context = {}, std::size_t extra_depth = 0,
                        const GroundingLimits& limits = {}) {
  return term_set(std::span<const Clause>(&d, 1), context, extra_depth, limits);
}

/// 𝕀(C, T): the ground instances of `source` with variables drawn from `universe`.
struct InstanceSet {
  std::vector<Clause> clauses;  // sorted, unique
  Clause source;
  std::vector<Term> universe;
};

/// num_terms^num_vars, saturating at cap + 1.
inline std::size_t instance_count_bound(std::size_t num_terms, std::size_t num_vars, std::size_t cap) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < num_vars; ++i) {
    if (num_terms != 0 && n > cap / num_terms) return cap + 1;
    n *= num_terms;
  }
  return n;
}

inline InstanceSet instance_set(const Clause& c, std::span<const Term> universe, const GroundingLimits& limits = {}) {
  InstanceSet out{{}, c, std::vector<Term>(universe.begin(), universe.end())};
  const auto vars = variables_of(c);
  if (vars.empty()) {
    out.clauses.push_back(c);
    return out;
  }
  if (universe.empty()) throw PreconditionError("instance set of a non-ground clause over an empty term set");
  if (instance_count_bound(universe.size(), vars.size(), limits.max_instances) > limits.max_instances)
    throw ResourceError("instance set size", "--max-instances", limits.max_instances);

  std::vector<std::size_t> pick(vars.size(), 0);
  while (true) {
    Substitution s;
    for (std::size_t i = 0; i < vars.size(); ++i) s.bind(vars[i], universe[pick[i]]);
    out.clauses.push_back(apply(c, s));
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == universe.size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  std::sort(out.clauses.begin(), out.clauses.end());
  out.clauses.erase(std::unique(out.clauses.begin(), out.clauses.end()), out.clauses.end());
  return out;
}

inline InstanceSet instance_set(const Clause& c, const TermSet& t, const GroundingLimits& limits = {}) {
  return instance_set(c, t.terms, limits);
}

struct TImplicationOptions {
  /// Answer from sound syntactic checks when they are conclusive and ground
  /// only otherwise. Disable to force the ground route.
  bool prefilters = true;
  GroundingLimits limits;
};

/// 𝕀(c, terms) ⊨ target, for a ground (already Skolemized) target.
inline bool t_implies_ground(const Clause& c, const Clause& target, std::span<const Term> terms,
                             const TImplicationOptions& options = {}) {
  if (!target.is_ground()) throw PreconditionError("T-implication target must be Skolemized");
  check_no_skolem_symbols(c);
  if (is_tautology(target)) return true;
  if (options.prefilters) {
    if (subsumes(c, target)) return true;
    // A T-implier implies the target, so its sign-separated parts subsume.
    if (!subsumes(c.positive_part(), target.positive_part())) return false;
    if (!subsumes(c.negative_part(), target.negative_part())) return false;
    // Implication and θ-subsumption coincide for non-ambivalent targets.
    if (!is_ambivalent(target)) return false;
  }
  if (!c.is_ground() && terms.empty()) return ground_entails({}, target);
  InstanceSet inst = instance_set(c, terms, options.limits);
  return ground_entails(inst.clauses, target);
}

inline void check_term_set_covers(const TermSet& t, const Clause& ground_target) {
  if (!ground_target.is_ground()) throw PreconditionError("term set's Skolem map does not cover the clause");
  if (!t.covers(ground_target)) throw PreconditionError("term set does not contain every term of the Skolemized clause");
  if (!t.subterm_closed()) throw PreconditionError("term set is not closed under subterms");
}

/// C ⇒T D. Without `t`, T is the minimal term set of {d} w.r.t. {c}.
inline bool t_implies(const Clause& c, const Clause& d, const std::optional<TermSet>& t = std::nullopt,
                      const TImplicationOptions& options = {}) {
  if (t) {
    Clause target = apply(d, t->skolem.forward);
    check_term_set_covers(*t, target);
    return t_implies_ground(c, target, t->terms, options);
  }
  TermSet minimal = term_set(d, std::span<const Clause>(&c, 1), 0, options.limits);
  return t_implies_ground(c, minimal.skolemized.front(), minimal.terms, options);
}

/// C ⇔T' D with T' the minimal term set of {c, d} renamed apart and jointly Skolemized.
inline bool t_equivalent(const Clause& c, const Clause& d, const TImplicationOptions& options = {}) {
  const Clause pair[] = {c, d};
  TermSet joint = term_set(pair, {}, 0, options.limits);
  return t_implies_ground(joint.origin[0], joint.skolemized[1], joint.terms, options) &&
         t_implies_ground(joint.origin[1], joint.skolemized[0], joint.terms, options);
}

/// True iff c ⇒T dᵢ for every dᵢ in `s`; `t` must be a term set computed from `s`.
inline bool is_generalization_T(const Clause& c, std::span<const Clause> s, const TermSet& t,
                                const TImplicationOptions& options = {}) {
  if (t.origin.size() != s.size()) throw PreconditionError("term set was not computed from this clause list");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!is_variant(t.origin[i], s[i])) throw PreconditionError("term set was not computed from this clause list");
    check_term_set_covers(t, t.skolemized[i]);
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!t_implies_ground(c, t.skolemized[i], t.terms, options)) return false;
  }
  return true;
}

}  // namespace clausegen
