#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "clausegen/detail/literal_search.hpp"
#include "clausegen/unify.hpp"

namespace clausegen {

/// Functor prefix reserved for Skolem constants; the parser rejects it.
inline constexpr std::string_view kSkolemPrefix = "sk_";

inline bool is_skolem_symbol(std::string_view name) { return name.starts_with(kSkolemPrefix); }

/// Renames every variable of `c` to a fresh index, keeping names.
inline Clause rename_fresh(const Clause& c, VarSupply& supply) {
  Substitution s;
  for (const Variable& v : variables_of(c)) s.bind(v, Term::var(supply.fresh(v.name)));
  return apply(c, s);
}

/// Returns variants of `clauses` that pairwise share no variables. The first
/// clause is kept as is; a later clause is renamed only when it shares a
/// variable with an earlier output.
inline std::vector<Clause> rename_apart(std::span<const Clause> clauses, VarSupply& supply) {
  std::vector<Clause> out;
  std::set<Variable> seen;
  for (const Clause& c : clauses) {
    auto vars = variables_of(c);
    bool clash = std::any_of(vars.begin(), vars.end(), [&](const Variable& v) { return seen.count(v); });
    Clause r = clash ? rename_fresh(c, supply) : c;
    for (const Variable& v : variables_of(r)) seen.insert(v);
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<Clause> rename_apart(std::span<const Clause> clauses) {
  VarSupply supply;
  for (const Clause& c : clauses) supply.reserve_above(max_variable_index(c));
  return rename_apart(clauses, supply);
}

/// One-way matching of clauses: s with apply(general, s) == specific.
inline std::optional<Substitution> match(const Clause& general, const Clause& specific) {
  auto r = detail::LiteralSearch(general, specific, detail::SearchMode::cover).run();
  if (!r) return std::nullopt;
  return std::move(r->substitution);
}

/// True iff `a` and `b` are equal up to an injective renaming of variables.
inline bool is_variant(const Clause& a, const Clause& b) {
  if (a.size() != b.size()) return false;
  return detail::LiteralSearch(a, b, detail::SearchMode::variant).run().has_value();
}

namespace detail {

inline std::size_t shape_hash(const Term& t) {
  if (t.is_variable()) return 0x51ed270b27ull;
  if (t.is_ground()) return t.hash();
  std::size_t h = std::hash<std::string>{}(t.functor()) ^ (t.arity() * 0x100000001b3u);
  for (const Term& a : t.args()) h = h * 1099511628211u + shape_hash(a);
  return h;
}

}  // namespace detail

/// Hash invariant under variable renaming; variants always share a key.
inline std::size_t variant_key(const Clause& c) {
  std::vector<std::size_t> parts;
  parts.reserve(c.size());
  for (const Literal& l : c) parts.push_back(detail::shape_hash(l.atom()) * 2 + (l.positive() ? 1 : 0));
  std::sort(parts.begin(), parts.end());
  std::size_t h = parts.size();
  for (std::size_t p : parts) h = h * 1099511628211u ^ p;
  return h;
}

/// Insertion-ordered set of clauses, deduplicated up to variant.
class VariantSet {
 public:
  /// Inserts `c` unless a variant is present; returns true on insertion.
  bool insert(const Clause& c) {
    auto& bucket = buckets_[variant_key(c)];
    for (std::size_t i : bucket) {
      if (is_variant(items_[i], c)) return false;
    }
    bucket.push_back(items_.size());
    items_.push_back(c);
    return true;
  }

  std::optional<std::size_t> find(const Clause& c) const {
    auto it = buckets_.find(variant_key(c));
    if (it == buckets_.end()) return std::nullopt;
    for (std::size_t i : it->second) {
      if (is_variant(items_[i], c)) return i;
    }
    return std::nullopt;
  }

  bool contains(const Clause& c) const { return find(c).has_value(); }
  std::size_t size() const noexcept { return items_.size(); }
  const std::vector<Clause>& items() const noexcept { return items_; }

 private:
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets_;
  std::vector<Clause> items_;
};

/// All factors Cγ, γ an mgu of a unifiable subset Γ ⊆ C (|Γ| ≥ 1), up to
/// variant. Only literals of equal sign and predicate can unify, so subsets
/// are enumerated per group. The first element is always `c` itself.
inline std::vector<Clause> factors(const Clause& c) {
  VariantSet out;
  out.insert(c);
  std::map<std::tuple<bool, std::string, std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < c.size(); ++i)
    groups[{c[i].positive(), c[i].predicate(), c[i].arity()}].push_back(i);

  for (const auto& group : groups) {
    const std::vector<std::size_t>& members = group.second;
    const std::size_t n = members.size();
    if (n < 2) continue;
    // Depth-first over subsets with incremental unification; subsets that
    // fail to unify prune all their supersets.
    std::vector<Literal> chosen;
    auto extend = [&](auto&& self, std::size_t from, const Substitution& theta) -> void {
      for (std::size_t k = from; k < n; ++k) {
        const Literal& l = c[members[k]];
        Substitution next = theta;
        if (!chosen.empty() && !detail::unify_into(chosen.front().atom(), l.atom(), next)) continue;
        chosen.push_back(l);
        if (chosen.size() >= 2) out.insert(apply(c, next));
        self(self, k + 1, next);
        chosen.pop_back();
      }
    };
    extend(extend, 0, Substitution{});
  }
  return out.items();
}

/// True iff some atom occurs both positively and negatively.
inline bool is_tautology(const Clause& c) {
  for (const Literal& l : c) {
    if (l.positive() && c.contains(l.complement())) return true;
  }
  return false;
}

/// True iff some positive and some negative literal share a predicate symbol.
inline bool is_ambivalent(const Clause& c) {
  std::set<Symbol> heads;
  for (const Literal& l : c)
    if (l.positive()) heads.insert(Symbol{l.predicate(), l.arity()});
  for (const Literal& l : c)
    if (l.negative() && heads.count(Symbol{l.predicate(), l.arity()})) return true;
  return false;
}

/// A Skolem substitution together with its inverse.
struct SkolemMap {
  Substitution forward;
  std::map<std::string, Variable> inverse;

  bool empty() const noexcept { return inverse.empty(); }
};

inline void check_no_skolem_symbols(const Clause& c) {
  for (const Symbol& s : functors_of(c)) {
    if (is_skolem_symbol(s.name))
      throw PreconditionError("symbol '" + s.name + "' uses the reserved Skolem prefix");
  }
}

/// Maps every variable of `clauses` (in order of first occurrence) to a fresh
/// constant sk_<n>. Clauses must already be variable-disjoint; a shared
/// variable would receive a single constant.
inline std::pair<std::vector<Clause>, SkolemMap> skolemize(std::span<const Clause> clauses,
                                                           std::span<const Clause> context = {}) {
  for (const Clause& c : clauses) check_no_skolem_symbols(c);
  for (const Clause& c : context) check_no_skolem_symbols(c);
  SkolemMap map;
  std::uint32_t counter = 0;
  for (const Clause& c : clauses) {
    for (const Variable& v : variables_of(c)) {
      if (map.forward.binds(v)) continue;
      std::string name = std::string(kSkolemPrefix) + std::to_string(counter++);
      map.forward.bind(v, Term::app(name));
      map.inverse.emplace(name, v);
    }
  }
  std::vector<Clause> ground;
  ground.reserve(clauses.size());
  for (const Clause& c : clauses) ground.push_back(apply(c, map.forward));
  return {std::move(ground), std::move(map)};
}

inline Term unskolemize(const Term& t, const SkolemMap& map) {
  if (t.is_variable() || map.empty()) return t;
  if (t.arity() == 0) {
    auto it = map.inverse.find(t.functor());
    return it == map.inverse.end() ? t : Term::var(it->second);
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const Term& a : t.args()) args.push_back(unskolemize(a, map));
  return Term::app(t.functor(), std::move(args));
}

inline Literal unskolemize(const Literal& l, const SkolemMap& map) {
  return Literal(l.positive(), unskolemize(l.atom(), map));
}

/// Replaces each Skolem constant of `map` by the variable it stands for.
inline Clause unskolemize(const Clause& c, const SkolemMap& map) {
  std::vector<Literal> out;
  out.reserve(c.size());
  for (const Literal& l : c) out.push_back(unskolemize(l, map));
  return Clause(std::move(out));
}

/// The complement of `c` by `map`: heads become goals, body atoms facts.
inline std::vector<Clause> complement(const Clause& c, const SkolemMap& map) {
  Clause g = apply(c, map.forward);
  if (!g.is_ground()) throw PreconditionError("complement requires a ground Skolemized clause");
  std::vector<Clause> out;
  out.reserve(g.size());
  for (const Literal& l : g) out.push_back(Clause{l.complement()});
  return out;
}

}  // namespace clausegen
