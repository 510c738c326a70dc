#pragma once

#include <functional>
#include <set>
#include <vector>

#include "clausegen/clause_ops.hpp"

namespace clausegen {

/// Bounds on an enumerated clause space.
struct ClauseSpace {
  std::set<Symbol> predicates;
  std::set<Symbol> functors;  // constants have arity 0
  std::size_t max_literals = 2;
  std::size_t max_depth = 1;      // argument-term depth
  std::size_t max_variables = 2;  // distinct variables per clause
  std::size_t max_clauses = 2'000'000;
};

/// The symbols of `clauses`, ignoring Skolem constants.
inline ClauseSpace space_of(std::span<const Clause> clauses) {
  ClauseSpace space;
  for (const Clause& c : clauses) {
    for (const Symbol& p : predicates_of(c)) space.predicates.insert(p);
    for (const Symbol& f : functors_of(c))
      if (!is_skolem_symbol(f.name)) space.functors.insert(f);
  }
  return space;
}

namespace detail {

inline std::vector<Term> terms_up_to_depth(const ClauseSpace& space, std::size_t depth) {
  std::vector<std::vector<Term>> by_depth(depth + 1);  // by_depth[k]: terms of depth exactly k
  if (depth == 0) return {};
  for (std::size_t v = 0; v < space.max_variables; ++v) by_depth[1].push_back(Term::var("V", static_cast<std::uint32_t>(v)));
  for (const Symbol& f : space.functors)
    if (f.arity == 0) by_depth[1].push_back(Term::app(f.name));
  for (std::size_t k = 2; k <= depth; ++k) {
    std::vector<Term> shallower;
    for (std::size_t j = 1; j < k; ++j) shallower.insert(shallower.end(), by_depth[j].begin(), by_depth[j].end());
    for (const Symbol& f : space.functors) {
      if (f.arity == 0) continue;
      std::vector<std::size_t> pick(f.arity, 0);
      while (true) {
        std::vector<Term> args;
        std::size_t d = 0;
        for (std::size_t i : pick) {
          args.push_back(shallower[i]);
          d = std::max(d, shallower[i].depth());
        }
        if (d == k - 1) by_depth[k].push_back(Term::app(f.name, std::move(args)));
        std::size_t i = 0;
        while (i < f.arity && ++pick[i] == shallower.size()) pick[i++] = 0;
        if (i == f.arity) break;
      }
    }
  }
  std::vector<Term> out;
  for (const auto& level : by_depth) out.insert(out.end(), level.begin(), level.end());
  return out;
}

// Variable ids of `l` in order of first occurrence.
inline std::vector<std::uint32_t> variable_ids(const Literal& l) {
  std::vector<Variable> vars;
  collect_variables(l.atom(), vars);
  std::vector<std::uint32_t> ids;
  for (const Variable& v : vars) ids.push_back(v.index);
  return ids;
}

}  // namespace detail

/// Calls `visit` on every clause of the space, up to variant, smallest
/// clauses first; the empty clause is included. Variables are introduced in
/// order V, V_1, V_2, ... by first occurrence. Returns the number visited.
inline std::size_t enumerate_clauses(const ClauseSpace& space, const std::function<void(const Clause&)>& visit) {
  const auto terms = detail::terms_up_to_depth(space, space.max_depth);
  std::vector<Literal> pool;
  for (const Symbol& p : space.predicates) {
    for (bool sign : {true, false}) {
      if (p.arity == 0) {
        pool.emplace_back(sign, p.name);
        continue;
      }
      if (terms.empty()) continue;
      std::vector<std::size_t> pick(p.arity, 0);
      while (true) {
        std::vector<Term> args;
        for (std::size_t i : pick) args.push_back(terms[i]);
        pool.emplace_back(sign, p.name, std::move(args));
        std::size_t i = 0;
        while (i < p.arity && ++pick[i] == terms.size()) pick[i++] = 0;
        if (i == p.arity) break;
      }
    }
  }
  std::vector<std::vector<std::uint32_t>> ids;
  ids.reserve(pool.size());
  for (const Literal& l : pool) ids.push_back(detail::variable_ids(l));

  std::size_t visited = 0;
  std::vector<std::size_t> chosen;
  for (std::size_t size = 0; size <= space.max_literals; ++size) {
    VariantSet seen;
    auto extend = [&](auto&& self, std::size_t from, std::uint32_t used) -> void {
      if (chosen.size() == size) {
        std::vector<Literal> lits;
        for (std::size_t i : chosen) lits.push_back(pool[i]);
        Clause c(std::move(lits));
        if (c.size() != size || !seen.insert(c)) return;
        if (++visited > space.max_clauses) throw ResourceError("enumerated clauses", "--max-clauses", space.max_clauses);
        visit(c);
        return;
      }
      for (std::size_t i = from; i < pool.size(); ++i) {
        // New variables must appear in increasing order.
        std::uint32_t next = used;
        bool ok = true;
        for (std::uint32_t v : ids[i]) {
          if (v < next) continue;
          if (v != next) {
            ok = false;
            break;
          }
          ++next;
        }
        if (!ok) continue;
        chosen.push_back(i);
        self(self, i + 1, next);
        chosen.pop_back();
      }
    };
    extend(extend, 0, 0);
  }
  return visited;
}

}  // namespace clausegen
