#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "clausegen/unify.hpp"

namespace clausegen::detail {

enum class SearchMode {
  subsume,  // general·θ ⊆ specific
  cover,    // general·θ == specific
  variant,  // θ an injective variable renaming with general·θ == specific
};

struct SearchResult {
  Substitution substitution;
  std::vector<std::size_t> mapping;  // general literal index -> specific literal index
};

// Trail-based matcher: bindings added during a failed attempt are undone.
class TrailMatcher {
 public:
  explicit TrailMatcher(bool renaming_only) : renaming_only_(renaming_only) {}

  bool match(const Term& g, const Term& s) {
    if (g.is_variable()) {
      auto it = bindings_.find(g.variable());
      if (it != bindings_.end()) return it->second == s;
      if (renaming_only_) {
        if (!s.is_variable() || images_.count(s.variable())) return false;
        images_.insert(s.variable());
      }
      bindings_.emplace(g.variable(), s);
      trail_.push_back(g.variable());
      return true;
    }
    if (s.is_variable()) return false;
    if (g.is_ground()) return g == s;
    if (g.functor() != s.functor() || g.arity() != s.arity()) return false;
    for (std::size_t i = 0; i < g.arity(); ++i) {
      if (!match(g.args()[i], s.args()[i])) return false;
    }
    return true;
  }

  std::size_t mark() const noexcept { return trail_.size(); }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto it = bindings_.find(trail_.back());
      if (renaming_only_) images_.erase(it->second.variable());
      bindings_.erase(it);
      trail_.pop_back();
    }
  }

  Substitution substitution() const { return Substitution(bindings_); }

 private:
  bool renaming_only_;
  Bindings bindings_;
  std::set<Variable> images_;
  std::vector<Variable> trail_;
};

class LiteralSearch {
 public:
  LiteralSearch(const Clause& general, const Clause& specific, SearchMode mode)
      : general_(general), specific_(specific), mode_(mode), matcher_(mode == SearchMode::variant) {}

  /// Subsume mode only: within each component, keep the solution with the
  /// fewest non-identity bindings, then the fewest distinct target literals.
  /// Stops improving once `node_budget` search nodes have been spent.
  LiteralSearch& closest(std::size_t node_budget) {
    closest_ = mode_ == SearchMode::subsume;
    budget_ = node_budget;
    return *this;
  }

  std::optional<SearchResult> run() {
    if (mode_ != SearchMode::subsume && general_.size() < specific_.size()) return std::nullopt;
    if (mode_ == SearchMode::variant && general_.size() != specific_.size()) return std::nullopt;

    candidates_.assign(general_.size(), {});
    for (std::size_t i = 0; i < general_.size(); ++i) {
      const Literal& g = general_[i];
      for (std::size_t j = 0; j < specific_.size(); ++j) {
        const Literal& s = specific_[j];
        if (g.positive() != s.positive() || g.predicate() != s.predicate() || g.arity() != s.arity())
          continue;
        TrailMatcher probe(mode_ == SearchMode::variant);
        if (probe.match(g.atom(), s.atom())) candidates_[i].push_back(j);
      }
      if (candidates_[i].empty()) return std::nullopt;
    }
    plan();
    mapping_.assign(general_.size(), 0);
    hits_.assign(specific_.size(), 0);
    covered_ = 0;
    // Components share no variables, so a failed component never needs
    // another component's choices revisited.
    for (std::size_t k = 0; k + 1 < bounds_.size(); ++k) {
      const bool found = closest_ ? best_of(bounds_[k], bounds_[k + 1]) : descend(bounds_[k], bounds_[k + 1]);
      if (!found) return std::nullopt;
    }
    if (mode_ != SearchMode::subsume && covered_ != specific_.size()) return std::nullopt;
    return SearchResult{matcher_.substitution(), mapping_};
  }

 private:
  // Orders literals for the search. In subsume mode the general clause is cut
  // into variable-connected components; each component starts at its literal
  // with fewest candidates and grows through shared variables, fewest
  // candidates first. Other modes need global coverage and use one block.
  void plan() {
    const std::size_t n = general_.size();
    std::vector<std::vector<Variable>> vars(n);
    for (std::size_t i = 0; i < n; ++i) {
      collect_variables(general_[i].atom(), vars[i]);
      std::sort(vars[i].begin(), vars[i].end());
      vars[i].erase(std::unique(vars[i].begin(), vars[i].end()), vars[i].end());
    }
    auto shares = [&](std::size_t a, std::size_t b) {
      for (const Variable& v : vars[a])
        if (std::binary_search(vars[b].begin(), vars[b].end(), v)) return true;
      return false;
    };
    const bool split = mode_ == SearchMode::subsume;
    order_.clear();
    bounds_.assign(1, 0);
    std::vector<bool> placed(n, false);
    auto fewest = [&](auto&& eligible) {
      std::size_t best = n;
      for (std::size_t i = 0; i < n; ++i)
        if (!placed[i] && eligible(i) && (best == n || candidates_[i].size() < candidates_[best].size())) best = i;
      return best;
    };
    while (order_.size() < n) {
      const std::size_t start = order_.size();
      std::size_t next = fewest([](std::size_t) { return true; });
      while (next != n) {
        placed[next] = true;
        order_.push_back(next);
        next = fewest([&](std::size_t i) {
          for (std::size_t k = start; k < order_.size(); ++k)
            if (shares(i, order_[k])) return true;
          return !split;
        });
      }
      bounds_.push_back(order_.size());
    }
  }

  using Score = std::pair<std::size_t, std::size_t>;

  Score score(std::size_t begin, std::size_t end) const {
    std::vector<Variable> vars;
    std::set<std::size_t> image;
    for (std::size_t k = begin; k < end; ++k) {
      collect_variables(general_[order_[k]].atom(), vars);
      image.insert(mapping_[order_[k]]);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    std::size_t moved = 0;
    const Substitution current = matcher_.substitution();
    for (const Variable& v : vars) moved += current.binds(v);
    return {moved, image.size()};
  }

  // Enumerates every solution of one component and re-establishes the best.
  bool best_of(std::size_t begin, std::size_t end) {
    std::optional<Score> best;
    std::vector<std::size_t> best_mapping;
    std::size_t nodes = 0;
    std::function<void(std::size_t)> walk = [&](std::size_t depth) {
      if (best && nodes > budget_) return;
      ++nodes;
      if (depth == end) {
        const Score s = score(begin, end);
        if (!best || s < *best) {
          best = s;
          best_mapping.assign(mapping_.begin(), mapping_.end());
        }
        return;
      }
      const std::size_t i = order_[depth];
      for (std::size_t j : candidates_[i]) {
        const std::size_t mark = matcher_.mark();
        if (matcher_.match(general_[i].atom(), specific_[j].atom())) {
          mapping_[i] = j;
          walk(depth + 1);
        }
        matcher_.undo(mark);
      }
    };
    walk(begin);
    if (!best) return false;
    for (std::size_t k = begin; k < end; ++k) {
      const std::size_t i = order_[k];
      mapping_[i] = best_mapping[i];
      if (!matcher_.match(general_[i].atom(), specific_[mapping_[i]].atom())) return false;
    }
    return true;
  }

  bool descend(std::size_t depth, std::size_t end) {
    if (depth == end) return true;
    // Remaining literals cannot cover what is still uncovered.
    if (mode_ != SearchMode::subsume && specific_.size() - covered_ > end - depth) return false;
    const std::size_t i = order_[depth];
    for (std::size_t j : candidates_[i]) {
      const std::size_t mark = matcher_.mark();
      if (matcher_.match(general_[i].atom(), specific_[j].atom())) {
        mapping_[i] = j;
        if (hits_[j]++ == 0) ++covered_;
        if (descend(depth + 1, end) && (depth + 1 < end || mode_ == SearchMode::subsume ||
                                        covered_ == specific_.size()))
          return true;
        if (--hits_[j] == 0) --covered_;
      }
      matcher_.undo(mark);
    }
    return false;
  }

  const Clause& general_;
  const Clause& specific_;
  SearchMode mode_;
  TrailMatcher matcher_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> bounds_;  // component k occupies order_[bounds_[k], bounds_[k+1])
  std::vector<std::size_t> mapping_;
  std::vector<std::size_t> hits_;
  std::size_t covered_ = 0;
  bool closest_ = false;
  std::size_t budget_ = 0;
};

}  // namespace clausegen::detail
