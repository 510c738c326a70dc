#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <span>
#include <vector>

#include "clausegen/clause.hpp"

namespace clausegen {

/// Dense numbering of the ground atoms seen in one entailment query.
class GroundAtomAlphabet {
 public:
  std::size_t index(const Term& atom) {
    auto [it, inserted] = ids_.try_emplace(atom, atoms_.size());
    if (inserted) atoms_.push_back(atom);
    return it->second;
  }

  std::size_t size() const noexcept { return atoms_.size(); }
  const Term& atom(std::size_t i) const { return atoms_.at(i); }

 private:
  std::map<Term, std::size_t> ids_;
  std::vector<Term> atoms_;
};

/// Propositional literal: +(i+1) for atom i true, -(i+1) for atom i false.
using PropLiteral = std::int32_t;
using PropClause = std::vector<PropLiteral>;

/// Complete satisfiability check: unit propagation plus chronological
/// branching on the lowest-numbered unassigned atom.
class Dpll {
 public:
  Dpll(std::size_t num_atoms, std::vector<PropClause> clauses)
      : value_(num_atoms, 0), occurrences_(2 * num_atoms) {
    for (PropClause& c : clauses) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      bool tautology = false;
      for (std::size_t i = 0; i + 1 < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
          if (c[i] == -c[j]) tautology = true;
      if (tautology) continue;
      if (c.empty()) trivially_unsat_ = true;
      const std::size_t id = clauses_.size();
      for (PropLiteral l : c) occurrences_[slot(l)].push_back(id);
      clauses_.push_back(std::move(c));
    }
    false_count_.assign(clauses_.size(), 0);
    true_count_.assign(clauses_.size(), 0);
  }

  bool satisfiable() {
    if (trivially_unsat_) return false;
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
      if (clauses_[i].size() == 1) queue_.push_back(clauses_[i][0]);
    }
    return search();
  }

  /// Value of atom i in the model found by the last successful call.
  bool model_value(std::size_t i) const { return value_[i] > 0; }

 private:
  static std::size_t slot(PropLiteral l) {
    return 2 * static_cast<std::size_t>(std::abs(l) - 1) + (l < 0 ? 1 : 0);
  }
  std::int8_t literal_value(PropLiteral l) const {
    std::int8_t v = value_[static_cast<std::size_t>(std::abs(l) - 1)];
    return l > 0 ? v : static_cast<std::int8_t>(-v);
  }

  // Makes `l` true; returns false on conflict.
  bool assign(PropLiteral l) {
    value_[static_cast<std::size_t>(std::abs(l) - 1)] = l > 0 ? 1 : -1;
    trail_.push_back(l);
    for (std::size_t c : occurrences_[slot(l)]) ++true_count_[c];
    bool ok = true;
    for (std::size_t c : occurrences_[slot(-l)]) {
      ++false_count_[c];
      if (true_count_[c] > 0) continue;
      const std::size_t open = clauses_[c].size() - false_count_[c];
      if (open == 0) {
        ok = false;
      } else if (open == 1) {
        for (PropLiteral u : clauses_[c]) {
          if (literal_value(u) == 0) {
            queue_.push_back(u);
            break;
          }
        }
      }
    }
    return ok;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      PropLiteral l = trail_.back();
      trail_.pop_back();
      for (std::size_t c : occurrences_[slot(l)]) --true_count_[c];
      for (std::size_t c : occurrences_[slot(-l)]) --false_count_[c];
      value_[static_cast<std::size_t>(std::abs(l) - 1)] = 0;
    }
  }

  bool propagate() {
    while (!queue_.empty()) {
      PropLiteral l = queue_.back();
      queue_.pop_back();
      std::int8_t v = literal_value(l);
      if (v > 0) continue;
      if (v < 0 || !assign(l)) {
        queue_.clear();
        return false;
      }
    }
    return true;
  }

  bool search() {
    const std::size_t mark = trail_.size();
    if (!propagate()) {
      undo(mark);
      return false;
    }
    std::size_t atom = 0;
    while (atom < value_.size() && value_[atom] != 0) ++atom;
    if (atom == value_.size()) return true;
    for (PropLiteral choice : {static_cast<PropLiteral>(atom + 1), -static_cast<PropLiteral>(atom + 1)}) {
      const std::size_t branch = trail_.size();
      queue_.push_back(choice);
      if (search()) return true;
      undo(branch);
    }
    undo(mark);
    return false;
  }

  std::vector<std::int8_t> value_;
  std::vector<std::vector<std::size_t>> occurrences_;
  std::vector<PropClause> clauses_;
  std::vector<std::size_t> false_count_;
  std::vector<std::size_t> true_count_;
  std::vector<PropLiteral> trail_;
  std::vector<PropLiteral> queue_;
  bool trivially_unsat_ = false;
};

inline PropClause encode(const Clause& c, GroundAtomAlphabet& alphabet) {
  PropClause out;
  out.reserve(c.size());
  for (const Literal& l : c) {
    auto id = static_cast<PropLiteral>(alphabet.index(l.atom()) + 1);
    out.push_back(l.positive() ? id : -id);
  }
  return out;
}

/// Propositional satisfiability of a set of ground clauses.
inline bool ground_satisfiable(std::span<const Clause> clauses) {
  GroundAtomAlphabet alphabet;
  std::vector<PropClause> encoded;
  encoded.reserve(clauses.size());
  for (const Clause& c : clauses) {
    if (!c.is_ground()) throw PreconditionError("ground_satisfiable requires ground clauses");
    encoded.push_back(encode(c, alphabet));
  }
  return Dpll(alphabet.size(), std::move(encoded)).satisfiable();
}

/// premises ⊨ goal for ground clauses: premises together with the unit
/// negations of goal's literals are unsatisfiable.
inline bool ground_entails(std::span<const Clause> premises, const Clause& goal) {
  if (!goal.is_ground()) throw PreconditionError("ground_entails requires a ground goal");
  GroundAtomAlphabet alphabet;
  std::vector<PropClause> encoded;
  encoded.reserve(premises.size() + goal.size());
  // Goal atoms are numbered first so branching starts on them.
  for (const Literal& l : goal) encoded.push_back(encode(Clause{l.complement()}, alphabet));
  for (const Clause& c : premises) {
    if (!c.is_ground()) throw PreconditionError("ground_entails requires ground premises");
    encoded.push_back(encode(c, alphabet));
  }
  return !Dpll(alphabet.size(), std::move(encoded)).satisfiable();
}

}  // namespace clausegen
