#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "clausegen/term.hpp"

namespace clausegen {

/// A signed atom. The atom is stored as a compound term whose functor is the
/// predicate symbol, so unification and matching work on literals directly.
class Literal {
 public:
  Literal(bool positive, Term atom) : positive_(positive), atom_(std::move(atom)) {
    if (atom_.is_variable()) throw PreconditionError("literal atom must not be a variable");
  }
  Literal(bool positive, std::string predicate, std::vector<Term> args = {})
      : Literal(positive, Term::app(std::move(predicate), std::move(args))) {}

  static Literal pos(std::string predicate, std::vector<Term> args = {}) {
    return Literal(true, std::move(predicate), std::move(args));
  }
  static Literal neg(std::string predicate, std::vector<Term> args = {}) {
    return Literal(false, std::move(predicate), std::move(args));
  }

  bool positive() const noexcept { return positive_; }
  bool negative() const noexcept { return !positive_; }
  const Term& atom() const noexcept { return atom_; }
  const std::string& predicate() const { return atom_.functor(); }
  std::span<const Term> args() const noexcept { return atom_.args(); }
  std::size_t arity() const noexcept { return atom_.arity(); }
  bool is_ground() const noexcept { return atom_.is_ground(); }

  Literal complement() const { return Literal(!positive_, atom_); }

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.positive_ == b.positive_ && a.atom_ == b.atom_;
  }
  /// Positive literals first, then by predicate and arguments.
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    if (a.positive_ != b.positive_) {
      return a.positive_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.atom_ <=> b.atom_;
  }

 private:
  bool positive_;
  Term atom_;
};

/// A finite set of literals read as their disjunction. Literals are kept in
/// canonical order without duplicates; the order carries no meaning.
class Clause {
 public:
  Clause() = default;
  Clause(std::initializer_list<Literal> lits) : lits_(lits) { normalize(); }
  explicit Clause(std::vector<Literal> lits) : lits_(std::move(lits)) { normalize(); }

  std::size_t size() const noexcept { return lits_.size(); }
  bool empty() const noexcept { return lits_.empty(); }
  const Literal& operator[](std::size_t i) const { return lits_[i]; }
  auto begin() const noexcept { return lits_.begin(); }
  auto end() const noexcept { return lits_.end(); }
  const std::vector<Literal>& literals() const noexcept { return lits_; }

  bool contains(const Literal& l) const { return std::binary_search(lits_.begin(), lits_.end(), l); }

  Clause with(const Literal& l) const {
    Clause c = *this;
    auto it = std::lower_bound(c.lits_.begin(), c.lits_.end(), l);
    if (it == c.lits_.end() || !(*it == l)) c.lits_.insert(it, l);
    return c;
  }

  Clause without(std::size_t i) const {
    Clause c = *this;
    c.lits_.erase(c.lits_.begin() + static_cast<std::ptrdiff_t>(i));
    return c;
  }

  Clause without(const Literal& l) const {
    Clause c = *this;
    auto it = std::lower_bound(c.lits_.begin(), c.lits_.end(), l);
    if (it != c.lits_.end() && *it == l) c.lits_.erase(it);
    return c;
  }

  Clause united(const Clause& other) const {
    std::vector<Literal> out;
    out.reserve(lits_.size() + other.lits_.size());
    std::set_union(lits_.begin(), lits_.end(), other.lits_.begin(), other.lits_.end(),
                   std::back_inserter(out));
    Clause c;
    c.lits_ = std::move(out);
    return c;
  }

  /// C⁺: the positive literals.
  Clause positive_part() const {
    Clause c;
    for (const Literal& l : lits_)
      if (l.positive()) c.lits_.push_back(l);
    return c;
  }
  /// C⁻: the negative literals.
  Clause negative_part() const {
    Clause c;
    for (const Literal& l : lits_)
      if (l.negative()) c.lits_.push_back(l);
    return c;
  }

  bool is_ground() const {
    return std::all_of(lits_.begin(), lits_.end(), [](const Literal& l) { return l.is_ground(); });
  }

  bool is_subset_of(const Clause& other) const {
    return std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(), lits_.end());
  }

  friend bool operator==(const Clause&, const Clause&) = default;
  friend std::strong_ordering operator<=>(const Clause& a, const Clause& b) {
    return std::lexicographical_compare_three_way(a.lits_.begin(), a.lits_.end(), b.lits_.begin(),
                                                  b.lits_.end());
  }

 private:
  void normalize() {
    std::sort(lits_.begin(), lits_.end());
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
  }

  std::vector<Literal> lits_;
};

inline std::vector<Variable> variables_of(const Clause& c) {
  std::vector<Variable> out;
  for (const Literal& l : c) collect_variables(l.atom(), out);
  return out;
}

inline std::uint32_t max_variable_index(const Clause& c) {
  std::uint32_t m = 0;
  for (const Literal& l : c) m = std::max(m, max_variable_index(l.atom()));
  return m;
}

/// Function symbols (constants included) occurring in argument positions.
inline std::set<Symbol> functors_of(const Clause& c) {
  std::set<Symbol> out;
  for (const Literal& l : c)
    for (const Term& a : l.args()) collect_functors(a, out);
  return out;
}

inline std::set<Symbol> predicates_of(const Clause& c) {
  std::set<Symbol> out;
  for (const Literal& l : c) out.insert(Symbol{l.predicate(), l.arity()});
  return out;
}

/// All argument terms of `c` and their subterms.
inline std::set<Term> subterms_of(const Clause& c) {
  std::set<Term> out;
  for (const Literal& l : c)
    for (const Term& a : l.args()) collect_subterms(a, out);
  return out;
}

/// Maximum argument-term depth; 0 for clauses without arguments.
inline std::size_t depth_of(const Clause& c) {
  std::size_t d = 0;
  for (const Literal& l : c)
    for (const Term& a : l.args()) d = std::max(d, a.depth());
  return d;
}

inline std::string to_string(const Literal& l) {
  return (l.positive() ? "" : "~") + to_string(l.atom());
}

/// Debug rendering in set notation; the canonical text format lives in io.hpp.
inline std::string to_string(const Clause& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ", ";
    s += to_string(c[i]);
  }
  return s + "}";
}

}  // namespace clausegen
