#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "clausegen/errors.hpp"

namespace clausegen {

/// A logical variable. User variables carry index 0; generated variables
/// (renaming apart, anti-unification) get fresh indices from a caller-owned
/// counter so they can never capture a user variable of the same name.
struct Variable {
  std::string name;
  std::uint32_t index = 0;

  friend bool operator==(const Variable&, const Variable&) = default;
  friend std::strong_ordering operator<=>(const Variable&, const Variable&) = default;
};

/// Immutable first-order term: a variable or a functor applied to arguments.
/// Constants are compounds with no arguments. Nodes are shared, so copies are
/// cheap and unchanged subterms survive substitution without reallocation.
class Term {
 public:
  static Term var(Variable v) {
    auto node = std::make_shared<Node>();
    node->is_var = true;
    node->hash = std::hash<std::string>{}(v.name) * 31u + v.index + 0x9e3779b9u;
    node->depth = 1;
    node->ground = false;
    node->var = std::move(v);
    return Term(std::move(node));
  }

  static Term var(std::string name, std::uint32_t index = 0) {
    return var(Variable{std::move(name), index});
  }

  static Term app(std::string functor, std::vector<Term> args = {}) {
    if (functor.empty()) throw PreconditionError("functor identifiers must be nonempty");
    auto node = std::make_shared<Node>();
    node->is_var = false;
    std::size_t h = std::hash<std::string>{}(functor) ^ (args.size() * 0x100000001b3u);
    std::size_t depth = 0;
    bool ground = true;
    for (const Term& a : args) {
      h = h * 1099511628211u + a.hash();
      depth = std::max(depth, a.depth());
      ground = ground && a.is_ground();
    }
    node->hash = h;
    node->depth = depth + 1;
    node->ground = ground;
    node->functor = std::move(functor);
    node->args = std::move(args);
    return Term(std::move(node));
  }

  bool is_variable() const noexcept { return node_->is_var; }
  bool is_compound() const noexcept { return !node_->is_var; }
  bool is_constant() const noexcept { return !node_->is_var && node_->args.empty(); }

  const Variable& variable() const {
    if (!is_variable()) throw PreconditionError("term is not a variable");
    return node_->var;
  }
  const std::string& functor() const {
    if (is_variable()) throw PreconditionError("variable has no functor");
    return node_->functor;
  }
  std::span<const Term> args() const noexcept { return node_->args; }
  std::size_t arity() const noexcept { return node_->args.size(); }

  /// depth(variable) = depth(constant) = 1; depth(f(t...)) = 1 + max depth(t).
  std::size_t depth() const noexcept { return node_->depth; }
  bool is_ground() const noexcept { return node_->ground; }
  std::size_t hash() const noexcept { return node_->hash; }

  bool same_node(const Term& other) const noexcept { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash()) return false;
    return (a <=> b) == 0;
  }

  /// Variables before compounds; variables by (name, index); compounds by
  /// functor, arity, then arguments left to right.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (a.is_variable() != b.is_variable()) {
      return a.is_variable() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (a.is_variable()) return a.node_->var <=> b.node_->var;
    if (auto c = a.node_->functor <=> b.node_->functor; c != 0) return c;
    if (auto c = a.arity() <=> b.arity(); c != 0) return c;
    for (std::size_t i = 0; i < a.arity(); ++i) {
      if (auto c = a.args()[i] <=> b.args()[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  struct Node {
    bool is_var = false;
    Variable var;
    std::string functor;
    std::vector<Term> args;
    std::size_t hash = 0;
    std::size_t depth = 1;
    bool ground = true;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

/// A (functor, arity) pair.
struct Symbol {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend std::strong_ordering operator<=>(const Symbol&, const Symbol&) = default;
};

/// Variables of `t` in order of first occurrence (left to right, depth first),
/// appended to `out` when not already present.
inline void collect_variables(const Term& t, std::vector<Variable>& out) {
  if (t.is_variable()) {
    if (std::find(out.begin(), out.end(), t.variable()) == out.end()) out.push_back(t.variable());
    return;
  }
  if (t.is_ground()) return;
  for (const Term& a : t.args()) collect_variables(a, out);
}

inline void collect_subterms(const Term& t, std::set<Term>& out) {
  if (!out.insert(t).second) return;
  for (const Term& a : t.args()) collect_subterms(a, out);
}

inline void collect_functors(const Term& t, std::set<Symbol>& out) {
  if (t.is_variable()) return;
  out.insert(Symbol{t.functor(), t.arity()});
  for (const Term& a : t.args()) collect_functors(a, out);
}

inline bool occurs_in(const Variable& v, const Term& t) {
  if (t.is_variable()) return t.variable() == v;
  if (t.is_ground()) return false;
  for (const Term& a : t.args()) {
    if (occurs_in(v, a)) return true;
  }
  return false;
}

inline std::uint32_t max_variable_index(const Term& t) {
  if (t.is_variable()) return t.variable().index;
  std::uint32_t m = 0;
  if (t.is_ground()) return m;
  for (const Term& a : t.args()) m = std::max(m, max_variable_index(a));
  return m;
}

/// Caller-owned source of fresh variable indices.
class VarSupply {
 public:
  explicit VarSupply(std::uint32_t next = 1) : next_(next) {}

  Variable fresh(std::string name) { return Variable{std::move(name), next_++}; }
  std::uint32_t peek() const noexcept { return next_; }
  void reserve_above(std::uint32_t index) { next_ = std::max(next_, index + 1); }

 private:
  std::uint32_t next_;
};

/// Plain rendering: variables as Name or Name_index, compounds as f(a,b).
inline std::string to_string(const Variable& v) {
  return v.index == 0 ? v.name : v.name + "_" + std::to_string(v.index);
}

inline void append_term(std::string& out, const Term& t) {
  if (t.is_variable()) {
    out += to_string(t.variable());
    return;
  }
  out += t.functor();
  if (t.arity() == 0) return;
  out += '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) out += ',';
    append_term(out, t.args()[i]);
  }
  out += ')';
}

inline std::string to_string(const Term& t) {
  std::string s;
  append_term(s, t);
  return s;
}

}  // namespace clausegen
