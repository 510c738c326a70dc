#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clausegen/clause.hpp"

namespace clausegen {

/// Finite mapping from variables to terms, applied simultaneously.
class Substitution {
 public:
  using Map = std::map<Variable, Term>;

  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const Variable, Term>> init) : map_(init) {
    drop_identities();
  }
  explicit Substitution(Map m) : map_(std::move(m)) { drop_identities(); }

  bool empty() const noexcept { return map_.empty(); }
  std::size_t size() const noexcept { return map_.size(); }
  auto begin() const noexcept { return map_.begin(); }
  auto end() const noexcept { return map_.end(); }
  const Map& bindings() const noexcept { return map_; }

  const Term* find(const Variable& v) const {
    auto it = map_.find(v);
    return it == map_.end() ? nullptr : &it->second;
  }
  bool binds(const Variable& v) const { return map_.count(v) != 0; }

  /// Adds v ↦ t; identity bindings are dropped. Rebinding a variable replaces it.
  void bind(const Variable& v, Term t) {
    if (t.is_variable() && t.variable() == v) {
      map_.erase(v);
      return;
    }
    map_.insert_or_assign(v, std::move(t));
  }

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  void drop_identities() {
    for (auto it = map_.begin(); it != map_.end();) {
      if (it->second.is_variable() && it->second.variable() == it->first)
        it = map_.erase(it);
      else
        ++it;
    }
  }

  Map map_;
};

inline Term apply(const Term& t, const Substitution& s) {
  if (s.empty() || t.is_ground()) return t;
  if (t.is_variable()) {
    const Term* img = s.find(t.variable());
    return img ? *img : t;
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(apply(a, s));
    changed = changed || !args.back().same_node(a);
  }
  return changed ? Term::app(t.functor(), std::move(args)) : t;
}

inline Literal apply(const Literal& l, const Substitution& s) {
  return Literal(l.positive(), apply(l.atom(), s));
}

/// Applies `s` to every literal; the result collapses as a set.
inline Clause apply(const Clause& c, const Substitution& s) {
  if (s.empty()) return c;
  std::vector<Literal> out;
  out.reserve(c.size());
  for (const Literal& l : c) out.push_back(apply(l, s));
  return Clause(std::move(out));
}

/// Composition θγ read left to right: apply(t, compose(a, b)) = apply(apply(t, a), b).
inline Substitution compose(const Substitution& first, const Substitution& second) {
  Substitution::Map out;
  for (const auto& [v, t] : first) out.emplace(v, apply(t, second));
  for (const auto& [v, t] : second) out.emplace(v, t);  // no-op where first already binds v
  return Substitution(std::move(out));
}

/// Renders as {X -> f(a), Y -> b}.
inline std::string to_string(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : s) {
    if (!first) out += ", ";
    first = false;
    out += to_string(v) + " -> " + to_string(t);
  }
  return out + "}";
}

}  // namespace clausegen
