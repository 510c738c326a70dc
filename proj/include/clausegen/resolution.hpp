#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "clausegen/subsumption.hpp"

namespace clausegen {

/// One binary resolution: resolvent = ((left_factor − {A}) ∪ (right_factor − {B}))·mgu.
struct ResolutionStep {
  Clause left_parent;
  Clause right_parent;
  Clause left_factor;
  Clause right_factor;
  Literal left_literal;   // A, in left_factor
  Literal right_literal;  // B, in right_factor
  Substitution mgu;
  Clause resolvent;
};

/// All resolvents of c and d over all factor pairs and clashing literal
/// pairs, deduplicated up to variant. Parents are renamed apart first.
inline std::vector<ResolutionStep> resolvents(const Clause& c, const Clause& d) {
  const Clause parents[] = {c, d};
  auto renamed = rename_apart(parents);
  const Clause& left = renamed[0];
  const Clause& right = renamed[1];

  std::vector<ResolutionStep> out;
  VariantSet seen;
  const auto left_factors = factors(left);
  const auto right_factors = factors(right);
  for (const Clause& lf : left_factors) {
    for (const Clause& rf : right_factors) {
      for (const Literal& a : lf) {
        for (const Literal& b : rf) {
          if (a.positive() == b.positive() || a.predicate() != b.predicate() || a.arity() != b.arity()) continue;
          auto mgu = unify(a.atom(), b.atom());
          if (!mgu) continue;
          Clause r = apply(lf.without(a).united(rf.without(b)), *mgu);
          if (!seen.insert(r)) continue;
          out.push_back(ResolutionStep{left, right, lf, rf, a, b, std::move(*mgu), std::move(r)});
        }
      }
    }
  }
  return out;
}

/// Resolves `left` and `right` upon `lit` ∈ left and its complement ∈ right
/// without renaming or unification: (left − {lit}) ∪ (right − {¬lit}).
inline std::optional<Clause> resolve_on(const Clause& left, const Clause& right, const Literal& lit) {
  if (!left.contains(lit) || !right.contains(lit.complement())) return std::nullopt;
  return left.without(lit).united(right.without(lit.complement()));
}

struct ResolutionLimits {
  std::size_t max_layer_clauses = 20'000;
};

/// A clause of a resolution layer with its provenance.
struct LayerEntry {
  Clause clause;
  std::optional<ResolutionStep> step;  // absent for input clauses
  // Parent positions as (layer number, index); meaningful when step is set.
  std::size_t left_layer = 0, left_index = 0;
  std::size_t right_layer = 0, right_index = 0;
};

/// ℒ¹..ℒⁿ. A clause in layer n is obtained by exactly n − 1 resolutions:
/// its parents come from layers m and p with m + p = n.
struct LayerIndex {
  std::vector<std::vector<LayerEntry>> layers;  // layers[k] holds layer k + 1

  const std::vector<LayerEntry>& layer(std::size_t n) const { return layers.at(n - 1); }
  std::size_t depth() const noexcept { return layers.size(); }
};

/// Builds layers 1..n of `t`, calling `visit(layer, entry)` on each new
/// clause; building stops as soon as `visit` returns true. Layers past the
/// first are variant-deduplicated and tautology-free.
inline LayerIndex build_layers(std::span<const Clause> t, std::size_t n, const ResolutionLimits& limits,
                               const std::function<bool(std::size_t, const LayerEntry&)>& visit = {}) {
  if (n == 0) throw PreconditionError("resolution layers are numbered from 1");
  LayerIndex index;
  {
    VariantSet first;
    std::vector<LayerEntry> layer1;
    for (const Clause& c : t) {
      if (!first.insert(c)) continue;
      layer1.push_back(LayerEntry{c, std::nullopt});
    }
    index.layers.push_back(std::move(layer1));
    for (const LayerEntry& e : index.layers.back()) {
      if (visit && visit(1, e)) return index;
    }
  }
  for (std::size_t k = 2; k <= n; ++k) {
    index.layers.emplace_back();
    VariantSet seen;
    for (std::size_t m = 1; m <= k / 2; ++m) {
      const std::size_t p = k - m;
      const auto& lm = index.layers[m - 1];
      const auto& lp = index.layers[p - 1];
      for (std::size_t i = 0; i < lm.size(); ++i) {
        for (std::size_t j = (m == p ? i : 0); j < lp.size(); ++j) {
          for (ResolutionStep& step : resolvents(lm[i].clause, lp[j].clause)) {
            if (is_tautology(step.resolvent) || !seen.insert(step.resolvent)) continue;
            if (seen.size() > limits.max_layer_clauses)
              throw ResourceError("clauses in resolution layer " + std::to_string(k), "--max-layer",
                                  limits.max_layer_clauses);
            LayerEntry e{step.resolvent, std::move(step), m, i, p, j};
            index.layers[k - 1].push_back(std::move(e));
            if (visit && visit(k, index.layers[k - 1].back())) return index;
          }
        }
      }
    }
  }
  return index;
}

inline LayerIndex resolution_layers(std::span<const Clause> t, std::size_t n, const ResolutionLimits& limits = {}) {
  return build_layers(t, n, limits);
}

/// ℛⁿ: ℛ⁰ = T, ℛⁿ = ℛⁿ⁻¹ ∪ all resolvents of pairs from ℛⁿ⁻¹, up to variant.
inline std::vector<Clause> nth_resolution(std::span<const Clause> t, std::size_t n,
                                          const ResolutionLimits& limits = {}) {
  VariantSet all;
  for (const Clause& c : t) all.insert(c);
  for (std::size_t round = 0; round < n; ++round) {
    const std::vector<Clause> previous = all.items();
    for (std::size_t i = 0; i < previous.size(); ++i) {
      for (std::size_t j = i; j < previous.size(); ++j) {
        for (const ResolutionStep& step : resolvents(previous[i], previous[j])) {
          all.insert(step.resolvent);
          if (all.size() > limits.max_layer_clauses)
            throw ResourceError("clauses in nth resolution", "--max-layer", limits.max_layer_clauses);
        }
      }
    }
  }
  return all.items();
}

enum class Answer { yes, no, unknown };

inline const char* to_string(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::unknown: return "unknown";
  }
  return "unknown";
}

/// Result of the bounded implication test. On `yes` from resolution, `layer`
/// and `entry` locate the subsuming clause in `layers`.
struct ImplicationResult {
  Answer answer = Answer::unknown;
  bool tautology = false;
  std::size_t layer = 0;
  std::size_t entry = 0;
  std::optional<SubsumptionWitness> witness;
  LayerIndex layers;

  const Clause& clause() const { return layers.layer(layer).at(entry).clause; }
};

/// C ⇒ D certified by a clause in layers 1..n of {C} that θ-subsumes D.
/// `unknown` means no such clause within the depth budget; it is never a
/// refutation. A tautological D is answered yes immediately.
inline ImplicationResult implies_bounded(const Clause& c, const Clause& d, std::size_t n,
                                         const ResolutionLimits& limits = {}) {
  ImplicationResult result;
  if (is_tautology(d)) {
    result.answer = Answer::yes;
    result.tautology = true;
    return result;
  }
  const Clause roots[] = {c};
  result.layers = build_layers(roots, n, limits, [&](std::size_t k, const LayerEntry& e) {
    auto w = theta_subsumes(e.clause, d);
    if (!w) return false;
    result.answer = Answer::yes;
    result.layer = k;
    result.witness = std::move(w);
    return true;
  });
  if (result.answer == Answer::yes) result.entry = result.layers.layer(result.layer).size() - 1;
  return result;
}

enum class RootKind { no, indirect, proper };

inline const char* to_string(RootKind r) {
  switch (r) {
    case RootKind::no: return "no";
    case RootKind::indirect: return "indirect";
    case RootKind::proper: return "proper";
  }
  return "no";
}

/// Whether c is an indirect nth root of d (some nth power of c θ-subsumes d),
/// and proper (c itself does not θ-subsume d).
inline RootKind is_indirect_root(const Clause& c, const Clause& d, std::size_t n, const ResolutionLimits& limits = {}) {
  const Clause roots[] = {c};
  LayerIndex index = build_layers(roots, n, limits);
  bool indirect = false;
  for (const LayerEntry& e : index.layer(n)) {
    if (subsumes(e.clause, d)) {
      indirect = true;
      break;
    }
  }
  if (!indirect) return RootKind::no;
  return subsumes(c, d) ? RootKind::indirect : RootKind::proper;
}

}  // namespace clausegen
