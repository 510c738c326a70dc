#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clausegen.hpp"

namespace clausegen::cli {

using Json = nlohmann::ordered_json;

/// Exit status and captured streams of one command.
struct Outcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

enum Exit : int { affirmative = 0, negative = 1, fault = 2 };

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline bool is_file(const std::string& s) {
  std::error_code ec;
  return !s.empty() && s.find('\n') == std::string::npos && std::filesystem::is_regular_file(s, ec);
}

struct Options {
  bool json = false;
  std::string file;
  std::size_t max_instances = GroundingLimits{}.max_instances;
  std::size_t max_terms = GroundingLimits{}.max_terms;
  std::size_t max_layer = ResolutionLimits{}.max_layer_clauses;
};

// Everything one command prints, with one variable namer so that clause texts
// and substitutions agree on names.
class Report {
 public:
  explicit Report(bool json) : json_(json) {}

  VariableNames names;
  Json witness = Json::object();
  Json stats = Json::object();
  std::vector<std::string> lines;

  std::string clause(const Clause& c) { return format_clause(c, names); }
  std::string literal(const Literal& l) { return format_literal(l, names); }
  std::string term(const Term& t) { return format_term(t, names); }

  Json clauses(std::span<const Clause> cs) {
    Json a = Json::array();
    for (const Clause& c : cs) a.push_back(clause(c));
    return a;
  }

  Json terms(std::span<const Term> ts) {
    Json a = Json::array();
    for (const Term& t : ts) a.push_back(term(t));
    return a;
  }

  /// Substitution as a JSON object, keys ordered by first occurrence in `general`.
  Json substitution(const Substitution& s, const Clause& general) {
    Json o = Json::object();
    for (const Variable& v : variables_of(general))
      if (const Term* t = s.find(v)) o[names(v)] = term(*t);
    for (const auto& [v, t] : s.bindings())
      if (!o.contains(names(v))) o[names(v)] = term(t);
    return o;
  }

  std::string substitution_text(const Substitution& s, const Clause& general) {
    return format_substitution(s, variables_of(general), names);
  }

  Outcome finish(int code, const std::string& answer, double elapsed_ms) {
    Outcome o;
    o.exit_code = code;
    if (json_) {
      stats["elapsed_ms"] = elapsed_ms;
      Json doc = Json::object();
      doc["answer"] = answer;
      doc["witness"] = witness;
      doc["stats"] = stats;
      o.out = doc.dump(2) + "\n";
    } else {
      o.out = answer + "\n";
      for (const std::string& l : lines) o.out += l + "\n";
    }
    return o;
  }

 private:
  bool json_;
};

class Session {
 public:
  explicit Session(const Options& options) : options_(options) {
    if (!options_.file.empty()) document_ = parse_clause_file(read_file(options_.file));
  }

  /// A clause by label in --file, by path to a one-clause file, or inline text.
  Clause clause(const std::string& ref) const {
    if (document_) {
      if (const Clause* c = document_->find(ref)) return *c;
    }
    if (is_file(ref)) {
      ClauseDocument doc = parse_clause_file(read_file(ref));
      if (doc.clauses.size() != 1)
        throw PreconditionError("'" + ref + "' holds " + std::to_string(doc.clauses.size()) +
                                " clauses; expected exactly one");
      return doc.clauses.front();
    }
    if (document_ && !ref.empty() && (std::isalnum(static_cast<unsigned char>(ref[0])) || ref[0] == '_') &&
        ref.find_first_of("(:.;[") == std::string::npos)
      throw PreconditionError("no clause labelled '" + ref + "' in " + options_.file);
    return parse_clause(ref);
  }

  /// All clauses of a file (or of inline document text).
  std::vector<Clause> clauses(const std::string& ref) const {
    ClauseDocument doc = parse_clause_file(is_file(ref) ? read_file(ref) : ref);
    if (doc.clauses.empty()) throw PreconditionError("'" + ref + "' holds no clauses");
    return doc.clauses;
  }

  GroundingLimits grounding() const {
    GroundingLimits g;
    g.max_instances = options_.max_instances;
    g.max_terms = options_.max_terms;
    return g;
  }
  TImplicationOptions implication() const {
    TImplicationOptions t;
    t.limits = grounding();
    return t;
  }
  ResolutionLimits resolution() const { return ResolutionLimits{options_.max_layer}; }

 private:
  Options options_;
  std::optional<ClauseDocument> document_;
};

// Shrinks an entailing instance set to a subset that still entails the target.
inline std::vector<Clause> entailment_core(std::vector<Clause> instances, const Clause& target) {
  constexpr std::size_t kMaxMinimize = 2000;
  if (instances.size() > kMaxMinimize) return instances;
  for (std::size_t i = instances.size(); i-- > 0;) {
    std::vector<Clause> without = instances;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
    if (ground_entails(without, target)) instances = std::move(without);
  }
  return instances;
}

// Instances of `c` over `t` entailing the ground `target`, or nullopt.
inline std::optional<std::vector<Clause>> t_implication_witness(const Clause& c, const Clause& target, const TermSet& t,
                                                                const TImplicationOptions& options) {
  if (!t_implies_ground(c, target, t.terms, options)) return std::nullopt;
  std::vector<Clause> instances;
  if (variables_of(c).empty() || !t.terms.empty()) instances = instance_set(c, t.terms, options.limits).clauses;
  return entailment_core(std::move(instances), target);
}

inline Json skolem_json(const SkolemMap& map, Report& r) {
  Json o = Json::object();
  for (const auto& [name, v] : map.inverse) o[r.names(v)] = name;
  return o;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

inline std::string term_list(const TermSet& t, Report& r) {
  std::vector<std::string> parts;
  for (const Term& x : t.terms) parts.push_back(r.term(x));
  return "{" + join(parts, ", ") + "}";
}

inline Json resolution_step_json(const ResolutionStep& s, Report& r) {
  Json j = Json::object();
  j["left_parent"] = r.clause(s.left_parent);
  j["right_parent"] = r.clause(s.right_parent);
  j["left_factor"] = r.clause(s.left_factor);
  j["right_factor"] = r.clause(s.right_factor);
  j["left_literal"] = r.literal(s.left_literal);
  j["right_literal"] = r.literal(s.right_literal);
  j["mgu"] = r.substitution(s.mgu, s.left_factor.united(s.right_factor));
  j["resolvent"] = r.clause(s.resolvent);
  return j;
}

// Provenance of a layer entry as a list of resolution steps, parents first.
inline void derivation(const LayerIndex& index, std::size_t layer, std::size_t entry, Json& steps,
                       std::map<std::pair<std::size_t, std::size_t>, std::string>& ids, Report& r) {
  const auto key = std::make_pair(layer, entry);
  if (ids.count(key)) return;
  const LayerEntry& e = index.layer(layer).at(entry);
  const std::string id = "L" + std::to_string(layer) + "." + std::to_string(entry);
  if (!e.step) {
    ids[key] = id;
    return;
  }
  derivation(index, e.left_layer, e.left_index, steps, ids, r);
  derivation(index, e.right_layer, e.right_index, steps, ids, r);
  ids[key] = id;
  Json j = Json::object();
  j["id"] = id;
  j["left"] = ids.at({e.left_layer, e.left_index});
  j["right"] = ids.at({e.right_layer, e.right_index});
  j.update(resolution_step_json(*e.step, r));
  steps.push_back(std::move(j));
}

}  // namespace detail

/// Runs one command line (without the program name).
inline Outcome run(std::vector<std::string> args) {
  using namespace detail;
  CLI::App app{"Generalization of first-order clauses under θ-subsumption and T-implication", "clausegen"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Emit {answer, witness, stats} as JSON");
  app.add_option("--file", opt.file, "Clause file whose labels A and B may name");
  app.add_option("--max-instances", opt.max_instances, "Cap on instance-set size")->check(CLI::PositiveNumber);
  app.add_option("--max-terms", opt.max_terms, "Cap on term-set size")->check(CLI::PositiveNumber);
  app.add_option("--max-layer", opt.max_layer, "Cap on clauses per resolution layer")->check(CLI::PositiveNumber);

  std::string a, b, file, terms_text, script_text;
  std::size_t depth = 0, n = 0, max_len = ExpansionOptions{}.max_script_length;
  std::size_t oracle_size = 2, oracle_depth = 2;
  bool oracle = false;

  auto two = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("A", a, "Clause: label, file, or text")->required();
    s->add_option("B", b, "Clause: label, file, or text")->required();
    return s;
  };
  auto one = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("A", a, "Clause: label, file, or text")->required();
    return s;
  };
  auto many = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("FILE", file, "Clause file")->required();
    return s;
  };
  auto* c_subsumes = two("subsumes", "Decide A θ-subsumes B");
  auto* c_equiv = two("equiv", "Decide A and B are θ-equivalent");
  auto* c_reduce = one("reduce", "Remove redundant literals of A");
  auto* c_lgg = many("lgg", "LGGθ of the clauses of FILE");
  auto* c_termset = many("termset", "Minimal term set of FILE, optionally extended");
  c_termset->add_option("--depth", depth, "Extra rounds of function application");
  auto* c_instances = one("instances", "Instance set of A over a term list");
  c_instances->add_option("--terms", terms_text, "Comma-separated ground terms")->required();
  auto* c_timplies = two("timplies", "Decide A T-implies B");
  c_timplies->add_option("--depth", depth, "Extend B's minimal term set by this many rounds");
  auto* c_tequiv = two("tequiv", "Decide A and B are T-equivalent (joint minimal term set)");
  auto* c_resolve = two("resolve", "All resolvents of A and B");
  auto* c_layers = many("layers", "Resolution layers 1..N of FILE");
  c_layers->add_option("--n", n, "Number of layers")->required()->check(CLI::PositiveNumber);
  auto* c_implies = two("implies", "Search layers 1..N of {A} for a clause θ-subsuming B");
  c_implies->add_option("--depth", n, "Number of layers")->required()->check(CLI::PositiveNumber);
  auto* c_orintro = one("orintro", "Or-introduce A by a script");
  c_orintro->add_option("--script", script_text, "Steps target#literal, comma-separated")->required();
  auto* c_expand = one("expand", "Expansion of A by a script");
  c_expand->add_option("--script", script_text, "Steps target#literal, comma-separated")->required();
  auto* c_tcomplete = one("tcomplete", "T-complete expansion of A w.r.t. its minimal term set");
  c_tcomplete->add_option("--max-len", max_len, "Longest script tried");
  c_tcomplete->add_option("--depth", depth, "Extend the term set by this many rounds");
  auto* c_lggt = many("lggt", "LGGT of the clauses of FILE");
  c_lggt->add_option("--max-len", max_len, "Longest expansion script tried");
  c_lggt->add_flag("--oracle", oracle, "Cross-check against exhaustive enumeration");
  c_lggt->add_option("--oracle-size", oracle_size, "Literal bound of the enumeration");
  c_lggt->add_option("--oracle-depth", oracle_depth, "Term depth bound of the enumeration");

  Outcome outcome;
  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    outcome.out = app.help();
    return outcome;
  } catch (const CLI::CallForAllHelp&) {
    outcome.out = app.help("", CLI::AppFormatMode::All);
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = fault;
    outcome.err = std::string("usage error: ") + e.what() + "\n";
    return outcome;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  Report r(opt.json);
  try {
    Session session(opt);

    if (c_subsumes->parsed()) {
      const Clause ca = session.clause(a), cb = session.clause(b);
      r.names.reserve(variables_of(ca));
      r.names.reserve(variables_of(cb));
      auto w = theta_subsumes_closest(ca, cb);
      if (!w) return r.finish(negative, "no", elapsed());
      r.witness["substitution"] = r.substitution(w->substitution, ca);
      r.lines.push_back("witness: " + r.substitution_text(w->substitution, ca));
      return r.finish(affirmative, "yes", elapsed());
    }

    if (c_equiv->parsed()) {
      const Clause ca = session.clause(a), cb = session.clause(b);
      r.names.reserve(variables_of(ca));
      r.names.reserve(variables_of(cb));
      auto ab = theta_subsumes_closest(ca, cb);
      auto ba = theta_subsumes_closest(cb, ca);
      if (!ab || !ba) {
        r.lines.push_back(!ab ? "A does not θ-subsume B" : "B does not θ-subsume A");
        return r.finish(negative, "no", elapsed());
      }
      r.witness["forward"] = r.substitution(ab->substitution, ca);
      r.witness["backward"] = r.substitution(ba->substitution, cb);
      r.lines.push_back("A -> B: " + r.substitution_text(ab->substitution, ca));
      r.lines.push_back("B -> A: " + r.substitution_text(ba->substitution, cb));
      return r.finish(affirmative, "yes", elapsed());
    }

    if (c_reduce->parsed()) {
      const Clause ca = session.clause(a);
      r.names.reserve(variables_of(ca));
      const Clause red = reduce(ca);
      auto w = theta_subsumes_closest(ca, red);
      r.witness["clause"] = r.clause(red);
      r.witness["substitution"] = r.substitution(w->substitution, ca);
      r.stats["removed"] = ca.size() - red.size();
      r.lines.push_back(r.clause(red));
      r.lines.push_back("witness: " + r.substitution_text(w->substitution, ca));
      return r.finish(affirmative, "reduced", elapsed());
    }

    if (c_lgg->parsed()) {
      const auto s = session.clauses(file);
      for (const Clause& c : s) r.names.reserve(variables_of(c));
      const Clause g = lgg_set(s);
      r.witness["clause"] = r.clause(g);
      r.lines.push_back(r.clause(g));
      Json subs = Json::array();
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto w = theta_subsumes_closest(g, s[i]);
        subs.push_back(r.substitution(w->substitution, g));
        r.lines.push_back("witness " + std::to_string(i) + ": " + r.substitution_text(w->substitution, g));
      }
      r.witness["substitutions"] = std::move(subs);
      return r.finish(affirmative, "lgg", elapsed());
    }

    if (c_termset->parsed()) {
      const auto s = session.clauses(file);
      const TermSet t = term_set(s, {}, depth, session.grounding());
      r.witness["clauses"] = r.clauses(t.origin);
      r.witness["skolem"] = skolem_json(t.skolem, r);
      r.witness["terms"] = r.terms(t.terms);
      r.stats["terms"] = t.terms.size();
      r.lines.push_back(term_list(t, r));
      return r.finish(affirmative, "termset", elapsed());
    }

    if (c_instances->parsed()) {
      const Clause ca = session.clause(a);
      r.names.reserve(variables_of(ca));
      const auto given = parse_term_list(terms_text);
      const TermSet t = TermSet::from_terms(given);
      const InstanceSet inst = instance_set(ca, t.terms, session.grounding());
      r.witness["terms"] = r.terms(t.terms);
      r.witness["instances"] = r.clauses(inst.clauses);
      r.stats["instances"] = inst.clauses.size();
      for (const Clause& c : inst.clauses) r.lines.push_back(r.clause(c));
      return r.finish(affirmative, "instances", elapsed());
    }

    if (c_timplies->parsed()) {
      const Clause ca = session.clause(a), cb = session.clause(b);
      r.names.reserve(variables_of(ca));
      const TermSet t = term_set(cb, std::span<const Clause>(&ca, 1), depth, session.grounding());
      const Clause& target = t.skolemized.front();
      r.stats["terms"] = t.terms.size();
      auto core = t_implication_witness(ca, target, t, session.implication());
      if (!core) {
        r.lines.push_back("w.r.t. " + term_list(t, r));
        return r.finish(negative, "no", elapsed());
      }
      r.witness["terms"] = r.terms(t.terms);
      r.witness["skolem"] = skolem_json(t.skolem, r);
      r.witness["target"] = r.clause(target);
      r.witness["instances"] = r.clauses(*core);
      r.lines.push_back("w.r.t. " + term_list(t, r));
      r.lines.push_back("target: " + r.clause(target));
      for (const Clause& c : *core) r.lines.push_back("instance: " + r.clause(c));
      return r.finish(affirmative, "yes", elapsed());
    }

    if (c_tequiv->parsed()) {
      const Clause ca = session.clause(a), cb = session.clause(b);
      const Clause pair[] = {ca, cb};
      const TermSet t = term_set(pair, {}, 0, session.grounding());
      r.names.reserve(variables_of(t.origin[0]));
      r.names.reserve(variables_of(t.origin[1]));
      r.stats["terms"] = t.terms.size();
      auto forward = t_implication_witness(t.origin[0], t.skolemized[1], t, session.implication());
      auto backward = forward ? t_implication_witness(t.origin[1], t.skolemized[0], t, session.implication())
                              : std::nullopt;
      r.lines.push_back("w.r.t. " + term_list(t, r));
      if (!forward || !backward) {
        r.lines.push_back(!forward ? "A does not T-imply B" : "B does not T-imply A");
        return r.finish(negative, "no", elapsed());
      }
      r.witness["terms"] = r.terms(t.terms);
      r.witness["clauses"] = r.clauses(t.origin);
      r.witness["skolem"] = skolem_json(t.skolem, r);
      r.witness["forward"] = {{"target", r.clause(t.skolemized[1])}, {"instances", r.clauses(*forward)}};
      r.witness["backward"] = {{"target", r.clause(t.skolemized[0])}, {"instances", r.clauses(*backward)}};
      for (const Clause& c : *forward) r.lines.push_back("A instance: " + r.clause(c));
      for (const Clause& c : *backward) r.lines.push_back("B instance: " + r.clause(c));
      return r.finish(affirmative, "yes", elapsed());
    }

    if (c_resolve->parsed()) {
      const Clause ca = session.clause(a), cb = session.clause(b);
      r.names.reserve(variables_of(ca));
      const auto steps = resolvents(ca, cb);
      Json list = Json::array();
      for (const ResolutionStep& s : steps) {
        list.push_back(resolution_step_json(s, r));
        r.lines.push_back(r.clause(s.resolvent) + "    [" + r.literal(s.left_literal) + " / " +
                          r.literal(s.right_literal) + ", mgu " +
                          r.substitution_text(s.mgu, s.left_factor.united(s.right_factor)) + "]");
      }
      r.witness["resolvents"] = std::move(list);
      r.stats["resolvents"] = steps.size();
      return r.finish(steps.empty() ? negative : affirmative, steps.empty() ? "none" : "resolvents", elapsed());
    }

    if (c_layers->parsed()) {
      const auto s = session.clauses(file);
      const LayerIndex index = resolution_layers(s, n, session.resolution());
      Json layers = Json::array();
      Json sizes = Json::array();
      for (std::size_t k = 1; k <= index.depth(); ++k) {
        Json layer = Json::array();
        r.lines.push_back("layer " + std::to_string(k) + " (" + std::to_string(index.layer(k).size()) + "):");
        for (const LayerEntry& e : index.layer(k)) {
          layer.push_back(r.clause(e.clause));
          r.lines.push_back("  " + r.clause(e.clause));
        }
        sizes.push_back(index.layer(k).size());
        layers.push_back(std::move(layer));
      }
      r.witness["layers"] = std::move(layers);
      r.stats["layer_sizes"] = std::move(sizes);
      return r.finish(affirmative, "layers", elapsed());
    }

    if (c_implies->parsed()) {
      const Clause ca = session.clause(a), cb = session.clause(b);
      r.names.reserve(variables_of(ca));
      r.names.reserve(variables_of(cb));
      const ImplicationResult res = implies_bounded(ca, cb, n, session.resolution());
      Json sizes = Json::array();
      for (const auto& layer : res.layers.layers) sizes.push_back(layer.size());
      r.stats["layer_sizes"] = std::move(sizes);
      if (res.answer != Answer::yes)
        return r.finish(negative, "unknown (depth " + std::to_string(n) + " exhausted)", elapsed());
      if (res.tautology) {
        r.witness["tautology"] = true;
        r.lines.push_back("B is a tautology");
        return r.finish(affirmative, "yes", elapsed());
      }
      const Clause& e = res.clause();
      Json steps = Json::array();
      std::map<std::pair<std::size_t, std::size_t>, std::string> ids;
      derivation(res.layers, res.layer, res.entry, steps, ids, r);
      r.witness["layer"] = res.layer;
      r.witness["clause"] = r.clause(e);
      r.witness["substitution"] = r.substitution(res.witness->substitution, e);
      r.witness["derivation"] = steps;
      r.lines.push_back("layer " + std::to_string(res.layer) + ": " + r.clause(e));
      r.lines.push_back("witness: " + r.substitution_text(res.witness->substitution, e));
      for (const Json& s : steps)
        r.lines.push_back(s["id"].get<std::string>() + " = resolve(" + s["left"].get<std::string>() + ", " +
                          s["right"].get<std::string>() + ") on " + s["left_literal"].get<std::string>() + ": " +
                          s["resolvent"].get<std::string>());
      return r.finish(affirmative, "yes", elapsed());
    }

    if (c_orintro->parsed() || c_expand->parsed()) {
      const Clause ca = session.clause(a);
      r.names.reserve(variables_of(ca));
      const ExpansionScript script = parse_script(script_text);
      std::map<std::string, std::size_t> arity;
      for (const Literal& l : ca) arity.emplace(l.predicate(), l.arity());
      for (const ExpansionStep& step : script) {
        auto [it, fresh] = arity.emplace(step.literal.predicate(), step.literal.arity());
        if (!fresh && it->second != step.literal.arity())
          throw PreconditionError("script literal " + format_literal(step.literal) + " uses predicate '" +
                                  it->first + "' with arity " + std::to_string(step.literal.arity()) + ", not " +
                                  std::to_string(it->second));
      }
      const Expansion e = expand(ca, script);
      auto replayed = replay_resolutions(e.or_set, script, ca);
      if (!replayed) throw Fault("or-introduced set does not re-resolve to its source");
      r.witness["script"] = format_script(script, r.names);
      r.witness["set"] = r.clauses(e.or_set);
      r.witness["resolutions"] = *replayed;
      for (std::size_t i = 0; i < e.or_set.size(); ++i)
        r.lines.push_back(std::to_string(i) + ": " + r.clause(e.or_set[i]));
      if (c_orintro->parsed()) return r.finish(affirmative, "or-introduced", elapsed());
      auto w = theta_subsumes_closest(ca, e.result);
      r.witness["clause"] = r.clause(e.result);
      r.witness["substitution"] = r.substitution(w->substitution, ca);
      Json subs = Json::array();
      for (const Clause& m : e.or_set) subs.push_back(r.substitution(theta_subsumes_closest(e.result, m)->substitution, e.result));
      r.witness["member_substitutions"] = std::move(subs);
      r.lines.push_back("expansion: " + r.clause(e.result));
      return r.finish(affirmative, "expansion", elapsed());
    }

    if (c_tcomplete->parsed()) {
      const Clause ca = session.clause(a);
      r.names.reserve(variables_of(ca));
      const TermSet t = term_set(ca, {}, depth, session.grounding());
      ExpansionOptions eo;
      eo.max_script_length = max_len;
      eo.implication = session.implication();
      const TCompleteResult res = t_complete_expansion(t.origin.front(), t, eo);
      r.stats["audit"] = res.audit.size();
      r.stats["expansions_tried"] = res.expansions_tried;
      if (!res.expansion)
        return r.finish(negative, "not found (script length " + std::to_string(max_len) + " exhausted)", elapsed());
      const Expansion& e = *res.expansion;
      r.witness["terms"] = r.terms(t.terms);
      r.witness["source"] = r.clause(e.source);
      r.witness["script"] = format_script(e.script, r.names);
      r.witness["set"] = r.clauses(e.or_set);
      r.witness["clause"] = r.clause(e.result);
      r.lines.push_back("script: " + format_script(e.script, r.names));
      r.lines.push_back("expansion: " + r.clause(e.result));
      return r.finish(affirmative, "t-complete", elapsed());
    }

    if (c_lggt->parsed()) {
      const auto s = session.clauses(file);
      const TermSet t = term_set(s, {}, 0, session.grounding());
      LggtOptions lo;
      lo.expansion.max_script_length = max_len;
      lo.expansion.implication = session.implication();
      const LggtResult res = lggt(s, t, lo);
      r.witness["clause"] = r.clause(res.clause);
      Json expansions = Json::array();
      for (const Expansion& e : res.expansions) {
        expansions.push_back({{"source", r.clause(e.source)},
                              {"script", format_script(e.script, r.names)},
                              {"clause", r.clause(e.result)}});
      }
      r.witness["expansions"] = std::move(expansions);
      r.lines.push_back(r.clause(res.clause));
      for (const Expansion& e : res.expansions)
        r.lines.push_back("expansion of " + r.clause(e.source) + " by [" + format_script(e.script, r.names) +
                          "]: " + r.clause(e.result));
      if (oracle) {
        const BruteforceResult bf = lggt_bruteforce(s, t, oracle_size, oracle_depth, session.implication());
        const bool agree = t_equivalent(res.clause, bf.clause, session.implication());
        r.witness["oracle"] = {{"clause", r.clause(bf.clause)}, {"agree", agree}};
        r.stats["oracle_enumerated"] = bf.enumerated;
        r.stats["oracle_generalizations"] = bf.generalizations.size();
        r.lines.push_back("oracle: " + r.clause(bf.clause) + (agree ? " (agrees)" : " (DISAGREES)"));
        if (!agree) return r.finish(negative, "disagreement", elapsed());
      }
      return r.finish(affirmative, "lggt", elapsed());
    }
  } catch (const ParseError& e) {
    outcome.exit_code = fault;
    outcome.err = std::string("parse error: ") + e.what() + "\n";
    return outcome;
  } catch (const ResourceError& e) {
    outcome.exit_code = fault;
    outcome.err = std::string(e.what()) + "\n";
    return outcome;
  } catch (const PreconditionError& e) {
    outcome.exit_code = fault;
    outcome.err = std::string("error: ") + e.what() + "\n";
    return outcome;
  } catch (const Fault& e) {
    outcome.exit_code = fault;
    outcome.err = std::string("fault: ") + e.what() + "\n";
    return outcome;
  } catch (const std::exception& e) {
    outcome.exit_code = fault;
    outcome.err = std::string("internal error: ") + e.what() + "\n";
    return outcome;
  }
  outcome.exit_code = fault;
  outcome.err = "usage error: no subcommand\n";
  return outcome;
}

}  // namespace clausegen::cli
