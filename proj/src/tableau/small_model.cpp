#include "missing_why/tableau/small_model.hpp"

#include <algorithm>

#include "missing_why/el/reasoner.hpp"
#include "missing_why/error.hpp"

namespace missing_why::tableau {

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::Conjunction: return "and";
    case Rule::Exists1: return "exists1";
    case Rule::Subsumption: return "subsumption";
    case Rule::Exists2: return "exists2";
  }
  return "?";
}

bool TableauState::add(const Axiom& assertion) {
  if (!index_.insert(assertion.text()).second) return false;
  assertions.push_back(assertion);
  return true;
}

bool TableauState::goal_reached() const { return contains(Axiom::class_assertion(goal, root)); }

TableauState initial_state(std::span<const Axiom> tbox, const Axiom& query) {
  if (query.kind() != AxiomKind::SubClassOf)
    throw Error(ErrorCode::InvalidArgument, "small model generation needs a SubClassOf query");
  TableauState state;
  state.root = std::string(kRootIndividual);
  state.goal = Concept::named(std::string(kGoalName));
  state.individuals.push_back(state.root);

  std::vector<Axiom> extended(tbox.begin(), tbox.end());
  extended.push_back(Axiom::subclass(query.super(), state.goal));
  state.tbox = el::normalize(extended);
  state.tbox_axioms = state.tbox.to_axioms();
  for (const auto& a : state.tbox.axioms) {
    switch (a.shape) {
      case el::NormalShape::Subsumption: state.told[a.lhs.text()].push_back(a.rhs); break;
      case el::NormalShape::ExistsRight:
        state.told[a.lhs.text()].push_back(Concept::exists(a.role, a.rhs));
        break;
      case el::NormalShape::Conjunction:
        state.conj[a.lhs.text()].emplace_back(a.lhs2, a.rhs);
        state.conj[a.lhs2.text()].emplace_back(a.lhs, a.rhs);
        break;
      case el::NormalShape::ExistsLeft: state.exists_left[{a.role, a.lhs.text()}].push_back(a.rhs); break;
    }
  }

  state.add(Axiom::class_assertion(query.sub(), state.root));
  state.add(Axiom::class_assertion(Concept::top(), state.root));
  return state;
}

namespace {

// A rule instance found by the scan, not yet applied.
struct Match {
  Rule rule;
  std::vector<Axiom> triggers;
  std::vector<Axiom> additions;  // ⊓, ∃1, ⊑
  std::string subject;           // ∃2
  std::string role;              // ∃2
  Concept filler;                // ∃2
};

bool has_witness(const TableauState& s, const std::string& a, const std::string& role, const Concept& filler) {
  for (const auto& name : s.individuals)
    if (s.contains(Axiom::role_assertion(role, a, name)) && s.contains(Axiom::class_assertion(filler, name)))
      return true;
  return false;
}

std::optional<Match> find_conjunction(const TableauState& s) {
  for (const auto& a : s.assertions) {
    if (a.kind() != AxiomKind::ClassAssertion || a.class_expr().kind() != ConceptKind::And) continue;
    for (const auto& c : a.class_expr().operands()) {
      Axiom add = Axiom::class_assertion(c, a.individual());
      if (!s.contains(add)) return Match{Rule::Conjunction, {a}, {add}, {}, {}, Concept::top()};
    }
  }
  return std::nullopt;
}

std::optional<Match> find_exists1(const TableauState& s) {
  for (const auto& r : s.assertions) {
    if (r.kind() != AxiomKind::RoleAssertion) continue;
    for (const auto& b : s.assertions) {
      if (b.kind() != AxiomKind::ClassAssertion || b.individual() != r.object()) continue;
      const Concept& filler = b.class_expr();
      if (filler.kind() != ConceptKind::Name && filler.kind() != ConceptKind::Top) continue;
      Axiom add = Axiom::class_assertion(Concept::exists(r.role(), filler), r.subject());
      if (!s.contains(add)) return Match{Rule::Exists1, {r, b}, {add}, {}, {}, Concept::top()};
    }
  }
  return std::nullopt;
}

template <typename Map, typename Key>
const auto* find_in(const Map& map, const Key& key) {
  auto it = map.find(key);
  return it == map.end() ? nullptr : &it->second;
}

std::optional<Match> find_subsumption(const TableauState& s) {
  for (const auto& a : s.assertions) {
    if (a.kind() != AxiomKind::ClassAssertion) continue;
    const Concept& x = a.class_expr();
    const std::string& ind = a.individual();
    auto fire = [&](const Concept& rhs, std::vector<Axiom> triggers) -> std::optional<Match> {
      Axiom add = Axiom::class_assertion(rhs, ind);
      if (s.contains(add)) return std::nullopt;
      return Match{Rule::Subsumption, std::move(triggers), {add}, {}, {}, Concept::top()};
    };
    if (x.is_atomic()) {
      if (const auto* rhs = find_in(s.told, x.text()))
        for (const auto& b : *rhs)
          if (auto m = fire(b, {a})) return m;
      if (const auto* pairs = find_in(s.conj, x.text()))
        for (const auto& [other, b] : *pairs) {
          Axiom second = Axiom::class_assertion(other, ind);
          if (!s.contains(second)) continue;
          if (auto m = fire(b, {a, second})) return m;
        }
    } else if (x.kind() == ConceptKind::Exists && x.filler().is_atomic()) {
      if (const auto* rhs = find_in(s.exists_left, std::pair{x.role().name, x.filler().text()}))
        for (const auto& b : *rhs)
          if (auto m = fire(b, {a})) return m;
    }
  }
  return std::nullopt;
}

std::optional<Match> find_exists2(const TableauState& s) {
  for (const auto& a : s.assertions) {
    if (a.kind() != AxiomKind::ClassAssertion || a.class_expr().kind() != ConceptKind::Exists) continue;
    const Concept& x = a.class_expr();
    if (has_witness(s, a.individual(), x.role().name, x.filler())) continue;
    return Match{Rule::Exists2, {a}, {}, a.individual(), x.role().name, x.filler()};
  }
  return std::nullopt;
}

std::optional<Match> find_rule(const TableauState& s) {
  if (auto m = find_conjunction(s)) return m;
  if (auto m = find_exists1(s)) return m;
  if (auto m = find_subsumption(s)) return m;
  return find_exists2(s);
}

}  // namespace

bool is_saturated(const TableauState& state) { return !find_rule(state).has_value(); }

namespace {

bool reuse_admissible(TableauState& s, const Match& m, const std::string& candidate) {
  auto key = std::tuple{m.subject, m.role, m.filler.text(), candidate, s.assertions.size()};
  if (auto it = s.reuse_memo.find(key); it != s.reuse_memo.end()) return it->second;
  std::vector<Axiom> axioms = s.tbox_axioms;
  axioms.insert(axioms.end(), s.assertions.begin(), s.assertions.end());
  axioms.push_back(Axiom::role_assertion(m.role, m.subject, candidate));
  axioms.push_back(Axiom::class_assertion(m.filler, candidate));
  const Axiom goal = Axiom::class_assertion(s.goal, s.root);
  ++s.reasoner_calls;
  const auto result = el::Reasoner(axioms).evaluate(std::span<const Axiom>(&goal, 1));
  const bool ok = result.consistent && !result.entailed.front();
  s.reuse_memo.emplace(std::move(key), ok);
  return ok;
}

std::string fresh_individual(const TableauState& s) {
  for (std::size_t n = s.individuals.size();; ++n) {
    std::string name = "d" + std::to_string(n);
    if (std::find(s.individuals.begin(), s.individuals.end(), name) == s.individuals.end()) return name;
  }
}

}  // namespace

std::optional<Rule> tableau_expand_once(TableauState& state) {
  auto match = find_rule(state);
  if (!match) return std::nullopt;
  TraceEntry entry{match->rule, match->triggers, {}};
  if (match->rule != Rule::Exists2) {
    for (const auto& add : match->additions) {
      if (add.class_expr().kind() == ConceptKind::Bottom)
        throw Error(ErrorCode::Internal, "clash on individual " + add.individual());
      if (state.add(add)) entry.added.push_back(add);
    }
  } else {
    std::optional<std::string> target;
    for (const auto& candidate : state.individuals) {
      if (reuse_admissible(state, *match, candidate)) {
        target = candidate;
        break;
      }
    }
    std::vector<Axiom> additions;
    if (!target) {
      target = fresh_individual(state);
      state.individuals.push_back(*target);
    }
    additions.push_back(Axiom::role_assertion(match->role, match->subject, *target));
    additions.push_back(Axiom::class_assertion(match->filler, *target));
    additions.push_back(Axiom::class_assertion(Concept::top(), *target));
    for (const auto& add : additions)
      if (state.add(add)) entry.added.push_back(add);
  }
  state.trace.push_back(std::move(entry));
  return match->rule;
}

Interpretation induce_interpretation(const TableauState& state) {
  if (!is_saturated(state)) throw Error(ErrorCode::NotSaturated, "a tableau rule is still applicable");
  Interpretation model;
  std::map<std::string, ElementId> ids;
  for (const auto& ind : state.individuals) {
    ids[ind] = model.elements.size();
    model.elements.push_back({OriginKind::Individual, ind, {}});
  }
  for (const auto& a : state.assertions) {
    if (a.kind() == AxiomKind::ClassAssertion) {
      const Concept& c = a.class_expr();
      if (c.kind() == ConceptKind::Name && !is_reserved_name(c.name()))
        model.elements[ids.at(a.individual())].classes.insert(c.name());
    } else {
      model.edges.insert({ids.at(a.subject()), a.role(), ids.at(a.object())});
    }
  }
  model.marked.insert(ids.at(state.root));
  return model;
}

CounterexampleResult generate_small_model(std::span<const Axiom> tbox, const Axiom& query,
                                          const CancelToken& cancel, Budget budget) {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& a : tbox) {
    if (!a.is_el_bot()) throw Error(ErrorCode::ExtendedSyntaxInCoreContext, "not an EL⊥ axiom: " + a.text());
    if (!a.is_tbox()) throw Error(ErrorCode::InvalidArgument, "small model generation expects TBox axioms");
  }
  if (!query.is_el_bot()) throw Error(ErrorCode::ExtendedSyntaxInCoreContext, "not an EL⊥ axiom: " + query.text());
  if (query.kind() != AxiomKind::SubClassOf)
    throw Error(ErrorCode::InvalidArgument, "small model generation needs a SubClassOf query");

  {
    el::Reasoner reasoner(tbox, cancel);
    const Axiom unsat = Axiom::subclass(query.sub(), Concept::bottom());
    const auto pre = reasoner.evaluate(std::span<const Axiom>(&unsat, 1));
    if (!pre.consistent) throw Error(ErrorCode::InconsistentInput, "the TBox is inconsistent");
    if (pre.entailed.front())
      throw Error(ErrorCode::InconsistentInput, query.sub().text() + " is unsatisfiable w.r.t. the TBox");
  }

  TableauState state = initial_state(tbox, query);
  CounterexampleResult result;
  std::size_t steps = 0;
  while (!state.goal_reached()) {
    cancel.throw_if_cancelled();
    if (steps >= budget.max_steps || std::chrono::steady_clock::now() - start > budget.max_time)
      throw Error(ErrorCode::StepBudgetExceeded,
                  "tableau stopped after " + std::to_string(steps) + " rule applications");
    auto rule = tableau_expand_once(state);
    if (!rule) break;
    ++result.stats.applications[*rule];
    ++steps;
  }

  result.outcome = state.goal_reached() ? Outcome::Entailed : Outcome::Counterexample;
  if (result.outcome == Outcome::Counterexample) result.model = induce_interpretation(state);
  result.stats.individuals = state.individuals.size();
  result.stats.reasoner_calls = state.reasoner_calls;
  result.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.trace = std::move(state.trace);
  return result;
}

}  // namespace missing_why::tableau
