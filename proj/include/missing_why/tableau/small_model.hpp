#pragma once

// Tableau construction of small counterexample models for EL⊥ GCIs.
//
// For a query C ⊑ D the ABox starts as {C(a*), ⊤(a*)} and the TBox gets
// D ⊑ B* before normalization, where B* is a fresh goal name. Rules, in
// priority order:
//   ⊓   D(a) present, C ∈ At(D), C(a) absent            ⇒ add C(a)
//   ∃1  r(a,b), A(b) with A a name or ⊤, ∃r.A(a) absent ⇒ add ∃r.A(a)
//   ⊑   A(a) with A ⊑ B, {A1(a), A2(a)} with A1 ⊓ A2 ⊑ B,
//       or ∃r.A(a) with ∃r.A ⊑ B, and B(a) absent        ⇒ add B(a)
//   ∃2  ∃r.E(a) without any b such that r(a,b), E(b)     ⇒ reuse the first
//       individual c (creation order) for which T ∪ A ∪ {r(a,c), E(c)} is
//       consistent and does not entail B*(a*); else a fresh d with
//       r(a,d), E(d), ⊤(d)
// ∃2 only fires when nothing else does. Triggers are scanned in assertion
// insertion order, so runs are deterministic.
//
// A run stops as soon as B*(a*) is derived. Assertions are never removed, so
// the outcome is already fixed at that point; continuing would make every
// reuse check fail and cyclic TBoxes would grow individuals without end.

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "missing_why/cancel.hpp"
#include "missing_why/el/normalize.hpp"
#include "missing_why/interpretation.hpp"

namespace missing_why::tableau {

enum class Rule { Conjunction, Exists1, Subsumption, Exists2 };

std::string_view to_string(Rule rule);

struct TraceEntry {
  Rule rule;
  std::vector<Axiom> triggers;
  std::vector<Axiom> added;
};

inline constexpr std::string_view kRootIndividual = "a*";
inline constexpr std::string_view kGoalName = "_:B*";

struct TableauState {
  std::vector<Axiom> assertions;  // insertion order
  std::vector<std::string> individuals;  // creation order, root first
  std::string root;
  Concept goal = Concept::top();
  el::NormalizedTBox tbox;
  std::vector<Axiom> tbox_axioms;  // tbox.to_axioms(), cached for reasoner calls
  std::vector<TraceEntry> trace;

  bool contains(const Axiom& assertion) const { return index_.contains(assertion.text()); }
  // Appends unless already present; returns whether it was new.
  bool add(const Axiom& assertion);
  bool goal_reached() const;

  // Memo for ∃2 reuse checks: (a, r, E, candidate, epoch) → admissible.
  std::map<std::tuple<std::string, std::string, std::string, std::string, std::size_t>, bool> reuse_memo;
  std::size_t reasoner_calls = 0;

  // ⊑-rule lookup over the normalized TBox, keyed by atom text. Filled by
  // initial_state.
  std::unordered_map<std::string, std::vector<Concept>> told;
  std::unordered_map<std::string, std::vector<std::pair<Concept, Concept>>> conj;
  std::map<std::pair<std::string, std::string>, std::vector<Concept>> exists_left;

 private:
  std::unordered_set<std::string> index_;
};

// Initialization for tbox and SubClassOf(C, D). No precondition checks.
TableauState initial_state(std::span<const Axiom> tbox, const Axiom& query);

// Applies exactly one rule instance, or returns nullopt when none applies.
std::optional<Rule> tableau_expand_once(TableauState& state);

bool is_saturated(const TableauState& state);

// Elements are the individuals in creation order, labels are the concept
// names asserted for them (reserved names stripped), root marked.
// NotSaturated if a rule is still applicable.
Interpretation induce_interpretation(const TableauState& state);

struct Stats {
  std::map<Rule, std::size_t> applications;
  std::size_t individuals = 0;
  std::size_t reasoner_calls = 0;
  double wall_seconds = 0;
};

enum class Outcome { Counterexample, Entailed };

struct CounterexampleResult {
  Outcome outcome = Outcome::Counterexample;
  std::optional<Interpretation> model;  // Counterexample only
  Stats stats;
  std::vector<TraceEntry> trace;
};

struct Budget {
  std::size_t max_steps = 100000;
  std::chrono::milliseconds max_time{5000};
};

// Errors: InconsistentInput when the TBox is inconsistent or entails C ⊑ ⊥,
// Cancelled, StepBudgetExceeded, ExtendedSyntaxInCoreContext,
// InvalidArgument for a query that is not a SubClassOf axiom.
CounterexampleResult generate_small_model(std::span<const Axiom> tbox, const Axiom& query,
                                          const CancelToken& cancel = {}, Budget budget = {});

}  // namespace missing_why::tableau
