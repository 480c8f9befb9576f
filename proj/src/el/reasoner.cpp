#include "missing_why/el/reasoner.hpp"

#include <algorithm>

#include "missing_why/el/normalize.hpp"
#include "missing_why/el/saturation.hpp"
#include "missing_why/error.hpp"

namespace missing_why::el {

namespace {

void require_core(const Axiom& axiom) {
  if (!axiom.is_el_bot())
    throw Error(ErrorCode::ExtendedSyntaxInCoreContext, "not an EL⊥ axiom: " + axiom.text());
}

Concept individual_concept(const std::string& individual) {
  return Concept::named("_:ind:" + individual);
}

// A ⊑-check between two atoms of the saturated TBox.
struct Check {
  Concept sub;
  Concept super;
};

struct QueryPlan {
  std::vector<Check> checks;
  bool syntactic = true;  // conjunction with role-assertion lookups
};

class Planner {
 public:
  explicit Planner(std::vector<Axiom>& gcis) : gcis_(gcis) {}

  Concept sub_atom(const Concept& c) {
    if (c.is_atomic()) return c;
    Concept q = Concept::named("_:q" + std::to_string(counter_++));
    gcis_.push_back(Axiom::subclass(q, c));
    contexts.push_back(q);
    return q;
  }

  Concept super_atom(const Concept& c) {
    if (c.is_atomic()) return c;
    Concept p = Concept::named("_:p" + std::to_string(counter_++));
    gcis_.push_back(Axiom::subclass(c, p));
    return p;
  }

  Check gci(const Concept& sub, const Concept& super) {
    Check check{sub_atom(sub), super_atom(super)};
    contexts.push_back(check.sub);
    return check;
  }

  std::vector<Concept> contexts;

 private:
  std::vector<Axiom>& gcis_;
  std::size_t counter_ = 0;
};

}  // namespace

Reasoner::Reasoner(std::span<const Axiom> axioms, CancelToken cancel) : cancel_(std::move(cancel)) {
  for (const auto& a : axioms) {
    require_core(a);
    (a.is_tbox() ? tbox_ : abox_).push_back(a);
  }
}

Reasoner::Reasoner(const Ontology& ontology, CancelToken cancel)
    : Reasoner(ontology.axioms(), std::move(cancel)) {}

QueryResult Reasoner::evaluate(std::span<const Axiom> queries) const {
  for (const auto& q : queries) require_core(q);

  std::vector<Axiom> gcis = tbox_;
  std::set<std::string> individuals;
  std::set<std::tuple<std::string, std::string, std::string>> role_facts;
  for (const auto& a : abox_) {
    if (a.kind() == AxiomKind::ClassAssertion) {
      individuals.insert(a.individual());
      gcis.push_back(Axiom::subclass(individual_concept(a.individual()), a.class_expr()));
    } else {
      individuals.insert(a.subject());
      individuals.insert(a.object());
      role_facts.emplace(a.role(), a.subject(), a.object());
      gcis.push_back(Axiom::subclass(individual_concept(a.subject()),
                                     Concept::exists(a.role(), individual_concept(a.object()))));
    }
  }

  Planner planner(gcis);
  for (const auto& ind : individuals) planner.contexts.push_back(individual_concept(ind));

  std::vector<QueryPlan> plans;
  for (const auto& q : queries) {
    QueryPlan plan;
    switch (q.kind()) {
      case AxiomKind::SubClassOf:
      case AxiomKind::EquivalentClasses:
      case AxiomKind::DisjointClasses:
        for (const auto& gci : q.lowered()) plan.checks.push_back(planner.gci(gci.sub(), gci.super()));
        break;
      case AxiomKind::ClassAssertion:
        plan.checks.push_back(planner.gci(individual_concept(q.individual()), q.class_expr()));
        break;
      case AxiomKind::RoleAssertion:
        plan.syntactic = role_facts.contains({q.role(), q.subject(), q.object()});
        break;
    }
    plans.push_back(std::move(plan));
  }

  const NormalizedTBox normalized = normalize(gcis);
  const Saturation saturation(normalized, planner.contexts, cancel_);

  QueryResult result;
  result.consistent = !saturation.unsatisfiable(Concept::top());
  for (const auto& ind : individuals)
    result.consistent = result.consistent && !saturation.unsatisfiable(individual_concept(ind));
  for (const auto& plan : plans) {
    bool holds = plan.syntactic;
    for (const auto& check : plan.checks) holds = holds && saturation.subsumes(check.sub, check.super);
    result.entailed.push_back(!result.consistent || holds);
  }
  return result;
}

bool Reasoner::is_consistent() const { return evaluate({}).consistent; }

bool Reasoner::entails(const Axiom& axiom) const {
  return evaluate(std::span<const Axiom>(&axiom, 1)).entailed.front();
}

std::vector<bool> Reasoner::entails_all(std::span<const Axiom> axioms) const {
  return evaluate(axioms).entailed;
}

bool Reasoner::subsumes(const Concept& sub, const Concept& super) const {
  return entails(Axiom::subclass(sub, super));
}

bool entails(const Ontology& ontology, const Axiom& axiom, const CancelToken& cancel) {
  return Reasoner(ontology, cancel).entails(axiom);
}

bool is_consistent(const Ontology& ontology, const CancelToken& cancel) {
  return Reasoner(ontology, cancel).is_consistent();
}

Classification::Classification(std::span<const Axiom> tbox, std::span<const std::string> extra_names,
                               const CancelToken& cancel) {
  for (const auto& a : tbox) {
    require_core(a);
    if (!a.is_tbox()) throw Error(ErrorCode::InvalidArgument, "classification expects TBox axioms");
  }
  auto names = signature_of(tbox).concepts;
  names.insert(extra_names.begin(), extra_names.end());
  std::vector<Concept> contexts;
  for (const auto& n : names) contexts.push_back(Concept::named(n));
  const Saturation saturation(normalize(tbox), contexts, cancel);
  for (const auto& c : contexts) {
    if (saturation.unsatisfiable(c)) {
      unsatisfiable_.insert(c.name());
      subsumers_[c.name()] = std::vector<std::string>(names.begin(), names.end());
      continue;
    }
    std::vector<std::string> subs;
    for (auto& s : saturation.subsumer_names(c))
      if (!is_reserved_name(s)) subs.push_back(std::move(s));
    subsumers_[c.name()] = std::move(subs);
  }
}

bool Classification::subsumes(const std::string& sub, const std::string& super) const {
  if (sub == super || unsatisfiable_.contains(sub)) return true;
  auto it = subsumers_.find(sub);
  if (it == subsumers_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), super);
}

const std::vector<std::string>& Classification::subsumers(const std::string& name) const {
  static const std::vector<std::string> empty;
  auto it = subsumers_.find(name);
  return it == subsumers_.end() ? empty : it->second;
}

bool Classification::unsatisfiable(const std::string& name) const { return unsatisfiable_.contains(name); }

namespace {

void collect_fillers(const Concept& c, std::vector<Concept>& out) {
  switch (c.kind()) {
    case ConceptKind::Exists:
      out.push_back(c.filler());
      collect_fillers(c.filler(), out);
      break;
    case ConceptKind::And:
      for (const auto& op : c.operands()) collect_fillers(op, out);
      break;
    default: break;
  }
}

}  // namespace

Interpretation canonical_model(std::span<const Axiom> tbox, std::span<const Concept> seeds,
                               const CancelToken& cancel) {
  for (const auto& a : tbox) {
    require_core(a);
    if (!a.is_tbox()) throw Error(ErrorCode::InvalidArgument, "canonical model expects TBox axioms");
  }
  for (const auto& s : seeds)
    if (!s.is_el_bot()) throw Error(ErrorCode::ExtendedSyntaxInCoreContext, "not an EL⊥ concept: " + s.text());
  if (seeds.empty()) throw Error(ErrorCode::InvalidArgument, "canonical model needs at least one seed");

  std::vector<Concept> candidates(seeds.begin(), seeds.end());
  for (const auto& a : tbox)
    for (const auto& c : a.concepts()) collect_fillers(c, candidates);
  for (const auto& s : seeds) collect_fillers(s, candidates);

  std::vector<Concept> indexed;
  std::set<std::string> seen;
  for (auto& c : candidates)
    if (seen.insert(c.text()).second) indexed.push_back(std::move(c));

  Signature sig = signature_of(tbox);
  for (const auto& s : seeds) sig.merge(signature_of(s));

  std::vector<Axiom> gcis(tbox.begin(), tbox.end());
  std::vector<Concept> atoms;
  for (std::size_t i = 0; i < indexed.size(); ++i) {
    Concept q = Concept::named("_:cm.q" + std::to_string(i));
    gcis.push_back(Axiom::subclass(q, indexed[i]));
    atoms.push_back(q);
  }
  const std::vector<std::string> roles(sig.roles.begin(), sig.roles.end());
  auto probe = [&](std::size_t role, std::size_t target) {
    return Concept::named("_:cm.p" + std::to_string(role) + "." + std::to_string(target));
  };
  for (std::size_t r = 0; r < roles.size(); ++r)
    for (std::size_t j = 0; j < indexed.size(); ++j)
      gcis.push_back(Axiom::subclass(Concept::exists(roles[r], indexed[j]), probe(r, j)));

  const Saturation saturation(normalize(gcis), atoms, cancel);

  Interpretation model;
  std::vector<std::optional<ElementId>> element_of(indexed.size());
  for (std::size_t i = 0; i < indexed.size(); ++i) {
    if (saturation.unsatisfiable(atoms[i])) {
      if (i < seeds.size() || std::find(seeds.begin(), seeds.end(), indexed[i]) != seeds.end())
        throw Error(ErrorCode::SeedInconsistent, "seed " + indexed[i].text() + " is unsatisfiable");
      continue;
    }
    Element element;
    element.origin_kind = OriginKind::Concept;
    element.origin = indexed[i].text();
    for (const auto& name : saturation.subsumer_names(atoms[i]))
      if (sig.concepts.contains(name) && !is_reserved_name(name)) element.classes.insert(name);
    element_of[i] = model.elements.size();
    model.elements.push_back(std::move(element));
  }
  for (std::size_t i = 0; i < indexed.size(); ++i) {
    if (!element_of[i]) continue;
    for (std::size_t r = 0; r < roles.size(); ++r)
      for (std::size_t j = 0; j < indexed.size(); ++j)
        if (element_of[j] && saturation.subsumes(atoms[i], probe(r, j)))
          model.edges.insert({*element_of[i], roles[r], *element_of[j]});
  }
  model.marked.insert(*element_of[0]);
  return model;
}

}  // namespace missing_why::el
