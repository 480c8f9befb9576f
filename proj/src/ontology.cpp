#include "missing_why/ontology.hpp"

#include <algorithm>

namespace missing_why {

Ontology::Ontology(std::span<const Axiom> axioms) {
  for (const auto& axiom : axioms) add(axiom);
}

AxiomId Ontology::add(Axiom axiom) {
  const AxiomId id = next_id_++;
  entries_.push_back({id, std::move(axiom)});
  return id;
}

bool Ontology::remove(AxiomId id) {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [id](const OntologyEntry& e) { return e.id == id; });
  if (it == entries_.end()) return false;
  entries_.erase(it);
  return true;
}

bool Ontology::contains(const Axiom& axiom) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const OntologyEntry& e) { return e.axiom == axiom; });
}

std::vector<Axiom> Ontology::axioms() const {
  std::vector<Axiom> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.axiom);
  return out;
}

std::vector<Axiom> Ontology::tbox() const {
  std::vector<Axiom> out;
  for (const auto& e : entries_)
    if (e.axiom.is_tbox()) out.push_back(e.axiom);
  return out;
}

std::vector<Axiom> Ontology::abox() const {
  std::vector<Axiom> out;
  for (const auto& e : entries_)
    if (!e.axiom.is_tbox()) out.push_back(e.axiom);
  return out;
}

std::string Ontology::serialize() const {
  std::string out;
  for (const auto& e : entries_) {
    out += e.axiom.text();
    out += '\n';
  }
  return out;
}

bool Signature::is_subset_of(const Signature& other) const {
  return std::includes(other.concepts.begin(), other.concepts.end(), concepts.begin(), concepts.end()) &&
         std::includes(other.roles.begin(), other.roles.end(), roles.begin(), roles.end()) &&
         std::includes(other.individuals.begin(), other.individuals.end(), individuals.begin(),
                       individuals.end());
}

void Signature::merge(const Signature& other) {
  concepts.insert(other.concepts.begin(), other.concepts.end());
  roles.insert(other.roles.begin(), other.roles.end());
  individuals.insert(other.individuals.begin(), other.individuals.end());
}

namespace {

void collect(const Concept& c, Signature& sig) {
  switch (c.kind()) {
    case ConceptKind::Name: sig.concepts.insert(c.name()); break;
    case ConceptKind::Nominal: sig.individuals.insert(c.name()); break;
    case ConceptKind::Exists:
      sig.roles.insert(c.role().name);
      collect(c.filler(), sig);
      break;
    case ConceptKind::Mu: collect(c.filler(), sig); break;
    case ConceptKind::And:
    case ConceptKind::Or:
      for (const auto& op : c.operands()) collect(op, sig);
      break;
    default: break;
  }
}

void collect(const Axiom& a, Signature& sig) {
  for (const auto& c : a.concepts()) collect(c, sig);
  if (a.kind() == AxiomKind::ClassAssertion) sig.individuals.insert(a.individual());
  if (a.kind() == AxiomKind::RoleAssertion) {
    sig.roles.insert(a.role());
    sig.individuals.insert(a.subject());
    sig.individuals.insert(a.object());
  }
}

}  // namespace

Signature signature_of(const Concept& expr) {
  Signature sig;
  collect(expr, sig);
  return sig;
}

Signature signature_of(const Axiom& axiom) {
  Signature sig;
  collect(axiom, sig);
  return sig;
}

Signature signature_of(std::span<const Axiom> axioms) {
  Signature sig;
  for (const auto& a : axioms) collect(a, sig);
  return sig;
}

Signature signature_of(const Ontology& ontology) {
  Signature sig;
  for (const auto& e : ontology.entries()) collect(e.axiom, sig);
  return sig;
}

}  // namespace missing_why
