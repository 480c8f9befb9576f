#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "missing_why/axiom.hpp"

namespace missing_why {

using AxiomId = std::uint64_t;

struct OntologyEntry {
  AxiomId id;
  Axiom axiom;
};

// TBox and ABox in a single insertion-ordered list. Ids are assigned
// monotonically and never reused, so removing an axiom leaves every other
// line of the serialization where it was.
class Ontology {
 public:
  Ontology() = default;
  explicit Ontology(std::span<const Axiom> axioms);

  AxiomId add(Axiom axiom);
  bool remove(AxiomId id);
  bool contains(const Axiom& axiom) const;

  std::span<const OntologyEntry> entries() const { return entries_; }
  std::vector<Axiom> axioms() const;
  std::vector<Axiom> tbox() const;
  std::vector<Axiom> abox() const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // One canonical axiom per line, LF terminated.
  std::string serialize() const;

 private:
  std::vector<OntologyEntry> entries_;
  AxiomId next_id_ = 0;
};

struct Signature {
  std::set<std::string> concepts;
  std::set<std::string> roles;
  std::set<std::string> individuals;

  bool empty() const { return concepts.empty() && roles.empty() && individuals.empty(); }
  bool is_subset_of(const Signature& other) const;
  void merge(const Signature& other);

  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature_of(const Concept& expr);
Signature signature_of(const Axiom& axiom);
Signature signature_of(std::span<const Axiom> axioms);
Signature signature_of(const Ontology& ontology);

}  // namespace missing_why
