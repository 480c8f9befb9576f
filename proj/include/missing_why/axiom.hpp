#pragma once

#include <span>
#include <string>
#include <vector>

#include "missing_why/concept.hpp"

namespace missing_why {

enum class AxiomKind { SubClassOf, EquivalentClasses, DisjointClasses, ClassAssertion, RoleAssertion };

// A logical axiom. EquivalentClasses/DisjointClasses keep their operand order
// as written; lowering to pairwise GCIs happens inside the reasoner.
class Axiom {
 public:
  static Axiom subclass(Concept sub, Concept super);
  static Axiom equivalent(std::vector<Concept> concepts);
  static Axiom disjoint(std::vector<Concept> concepts);
  static Axiom class_assertion(Concept expr, std::string individual);
  static Axiom role_assertion(std::string role, std::string subject, std::string object);

  AxiomKind kind() const { return kind_; }
  std::span<const Concept> concepts() const { return concepts_; }
  const Concept& sub() const { return concepts_.at(0); }    // SubClassOf
  const Concept& super() const { return concepts_.at(1); }  // SubClassOf
  const Concept& class_expr() const { return concepts_.at(0); }  // ClassAssertion
  const std::string& individual() const { return subject_; }   // ClassAssertion
  const std::string& role() const { return role_; }            // RoleAssertion
  const std::string& subject() const { return subject_; }      // RoleAssertion
  const std::string& object() const { return object_; }        // RoleAssertion

  const std::string& text() const { return text_; }
  bool is_tbox() const {
    return kind_ != AxiomKind::ClassAssertion && kind_ != AxiomKind::RoleAssertion;
  }
  bool is_el_bot() const;
  bool is_el() const;
  int role_depth() const;

  // EquivalentClasses and DisjointClasses lowered to SubClassOf axioms;
  // other axioms are returned unchanged.
  std::vector<Axiom> lowered() const;

  friend bool operator==(const Axiom& a, const Axiom& b) { return a.text_ == b.text_; }
  friend std::strong_ordering operator<=>(const Axiom& a, const Axiom& b) {
    return a.text_ <=> b.text_;
  }

 private:
  Axiom(AxiomKind kind, std::vector<Concept> concepts, std::string role, std::string subject,
        std::string object);

  AxiomKind kind_;
  std::vector<Concept> concepts_;
  std::string role_;
  std::string subject_;
  std::string object_;
  std::string text_;
};

}  // namespace missing_why
