#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "missing_why/cancel.hpp"
#include "missing_why/interpretation.hpp"
#include "missing_why/ontology.hpp"

namespace missing_why::el {

struct QueryResult {
  bool consistent = true;
  std::vector<bool> entailed;  // one per query; all true when inconsistent
};

// Entailment and consistency for EL⊥ ontologies by saturation.
//
// ABox handling: every individual a becomes a reserved concept name N_a that
// stands in for a nominal; C(a) is internalized as N_a ⊑ C and r(a,b) as
// N_a ⊑ ∃r.N_b. For EL⊥ this is sound and complete for instance checking:
// the canonical model of the internalized TBox has exactly one element per
// N_a, which can serve as a's interpretation. The ontology is consistent iff
// neither ⊤ nor any N_a is unsatisfiable.
//
// A GCI C ⊑ D is decided by adding Q ⊑ C and D ⊑ P for fresh Q, P and
// checking P ∈ S(Q). Several queries are answered by a single saturation.
class Reasoner {
 public:
  explicit Reasoner(std::span<const Axiom> axioms, CancelToken cancel = {});
  explicit Reasoner(const Ontology& ontology, CancelToken cancel = {});

  bool is_consistent() const;
  bool entails(const Axiom& axiom) const;
  std::vector<bool> entails_all(std::span<const Axiom> axioms) const;
  QueryResult evaluate(std::span<const Axiom> queries) const;

  // T ⊨ sub ⊑ super.
  bool subsumes(const Concept& sub, const Concept& super) const;

 private:
  std::vector<Axiom> tbox_;
  std::vector<Axiom> abox_;
  CancelToken cancel_;
};

bool entails(const Ontology& ontology, const Axiom& axiom, const CancelToken& cancel = {});
bool is_consistent(const Ontology& ontology, const CancelToken& cancel = {});

// Name-level classification: for every concept name of the TBox (and any
// extra names), the sorted set of named subsumers.
class Classification {
 public:
  Classification(std::span<const Axiom> tbox, std::span<const std::string> extra_names = {},
                 const CancelToken& cancel = {});

  // T ⊨ sub ⊑ super for concept names; unknown names only subsume themselves.
  bool subsumes(const std::string& sub, const std::string& super) const;
  const std::vector<std::string>& subsumers(const std::string& name) const;
  bool unsatisfiable(const std::string& name) const;

 private:
  std::map<std::string, std::vector<std::string>> subsumers_;
  std::set<std::string> unsatisfiable_;
};

// Canonical model of an EL⊥ TBox indexed by the seeds and every existential
// filler occurring in the TBox or the seeds. d_F ∈ A iff T ⊨ F ⊑ A, and
// (d_F, r, d_G) iff T ⊨ F ⊑ ∃r.G. ⊥-forced concepts are left out; a ⊥-forced
// seed is a SeedInconsistent error. The first seed's element is marked.
Interpretation canonical_model(std::span<const Axiom> tbox, std::span<const Concept> seeds,
                               const CancelToken& cancel = {});

}  // namespace missing_why::el
