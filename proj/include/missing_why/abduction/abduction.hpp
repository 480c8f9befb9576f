#pragma once

// Hypothesis-side explanations: checking O ∪ H ⊨ P, a bounded brute-force
// signature abducer, unraveling of least-fixpoint hypotheses and the
// post-processing pipeline (redundant axioms, redundant conjuncts and
// disjuncts, specificity order).

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "missing_why/cancel.hpp"
#include "missing_why/ontology.hpp"

namespace missing_why::abduction {

struct Hypothesis {
  std::vector<Axiom> axioms;  // sorted by print string, no duplicates
  std::optional<bool> verified;

  static Hypothesis of(std::vector<Axiom> axioms);
  int depth() const;        // deepest axiom
  int total_depth() const;  // summed over axioms
  bool is_el_bot() const;   // every axiom in the reasoner's fragment
  std::string text() const; // axioms joined by newlines
  friend bool operator==(const Hypothesis& a, const Hypothesis& b) { return a.axioms == b.axioms; }
};

enum class Verification { Holds, Fails, Unverifiable };

// Holds iff O ∪ H is consistent and entails every p. Unverifiable when H or
// P leaves EL⊥ (inverse roles, disjunction, nominals, fixpoints).
Verification verify_hypothesis(const Ontology& ontology, const Hypothesis& hypothesis,
                               std::span<const Axiom> missing, const CancelToken& cancel = {});

struct Bounds {
  int max_axioms = 1;
  int max_depth = 0;
};

// Candidate axioms over Σ: A ⊑ F for a Σ concept name A and F a Σ name or
// ∃r.F' (F' a Σ name, ⊤, or again such a concept) up to max_depth, A ≠ F;
// and F(a) for Σ individuals. Sorted by print string.
std::vector<Axiom> abduction_candidates(const Signature& sigma, int max_depth);

// Every subset-minimal H of at most max_axioms candidates with O ∪ H
// consistent and O ∪ H ⊨ P, ordered by (size, total depth, print string).
// Errors: AlreadyEntailed when O already entails all of P, EmptySignature.
std::vector<Hypothesis> naive_abduce(const Ontology& ontology, std::span<const Axiom> missing,
                                     const Signature& sigma, Bounds bounds, const CancelToken& cancel = {});

// n-th approximant of every μX.C in `c`: ⊥ for n = 0, C[X ↦ approximant n-1]
// otherwise, simplified after every step.
Concept approximant(const Concept& c, int n);
Axiom approximant(const Axiom& axiom, int n);

// Disjuncts of a fixpoint hypothesis set, each a conjunction of axioms.
using FixpointHypothesisSet = std::vector<std::vector<Axiom>>;

// Approximants 1, 2, ... of every disjunct (a disjunct stops once its
// approximant no longer changes), sorted by (role depth, print string), the
// first `count` of them. NonPositiveCount when count < 1.
std::vector<Hypothesis> unravel_fixpoints(const FixpointHypothesisSet& fhs, int count);

struct PostprocessOptions {
  bool drop_redundant_axioms = true;
  bool simplify_members = true;
  bool order_by_specificity = true;
};

// O ∪ H1 entails every axiom of H2. False when either side leaves EL⊥.
bool hypothesis_implies(const Ontology& ontology, const Hypothesis& h1, const Hypothesis& h2,
                        const CancelToken& cancel = {});

std::vector<Hypothesis> postprocess_hypotheses(const Ontology& ontology, std::vector<Hypothesis> hypotheses,
                                               PostprocessOptions options = {}, const CancelToken& cancel = {});

}  // namespace missing_why::abduction
