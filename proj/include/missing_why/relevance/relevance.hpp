#pragma once

// Relevant parts of the canonical model for a non-entailed EL GCI C ⊑ D.
//
//   Alpha     d_C and everything role-reachable from it, in the canonical
//             model seeded with [C].
//   Beta      Alpha plus d_D and everything reachable from it, in the model
//             seeded with [C, D]. d_D is the contrast element.
//   Delta     Beta cut down to d_C, d_D, one witness path from d_D for every
//             contrasting condition E, and the r-successors of d_C for the
//             first role r of each existential E (the side where the
//             condition fails).
//   DeltaBar  as Delta with each E generalized, keeping only the path prefix
//             the generalized condition needs.
//
// Elements of different parts are matched by origin (the concept the element
// stands for), since Alpha and Beta come from differently seeded models.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "missing_why/axiom.hpp"
#include "missing_why/cancel.hpp"
#include "missing_why/interpretation.hpp"

namespace missing_why::relevance {

enum class RelevanceMode { Alpha, Beta, Delta, DeltaBar };

std::string_view to_string(RelevanceMode mode);
std::optional<RelevanceMode> parse_mode(std::string_view text);

struct RelevantPart {
  RelevanceMode mode = RelevanceMode::Alpha;
  Interpretation interp;
  ElementId witness = 0;              // d_C, marked
  std::optional<ElementId> contrast;  // d_D, Beta and finer
  std::vector<Concept> conditions;    // Delta and DeltaBar
};

// Errors: IsEntailed, BottomInTBox, ExtendedSyntaxInCoreContext,
// InvalidArgument for a query that is not a SubClassOf axiom.
RelevantPart extract_relevant_part(std::span<const Axiom> tbox, const Axiom& query, RelevanceMode mode,
                                   const CancelToken& cancel = {});

// Every E from the candidate pool with T ⊨ D ⊑ E and T ⊭ C ⊑ E, sorted by
// (role depth, print string). The pool holds the concept names of T, C and D
// and ∃r.F for F a name, ⊤ or a pool member, up to the largest role depth
// occurring in T or D.
std::vector<Concept> contrasting_conditions(std::span<const Axiom> tbox, const Concept& c, const Concept& d,
                                            const CancelToken& cancel = {});

// Shallowest truncation ∃r1.⊤, ∃r1.∃r2.⊤, ..., E of the existential prefix of
// E that C is not subsumed by. Non-existential E is returned unchanged.
// IsEntailed when T ⊨ C ⊑ E.
Concept generalize_condition(std::span<const Axiom> tbox, const Concept& c, const Concept& e,
                             const CancelToken& cancel = {});

}  // namespace missing_why::relevance
