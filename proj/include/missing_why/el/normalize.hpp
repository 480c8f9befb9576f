#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "missing_why/axiom.hpp"

namespace missing_why::el {

// The four normal shapes, over atoms (concept names, ⊤, ⊥):
//   A ⊑ B,  A1 ⊓ A2 ⊑ B,  A ⊑ ∃r.B,  ∃r.A ⊑ B
enum class NormalShape { Subsumption, Conjunction, ExistsRight, ExistsLeft };

struct NormalAxiom {
  NormalShape shape;
  Concept lhs;
  Concept lhs2;  // second conjunct, Conjunction only
  std::string role;
  Concept rhs;

  Axiom to_axiom() const;
};

struct NormalizedTBox {
  std::vector<NormalAxiom> axioms;
  // Fresh name -> the complex concept it stands for.
  std::map<std::string, Concept> fresh_map;

  std::vector<Axiom> to_axioms() const;
};

inline constexpr std::string_view kFreshPrefix = "_:X";

// Rewrites TBox axioms into normal shapes with fresh `_:Xn` names. The result
// is a conservative extension: entailments over the input signature are
// unchanged. Fresh names skip any name already present in the input, so
// re-normalizing a normalized TBox is safe.
NormalizedTBox normalize(std::span<const Axiom> tbox);

}  // namespace missing_why::el
