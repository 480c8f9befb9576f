#pragma once

// Functional-style concrete syntax.
//
//   Ontology   := Line*                      Line := Axiom | Assertion
//   Axiom      := SubClassOf(C C) | EquivalentClasses(C C+) | DisjointClasses(C C+)
//   Assertion  := ClassAssertion(C Ind) | ObjectPropertyAssertion(Role Ind Ind)
//   C          := owl:Thing | owl:Nothing | Name | ObjectIntersectionOf(C C+)
//               | ObjectSomeValuesFrom(Role C)
//   ExtC       := C-forms over ExtC | ObjectUnionOf(ExtC ExtC+) | ObjectOneOf(Ind)
//               | ObjectSomeValuesFrom(ExtRole ExtC) | ?Var | Mu(?Var ExtC)
//   ExtRole    := Role | ObjectInverseOf(Role)
//
// `#` starts a comment running to end of line. A leading `:` on names is
// optional. Printing is Concept::text() / Axiom::text() / Ontology::serialize().

#include <string_view>
#include <vector>

#include "missing_why/axiom.hpp"
#include "missing_why/ontology.hpp"

namespace missing_why {

Concept parse_concept(std::string_view text);
Concept parse_extended_concept(std::string_view text);
Axiom parse_axiom(std::string_view text);
Axiom parse_extended_axiom(std::string_view text);
Ontology parse_ontology(std::string_view text);

// Extended axioms grouped into blocks separated by lines containing only `---`.
std::vector<std::vector<Axiom>> parse_axiom_blocks(std::string_view text);

}  // namespace missing_why
