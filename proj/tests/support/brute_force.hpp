#pragma once

// Finite-model enumeration oracle. Shares nothing with the saturation
// reasoner: it searches interpretations over domains {0..n-1} directly,
// evaluating concepts under a partial assignment with three-valued logic and
// backtracking as soon as an axiom is definitely violated.

#include <span>

#include "missing_why/axiom.hpp"

namespace missing_why::testing {

// Some model of `axioms` with at most `max_size` elements exists.
bool brute_force_consistent(std::span<const Axiom> axioms, int max_size = 3);

// No model of `axioms` with at most `max_size` elements violates `query`.
bool brute_force_entails(std::span<const Axiom> axioms, const Axiom& query, int max_size = 3);

}  // namespace missing_why::testing
