#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "missing_why/axiom.hpp"

namespace missing_why {

using ElementId = std::size_t;

enum class OriginKind {
  Individual,  // tableau individual name
  Concept,     // canonical-model expr (canonical print string)
};

struct Element {
  OriginKind origin_kind = OriginKind::Individual;
  std::string origin;
  std::set<std::string> classes;
};

struct RoleEdge {
  ElementId source;
  std::string role;
  ElementId target;

  friend bool operator==(const RoleEdge&, const RoleEdge&) = default;
  friend auto operator<=>(const RoleEdge&, const RoleEdge&) = default;
};

// Finite interpretation. Element ids are indices into `elements`.
struct Interpretation {
  std::vector<Element> elements;
  std::set<RoleEdge> edges;
  std::set<ElementId> marked;

  std::optional<ElementId> find_origin(const std::string& origin) const;
  std::optional<ElementId> find_individual(const std::string& name) const;
  std::vector<ElementId> successors(ElementId source, const std::string& role) const;

  // Subinterpretation on `keep`, renumbered in ascending id order. Edges are
  // kept when both endpoints survive and, if `edge_filter` is given, the edge
  // is in it. Marks are carried over.
  Interpretation restricted(const std::set<ElementId>& keep,
                            const std::set<RoleEdge>* edge_filter = nullptr) const;

  // Role-reachable elements from `start`, including `start`.
  std::set<ElementId> reachable_from(ElementId start) const;

  friend bool operator==(const Interpretation&, const Interpretation&) = default;
};

inline bool operator==(const Element& a, const Element& b) {
  return a.origin_kind == b.origin_kind && a.origin == b.origin && a.classes == b.classes;
}

// Extension of a core concept, indexed by element id.
std::vector<bool> extension(const Interpretation& interp, const Concept& expr);

// Semantic evaluation of a core axiom. Assertions are resolved through
// individual-origin elements; an unknown individual is an UnknownIndividual
// error.
bool model_satisfies(const Interpretation& interp, const Axiom& axiom);

}  // namespace missing_why
