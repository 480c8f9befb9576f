#include "missing_why/interpretation.hpp"

#include <algorithm>
#include <map>

#include "missing_why/error.hpp"

namespace missing_why {

std::optional<ElementId> Interpretation::find_origin(const std::string& origin) const {
  for (ElementId i = 0; i < elements.size(); ++i)
    if (elements[i].origin == origin) return i;
  return std::nullopt;
}

std::optional<ElementId> Interpretation::find_individual(const std::string& name) const {
  for (ElementId i = 0; i < elements.size(); ++i)
    if (elements[i].origin_kind == OriginKind::Individual && elements[i].origin == name) return i;
  return std::nullopt;
}

std::vector<ElementId> Interpretation::successors(ElementId source, const std::string& role) const {
  std::vector<ElementId> out;
  for (auto it = edges.lower_bound(RoleEdge{source, role, 0});
       it != edges.end() && it->source == source && it->role == role; ++it)
    out.push_back(it->target);
  return out;
}

Interpretation Interpretation::restricted(const std::set<ElementId>& keep,
                                          const std::set<RoleEdge>* edge_filter) const {
  Interpretation out;
  std::map<ElementId, ElementId> renumber;
  for (ElementId id : keep) {
    if (id >= elements.size()) continue;
    renumber[id] = out.elements.size();
    out.elements.push_back(elements[id]);
  }
  for (const auto& e : edges) {
    if (edge_filter && !edge_filter->contains(e)) continue;
    auto s = renumber.find(e.source);
    auto t = renumber.find(e.target);
    if (s != renumber.end() && t != renumber.end()) out.edges.insert({s->second, e.role, t->second});
  }
  for (ElementId m : marked)
    if (auto it = renumber.find(m); it != renumber.end()) out.marked.insert(it->second);
  return out;
}

std::set<ElementId> Interpretation::reachable_from(ElementId start) const {
  std::set<ElementId> seen{start};
  std::vector<ElementId> stack{start};
  while (!stack.empty()) {
    ElementId cur = stack.back();
    stack.pop_back();
    for (auto it = edges.lower_bound(RoleEdge{cur, {}, 0}); it != edges.end() && it->source == cur; ++it)
      if (seen.insert(it->target).second) stack.push_back(it->target);
  }
  return seen;
}

std::vector<bool> extension(const Interpretation& interp, const Concept& expr) {
  const std::size_t n = interp.elements.size();
  switch (expr.kind()) {
    case ConceptKind::Top: return std::vector<bool>(n, true);
    case ConceptKind::Bottom: return std::vector<bool>(n, false);
    case ConceptKind::Name: {
      std::vector<bool> out(n);
      for (ElementId i = 0; i < n; ++i) out[i] = interp.elements[i].classes.contains(expr.name());
      return out;
    }
    case ConceptKind::And: {
      std::vector<bool> out(n, true);
      for (const auto& op : expr.operands()) {
        auto ext = extension(interp, op);
        for (ElementId i = 0; i < n; ++i) out[i] = out[i] && ext[i];
      }
      return out;
    }
    case ConceptKind::Exists: {
      if (expr.role().inverse) break;
      auto filler = extension(interp, expr.filler());
      std::vector<bool> out(n, false);
      for (const auto& e : interp.edges)
        if (e.role == expr.role().name && filler[e.target]) out[e.source] = true;
      return out;
    }
    default: break;
  }
  throw Error(ErrorCode::ExtendedSyntaxInCoreContext,
              "cannot evaluate extended concept " + expr.text() + " in a finite model");
}

namespace {

ElementId individual(const Interpretation& interp, const std::string& name) {
  auto id = interp.find_individual(name);
  if (!id) throw Error(ErrorCode::UnknownIndividual, "individual " + name + " is not in the model");
  return *id;
}

bool included(const std::vector<bool>& sub, const std::vector<bool>& super) {
  for (std::size_t i = 0; i < sub.size(); ++i)
    if (sub[i] && !super[i]) return false;
  return true;
}

}  // namespace

bool model_satisfies(const Interpretation& interp, const Axiom& axiom) {
  switch (axiom.kind()) {
    case AxiomKind::SubClassOf:
      return included(extension(interp, axiom.sub()), extension(interp, axiom.super()));
    case AxiomKind::EquivalentClasses:
    case AxiomKind::DisjointClasses: {
      auto lowered = axiom.lowered();
      return std::all_of(lowered.begin(), lowered.end(),
                         [&](const Axiom& a) { return model_satisfies(interp, a); });
    }
    case AxiomKind::ClassAssertion: {
      ElementId id = individual(interp, axiom.individual());
      return extension(interp, axiom.class_expr())[id];
    }
    case AxiomKind::RoleAssertion: {
      ElementId s = individual(interp, axiom.subject());
      ElementId t = individual(interp, axiom.object());
      return interp.edges.contains(RoleEdge{s, axiom.role(), t});
    }
  }
  return false;
}

}  // namespace missing_why
