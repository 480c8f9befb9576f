#include "missing_why/relevance/relevance.hpp"

#include <algorithm>
#include <set>

#include "missing_why/el/reasoner.hpp"
#include "missing_why/error.hpp"
#include "missing_why/ontology.hpp"

namespace missing_why::relevance {

std::string_view to_string(RelevanceMode mode) {
  switch (mode) {
    case RelevanceMode::Alpha: return "alpha";
    case RelevanceMode::Beta: return "beta";
    case RelevanceMode::Delta: return "delta";
    case RelevanceMode::DeltaBar: return "deltabar";
  }
  return "?";
}

std::optional<RelevanceMode> parse_mode(std::string_view text) {
  for (auto m : {RelevanceMode::Alpha, RelevanceMode::Beta, RelevanceMode::Delta, RelevanceMode::DeltaBar})
    if (to_string(m) == text) return m;
  return std::nullopt;
}

namespace {

void require_el(std::span<const Axiom> tbox, std::initializer_list<const Concept*> concepts) {
  for (const auto& a : tbox) {
    if (!a.is_tbox()) throw Error(ErrorCode::InvalidArgument, "relevance expects TBox axioms");
    if (!a.is_el_bot()) throw Error(ErrorCode::ExtendedSyntaxInCoreContext, "not an EL⊥ axiom: " + a.text());
    if (!a.is_el()) throw Error(ErrorCode::BottomInTBox, "relevant counterexamples need an EL TBox: " + a.text());
  }
  for (const Concept* c : concepts) {
    if (!c->is_el_bot()) throw Error(ErrorCode::ExtendedSyntaxInCoreContext, "not an EL concept: " + c->text());
    if (!c->is_el()) throw Error(ErrorCode::BottomInTBox, "owl:Nothing in query concept " + c->text());
  }
}

void require_not_entailed(std::span<const Axiom> tbox, const Concept& c, const Concept& d, const CancelToken& cancel) {
  if (el::Reasoner(tbox, cancel).subsumes(c, d))
    throw Error(ErrorCode::IsEntailed, "the ontology entails " + Axiom::subclass(c, d).text());
}

// Existential prefix r1..rk of e.
std::vector<std::string> prefix_roles(const Concept& e) {
  std::vector<std::string> roles;
  for (const Concept* x = &e; x->kind() == ConceptKind::Exists; x = &x->filler()) roles.push_back(x->role().name);
  return roles;
}

// ∃r1.∃r2...∃rk.⊤ for the first k roles.
Concept truncation(const std::vector<std::string>& roles, std::size_t k) {
  Concept out = Concept::top();
  for (std::size_t i = k; i-- > 0;) out = Concept::exists(roles[i], out);
  return out;
}

// Witness path for e starting at `from`: the lowest-numbered successor
// satisfying the rest of the condition at every step, at most `limit` steps.
void witness_path(const Interpretation& m, ElementId from, const Concept& e, std::size_t limit,
                  std::set<ElementId>& keep, std::set<RoleEdge>& edges) {
  keep.insert(from);
  if (e.kind() != ConceptKind::Exists || limit == 0) return;
  const auto ext = extension(m, e.filler());
  for (ElementId succ : m.successors(from, e.role().name)) {
    if (!ext[succ]) continue;
    edges.insert({from, e.role().name, succ});
    witness_path(m, succ, e.filler(), limit - 1, keep, edges);
    return;
  }
  throw Error(ErrorCode::Internal, "no witness path for " + e.text());
}

ElementId renumbered(const std::set<ElementId>& keep, ElementId id) {
  return static_cast<ElementId>(std::distance(keep.begin(), keep.find(id)));
}

}  // namespace

std::vector<Concept> contrasting_conditions(std::span<const Axiom> tbox, const Concept& c, const Concept& d,
                                            const CancelToken& cancel) {
  require_el(tbox, {&c, &d});
  require_not_entailed(tbox, c, d, cancel);

  Signature sig = signature_of(tbox);
  sig.merge(signature_of(c));
  sig.merge(signature_of(d));
  int depth = d.role_depth();
  for (const auto& a : tbox) depth = std::max(depth, a.role_depth());

  std::vector<Concept> pool;
  for (const auto& n : sig.concepts) pool.push_back(Concept::named(n));
  std::vector<Concept> fillers = pool;
  fillers.push_back(Concept::top());
  for (int level = 1; level <= depth; ++level) {
    std::vector<Concept> next;
    for (const auto& r : sig.roles)
      for (const auto& f : fillers) next.push_back(Concept::exists(r, f));
    pool.insert(pool.end(), next.begin(), next.end());
    fillers = std::move(next);
  }

  std::vector<Axiom> queries;
  for (const auto& e : pool) {
    queries.push_back(Axiom::subclass(d, e));
    queries.push_back(Axiom::subclass(c, e));
  }
  const auto result = el::Reasoner(tbox, cancel).entails_all(queries);
  std::vector<Concept> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (result[2 * i] && !result[2 * i + 1] && seen.insert(pool[i].text()).second) out.push_back(pool[i]);
  std::sort(out.begin(), out.end(), [](const Concept& a, const Concept& b) {
    return std::pair{a.role_depth(), a.text()} < std::pair{b.role_depth(), b.text()};
  });
  return out;
}

Concept generalize_condition(std::span<const Axiom> tbox, const Concept& c, const Concept& e,
                             const CancelToken& cancel) {
  require_el(tbox, {&c, &e});
  const auto roles = prefix_roles(e);
  std::vector<Concept> ladder;
  for (std::size_t k = 1; k <= roles.size(); ++k) ladder.push_back(truncation(roles, k));
  ladder.push_back(e);
  std::vector<Axiom> queries;
  for (const auto& g : ladder) queries.push_back(Axiom::subclass(c, g));
  const auto entailed = el::Reasoner(tbox, cancel).entails_all(queries);
  for (std::size_t i = 0; i < ladder.size(); ++i)
    if (!entailed[i]) return ladder[i];
  throw Error(ErrorCode::IsEntailed, "the ontology entails " + queries.back().text());
}

RelevantPart extract_relevant_part(std::span<const Axiom> tbox, const Axiom& query, RelevanceMode mode,
                                   const CancelToken& cancel) {
  if (query.kind() != AxiomKind::SubClassOf)
    throw Error(ErrorCode::InvalidArgument, "relevant counterexamples need a SubClassOf query");
  const Concept& c = query.sub();
  const Concept& d = query.super();
  require_el(tbox, {&c, &d});
  require_not_entailed(tbox, c, d, cancel);

  RelevantPart part;
  part.mode = mode;
  if (mode == RelevanceMode::Alpha) {
    const std::vector<Concept> seeds{c};
    const auto model = el::canonical_model(tbox, seeds, cancel);
    const ElementId dc = *model.find_origin(c.text());
    const auto keep = model.reachable_from(dc);
    part.interp = model.restricted(keep);
    part.witness = renumbered(keep, dc);
    return part;
  }

  const std::vector<Concept> seeds{c, d};
  const auto model = el::canonical_model(tbox, seeds, cancel);
  const ElementId dc = *model.find_origin(c.text());
  const ElementId dd = *model.find_origin(d.text());

  std::set<ElementId> keep;
  std::set<RoleEdge> edges;
  const std::set<RoleEdge>* filter = nullptr;
  if (mode == RelevanceMode::Beta) {
    keep = model.reachable_from(dc);
    keep.merge(model.reachable_from(dd));
  } else {
    keep = {dc, dd};
    const auto conditions = contrasting_conditions(tbox, c, d, cancel);
    for (const auto& e : conditions) {
      std::size_t limit = prefix_roles(e).size();
      if (mode == RelevanceMode::DeltaBar) {
        const Concept g = generalize_condition(tbox, c, e, cancel);
        limit = prefix_roles(g).size();
        if (std::find(part.conditions.begin(), part.conditions.end(), g) == part.conditions.end())
          part.conditions.push_back(g);
      } else {
        part.conditions.push_back(e);
      }
      witness_path(model, dd, e, limit, keep, edges);
      if (e.kind() == ConceptKind::Exists) {
        for (ElementId s : model.successors(dc, e.role().name)) {
          keep.insert(s);
          edges.insert({dc, e.role().name, s});
        }
      }
    }
    filter = &edges;
  }
  part.interp = model.restricted(keep, filter);
  part.witness = renumbered(keep, dc);
  part.contrast = renumbered(keep, dd);
  return part;
}

}  // namespace missing_why::relevance
