#include "missing_why/abduction/abduction.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "missing_why/el/reasoner.hpp"
#include "missing_why/error.hpp"

namespace missing_why::abduction {

Hypothesis Hypothesis::of(std::vector<Axiom> axioms) {
  std::sort(axioms.begin(), axioms.end());
  axioms.erase(std::unique(axioms.begin(), axioms.end()), axioms.end());
  Hypothesis h;
  h.axioms = std::move(axioms);
  return h;
}

int Hypothesis::depth() const {
  int d = 0;
  for (const auto& a : axioms) d = std::max(d, a.role_depth());
  return d;
}

int Hypothesis::total_depth() const {
  int d = 0;
  for (const auto& a : axioms) d += a.role_depth();
  return d;
}

bool Hypothesis::is_el_bot() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const Axiom& a) { return a.is_el_bot(); });
}

std::string Hypothesis::text() const {
  std::string out;
  for (const auto& a : axioms) {
    if (!out.empty()) out += '\n';
    out += a.text();
  }
  return out;
}

namespace {

bool all_el_bot(std::span<const Axiom> axioms) {
  return std::all_of(axioms.begin(), axioms.end(), [](const Axiom& a) { return a.is_el_bot(); });
}

std::vector<Axiom> with(const Ontology& ontology, std::span<const Axiom> extra) {
  std::vector<Axiom> all = ontology.axioms();
  all.insert(all.end(), extra.begin(), extra.end());
  return all;
}

bool holds(const el::QueryResult& r) {
  return r.consistent && std::all_of(r.entailed.begin(), r.entailed.end(), [](bool b) { return b; });
}

}  // namespace

Verification verify_hypothesis(const Ontology& ontology, const Hypothesis& hypothesis,
                               std::span<const Axiom> missing, const CancelToken& cancel) {
  if (!hypothesis.is_el_bot() || !all_el_bot(missing)) return Verification::Unverifiable;
  const auto result = el::Reasoner(with(ontology, hypothesis.axioms), cancel).evaluate(missing);
  return holds(result) ? Verification::Holds : Verification::Fails;
}

std::vector<Axiom> abduction_candidates(const Signature& sigma, int max_depth) {
  std::vector<Concept> names;
  for (const auto& n : sigma.concepts) names.push_back(Concept::named(n));
  std::vector<Concept> pool = names;
  std::vector<Concept> level = names;
  level.push_back(Concept::top());
  for (int d = 1; d <= max_depth; ++d) {
    std::vector<Concept> next;
    for (const auto& r : sigma.roles)
      for (const auto& f : level) next.push_back(Concept::exists(r, f));
    pool.insert(pool.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::vector<Axiom> out;
  for (const auto& a : names)
    for (const auto& f : pool)
      if (f != a) out.push_back(Axiom::subclass(a, f));
  for (const auto& ind : sigma.individuals)
    for (const auto& f : pool) out.push_back(Axiom::class_assertion(f, ind));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Hypothesis> naive_abduce(const Ontology& ontology, std::span<const Axiom> missing,
                                     const Signature& sigma, Bounds bounds, const CancelToken& cancel) {
  if (missing.empty()) throw Error(ErrorCode::EmptyQuery, "no missing entailment given");
  if (!all_el_bot(missing))
    throw Error(ErrorCode::ExtendedSyntaxInCoreContext, "missing entailments must be EL⊥ axioms");
  if (sigma.empty()) throw Error(ErrorCode::EmptySignature, "the permitted vocabulary is empty");
  if (holds(el::Reasoner(ontology, cancel).evaluate(missing)))
    throw Error(ErrorCode::AlreadyEntailed, "the ontology already entails the missing axioms");

  const auto candidates = abduction_candidates(sigma, bounds.max_depth);
  const auto base = ontology.axioms();
  std::vector<std::vector<std::size_t>> kept;

  auto contains_kept = [&](const std::vector<std::size_t>& chosen) {
    return std::any_of(kept.begin(), kept.end(), [&](const std::vector<std::size_t>& k) {
      return std::includes(chosen.begin(), chosen.end(), k.begin(), k.end());
    });
  };

  // Sets of one size are all examined before the next size, so a set is
  // subset-minimal iff it contains no set kept earlier.
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t from, std::size_t size) {
    if (chosen.size() == size) {
      cancel.throw_if_cancelled();
      if (contains_kept(chosen)) return;
      std::vector<Axiom> all = base;
      for (auto i : chosen) all.push_back(candidates[i]);
      if (holds(el::Reasoner(all, cancel).evaluate(missing))) kept.push_back(chosen);
      return;
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      chosen.push_back(i);
      if (!contains_kept(chosen)) extend(i + 1, size);
      chosen.pop_back();
    }
  };
  for (int size = 1; size <= bounds.max_axioms; ++size) extend(0, static_cast<std::size_t>(size));

  std::vector<Hypothesis> out;
  for (const auto& k : kept) {
    std::vector<Axiom> axioms;
    for (auto i : k) axioms.push_back(candidates[i]);
    auto h = Hypothesis::of(std::move(axioms));
    h.verified = true;
    out.push_back(std::move(h));
  }
  std::stable_sort(out.begin(), out.end(), [](const Hypothesis& a, const Hypothesis& b) {
    return std::tuple{a.axioms.size(), a.total_depth(), a.text()} <
           std::tuple{b.axioms.size(), b.total_depth(), b.text()};
  });
  return out;
}

Concept approximant(const Concept& c, int n) {
  switch (c.kind()) {
    case ConceptKind::Mu: {
      const Concept body = approximant(c.filler(), n);
      Concept current = Concept::bottom();
      for (int i = 0; i < n; ++i) current = simplify(substitute(body, c.name(), current));
      return current;
    }
    case ConceptKind::And:
    case ConceptKind::Or: {
      std::vector<Concept> ops;
      for (const auto& op : c.operands()) ops.push_back(approximant(op, n));
      return simplify(c.kind() == ConceptKind::And ? Concept::conjunction(std::move(ops))
                                                   : Concept::disjunction(std::move(ops)));
    }
    case ConceptKind::Exists: return simplify(Concept::exists(c.role(), approximant(c.filler(), n)));
    default: return c;
  }
}

Axiom approximant(const Axiom& axiom, int n) {
  if (std::all_of(axiom.concepts().begin(), axiom.concepts().end(),
                  [](const Concept& c) { return c.is_fixpoint_free(); }))
    return axiom;
  std::vector<Concept> cs;
  for (const auto& c : axiom.concepts()) cs.push_back(approximant(c, n));
  switch (axiom.kind()) {
    case AxiomKind::SubClassOf: return Axiom::subclass(cs[0], cs[1]);
    case AxiomKind::EquivalentClasses: return Axiom::equivalent(std::move(cs));
    case AxiomKind::DisjointClasses: return Axiom::disjoint(std::move(cs));
    case AxiomKind::ClassAssertion: return Axiom::class_assertion(cs[0], axiom.individual());
    case AxiomKind::RoleAssertion: return axiom;
  }
  return axiom;
}

std::vector<Hypothesis> unravel_fixpoints(const FixpointHypothesisSet& fhs, int count) {
  if (count < 1) throw Error(ErrorCode::NonPositiveCount, "count must be positive");
  std::vector<Hypothesis> all;
  std::set<std::string> seen;
  for (const auto& disjunct : fhs) {
    std::optional<Hypothesis> previous;
    for (int n = 1; n <= count; ++n) {
      std::vector<Axiom> axioms;
      for (const auto& a : disjunct) axioms.push_back(approximant(a, n));
      auto h = Hypothesis::of(std::move(axioms));
      if (previous && *previous == h) break;
      if (seen.insert(h.text()).second) all.push_back(h);
      previous = std::move(h);
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const Hypothesis& a, const Hypothesis& b) {
    return std::pair{a.depth(), a.text()} < std::pair{b.depth(), b.text()};
  });
  if (all.size() > static_cast<std::size_t>(count)) all.resize(static_cast<std::size_t>(count));
  return all;
}

bool hypothesis_implies(const Ontology& ontology, const Hypothesis& h1, const Hypothesis& h2,
                        const CancelToken& cancel) {
  if (!h1.is_el_bot() || !h2.is_el_bot()) return false;
  const auto entailed = el::Reasoner(with(ontology, h1.axioms), cancel).entails_all(h2.axioms);
  return std::all_of(entailed.begin(), entailed.end(), [](bool b) { return b; });
}

namespace {

// Drops operands of a top-level conjunction (or disjunction) that the others
// make redundant. `redundant(k, rest)` decides one operand.
Concept drop_operands(const Concept& c, const std::function<bool(const Concept&, const std::vector<Concept>&)>& redundant) {
  if (c.kind() != ConceptKind::And && c.kind() != ConceptKind::Or) return c;
  std::vector<Concept> ops(c.operands().begin(), c.operands().end());
  for (std::size_t i = 0; i < ops.size() && ops.size() > 1;) {
    std::vector<Concept> rest = ops;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (redundant(ops[i], rest))
      ops = std::move(rest);
    else
      ++i;
  }
  return c.kind() == ConceptKind::And ? Concept::conjunction(std::move(ops)) : Concept::disjunction(std::move(ops));
}

Concept simplify_member(const el::Reasoner& reasoner, const Concept& c) {
  if (c.is_el_bot()) {
    return drop_operands(c, [&](const Concept& k, const std::vector<Concept>& rest) {
      return reasoner.subsumes(Concept::conjunction(rest), k);
    });
  }
  if (c.kind() == ConceptKind::Or) {
    return drop_operands(c, [](const Concept& k, const std::vector<Concept>& rest) {
      return std::any_of(rest.begin(), rest.end(), [&](const Concept& o) { return syntactically_subsumed(k, o); });
    });
  }
  return drop_operands(c, [](const Concept& k, const std::vector<Concept>& rest) {
    return std::any_of(rest.begin(), rest.end(), [&](const Concept& o) { return syntactically_subsumed(o, k); });
  });
}

Axiom simplify_axiom(const el::Reasoner& reasoner, const Axiom& a) {
  switch (a.kind()) {
    case AxiomKind::SubClassOf: return Axiom::subclass(a.sub(), simplify_member(reasoner, a.super()));
    case AxiomKind::ClassAssertion: return Axiom::class_assertion(simplify_member(reasoner, a.class_expr()), a.individual());
    default: return a;
  }
}

}  // namespace

std::vector<Hypothesis> postprocess_hypotheses(const Ontology& ontology, std::vector<Hypothesis> hypotheses,
                                               PostprocessOptions options, const CancelToken& cancel) {
  if (options.drop_redundant_axioms) {
    for (auto& h : hypotheses) {
      if (!h.is_el_bot()) continue;
      for (bool changed = true; changed && h.axioms.size() > 1;) {
        changed = false;
        for (std::size_t i = 0; i < h.axioms.size(); ++i) {
          std::vector<Axiom> rest = h.axioms;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
          if (el::Reasoner(with(ontology, rest), cancel).entails(h.axioms[i])) {
            h.axioms = std::move(rest);
            changed = true;
            break;
          }
        }
      }
    }
  }

  if (options.simplify_members) {
    const auto base = ontology.axioms();
    const el::Reasoner reasoner(base, cancel);
    for (auto& h : hypotheses) {
      std::vector<Axiom> axioms;
      for (const auto& a : h.axioms) axioms.push_back(simplify_axiom(reasoner, a));
      auto verified = h.verified;
      h = Hypothesis::of(std::move(axioms));
      h.verified = verified;
    }
  }

  if (options.order_by_specificity && hypotheses.size() > 1) {
    const std::size_t n = hypotheses.size();
    std::vector<std::vector<bool>> implies(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      if (!hypotheses[i].is_el_bot()) continue;
      std::vector<Axiom> queries;
      std::vector<std::pair<std::size_t, std::size_t>> ranges(n);
      for (std::size_t j = 0; j < n; ++j) {
        ranges[j].first = queries.size();
        if (j != i && hypotheses[j].is_el_bot())
          queries.insert(queries.end(), hypotheses[j].axioms.begin(), hypotheses[j].axioms.end());
        ranges[j].second = queries.size();
      }
      const auto entailed = el::Reasoner(with(ontology, hypotheses[i].axioms), cancel).entails_all(queries);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || !hypotheses[j].is_el_bot()) continue;
        bool all = true;
        for (std::size_t k = ranges[j].first; k < ranges[j].second; ++k) all = all && entailed[k];
        implies[i][j] = all;
      }
    }
    // Stable Kahn order: always take the earliest hypothesis that nothing
    // remaining strictly implies.
    std::vector<std::size_t> remaining(n);
    for (std::size_t i = 0; i < n; ++i) remaining[i] = i;
    std::vector<Hypothesis> ordered;
    while (!remaining.empty()) {
      auto pick = std::find_if(remaining.begin(), remaining.end(), [&](std::size_t x) {
        return std::none_of(remaining.begin(), remaining.end(),
                            [&](std::size_t y) { return y != x && implies[y][x] && !implies[x][y]; });
      });
      if (pick == remaining.end()) pick = remaining.begin();  // unreachable: strict implication is acyclic
      ordered.push_back(std::move(hypotheses[*pick]));
      remaining.erase(pick);
    }
    hypotheses = std::move(ordered);
  }
  return hypotheses;
}

}  // namespace missing_why::abduction
