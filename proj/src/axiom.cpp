#include "missing_why/axiom.hpp"

#include <algorithm>

#include "missing_why/error.hpp"

namespace missing_why {

namespace {

std::string render(AxiomKind kind, const std::vector<Concept>& concepts, const std::string& role,
                   const std::string& subject, const std::string& object) {
  auto list = [&](std::string head) {
    head += '(';
    for (std::size_t i = 0; i < concepts.size(); ++i) {
      if (i) head += ' ';
      head += concepts[i].text();
    }
    return head + ')';
  };
  switch (kind) {
    case AxiomKind::SubClassOf: return list("SubClassOf");
    case AxiomKind::EquivalentClasses: return list("EquivalentClasses");
    case AxiomKind::DisjointClasses: return list("DisjointClasses");
    case AxiomKind::ClassAssertion:
      return "ClassAssertion(" + concepts.front().text() + " " + print_name(subject) + ")";
    case AxiomKind::RoleAssertion:
      return "ObjectPropertyAssertion(" + print_name(role) + " " + print_name(subject) + " " +
             print_name(object) + ")";
  }
  return {};
}

}  // namespace

Axiom::Axiom(AxiomKind kind, std::vector<Concept> concepts, std::string role, std::string subject,
             std::string object)
    : kind_(kind),
      concepts_(std::move(concepts)),
      role_(std::move(role)),
      subject_(std::move(subject)),
      object_(std::move(object)),
      text_(render(kind_, concepts_, role_, subject_, object_)) {}

Axiom Axiom::subclass(Concept sub, Concept super) {
  return Axiom(AxiomKind::SubClassOf, {std::move(sub), std::move(super)}, {}, {}, {});
}

Axiom Axiom::equivalent(std::vector<Concept> concepts) {
  if (concepts.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "EquivalentClasses needs at least two operands");
  return Axiom(AxiomKind::EquivalentClasses, std::move(concepts), {}, {}, {});
}

Axiom Axiom::disjoint(std::vector<Concept> concepts) {
  if (concepts.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "DisjointClasses needs at least two operands");
  return Axiom(AxiomKind::DisjointClasses, std::move(concepts), {}, {}, {});
}

Axiom Axiom::class_assertion(Concept expr, std::string individual) {
  if (individual.empty()) throw Error(ErrorCode::InvalidName, "individual name must be non-empty");
  return Axiom(AxiomKind::ClassAssertion, {std::move(expr)}, {}, std::move(individual), {});
}

Axiom Axiom::role_assertion(std::string role, std::string subject, std::string object) {
  if (role.empty() || subject.empty() || object.empty())
    throw Error(ErrorCode::InvalidName, "role assertion names must be non-empty");
  return Axiom(AxiomKind::RoleAssertion, {}, std::move(role), std::move(subject), std::move(object));
}

bool Axiom::is_el_bot() const {
  return std::all_of(concepts_.begin(), concepts_.end(), [](const Concept& c) { return c.is_el_bot(); });
}

bool Axiom::is_el() const {
  if (kind_ == AxiomKind::DisjointClasses) return false;
  return std::all_of(concepts_.begin(), concepts_.end(), [](const Concept& c) { return c.is_el(); });
}

int Axiom::role_depth() const {
  int depth = 0;
  for (const auto& c : concepts_) depth = std::max(depth, c.role_depth());
  return depth;
}

std::vector<Axiom> Axiom::lowered() const {
  std::vector<Axiom> out;
  switch (kind_) {
    case AxiomKind::EquivalentClasses:
      for (std::size_t i = 0; i < concepts_.size(); ++i)
        for (std::size_t j = 0; j < concepts_.size(); ++j)
          if (i != j) out.push_back(subclass(concepts_[i], concepts_[j]));
      break;
    case AxiomKind::DisjointClasses:
      for (std::size_t i = 0; i < concepts_.size(); ++i)
        for (std::size_t j = i + 1; j < concepts_.size(); ++j)
          out.push_back(subclass(Concept::conjunction({concepts_[i], concepts_[j]}), Concept::bottom()));
      break;
    default: out.push_back(*this);
  }
  return out;
}

}  // namespace missing_why
