#include "missing_why/el/normalize.hpp"

#include <set>
#include <unordered_map>

#include "missing_why/error.hpp"
#include "missing_why/ontology.hpp"

namespace missing_why::el {

Axiom NormalAxiom::to_axiom() const {
  switch (shape) {
    case NormalShape::Subsumption: return Axiom::subclass(lhs, rhs);
    case NormalShape::Conjunction: return Axiom::subclass(Concept::conjunction({lhs, lhs2}), rhs);
    case NormalShape::ExistsRight: return Axiom::subclass(lhs, Concept::exists(role, rhs));
    case NormalShape::ExistsLeft: return Axiom::subclass(Concept::exists(role, lhs), rhs);
  }
  throw Error(ErrorCode::Internal, "unknown normal shape");
}

std::vector<Axiom> NormalizedTBox::to_axioms() const {
  std::vector<Axiom> out;
  out.reserve(axioms.size());
  for (const auto& a : axioms) out.push_back(a.to_axiom());
  return out;
}

namespace {

class Normalizer {
 public:
  explicit Normalizer(std::set<std::string> taken) : taken_(std::move(taken)) {}

  void add_gci(const Concept& lhs, const Concept& rhs) {
    if (lhs.kind() == ConceptKind::Bottom || rhs.kind() == ConceptKind::Top) return;
    if (rhs.kind() == ConceptKind::And) {
      const Concept atom = lhs.is_atomic() ? lhs : lhs_atom(lhs);
      for (const auto& conjunct : rhs.operands()) add_gci(atom, conjunct);
      return;
    }
    if (lhs.is_atomic()) {
      from_atom(lhs, rhs);
      return;
    }
    const Concept target = rhs.is_atomic() ? rhs : rhs_atom(rhs);
    if (lhs.kind() == ConceptKind::And) {
      std::vector<Concept> atoms;
      for (const auto& op : lhs.operands()) atoms.push_back(lhs_atom(op));
      Concept current = atoms.front();
      std::vector<Concept> prefix{lhs.operands().front()};
      for (std::size_t i = 1; i + 1 < atoms.size(); ++i) {
        prefix.push_back(lhs.operands()[i]);
        Concept next = fresh(Concept::conjunction(prefix));
        emit({NormalShape::Conjunction, current, atoms[i], {}, next});
        current = next;
      }
      emit({NormalShape::Conjunction, current, atoms.back(), {}, target});
    } else if (lhs.kind() == ConceptKind::Exists) {
      emit({NormalShape::ExistsLeft, lhs_atom(lhs.filler()), Concept::top(), lhs.role().name, target});
    } else {
      throw Error(ErrorCode::ExtendedSyntaxInCoreContext, "cannot normalize " + lhs.text());
    }
  }

  NormalizedTBox finish() && { return std::move(result_); }

 private:
  void from_atom(const Concept& atom, const Concept& rhs) {
    if (rhs.is_atomic()) {
      if (atom != rhs) emit({NormalShape::Subsumption, atom, Concept::top(), {}, rhs});
    } else if (rhs.kind() == ConceptKind::Exists) {
      emit({NormalShape::ExistsRight, atom, Concept::top(), rhs.role().name, rhs_atom(rhs.filler())});
    } else {
      throw Error(ErrorCode::ExtendedSyntaxInCoreContext, "cannot normalize " + rhs.text());
    }
  }

  // Atom X with C ⊑ X.
  Concept lhs_atom(const Concept& c) {
    if (c.is_atomic()) return c;
    if (auto it = lhs_memo_.find(c.text()); it != lhs_memo_.end()) return it->second;
    Concept x = fresh(c);
    lhs_memo_.emplace(c.text(), x);
    add_gci(c, x);
    return x;
  }

  // Atom X with X ⊑ C.
  Concept rhs_atom(const Concept& c) {
    if (c.is_atomic()) return c;
    if (auto it = rhs_memo_.find(c.text()); it != rhs_memo_.end()) return it->second;
    Concept x = fresh(c);
    rhs_memo_.emplace(c.text(), x);
    add_gci(x, c);
    return x;
  }

  Concept fresh(const Concept& meaning) {
    std::string name;
    do {
      name = std::string(kFreshPrefix) + std::to_string(counter_++);
    } while (taken_.contains(name));
    taken_.insert(name);
    result_.fresh_map.emplace(name, meaning);
    return Concept::named(name);
  }

  void emit(NormalAxiom axiom) {
    if (seen_.insert(axiom.to_axiom().text()).second) result_.axioms.push_back(std::move(axiom));
  }

  std::set<std::string> taken_;
  std::unordered_map<std::string, Concept> lhs_memo_;
  std::unordered_map<std::string, Concept> rhs_memo_;
  std::set<std::string> seen_;
  std::size_t counter_ = 0;
  NormalizedTBox result_;
};

}  // namespace

NormalizedTBox normalize(std::span<const Axiom> tbox) {
  for (const auto& axiom : tbox) {
    if (!axiom.is_tbox()) throw Error(ErrorCode::InvalidArgument, "normalize expects TBox axioms: " + axiom.text());
    if (!axiom.is_el_bot())
      throw Error(ErrorCode::ExtendedSyntaxInCoreContext, "not an EL⊥ axiom: " + axiom.text());
  }
  Normalizer normalizer(signature_of(tbox).concepts);
  for (const auto& axiom : tbox)
    for (const auto& gci : axiom.lowered()) normalizer.add_gci(gci.sub(), gci.super());
  return std::move(normalizer).finish();
}

}  // namespace missing_why::el
