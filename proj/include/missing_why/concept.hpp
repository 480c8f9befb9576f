#pragma once

// Concept expressions.
//
// A single immutable node type covers both the EL⊥ core (⊤, ⊥, names,
// conjunction, existential restriction) and the extended hypothesis syntax
// (disjunction, nominals, inverse roles, fixpoint variables and μ-binders).
// Reasoning entry points reject anything outside the core via is_el_bot().
//
// Every node caches its canonical print string. Conjunctions and disjunctions
// are flattened, deduplicated and sorted by that string at construction, so
// structural equality is string equality.

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace missing_why {

inline constexpr std::string_view kTopToken = "owl:Thing";
inline constexpr std::string_view kBottomToken = "owl:Nothing";

// Names in this namespace are generated internally (normalization, tableau
// goal, reasoner query names) and never accepted from user input.
inline constexpr std::string_view kReservedPrefix = "_:";

bool is_reserved_name(std::string_view name);
bool is_valid_name(std::string_view name);

// Canonical spelling of a concept/role/individual name: `:A` for bare names,
// verbatim for prefixed names or IRIs.
std::string print_name(std::string_view name);

struct Role {
  std::string name;
  bool inverse = false;

  std::string text() const;
  friend bool operator==(const Role&, const Role&) = default;
  friend auto operator<=>(const Role&, const Role&) = default;
};

enum class ConceptKind { Top, Bottom, Name, And, Or, Nominal, Exists, Var, Mu };

namespace detail {
struct ConceptNode;
}

class Concept {
 public:
  static Concept top();
  static Concept bottom();
  static Concept named(std::string name);
  static Concept conjunction(std::vector<Concept> operands);
  static Concept disjunction(std::vector<Concept> operands);
  static Concept nominal(std::string individual);
  static Concept exists(Role role, Concept filler);
  static Concept exists(std::string role, Concept filler);
  static Concept variable(std::string token);
  static Concept mu(std::string token, Concept body);

  ConceptKind kind() const;
  // Name, Nominal (individual), Var and Mu (bound token).
  const std::string& name() const;
  // And / Or operands in canonical order.
  std::span<const Concept> operands() const;
  const Role& role() const;
  // Exists filler or Mu body.
  const Concept& filler() const;

  const std::string& text() const;
  bool is_atomic() const;  // ⊤, ⊥ or a concept name
  bool is_el_bot() const;  // no extended constructor anywhere
  bool is_el() const;      // EL⊥ without ⊥
  bool is_fixpoint_free() const;
  int role_depth() const;

  // Conjuncts of the concept, or the singleton {this}.
  std::vector<Concept> conjuncts() const;

  friend bool operator==(const Concept& a, const Concept& b) { return a.text() == b.text(); }
  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
    return a.text() <=> b.text();
  }

 private:
  explicit Concept(std::shared_ptr<const detail::ConceptNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::ConceptNode> node_;
};

namespace detail {
struct ConceptNode {
  ConceptKind kind;
  std::string name;
  Role role;
  std::vector<Concept> children;
  std::string text;
  bool el_bot = true;
  bool el = true;
  bool fixpoint_free = true;
  int depth = 0;
};
}  // namespace detail

// Substitutes `replacement` for free occurrences of variable `token`.
Concept substitute(const Concept& expr, std::string_view token, const Concept& replacement);

// ⊤/⊥ absorption: ∃R.⊥ → ⊥, ⊥ ⊔ G → G, ⊥ ⊓ G → ⊥, ⊤ ⊓ G → G, ⊤ ⊔ G → ⊤,
// and μX.C → C when X does not occur in C. Equivalence preserving.
Concept simplify(const Concept& expr);

bool occurs_free(const Concept& expr, std::string_view token);

// Structural subsumption: true when `sub` ⊑ `super` holds in every
// interpretation for purely syntactic reasons (used where no reasoner applies).
bool syntactically_subsumed(const Concept& sub, const Concept& super);

}  // namespace missing_why

template <>
struct std::hash<missing_why::Concept> {
  std::size_t operator()(const missing_why::Concept& c) const noexcept {
    return std::hash<std::string>{}(c.text());
  }
};
