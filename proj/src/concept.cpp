#include "missing_why/concept.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "missing_why/error.hpp"

namespace missing_why {

bool is_reserved_name(std::string_view name) { return name.starts_with(kReservedPrefix); }

bool is_valid_name(std::string_view name) {
  if (name.empty() || name == kTopToken || name == kBottomToken) return false;
  if (name.front() == '?') return false;
  return std::none_of(name.begin(), name.end(), [](char ch) {
    return std::isspace(static_cast<unsigned char>(ch)) || ch == '(' || ch == ')';
  });
}

std::string print_name(std::string_view name) {
  if (name.find(':') != std::string_view::npos || name.starts_with('<')) return std::string(name);
  return ":" + std::string(name);
}

std::string Role::text() const {
  return inverse ? "ObjectInverseOf(" + print_name(name) + ")" : print_name(name);
}

namespace {

using detail::ConceptNode;

std::shared_ptr<ConceptNode> make_node(ConceptKind kind) {
  auto node = std::make_shared<ConceptNode>();
  node->kind = kind;
  return node;
}

void require_name(const std::string& name, std::string_view what) {
  if (name.empty()) throw Error(ErrorCode::InvalidName, std::string(what) + " name must be non-empty");
}

std::string join_texts(std::string_view head, const std::vector<Concept>& items) {
  std::string out(head);
  out += '(';
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ' ';
    out += items[i].text();
  }
  out += ')';
  return out;
}

std::vector<Concept> canonical_operands(std::vector<Concept> operands, ConceptKind kind) {
  std::vector<Concept> flat;
  flat.reserve(operands.size());
  for (auto& op : operands) {
    if (op.kind() == kind) {
      for (const auto& inner : op.operands()) flat.push_back(inner);
    } else {
      flat.push_back(std::move(op));
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  return flat;
}

}  // namespace

Concept Concept::top() {
  static const Concept instance = [] {
    auto node = make_node(ConceptKind::Top);
    node->text = std::string(kTopToken);
    return Concept(std::move(node));
  }();
  return instance;
}

Concept Concept::bottom() {
  static const Concept instance = [] {
    auto node = make_node(ConceptKind::Bottom);
    node->text = std::string(kBottomToken);
    node->el = false;
    return Concept(std::move(node));
  }();
  return instance;
}

Concept Concept::named(std::string name) {
  require_name(name, "concept");
  auto node = make_node(ConceptKind::Name);
  node->text = print_name(name);
  node->name = std::move(name);
  return Concept(std::move(node));
}

Concept Concept::conjunction(std::vector<Concept> operands) {
  auto flat = canonical_operands(std::move(operands), ConceptKind::And);
  if (flat.empty()) return top();
  if (flat.size() == 1) return flat.front();
  auto node = make_node(ConceptKind::And);
  node->text = join_texts("ObjectIntersectionOf", flat);
  for (const auto& op : flat) {
    node->el_bot = node->el_bot && op.is_el_bot();
    node->el = node->el && op.is_el();
    node->fixpoint_free = node->fixpoint_free && op.is_fixpoint_free();
    node->depth = std::max(node->depth, op.role_depth());
  }
  node->children = std::move(flat);
  return Concept(std::move(node));
}

Concept Concept::disjunction(std::vector<Concept> operands) {
  auto flat = canonical_operands(std::move(operands), ConceptKind::Or);
  if (flat.empty()) return bottom();
  if (flat.size() == 1) return flat.front();
  auto node = make_node(ConceptKind::Or);
  node->text = join_texts("ObjectUnionOf", flat);
  node->el_bot = false;
  node->el = false;
  for (const auto& op : flat) {
    node->fixpoint_free = node->fixpoint_free && op.is_fixpoint_free();
    node->depth = std::max(node->depth, op.role_depth());
  }
  node->children = std::move(flat);
  return Concept(std::move(node));
}

Concept Concept::nominal(std::string individual) {
  require_name(individual, "individual");
  auto node = make_node(ConceptKind::Nominal);
  node->text = "ObjectOneOf(" + print_name(individual) + ")";
  node->name = std::move(individual);
  node->el_bot = false;
  node->el = false;
  return Concept(std::move(node));
}

Concept Concept::exists(Role role, Concept filler) {
  require_name(role.name, "role");
  auto node = make_node(ConceptKind::Exists);
  node->text = "ObjectSomeValuesFrom(" + role.text() + " " + filler.text() + ")";
  node->el_bot = !role.inverse && filler.is_el_bot();
  node->el = !role.inverse && filler.is_el();
  node->fixpoint_free = filler.is_fixpoint_free();
  node->depth = filler.role_depth() + 1;
  node->role = std::move(role);
  node->children.push_back(std::move(filler));
  return Concept(std::move(node));
}

Concept Concept::exists(std::string role, Concept filler) {
  return exists(Role{std::move(role), false}, std::move(filler));
}

Concept Concept::variable(std::string token) {
  require_name(token, "fixpoint variable");
  auto node = make_node(ConceptKind::Var);
  node->text = "?" + token;
  node->name = std::move(token);
  node->el_bot = false;
  node->el = false;
  node->fixpoint_free = false;
  return Concept(std::move(node));
}

Concept Concept::mu(std::string token, Concept body) {
  require_name(token, "fixpoint variable");
  auto node = make_node(ConceptKind::Mu);
  node->text = "Mu(?" + token + " " + body.text() + ")";
  node->name = std::move(token);
  node->el_bot = false;
  node->el = false;
  node->fixpoint_free = false;
  node->depth = body.role_depth();
  node->children.push_back(std::move(body));
  return Concept(std::move(node));
}

ConceptKind Concept::kind() const { return node_->kind; }
const std::string& Concept::name() const { return node_->name; }
std::span<const Concept> Concept::operands() const {
  if (node_->kind != ConceptKind::And && node_->kind != ConceptKind::Or) return {};
  return node_->children;
}
const Role& Concept::role() const { return node_->role; }
const Concept& Concept::filler() const { return node_->children.front(); }
const std::string& Concept::text() const { return node_->text; }
bool Concept::is_atomic() const {
  return node_->kind == ConceptKind::Top || node_->kind == ConceptKind::Bottom ||
         node_->kind == ConceptKind::Name;
}
bool Concept::is_el_bot() const { return node_->el_bot; }
bool Concept::is_el() const { return node_->el; }
bool Concept::is_fixpoint_free() const { return node_->fixpoint_free; }
int Concept::role_depth() const { return node_->depth; }

std::vector<Concept> Concept::conjuncts() const {
  if (kind() == ConceptKind::And) return {operands().begin(), operands().end()};
  return {*this};
}

bool occurs_free(const Concept& expr, std::string_view token) {
  switch (expr.kind()) {
    case ConceptKind::Var: return expr.name() == token;
    case ConceptKind::Mu:
      return expr.name() != token && occurs_free(expr.filler(), token);
    case ConceptKind::Exists: return occurs_free(expr.filler(), token);
    case ConceptKind::And:
    case ConceptKind::Or:
      return std::any_of(expr.operands().begin(), expr.operands().end(),
                         [&](const Concept& op) { return occurs_free(op, token); });
    default: return false;
  }
}

Concept substitute(const Concept& expr, std::string_view token, const Concept& replacement) {
  switch (expr.kind()) {
    case ConceptKind::Var: return expr.name() == token ? replacement : expr;
    case ConceptKind::Mu:
      if (expr.name() == token) return expr;
      return Concept::mu(expr.name(), substitute(expr.filler(), token, replacement));
    case ConceptKind::Exists:
      return Concept::exists(expr.role(), substitute(expr.filler(), token, replacement));
    case ConceptKind::And:
    case ConceptKind::Or: {
      std::vector<Concept> ops;
      for (const auto& op : expr.operands()) ops.push_back(substitute(op, token, replacement));
      return expr.kind() == ConceptKind::And ? Concept::conjunction(std::move(ops))
                                                : Concept::disjunction(std::move(ops));
    }
    default: return expr;
  }
}

Concept simplify(const Concept& expr) {
  switch (expr.kind()) {
    case ConceptKind::And: {
      std::vector<Concept> ops;
      for (const auto& op : expr.operands()) {
        auto s = simplify(op);
        if (s.kind() == ConceptKind::Bottom) return Concept::bottom();
        if (s.kind() != ConceptKind::Top) ops.push_back(std::move(s));
      }
      return Concept::conjunction(std::move(ops));
    }
    case ConceptKind::Or: {
      std::vector<Concept> ops;
      for (const auto& op : expr.operands()) {
        auto s = simplify(op);
        if (s.kind() == ConceptKind::Top) return Concept::top();
        if (s.kind() != ConceptKind::Bottom) ops.push_back(std::move(s));
      }
      return Concept::disjunction(std::move(ops));
    }
    case ConceptKind::Exists: {
      auto filler = simplify(expr.filler());
      if (filler.kind() == ConceptKind::Bottom) return Concept::bottom();
      return Concept::exists(expr.role(), std::move(filler));
    }
    case ConceptKind::Mu: {
      auto body = simplify(expr.filler());
      if (!occurs_free(body, expr.name())) return body;
      return Concept::mu(expr.name(), std::move(body));
    }
    default: return expr;
  }
}

bool syntactically_subsumed(const Concept& sub, const Concept& super) {
  if (sub == super) return true;
  if (super.kind() == ConceptKind::Top || sub.kind() == ConceptKind::Bottom) return true;
  if (super.kind() == ConceptKind::And) {
    return std::all_of(super.operands().begin(), super.operands().end(),
                       [&](const Concept& op) { return syntactically_subsumed(sub, op); });
  }
  if (sub.kind() == ConceptKind::Or) {
    return std::all_of(sub.operands().begin(), sub.operands().end(),
                       [&](const Concept& op) { return syntactically_subsumed(op, super); });
  }
  if (super.kind() == ConceptKind::Or) {
    return std::any_of(super.operands().begin(), super.operands().end(),
                       [&](const Concept& op) { return syntactically_subsumed(sub, op); });
  }
  if (sub.kind() == ConceptKind::And) {
    return std::any_of(sub.operands().begin(), sub.operands().end(),
                       [&](const Concept& op) { return syntactically_subsumed(op, super); });
  }
  if (sub.kind() == ConceptKind::Exists && super.kind() == ConceptKind::Exists) {
    return sub.role() == super.role() && syntactically_subsumed(sub.filler(), super.filler());
  }
  return false;
}

}  // namespace missing_why
