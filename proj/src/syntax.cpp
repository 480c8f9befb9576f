#include "missing_why/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "missing_why/error.hpp"

namespace missing_why {

namespace {

enum class TokenKind { Open, Close, Word, Separator, End };

struct Token {
  TokenKind kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
    } else if (ch == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (ch == '(' || ch == ')') {
      tokens.push_back({ch == '(' ? TokenKind::Open : TokenKind::Close, std::string(1, ch), line, column});
      advance(1);
    } else {
      const int start_line = line;
      const int start_column = column;
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '(' &&
             text[j] != ')')
        ++j;
      std::string word(text.substr(i, j - i));
      const bool separator = word == "---";
      tokens.push_back({separator ? TokenKind::Separator : TokenKind::Word, std::move(word), start_line,
                        start_column});
      advance(j - i);
    }
  }
  tokens.push_back({TokenKind::End, {}, line, column});
  return tokens;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::End: return "end of input";
    default: return "'" + t.text + "'";
  }
}

class Parser {
 public:
  Parser(std::string_view text, bool extended) : tokens_(tokenize(text)), extended_(extended) {}

  bool at_end() const { return peek().kind == TokenKind::End; }
  bool at_separator() const { return peek().kind == TokenKind::Separator; }
  void skip_separator() { ++pos_; }

  void expect_end() {
    if (!at_end()) fail("end of input");
  }

  Concept expr() {
    const Token& t = peek();
    if (t.kind != TokenKind::Word) fail("class expression");
    if (t.text == kTopToken) return ++pos_, Concept::top();
    if (t.text == kBottomToken) return ++pos_, Concept::bottom();
    if (t.text.starts_with('?')) return variable();
    if (peek(1).kind == TokenKind::Open) {
      if (t.text == "ObjectIntersectionOf") return nary(true);
      if (t.text == "ObjectUnionOf") {
        require_extended(t);
        return nary(false);
      }
      if (t.text == "ObjectSomeValuesFrom") return some_values_from();
      if (t.text == "ObjectOneOf") {
        require_extended(t);
        pos_ += 2;
        auto individual = name("individual name");
        close();
        return Concept::nominal(std::move(individual));
      }
      if (t.text == "Mu") {
        require_extended(t);
        return fixpoint();
      }
      fail("class expression");
    }
    return Concept::named(name("class expression"));
  }

  Axiom axiom() {
    const Token& t = peek();
    if (t.kind != TokenKind::Word || peek(1).kind != TokenKind::Open) fail("axiom");
    const std::string head = t.text;
    if (head == "SubClassOf") {
      pos_ += 2;
      auto sub = expr();
      auto super = expr();
      close();
      return Axiom::subclass(std::move(sub), std::move(super));
    }
    if (head == "EquivalentClasses" || head == "DisjointClasses") {
      pos_ += 2;
      std::vector<Concept> ops;
      ops.push_back(expr());
      do {
        ops.push_back(expr());
      } while (peek().kind != TokenKind::Close);
      close();
      return head == "EquivalentClasses" ? Axiom::equivalent(std::move(ops)) : Axiom::disjoint(std::move(ops));
    }
    if (head == "ClassAssertion") {
      pos_ += 2;
      auto c = expr();
      auto individual = name("individual name");
      close();
      return Axiom::class_assertion(std::move(c), std::move(individual));
    }
    if (head == "ObjectPropertyAssertion") {
      pos_ += 2;
      auto role = name("object property");
      auto subject = name("individual name");
      auto object = name("individual name");
      close();
      return Axiom::role_assertion(std::move(role), std::move(subject), std::move(object));
    }
    fail("axiom");
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    throw SyntaxError(t.line, t.column, expected, describe(t));
  }

  void require_extended(const Token& t) const {
    if (!extended_)
      throw Error(ErrorCode::ExtendedSyntaxInCoreContext,
                  "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) + ": '" +
                      t.text + "' is only allowed in extended axioms");
  }

  void open() {
    if (peek().kind != TokenKind::Open) fail("'('");
    ++pos_;
  }

  void close() {
    if (peek().kind != TokenKind::Close) fail("')'");
    ++pos_;
  }

  std::string name(const std::string& expected) {
    const Token& t = peek();
    if (t.kind != TokenKind::Word || peek(1).kind == TokenKind::Open) fail(expected);
    std::string_view text = t.text;
    if (text.starts_with(':')) text.remove_prefix(1);
    if (!is_valid_name(text) || is_reserved_name(text)) fail(expected);
    ++pos_;
    return std::string(text);
  }

  Concept nary(bool conjunction) {
    pos_ += 2;
    std::vector<Concept> ops;
    ops.push_back(expr());
    do {
      ops.push_back(expr());
    } while (peek().kind != TokenKind::Close);
    close();
    return conjunction ? Concept::conjunction(std::move(ops)) : Concept::disjunction(std::move(ops));
  }

  Concept some_values_from() {
    pos_ += 2;
    Role role;
    if (peek().kind == TokenKind::Word && peek().text == "ObjectInverseOf" &&
        peek(1).kind == TokenKind::Open) {
      require_extended(peek());
      pos_ += 2;
      role = Role{name("object property"), true};
      close();
    } else {
      role = Role{name("object property"), false};
    }
    auto filler = expr();
    close();
    return Concept::exists(std::move(role), std::move(filler));
  }

  std::string variable_token() {
    const Token& t = peek();
    if (t.kind != TokenKind::Word || !t.text.starts_with('?') || t.text.size() < 2) fail("fixpoint variable");
    ++pos_;
    return t.text.substr(1);
  }

  Concept variable() {
    const Token& t = peek();
    require_extended(t);
    auto token = variable_token();
    if (std::find(bound_.begin(), bound_.end(), token) == bound_.end())
      throw Error(ErrorCode::UnboundFixpointVariable,
                  "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) +
                      ": fixpoint variable ?" + token + " is not bound by an enclosing Mu");
    return Concept::variable(std::move(token));
  }

  Concept fixpoint() {
    pos_ += 2;
    auto token = variable_token();
    bound_.push_back(token);
    auto body = expr();
    bound_.pop_back();
    close();
    return Concept::mu(std::move(token), std::move(body));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  bool extended_;
  std::vector<std::string> bound_;
};

}  // namespace

Concept parse_concept(std::string_view text) {
  Parser p(text, false);
  auto c = p.expr();
  p.expect_end();
  return c;
}

Concept parse_extended_concept(std::string_view text) {
  Parser p(text, true);
  auto c = p.expr();
  p.expect_end();
  return c;
}

Axiom parse_axiom(std::string_view text) {
  Parser p(text, false);
  auto a = p.axiom();
  p.expect_end();
  return a;
}

Axiom parse_extended_axiom(std::string_view text) {
  Parser p(text, true);
  auto a = p.axiom();
  p.expect_end();
  return a;
}

Ontology parse_ontology(std::string_view text) {
  Parser p(text, false);
  Ontology ontology;
  while (!p.at_end()) ontology.add(p.axiom());
  return ontology;
}

std::vector<std::vector<Axiom>> parse_axiom_blocks(std::string_view text) {
  Parser p(text, true);
  std::vector<std::vector<Axiom>> blocks(1);
  while (!p.at_end()) {
    if (p.at_separator()) {
      p.skip_separator();
      if (!blocks.back().empty()) blocks.emplace_back();
      continue;
    }
    blocks.back().push_back(p.axiom());
  }
  if (blocks.back().empty()) blocks.pop_back();
  return blocks;
}

}  // namespace missing_why
