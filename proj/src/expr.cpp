#include "hodgeledger/expr.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <map>

#include "hodgeledger/errors.hpp"
#include "hodgeledger/spaces.hpp"

namespace hodgeledger {

namespace {

// --- symbol tables ---------------------------------------------------------

enum class ArgShape { int_only, int_then_class, class_only };

struct FnSig {
  ArgShape shape;
  int arity;
};

const std::map<std::string, FnSig>& functions() {
  static const std::map<std::string, FnSig> table{
      {"ab", {ArgShape::int_only, 1}},        {"curve", {ArgShape::int_only, 1}},
      {"P", {ArgShape::int_only, 1}},         {"sym", {ArgShape::int_then_class, 2}},
      {"wedge", {ArgShape::int_then_class, 2}}, {"shift", {ArgShape::int_then_class, 2}},
      {"tate", {ArgShape::int_then_class, 2}}, {"angle", {ArgShape::int_then_class, 2}},
      {"scale", {ArgShape::int_then_class, 2}}, {"dual", {ArgShape::class_only, 1}},
      {"even", {ArgShape::class_only, 1}},    {"odd", {ArgShape::class_only, 1}},
  };
  return table;
}

const std::map<std::string, std::function<HodgeClass()>>& atoms() {
  static const std::map<std::string, std::function<HodgeClass()>> table{
      {"point", [] { return unit_class(); }},
      {"L", [] { return make_class(2, 1, 1); }},
      {"U", [] { return fixture(FixtureName::U); }},
      {"W", [] { return fixture(FixtureName::W); }},
      {"J", [] { return fixture(FixtureName::J); }},
      {"A", [] { return fixture(FixtureName::A); }},
      {"Sigma", [] { return fixture(FixtureName::Sigma); }},
      {"Z", [] { return fixture(FixtureName::Z); }},
      {"kummerK3", [] { return fixture(FixtureName::KummerK3); }},
  };
  return table;
}

// --- lexer -----------------------------------------------------------------

struct Token {
  enum class Kind { ident, number, lparen, rparen, comma, plus, minus, star, end, bad };
  Kind kind = Kind::end;
  std::string text;
  std::size_t offset = 0;  // 1-based
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token tok;
    tok.offset = i + 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      tok.kind = Token::Kind::ident;
      tok.text = text.substr(i, j - i);
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tok.kind = Token::Kind::number;
      tok.text = text.substr(i, j - i);
      i = j;
    } else {
      switch (c) {
        case '(': tok.kind = Token::Kind::lparen; break;
        case ')': tok.kind = Token::Kind::rparen; break;
        case ',': tok.kind = Token::Kind::comma; break;
        case '+': tok.kind = Token::Kind::plus; break;
        case '-': tok.kind = Token::Kind::minus; break;
        case '*': tok.kind = Token::Kind::star; break;
        default: tok.kind = Token::Kind::bad; break;
      }
      tok.text = std::string(1, c);
      ++i;
    }
    tokens.push_back(std::move(tok));
  }
  Token eof;
  eof.kind = Token::Kind::end;
  eof.offset = text.size() + 1;
  tokens.push_back(eof);
  return tokens;
}

std::string token_label(const Token& tok) {
  if (tok.kind == Token::Kind::end) return "end of input";
  return "\"" + tok.text + "\"";
}

// --- parser ----------------------------------------------------------------

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(lex(text)) {}

  ExprPtr run() {
    ExprPtr root = parse_sum();
    expect_kind(Token::Kind::end, {"\"+\"", "\"-\"", "\"*\"", "end of input"});
    return root;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& tok = peek();
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i)
      msg += (i == 0 ? "" : i + 1 == expected.size() ? " or " : ", ") + expected[i];
    msg += ", got " + token_label(tok) + " at offset " + std::to_string(tok.offset);
    throw ParseError(msg, tok.offset, std::move(expected));
  }

  void expect_kind(Token::Kind kind, std::vector<std::string> expected) {
    if (peek().kind != kind) fail(std::move(expected));
    advance();
  }

  ExprPtr parse_sum() {
    ExprPtr lhs = parse_product();
    while (peek().kind == Token::Kind::plus || peek().kind == Token::Kind::minus) {
      const Token& op = advance();
      ExprPtr rhs = parse_product();
      auto node = std::make_unique<Expr>();
      node->kind = Expr::Kind::binary;
      node->offset = op.offset;
      node->op = op.kind == Token::Kind::plus ? '+' : '-';
      node->args.push_back(std::move(lhs));
      node->args.push_back(std::move(rhs));
      lhs = std::move(node);
    }
    return lhs;
  }

  ExprPtr parse_product() {
    ExprPtr lhs = parse_factor();
    while (peek().kind == Token::Kind::star) {
      const Token& op = advance();
      ExprPtr rhs = parse_factor();
      auto node = std::make_unique<Expr>();
      node->kind = Expr::Kind::binary;
      node->offset = op.offset;
      node->op = '*';
      node->args.push_back(std::move(lhs));
      node->args.push_back(std::move(rhs));
      lhs = std::move(node);
    }
    return lhs;
  }

  ExprPtr parse_factor() {
    const Token& tok = peek();
    if (tok.kind == Token::Kind::lparen) {
      advance();
      ExprPtr inner = parse_sum();
      expect_kind(Token::Kind::rparen, {"\")\"", "\"+\"", "\"-\"", "\"*\""});
      return inner;
    }
    if (tok.kind == Token::Kind::ident) return parse_ident();
    fail({"an atom", "a function call", "\"(\""});
  }

  // An identifier is an atom, or a function call when followed by '('.
  ExprPtr parse_ident() {
    const Token name = advance();
    if (peek().kind != Token::Kind::lparen) {
      if (!atoms().count(name.text)) {
        if (functions().count(name.text))
          throw ParseError("function \"" + name.text + "\" needs an argument list at offset " +
                               std::to_string(name.offset),
                           name.offset, {"\"(\""});
        throw UnknownIdentifier(
            "unknown identifier \"" + name.text + "\" at offset " + std::to_string(name.offset),
            name.offset);
      }
      auto node = std::make_unique<Expr>();
      node->kind = Expr::Kind::atom;
      node->offset = name.offset;
      node->name = name.text;
      return node;
    }
    advance();  // '('
    const auto sig = functions().find(name.text);
    if (sig == functions().end())
      throw UnknownIdentifier(
          "unknown function \"" + name.text + "\" at offset " + std::to_string(name.offset),
          name.offset);

    // Arguments parse generically (literal or class expression); the arity
    // is checked before shapes so "sym(U)" is an arity problem, not a
    // missing-literal one.
    auto node = std::make_unique<Expr>();
    node->kind = Expr::Kind::call;
    node->offset = name.offset;
    node->name = name.text;
    if (peek().kind != Token::Kind::rparen) {
      while (true) {
        node->args.push_back(parse_argument());
        if (peek().kind == Token::Kind::comma) {
          advance();
          continue;
        }
        break;
      }
    }
    expect_kind(Token::Kind::rparen, {"\",\"", "\")\""});
    if (static_cast<int>(node->args.size()) != sig->second.arity)
      throw ArityError("function \"" + name.text + "\" expects " +
                           std::to_string(sig->second.arity) + " argument(s), got " +
                           std::to_string(node->args.size()) + " at offset " +
                           std::to_string(name.offset),
                       name.offset);
    for (std::size_t i = 0; i < node->args.size(); ++i) {
      const bool literal_slot = sig->second.shape != ArgShape::class_only && i == 0;
      const bool is_literal = node->args[i]->kind == Expr::Kind::number;
      if (literal_slot && !is_literal)
        throw ParseError("argument 1 of \"" + name.text + "\" must be an integer literal" +
                             " at offset " + std::to_string(node->args[i]->offset),
                         node->args[i]->offset, {"an integer literal"});
      if (!literal_slot && is_literal)
        throw ParseError("integer literal not allowed as argument " + std::to_string(i + 1) +
                             " of \"" + name.text + "\" at offset " +
                             std::to_string(node->args[i]->offset),
                         node->args[i]->offset, {"a class expression"});
    }
    return node;
  }

  // One call argument: an integer literal (optionally negative — a leading
  // '-' can begin nothing else, the grammar has no unary minus), or a class
  // expression.
  ExprPtr parse_argument() {
    const Token tok = peek();
    if (tok.kind == Token::Kind::minus || tok.kind == Token::Kind::number) {
      bool negative = false;
      if (tok.kind == Token::Kind::minus) {
        advance();
        negative = true;
        if (peek().kind != Token::Kind::number) fail({"an integer literal"});
      }
      const Token num = advance();
      auto node = std::make_unique<Expr>();
      node->kind = Expr::Kind::number;
      node->offset = tok.offset;
      long long value = 0;
      const auto [ptr, ec] =
          std::from_chars(num.text.data(), num.text.data() + num.text.size(), value);
      if (ec != std::errc() || ptr != num.text.data() + num.text.size())
        throw ParseError("integer literal out of range at offset " + std::to_string(num.offset),
                         num.offset, {"an integer literal"});
      node->number = negative ? -value : value;
      return node;
    }
    return parse_sum();
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).run(); }

// --- evaluation ------------------------------------------------------------

namespace {

int to_machine_int(long long value, const char* what) {
  constexpr long long kLimit = 1000000;  // generous for any degree/count here
  if (value > kLimit || value < -kLimit)
    throw BadInput(std::string(what) + ": integer argument " + std::to_string(value) +
                   " out of the supported range");
  return static_cast<int>(value);
}

}  // namespace

HodgeClass evaluate(const Expr& ast) {
  switch (ast.kind) {
    case Expr::Kind::atom:
      return atoms().at(ast.name)();
    case Expr::Kind::number:
      throw BadInput("a bare integer is not a class");
    case Expr::Kind::binary: {
      const HodgeClass lhs = evaluate(*ast.args[0]);
      const HodgeClass rhs = evaluate(*ast.args[1]);
      switch (ast.op) {
        case '+': return lhs + rhs;
        case '-': return lhs - rhs;
        case '*': return tensor(lhs, rhs);
      }
      throw BadInput("bad operator");
    }
    case Expr::Kind::call: {
      if (ast.name == "dual") return dual(evaluate(*ast.args[0]));
      if (ast.name == "even") return parity_part(evaluate(*ast.args[0]), Parity::even);
      if (ast.name == "odd") return parity_part(evaluate(*ast.args[0]), Parity::odd);

      const long long raw = ast.args[0]->number;
      if (ast.name == "ab") return abelian(to_machine_int(raw, "ab"));
      if (ast.name == "curve") return curve(to_machine_int(raw, "curve"));
      if (ast.name == "P") return projective(to_machine_int(raw, "P"));
      if (ast.name == "scale") return scale(Int(raw), evaluate(*ast.args[1]));

      const int k = to_machine_int(raw, ast.name.c_str());
      const HodgeClass operand = evaluate(*ast.args[1]);
      if (ast.name == "sym") return super_sym(k, operand);
      if (ast.name == "wedge") return super_wedge(k, operand);
      if (ast.name == "shift") return shift_up(k, operand);
      if (ast.name == "tate") return tate(k, operand);
      if (ast.name == "angle") return angle(k, operand);
      throw BadInput("bad function \"" + ast.name + "\"");
    }
  }
  throw BadInput("bad expression node");
}

}  // namespace hodgeledger
