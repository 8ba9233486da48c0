#include "hesnil/poly_io.hpp"

#include <cctype>
#include <vector>

#include "hesnil/error.hpp"

namespace hesnil {

namespace {

enum class TokenKind { kNumber, kImag, kVar, kPlus, kMinus, kStar, kSlash, kCaret, kLParen, kRParen, kEnd };

struct Token {
  TokenKind kind;
  std::size_t pos;
  std::string text;   // digits for numbers
  char var_letter = 0;
  std::size_t var_index = 0;  // 1-based as written
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t pos = i;
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({TokenKind::kNumber, pos, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    if (c == 'z' || c == 'u' || c == 'v') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i + 1) throw ParseError("variable needs an index", pos);
      const std::size_t index = std::stoul(std::string(s.substr(i + 1, j - i - 1)));
      if (index == 0) throw ParseError("variable indices start at 1", pos);
      Token t{TokenKind::kVar, pos, {}};
      t.var_letter = static_cast<char>(c);
      t.var_index = index;
      out.push_back(t);
      i = j;
      continue;
    }
    // U+2212 MINUS SIGN
    if (s.substr(i, 3) == "\xE2\x88\x92") {
      out.push_back({TokenKind::kMinus, pos, {}});
      i += 3;
      continue;
    }
    TokenKind kind;
    switch (c) {
      case 'i': kind = TokenKind::kImag; break;
      case '+': kind = TokenKind::kPlus; break;
      case '-': kind = TokenKind::kMinus; break;
      case '*': kind = TokenKind::kStar; break;
      case '/': kind = TokenKind::kSlash; break;
      case '^': kind = TokenKind::kCaret; break;
      case '(': kind = TokenKind::kLParen; break;
      case ')': kind = TokenKind::kRParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'",
                         pos);
    }
    out.push_back({kind, pos, {}});
    ++i;
  }
  out.push_back({TokenKind::kEnd, s.size(), {}});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::size_t arity, VarStyle style)
      : tokens_(std::move(tokens)), arity_(arity), style_(style) {}

  Poly parse() {
    Poly p = expr();
    if (peek().kind != TokenKind::kEnd) throw ParseError("unexpected token", peek().pos);
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  Poly expr() {
    bool negate = false;
    if (peek().kind == TokenKind::kPlus || peek().kind == TokenKind::kMinus) {
      negate = next().kind == TokenKind::kMinus;
    }
    Poly acc = term();
    if (negate) acc = -acc;
    while (peek().kind == TokenKind::kPlus || peek().kind == TokenKind::kMinus) {
      const bool minus = next().kind == TokenKind::kMinus;
      Poly rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  Poly term() {
    Poly acc = power();
    while (peek().kind == TokenKind::kStar) {
      next();
      acc = mul(acc, power());
    }
    return acc;
  }

  Poly power() {
    Poly base = atom();
    if (peek().kind != TokenKind::kCaret) return base;
    next();
    const Token& e = next();
    if (e.kind != TokenKind::kNumber) throw ParseError("expected integer exponent", e.pos);
    if (e.text.size() > 4) throw ParseError("exponent too large", e.pos);
    return pow(base, static_cast<unsigned>(std::stoul(e.text)));
  }

  Poly atom() {
    const Token& t = next();
    switch (t.kind) {
      case TokenKind::kNumber: {
        std::string literal = t.text;
        if (peek().kind == TokenKind::kSlash) {
          next();
          const Token& den = next();
          if (den.kind != TokenKind::kNumber) throw ParseError("expected denominator", den.pos);
          if (mpz_class(den.text) == 0) throw ParseError("zero denominator", den.pos);
          literal += "/" + den.text;
        }
        return Poly::constant(arity_, GaussianRational::rational(literal));
      }
      case TokenKind::kImag:
        return Poly::constant(arity_, GaussianRational::i());
      case TokenKind::kVar:
        return Poly::variable(arity_, variable_slot(t));
      case TokenKind::kLParen: {
        Poly inner = expr();
        const Token& close = next();
        if (close.kind != TokenKind::kRParen) throw ParseError("expected ')'", close.pos);
        return inner;
      }
      case TokenKind::kEnd:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("unexpected token", t.pos);
    }
  }

  std::size_t variable_slot(const Token& t) const {
    if (style_ == VarStyle::kZ) return t.var_index - 1;
    const std::size_t half = arity_ / 2;
    return t.var_letter == 'u' ? t.var_index - 1 : half + t.var_index - 1;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t arity_;
  VarStyle style_;
};

}  // namespace

ParsedPoly parse_poly_with_style(std::string_view text, std::optional<std::size_t> arity) {
  std::vector<Token> tokens = tokenize(text);
  bool saw_z = false;
  bool saw_uv = false;
  std::size_t max_index = 0;
  std::size_t first_var_pos = 0;
  for (const Token& t : tokens) {
    if (t.kind != TokenKind::kVar) continue;
    if (!saw_z && !saw_uv) first_var_pos = t.pos;
    (t.var_letter == 'z' ? saw_z : saw_uv) = true;
    if (saw_z && saw_uv) throw ParseError("cannot mix z and u/v variables", t.pos);
    max_index = std::max(max_index, t.var_index);
  }
  const VarStyle style = saw_uv ? VarStyle::kUV : VarStyle::kZ;
  const std::size_t needed = saw_uv ? 2 * max_index : max_index;
  std::size_t resolved;
  if (arity) {
    if (*arity < needed) {
      throw ParseError("variable index exceeds arity " + std::to_string(*arity),
                       first_var_pos);
    }
    if (saw_uv && *arity % 2 != 0) {
      throw ParseError("u/v polynomials need an even arity", first_var_pos);
    }
    resolved = *arity;
  } else {
    if (needed == 0) throw ParseError("cannot infer arity of a constant", 0);
    resolved = needed;
  }
  Parser parser(std::move(tokens), resolved, style);
  return {parser.parse(), style};
}

Poly parse_poly(std::string_view text, std::optional<std::size_t> arity) {
  return parse_poly_with_style(text, arity).poly;
}

std::string variable_name(std::size_t index, std::size_t arity, VarStyle style) {
  if (style == VarStyle::kZ) return "z" + std::to_string(index + 1);
  if (arity % 2 != 0) throw DomainError("u/v naming needs an even arity");
  const std::size_t half = arity / 2;
  return index < half ? "u" + std::to_string(index + 1)
                      : "v" + std::to_string(index - half + 1);
}

std::string format_poly(const Poly& p, VarStyle style) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    std::string mono;
    for (std::size_t j = 0; j < p.arity(); ++j) {
      const unsigned e = it->mono[j];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variable_name(j, p.arity(), style);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string text;
    if (mono.empty()) {
      text = it->coeff.to_string();
    } else if (it->coeff.is_one()) {
      text = mono;
    } else if (it->coeff == GaussianRational(-1)) {
      text = "-" + mono;
    } else {
      text = it->coeff.to_string() + "*" + mono;
    }
    if (out.empty()) {
      out = text;
    } else if (text.front() == '-') {
      out += " - " + text.substr(1);
    } else {
      out += " + " + text;
    }
  }
  return out;
}

}  // namespace hesnil
