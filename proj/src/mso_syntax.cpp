#include <algorithm>
#include <cctype>

#include "syntaft/error.hpp"
#include "syntaft/mso.hpp"

namespace syntaft {

namespace {

std::shared_ptr<FormulaNode> node(NodeKind kind) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = kind;
  return n;
}

bool is_quantifier(NodeKind k) {
  return k == NodeKind::ExistsPos || k == NodeKind::ExistsSet || k == NodeKind::ForallPos ||
         k == NodeKind::ForallSet;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

void require_first_order(const std::string& name) {
  if (!is_first_order_name(name)) {
    fail(ErrorCode::SyntaxError, "'" + name + "' is not a position variable");
  }
}

void require_second_order(const std::string& name) {
  if (!is_second_order_name(name)) fail(ErrorCode::SyntaxError, "'" + name + "' is not a set variable");
}

Formula quantifier(NodeKind kind, const std::string& var, const Formula& body) {
  auto n = node(kind);
  n->first = var;
  n->left = body;
  return n;
}

Formula binary(NodeKind kind, const Formula& f, const Formula& g) {
  auto n = node(kind);
  n->left = f;
  n->right = g;
  return n;
}

}  // namespace

bool is_first_order_name(std::string_view name) {
  return is_identifier(name) && std::islower(static_cast<unsigned char>(name.front())) &&
         name != "exists" && name != "forall" && name != "in";
}

bool is_second_order_name(std::string_view name) {
  return is_identifier(name) && std::isupper(static_cast<unsigned char>(name.front())) &&
         name.substr(0, 2) != "P_";
}

Formula constant(const Rational& c) {
  auto n = node(NodeKind::Const);
  n->value = c;
  return n;
}

Formula letter_at(const std::string& var, const Symbol& symbol) {
  require_first_order(var);
  if (!is_identifier("P" + symbol)) fail(ErrorCode::SyntaxError, "symbol '" + symbol + "' is not alphanumeric");
  auto n = node(NodeKind::LetterAt);
  n->first = var;
  n->symbol = symbol;
  return n;
}

Formula leq(const std::string& x, const std::string& y) {
  require_first_order(x);
  require_first_order(y);
  auto n = node(NodeKind::Leq);
  n->first = x;
  n->second = y;
  return n;
}

Formula in_set(const std::string& x, const std::string& set) {
  require_first_order(x);
  require_second_order(set);
  auto n = node(NodeKind::InSet);
  n->first = x;
  n->second = set;
  return n;
}

Formula negate(const Formula& f) {
  if (!is_boolean(f)) fail(ErrorCode::SyntaxError, "~ applies only to boolean formulas");
  auto n = node(NodeKind::Not);
  n->left = f;
  return n;
}

Formula sum(const Formula& f, const Formula& g) { return binary(NodeKind::Or, f, g); }
Formula product(const Formula& f, const Formula& g) { return binary(NodeKind::And, f, g); }

Formula exists_pos(const std::string& x, const Formula& body) {
  require_first_order(x);
  return quantifier(NodeKind::ExistsPos, x, body);
}
Formula exists_set(const std::string& set, const Formula& body) {
  require_second_order(set);
  return quantifier(NodeKind::ExistsSet, set, body);
}
Formula forall_pos(const std::string& x, const Formula& body) {
  require_first_order(x);
  return quantifier(NodeKind::ForallPos, x, body);
}
Formula forall_set(const std::string& set, const Formula& body) {
  require_second_order(set);
  return quantifier(NodeKind::ForallSet, set, body);
}

bool is_boolean(const Formula& f) {
  switch (f->kind) {
    case NodeKind::Const:
      return f->value == 0 || f->value == 1;
    case NodeKind::LetterAt:
    case NodeKind::Leq:
    case NodeKind::InSet:
    case NodeKind::Not:
      return true;
    case NodeKind::And:
      return is_boolean(f->left) && is_boolean(f->right);
    case NodeKind::ForallPos:
    case NodeKind::ForallSet:
      return is_boolean(f->left);
    default:
      return false;
  }
}

bool is_almost_boolean(const Formula& f) {
  if (f->kind == NodeKind::Const || is_boolean(f)) return true;
  if (f->kind == NodeKind::Or || f->kind == NodeKind::And) {
    return is_almost_boolean(f->left) && is_almost_boolean(f->right);
  }
  return false;
}

bool is_restricted(const Formula& f) {
  switch (f->kind) {
    case NodeKind::ForallPos:
      return is_almost_boolean(f->left) && is_restricted(f->left);
    case NodeKind::ForallSet:
      return is_boolean(f->left);
    default:
      if (f->left && !is_restricted(f->left)) return false;
      if (f->right && !is_restricted(f->right)) return false;
      return true;
  }
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (!a || !b) return !a && !b;
  return a->kind == b->kind && a->value == b->value && a->symbol == b->symbol &&
         a->first == b->first && a->second == b->second && structurally_equal(a->left, b->left) &&
         structurally_equal(a->right, b->right);
}

std::size_t formula_size(const Formula& f) {
  if (!f) return 0;
  return 1 + formula_size(f->left) + formula_size(f->right);
}

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
  auto use = [&](const std::string& v) {
    if (!v.empty() && std::find(bound.begin(), bound.end(), v) == bound.end()) out.insert(v);
  };
  switch (f->kind) {
    case NodeKind::LetterAt:
      use(f->first);
      return;
    case NodeKind::Leq:
    case NodeKind::InSet:
      use(f->first);
      use(f->second);
      return;
    case NodeKind::ExistsPos:
    case NodeKind::ExistsSet:
    case NodeKind::ForallPos:
    case NodeKind::ForallSet:
      bound.push_back(f->first);
      collect_free(f->left, bound, out);
      bound.pop_back();
      return;
    default:
      if (f->left) collect_free(f->left, bound, out);
      if (f->right) collect_free(f->right, bound, out);
  }
}

void collect_symbols(const Formula& f, std::set<Symbol>& out) {
  if (f->kind == NodeKind::LetterAt) out.insert(f->symbol);
  if (f->left) collect_symbols(f->left, out);
  if (f->right) collect_symbols(f->right, out);
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

std::vector<Symbol> mentioned_symbols(const Formula& f) {
  std::set<Symbol> out;
  collect_symbols(f, out);
  return {out.begin(), out.end()};
}

// ---- printing ----

namespace {

int precedence(NodeKind k) {
  switch (k) {
    case NodeKind::Or:
      return 1;
    case NodeKind::And:
      return 2;
    case NodeKind::Not:
      return 3;
    default:
      return is_quantifier(k) ? 0 : 4;
  }
}

void print(const Formula& f, int min_prec, std::string& out) {
  const bool parens = precedence(f->kind) < min_prec;
  if (parens) out += '(';
  switch (f->kind) {
    case NodeKind::Const:
      out += to_string(f->value);
      break;
    case NodeKind::LetterAt:
      out += "P_" + f->symbol + "(" + f->first + ")";
      break;
    case NodeKind::Leq:
      out += f->first + " <= " + f->second;
      break;
    case NodeKind::InSet:
      out += f->first + " in " + f->second;
      break;
    case NodeKind::Not:
      out += '~';
      print(f->left, 3, out);
      break;
    case NodeKind::Or:
      print(f->left, 1, out);
      out += " | ";
      print(f->right, 2, out);
      break;
    case NodeKind::And:
      print(f->left, 2, out);
      out += " & ";
      print(f->right, 3, out);
      break;
    default:
      out += f->kind == NodeKind::ExistsPos || f->kind == NodeKind::ExistsSet ? "exists " : "forall ";
      out += f->first + ". ";
      print(f->left, 0, out);
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

// ---- parsing ----

namespace {

enum class Tok { Number, Ident, Letter, Tilde, Amp, Bar, Le, LParen, RParen, Dot, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const SourcePos at{line_, column_};
      if (i_ >= text_.size()) {
        out.push_back({Tok::End, "", at});
        return out;
      }
      const char c = text_[i_];
      if (std::isdigit(static_cast<unsigned char>(c)) ||
          (c == '-' && i_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_ + 1])))) {
        std::string s(1, c);
        advance();
        while (i_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[i_])) || text_[i_] == '/')) {
          s += text_[i_];
          advance();
        }
        out.push_back({Tok::Number, s, at});
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string s;
        while (i_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_')) {
          s += text_[i_];
          advance();
        }
        if (s.size() > 2 && s.compare(0, 2, "P_") == 0) {
          out.push_back({Tok::Letter, s.substr(2), at});
        } else {
          out.push_back({Tok::Ident, s, at});
        }
      } else if (c == '<' && i_ + 1 < text_.size() && text_[i_ + 1] == '=') {
        advance();
        advance();
        out.push_back({Tok::Le, "<=", at});
      } else {
        Tok kind;
        switch (c) {
          case '~': kind = Tok::Tilde; break;
          case '&': case '*': kind = Tok::Amp; break;
          case '|': case '+': kind = Tok::Bar; break;
          case '(': kind = Tok::LParen; break;
          case ')': kind = Tok::RParen; break;
          case '.': kind = Tok::Dot; break;
          default:
            throw ParseError(ErrorCode::SyntaxError, at.line, at.column,
                             std::string("unexpected character '") + c + "'");
        }
        advance();
        out.push_back({kind, std::string(1, c), at});
      }
    }
  }

 private:
  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++i_;
  }
  void skip_space() {
    while (i_ < text_.size()) {
      if (text_[i_] == '#') {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(text_[i_]))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula sentence() {
    Formula f = formula();
    if (peek().kind != Tok::End) error(peek(), "unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[i_]; }
  const Token& take() { return tokens_[i_++]; }

  [[noreturn]] void error(const Token& t, const std::string& what) const {
    throw ParseError(ErrorCode::SyntaxError, t.pos.line, t.pos.column, what);
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) {
      error(peek(), "expected " + what + (peek().kind == Tok::End ? " at end of input" : ", found '" + peek().text + "'"));
    }
    return take();
  }

  bool at_quantifier() const {
    return peek().kind == Tok::Ident && (peek().text == "exists" || peek().text == "forall");
  }

  Formula located(std::shared_ptr<FormulaNode> n, const Token& at) {
    n->pos = at.pos;
    return n;
  }

  Formula formula() {
    if (at_quantifier()) return quantified();
    Formula f = conjunction();
    while (peek().kind == Tok::Bar) {
      const Token& op = take();
      auto n = node(NodeKind::Or);
      n->left = f;
      n->right = conjunction();
      f = located(n, op);
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (peek().kind == Tok::Amp) {
      const Token& op = take();
      auto n = node(NodeKind::And);
      n->left = f;
      n->right = unary();
      f = located(n, op);
    }
    return f;
  }

  Formula unary() {
    if (peek().kind == Tok::Tilde) {
      const Token& op = take();
      Formula child = unary();
      if (!is_boolean(child)) error(op, "~ applies only to boolean formulas");
      auto n = node(NodeKind::Not);
      n->left = child;
      return located(n, op);
    }
    return primary();
  }

  std::string bound_variable(const Token& t, bool set) {
    if (set ? !is_second_order_name(t.text) : !is_first_order_name(t.text)) {
      error(t, "'" + t.text + "' is not a " + (set ? "set" : "position") + " variable");
    }
    if (std::find(scope_.begin(), scope_.end(), t.text) == scope_.end()) {
      error(t, "unbound variable '" + t.text + "'");
    }
    return t.text;
  }

  Formula quantified() {
    const Token& q = take();
    const Token& var = expect(Tok::Ident, "a variable after '" + q.text + "'");
    const bool set = is_second_order_name(var.text);
    if (!set && !is_first_order_name(var.text)) error(var, "'" + var.text + "' is not a variable name");
    if (std::find(scope_.begin(), scope_.end(), var.text) != scope_.end()) {
      error(var, "variable '" + var.text + "' is already bound");
    }
    expect(Tok::Dot, "'.'");
    scope_.push_back(var.text);
    Formula body = formula();
    scope_.pop_back();
    const bool exists = q.text == "exists";
    auto n = node(exists ? (set ? NodeKind::ExistsSet : NodeKind::ExistsPos)
                         : (set ? NodeKind::ForallSet : NodeKind::ForallPos));
    n->first = var.text;
    n->left = body;
    return located(n, q);
  }

  Formula primary() {
    if (at_quantifier()) return quantified();
    const Token& t = take();
    switch (t.kind) {
      case Tok::LParen: {
        Formula f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Number: {
        auto n = node(NodeKind::Const);
        try {
          n->value = parse_rational(t.text);
        } catch (const Error& e) {
          error(t, "bad constant '" + t.text + "'");
        }
        return located(n, t);
      }
      case Tok::Letter: {
        expect(Tok::LParen, "'(' after P_" + t.text);
        const Token& v = expect(Tok::Ident, "a position variable");
        auto n = node(NodeKind::LetterAt);
        n->symbol = t.text;
        n->first = bound_variable(v, false);
        expect(Tok::RParen, "')'");
        return located(n, t);
      }
      case Tok::Ident: {
        const std::string x = bound_variable(t, false);
        if (peek().kind == Tok::Le) {
          take();
          const Token& y = expect(Tok::Ident, "a position variable after '<='");
          auto n = node(NodeKind::Leq);
          n->first = x;
          n->second = bound_variable(y, false);
          return located(n, t);
        }
        if (peek().kind == Tok::Ident && peek().text == "in") {
          take();
          const Token& s = expect(Tok::Ident, "a set variable after 'in'");
          auto n = node(NodeKind::InSet);
          n->first = x;
          n->second = bound_variable(s, true);
          return located(n, t);
        }
        error(peek(), "expected '<=' or 'in' after '" + x + "'");
      }
      case Tok::End:
        error(t, "unexpected end of input");
      default:
        error(t, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t i_ = 0;
  std::vector<std::string> scope_;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(Lexer(text).run()).sentence(); }

}  // namespace syntaft
