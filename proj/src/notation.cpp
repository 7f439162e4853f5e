#include "misere/notation.hpp"

#include <cctype>

namespace misere {

namespace {

struct Token {
  enum class Kind { Int, Star, Tomb, Dot, Tilde, Rep, Plus, Comma, Bar, LParen, RParen, LBrace, RBrace, End };
  Kind kind;
  long value = 0;
  std::size_t pos = 0;
};

class Lexer {
public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    tok_.pos = i_;
    if (i_ >= s_.size()) {
      tok_.kind = Token::Kind::End;
      return;
    }
    char c = s_[i_];
    auto one = [&](Token::Kind k) {
      tok_.kind = k;
      ++i_;
    };
    switch (c) {
      case '*': return one(Token::Kind::Star);
      case '#': return one(Token::Kind::Tomb);
      case '.': return one(Token::Kind::Dot);
      case '~': return one(Token::Kind::Tilde);
      case '+': return one(Token::Kind::Plus);
      case ',': return one(Token::Kind::Comma);
      case '|': return one(Token::Kind::Bar);
      case '(': return one(Token::Kind::LParen);
      case ')': return one(Token::Kind::RParen);
      case '{': return one(Token::Kind::LBrace);
      case '}': return one(Token::Kind::RBrace);
      default: break;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      bool neg = c == '-';
      std::size_t j = i_ + (neg ? 1 : 0);
      if (neg && (j >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[j]))))
        throw ParseError(i_, "'-' must be followed by digits");
      long v = 0;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) {
        v = v * 10 + (s_[j] - '0');
        if (v > 1'000'000) throw ParseError(i_, "integer literal too large");
        ++j;
      }
      tok_.kind = Token::Kind::Int;
      tok_.value = neg ? -v : v;
      i_ = j;
      return;
    }
    if (c == 'x') {
      tok_.kind = Token::Kind::Rep;
      ++i_;
      return;
    }
    throw ParseError(i_, std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  std::size_t i_ = 0;
  Token tok_;
};

class Parser {
public:
  explicit Parser(const std::string& s) : lex_(s) {}

  Expr parse_all() {
    Expr e = parse_expr();
    if (lex_.peek().kind != Token::Kind::End)
      throw ParseError(lex_.peek().pos, "trailing input after expression");
    return e;
  }

private:
  Expr parse_expr() {
    Expr e = parse_term();
    while (lex_.peek().kind == Token::Kind::Plus) {
      std::size_t pos = lex_.take().pos;
      Expr rhs = parse_term();
      Expr sum;
      sum.kind = Expr::Kind::Sum;
      sum.pos = pos;
      sum.kids.push_back(std::move(e));
      sum.kids.push_back(std::move(rhs));
      e = std::move(sum);
    }
    return e;
  }

  Expr parse_term() {
    if (lex_.peek().kind == Token::Kind::Int) {
      Token count = lex_.take();
      if (lex_.peek().kind == Token::Kind::Rep) {
        lex_.take();
        if (count.value < 0) throw ParseError(count.pos, "negative repeat count");
        Expr rep;
        rep.kind = Expr::Kind::Repeat;
        rep.value = count.value;
        rep.pos = count.pos;
        rep.kids.push_back(parse_factor());
        return rep;
      }
      Expr e;
      e.kind = Expr::Kind::Int;
      e.value = count.value;
      e.pos = count.pos;
      return e;
    }
    return parse_factor();
  }

  Expr parse_factor() {
    if (lex_.peek().kind == Token::Kind::Tilde) {
      std::size_t pos = lex_.take().pos;
      Expr c;
      c.kind = Expr::Kind::Conj;
      c.pos = pos;
      c.kids.push_back(parse_factor());
      return c;
    }
    return parse_atom();
  }

  Expr parse_atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Kind::Int: {
        Expr e;
        e.kind = Expr::Kind::Int;
        e.value = t.value;
        e.pos = t.pos;
        return e;
      }
      case Token::Kind::Star: {
        Expr e;
        e.kind = Expr::Kind::Star;
        e.pos = t.pos;
        return e;
      }
      case Token::Kind::LParen: {
        Expr e = parse_expr();
        expect(Token::Kind::RParen, "')'");
        return e;
      }
      case Token::Kind::LBrace: {
        Expr e;
        e.kind = Expr::Kind::Braces;
        e.pos = t.pos;
        parse_list(e.lefts, e.left_tomb);
        expect(Token::Kind::Bar, "'|'");
        parse_list(e.rights, e.right_tomb);
        expect(Token::Kind::RBrace, "'}'");
        return e;
      }
      case Token::Kind::Tomb:
        throw ParseError(t.pos, "'#' is only valid inside braces");
      default:
        throw ParseError(t.pos, "expected a game expression");
    }
  }

  void parse_list(std::vector<Expr>& items, bool& tomb) {
    Token::Kind next = lex_.peek().kind;
    if (next == Token::Kind::Bar || next == Token::Kind::RBrace) return;  // empty side
    if (next == Token::Kind::Dot) {
      lex_.take();
      return;
    }
    while (true) {
      if (lex_.peek().kind == Token::Kind::Tomb) {
        Token t = lex_.take();
        if (tomb) throw ParseError(t.pos, "duplicate '#' on one side");
        tomb = true;
      } else {
        items.push_back(parse_expr());
      }
      if (lex_.peek().kind == Token::Kind::Comma) {
        lex_.take();
        continue;
      }
      break;
    }
  }

  void expect(Token::Kind k, const char* what) {
    Token t = lex_.take();
    if (t.kind != k) throw ParseError(t.pos, std::string("expected ") + what);
  }

  Lexer lex_;
};

}  // namespace

Expr parse(const std::string& text) { return Parser(text).parse_all(); }

AugId elaborate(Engine& eng, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Int:
      return integer(eng, e.value);
    case Expr::Kind::Star: {
      GameId z = eng.zero();
      return mk_game(eng, {z}, {z});
    }
    case Expr::Kind::Conj:
      return eng.conjugate(elaborate(eng, e.kids[0]));
    case Expr::Kind::Sum:
      return eng.sum(elaborate(eng, e.kids[0]), elaborate(eng, e.kids[1]));
    case Expr::Kind::Repeat: {
      AugId acc = eng.zero();
      if (e.value > 0) {
        AugId unit = elaborate(eng, e.kids[0]);
        for (long i = 0; i < e.value; ++i) acc = eng.sum(acc, unit);
      }
      return acc;
    }
    case Expr::Kind::Braces: {
      std::vector<AugId> ls, rs;
      ls.reserve(e.lefts.size());
      rs.reserve(e.rights.size());
      for (const Expr& k : e.lefts) ls.push_back(elaborate(eng, k));
      for (const Expr& k : e.rights) rs.push_back(elaborate(eng, k));
      return eng.intern(std::move(ls), std::move(rs), e.left_tomb, e.right_tomb);
    }
  }
  throw std::logic_error("unreachable expression kind");
}

AugId read_form(Engine& eng, const std::string& text) { return elaborate(eng, parse(text)); }

GameId read_plain(Engine& eng, const std::string& text) {
  AugId a = read_form(eng, text);
  auto g = eng.as_plain(a);
  if (!g) throw std::invalid_argument("expression must be a plain game (no tombstones): " + text);
  return *g;
}

namespace {

void print_option(const Engine& eng, AugId a, std::string& out);

void print_braces(const Engine& eng, AugId a, std::string& out) {
  const FormNode& n = eng.node(a);
  out += '{';
  if (n.left_tomb) {
    out += '#';
    if (!n.lefts.empty()) out += ',';
  }
  if (n.lefts.empty() && !n.left_tomb) out += '.';
  for (std::size_t i = 0; i < n.lefts.size(); ++i) {
    if (i) out += ',';
    print_option(eng, n.lefts[i], out);
  }
  out += '|';
  if (n.rights.empty() && !n.right_tomb) out += '.';
  for (std::size_t i = 0; i < n.rights.size(); ++i) {
    if (i) out += ',';
    print_option(eng, n.rights[i], out);
  }
  if (n.right_tomb) {
    if (!n.rights.empty()) out += ',';
    out += '#';
  }
  out += '}';
}

void print_option(const Engine& eng, AugId a, std::string& out) {
  if (auto v = as_integer(eng, a)) {
    if (*v < 0) {
      out += '~';
      out += std::to_string(-*v);
    } else {
      out += std::to_string(*v);
    }
    return;
  }
  print_braces(eng, a, out);
}

}  // namespace

std::string print(const Engine& eng, AugId a) {
  std::string out;
  print_braces(eng, a, out);
  return out;
}

}  // namespace misere
