#include "tel/formula.hpp"

#include <algorithm>
#include <cctype>
#include <utility>
#include <vector>

namespace tel {

Formula Formula::make(Conn k, std::string name, Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->name = std::move(name);
  n->a = std::move(a);
  n->b = std::move(b);
  return Formula(std::move(n));
}

Formula Formula::prop(std::string name) { return make(Conn::Prop, std::move(name), {}, {}); }
Formula Formula::meta(std::string name) { return make(Conn::Meta, std::move(name), {}, {}); }
Formula Formula::neg(Formula f) { return make(Conn::Not, "", std::move(f), {}); }
Formula Formula::conj(Formula a, Formula b) { return make(Conn::And, "", std::move(a), std::move(b)); }
Formula Formula::know(Formula f) { return make(Conn::Know, "", std::move(f), {}); }
Formula Formula::box(Formula f) { return make(Conn::Box, "", std::move(f), {}); }
Formula Formula::bel(Formula f) { return make(Conn::Bel, "", std::move(f), {}); }

Formula Formula::implies(Formula a, Formula b) {
  return neg(conj(std::move(a), neg(std::move(b))));
}
Formula Formula::disj(Formula a, Formula b) {
  return neg(conj(neg(std::move(a)), neg(std::move(b))));
}
Formula Formula::iff(Formula a, Formula b) {
  return conj(implies(a, b), implies(b, a));
}
Formula Formula::bottom() { return conj(prop("p0"), neg(prop("p0"))); }
Formula Formula::top() { return neg(bottom()); }
Formula Formula::dia(Formula f) { return neg(box(neg(std::move(f)))); }
Formula Formula::hat_k(Formula f) { return neg(know(neg(std::move(f)))); }
Formula Formula::hat_b(Formula f) { return neg(bel(neg(std::move(f)))); }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Conn::Prop:
    case Conn::Meta:
      return node_->name == other.node_->name;
    case Conn::Not:
    case Conn::Know:
    case Conn::Box:
    case Conn::Bel:
      return node_->a == other.node_->a;
    case Conn::And:
      return node_->a == other.node_->a && node_->b == other.node_->b;
  }
  return false;
}

ParseError::ParseError(std::string msg, std::size_t off)
    : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}

namespace {

enum class Tok { Ident, True, False, Not, AndOp, OrOp, Arrow, IffOp, K, B, BoxOp, DiaOp, LParen, RParen, End };

struct Token {
  Tok type;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::size_t p = i_;
    if (i_ >= s_.size()) {
      cur_ = {Tok::End, "", p};
      return;
    }
    char c = s_[i_];
    auto one = [&](Tok t, const char* txt) {
      ++i_;
      cur_ = {t, txt, p};
    };
    switch (c) {
      case '~':
      case '!':
        return one(Tok::Not, "~");
      case '&':
        return one(Tok::AndOp, "&");
      case '|':
        return one(Tok::OrOp, "|");
      case '(':
        return one(Tok::LParen, "(");
      case ')':
        return one(Tok::RParen, ")");
      case '-':
        if (i_ + 1 < s_.size() && s_[i_ + 1] == '>') {
          i_ += 2;
          cur_ = {Tok::Arrow, "->", p};
          return;
        }
        throw ParseError("lexical error: '-'", p);
      case '<':
        if (i_ + 2 < s_.size() && s_[i_ + 1] == '-' && s_[i_ + 2] == '>') {
          i_ += 3;
          cur_ = {Tok::IffOp, "<->", p};
          return;
        }
        if (i_ + 1 < s_.size() && s_[i_ + 1] == '>') {
          i_ += 2;
          cur_ = {Tok::DiaOp, "<>", p};
          return;
        }
        throw ParseError("lexical error: '<'", p);
      case '[':
        if (i_ + 1 < s_.size() && s_[i_ + 1] == ']') {
          i_ += 2;
          cur_ = {Tok::BoxOp, "[]", p};
          return;
        }
        throw ParseError("lexical error: '['", p);
      case 'K':
        return one(Tok::K, "K");
      case 'B':
        return one(Tok::B, "B");
      default:
        break;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i_;
      while (j < s_.size() && (std::islower(static_cast<unsigned char>(s_[j])) ||
                               std::isdigit(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      std::string word = s_.substr(i_, j - i_);
      i_ = j;
      if (word == "box")
        cur_ = {Tok::BoxOp, word, p};
      else if (word == "dia")
        cur_ = {Tok::DiaOp, word, p};
      else if (word == "true")
        cur_ = {Tok::True, word, p};
      else if (word == "false")
        cur_ = {Tok::False, word, p};
      else
        cur_ = {Tok::Ident, word, p};
      return;
    }
    throw ParseError(std::string("lexical error: '") + c + "'", p);
  }

  const std::string& s_;
  std::size_t i_ = 0;
  Token cur_{Tok::End, "", 0};
};

class Parser {
 public:
  Lexer& lex;
  explicit Parser(Lexer& l) : lex(l) {}

  Formula formula() { return iff_level(); }

 private:
  Formula iff_level() {
    Formula a = arrow_level();
    if (lex.peek().type == Tok::IffOp) {
      lex.take();
      return Formula::iff(std::move(a), iff_level());
    }
    return a;
  }
  Formula arrow_level() {
    Formula a = or_level();
    if (lex.peek().type == Tok::Arrow) {
      lex.take();
      return Formula::implies(std::move(a), arrow_level());
    }
    return a;
  }
  Formula or_level() {
    Formula a = and_level();
    while (lex.peek().type == Tok::OrOp) {
      lex.take();
      a = Formula::disj(std::move(a), and_level());
    }
    return a;
  }
  Formula and_level() {
    Formula a = unary();
    while (lex.peek().type == Tok::AndOp) {
      lex.take();
      a = Formula::conj(std::move(a), unary());
    }
    return a;
  }
  Formula unary() {
    const Token& t = lex.peek();
    switch (t.type) {
      case Tok::Not:
        lex.take();
        return Formula::neg(unary());
      case Tok::K:
        lex.take();
        return Formula::know(unary());
      case Tok::B:
        lex.take();
        return Formula::bel(unary());
      case Tok::BoxOp:
        lex.take();
        return Formula::box(unary());
      case Tok::DiaOp:
        lex.take();
        return Formula::dia(unary());
      default:
        return atom();
    }
  }
  Formula atom() {
    Token t = lex.take();
    switch (t.type) {
      case Tok::Ident:
        return Formula::prop(t.text);
      case Tok::True:
        return Formula::top();
      case Tok::False:
        return Formula::bottom();
      case Tok::LParen: {
        Formula f = formula();
        Token r = lex.take();
        if (r.type != Tok::RParen) throw ParseError("unbalanced parenthesis", r.pos);
        return f;
      }
      case Tok::RParen:
        throw ParseError("unbalanced parenthesis", t.pos);
      case Tok::End:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("unknown token '" + t.text + "'", t.pos);
    }
  }
};

}  // namespace

Formula parse_formula(const std::string& text) {
  Lexer lex(text);
  Parser p(lex);
  Formula f = p.formula();
  if (lex.peek().type != Tok::End)
    throw ParseError("unknown token '" + lex.peek().text + "'", lex.peek().pos);
  return f;
}

std::string render(const Formula& f) {
  switch (f.kind()) {
    case Conn::Prop:
      return f.name();
    case Conn::Meta:
      return "?" + f.name();
    case Conn::Not:
      return "~" + render(f.child());
    case Conn::Box:
      return "[]" + render(f.child());
    case Conn::Know:
      return "K " + render(f.child());
    case Conn::Bel:
      return "B " + render(f.child());
    case Conn::And:
      return "(" + render(f.left()) + " & " + render(f.right()) + ")";
  }
  return "";
}

Measure measure(const Formula& f) {
  Measure m;
  switch (f.kind()) {
    case Conn::Prop:
    case Conn::Meta:
      m.props.insert(f.name());
      m.size = 1;
      return m;
    case Conn::Not: {
      m = measure(f.child());
      m.size += 1;
      return m;
    }
    case Conn::Know:
    case Conn::Box:
    case Conn::Bel: {
      m = measure(f.child());
      m.size += 1;
      m.modal_depth += 1;
      return m;
    }
    case Conn::And: {
      m = measure(f.left());
      Measure r = measure(f.right());
      m.props.insert(r.props.begin(), r.props.end());
      m.modal_depth = std::max(m.modal_depth, r.modal_depth);
      m.size += r.size + 1;
      return m;
    }
  }
  return m;
}

Formula translate(TranslationKind kind, const Formula& f) {
  switch (f.kind()) {
    case Conn::Prop:
    case Conn::Meta:
      return f;
    case Conn::Not:
      return Formula::neg(translate(kind, f.child()));
    case Conn::And:
      return Formula::conj(translate(kind, f.left()), translate(kind, f.right()));
    case Conn::Know:
      return Formula::know(translate(kind, f.child()));
    case Conn::Box: {
      Formula inner = translate(kind, f.child());
      if (kind == TranslationKind::T) return Formula::know(std::move(inner));
      return Formula::box(std::move(inner));
    }
    case Conn::Bel: {
      Formula inner = translate(kind, f.child());
      switch (kind) {
        case TranslationKind::T:
          return Formula::bel(std::move(inner));
        case TranslationKind::E:
          return Formula::know(Formula::dia(Formula::box(std::move(inner))));
        case TranslationKind::Alpha:
          return Formula::bel(Formula::dia(Formula::box(std::move(inner))));
      }
    }
  }
  return f;
}

bool contains_kind(const Formula& f, Conn k) {
  if (f.kind() == k) return true;
  switch (f.kind()) {
    case Conn::Prop:
    case Conn::Meta:
      return false;
    case Conn::And:
      return contains_kind(f.left(), k) || contains_kind(f.right(), k);
    default:
      return contains_kind(f.child(), k);
  }
}

namespace {

bool match_rec(const Formula& pat, const Formula& f, Substitution& subst) {
  if (pat.kind() == Conn::Meta) {
    auto it = subst.find(pat.name());
    if (it == subst.end()) {
      subst.emplace(pat.name(), f);
      return true;
    }
    return it->second == f;
  }
  if (pat.kind() != f.kind()) return false;
  switch (pat.kind()) {
    case Conn::Prop:
      return pat.name() == f.name();
    case Conn::And:
      return match_rec(pat.left(), f.left(), subst) && match_rec(pat.right(), f.right(), subst);
    case Conn::Not:
    case Conn::Know:
    case Conn::Box:
    case Conn::Bel:
      return match_rec(pat.child(), f.child(), subst);
    case Conn::Meta:
      break;
  }
  return false;
}

}  // namespace

std::optional<Substitution> match_scheme(const Formula& pattern, const Formula& f) {
  Substitution subst;
  if (match_rec(pattern, f, subst)) return subst;
  return std::nullopt;
}

Formula instantiate(const Formula& pattern, const Substitution& subst) {
  switch (pattern.kind()) {
    case Conn::Meta:
      return subst.at(pattern.name());
    case Conn::Prop:
      return pattern;
    case Conn::Not:
      return Formula::neg(instantiate(pattern.child(), subst));
    case Conn::Know:
      return Formula::know(instantiate(pattern.child(), subst));
    case Conn::Box:
      return Formula::box(instantiate(pattern.child(), subst));
    case Conn::Bel:
      return Formula::bel(instantiate(pattern.child(), subst));
    case Conn::And:
      return Formula::conj(instantiate(pattern.left(), subst), instantiate(pattern.right(), subst));
  }
  return pattern;
}

}  // namespace tel
