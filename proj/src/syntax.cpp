#include "nal/syntax.hpp"

#include <cassert>

namespace nal {

namespace {

inline size_t hash_mix(size_t a, size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

}  // namespace

// ---------------------------------------------------------------- Formula

struct Formula::Node {
  Conn kind;
  std::string var;
  Formula left, right;
  size_t h = 0;
  int size = 1;
};

Formula Formula::var(std::string name) {
  assert(!name.empty());
  auto n = std::make_shared<Node>();
  n->kind = Conn::Var;
  n->var = std::move(name);
  n->h = hash_mix(0x51, std::hash<std::string>{}(n->var));
  return Formula(std::move(n));
}

Formula Formula::nullary(Conn k) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->h = hash_mix(0xc0, static_cast<size_t>(k));
  return Formula(std::move(n));
}

Formula Formula::one() {
  static const Formula f = nullary(Conn::One);
  return f;
}
Formula Formula::zero() {
  static const Formula f = nullary(Conn::Zero);
  return f;
}
Formula Formula::top() {
  static const Formula f = nullary(Conn::Top);
  return f;
}
Formula Formula::bot() {
  static const Formula f = nullary(Conn::Bot);
  return f;
}

Formula Formula::bang(Formula a) {
  assert(a);
  auto n = std::make_shared<Node>();
  n->kind = Conn::Bang;
  n->h = hash_mix(0xb1, a.hash());
  n->size = a.size() + 1;
  n->left = std::move(a);
  return Formula(std::move(n));
}

Formula Formula::bin(Conn op, Formula lhs, Formula rhs) {
  assert(conn_is_binary(op) && lhs && rhs);
  auto n = std::make_shared<Node>();
  n->kind = op;
  n->h = hash_mix(hash_mix(static_cast<size_t>(op) + 0x17, lhs.hash()), rhs.hash());
  n->size = lhs.size() + rhs.size() + 1;
  n->left = std::move(lhs);
  n->right = std::move(rhs);
  return Formula(std::move(n));
}

Conn Formula::kind() const { return n_->kind; }
const std::string& Formula::var_name() const { return n_->var; }
Formula Formula::lhs() const { return n_->left; }
Formula Formula::rhs() const { return n_->right; }
size_t Formula::hash() const { return n_ ? n_->h : 0; }
int Formula::size() const { return n_ ? n_->size : 0; }

bool Formula::operator==(const Formula& o) const {
  if (n_ == o.n_) return true;
  if (!n_ || !o.n_) return false;
  if (n_->h != o.n_->h || n_->kind != o.n_->kind) return false;
  switch (n_->kind) {
    case Conn::Var: return n_->var == o.n_->var;
    case Conn::One: case Conn::Zero: case Conn::Top: case Conn::Bot: return true;
    case Conn::Bang: return n_->left == o.n_->left;
    default: return n_->left == o.n_->left && n_->right == o.n_->right;
  }
}

// -------------------------------------------------------------- Structure

struct Structure::Node {
  StructKind kind;
  Formula f;
  Structure left, right;
  size_t h = 0;
  int count = 1;
};

Structure Structure::unit() {
  static const Structure u = [] {
    auto n = std::make_shared<Node>();
    n->kind = StructKind::Unit;
    n->h = 0x5a17;
    return Structure(std::move(n));
  }();
  return u;
}

Structure Structure::leaf(Formula f) {
  assert(f);
  auto n = std::make_shared<Node>();
  n->kind = StructKind::Leaf;
  n->h = hash_mix(0x1eaf, f.hash());
  n->f = std::move(f);
  return Structure(std::move(n));
}

Structure Structure::pair(Structure l, Structure r) {
  assert(l && r);
  if (l.is_unit()) return r;
  if (r.is_unit()) return l;
  auto n = std::make_shared<Node>();
  n->kind = StructKind::Pair;
  n->h = hash_mix(hash_mix(0x9a12, l.hash()), r.hash());
  n->count = l.node_count() + r.node_count() + 1;
  n->left = std::move(l);
  n->right = std::move(r);
  return Structure(std::move(n));
}

StructKind Structure::kind() const { return n_->kind; }
Formula Structure::leaf_formula() const { return n_->f; }
Structure Structure::left() const { return n_->left; }
Structure Structure::right() const { return n_->right; }
size_t Structure::hash() const { return n_ ? n_->h : 0; }
int Structure::node_count() const { return n_ ? n_->count : 0; }

bool Structure::operator==(const Structure& o) const {
  if (n_ == o.n_) return true;
  if (!n_ || !o.n_) return false;
  if (n_->h != o.n_->h || n_->kind != o.n_->kind) return false;
  switch (n_->kind) {
    case StructKind::Unit: return true;
    case StructKind::Leaf: return n_->f == o.n_->f;
    case StructKind::Pair: return n_->left == o.n_->left && n_->right == o.n_->right;
  }
  return false;
}

size_t Sequent::hash() const {
  return hash_mix(ante.hash(), succ ? succ.hash() : 0xe77);
}

// ------------------------------------------------------------- contexts

Structure Context::plug(const Structure& y) const {
  Structure cur = y;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    cur = it->hole_right ? Structure::pair(it->sibling, cur)
                         : Structure::pair(cur, it->sibling);
  }
  return cur;
}

static void collect_contexts(const Structure& x, std::vector<Context::Step>& prefix,
                             std::vector<std::pair<Context, Structure>>& out) {
  out.emplace_back(Context(prefix), x);
  if (x.is_pair()) {
    prefix.push_back({false, x.right()});
    collect_contexts(x.left(), prefix, out);
    prefix.back() = {true, x.left()};
    collect_contexts(x.right(), prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::pair<Context, Structure>> contexts_of(const Structure& x) {
  std::vector<std::pair<Context, Structure>> out;
  std::vector<Context::Step> prefix;
  collect_contexts(x, prefix, out);
  return out;
}

std::vector<Context> unit_insertion_points(const Structure& x) {
  if (x.is_unit()) return {Context()};
  std::vector<Context> out;
  for (auto& [u, y] : contexts_of(x)) {
    Context left = u;
    left.push(false, y);  // hole . y
    out.push_back(std::move(left));
    Context right = u;
    right.push(true, y);  // y . hole
    out.push_back(std::move(right));
  }
  return out;
}

bool is_bang_structure(const Structure& x) {
  switch (x.kind()) {
    case StructKind::Unit: return true;
    case StructKind::Leaf: return x.leaf_formula().kind() == Conn::Bang;
    case StructKind::Pair: return is_bang_structure(x.left()) && is_bang_structure(x.right());
  }
  return false;
}

// --------------------------------------------------------------- lexer

namespace {

enum class Tok : uint8_t {
  Var, One, Zero, Top, Bot, Eps, Bang, Tilde, Minus, Star, Bsl, Sl, And, Or,
  LParen, RParen, Comma, Arrow, End
};

struct Token {
  Tok t;
  std::string text;
  size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { i++; continue; }
    size_t start = i;
    auto two = s.substr(i, 2);
    if (two == "/\\") { out.push_back({Tok::And, two, start}); i += 2; continue; }
    if (two == "\\/") { out.push_back({Tok::Or, two, start}); i += 2; continue; }
    if (two == "=>") { out.push_back({Tok::Arrow, two, start}); i += 2; continue; }
    switch (c) {
      case '!': out.push_back({Tok::Bang, "!", start}); i++; continue;
      case '~': out.push_back({Tok::Tilde, "~", start}); i++; continue;
      case '-': out.push_back({Tok::Minus, "-", start}); i++; continue;
      case '*': out.push_back({Tok::Star, "*", start}); i++; continue;
      case '\\': out.push_back({Tok::Bsl, "\\", start}); i++; continue;
      case '/': out.push_back({Tok::Sl, "/", start}); i++; continue;
      case '(': out.push_back({Tok::LParen, "(", start}); i++; continue;
      case ')': out.push_back({Tok::RParen, ")", start}); i++; continue;
      case ',': out.push_back({Tok::Comma, ",", start}); i++; continue;
      case '1': out.push_back({Tok::One, "1", start}); i++; continue;
      case '0': out.push_back({Tok::Zero, "0", start}); i++; continue;
      default: break;
    }
    if (c >= 'a' && c <= 'z') {
      size_t j = i + 1;
      while (j < s.size() && (isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) j++;
      std::string w = s.substr(i, j - i);
      i = j;
      if (w == "eps") out.push_back({Tok::Eps, w, start});
      else if (w == "top") out.push_back({Tok::Top, w, start});
      else if (w == "bot") out.push_back({Tok::Bot, w, start});
      else out.push_back({Tok::Var, w, start});
      continue;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", i);
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// Recursive-descent parser. All binary connectives are non-associative in the
// grammar: "a*b*c" and "a\b\c" are rejected, grouping must be explicit.
struct Parser {
  const std::vector<Token>& toks;
  const LanguageOpts& lang;
  size_t at = 0;

  const Token& peek() const { return toks[at]; }
  Token take() { return toks[at++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().pos);
  }

  Formula atom() {
    const Token& tk = peek();
    switch (tk.t) {
      case Tok::Var: take(); return Formula::var(tk.text);
      case Tok::One: take(); return Formula::one();
      case Tok::Zero:
        if (!lang.allow_zero) fail("constant 0 is not available in this logic");
        take(); return Formula::zero();
      case Tok::Top:
        if (!lang.allow_top) fail("constant top is not available in this logic");
        take(); return Formula::top();
      case Tok::Bot:
        if (!lang.allow_bot) fail("constant bot is not available in this logic");
        take(); return Formula::bot();
      case Tok::LParen: {
        take();
        Formula f = formula();
        if (peek().t != Tok::RParen) fail("expected ')'");
        take();
        return f;
      }
      default: fail("expected a formula");
    }
  }

  Formula unary() {
    const Token& tk = peek();
    if (tk.t == Tok::Bang) {
      if (!lang.allow_bang) fail("modality ! is not available in this logic");
      take();
      return Formula::bang(unary());
    }
    if (tk.t == Tok::Tilde) {  // ~a = a\0
      if (!lang.allow_zero) fail("negation needs the constant 0");
      take();
      return Formula::lres(unary(), Formula::zero());
    }
    if (tk.t == Tok::Minus) {  // -a = 0/a
      if (!lang.allow_zero) fail("negation needs the constant 0");
      take();
      return Formula::rres(Formula::zero(), unary());
    }
    return atom();
  }

  Formula fus_level() {
    Formula f = unary();
    if (peek().t == Tok::Star) {
      take();
      f = Formula::fus(f, unary());
      if (peek().t == Tok::Star) fail("* is non-associative, parenthesize");
    }
    return f;
  }

  Formula res_level() {
    Formula f = fus_level();
    Tok t = peek().t;
    if (t == Tok::Bsl || t == Tok::Sl) {
      take();
      Formula g = fus_level();
      f = (t == Tok::Bsl) ? Formula::lres(f, g) : Formula::rres(f, g);
      if (peek().t == Tok::Bsl || peek().t == Tok::Sl)
        fail("residuals are non-associative, parenthesize");
    }
    return f;
  }

  Formula and_level() {
    Formula f = res_level();
    if (peek().t == Tok::And) {
      take();
      f = Formula::and_(f, res_level());
      if (peek().t == Tok::And) fail("/\\ is non-associative, parenthesize");
    }
    return f;
  }

  Formula formula() {
    Formula f = and_level();
    if (peek().t == Tok::Or) {
      take();
      f = Formula::or_(f, and_level());
      if (peek().t == Tok::Or) fail("\\/ is non-associative, parenthesize");
    }
    return f;
  }

  Structure structure() {
    if (peek().t == Tok::Eps) {
      take();
      return Structure::unit();
    }
    if (peek().t == Tok::LParen) {
      size_t mark = at;
      take();
      Structure s1 = structure();
      if (peek().t == Tok::Comma) {
        take();
        Structure s2 = structure();
        if (peek().t != Tok::RParen) fail("expected ')' after structure pair");
        take();
        return Structure::pair(s1, s2);
      }
      // No comma: the parenthesis belongs to a formula, reparse.
      at = mark;
    }
    return Structure::leaf(formula());
  }

  Sequent sequent() {
    Structure a = structure();
    if (peek().t != Tok::Arrow) fail("expected '=>'");
    take();
    if (peek().t == Tok::End) {
      if (!lang.allow_empty_succ)
        fail("empty succedent is only allowed with the 0-rules");
      return Sequent{a, Formula()};
    }
    Formula f = formula();
    return Sequent{a, f};
  }

  void expect_end() {
    if (peek().t != Tok::End) fail("trailing input");
  }
};

}  // namespace

Formula parse_formula(const std::string& text, const LanguageOpts& lang) {
  auto toks = lex(text);
  Parser p{toks, lang};
  Formula f = p.formula();
  p.expect_end();
  return f;
}

Structure parse_structure(const std::string& text, const LanguageOpts& lang) {
  auto toks = lex(text);
  Parser p{toks, lang};
  Structure s = p.structure();
  p.expect_end();
  return s;
}

Sequent parse_sequent(const std::string& text, const LanguageOpts& lang) {
  auto toks = lex(text);
  Parser p{toks, lang};
  Sequent s = p.sequent();
  p.expect_end();
  return s;
}

// ------------------------------------------------------------ formatting

namespace {

const char* op_token(Conn c) {
  switch (c) {
    case Conn::And: return "/\\";
    case Conn::Or: return "\\/";
    case Conn::Fus: return "*";
    case Conn::Lres: return "\\";
    case Conn::Rres: return "/";
    default: return "?";
  }
}

void fmt(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Conn::Var: out += f.var_name(); return;
    case Conn::One: out += '1'; return;
    case Conn::Zero: out += '0'; return;
    case Conn::Top: out += "top"; return;
    case Conn::Bot: out += "bot"; return;
    case Conn::Bang: {
      out += '!';
      bool paren = conn_is_binary(f.lhs().kind());
      if (paren) out += '(';
      fmt(f.lhs(), out);
      if (paren) out += ')';
      return;
    }
    default: {
      auto side = [&out](const Formula& g) {
        bool paren = conn_is_binary(g.kind());
        if (paren) out += '(';
        fmt(g, out);
        if (paren) out += ')';
      };
      side(f.lhs());
      out += op_token(f.kind());
      side(f.rhs());
      return;
    }
  }
}

void fmt(const Structure& x, std::string& out) {
  switch (x.kind()) {
    case StructKind::Unit: out += "eps"; return;
    case StructKind::Leaf: fmt(x.leaf_formula(), out); return;
    case StructKind::Pair:
      out += '(';
      fmt(x.left(), out);
      out += ',';
      fmt(x.right(), out);
      out += ')';
      return;
  }
}

}  // namespace

std::string format_formula(const Formula& f) {
  std::string out;
  fmt(f, out);
  return out;
}

std::string format_structure(const Structure& x) {
  std::string out;
  fmt(x, out);
  return out;
}

std::string format_sequent(const Sequent& s) {
  std::string out;
  fmt(s.ante, out);
  out += " =>";
  if (!s.empty_succ()) {
    out += ' ';
    fmt(s.succ, out);
  }
  return out;
}

// ------------------------------------------------------ position strings

std::string format_position(const Context& u, const Structure& conclusion_ante) {
  std::string out;
  Structure cur = conclusion_ante;
  const auto& steps = u.steps();
  for (size_t i = 0; i < steps.size(); i++) {
    const auto& st = steps[i];
    bool normal = cur.is_pair() &&
                  (st.hole_right ? cur.left() : cur.right()) == st.sibling;
    if (normal) {
      out += st.hole_right ? 'R' : 'L';
      cur = st.hole_right ? cur.right() : cur.left();
      continue;
    }
    // Unit-insertion site: the pair collapsed in the conclusion.
    if (i + 1 != steps.size() || cur != st.sibling)
      throw std::runtime_error("context does not match conclusion antecedent");
    out += st.hole_right ? 'R' : 'L';
    out += '^';
  }
  return out;
}

Context parse_position(const std::string& path, const Structure& conclusion_ante) {
  Context u;
  Structure cur = conclusion_ante;
  for (size_t i = 0; i < path.size(); i++) {
    char c = path[i];
    if (c != 'L' && c != 'R')
      throw ParseError("position step must be L or R", i);
    bool right = (c == 'R');
    if (i + 1 < path.size() && path[i + 1] == '^') {
      if (i + 2 != path.size()) throw ParseError("^ only allowed at the end", i + 1);
      u.push(right, cur);
      return u;
    }
    if (!cur.is_pair()) throw ParseError("position descends below a leaf", i);
    u.push(right, right ? cur.left() : cur.right());
    cur = right ? cur.right() : cur.left();
  }
  return u;
}

}  // namespace nal
