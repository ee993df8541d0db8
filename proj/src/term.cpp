#include "hia/term.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace hia {

struct Term::Node {
  TermKind kind;
  std::string name;                    // Var
  std::shared_ptr<const Node> a, b;    // children
};

struct TermInternal {
  static const Term::Node* ptr(const Term& t) { return t.node_.get(); }
  static Term wrap(std::shared_ptr<const Term::Node> n) { return Term(std::move(n)); }
};

namespace {

Term make_node(TermKind k, std::string name, std::shared_ptr<const Term::Node> a,
               std::shared_ptr<const Term::Node> b) {
  auto n = std::make_shared<Term::Node>();
  n->kind = k;
  n->name = std::move(name);
  n->a = std::move(a);
  n->b = std::move(b);
  return TermInternal::wrap(std::move(n));
}

}  // namespace

Term Term::variable(std::string name) {
  if (name.empty()) throw InputError("variable name must be nonempty");
  return make_node(TermKind::Var, std::move(name), nullptr, nullptr);
}
Term Term::zero() { return make_node(TermKind::Zero, "", nullptr, nullptr); }
Term Term::one() { return make_node(TermKind::One, "", nullptr, nullptr); }
Term Term::inv(Term t) { return make_node(TermKind::Inv, "", t.node_, nullptr); }
Term Term::neg(Term t) { return make_node(TermKind::Neg, "", t.node_, nullptr); }
Term Term::meet(Term l, Term r) {
  return make_node(TermKind::Meet, "", l.node_, r.node_);
}
Term Term::join(Term l, Term r) {
  return make_node(TermKind::Join, "", l.node_, r.node_);
}
Term Term::impl(Term l, Term r) {
  return make_node(TermKind::Impl, "", l.node_, r.node_);
}

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::var_name() const { return node_->name; }
Term Term::child() const { return Term(node_->a); }
Term Term::left() const { return Term(node_->a); }
Term Term::right() const { return Term(node_->b); }

namespace {

bool structurally_equal(const Term::Node* x, const Term::Node* y) {
  if (x == y) return true;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case TermKind::Var:
      return x->name == y->name;
    case TermKind::Zero:
    case TermKind::One:
      return true;
    case TermKind::Inv:
    case TermKind::Neg:
      return structurally_equal(x->a.get(), y->a.get());
    default:
      return structurally_equal(x->a.get(), y->a.get()) &&
             structurally_equal(x->b.get(), y->b.get());
  }
}

}  // namespace

bool Term::operator==(const Term& other) const {
  return structurally_equal(node_.get(), other.node_.get());
}

namespace {

// Precedence: impl 1 (right-assoc), join 2, meet 3 (both left-assoc),
// unary 4.  Printing parenthesises a child exactly when re-parsing would
// otherwise regroup it, so print/parse round-trips node for node.
int precedence(TermKind k) {
  switch (k) {
    case TermKind::Impl: return 1;
    case TermKind::Join: return 2;
    case TermKind::Meet: return 3;
    case TermKind::Inv:
    case TermKind::Neg: return 4;
    default: return 5;
  }
}

void print_node(const Term::Node* t, int min_prec, std::string& out) {
  const int prec = precedence(t->kind);
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (t->kind) {
    case TermKind::Var: out += t->name; break;
    case TermKind::Zero: out += '0'; break;
    case TermKind::One: out += '1'; break;
    case TermKind::Inv:
      out += '~';
      print_node(t->a.get(), 4, out);
      break;
    case TermKind::Neg:
      out += '!';
      print_node(t->a.get(), 4, out);
      break;
    case TermKind::Meet:
      print_node(t->a.get(), 3, out);
      out += " & ";
      print_node(t->b.get(), 4, out);
      break;
    case TermKind::Join:
      print_node(t->a.get(), 2, out);
      out += " | ";
      print_node(t->b.get(), 3, out);
      break;
    case TermKind::Impl:
      print_node(t->a.get(), 2, out);
      out += " -> ";
      print_node(t->b.get(), 1, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string Term::to_string() const {
  std::string out;
  print_node(node_.get(), 0, out);
  return out;
}

namespace {

void collect_vars(const Term::Node* t, std::set<std::string>& out,
                  std::unordered_set<const Term::Node*>& seen) {
  if (!seen.insert(t).second) return;
  if (t->kind == TermKind::Var) out.insert(t->name);
  if (t->a) collect_vars(t->a.get(), out, seen);
  if (t->b) collect_vars(t->b.get(), out, seen);
}

void count_nodes(const Term::Node* t, std::unordered_set<const Term::Node*>& seen) {
  if (!seen.insert(t).second) return;
  if (t->a) count_nodes(t->a.get(), seen);
  if (t->b) count_nodes(t->b.get(), seen);
}

}  // namespace

std::vector<std::string> Term::free_variables() const {
  std::set<std::string> vars;
  std::unordered_set<const Term::Node*> seen;
  collect_vars(node_.get(), vars, seen);
  return std::vector<std::string>(vars.begin(), vars.end());
}

std::size_t Term::node_count() const {
  std::unordered_set<const Term::Node*> seen;
  count_nodes(node_.get(), seen);
  return seen.size();
}

// ---------------------------------------------------------------- parser

namespace {

enum class Tok : std::uint8_t {
  Ident, Zero, One, Amp, Pipe, Arrow, Bang, Tilde, LParen, RParen, End
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;  // Ident only
};

struct Lexer {
  std::string_view src;
  std::size_t pos = 0;
  Token cur;

  explicit Lexer(std::string_view s) : src(s) { advance(); }

  void advance() {
    while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t' ||
                                src[pos] == '\n' || src[pos] == '\r'))
      ++pos;
    cur.pos = pos;
    cur.text.clear();
    if (pos == src.size()) {
      cur.kind = Tok::End;
      return;
    }
    const char c = src[pos];
    switch (c) {
      case '&': cur.kind = Tok::Amp; ++pos; return;
      case '|': cur.kind = Tok::Pipe; ++pos; return;
      case '!': cur.kind = Tok::Bang; ++pos; return;
      case '~': cur.kind = Tok::Tilde; ++pos; return;
      case '(': cur.kind = Tok::LParen; ++pos; return;
      case ')': cur.kind = Tok::RParen; ++pos; return;
      case '0': cur.kind = Tok::Zero; ++pos; return;
      case '1': cur.kind = Tok::One; ++pos; return;
      case '-':
        if (pos + 1 < src.size() && src[pos + 1] == '>') {
          cur.kind = Tok::Arrow;
          pos += 2;
          return;
        }
        throw SyntaxError(pos, {"'->'"});
      default:
        break;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      std::size_t start = pos;
      while (pos < src.size()) {
        const char d = src[pos];
        if ((d >= 'a' && d <= 'z') || (d >= 'A' && d <= 'Z') ||
            (d >= '0' && d <= '9') || d == '_')
          ++pos;
        else
          break;
      }
      cur.kind = Tok::Ident;
      cur.text.assign(src.substr(start, pos - start));
      return;
    }
    throw SyntaxError(pos, {"'0'", "'1'", "identifier", "'('", "'!'", "'~'",
                            "'&'", "'|'", "'->'", "')'"});
  }
};

const std::vector<std::string> kExprStart = {"'0'", "'1'", "identifier",
                                             "'('", "'!'", "'~'"};

struct Parser {
  Lexer lex;

  explicit Parser(std::string_view s) : lex(s) {}

  Term parse() {
    Term t = parse_impl();
    if (lex.cur.kind != Tok::End)
      throw SyntaxError(lex.cur.pos, {"end of input", "'&'", "'|'", "'->'"});
    return t;
  }

  Term parse_impl() {
    Term l = parse_join();
    if (lex.cur.kind == Tok::Arrow) {
      lex.advance();
      return Term::impl(std::move(l), parse_impl());
    }
    return l;
  }

  Term parse_join() {
    Term l = parse_meet();
    while (lex.cur.kind == Tok::Pipe) {
      lex.advance();
      l = Term::join(std::move(l), parse_meet());
    }
    return l;
  }

  Term parse_meet() {
    Term l = parse_unary();
    while (lex.cur.kind == Tok::Amp) {
      lex.advance();
      l = Term::meet(std::move(l), parse_unary());
    }
    return l;
  }

  Term parse_unary() {
    switch (lex.cur.kind) {
      case Tok::Bang:
        lex.advance();
        return Term::neg(parse_unary());
      case Tok::Tilde:
        lex.advance();
        return Term::inv(parse_unary());
      case Tok::Zero:
        lex.advance();
        return Term::zero();
      case Tok::One:
        lex.advance();
        return Term::one();
      case Tok::Ident: {
        Term t = Term::variable(lex.cur.text);
        lex.advance();
        return t;
      }
      case Tok::LParen: {
        lex.advance();
        Term t = parse_impl();
        if (lex.cur.kind != Tok::RParen)
          throw SyntaxError(lex.cur.pos, {"')'", "'&'", "'|'", "'->'"});
        lex.advance();
        return t;
      }
      default:
        throw SyntaxError(lex.cur.pos, kExprStart);
    }
  }
};

}  // namespace

Term parse_term(std::string_view src) { return Parser(src).parse(); }

// ------------------------------------------------------------- evaluation

namespace {

Elem eval_node(const AlgebraOps& a, const Term::Node* t, const Environment& env,
               std::unordered_map<const Term::Node*, Elem>& memo) {
  auto it = memo.find(t);
  if (it != memo.end()) return it->second;
  Elem v = 0;
  switch (t->kind) {
    case TermKind::Var: {
      auto e = env.find(t->name);
      if (e == env.end()) throw UnboundVariableError(t->name);
      if (e->second >= a.size())
        throw InputError("value " + std::to_string(e->second) + " for variable " +
                         t->name + " is out of range");
      v = e->second;
      break;
    }
    case TermKind::Zero: v = a.bottom(); break;
    case TermKind::One: v = a.top(); break;
    case TermKind::Inv: v = a.inv(eval_node(a, t->a.get(), env, memo)); break;
    case TermKind::Neg: v = a.neg(eval_node(a, t->a.get(), env, memo)); break;
    case TermKind::Meet:
      v = a.meet(eval_node(a, t->a.get(), env, memo),
                 eval_node(a, t->b.get(), env, memo));
      break;
    case TermKind::Join:
      v = a.join(eval_node(a, t->a.get(), env, memo),
                 eval_node(a, t->b.get(), env, memo));
      break;
    case TermKind::Impl:
      v = a.impl(eval_node(a, t->a.get(), env, memo),
                 eval_node(a, t->b.get(), env, memo));
      break;
  }
  memo.emplace(t, v);
  return v;
}

}  // namespace

Elem eval_term(const AlgebraOps& a, const Term& t, const Environment& env) {
  std::unordered_map<const Term::Node*, Elem> memo;
  return eval_node(a, TermInternal::ptr(t), env, memo);
}

IdentityVerdict holds_identity(const AlgebraOps& a, const Term& lhs, const Term& rhs) {
  std::set<std::string> var_set;
  for (const std::string& v : lhs.free_variables()) var_set.insert(v);
  for (const std::string& v : rhs.free_variables()) var_set.insert(v);
  const std::vector<std::string> vars(var_set.begin(), var_set.end());

  IdentityVerdict verdict;
  const std::size_t n = a.size();
  std::vector<Elem> assign(vars.size(), 0);
  Environment env;
  for (const std::string& v : vars) env[v] = 0;

  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = assign[i];
    const Elem lv = eval_term(a, lhs, env);
    const Elem rv = eval_term(a, rhs, env);
    if (lv != rv) {
      verdict.holds = false;
      verdict.counterexample = env;
      verdict.lhs_value = lv;
      verdict.rhs_value = rv;
      return verdict;
    }
    // Odometer with the last variable fastest: ascending lex order.
    std::size_t i = assign.size();
    while (i > 0) {
      --i;
      if (++assign[i] < n) break;
      assign[i] = 0;
      if (i == 0) return verdict;
    }
    if (assign.empty()) return verdict;
  }
}

namespace {

Term substitute_node(const Term::Node* t, const std::map<std::string, Term>& repl,
                     std::map<const Term::Node*, Term>& memo) {
  auto it = memo.find(t);
  if (it != memo.end()) return it->second;
  Term out = Term::zero();
  switch (t->kind) {
    case TermKind::Var: {
      auto r = repl.find(t->name);
      out = (r != repl.end()) ? r->second : Term::variable(t->name);
      break;
    }
    case TermKind::Zero: out = Term::zero(); break;
    case TermKind::One: out = Term::one(); break;
    case TermKind::Inv: out = Term::inv(substitute_node(t->a.get(), repl, memo)); break;
    case TermKind::Neg: out = Term::neg(substitute_node(t->a.get(), repl, memo)); break;
    case TermKind::Meet:
      out = Term::meet(substitute_node(t->a.get(), repl, memo),
                       substitute_node(t->b.get(), repl, memo));
      break;
    case TermKind::Join:
      out = Term::join(substitute_node(t->a.get(), repl, memo),
                       substitute_node(t->b.get(), repl, memo));
      break;
    case TermKind::Impl:
      out = Term::impl(substitute_node(t->a.get(), repl, memo),
                       substitute_node(t->b.get(), repl, memo));
      break;
  }
  memo.emplace(t, out);
  return out;
}

}  // namespace

Term substitute(const Term& t, const std::map<std::string, Term>& replacement) {
  std::map<const Term::Node*, Term> memo;
  return substitute_node(TermInternal::ptr(t), replacement, memo);
}

double assignment_count(std::size_t algebra_size, std::size_t variable_count) {
  return std::pow(static_cast<double>(algebra_size),
                  static_cast<double>(variable_count));
}

}  // namespace hia
