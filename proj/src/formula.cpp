#include "hyperset/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "hyperset/error.hpp"

namespace hyperset {

namespace {

std::vector<std::string> merge_free(const std::vector<FormulaPtr>& subs) {
  std::set<std::string> vars;
  for (const auto& s : subs) vars.insert(s->free_vars.begin(), s->free_vars.end());
  return {vars.begin(), vars.end()};
}

FormulaPtr atom(Formula::Kind k, const std::string& x, const std::string& y) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->v1 = x;
  f->v2 = y;
  std::set<std::string> vars{x, y};
  f->free_vars.assign(vars.begin(), vars.end());
  f->height = 0;
  return f;
}

FormulaPtr nary(Formula::Kind k, std::vector<FormulaPtr> subs) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->subs = std::move(subs);
  f->free_vars = merge_free(f->subs);
  for (const auto& s : f->subs) f->height = std::max(f->height, s->height);
  return f;
}

FormulaPtr quant(Formula::Kind k, const std::string& v, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->v1 = v;
  f->subs.push_back(std::move(body));
  for (const auto& fv : f->subs[0]->free_vars)
    if (fv != v) f->free_vars.push_back(fv);
  f->height = f->subs[0]->height + 1;
  return f;
}

}  // namespace

FormulaPtr f_d(const std::string& x, const std::string& y) { return atom(Formula::Kind::D, x, y); }
FormulaPtr f_s(const std::string& x, const std::string& y) { return atom(Formula::Kind::S, x, y); }
FormulaPtr f_e(const std::string& x, const std::string& y) { return atom(Formula::Kind::E, x, y); }
FormulaPtr f_eq(const std::string& x, const std::string& y) { return atom(Formula::Kind::Eq, x, y); }

FormulaPtr f_not(FormulaPtr a) { return nary(Formula::Kind::Not, {std::move(a)}); }

FormulaPtr f_and(std::vector<FormulaPtr> subs) {
  if (subs.empty()) throw error("f_and: empty conjunction");
  if (subs.size() == 1) return subs[0];
  return nary(Formula::Kind::And, std::move(subs));
}

FormulaPtr f_or(std::vector<FormulaPtr> subs) {
  if (subs.empty()) throw error("f_or: empty disjunction");
  if (subs.size() == 1) return subs[0];
  return nary(Formula::Kind::Or, std::move(subs));
}

FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) {
  return nary(Formula::Kind::Implies, {std::move(a), std::move(b)});
}

FormulaPtr f_exists(const std::string& v, FormulaPtr body) {
  return quant(Formula::Kind::Exists, v, std::move(body));
}

FormulaPtr f_forall(const std::string& v, FormulaPtr body) {
  return quant(Formula::Kind::Forall, v, std::move(body));
}

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind || a->v1 != b->v1 || a->v2 != b->v2) return false;
  if (a->subs.size() != b->subs.size()) return false;
  for (std::size_t i = 0; i < a->subs.size(); ++i)
    if (!structurally_equal(a->subs[i], b->subs[i])) return false;
  return true;
}

namespace {

void collect_vars(const FormulaPtr& f, std::set<std::string>& out) {
  if (f->is_atom()) {
    out.insert(f->v1);
    out.insert(f->v2);
    return;
  }
  if (f->kind == Formula::Kind::Exists || f->kind == Formula::Kind::Forall) out.insert(f->v1);
  for (const auto& s : f->subs) collect_vars(s, out);
}

}  // namespace

std::vector<std::string> all_vars(const FormulaPtr& f) {
  std::set<std::string> vars;
  collect_vars(f, vars);
  return {vars.begin(), vars.end()};
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw error("formula parse (at offset " + std::to_string(pos) + "): " + msg);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(const std::string& tok) {
    skip_ws();
    if (s.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }

  bool peek_word(const std::string& word) {
    skip_ws();
    if (s.compare(pos, word.size(), word) != 0) return false;
    std::size_t end = pos + word.size();
    return end >= s.size() || !(std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_');
  }

  std::string ident() {
    skip_ws();
    if (pos >= s.size() ||
        !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      fail("expected identifier");
    std::string out;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '\''))
      out += s[pos++];
    return out;
  }

  FormulaPtr implication() {
    FormulaPtr lhs = disjunction();
    skip_ws();
    if (eat("->")) return f_implies(lhs, implication());
    return lhs;
  }

  FormulaPtr disjunction() {
    std::vector<FormulaPtr> subs{conjunction()};
    for (;;) {
      skip_ws();
      if (pos < s.size() && s[pos] == '|') {
        ++pos;
        subs.push_back(conjunction());
      } else {
        break;
      }
    }
    return subs.size() == 1 ? subs[0] : f_or(std::move(subs));
  }

  FormulaPtr conjunction() {
    std::vector<FormulaPtr> subs{unary()};
    for (;;) {
      skip_ws();
      if (pos < s.size() && s[pos] == '&') {
        ++pos;
        subs.push_back(unary());
      } else {
        break;
      }
    }
    return subs.size() == 1 ? subs[0] : f_and(std::move(subs));
  }

  FormulaPtr unary() {
    skip_ws();
    if (pos < s.size() && s[pos] == '!') {
      ++pos;
      return f_not(unary());
    }
    if (peek_word("exists") || peek_word("forall")) {
      bool ex = peek_word("exists");
      pos += 6;
      std::string v = ident();
      skip_ws();
      if (pos >= s.size() || s[pos] != '.') fail("expected '.' after quantified variable");
      ++pos;
      FormulaPtr body = implication();
      return ex ? f_exists(v, body) : f_forall(v, body);
    }
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      FormulaPtr inner = implication();
      skip_ws();
      if (pos >= s.size() || s[pos] != ')') fail("missing ')'");
      ++pos;
      return inner;
    }
    return atom_or_eq();
  }

  FormulaPtr atom_or_eq() {
    skip_ws();
    std::string name = ident();
    skip_ws();
    if ((name == "D" || name == "S" || name == "E") && pos < s.size() && s[pos] == '(') {
      ++pos;
      std::string x = ident();
      skip_ws();
      if (pos >= s.size() || s[pos] != ',') fail("expected ',' in atom");
      ++pos;
      std::string y = ident();
      skip_ws();
      if (pos >= s.size() || s[pos] != ')') fail("expected ')' in atom");
      ++pos;
      if (name == "D") return f_d(x, y);
      if (name == "S") return f_s(x, y);
      return f_e(x, y);
    }
    if (pos < s.size() && s[pos] == '=') {
      ++pos;
      std::string y = ident();
      return f_eq(name, y);
    }
    fail("expected atom: D(x,y), S(x,y), E(x,y) or x=y");
  }
};

int precedence(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Implies: return 0;
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: return 0;  // scopes right; parenthesize as operand
    default: return 3;
  }
}

void print(const FormulaPtr& f, std::ostream& out, int min_prec) {
  int prec = precedence(*f);
  bool parens = prec < min_prec;
  if (parens) out << "(";
  switch (f->kind) {
    case Formula::Kind::D: out << "D(" << f->v1 << "," << f->v2 << ")"; break;
    case Formula::Kind::S: out << "S(" << f->v1 << "," << f->v2 << ")"; break;
    case Formula::Kind::E: out << "E(" << f->v1 << "," << f->v2 << ")"; break;
    case Formula::Kind::Eq: out << f->v1 << "=" << f->v2; break;
    case Formula::Kind::Not:
      out << "!";
      print(f->subs[0], out, 3);
      break;
    case Formula::Kind::And:
      for (std::size_t i = 0; i < f->subs.size(); ++i) {
        if (i) out << " & ";
        print(f->subs[i], out, 3);
      }
      break;
    case Formula::Kind::Or:
      for (std::size_t i = 0; i < f->subs.size(); ++i) {
        if (i) out << " | ";
        print(f->subs[i], out, 2);
      }
      break;
    case Formula::Kind::Implies:
      print(f->subs[0], out, 1);
      out << " -> ";
      print(f->subs[1], out, 0);
      break;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out << (f->kind == Formula::Kind::Exists ? "exists " : "forall ") << f->v1 << ". ";
      print(f->subs[0], out, 0);
      break;
  }
  if (parens) out << ")";
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  Parser p{text};
  FormulaPtr f = p.implication();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing characters");
  return f;
}

std::string print_formula(const FormulaPtr& f) {
  std::ostringstream out;
  print(f, out, 0);
  return out.str();
}

}  // namespace hyperset
