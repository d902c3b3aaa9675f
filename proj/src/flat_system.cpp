#include "hyperset/flat_system.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace hyperset {

std::map<std::string, Hyperset> solve(Store& store, const FlatSystem& sys) {
  for (const auto& [name, atom] : sys.atoms) {
    if (atom.store() != &store) throw error("solve: atom '" + name + "' bound in a different store");
    if (!sys.allow_non_well_founded_atoms && !atom.well_founded())
      throw error("solve: atom '" + name + "' is not well-founded");
  }

  std::map<std::string, int> idx;
  for (const auto& [name, rhs] : sys.equations) {
    (void)rhs;
    idx.emplace(name, static_cast<int>(idx.size()));
  }

  RawGraph raw(static_cast<int>(idx.size()));
  for (const auto& [name, rhs] : sys.equations) {
    int u = idx.at(name);
    for (const std::string& ref : rhs) {
      auto it = idx.find(ref);
      if (it != idx.end()) {
        raw.internal[u].push_back(it->second);
        continue;
      }
      auto at = sys.atoms.find(ref);
      if (at == sys.atoms.end())
        throw error("solve: unknown name '" + ref + "' in equation for '" + name + "'");
      raw.external[u].push_back(at->second.id());
    }
  }

  auto resolved = store.intern(raw);
  std::map<std::string, Hyperset> out;
  for (const auto& [name, u] : idx) out.emplace(name, Hyperset(&store, resolved[u]));
  return out;
}

namespace {

struct LiteralParser {
  Store& store;
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) { throw error("flat system parse: " + msg); }

  // Called with pos just past a '#'.
  NodeId literal() {
    if (pos >= s.size()) fail("dangling '#'");
    if (s[pos] == '{') {
      ++pos;
      std::vector<NodeId> kids;
      skip_ws();
      if (pos < s.size() && s[pos] == '}') {
        ++pos;
        return store.make_set({});
      }
      for (;;) {
        skip_ws();
        if (pos >= s.size() || s[pos] != '#') fail("set literal elements must be '#' literals");
        ++pos;
        kids.push_back(literal());
        skip_ws();
        if (pos < s.size() && s[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < s.size() && s[pos] == '}') {
          ++pos;
          return store.make_set(std::move(kids));
        }
        fail("expected ',' or '}' in set literal");
      }
    }
    if (!std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected digits or '{' after '#'");
    unsigned n = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      n = n * 10 + static_cast<unsigned>(s[pos] - '0');
      if (n > 100000) fail("natural literal too large");
      ++pos;
    }
    return store.hf_nat(n);
  }
};

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

FlatSystem parse_flat_system(Store& store, std::istream& in) {
  FlatSystem sys;
  std::string line;
  int lineno = 0;
  int next_literal = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t h = line.find('%');
    if (h != std::string::npos) line.erase(h);
    std::size_t eq = line.find('=');
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (blank) continue;
    auto fail = [&](const std::string& msg) -> void {
      throw error("flat system parse (line " + std::to_string(lineno) + "): " + msg);
    };
    if (eq == std::string::npos) fail("missing '='");

    std::string lhs = line.substr(0, eq);
    std::string rhs = line.substr(eq + 1);
    // trim lhs
    std::size_t a = lhs.find_first_not_of(" \t");
    std::size_t b = lhs.find_last_not_of(" \t");
    if (a == std::string::npos) fail("empty left-hand side");
    lhs = lhs.substr(a, b - a + 1);
    for (char c : lhs)
      if (!is_name_char(c)) fail("bad indeterminate name '" + lhs + "'");
    if (sys.equations.count(lhs)) fail("duplicate equation for '" + lhs + "'");

    LiteralParser lp{store, rhs};
    lp.skip_ws();
    if (lp.pos >= rhs.size() || rhs[lp.pos] != '{') fail("right-hand side must be a braced set");
    ++lp.pos;
    std::vector<std::string> members;
    lp.skip_ws();
    if (lp.pos < rhs.size() && rhs[lp.pos] == '}') {
      ++lp.pos;
    } else {
      for (;;) {
        lp.skip_ws();
        if (lp.pos >= rhs.size()) fail("unterminated set");
        if (rhs[lp.pos] == '#') {
          ++lp.pos;
          NodeId lit = lp.literal();
          std::string nm = "#lit" + std::to_string(next_literal++);
          sys.atoms.emplace(nm, Hyperset(&store, lit));
          members.push_back(nm);
        } else if (is_name_char(rhs[lp.pos])) {
          std::string nm;
          while (lp.pos < rhs.size() && is_name_char(rhs[lp.pos])) nm += rhs[lp.pos++];
          members.push_back(nm);
        } else {
          fail("unexpected character in set");
        }
        lp.skip_ws();
        if (lp.pos < rhs.size() && rhs[lp.pos] == ',') {
          ++lp.pos;
          continue;
        }
        if (lp.pos < rhs.size() && rhs[lp.pos] == '}') {
          ++lp.pos;
          break;
        }
        fail("expected ',' or '}'");
      }
    }
    lp.skip_ws();
    if (lp.pos != rhs.size()) fail("trailing characters after set");
    sys.equations.emplace(lhs, std::move(members));
  }
  return sys;
}

FlatSystem parse_flat_system(Store& store, const std::string& text) {
  std::istringstream in(text);
  return parse_flat_system(store, in);
}

}  // namespace hyperset
