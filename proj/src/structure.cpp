#include "hyperset/structure.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

#include "hyperset/error.hpp"

namespace hyperset {

std::string lang_name(Lang lang) {
  switch (lang) {
    case Lang::L1: return "L1";
    case Lang::L0: return "L0";
    case Lang::LNBG: return "LNBG";
  }
  return "?";
}

void FiniteStructure::check_range(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw error("structure: vertex out of range");
}

void FiniteStructure::add_d(int u, int v) {
  check_range(u, v);
  d_.insert({u, v});
  d_.insert({v, u});
  if (lang_ == Lang::L0) {
    s_.insert({u, v});
    s_.insert({v, u});
  }
}

void FiniteStructure::add_s(int u, int v) {
  check_range(u, v);
  s_.insert({u, v});
  s_.insert({v, u});
}

void FiniteStructure::add_e(int u, int v) {
  check_range(u, v);
  e_.insert({u, v});
}

void FiniteStructure::add_d_raw(int u, int v) {
  check_range(u, v);
  d_.insert({u, v});
}

std::vector<std::pair<int, int>> FiniteStructure::d_edges() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [u, v] : d_)
    if (u <= v) out.emplace_back(u, v);
  return out;
}

std::vector<std::pair<int, int>> FiniteStructure::s_edges() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [u, v] : s_)
    if (u <= v) out.emplace_back(u, v);
  return out;
}

int FiniteStructure::d_degree(int u) const {
  int deg = 0;
  for (int v = 0; v < n_; ++v)
    if (v != u && has_d(u, v)) ++deg;
  return deg;
}

void FiniteStructure::validate() const {
  auto in_range = [&](const std::set<std::pair<int, int>>& rel) {
    for (const auto& [u, v] : rel)
      if (u < 0 || v < 0 || u >= n_ || v >= n_) throw error("structure: relation outside domain");
  };
  in_range(d_);
  in_range(s_);
  in_range(e_);
  if (lang_ == Lang::L1 || lang_ == Lang::L0) {
    for (const auto& [u, v] : d_)
      if (!d_.count({v, u})) throw error("structure: D not symmetric");
    if (!e_.empty()) throw error("structure: E used outside LNBG");
  }
  if (lang_ == Lang::L1 && !s_.empty()) throw error("structure: S used in L1");
  if (lang_ == Lang::L0) {
    for (const auto& [u, v] : s_)
      if (!s_.count({v, u})) throw error("structure: S not symmetric");
    for (const auto& p : d_)
      if (!s_.count(p)) throw error("structure: D not contained in S");
  }
  if (lang_ == Lang::LNBG && (!d_.empty() || !s_.empty()))
    throw error("structure: D/S used in LNBG");
}

FiniteStructure parse_structure(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::optional<Lang> lang;
  std::optional<int> vertices;
  std::vector<std::tuple<char, int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t h = line.find('%');
    if (h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    auto fail = [&](const std::string& msg) -> void {
      throw error("structure parse (line " + std::to_string(lineno) + "): " + msg);
    };
    if (head == "lang") {
      std::string name;
      if (!(ls >> name)) fail("missing language name");
      if (name == "L1") lang = Lang::L1;
      else if (name == "L0") lang = Lang::L0;
      else if (name == "LNBG") lang = Lang::LNBG;
      else fail("unknown language '" + name + "'");
    } else if (head == "vertices") {
      int n;
      if (!(ls >> n) || n < 0) fail("bad vertex count");
      vertices = n;
    } else if (head == "D" || head == "S" || head == "E") {
      int u, v;
      if (!(ls >> u >> v)) fail("expected two vertex indices");
      edges.emplace_back(head[0], u, v);
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  if (!lang) throw error("structure parse: missing 'lang' header");
  if (!vertices) throw error("structure parse: missing 'vertices' header");
  FiniteStructure s(*lang, *vertices);
  for (const auto& [kind, u, v] : edges) {
    if (kind == 'D') {
      if (*lang == Lang::LNBG) throw error("structure parse: D edge in LNBG file");
      s.add_d(u, v);
    } else if (kind == 'S') {
      if (*lang != Lang::L0) throw error("structure parse: S edge outside L0");
      s.add_s(u, v);
    } else {
      if (*lang != Lang::LNBG) throw error("structure parse: E edge outside LNBG");
      s.add_e(u, v);
    }
  }
  s.validate();
  return s;
}

FiniteStructure parse_structure(const std::string& text) {
  std::istringstream in(text);
  return parse_structure(in);
}

std::string print_structure(const FiniteStructure& s) {
  std::ostringstream out;
  out << "lang " << lang_name(s.lang()) << "\n";
  out << "vertices " << s.size() << "\n";
  if (s.lang() == Lang::LNBG) {
    for (const auto& [u, v] : s.e_pairs()) out << "E " << u << " " << v << "\n";
    return out.str();
  }
  if (s.lang() == Lang::L0) {
    for (const auto& [u, v] : s.s_edges())
      if (!s.has_d(u, v)) out << "S " << u << " " << v << "\n";
  }
  for (const auto& [u, v] : s.d_edges()) out << "D " << u << " " << v << "\n";
  return out.str();
}

std::string to_dot(const FiniteStructure& s) {
  std::ostringstream out;
  if (s.lang() == Lang::LNBG) {
    out << "digraph g {\n";
    for (int u = 0; u < s.size(); ++u) out << "  n" << u << ";\n";
    for (const auto& [u, v] : s.e_pairs()) out << "  n" << u << " -> n" << v << ";\n";
    out << "}\n";
    return out.str();
  }
  out << "graph g {\n";
  for (int u = 0; u < s.size(); ++u) out << "  n" << u << ";\n";
  if (s.lang() == Lang::L0) {
    for (const auto& [u, v] : s.s_edges())
      if (!s.has_d(u, v)) out << "  n" << u << " -- n" << v << " [style=dashed];\n";
  }
  for (const auto& [u, v] : s.d_edges()) out << "  n" << u << " -- n" << v << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) { return parent_[x] == x ? x : parent_[x] = find(parent_[x]); }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::vector<std::vector<int>> components(const FiniteStructure& g) {
  UnionFind uf(g.size());
  for (const auto& [u, v] : g.d_pairs()) uf.unite(u, v);
  std::map<int, std::vector<int>> classes;
  for (int u = 0; u < g.size(); ++u) classes[uf.find(u)].push_back(u);
  std::vector<std::vector<int>> out;
  for (auto& [root, cls] : classes) {
    (void)root;
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool pair_ok(const FiniteStructure& g, const FiniteStructure& h, const std::vector<int>& map,
             int u, int v) {
  if (g.has_d(u, v) != h.has_d(map[u], map[v])) return false;
  if (g.has_s(u, v) != h.has_s(map[u], map[v])) return false;
  if (g.has_e(u, v) != h.has_e(map[u], map[v])) return false;
  if (g.has_e(v, u) != h.has_e(map[v], map[u])) return false;
  return true;
}

bool extend(const FiniteStructure& g, const FiniteStructure& h, std::vector<int>& map,
            std::vector<char>& used, int u) {
  if (u == g.size()) return true;
  for (int cand = 0; cand < h.size(); ++cand) {
    if (used[cand]) continue;
    map[u] = cand;
    bool ok = true;
    for (int v = 0; v <= u && ok; ++v) ok = pair_ok(g, h, map, u, v) && pair_ok(g, h, map, v, u);
    if (ok) {
      used[cand] = 1;
      if (extend(g, h, map, used, u + 1)) return true;
      used[cand] = 0;
    }
  }
  map[u] = -1;
  return false;
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const FiniteStructure& g, const FiniteStructure& h) {
  if (g.lang() != h.lang()) throw error("is_isomorphic: language mismatch");
  if (g.size() != h.size()) return std::nullopt;
  if (g.d_pairs().size() != h.d_pairs().size()) return std::nullopt;
  if (g.s_pairs().size() != h.s_pairs().size()) return std::nullopt;
  if (g.e_pairs().size() != h.e_pairs().size()) return std::nullopt;
  std::vector<int> map(g.size(), -1);
  std::vector<char> used(g.size(), 0);
  if (extend(g, h, map, used, 0)) return map;
  return std::nullopt;
}

FiniteStructure disjoint_union(const FiniteStructure& a, const FiniteStructure& b) {
  if (a.lang() != b.lang()) throw error("disjoint_union: language mismatch");
  FiniteStructure out(a.lang(), a.size() + b.size());
  int off = a.size();
  for (const auto& [u, v] : a.d_pairs()) out.add_d_raw(u, v);
  for (const auto& [u, v] : b.d_pairs()) out.add_d_raw(u + off, v + off);
  if (a.lang() == Lang::L0) {
    for (const auto& [u, v] : a.s_pairs()) out.add_s(u, v);
    for (const auto& [u, v] : b.s_pairs()) out.add_s(u + off, v + off);
  }
  for (const auto& [u, v] : a.e_pairs()) out.add_e(u, v);
  for (const auto& [u, v] : b.e_pairs()) out.add_e(u + off, v + off);
  return out;
}

}  // namespace hyperset
