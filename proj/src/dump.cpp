#include "hyperset/dump.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <istream>
#include <sstream>

namespace hyperset {

namespace {

// Condensation stratum: nodes of one strongly connected component share a
// stratum, which exceeds the strata of everything reachable below them.
std::map<NodeId, int> strata(const Store& store, const std::vector<NodeId>& nodes) {
  std::map<NodeId, int> depth;
  // Tarjan over the closure; components come out children-first.
  std::map<NodeId, int> idx, low, comp_of;
  std::vector<NodeId> stack;
  std::map<NodeId, char> on_stack;
  std::vector<std::vector<NodeId>> comps;
  int counter = 0;
  std::function<void(NodeId)> visit = [&](NodeId u) {
    idx[u] = low[u] = counter++;
    stack.push_back(u);
    on_stack[u] = 1;
    for (NodeId v : store.children(u)) {
      if (!idx.count(v)) {
        visit(v);
        low[u] = std::min(low[u], low[v]);
      } else if (on_stack[v]) {
        low[u] = std::min(low[u], idx[v]);
      }
    }
    if (low[u] == idx[u]) {
      std::vector<NodeId> comp;
      for (;;) {
        NodeId v = stack.back();
        stack.pop_back();
        on_stack[v] = 0;
        comp.push_back(v);
        if (v == u) break;
      }
      comps.push_back(std::move(comp));
    }
  };
  for (NodeId u : nodes)
    if (!idx.count(u)) visit(u);

  for (std::size_t c = 0; c < comps.size(); ++c)
    for (NodeId u : comps[c]) comp_of[u] = static_cast<int>(c);
  std::vector<int> comp_depth(comps.size(), 0);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    int d = 0;
    for (NodeId u : comps[c])
      for (NodeId v : store.children(u))
        if (comp_of.at(v) != static_cast<int>(c)) d = std::max(d, comp_depth[comp_of.at(v)] + 1);
    comp_depth[c] = d;
  }
  for (const auto& [u, c] : comp_of) depth[u] = comp_depth[c];
  return depth;
}

}  // namespace

std::string write_dump(const Store& store, const std::vector<std::pair<std::string, NodeId>>& roots) {
  std::vector<NodeId> closure;
  for (const auto& [name, id] : roots) {
    (void)name;
    closure.push_back(id);
  }
  std::sort(closure.begin(), closure.end());
  closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
  std::map<NodeId, char> seen;
  for (NodeId u : closure) seen[u] = 1;
  for (std::size_t i = 0; i < closure.size(); ++i)
    for (NodeId v : store.children(closure[i]))
      if (!seen.count(v)) {
        seen[v] = 1;
        closure.push_back(v);
      }

  auto depth = strata(store, closure);
  std::stable_sort(closure.begin(), closure.end(), [&](NodeId a, NodeId b) {
    if (depth.at(a) != depth.at(b)) return depth.at(a) < depth.at(b);
    if (store.children(a) != store.children(b)) return store.children(a) < store.children(b);
    return a < b;
  });

  std::map<NodeId, int> local;
  for (std::size_t i = 0; i < closure.size(); ++i) local[closure[i]] = static_cast<int>(i);

  std::ostringstream out;
  for (const auto& [name, id] : roots) out << name << " -> " << local.at(id) << "\n";
  for (std::size_t i = 0; i < closure.size(); ++i) {
    std::vector<int> kids;
    for (NodeId v : store.children(closure[i])) kids.push_back(local.at(v));
    std::sort(kids.begin(), kids.end());
    out << i << ": {";
    for (std::size_t k = 0; k < kids.size(); ++k) out << (k ? " " : "") << kids[k];
    out << "}\n";
  }
  return out.str();
}

std::map<std::string, Hyperset> parse_dump(Store& store, std::istream& in,
                                           std::vector<NodeId>* all_nodes) {
  std::vector<std::pair<std::string, int>> roots;
  std::map<int, std::vector<int>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fail = [&](const std::string& msg) -> void {
      throw error("dump parse (line " + std::to_string(lineno) + "): " + msg);
    };
    std::size_t arrow = line.find("->");
    std::size_t colon = line.find(':');
    if (arrow != std::string::npos && (colon == std::string::npos || arrow < colon)) {
      std::istringstream ls(line);
      std::string name, arr;
      int id;
      if (!(ls >> name >> arr >> id) || arr != "->") fail("expected 'name -> id'");
      roots.emplace_back(name, id);
      continue;
    }
    if (colon == std::string::npos) fail("expected 'id: {children}'");
    int id;
    try {
      id = std::stoi(line.substr(0, colon));
    } catch (...) {
      throw error("dump parse (line " + std::to_string(lineno) + "): bad node id");
    }
    std::size_t open = line.find('{', colon);
    std::size_t close = line.find('}', colon);
    if (open == std::string::npos || close == std::string::npos || close < open)
      fail("expected braced child list");
    std::istringstream body(line.substr(open + 1, close - open - 1));
    std::vector<int> kids;
    int k;
    while (body >> k) kids.push_back(k);
    if (rows.count(id)) fail("duplicate node id");
    rows.emplace(id, std::move(kids));
  }

  std::map<int, int> pos;
  for (const auto& [id, kids] : rows) {
    (void)kids;
    pos.emplace(id, static_cast<int>(pos.size()));
  }
  RawGraph raw(static_cast<int>(pos.size()));
  for (const auto& [id, kids] : rows)
    for (int k : kids) {
      auto it = pos.find(k);
      if (it == pos.end()) throw error("dump parse: child " + std::to_string(k) + " has no row");
      raw.internal[pos.at(id)].push_back(it->second);
    }
  auto resolved = store.intern(raw);

  if (all_nodes) {
    *all_nodes = resolved;
    std::sort(all_nodes->begin(), all_nodes->end());
    all_nodes->erase(std::unique(all_nodes->begin(), all_nodes->end()), all_nodes->end());
  }
  std::map<std::string, Hyperset> out;
  for (const auto& [name, id] : roots) {
    auto it = pos.find(id);
    if (it == pos.end()) throw error("dump parse: root '" + name + "' points at missing node");
    out.emplace(name, Hyperset(&store, resolved[it->second]));
  }
  return out;
}

std::map<std::string, Hyperset> parse_dump(Store& store, const std::string& text,
                                           std::vector<NodeId>* all_nodes) {
  std::istringstream in(text);
  return parse_dump(store, in, all_nodes);
}

}  // namespace hyperset
