#include "hyperset/constructions.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "hyperset/error.hpp"

namespace hyperset {

namespace {

void require_graph(const FiniteStructure& g, const char* who) {
  if (g.lang() != Lang::L1) throw error(std::string(who) + ": graph must be an L1 structure");
  g.validate();
}

}  // namespace

std::vector<Hyperset> embed_graph(Store& store, const FiniteStructure& g) {
  require_graph(g, "embed_graph");
  const int n = g.size();
  RawGraph raw(n);
  for (int i = 0; i < n; ++i) {
    raw.external[i].push_back(store.hf_nat(static_cast<unsigned>(i)));
    for (int j = 0; j < n; ++j)
      if (g.has_d(i, j)) raw.internal[i].push_back(j);
  }
  std::vector<NodeId> ids = store.intern(raw);
  std::vector<Hyperset> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.emplace_back(&store, ids[i]);
  return out;
}

Hyperset flower(Store& store, int n) {
  if (n < 1) throw error("flower: n must be positive");
  RawGraph raw(n + 1);
  for (int i = 0; i < n; ++i) {
    raw.internal[0].push_back(i + 1);          // a has petal {a, i}
    raw.internal[i + 1].push_back(0);          // the petal contains a ...
    raw.external[i + 1].push_back(store.hf_nat(static_cast<unsigned>(i)));  // ... and i
  }
  return {&store, store.intern(raw)[0]};
}

Hyperset bouquet(Store& store, const std::set<int>& a) {
  for (int n : a)
    if (n < 1) throw error("bouquet: flower sizes must be positive");
  int total = 1;
  for (int n : a) total += 1 + (n - 1);  // apex + petals
  FiniteStructure star(Lang::L1, total);
  int next = 1;
  for (int n : a) {
    int apex = next++;
    star.add_d(0, apex);
    for (int p = 1; p < n; ++p) star.add_d(apex, next++);
  }
  return embed_graph(store, star)[0];
}

// ---------------------------------------------------------------------------
// Rieger permutation models

PermutedMembership::PermutedMembership(Store* store, std::map<NodeId, NodeId> swaps)
    : store_(store), swaps_(std::move(swaps)) {
  for (const auto& [from, to] : swaps_) {
    if (from == to) throw error("permutation: trivial swap in support");
    auto back = swaps_.find(to);
    if (back == swaps_.end() || back->second != from)
      throw error("permutation: not an involution");
  }
}

NodeId PermutedMembership::pi(NodeId id) const {
  auto it = swaps_.find(id);
  return it == swaps_.end() ? id : it->second;
}

RiegerModel rieger(Store& store, const FiniteStructure& g) {
  require_graph(g, "rieger");
  const int n = g.size();
  if (n < 2) throw error("rieger: need at least 2 vertices");
  for (int i = 0; i < n; ++i) {
    bool touched = false;
    for (int j = 0; j < n && !touched; ++j) touched = g.has_d(i, j);
    if (!touched) throw error("rieger: isolated vertex " + std::to_string(i));
  }

  std::vector<NodeId> a(n), b(n);
  for (int i = 0; i < n; ++i) {
    std::vector<NodeId> kids;
    for (int k = 0; k < n; ++k)
      if (k != i) kids.push_back(store.hf_nat(static_cast<unsigned>(k)));
    a[i] = store.make_set(std::move(kids));
  }
  for (int i = 0; i < n; ++i) {
    std::vector<NodeId> kids;
    for (int j = 0; j < n; ++j)
      if (g.has_d(j, i)) kids.push_back(a[j]);
    // distinct tag per vertex: b_i stays distinct from b_j even when the two
    // vertices have equal neighborhoods, so the swaps below are well-defined
    kids.push_back(store.make_set({store.hf_nat(static_cast<unsigned>(n + i))}));
    b[i] = store.make_set(std::move(kids));
  }

  std::set<NodeId> support(a.begin(), a.end());
  support.insert(b.begin(), b.end());
  if (static_cast<int>(support.size()) != 2 * n)
    throw error("rieger: support of the permutation is not 2n distinct sets");

  std::map<NodeId, NodeId> swaps;
  for (int i = 0; i < n; ++i) {
    swaps[a[i]] = b[i];
    swaps[b[i]] = a[i];
  }
  return RiegerModel{PermutedMembership(&store, std::move(swaps)), std::move(a), std::move(b)};
}

FiniteStructure permuted_d_graph(const PermutedMembership& pm,
                                 const std::vector<NodeId>& members) {
  const int m = static_cast<int>(members.size());
  FiniteStructure g(Lang::L1, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      if (pm.d_n(members[i], members[j])) g.add_d(i, j);
  return g;
}

std::vector<NodeId> hereditary_closure(const Store& store, const std::vector<NodeId>& roots) {
  std::set<NodeId> seen(roots.begin(), roots.end());
  std::deque<NodeId> queue(roots.begin(), roots.end());
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId c : store.children(u))
      if (seen.insert(c).second) queue.push_back(c);
  }
  return {seen.begin(), seen.end()};
}

std::vector<NodeId> rank_bounded_nodes(const Store& store, int bound) {
  std::vector<NodeId> out;
  for (NodeId id = 0; id < static_cast<NodeId>(store.size()); ++id)
    if (store.well_founded(id) && store.rank(id) <= bound) out.push_back(id);
  return out;
}

// ---------------------------------------------------------------------------
// Ball grafting

void BallSpec::validate() const {
  if (structure.lang() != Lang::L0) throw error("ball: structure must be L0");
  structure.validate();
  const int n = structure.size();
  if (n == 0) throw error("ball: empty domain");
  if (center < 0 || center >= n) throw error("ball: center outside the domain");
  std::vector<int> dist(n, -1);
  std::deque<int> queue{center};
  dist[center] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v = 0; v < n; ++v)
      if (structure.has_d(u, v) && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  for (int v = 0; v < n; ++v)
    if (dist[v] < 0 || dist[v] > radius)
      throw error("ball: vertex " + std::to_string(v) +
                  " outside the radius-" + std::to_string(radius) + " D-ball around the center");
}

std::vector<Hyperset> fresh_tags(Store& store, int k) {
  if (k < 0) throw error("fresh_tags: negative count");
  int top = -1;
  for (NodeId id = 0; id < static_cast<NodeId>(store.size()); ++id)
    if (store.well_founded(id)) top = std::max(top, store.rank(id));
  // {nat 0} is itself the natural 1; starting at 1 keeps every tag outside
  // the naturals, so no tag is a member of another
  const int base = std::max(top + 1, 1);
  std::vector<Hyperset> out;
  out.reserve(k);
  for (int i = 0; i < k; ++i)
    out.emplace_back(&store, store.make_set({store.hf_nat(static_cast<unsigned>(base + i))}));
  return out;
}

std::vector<Hyperset> graft_ball(Store& store, const BallSpec& src,
                                 const std::vector<Hyperset>& tags,
                                 const std::map<int, std::vector<Hyperset>>& s_targets,
                                 const Slice& target) {
  src.validate();
  const int n = src.structure.size();
  if (static_cast<int>(tags.size()) != n) throw error("graft_ball: need one tag per ball vertex");
  if (target.store != nullptr && target.store != &store)
    throw error("graft_ball: target slice from a different store");

  std::set<NodeId> tag_ids;
  for (const auto& t : tags) {
    if (t.store() != &store) throw error("graft_ball: tag from a different store");
    if (!t.well_founded()) throw error("graft_ball: tag is not well-founded");
    tag_ids.insert(t.id());
  }
  if (static_cast<int>(tag_ids.size()) != n)
    throw error("graft_ball: tag condition H2 violated (tags not pairwise distinct)");
  for (const auto& t0 : tags)
    for (const auto& t1 : tags)
      if (store.member(t0.id(), t1.id()))
        throw error("graft_ball: tag condition H1 violated (one tag is a member of another)");

  std::set<NodeId> level0(target.members.begin(), target.members.end());
  std::set<NodeId> level1, level2;
  for (NodeId m : level0)
    for (NodeId c : store.children(m)) level1.insert(c);
  for (NodeId m : level1)
    for (NodeId c : store.children(m)) level2.insert(c);
  for (NodeId t : tag_ids) {
    if (level0.count(t))
      throw error("graft_ball: tag condition H3 violated (tag is a member of the target slice)");
    if (level1.count(t))
      throw error("graft_ball: tag condition H4 violated (tag is an element of a target member)");
    if (level2.count(t))
      throw error("graft_ball: tag condition H5 violated "
                  "(tag is an element of an element of a target member)");
  }

  RawGraph raw(n);
  for (int d = 0; d < n; ++d) {
    for (int e = 0; e < n; ++e)
      if (src.structure.has_d(d, e)) raw.internal[d].push_back(e);  // P_d
    raw.external[d].push_back(tags[d].id());
  }
  for (const auto& [d, qs] : s_targets) {
    if (d < 0 || d >= n) throw error("graft_ball: S-target key outside the ball domain");
    for (const auto& q : qs) {
      if (q.store() != &store) throw error("graft_ball: S-target from a different store");
      if (!level0.count(q.id()))
        throw error("graft_ball: prescribed S-target is not a member of the target slice");
      raw.external[d].push_back(q.id());  // Q_d
    }
  }
  for (auto& ext : raw.external) {
    std::sort(ext.begin(), ext.end());
    ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
  }

  std::vector<NodeId> ids = store.intern(raw);
  std::vector<Hyperset> out;
  out.reserve(n);
  for (int d = 0; d < n; ++d) out.emplace_back(&store, ids[d]);
  return out;
}

}  // namespace hyperset
