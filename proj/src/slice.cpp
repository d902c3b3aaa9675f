#include "hyperset/slice.hpp"

#include <algorithm>
#include <set>
#include <deque>

namespace hyperset {

Slice::Slice(Store* s, std::vector<NodeId> m) : store(s), members(std::move(m)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool Slice::contains(NodeId id) const {
  return std::binary_search(members.begin(), members.end(), id);
}

int Slice::index_of(NodeId id) const {
  auto it = std::lower_bound(members.begin(), members.end(), id);
  if (it == members.end() || *it != id) return -1;
  return static_cast<int>(it - members.begin());
}

Slice make_slice(Store& store, const std::vector<Hyperset>& members) {
  std::vector<NodeId> ids;
  ids.reserve(members.size());
  for (const Hyperset& h : members) {
    if (h.store() != &store) throw error("make_slice: member from a different store");
    ids.push_back(h.id());
  }
  return Slice(&store, std::move(ids));
}

std::vector<NodeId> d_neighbors(const Store& store, NodeId x) {
  std::vector<NodeId> out;
  for (NodeId y : store.children(x))
    if (store.member(x, y)) out.push_back(y);
  return out;
}

Slice d_close(const Slice& s) {
  std::vector<NodeId> all = s.members;
  std::vector<NodeId> queue = all;
  std::set<NodeId> seen(all.begin(), all.end());
  while (!queue.empty()) {
    NodeId x = queue.back();
    queue.pop_back();
    for (NodeId y : d_neighbors(*s.store, x))
      if (seen.insert(y).second) {
        all.push_back(y);
        queue.push_back(y);
      }
  }
  return Slice(s.store, std::move(all));
}

namespace {

FiniteStructure reduct(const Slice& s, bool with_s) {
  const Store& store = *s.store;
  FiniteStructure out(with_s ? Lang::L0 : Lang::L1, static_cast<int>(s.members.size()));
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    NodeId x = s.members[i];
    for (NodeId y : store.children(x)) {
      int j = s.index_of(y);
      if (j < 0) continue;
      // y in x holds; x in y decides D.
      if (store.member(x, y)) out.add_d(static_cast<int>(i), j);
      if (with_s) out.add_s(static_cast<int>(i), j);
    }
  }
  return out;
}

}  // namespace

FiniteStructure d_graph(const Slice& s) { return reduct(s, false); }

FiniteStructure sd_graph(const Slice& s) { return reduct(s, true); }

Slice region(const Hyperset& h, const Slice& within) {
  if (h.store() != within.store) throw error("region: handle from a different store");
  if (!within.contains(h.id())) throw error("region: point not in the slice");
  const Store& store = *within.store;
  std::vector<NodeId> reached{h.id()};
  std::set<NodeId> seen{h.id()};
  for (std::size_t i = 0; i < reached.size(); ++i)
    for (NodeId y : d_neighbors(store, reached[i]))
      if (within.contains(y) && seen.insert(y).second) reached.push_back(y);
  return Slice(within.store, std::move(reached));
}

}  // namespace hyperset
