#ifndef HYPERSET_STORE_HPP
#define HYPERSET_STORE_HPP

#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "hyperset/error.hpp"

namespace hyperset {

using NodeId = std::uint32_t;

// Raw membership digraph of a set: nodes 0..n-1, a distinguished point,
// and child edges (children[u] are the elements of u). Possibly cyclic.
struct Apg {
  int node_count = 0;
  std::vector<std::vector<int>> children;
  int point = 0;
};

// A graph to be interned: each node has children that are either other
// graph nodes or already-canonical store nodes.
struct RawGraph {
  std::vector<std::vector<int>> internal;
  std::vector<std::vector<NodeId>> external;

  explicit RawGraph(int n = 0) : internal(n), external(n) {}
  int size() const { return static_cast<int>(internal.size()); }
};

// Append-only table of canonical hyperset nodes. Invariants:
//  - extensionality: no two nodes have identical child sets;
//  - no node is bisimilar to any other node.
// Construction is single-writer: insertions are serialized on an internal
// mutex. Handles produced by a completed operation are immutable and may be
// read concurrently; concurrent readers are always allowed, at most one
// inserter at a time.
class Store {
 public:
  Store() = default;
  Store(const Store&) = delete;
  Store& operator=(const Store&) = delete;

  std::size_t size() const { return children_.size(); }

  const std::vector<NodeId>& children(NodeId id) const;

  // x in elements(y)
  bool member(NodeId x, NodeId y) const;

  bool well_founded(NodeId id) const;

  // Foundational rank; throws on a non-well-founded node.
  int rank(NodeId id) const;

  // Canonical node for the given child set (children must be canonical).
  NodeId make_set(std::vector<NodeId> kids);

  // von Neumann natural n.
  NodeId hf_nat(unsigned n);

  // Intern a raw graph, collapsing by maximal bisimulation and sharing with
  // existing store nodes. Returns the canonical node for each graph node.
  std::vector<NodeId> intern(const RawGraph& g);

  // Canonicalize an accessible pointed graph. Rejects graphs where some
  // declared node is unreachable from the point or a child is undeclared.
  NodeId canonicalize(const Apg& g);

 private:
  NodeId make_set_unlocked(std::vector<NodeId> kids);
  NodeId append_node(std::vector<NodeId> kids, bool cyclic);
  std::vector<NodeId> intern_unlocked(const RawGraph& g);

  std::deque<std::vector<NodeId>> children_;
  std::deque<std::int8_t> wf_;
  std::deque<std::int32_t> rank_;
  std::map<std::vector<NodeId>, NodeId> index_;
  // canonical encoding of a cyclic strongly connected cluster -> its nodes
  std::map<std::string, std::vector<NodeId>> scc_index_;
  std::vector<NodeId> nat_cache_;
  std::mutex write_mutex_;
};

// Lightweight handle to a canonical node. Two handles into the same store
// are equal iff their node ids are equal.
class Hyperset {
 public:
  Hyperset() = default;
  Hyperset(Store* store, NodeId id) : store_(store), id_(id) {}

  Store* store() const { return store_; }
  NodeId id() const { return id_; }
  bool valid() const { return store_ != nullptr; }

  std::vector<Hyperset> elements() const;
  bool well_founded() const { return store_->well_founded(id_); }
  int rank() const { return store_->rank(id_); }

  friend bool operator==(const Hyperset& a, const Hyperset& b) {
    return a.store_ == b.store_ && a.id_ == b.id_;
  }
  friend bool operator!=(const Hyperset& a, const Hyperset& b) { return !(a == b); }
  friend bool operator<(const Hyperset& a, const Hyperset& b) {
    return a.store_ == b.store_ ? a.id_ < b.id_ : a.store_ < b.store_;
  }

 private:
  Store* store_ = nullptr;
  NodeId id_ = 0;
};

// true iff x is an element of y; both handles must share a store.
bool member(const Hyperset& x, const Hyperset& y);

Hyperset hf_encode(Store& store, unsigned n);

}  // namespace hyperset

#endif
