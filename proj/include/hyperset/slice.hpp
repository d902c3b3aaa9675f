#ifndef HYPERSET_SLICE_HPP
#define HYPERSET_SLICE_HPP

#include <vector>

#include "hyperset/store.hpp"
#include "hyperset/structure.hpp"

namespace hyperset {

// A finite set of hypersets from one store; the finite-scale stand-in for
// the extension of a set. Members are kept sorted and unique.
struct Slice {
  Store* store = nullptr;
  std::vector<NodeId> members;

  Slice() = default;
  Slice(Store* s, std::vector<NodeId> m);

  bool contains(NodeId id) const;
  int index_of(NodeId id) const;  // -1 if absent
};

Slice make_slice(Store& store, const std::vector<Hyperset>& members);

// Double-membership neighbors of x in the whole store: { y in x : x in y }.
std::vector<NodeId> d_neighbors(const Store& store, NodeId x);

// Saturate a slice under D-neighbors. Terminates because the hereditary
// universe in the store is finite.
Slice d_close(const Slice& s);

// Reduct to {D}: domain indexed by member order, D(x,y) iff x in y and y in x.
FiniteStructure d_graph(const Slice& s);

// Reduct to {S,D}: as d_graph plus S(x,y) iff x in y or y in x.
FiniteStructure sd_graph(const Slice& s);

// D-connected component of h inside the slice. The caller guarantees the
// slice is D-closed enough for this to be the transitive closure under D.
Slice region(const Hyperset& h, const Slice& within);

}  // namespace hyperset

#endif
