#ifndef HYPERSET_CONSTRUCTIONS_HPP
#define HYPERSET_CONSTRUCTIONS_HPP

#include <map>
#include <set>
#include <vector>

#include "hyperset/slice.hpp"
#include "hyperset/store.hpp"
#include "hyperset/structure.hpp"

namespace hyperset {

// Graphs are L1 structures: D is the (symmetric, loop-allowed) edge relation.

// Solve { x_i = {i} u {x_j : R(i,j)} }. The result is injective, its D-graph
// is isomorphic to g via the returned map, and its image is D-closed in the
// whole store.
std::vector<Hyperset> embed_graph(Store& store, const FiniteStructure& g);

// The n-flower a = {{a, i} : i < n}: a loop-free apex with exactly n
// D-neighbors (its petals). n must be positive.
Hyperset flower(Store& store, int n);

// A loop-free point whose D-neighbors are exactly one n-flower apex per
// n in a; built by embedding a star of flowers.
Hyperset bouquet(Store& store, const std::set<int>& a);

// Membership twisted by a finite-support involution pi of canonical nodes:
// x in_N y  iff  x in pi(y).
class PermutedMembership {
 public:
  PermutedMembership(Store* store, std::map<NodeId, NodeId> swaps);

  Store* store() const { return store_; }
  NodeId pi(NodeId id) const;
  bool fixes(NodeId id) const { return swaps_.find(id) == swaps_.end(); }

  std::vector<NodeId> elements_n(NodeId y) const { return store_->children(pi(y)); }
  bool member_n(NodeId x, NodeId y) const { return store_->member(x, pi(y)); }
  bool d_n(NodeId x, NodeId y) const { return member_n(x, y) && member_n(y, x); }

 private:
  Store* store_;
  std::map<NodeId, NodeId> swaps_;
};

struct RiegerModel {
  PermutedMembership membership;
  std::vector<NodeId> a;  // a_i = n \ {i}, the planted vertices
  std::vector<NodeId> b;  // b_i = {a_j : R(j,i)} u {tag_i}
};

// Plant g as the D-graph of {a_i} in a permutation model: pi swaps a_i with
// b_i and fixes everything else. g must have >= 2 vertices and no isolated
// vertices. Each b_i carries a distinct tag so that the swaps are
// well-defined even when two vertices share a neighborhood.
RiegerModel rieger(Store& store, const FiniteStructure& g);

// D_N-graph of the given members under a permuted membership (domain indexed
// by member order).
FiniteStructure permuted_d_graph(const PermutedMembership& pm, const std::vector<NodeId>& members);

// All hereditary children of the roots, roots included; sorted, unique.
std::vector<NodeId> hereditary_closure(const Store& store, const std::vector<NodeId>& roots);

// Every well-founded store node of rank <= bound.
std::vector<NodeId> rank_bounded_nodes(const Store& store, int bound);

// A radius-bounded one-center ball: an L0 structure whose every vertex lies
// within D-distance radius of the center.
struct BallSpec {
  FiniteStructure structure;
  int center = 0;
  int radius = 0;

  void validate() const;
};

// k fresh tags satisfying the grafting conditions against anything currently
// in the store: singletons {m} of naturals m strictly above every rank in
// the store, so they are pairwise distinct, mutually non-membered, and
// hereditarily absent from every existing node.
std::vector<Hyperset> fresh_tags(Store& store, int k);

// Solve { x_d = {h_d} u P_d u Q_d : d in ball }, where P_d are the
// D-neighbors of d inside the ball and Q_d = s_targets[d] prescribes
// S-edges into the target slice. Checks the tag conditions:
//   H1  h_d0 not in h_d1 (all pairs, including d0 = d1);
//   H2  tags pairwise distinct;
//   H3  h_d not a member of the target slice;
//   H4  h_d not an element of a member;
//   H5  h_d not an element of an element of a member.
std::vector<Hyperset> graft_ball(Store& store, const BallSpec& src,
                                 const std::vector<Hyperset>& tags,
                                 const std::map<int, std::vector<Hyperset>>& s_targets,
                                 const Slice& target);

}  // namespace hyperset

#endif
