#ifndef HYPERSET_DUMP_HPP
#define HYPERSET_DUMP_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hyperset/store.hpp"

namespace hyperset {

// Canonical dump of the hereditary closure of a set of named roots:
//
//   x -> 3
//   0: {}
//   1: {0}
//   3: {0 1}
//
// Node numbering is deterministic: nodes are listed by (condensation
// stratum, child list, insertion id) and renumbered 0..n-1, so repeated runs
// on the same input produce byte-identical output.
struct Dump {
  std::vector<std::pair<std::string, NodeId>> roots;
};

std::string write_dump(const Store& store, const std::vector<std::pair<std::string, NodeId>>& roots);

// Parse a dump (or anything in its shape) and intern it into `store`.
// Returns the named roots and, through `all_nodes`, every listed node.
std::map<std::string, Hyperset> parse_dump(Store& store, std::istream& in,
                                           std::vector<NodeId>* all_nodes = nullptr);
std::map<std::string, Hyperset> parse_dump(Store& store, const std::string& text,
                                           std::vector<NodeId>* all_nodes = nullptr);

}  // namespace hyperset

#endif
