#ifndef HYPERSET_FLAT_SYSTEM_HPP
#define HYPERSET_FLAT_SYSTEM_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hyperset/store.hpp"

namespace hyperset {

// A flat system of equations x = S_x with S_x a subset of the indeterminate
// names plus the bound atom names. Atoms must be well-founded unless
// allow_non_well_founded_atoms is set; solutions stay well-defined either way.
struct FlatSystem {
  std::map<std::string, Hyperset> atoms;
  std::map<std::string, std::vector<std::string>> equations;
  bool allow_non_well_founded_atoms = false;
};

// Unique solution of the system (Anti-Foundation at finite scale).
// Throws on unknown names in some S_x or on a non-well-founded atom binding.
std::map<std::string, Hyperset> solve(Store& store, const FlatSystem& sys);

// Text format, one equation per line:
//   x = { y, #0, #{#0, #1} }
// Bare names are indeterminates; '#'-prefixed literals are well-founded set
// literals (#n is the von Neumann natural n, #{...} a set of literals).
FlatSystem parse_flat_system(Store& store, std::istream& in);
FlatSystem parse_flat_system(Store& store, const std::string& text);

}  // namespace hyperset

#endif
