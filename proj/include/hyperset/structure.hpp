#ifndef HYPERSET_STRUCTURE_HPP
#define HYPERSET_STRUCTURE_HPP

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hyperset {

enum class Lang { L1, L0, LNBG };

std::string lang_name(Lang lang);

// Finite relational structure over {D} (L1), {S, D} (L0) or {E} (LNBG).
// Relations are kept as directed pair sets; the symmetric relations S and D
// store both orientations. add_d_raw exists for the bounded symmetry checks,
// which must range over arbitrary (possibly asymmetric) interpretations.
class FiniteStructure {
 public:
  FiniteStructure() : FiniteStructure(Lang::L1, 0) {}
  FiniteStructure(Lang lang, int n) : lang_(lang), n_(n) {}

  Lang lang() const { return lang_; }
  int size() const { return n_; }

  void add_d(int u, int v);
  void add_s(int u, int v);
  void add_e(int u, int v);
  void add_d_raw(int u, int v);  // one orientation only

  bool has_d(int u, int v) const { return d_.count({u, v}) != 0; }
  bool has_s(int u, int v) const { return s_.count({u, v}) != 0; }
  bool has_e(int u, int v) const { return e_.count({u, v}) != 0; }

  const std::set<std::pair<int, int>>& d_pairs() const { return d_; }
  const std::set<std::pair<int, int>>& s_pairs() const { return s_; }
  const std::set<std::pair<int, int>>& e_pairs() const { return e_; }

  // Undirected edge lists (u <= v), loops included.
  std::vector<std::pair<int, int>> d_edges() const;
  std::vector<std::pair<int, int>> s_edges() const;

  int d_degree(int u) const;  // distinct D-neighbors, self excluded

  // Checks the language invariants: relations over the domain, S and D
  // symmetric, D contained in S for L0, only the language's relations used.
  void validate() const;

  friend bool operator==(const FiniteStructure& a, const FiniteStructure& b) {
    return a.lang_ == b.lang_ && a.n_ == b.n_ && a.d_ == b.d_ && a.s_ == b.s_ && a.e_ == b.e_;
  }

 private:
  void check_range(int u, int v) const;

  Lang lang_;
  int n_;
  std::set<std::pair<int, int>> d_, s_, e_;
};

// Text format: `lang L1` / `vertices n` / one `D u v`, `S u v` or `E u v`
// per line, 0-based.
FiniteStructure parse_structure(std::istream& in);
FiniteStructure parse_structure(const std::string& text);
std::string print_structure(const FiniteStructure& s);
std::string to_dot(const FiniteStructure& s);

// Partition of the domain into D-connectivity classes, each sorted, classes
// ordered by smallest member.
std::vector<std::vector<int>> components(const FiniteStructure& g);

// A bijection preserving all relations of the language both ways, if any.
// Intended for small structures (backtracking search).
std::optional<std::vector<int>> is_isomorphic(const FiniteStructure& g, const FiniteStructure& h);

FiniteStructure disjoint_union(const FiniteStructure& a, const FiniteStructure& b);

}  // namespace hyperset

#endif
