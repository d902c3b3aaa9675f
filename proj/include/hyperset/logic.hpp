#ifndef HYPERSET_LOGIC_HPP
#define HYPERSET_LOGIC_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hyperset/eval.hpp"
#include "hyperset/formula.hpp"
#include "hyperset/structure.hpp"

namespace hyperset {

// "x is a loop-free point with exactly n distinct D-neighbors", with the
// given name for the free variable. n must be positive.
FormulaPtr phi_n(int n, const std::string& var = "x");

// The finite fragment of the bouquet type: no loop at y, a D-edge to some
// n-flower for each n in a0, and no D-edge to any n-flower for n in a1.
// a0 and a1 must be disjoint sets of positive naturals.
std::vector<FormulaPtr> beta_fragment(const std::set<int>& a0, const std::set<int>& a1,
                                      const std::string& var = "y");

// An L1 sentence known to imply symmetry of D, together with the evidence.
struct PhiClass {
  enum class Evidence { Syntactic, Checked };
  FormulaPtr formula;
  Evidence evidence;
  int checked_bound = 0;
};

FormulaPtr symmetry_axiom();
bool has_symmetry_conjunct(const FormulaPtr& f);

// Conjoin the symmetry axiom unless already literally present.
PhiClass phi_syntactic(FormulaPtr f);

// Verify that f implies symmetry over every interpretation of D (symmetric
// or not) on domains of size 1..bound; throws if a counterexample exists.
PhiClass phi_checked(FormulaPtr f, int bound);

// The sentence "some loop-free point's D-neighborhood models phi", obtained
// by relativising every quantifier of phi to D(x, .) for a fresh x.
FormulaPtr mu(const PhiClass& phi);

// Uniform interpretation of digraphs in graphs. Each digraph vertex becomes
// a gadget node marked by a pendant triangle; each directed edge becomes an
// asymmetric path gadget between the two endpoint markers. Gadget
// subformulas are cached so repeated translations share AST nodes (and thus
// evaluation caches).
class DigraphInterpreter {
 public:
  FiniteStructure interpret(const FiniteStructure& digraph) const;
  FormulaPtr translate(const FormulaPtr& theta);

  FormulaPtr vertex_marker(const std::string& var);
  FormulaPtr edge_gadget(const std::string& u, const std::string& v);

 private:
  std::map<std::string, FormulaPtr> vertex_cache_;
  std::map<std::pair<std::string, std::string>, FormulaPtr> edge_cache_;
};

// Duplicator wins the k-round Ehrenfeucht-Fraissé game from the position
// (atuple, btuple), i.e. (a, atuple) and (b, btuple) are k-equivalent.
bool ef_equiv(const FiniteStructure& a, const std::vector<int>& atuple,
              const FiniteStructure& b, const std::vector<int>& btuple, int k);

}  // namespace hyperset

#endif
