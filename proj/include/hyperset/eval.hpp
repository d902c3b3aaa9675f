#ifndef HYPERSET_EVAL_HPP
#define HYPERSET_EVAL_HPP

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperset/formula.hpp"
#include "hyperset/structure.hpp"

namespace hyperset {

// Satisfaction by structural recursion. Conjuncts/disjuncts are evaluated
// shallow-first with short-circuiting, and quantifier nodes are memoized per
// assignment of their free variables; a context can be reused across calls
// to share that cache (it is keyed on formula node identity).
class EvalContext {
 public:
  explicit EvalContext(const FiniteStructure& s) : s_(&s) {}

  bool eval(const FormulaPtr& f, const std::map<std::string, int>& assignment = {});

  const FiniteStructure& structure() const { return *s_; }

 private:
  struct Env;
  bool run(const Formula& f, Env& env);

  const FiniteStructure* s_;
  std::unordered_map<const Formula*, std::map<std::vector<int>, bool>> memo_;
  // evaluated roots are pinned for the context's lifetime; see eval()
  std::set<FormulaPtr> retained_;
};

bool eval(const FiniteStructure& s, const FormulaPtr& f,
          const std::map<std::string, int>& assignment = {});

}  // namespace hyperset

#endif
