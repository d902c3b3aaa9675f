#ifndef HYPERSET_FORMULA_HPP
#define HYPERSET_FORMULA_HPP

#include <memory>
#include <string>
#include <vector>

namespace hyperset {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// First-order formula over one of the three languages. And/Or are n-ary.
// Free variables and quantifier height are computed at construction.
struct Formula {
  enum class Kind { D, S, E, Eq, Not, And, Or, Implies, Exists, Forall };

  Kind kind;
  std::string v1, v2;            // atom arguments, or the bound variable (v1)
  std::vector<FormulaPtr> subs;

  std::vector<std::string> free_vars;  // sorted
  int height = 0;                      // quantifier nesting depth

  bool is_atom() const {
    return kind == Kind::D || kind == Kind::S || kind == Kind::E || kind == Kind::Eq;
  }
};

FormulaPtr f_d(const std::string& x, const std::string& y);
FormulaPtr f_s(const std::string& x, const std::string& y);
FormulaPtr f_e(const std::string& x, const std::string& y);
FormulaPtr f_eq(const std::string& x, const std::string& y);
FormulaPtr f_not(FormulaPtr a);
FormulaPtr f_and(std::vector<FormulaPtr> subs);
FormulaPtr f_or(std::vector<FormulaPtr> subs);
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr f_exists(const std::string& v, FormulaPtr body);
FormulaPtr f_forall(const std::string& v, FormulaPtr body);

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b);

// Every variable name occurring anywhere in the formula (free or bound).
std::vector<std::string> all_vars(const FormulaPtr& f);

// Surface syntax: D(x,y), S(x,y), E(x,y), x=y, !, &, |, ->, exists x. ...,
// forall x. ..., parentheses. '&' binds tighter than '|' tighter than '->';
// a quantifier scopes as far right as possible.
FormulaPtr parse_formula(const std::string& text);
std::string print_formula(const FormulaPtr& f);

}  // namespace hyperset

#endif
