#include "hyperset/eval.hpp"

#include <algorithm>

#include "hyperset/error.hpp"

namespace hyperset {

struct EvalContext::Env {
  std::vector<std::pair<std::string, int>> frames;

  int lookup(const std::string& v) const {
    for (auto it = frames.rbegin(); it != frames.rend(); ++it)
      if (it->first == v) return it->second;
    throw error("eval: unbound variable '" + v + "'");
  }
};

bool EvalContext::run(const Formula& f, Env& env) {
  switch (f.kind) {
    case Formula::Kind::D:
      if (s_->lang() == Lang::LNBG) throw error("eval: D atom on an LNBG structure");
      return s_->has_d(env.lookup(f.v1), env.lookup(f.v2));
    case Formula::Kind::S:
      if (s_->lang() != Lang::L0) throw error("eval: S atom outside L0");
      return s_->has_s(env.lookup(f.v1), env.lookup(f.v2));
    case Formula::Kind::E:
      if (s_->lang() != Lang::LNBG) throw error("eval: E atom outside LNBG");
      return s_->has_e(env.lookup(f.v1), env.lookup(f.v2));
    case Formula::Kind::Eq:
      return env.lookup(f.v1) == env.lookup(f.v2);
    case Formula::Kind::Not:
      return !run(*f.subs[0], env);
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      const bool is_and = f.kind == Formula::Kind::And;
      // Cheap (shallow) members first; order is semantically irrelevant.
      std::vector<const Formula*> order;
      order.reserve(f.subs.size());
      for (const auto& s : f.subs) order.push_back(s.get());
      std::stable_sort(order.begin(), order.end(),
                       [](const Formula* a, const Formula* b) { return a->height < b->height; });
      for (const Formula* s : order) {
        bool v = run(*s, env);
        if (is_and && !v) return false;
        if (!is_and && v) return true;
      }
      return is_and;
    }
    case Formula::Kind::Implies:
      if (!run(*f.subs[0], env)) return true;
      return run(*f.subs[1], env);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      std::vector<int> key;
      key.reserve(f.free_vars.size());
      for (const auto& v : f.free_vars) key.push_back(env.lookup(v));
      auto& cache = memo_[&f];
      auto hit = cache.find(key);
      if (hit != cache.end()) return hit->second;

      const bool is_exists = f.kind == Formula::Kind::Exists;
      bool result = !is_exists;
      env.frames.emplace_back(f.v1, 0);
      for (int u = 0; u < s_->size(); ++u) {
        env.frames.back().second = u;
        bool v = run(*f.subs[0], env);
        if (v == is_exists) {
          result = is_exists;
          break;
        }
      }
      env.frames.pop_back();
      cache.emplace(std::move(key), result);
      return result;
    }
  }
  throw error("eval: corrupt formula");
}

bool EvalContext::eval(const FormulaPtr& f, const std::map<std::string, int>& assignment) {
  // The memo is keyed on node addresses, so every evaluated formula must stay
  // alive as long as the context does: a freed node's address could otherwise
  // be reused by an unrelated formula and hit stale cache entries.
  retained_.insert(f);
  Env env;
  for (const auto& v : f->free_vars) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw error("eval: no assignment for free variable '" + v + "'");
    if (it->second < 0 || it->second >= s_->size())
      throw error("eval: assignment for '" + v + "' outside the domain");
    env.frames.emplace_back(v, it->second);
  }
  return run(*f, env);
}

bool eval(const FiniteStructure& s, const FormulaPtr& f,
          const std::map<std::string, int>& assignment) {
  EvalContext ctx(s);
  return ctx.eval(f, assignment);
}

}  // namespace hyperset
