#include "hyperset/logic.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "hyperset/error.hpp"

namespace hyperset {

FormulaPtr phi_n(int n, const std::string& var) {
  if (n < 1) throw error("phi_n: n must be positive");
  const std::string zp = (!var.empty() && var[0] == 'z') ? "w" : "z";
  std::vector<std::string> zs;
  for (int i = 0; i < n; ++i) zs.push_back(zp + std::to_string(i));

  std::vector<FormulaPtr> conj;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) conj.push_back(f_not(f_eq(zs[i], zs[j])));
  for (int i = 0; i < n; ++i) conj.push_back(f_d(zs[i], var));
  std::vector<FormulaPtr> cases;
  for (int i = 0; i < n; ++i) cases.push_back(f_eq(zp, zs[i]));
  conj.push_back(f_forall(zp, f_implies(f_d(zp, var), f_or(std::move(cases)))));

  FormulaPtr body = f_and(std::move(conj));
  for (int i = n - 1; i >= 0; --i) body = f_exists(zs[i], body);
  return f_and({f_not(f_d(var, var)), body});
}

std::vector<FormulaPtr> beta_fragment(const std::set<int>& a0, const std::set<int>& a1,
                                      const std::string& var) {
  for (int n : a0)
    if (a1.count(n)) throw error("beta_fragment: A0 and A1 overlap at " + std::to_string(n));
  for (int n : a0)
    if (n < 1) throw error("beta_fragment: naturals must be positive");
  for (int n : a1)
    if (n < 1) throw error("beta_fragment: naturals must be positive");

  std::vector<FormulaPtr> out;
  out.push_back(f_not(f_d(var, var)));
  for (int n : a0) {
    std::string xn = "x" + std::to_string(n);
    out.push_back(f_exists(xn, f_and({phi_n(n, xn), f_d(var, xn)})));
  }
  for (int n : a1) {
    std::string xn = "x" + std::to_string(n);
    out.push_back(f_not(f_exists(xn, f_and({phi_n(n, xn), f_d(var, xn)}))));
  }
  return out;
}

FormulaPtr symmetry_axiom() {
  return f_forall("x", f_forall("y", f_implies(f_d("x", "y"), f_d("y", "x"))));
}

bool has_symmetry_conjunct(const FormulaPtr& f) {
  auto matches = [](const FormulaPtr& g) {
    if (g->kind != Formula::Kind::Forall) return false;
    const auto& inner = g->subs[0];
    if (inner->kind != Formula::Kind::Forall) return false;
    const std::string& a = g->v1;
    const std::string& b = inner->v1;
    if (a == b) return false;
    const auto& imp = inner->subs[0];
    if (imp->kind != Formula::Kind::Implies) return false;
    const auto& lhs = imp->subs[0];
    const auto& rhs = imp->subs[1];
    return lhs->kind == Formula::Kind::D && rhs->kind == Formula::Kind::D && lhs->v1 == a &&
           lhs->v2 == b && rhs->v1 == b && rhs->v2 == a;
  };
  if (matches(f)) return true;
  if (f->kind != Formula::Kind::And) return false;
  for (const auto& c : f->subs)
    if (matches(c)) return true;
  return false;
}

PhiClass phi_syntactic(FormulaPtr f) {
  if (!f->free_vars.empty()) throw error("phi class: formula must be a sentence");
  if (!has_symmetry_conjunct(f)) {
    std::vector<FormulaPtr> conj;
    if (f->kind == Formula::Kind::And) conj = f->subs;
    else conj.push_back(f);
    conj.push_back(symmetry_axiom());
    f = f_and(std::move(conj));
  }
  return PhiClass{std::move(f), PhiClass::Evidence::Syntactic, 0};
}

PhiClass phi_checked(FormulaPtr f, int bound) {
  if (!f->free_vars.empty()) throw error("phi class: formula must be a sentence");
  if (bound < 1) throw error("phi_checked: bound must be positive");
  for (int n = 1; n <= bound; ++n) {
    const int bits = n * n;
    for (long long mask = 0; mask < (1LL << bits); ++mask) {
      FiniteStructure s(Lang::L1, n);
      int bit = 0;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v, ++bit)
          if (mask & (1LL << bit)) s.add_d_raw(u, v);
      if (!eval(s, f)) continue;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (s.has_d(u, v) && !s.has_d(v, u))
            throw error("phi_checked: sentence fails to imply symmetry (counterexample of size " +
                        std::to_string(n) + ")");
    }
  }
  return PhiClass{std::move(f), PhiClass::Evidence::Checked, bound};
}

namespace {

FormulaPtr relativize(const FormulaPtr& f, const std::string& x) {
  switch (f->kind) {
    case Formula::Kind::D:
    case Formula::Kind::S:
    case Formula::Kind::E:
    case Formula::Kind::Eq:
      return f;
    case Formula::Kind::Not:
      return f_not(relativize(f->subs[0], x));
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::vector<FormulaPtr> subs;
      for (const auto& s : f->subs) subs.push_back(relativize(s, x));
      return f->kind == Formula::Kind::And ? f_and(std::move(subs)) : f_or(std::move(subs));
    }
    case Formula::Kind::Implies:
      return f_implies(relativize(f->subs[0], x), relativize(f->subs[1], x));
    case Formula::Kind::Exists:
      return f_exists(f->v1, f_and({f_d(x, f->v1), relativize(f->subs[0], x)}));
    case Formula::Kind::Forall:
      return f_forall(f->v1, f_implies(f_d(x, f->v1), relativize(f->subs[0], x)));
  }
  throw error("mu: corrupt formula");
}

}  // namespace

FormulaPtr mu(const PhiClass& phi) {
  auto used = all_vars(phi.formula);
  std::string x = "x";
  for (int i = 0; std::binary_search(used.begin(), used.end(), x); ++i)
    x = "x" + std::to_string(i);
  FormulaPtr chi = relativize(phi.formula, x);
  return f_exists(x, f_and({f_not(f_d(x, x)), std::move(chi)}));
}

// ---------------------------------------------------------------------------
// Digraph-in-graph interpretation

FiniteStructure DigraphInterpreter::interpret(const FiniteStructure& digraph) const {
  if (digraph.lang() != Lang::LNBG) throw error("interpret: input must be an LNBG structure");
  const int n = digraph.size();
  const int m = static_cast<int>(digraph.e_pairs().size());
  FiniteStructure g(Lang::L1, 4 * n + 5 * m);
  for (int v = 0; v < n; ++v) {
    int vh = 4 * v, c1 = 4 * v + 1, c2 = 4 * v + 2, c3 = 4 * v + 3;
    g.add_d(c1, c2);
    g.add_d(c2, c3);
    g.add_d(c1, c3);
    g.add_d(vh, c1);
  }
  int k = 0;
  for (const auto& [u, v] : digraph.e_pairs()) {
    int base = 4 * n + 5 * k++;
    int e = base, lf = base + 1, ta = base + 2, ha1 = base + 3, ha2 = base + 4;
    g.add_d(e, lf);
    g.add_d(e, ta);
    g.add_d(ta, 4 * u);
    g.add_d(e, ha1);
    g.add_d(ha1, ha2);
    g.add_d(ha2, 4 * v);
  }
  return g;
}

FormulaPtr DigraphInterpreter::vertex_marker(const std::string& var) {
  auto it = vertex_cache_.find(var);
  if (it != vertex_cache_.end()) return it->second;
  const std::string a = "_va", b = "_vb", c = "_vc";
  FormulaPtr f = f_exists(
      a, f_and({f_d(var, a), f_not(f_eq(var, a)),
                f_exists(b, f_and({f_d(a, b), f_not(f_d(var, b)), f_not(f_eq(var, b)),
                                   f_not(f_eq(a, b)),
                                   f_exists(c, f_and({f_d(a, c), f_d(b, c), f_not(f_d(var, c)),
                                                      f_not(f_eq(var, c)), f_not(f_eq(a, c)),
                                                      f_not(f_eq(b, c))}))}))}));
  vertex_cache_.emplace(var, f);
  return f;
}

FormulaPtr DigraphInterpreter::edge_gadget(const std::string& u, const std::string& v) {
  auto key = std::make_pair(u, v);
  auto it = edge_cache_.find(key);
  if (it != edge_cache_.end()) return it->second;
  const std::string t = "_et", e = "_ee", l = "_el", h1 = "_eh", h2 = "_ei", w = "_ew";

  FormulaPtr innermost = f_and(
      {f_d(h1, h2), f_not(f_eq(h2, e)),
       f_forall(w, f_implies(f_d(w, h1), f_or({f_eq(w, e), f_eq(w, h2)}))), f_d(h2, v),
       f_not(f_eq(v, h1)),
       f_forall(w, f_implies(f_d(w, h2), f_or({f_eq(w, h1), f_eq(w, v)})))});
  FormulaPtr with_h1 = f_and(
      {f_d(e, h1), f_not(f_eq(h1, t)), f_not(f_eq(h1, l)),
       f_forall(w, f_implies(f_d(w, e), f_or({f_eq(w, t), f_eq(w, l), f_eq(w, h1)}))),
       f_exists(h2, innermost)});
  FormulaPtr with_l =
      f_and({f_d(e, l), f_not(f_eq(l, t)), f_forall(w, f_implies(f_d(w, l), f_eq(w, e))),
             f_exists(h1, with_h1)});
  FormulaPtr with_e =
      f_and({f_d(t, e), f_not(f_eq(e, u)), f_not(f_eq(e, t)),
             f_forall(w, f_implies(f_d(w, t), f_or({f_eq(w, u), f_eq(w, e)}))),
             f_exists(l, with_l)});
  FormulaPtr f = f_exists(t, f_and({f_d(u, t), f_not(f_eq(t, u)), f_exists(e, with_e)}));
  edge_cache_.emplace(std::move(key), f);
  return f;
}

namespace {

void check_lnbg_formula(const FormulaPtr& f) {
  if (f->kind == Formula::Kind::D || f->kind == Formula::Kind::S)
    throw error("translate: D/S atoms are not LNBG");
  if (f->is_atom()) {
    if (f->v1.rfind('_', 0) == 0 || f->v2.rfind('_', 0) == 0)
      throw error("translate: variable names starting with '_' are reserved");
    return;
  }
  if ((f->kind == Formula::Kind::Exists || f->kind == Formula::Kind::Forall) &&
      f->v1.rfind('_', 0) == 0)
    throw error("translate: variable names starting with '_' are reserved");
  for (const auto& s : f->subs) check_lnbg_formula(s);
}

}  // namespace

FormulaPtr DigraphInterpreter::translate(const FormulaPtr& theta) {
  check_lnbg_formula(theta);
  std::function<FormulaPtr(const FormulaPtr&)> rec = [&](const FormulaPtr& f) -> FormulaPtr {
    switch (f->kind) {
      case Formula::Kind::E:
        return edge_gadget(f->v1, f->v2);
      case Formula::Kind::Eq:
        return f;
      case Formula::Kind::Not:
        return f_not(rec(f->subs[0]));
      case Formula::Kind::And:
      case Formula::Kind::Or: {
        std::vector<FormulaPtr> subs;
        for (const auto& s : f->subs) subs.push_back(rec(s));
        return f->kind == Formula::Kind::And ? f_and(std::move(subs)) : f_or(std::move(subs));
      }
      case Formula::Kind::Implies:
        return f_implies(rec(f->subs[0]), rec(f->subs[1]));
      case Formula::Kind::Exists:
        return f_exists(f->v1, f_and({vertex_marker(f->v1), rec(f->subs[0])}));
      case Formula::Kind::Forall:
        return f_forall(f->v1, f_implies(vertex_marker(f->v1), rec(f->subs[0])));
      default:
        throw error("translate: unexpected atom");
    }
  };
  return rec(theta);
}

// ---------------------------------------------------------------------------
// Ehrenfeucht-Fraissé games

namespace {

struct EfGame {
  const FiniteStructure& a;
  const FiniteStructure& b;
  std::map<std::tuple<std::vector<int>, std::vector<int>, int>, bool> memo;

  bool partial_iso(const std::vector<int>& at, const std::vector<int>& bt) const {
    for (std::size_t i = 0; i < at.size(); ++i)
      for (std::size_t j = 0; j < at.size(); ++j) {
        if ((at[i] == at[j]) != (bt[i] == bt[j])) return false;
        if (a.has_d(at[i], at[j]) != b.has_d(bt[i], bt[j])) return false;
        if (a.has_s(at[i], at[j]) != b.has_s(bt[i], bt[j])) return false;
        if (a.has_e(at[i], at[j]) != b.has_e(bt[i], bt[j])) return false;
      }
    return true;
  }

  bool play(std::vector<int>& at, std::vector<int>& bt, int k) {
    if (!partial_iso(at, bt)) return false;
    if (k == 0) return true;
    auto key = std::make_tuple(at, bt, k);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;
    memo.emplace(key, true);  // placeholder against re-entry; positions never recurse into themselves

    bool ok = true;
    for (int x = 0; x < a.size() && ok; ++x) {
      bool answered = false;
      at.push_back(x);
      for (int y = 0; y < b.size() && !answered; ++y) {
        bt.push_back(y);
        answered = play(at, bt, k - 1);
        bt.pop_back();
      }
      at.pop_back();
      ok = answered;
    }
    for (int y = 0; y < b.size() && ok; ++y) {
      bool answered = false;
      bt.push_back(y);
      for (int x = 0; x < a.size() && !answered; ++x) {
        at.push_back(x);
        answered = play(at, bt, k - 1);
        at.pop_back();
      }
      bt.pop_back();
      ok = answered;
    }
    memo[std::move(key)] = ok;
    return ok;
  }
};

}  // namespace

bool ef_equiv(const FiniteStructure& a, const std::vector<int>& atuple,
              const FiniteStructure& b, const std::vector<int>& btuple, int k) {
  if (a.lang() != b.lang()) throw error("ef_equiv: language mismatch");
  if (atuple.size() != btuple.size()) throw error("ef_equiv: tuple length mismatch");
  if (k < 0) throw error("ef_equiv: negative round count");
  for (int x : atuple)
    if (x < 0 || x >= a.size()) throw error("ef_equiv: tuple element outside domain");
  for (int y : btuple)
    if (y < 0 || y >= b.size()) throw error("ef_equiv: tuple element outside domain");
  EfGame game{a, b, {}};
  std::vector<int> at = atuple, bt = btuple;
  return game.play(at, bt, k);
}

}  // namespace hyperset
