// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is independent; stated time budgets are enforced.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperset/constructions.hpp"
#include "hyperset/eval.hpp"
#include "hyperset/flat_system.hpp"
#include "hyperset/formula.hpp"
#include "hyperset/logic.hpp"
#include "hyperset/slice.hpp"
#include "hyperset/store.hpp"
#include "hyperset/structure.hpp"
#include "oracles.hpp"

using namespace hyperset;

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

// ---------------------------------------------------------------------------
// Shared helpers

std::set<std::pair<int, int>> edge_set(const std::vector<std::pair<int, int>>& edges) {
  return {edges.begin(), edges.end()};
}

std::pair<int, int> e(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

FiniteStructure induced(const FiniteStructure& g, const std::vector<int>& verts) {
  FiniteStructure h(g.lang(), static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i; j < verts.size(); ++j)
      if (g.has_d(verts[i], verts[j])) h.add_d(static_cast<int>(i), static_cast<int>(j));
  return h;
}

// All L1 graphs (loops allowed) on 1..max_n vertices, one representative per
// isomorphism class: a labeled graph is kept iff its edge bitmask is minimal
// over all vertex permutations.
std::vector<FiniteStructure> graph_reps(int max_n) {
  std::vector<FiniteStructure> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> slots;
    std::vector<std::vector<int>> idx(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        idx[i][j] = idx[j][i] = static_cast<int>(slots.size());
        slots.emplace_back(i, j);
      }
    std::vector<int> perm(n);
    for (long long mask = 0; mask < (1LL << slots.size()); ++mask) {
      std::iota(perm.begin(), perm.end(), 0);
      bool minimal = true;
      do {
        long long pm = 0;
        for (std::size_t s = 0; s < slots.size(); ++s)
          if (mask & (1LL << s)) pm |= 1LL << idx[perm[slots[s].first]][perm[slots[s].second]];
        if (pm < mask) {
          minimal = false;
          break;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!minimal) continue;
      FiniteStructure g(Lang::L1, n);
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask & (1LL << s)) g.add_d(slots[s].first, slots[s].second);
      out.push_back(std::move(g));
    }
  }
  return out;
}

// Random boolean combination of (possibly negated) literals over `atoms`.
FormulaPtr random_comb(std::mt19937& rng, const std::vector<FormulaPtr>& atoms, int size) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(atoms.size()) - 1);
  if (size <= 1) {
    FormulaPtr lit = atoms[pick(rng)];
    return std::uniform_int_distribution<int>(0, 1)(rng) ? f_not(lit) : lit;
  }
  int left = std::uniform_int_distribution<int>(1, size - 1)(rng);
  FormulaPtr a = random_comb(rng, atoms, left);
  FormulaPtr b = random_comb(rng, atoms, size - left);
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: return f_and({a, b});
    case 1: return f_or({a, b});
    case 2: return f_implies(a, b);
    default: return f_not(f_and({a, b}));
  }
}

// Random closed formula Q1 u. Q2 v. <combination>, quantifier rank 2.
FormulaPtr random_sentence(std::mt19937& rng, const std::vector<FormulaPtr>& atoms) {
  FormulaPtr body = random_comb(rng, atoms, 5);
  body = std::uniform_int_distribution<int>(0, 1)(rng) ? f_exists("v", body) : f_forall("v", body);
  return std::uniform_int_distribution<int>(0, 1)(rng) ? f_exists("u", body) : f_forall("u", body);
}

// ---------------------------------------------------------------------------
// Criterion 1: the two displayed systems and their S/D reducts.

void criterion_figure1() {
  Store store;
  auto sol = solve(store, parse_flat_system(store, "x = { y, #0 }\ny = { x, #{#0} }"));
  Hyperset a = sol.at("x"), b = sol.at("y");
  Hyperset zero = hf_encode(store, 0), one = hf_encode(store, 1);

  Slice left = make_slice(store, {a, b, zero, one});
  FiniteStructure sd = sd_graph(left);
  int ia = left.index_of(a.id()), ib = left.index_of(b.id());
  int i0 = left.index_of(zero.id()), i1 = left.index_of(one.id());
  require(edge_set(sd.s_edges()) ==
              std::set<std::pair<int, int>>{e(ia, ib), e(i0, ia), e(i0, i1), e(i1, ib)},
          "left slice: S-edges differ from the figure");
  require(edge_set(sd.d_edges()) == std::set<std::pair<int, int>>{e(ia, ib)},
          "left slice: D-edges differ from the figure");
  require(edge_set(d_graph(left).d_edges()) == std::set<std::pair<int, int>>{e(ia, ib)},
          "left slice: d_graph differs from the figure");

  Hyperset c = solve(store, parse_flat_system(store, "x = { x, #0, #{#0} }")).at("x");
  Slice right = make_slice(store, {c, zero, one});
  FiniteStructure sdr = sd_graph(right);
  int ic = right.index_of(c.id());
  int j0 = right.index_of(zero.id()), j1 = right.index_of(one.id());
  require(edge_set(sdr.s_edges()) ==
              std::set<std::pair<int, int>>{e(ic, ic), e(ic, j0), e(ic, j1), e(j0, j1)},
          "right slice: S-edges differ from the figure");
  require(edge_set(sdr.d_edges()) == std::set<std::pair<int, int>>{e(ic, ic)},
          "right slice: D-edges differ from the figure");
}

// ---------------------------------------------------------------------------
// Criterion 2: permutation invariance and agreement with the bisimulation
// fixpoint oracle.

void criterion_canonicality() {
  std::mt19937 rng(20260823);
  Store store;
  for (int trial = 0; trial < 1000; ++trial) {
    FlatSystem sys = oracles::random_flat_system(store, rng, 6, 2);
    auto sol = solve(store, sys);

    std::vector<std::string> names;
    for (const auto& [name, rhs] : sys.equations) names.push_back(name);
    std::vector<std::string> image = names;
    std::shuffle(image.begin(), image.end(), rng);
    std::map<std::string, std::string> sigma;
    for (std::size_t i = 0; i < names.size(); ++i) sigma[names[i]] = image[i];

    FlatSystem permuted;
    permuted.atoms = sys.atoms;
    for (const auto& [name, rhs] : sys.equations) {
      std::vector<std::string> prhs;
      for (const std::string& r : rhs) {
        auto it = sigma.find(r);
        prhs.push_back(it == sigma.end() ? r : it->second);
      }
      permuted.equations[sigma.at(name)] = std::move(prhs);
    }
    auto psol = solve(store, permuted);
    for (const std::string& name : names)
      require(psol.at(sigma.at(name)).id() == sol.at(name).id(),
              "solution changed under equation permutation");
  }

  Store store2;
  int agree_eq = 0, agree_ne = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Apg g = oracles::random_apg(rng, 8);
    Apg h = oracles::random_apg(rng, 8);
    bool canon = store2.canonicalize(g) == store2.canonicalize(h);
    bool oracle = oracles::bisimilar(g, h);
    require(canon == oracle, "canonical equality disagrees with the bisimulation oracle");
    (canon ? agree_eq : agree_ne)++;
  }
  require(agree_eq > 0 && agree_ne > 0, "degenerate APG sample");
}

// ---------------------------------------------------------------------------
// Criterion 3: embedding postconditions, exhaustive up to isomorphism.

void check_embedding(Store& store, const FiniteStructure& g, const std::vector<Hyperset>& img) {
  const int n = g.size();
  std::set<NodeId> ids;
  for (const auto& h : img) ids.insert(h.id());
  require(static_cast<int>(ids.size()) == n, "embedding is not injective");
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      bool d = store.member(img[i].id(), img[j].id()) && store.member(img[j].id(), img[i].id());
      require(d == g.has_d(i, j), "image D-graph differs from the input graph");
    }
  for (int i = 0; i < n; ++i)
    for (NodeId y : d_neighbors(store, img[i].id()))
      require(ids.count(y) != 0, "image is not D-closed");
}

void criterion_embedding() {
  for (const FiniteStructure& g : graph_reps(5)) {
    Store store;
    check_embedding(store, g, embed_graph(store, g));
  }
}

// ---------------------------------------------------------------------------
// Criterion 4: components theorem at desk scale.

void criterion_components() {
  for (const FiniteStructure& g : graph_reps(5)) {
    if (components(g).size() != 1) continue;

    // g occurs as a D-component of an embedded slice with well-founded padding
    {
      Store store;
      std::vector<Hyperset> members = embed_graph(store, g);
      for (unsigned i = 0; i < 3; ++i) members.push_back(hf_encode(store, i));
      Slice closed = d_close(make_slice(store, members));
      FiniteStructure d = d_graph(closed);
      bool found = false;
      for (const auto& cls : components(d))
        if (is_isomorphic(induced(d, cls), g).has_value()) found = true;
      require(found, "connected graph missing from the embedded slice's D-components");
    }

    // k disjoint copies yield exactly k isomorphic components
    for (int k = 2; k <= 4; ++k) {
      FiniteStructure multi = g;
      for (int c = 1; c < k; ++c) multi = disjoint_union(multi, g);
      Store store;
      std::vector<Hyperset> img = embed_graph(store, multi);
      FiniteStructure d = d_graph(make_slice(store, img));
      auto cls = components(d);
      require(static_cast<int>(cls.size()) == k, "wrong number of D-components for k copies");
      for (const auto& c : cls)
        require(is_isomorphic(induced(d, c), g).has_value(),
                "a D-component is not isomorphic to the copied graph");
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 5: flowers, bouquets, pairwise contradiction of the beta types.

std::vector<std::set<int>> small_subsets() {
  std::vector<std::set<int>> out;
  for (int mask = 0; mask < 32; ++mask) {
    std::set<int> a;
    for (int n = 1; n <= 5; ++n)
      if (mask & (1 << (n - 1))) a.insert(n);
    if (a.size() <= 3) out.push_back(std::move(a));
  }
  return out;
}

void criterion_flowers() {
  Store store;
  std::vector<FormulaPtr> phis;
  for (int n = 1; n <= 7; ++n) phis.push_back(phi_n(n));
  for (int n = 1; n <= 7; ++n) {
    Hyperset f = flower(store, n);
    Slice closed = d_close(make_slice(store, {f}));
    FiniteStructure g = d_graph(closed);
    EvalContext ctx(g);
    int apex = closed.index_of(f.id());
    for (int m = 1; m <= 7; ++m)
      require(ctx.eval(phis[m - 1], {{"x", apex}}) == (m == n),
              "phi_m at flower(n) has the wrong truth value");
  }

  std::vector<std::set<int>> subsets = small_subsets();
  struct BouquetSlice {
    FiniteStructure graph;
    int apex;
    std::unique_ptr<EvalContext> ctx;
  };
  std::map<std::set<int>, BouquetSlice> pool;
  for (const auto& a : subsets) {
    Hyperset b = bouquet(store, a);
    Slice closed = d_close(make_slice(store, {b}));
    BouquetSlice& bs = pool[a];  // build in place: the context points at bs.graph
    bs.graph = d_graph(closed);
    bs.apex = closed.index_of(b.id());
    bs.ctx = std::make_unique<EvalContext>(bs.graph);
  }

  for (const auto& a0 : subsets)
    for (const auto& a1 : subsets) {
      bool disjoint = true;
      for (int n : a1) disjoint = disjoint && a0.count(n) == 0;
      if (!disjoint) continue;
      BouquetSlice& bs = pool.at(a0);
      for (const FormulaPtr& f : beta_fragment(a0, a1))
        require(bs.ctx->eval(f, {{"y", bs.apex}}),
                "beta fragment not satisfied at the matching bouquet");
    }

  for (const auto& a : subsets)
    for (const auto& b : subsets) {
      if (a == b) continue;
      std::set<int> b_minus_a, a_minus_b;
      for (int n : b)
        if (!a.count(n)) b_minus_a.insert(n);
      for (int n : a)
        if (!b.count(n)) a_minus_b.insert(n);
      auto frag_a = beta_fragment(a, b_minus_a);
      auto frag_b = beta_fragment(b, a_minus_b);
      for (auto& [key, bs] : pool)
        for (int p = 0; p < bs.graph.size(); ++p) {
          bool both = true;
          for (const FormulaPtr& f : frag_a) both = both && bs.ctx->eval(f, {{"y", p}});
          for (const FormulaPtr& f : frag_b) both = both && bs.ctx->eval(f, {{"y", p}});
          require(!both, "distinct beta fragments jointly satisfied at one point");
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 6: Rieger permutation models, no extraneous D_N-edges.

void criterion_rieger() {
  long long pairs_aa = 0, pairs_ab = 0, pairs_bb = 0;
  for (const FiniteStructure& g : graph_reps(4)) {
    const int n = g.size();
    if (n < 2) continue;
    bool isolated = false;
    for (int i = 0; i < n; ++i) {
      bool touched = false;
      for (int j = 0; j < n; ++j) touched = touched || g.has_d(i, j);
      isolated = isolated || !touched;
    }
    if (isolated) continue;

    Store store;
    RiegerModel m = rieger(store, g);
    require(permuted_d_graph(m.membership, m.a) == g,
            "D_N restricted to the a_i is not the input graph");

    int bound = 0;
    for (NodeId b : m.b) bound = std::max(bound, store.rank(b));
    std::vector<NodeId> tracked = m.a;
    tracked.insert(tracked.end(), m.b.begin(), m.b.end());
    std::vector<NodeId> nodes = hereditary_closure(store, tracked);
    for (NodeId id : rank_bounded_nodes(store, bound + 1)) nodes.push_back(id);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

    std::map<NodeId, int> a_index, b_index;
    for (int i = 0; i < n; ++i) a_index[m.a[i]] = i;
    for (int i = 0; i < n; ++i) b_index[m.b[i]] = i;
    for (std::size_t x = 0; x < nodes.size(); ++x)
      for (std::size_t y = x; y < nodes.size(); ++y) {
        bool xa = a_index.count(nodes[x]), ya = a_index.count(nodes[y]);
        bool xb = b_index.count(nodes[x]), yb = b_index.count(nodes[y]);
        if (xa && ya) ++pairs_aa;
        if ((xa && yb) || (xb && ya)) ++pairs_ab;
        if (xb && yb) ++pairs_bb;
        if (!m.membership.d_n(nodes[x], nodes[y])) continue;
        require(xa && ya, "extraneous D_N-edge outside the planted a_i");
        require(g.has_d(a_index.at(nodes[x]), a_index.at(nodes[y])),
                "D_N-edge between a_i not matching the input graph");
      }
  }
  require(pairs_aa > 0 && pairs_ab > 0 && pairs_bb > 0,
          "not all proof cases exercised by the slice check");
}

// ---------------------------------------------------------------------------
// Criterion 7: the forward direction of the mu-lemma.

FiniteStructure apex_augment(const FiniteStructure& g) {
  const int n = g.size();
  FiniteStructure gp(Lang::L1, n + 1);
  for (auto [u, v] : g.d_pairs()) gp.add_d(u, v);
  for (int i = 0; i < n; ++i) gp.add_d(n, i);
  return gp;
}

FiniteStructure embedded_d_graph(const FiniteStructure& g) {
  Store store;
  std::vector<Hyperset> img = embed_graph(store, g);
  return d_graph(make_slice(store, img));
}

void criterion_mu() {
  std::mt19937 rng(71);
  std::vector<FormulaPtr> atoms = {f_d("u", "u"), f_d("u", "v"), f_d("v", "v"), f_eq("u", "v")};
  std::vector<FiniteStructure> models4 = oracles::all_l1_structures(4);

  // negative side: slices whose loop-free points all have <= 4 D-neighbors
  std::vector<FiniteStructure> witnessless_pool;
  for (const FiniteStructure& g : oracles::all_l1_structures(3))
    witnessless_pool.push_back(embedded_d_graph(apex_augment(g)));

  int with_model = 0, without_model = 0, attempts = 0;
  while ((with_model < 50 || without_model < 50) && attempts < 20000) {
    ++attempts;
    PhiClass phi = phi_syntactic(random_sentence(rng, atoms));
    FormulaPtr mu_phi = mu(phi);

    const FiniteStructure* model = nullptr;
    for (const FiniteStructure& g : models4)
      if (eval(g, phi.formula)) {
        model = &g;
        break;
      }
    if (model != nullptr) {
      if (with_model >= 50) continue;
      ++with_model;
      FiniteStructure slice = embedded_d_graph(apex_augment(*model));
      require(eval(slice, mu_phi), "mu(phi) fails on the apex-augmented embedding of a model");
    } else {
      if (without_model >= 50) continue;
      ++without_model;
      for (const FiniteStructure& slice : witnessless_pool)
        require(!eval(slice, mu_phi), "mu(phi) true on a slice without a witness");
    }
  }
  require(with_model == 50 && without_model == 50, "sentence generation quota not reached");
}

// ---------------------------------------------------------------------------
// Criterion 8: EF engine vs the sentence oracle, disjoint-union lemma.

FiniteStructure permuted_copy(const FiniteStructure& g, std::mt19937& rng) {
  std::vector<int> perm(g.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  FiniteStructure h(Lang::L1, g.size());
  for (auto [u, v] : g.d_pairs()) h.add_d(perm[u], perm[v]);
  return h;
}

void criterion_ef() {
  oracles::EfSentenceOracle oracle(oracles::all_l1_structures(3));
  const auto& pool = oracle.pool();
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j)
      for (int k = 1; k <= 2; ++k)
        require(ef_equiv(pool[i], {}, pool[j], {}, k) ==
                    oracle.equiv(static_cast<int>(i), static_cast<int>(j), k),
                "ef_equiv disagrees with the sentence oracle");

  std::mt19937 rng(808);
  int nonvacuous = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int k = std::uniform_int_distribution<int>(1, 3)(rng);
    FiniteStructure a = oracles::random_graph(rng, 1, 4);
    FiniteStructure b = std::uniform_int_distribution<int>(0, 1)(rng)
                            ? permuted_copy(a, rng)
                            : oracles::random_graph(rng, 1, 4);
    FiniteStructure c = oracles::random_graph(rng, 1, 4);
    FiniteStructure d = std::uniform_int_distribution<int>(0, 1)(rng)
                            ? permuted_copy(c, rng)
                            : oracles::random_graph(rng, 1, 4);
    if (!ef_equiv(a, {}, b, {}, k) || !ef_equiv(c, {}, d, {}, k)) continue;
    ++nonvacuous;
    require(ef_equiv(disjoint_union(a, c), {}, disjoint_union(b, d), {}, k),
            "disjoint unions of k-equivalent pairs are not k-equivalent");
  }
  require(nonvacuous >= 100, "too few quadruples satisfied the premise");
}

// ---------------------------------------------------------------------------
// Criterion 9: graft_ball on random single-center balls.

BallSpec random_ball(std::mt19937& rng) {
  BallSpec spec;
  int radius = std::uniform_int_distribution<int>(0, 2)(rng);
  int n = radius == 0 ? 1 : std::uniform_int_distribution<int>(1, 6)(rng);
  spec.structure = FiniteStructure(Lang::L0, n);
  spec.center = 0;
  spec.radius = radius;
  auto link = [&](int u, int v) {
    spec.structure.add_d(u, v);
    spec.structure.add_s(u, v);
  };
  std::vector<int> dist(n, 0);
  for (int i = 1; i < n; ++i) {
    std::vector<int> eligible;
    for (int j = 0; j < i; ++j)
      if (dist[j] < radius) eligible.push_back(j);
    int parent = eligible[std::uniform_int_distribution<int>(
        0, static_cast<int>(eligible.size()) - 1)(rng)];
    dist[i] = dist[parent] + 1;
    link(parent, i);
  }
  std::uniform_int_distribution<int> pct(0, 99);
  for (int i = 0; i < n; ++i) {
    if (pct(rng) < 20) link(i, i);
    for (int j = i + 1; j < n; ++j)
      if (pct(rng) < 25) link(i, j);  // extra edges only shorten distances
  }
  return spec;
}

void criterion_graft() {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Store store;
    auto sol = solve(store, parse_flat_system(store, "x = { y, #0 }\ny = { x, #{#0} }"));
    Hyperset omega(&store, solve(store, parse_flat_system(store, "x = { x }")).at("x").id());
    std::vector<Hyperset> candidates = {
        sol.at("x"), sol.at("y"), omega, hf_encode(store, 3),
        Hyperset(&store, store.make_set({store.hf_nat(1), store.hf_nat(3)}))};
    std::vector<Hyperset> chosen;
    for (const Hyperset& c : candidates)
      if (std::uniform_int_distribution<int>(0, 1)(rng)) chosen.push_back(c);
    if (chosen.empty()) chosen.push_back(candidates[0]);
    Slice target = make_slice(store, chosen);

    BallSpec spec = random_ball(rng);
    const int n = spec.structure.size();
    std::vector<Hyperset> tags = fresh_tags(store, n);
    std::map<int, std::vector<Hyperset>> s_targets;
    for (int d = 0; d < n; ++d)
      if (std::uniform_int_distribution<int>(0, 99)(rng) < 30) {
        std::set<Hyperset> qs;
        int cnt = std::uniform_int_distribution<int>(1, 2)(rng);
        for (int c = 0; c < cnt; ++c)
          qs.insert(chosen[std::uniform_int_distribution<int>(
              0, static_cast<int>(chosen.size()) - 1)(rng)]);
        s_targets[d] = {qs.begin(), qs.end()};
      }

    std::vector<Hyperset> img = graft_ball(store, spec, tags, s_targets, target);

    std::set<NodeId> ids;
    for (const Hyperset& h : img) ids.insert(h.id());
    require(static_cast<int>(ids.size()) == n, "graft image is not injective");
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        bool d = store.member(img[i].id(), img[j].id()) && store.member(img[j].id(), img[i].id());
        require(d == spec.structure.has_d(i, j), "graft image D-graph differs from the ball");
      }
    for (int d = 0; d < n; ++d) {
      // children must be exactly P_d, the tag, and the prescribed S-targets
      std::set<NodeId> expect{tags[d].id()};
      for (int x = 0; x < n; ++x)
        if (spec.structure.has_d(d, x)) expect.insert(img[x].id());
      auto it = s_targets.find(d);
      if (it != s_targets.end())
        for (const Hyperset& q : it->second) expect.insert(q.id());
      const auto& kids = store.children(img[d].id());
      require(std::set<NodeId>(kids.begin(), kids.end()) == expect,
              "graft image children differ from the prescription");
      for (NodeId q : target.members)
        require(!store.member(img[d].id(), q), "a D/S-edge crosses from the image to the target");
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 10: interpretation correctness on all small digraphs.

void criterion_interpretation() {
  std::vector<FiniteStructure> digraphs;
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) slots.emplace_back(i, j);
    for (long long mask = 0; mask < (1LL << slots.size()); ++mask) {
      FiniteStructure d(Lang::LNBG, n);
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask & (1LL << s)) d.add_e(slots[s].first, slots[s].second);
      digraphs.push_back(std::move(d));
    }
  }

  std::mt19937 rng(1010);
  std::vector<FormulaPtr> atoms = {f_e("u", "u"), f_e("u", "v"), f_e("v", "u"), f_e("v", "v"),
                                   f_eq("u", "v")};
  DigraphInterpreter interp;
  std::vector<FormulaPtr> thetas, translated;
  for (int s = 0; s < 50; ++s) {
    FormulaPtr theta = random_sentence(rng, atoms);
    thetas.push_back(theta);
    translated.push_back(interp.translate(theta));
  }

  for (const FiniteStructure& d : digraphs) {
    FiniteStructure gadget = interp.interpret(d);
    EvalContext cd(d), cg(gadget);
    for (std::size_t s = 0; s < thetas.size(); ++s)
      require(cd.eval(thetas[s]) == cg.eval(translated[s]),
              "translated sentence disagrees with the direct evaluation");
  }
}

// ---------------------------------------------------------------------------

struct Gate {
  int failures = 0;

  template <typename Body>
  void run(int num, const char* desc, double budget_secs, Body body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string why;
    bool ok = true;
    try {
      body();
    } catch (const std::exception& ex) {
      ok = false;
      why = ex.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && budget_secs > 0 && secs > budget_secs) {
      ok = false;
      why = "time budget exceeded";
    }
    std::printf("criterion %2d: %s (%.2fs) - %s\n", num, ok ? "pass" : "FAIL", secs, desc);
    if (!ok) {
      std::printf("              reason: %s\n", why.c_str());
      ++failures;
    }
  }
};

}  // namespace

int main() {
  Gate gate;
  gate.run(1, "Figure 1 S/D reducts reproduced literally", 1.0, criterion_figure1);
  gate.run(2, "canonical solutions: permutation invariance and bisimulation oracle", 30.0,
           criterion_canonicality);
  gate.run(3, "embedding postconditions on all graphs <= 5 vertices up to iso", 0,
           criterion_embedding);
  gate.run(4, "components theorem: occurrence and k disjoint copies", 0, criterion_components);
  gate.run(5, "flowers satisfy exactly phi_n; beta fragments at bouquets", 0, criterion_flowers);
  gate.run(6, "Rieger models plant the input graph with no extraneous D_N-edges", 0,
           criterion_rieger);
  gate.run(7, "mu-lemma forward direction on generated sentences", 0, criterion_mu);
  gate.run(8, "EF engine vs sentence oracle; disjoint-union lemma", 60.0, criterion_ef);
  gate.run(9, "graft_ball images on random balls with prescribed S-targets", 0, criterion_graft);
  gate.run(10, "digraph interpretation agrees with direct evaluation", 0,
           criterion_interpretation);
  return gate.failures == 0 ? 0 : 1;
}
