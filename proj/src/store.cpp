#include "hyperset/store.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

namespace hyperset {

namespace {

void sort_unique(std::vector<NodeId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void sort_unique(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Strongly connected components, emitted children-first (reverse
// topological order of the condensation).
std::vector<std::vector<int>> scc_children_first(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> idx(n, -1), low(n, 0), on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int counter = 0;

  std::function<void(int)> visit = [&](int u) {
    idx[u] = low[u] = counter++;
    stack.push_back(u);
    on_stack[u] = 1;
    for (int v : adj[u]) {
      if (idx[v] < 0) {
        visit(v);
        low[u] = std::min(low[u], low[v]);
      } else if (on_stack[v]) {
        low[u] = std::min(low[u], idx[v]);
      }
    }
    if (low[u] == idx[u]) {
      std::vector<int> comp;
      for (;;) {
        int v = stack.back();
        stack.pop_back();
        on_stack[v] = 0;
        comp.push_back(v);
        if (v == u) break;
      }
      comps.push_back(std::move(comp));
    }
  };

  for (int u = 0; u < n; ++u)
    if (idx[u] < 0) visit(u);
  return comps;
}

// Coarsest stable partition (greatest bisimulation) of a digraph given by
// deduplicated child lists. Returns a block id per node.
std::vector<int> refine(const std::vector<std::vector<int>>& kids) {
  const int n = static_cast<int>(kids.size());
  std::vector<int> block(n, 0);
  int blocks = 1;
  for (;;) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next(n);
    for (int u = 0; u < n; ++u) {
      std::vector<int> sig;
      sig.push_back(block[u]);
      std::vector<int> cb;
      cb.reserve(kids[u].size());
      for (int v : kids[u]) cb.push_back(block[v]);
      sort_unique(cb);
      sig.insert(sig.end(), cb.begin(), cb.end());
      auto it = sig_ids.find(sig);
      if (it == sig_ids.end()) it = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size())).first;
      next[u] = it->second;
    }
    int nb = static_cast<int>(sig_ids.size());
    block.swap(next);
    if (nb == blocks) return block;
    blocks = nb;
  }
}

}  // namespace

const std::vector<NodeId>& Store::children(NodeId id) const {
  if (id >= children_.size()) throw error("unknown node id");
  return children_[id];
}

bool Store::member(NodeId x, NodeId y) const {
  const auto& kids = children(y);
  return std::binary_search(kids.begin(), kids.end(), x);
}

bool Store::well_founded(NodeId id) const {
  if (id >= wf_.size()) throw error("unknown node id");
  return wf_[id] != 0;
}

int Store::rank(NodeId id) const {
  if (!well_founded(id)) throw error("rank: node is not well-founded");
  return rank_[id];
}

NodeId Store::append_node(std::vector<NodeId> kids, bool cyclic) {
  NodeId id = static_cast<NodeId>(children_.size());
  bool wf = !cyclic;
  int rk = 0;
  if (wf) {
    for (NodeId k : kids) {
      if (!wf_[k]) {
        wf = false;
        break;
      }
      rk = std::max(rk, rank_[k] + 1);
    }
  }
  index_.emplace(kids, id);
  children_.push_back(std::move(kids));
  wf_.push_back(wf ? 1 : 0);
  rank_.push_back(wf ? rk : -1);
  return id;
}

NodeId Store::make_set_unlocked(std::vector<NodeId> kids) {
  for (NodeId k : kids)
    if (k >= children_.size()) throw error("make_set: unknown child node");
  sort_unique(kids);
  auto it = index_.find(kids);
  if (it != index_.end()) return it->second;
  return append_node(std::move(kids), /*cyclic=*/false);
}

NodeId Store::make_set(std::vector<NodeId> kids) {
  std::lock_guard<std::mutex> lock(write_mutex_);
  return make_set_unlocked(std::move(kids));
}

NodeId Store::hf_nat(unsigned n) {
  std::lock_guard<std::mutex> lock(write_mutex_);
  while (nat_cache_.size() <= n) {
    if (nat_cache_.empty()) {
      nat_cache_.push_back(make_set_unlocked({}));
    } else {
      std::vector<NodeId> kids = children_[nat_cache_.back()];
      kids.push_back(nat_cache_.back());
      nat_cache_.push_back(make_set_unlocked(std::move(kids)));
    }
  }
  return nat_cache_[n];
}

std::vector<NodeId> Store::intern(const RawGraph& g) {
  std::lock_guard<std::mutex> lock(write_mutex_);
  return intern_unlocked(g);
}

std::vector<NodeId> Store::intern_unlocked(const RawGraph& g) {
  const int n = g.size();
  for (int u = 0; u < n; ++u) {
    for (int v : g.internal[u])
      if (v < 0 || v >= n) throw error("intern: child index out of range");
    for (NodeId e : g.external[u])
      if (e >= children_.size()) throw error("intern: unknown external node");
  }

  std::vector<NodeId> resolved(n, 0);
  std::vector<char> done(n, 0);
  std::vector<int> comp_of(n, -1);
  auto comps = scc_children_first(g.internal);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int u : comps[c]) comp_of[u] = static_cast<int>(c);

  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const auto& comp = comps[ci];
    bool cyclic = comp.size() > 1;
    if (!cyclic) {
      int u = comp[0];
      for (int v : g.internal[u])
        if (v == u) cyclic = true;
    }

    if (!cyclic) {
      int u = comp[0];
      std::vector<NodeId> kids = g.external[u];
      for (int v : g.internal[u]) kids.push_back(resolved[v]);
      resolved[u] = make_set_unlocked(std::move(kids));
      done[u] = 1;
      continue;
    }

    // Cyclic cluster: collapse jointly with the hereditary closure of its
    // resolved external children, so that members bisimilar to existing
    // store nodes are identified with them.
    std::vector<NodeId> ext_roots;
    for (int u : comp) {
      for (NodeId e : g.external[u]) ext_roots.push_back(e);
      for (int v : g.internal[u])
        if (comp_of[v] != static_cast<int>(ci)) ext_roots.push_back(resolved[v]);
    }
    sort_unique(ext_roots);
    std::vector<NodeId> closure = ext_roots;
    std::map<NodeId, int> store_idx;
    for (std::size_t i = 0; i < closure.size(); ++i) {
      if (store_idx.emplace(closure[i], 0).second == false) continue;
      for (NodeId k : children_[closure[i]])
        if (!store_idx.count(k)) closure.push_back(k);
    }
    sort_unique(closure);
    store_idx.clear();

    const int m = static_cast<int>(comp.size());
    const int total = m + static_cast<int>(closure.size());
    std::map<int, int> comp_pos;
    for (int i = 0; i < m; ++i) comp_pos[comp[i]] = i;
    for (std::size_t i = 0; i < closure.size(); ++i) store_idx[closure[i]] = m + static_cast<int>(i);

    std::vector<std::vector<int>> joint(total);
    for (int i = 0; i < m; ++i) {
      int u = comp[i];
      auto& row = joint[i];
      for (NodeId e : g.external[u]) row.push_back(store_idx.at(e));
      for (int v : g.internal[u]) {
        if (comp_of[v] == static_cast<int>(ci))
          row.push_back(comp_pos.at(v));
        else
          row.push_back(store_idx.at(resolved[v]));
      }
      sort_unique(row);
    }
    for (std::size_t i = 0; i < closure.size(); ++i) {
      auto& row = joint[m + i];
      for (NodeId k : children_[closure[i]]) row.push_back(store_idx.at(k));
      sort_unique(row);
    }

    std::vector<int> block = refine(joint);

    // A block holding a store node identifies every member with that node.
    std::map<int, NodeId> block_store;
    for (std::size_t i = 0; i < closure.size(); ++i) {
      auto ins = block_store.emplace(block[m + i], closure[i]);
      (void)ins;
    }

    // Remaining blocks become candidate new classes.
    std::map<int, int> block_class;
    std::vector<int> class_rep;
    for (int i = 0; i < m; ++i) {
      int u = comp[i];
      auto hit = block_store.find(block[i]);
      if (hit != block_store.end()) {
        resolved[u] = hit->second;
        done[u] = 1;
        continue;
      }
      if (!block_class.count(block[i])) {
        block_class[block[i]] = static_cast<int>(class_rep.size());
        class_rep.push_back(i);
      }
    }

    const int nc = static_cast<int>(class_rep.size());
    if (nc == 0) continue;

    // Per-class children, split into already-canonical ids and class refs.
    std::vector<std::vector<NodeId>> cls_ext(nc);
    std::vector<std::vector<int>> cls_int(nc);
    for (int c = 0; c < nc; ++c) {
      int rep = class_rep[c];
      for (int j : joint[rep]) {
        if (j >= m) {
          cls_ext[c].push_back(closure[j - m]);
        } else {
          auto hit = block_store.find(block[j]);
          if (hit != block_store.end())
            cls_ext[c].push_back(hit->second);
          else
            cls_int[c].push_back(block_class.at(block[j]));
        }
      }
      sort_unique(cls_ext[c]);
      sort_unique(cls_int[c]);
    }

    // The residual class graph may have lost cycles to resolution; condense
    // again and insert bottom-up.
    std::vector<NodeId> cls_node(nc, 0);
    std::vector<char> cls_done(nc, 0);
    auto sub = scc_children_first(cls_int);
    std::vector<int> sub_of(nc, -1);
    for (std::size_t s = 0; s < sub.size(); ++s)
      for (int c : sub[s]) sub_of[c] = static_cast<int>(s);

    for (std::size_t si = 0; si < sub.size(); ++si) {
      const auto& group = sub[si];
      bool grp_cyclic = group.size() > 1;
      if (!grp_cyclic)
        for (int v : cls_int[group[0]])
          if (v == group[0]) grp_cyclic = true;

      if (!grp_cyclic) {
        int c = group[0];
        std::vector<NodeId> kids = cls_ext[c];
        for (int v : cls_int[c]) kids.push_back(cls_node[v]);
        cls_node[c] = make_set_unlocked(std::move(kids));
        cls_done[c] = 1;
        continue;
      }

      // Canonical encoding of the cyclic group: order classes by the colors
      // of an internal refinement seeded by their external child lists.
      const int gsz = static_cast<int>(group.size());
      std::map<int, int> gpos;
      for (int i = 0; i < gsz; ++i) gpos[group[i]] = i;
      std::vector<std::vector<NodeId>> gext(gsz);
      std::vector<std::vector<int>> gint(gsz);
      for (int i = 0; i < gsz; ++i) {
        int c = group[i];
        gext[i] = cls_ext[c];
        for (int v : cls_int[c]) {
          if (sub_of[v] == static_cast<int>(si))
            gint[i].push_back(gpos.at(v));
          else
            gext[i].push_back(cls_node[v]);
        }
        sort_unique(gext[i]);
        sort_unique(gint[i]);
      }

      std::vector<int> color(gsz);
      {
        std::map<std::vector<NodeId>, int> init;
        for (int i = 0; i < gsz; ++i) init.emplace(gext[i], 0);
        int next_id = 0;
        for (auto& kv : init) kv.second = next_id++;
        for (int i = 0; i < gsz; ++i) color[i] = init.at(gext[i]);
        int ncolors = next_id;
        for (;;) {
          // number signatures by sorted order, not encounter order: the
          // coloring must not depend on how the group happens to be listed
          std::map<std::vector<int>, int> sig_ids;
          std::vector<std::vector<int>> sigs(gsz);
          for (int i = 0; i < gsz; ++i) {
            sigs[i].push_back(color[i]);
            std::vector<int> cb;
            for (int v : gint[i]) cb.push_back(color[v]);
            sort_unique(cb);
            sigs[i].insert(sigs[i].end(), cb.begin(), cb.end());
            sig_ids.emplace(sigs[i], 0);
          }
          int renum = 0;
          for (auto& kv : sig_ids) kv.second = renum++;
          for (int i = 0; i < gsz; ++i) color[i] = sig_ids.at(sigs[i]);
          int cnt = static_cast<int>(sig_ids.size());
          if (cnt == ncolors) break;
          ncolors = cnt;
        }
        if (ncolors != gsz)
          throw error("intern: internal invariant violated (cyclic cluster not collapsed)");
      }

      std::vector<int> order(gsz);
      for (int i = 0; i < gsz; ++i) order[color[i]] = i;

      std::string key;
      for (int pos = 0; pos < gsz; ++pos) {
        int i = order[pos];
        key += "E";
        for (NodeId e : gext[i]) key += std::to_string(e) + ",";
        key += "I";
        std::vector<int> ip;
        for (int v : gint[i]) ip.push_back(color[v]);
        sort_unique(ip);
        for (int v : ip) key += std::to_string(v) + ",";
        key += ";";
      }

      auto hit = scc_index_.find(key);
      if (hit != scc_index_.end()) {
        for (int pos = 0; pos < gsz; ++pos) {
          int c = group[order[pos]];
          cls_node[c] = hit->second[pos];
          cls_done[c] = 1;
        }
        continue;
      }

      NodeId base = static_cast<NodeId>(children_.size());
      std::vector<NodeId> fresh(gsz);
      for (int pos = 0; pos < gsz; ++pos) fresh[pos] = base + static_cast<NodeId>(pos);
      for (int pos = 0; pos < gsz; ++pos) {
        int i = order[pos];
        std::vector<NodeId> kids = gext[i];
        for (int v : gint[i]) kids.push_back(fresh[color[v]]);
        sort_unique(kids);
        append_node(std::move(kids), /*cyclic=*/true);
      }
      scc_index_.emplace(std::move(key), fresh);
      for (int pos = 0; pos < gsz; ++pos) {
        int c = group[order[pos]];
        cls_node[c] = fresh[pos];
        cls_done[c] = 1;
      }
    }

    for (int i = 0; i < m; ++i) {
      int u = comp[i];
      if (done[u]) continue;
      resolved[u] = cls_node[block_class.at(block[i])];
      done[u] = 1;
    }
  }

  return resolved;
}

NodeId Store::canonicalize(const Apg& g) {
  const int n = g.node_count;
  if (n <= 0) throw error("canonicalize: empty graph");
  if (static_cast<int>(g.children.size()) != n)
    throw error("canonicalize: children table size mismatch");
  if (g.point < 0 || g.point >= n) throw error("canonicalize: point out of range");
  for (const auto& row : g.children)
    for (int v : row)
      if (v < 0 || v >= n) throw error("canonicalize: child outside declared nodes");

  std::vector<char> seen(n, 0);
  std::vector<int> queue{g.point};
  seen[g.point] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int v : g.children[queue[i]])
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
  for (int u = 0; u < n; ++u)
    if (!seen[u]) throw error("canonicalize: accessibility violated (node unreachable from point)");

  RawGraph raw(n);
  raw.internal = g.children;
  auto resolved = intern(raw);
  return resolved[g.point];
}

std::vector<Hyperset> Hyperset::elements() const {
  std::vector<Hyperset> out;
  for (NodeId k : store_->children(id_)) out.emplace_back(store_, k);
  return out;
}

bool member(const Hyperset& x, const Hyperset& y) {
  if (x.store() != y.store()) throw error("member: handles belong to different stores");
  return x.store()->member(x.id(), y.id());
}

Hyperset hf_encode(Store& store, unsigned n) { return Hyperset(&store, store.hf_nat(n)); }

}  // namespace hyperset
