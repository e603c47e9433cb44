// membership.hpp
// Exact lasso-word membership: the oracle every construction is tested
// against.  Works for all recurrence conditions, state- or transition-based.

#pragma once

#include <deque>
#include <optional>

#include "omegakit/automaton.hpp"
#include "omegakit/lasso.hpp"

namespace omegakit {
namespace cycles {

// A searchable graph whose edges carry acceptance element ids.  For the
// state locus the element of an edge is the state it enters, so the element
// set traversed by a closed walk is exactly the inf-set of the matching run.
struct ElementGraph {
  int vertex_count = 0;
  int element_count = 0;
  struct Edge { int to; int elem; };
  std::vector<std::vector<Edge>> adj;

  void init(int n, int elems) {
    vertex_count = n;
    element_count = elems;
    adj.assign(n, {});
  }
  void add_edge(int from, int to, int elem) { adj[from].push_back({to, elem}); }
};

struct ClosedWalk {
  std::vector<int> vertices; // w_0 .. w_{m-1}; the walk closes back to w_0
  std::vector<int> elems;    // elems[i] labels the edge w_i -> w_{(i+1) mod m}
};

struct Subgraph {
  std::vector<char> keep_v;
  std::vector<char> keep_e; // indexed by element id

  bool edge_ok(const ElementGraph::Edge& e) const { return keep_v[e.to] && keep_e[e.elem]; }
};

inline std::vector<int> subgraph_sccs(const ElementGraph& g, const Subgraph& s, int* count_out) {
  std::vector<Transition> edges;
  for (int v = 0; v < g.vertex_count; ++v) {
    if (!s.keep_v[v]) continue;
    for (const auto& e : g.adj[v])
      if (s.edge_ok(e)) edges.push_back({v, 0, e.to});
  }
  return scc_ids(g.vertex_count, edges, count_out);
}

struct PathSteps {
  std::vector<int> vertices; // from .. to inclusive
  std::vector<int> elems;    // element per edge; size = vertices.size() - 1
};

// Shortest path inside the subgraph.
inline std::optional<PathSteps> path_in(const ElementGraph& g, const Subgraph& s,
                                        int from, int to) {
  std::vector<std::pair<int, int>> pred(g.vertex_count, {-2, -1});
  std::deque<int> queue{from};
  pred[from] = {-1, -1};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (const auto& e : g.adj[v]) {
      if (!s.edge_ok(e) || pred[e.to].first != -2) continue;
      pred[e.to] = {v, e.elem};
      queue.push_back(e.to);
    }
  }
  if (pred[to].first == -2) return std::nullopt;
  PathSteps p;
  for (int v = to; v != -1; v = pred[v].first) {
    p.vertices.push_back(v);
    if (pred[v].first != -1) p.elems.push_back(pred[v].second);
  }
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.elems.begin(), p.elems.end());
  return p;
}

// Closed walk from `start` visiting every vertex of `members` and traversing
// one edge per element in `must_elems`.  `members` must be one SCC of the
// subgraph.
inline ClosedWalk cover_walk(const ElementGraph& g, const Subgraph& s, int start,
                             const std::vector<int>& members,
                             const std::vector<int>& must_elems) {
  std::vector<char> in_comp(g.vertex_count, 0);
  for (int v : members) in_comp[v] = 1;
  ClosedWalk walk;
  walk.vertices.push_back(start);
  auto extend_to = [&](int target) {
    auto p = path_in(g, s, walk.vertices.back(), target);
    if (!p) throw std::runtime_error("internal: cover_walk target unreachable");
    walk.vertices.insert(walk.vertices.end(), p->vertices.begin() + 1, p->vertices.end());
    walk.elems.insert(walk.elems.end(), p->elems.begin(), p->elems.end());
  };
  for (int v : members)
    if (v != start) extend_to(v);
  for (int elem : must_elems) {
    bool done = false;
    for (int v : members) {
      if (done) break;
      for (const auto& e : g.adj[v]) {
        if (e.elem != elem || !s.edge_ok(e) || !in_comp[e.to]) continue;
        extend_to(v);
        walk.vertices.push_back(e.to);
        walk.elems.push_back(e.elem);
        done = true;
        break;
      }
    }
    if (!done) throw std::runtime_error("internal: cover_walk missing element edge");
  }
  extend_to(start);
  walk.vertices.pop_back();
  if (walk.vertices.empty() && walk.elems.empty()) {
    // start is on a kept self-loop
    for (const auto& e : g.adj[start])
      if (s.edge_ok(e) && e.to == start) {
        walk.vertices.push_back(start);
        walk.elems.push_back(e.elem);
        break;
      }
    if (walk.vertices.empty())
      throw std::runtime_error("internal: cover_walk produced empty walk");
  }
  return walk;
}

namespace detail {

inline std::vector<int> component_elems(const ElementGraph& g, const Subgraph& s,
                                        const std::vector<int>& comp_id, int id) {
  std::vector<int> elems;
  for (int v = 0; v < g.vertex_count; ++v) {
    if (comp_id[v] != id || !s.keep_v[v]) continue;
    for (const auto& e : g.adj[v])
      if (s.edge_ok(e) && comp_id[e.to] == id) elems.push_back(e.elem);
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return elems;
}

inline bool component_has_edge(const ElementGraph& g, const Subgraph& s,
                               const std::vector<int>& comp_id, int id) {
  for (int v = 0; v < g.vertex_count; ++v) {
    if (comp_id[v] != id || !s.keep_v[v]) continue;
    for (const auto& e : g.adj[v])
      if (s.edge_ok(e) && comp_id[e.to] == id) return true;
  }
  return false;
}

// Enumerates reachable SCCs with at least one internal edge; `good` maps the
// component's element set to the elements a witness walk must traverse, or
// nullopt when the component cannot host a good cycle.
template <typename Good>
inline std::optional<ClosedWalk> component_search(const ElementGraph& g, const Subgraph& s,
                                                  const std::vector<char>& reachable, Good good) {
  int nc = 0;
  auto comp = subgraph_sccs(g, s, &nc);
  for (int id = 0; id < nc; ++id) {
    std::vector<int> members;
    bool is_reach = false;
    for (int v = 0; v < g.vertex_count; ++v)
      if (s.keep_v[v] && comp[v] == id) {
        members.push_back(v);
        if (reachable[v]) is_reach = true;
      }
    if (members.empty() || !is_reach) continue;
    if (!component_has_edge(g, s, comp, id)) continue;
    auto elems = component_elems(g, s, comp, id);
    auto must = good(elems);
    if (must) return cover_walk(g, s, members.front(), members, *must);
  }
  return std::nullopt;
}

inline std::optional<ClosedWalk> streett_search(const ElementGraph& g, const Acceptance& acc,
                                                Subgraph s, const std::vector<char>& reachable) {
  int nc = 0;
  auto comp = subgraph_sccs(g, s, &nc);
  for (int id = 0; id < nc; ++id) {
    std::vector<int> members;
    bool is_reach = false;
    for (int v = 0; v < g.vertex_count; ++v)
      if (s.keep_v[v] && comp[v] == id) {
        members.push_back(v);
        if (reachable[v]) is_reach = true;
      }
    if (members.empty() || !is_reach) continue;
    if (!component_has_edge(g, s, comp, id)) continue;
    auto elems = component_elems(g, s, comp, id);
    if (satisfies(acc, elems))
      return cover_walk(g, s, members.front(), members, elems);
    for (const auto& [r, gset] : acc.pairs) {
      bool hits_r = false, hits_g = false;
      for (int e : elems) {
        if (contains_sorted(r, e)) hits_r = true;
        if (contains_sorted(gset, e)) hits_g = true;
      }
      if (hits_r && !hits_g) {
        Subgraph s2 = s;
        for (int v = 0; v < g.vertex_count; ++v)
          if (comp[v] != id) s2.keep_v[v] = false;
        for (int e : r)
          if (e < static_cast<int>(s2.keep_e.size())) s2.keep_e[e] = 0;
        auto sub = streett_search(g, acc, s2, reachable);
        if (sub) return sub;
      }
    }
  }
  return std::nullopt;
}

} // namespace detail

// Reachable closed walk, inside the subgraph induced by keep_v, whose element
// set satisfies acc.
inline std::optional<ClosedWalk> find_good_cycle(const ElementGraph& g, const Acceptance& acc,
                                                 const std::vector<char>& keep_v,
                                                 const std::vector<char>& reachable) {
  Subgraph all{keep_v, std::vector<char>(static_cast<size_t>(g.element_count), 1)};
  auto filter_elems = [&](const std::vector<int>& allowed) {
    Subgraph s{keep_v, std::vector<char>(static_cast<size_t>(g.element_count), 0)};
    for (int e : allowed)
      if (e < g.element_count) s.keep_e[e] = 1;
    return s;
  };
  auto any_cycle = [](const std::vector<int>&) {
    return std::optional<std::vector<int>>{std::vector<int>{}};
  };

  switch (acc.kind) {
    case AcceptanceKind::Trivial:
      return detail::component_search(g, all, reachable, any_cycle);
    case AcceptanceKind::Buchi: {
      const auto& b = acc.sets.at(0);
      return detail::component_search(
          g, all, reachable, [&](const std::vector<int>& elems) -> std::optional<std::vector<int>> {
            for (int e : elems)
              if (contains_sorted(b, e)) return std::vector<int>{e};
            return std::nullopt;
          });
    }
    case AcceptanceKind::CoBuchi:
    case AcceptanceKind::Weak:
      return detail::component_search(g, filter_elems(acc.sets.at(0)), reachable, any_cycle);
    case AcceptanceKind::GenBuchi:
      return detail::component_search(
          g, all, reachable, [&](const std::vector<int>& elems) -> std::optional<std::vector<int>> {
            std::vector<int> must;
            for (const auto& s : acc.sets) {
              bool hit = false;
              for (int e : elems)
                if (contains_sorted(s, e)) {
                  must.push_back(e);
                  hit = true;
                  break;
                }
              if (!hit) return std::nullopt;
            }
            return must;
          });
    case AcceptanceKind::Parity: {
      int maxp = 0;
      for (int p : acc.priorities) maxp = std::max(maxp, p);
      for (int p = 0; p <= maxp; p += 2) {
        std::vector<int> allowed;
        for (int e = 0; e < static_cast<int>(acc.priorities.size()); ++e)
          if (acc.priorities[e] >= p) allowed.push_back(e);
        auto res = detail::component_search(
            g, filter_elems(allowed), reachable,
            [&](const std::vector<int>& elems) -> std::optional<std::vector<int>> {
              for (int e : elems)
                if (acc.priorities[e] == p) return std::vector<int>{e};
              return std::nullopt;
            });
        if (res) return res;
      }
      return std::nullopt;
    }
    case AcceptanceKind::Rabin: {
      for (const auto& [l, u] : acc.pairs) {
        std::vector<int> allowed;
        for (int e = 0; e < g.element_count; ++e)
          if (!contains_sorted(l, e)) allowed.push_back(e);
        auto res = detail::component_search(
            g, filter_elems(allowed), reachable,
            [&](const std::vector<int>& elems) -> std::optional<std::vector<int>> {
              for (int e : elems)
                if (contains_sorted(u, e)) return std::vector<int>{e};
              return std::nullopt;
            });
        if (res) return res;
      }
      return std::nullopt;
    }
    case AcceptanceKind::Streett:
      return detail::streett_search(g, acc, all, reachable);
    case AcceptanceKind::Muller: {
      for (const auto& m : acc.sets) {
        auto res = detail::component_search(
            g, filter_elems(m), reachable,
            [&](const std::vector<int>& elems) -> std::optional<std::vector<int>> {
              if (elems == m) return elems; // the walk must realize exactly m
              return std::nullopt;
            });
        if (res) return res;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

} // namespace cycles

// --- Lasso membership -------------------------------------------------------

struct MembershipResult {
  bool accepted = false;
  std::optional<LassoRun> witness;
};

inline MembershipResult accepts_lasso_ex(const Automaton& aut, const LassoWord& w) {
  for (SymbolId s : w.prefix)
    if (s < 0 || s >= aut.alphabet.size()) throw std::runtime_error("lasso: symbol out of alphabet");
  for (SymbolId s : w.period)
    if (s < 0 || s >= aut.alphabet.size()) throw std::runtime_error("lasso: symbol out of alphabet");

  const int n = aut.state_count;
  const int pu = static_cast<int>(w.prefix.size());
  const int pv = static_cast<int>(w.period.size());
  const int L = pu + pv;
  if (n == 0 || aut.initial.empty()) return {};

  auto vid = [&](StateId q, int i) { return q * L + i; };
  cycles::ElementGraph g;
  g.init(n * L, aut.element_count());
  for (int i = 0; i < L; ++i) {
    int nx = (i + 1 < L) ? i + 1 : pu;
    SymbolId a = w.at(i);
    for (size_t ti = 0; ti < aut.transitions.size(); ++ti) {
      const auto& t = aut.transitions[ti];
      if (t.sym != a) continue;
      int elem = aut.acceptance.locus == Locus::State ? t.dst : static_cast<int>(ti);
      g.add_edge(vid(t.src, i), vid(t.dst, nx), elem);
    }
  }

  std::vector<char> reach(g.vertex_count, 0);
  {
    std::deque<int> queue;
    for (StateId q : aut.initial) {
      reach[vid(q, 0)] = 1;
      queue.push_back(vid(q, 0));
    }
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const auto& e : g.adj[v])
        if (!reach[e.to]) {
          reach[e.to] = 1;
          queue.push_back(e.to);
        }
    }
  }

  // Cycles live in the period part.
  std::vector<char> keep(g.vertex_count, 0);
  for (StateId q = 0; q < n; ++q)
    for (int i = pu; i < L; ++i) keep[vid(q, i)] = reach[vid(q, i)];

  auto walk = cycles::find_good_cycle(g, aut.acceptance, keep, reach);
  if (!walk) return {};

  // Rotate the walk to start at period position pu; every walk has length a
  // multiple of |v| and steps through positions cyclically, so pu occurs.
  size_t m = walk->vertices.size();
  size_t rot = m;
  for (size_t i = 0; i < m; ++i)
    if (walk->vertices[i] % L == pu) {
      rot = i;
      break;
    }
  if (rot == m) throw std::runtime_error("internal: walk misses period start");
  std::vector<int> cyc;
  for (size_t i = 0; i < m; ++i) cyc.push_back(walk->vertices[(rot + i) % m]);

  std::vector<int> pred(g.vertex_count, -2);
  std::deque<int> queue;
  for (StateId q : aut.initial) {
    int v = vid(q, 0);
    if (pred[v] == -2) {
      pred[v] = -1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == cyc[0]) break;
    for (const auto& e : g.adj[v])
      if (pred[e.to] == -2) {
        pred[e.to] = v;
        queue.push_back(e.to);
      }
  }
  std::vector<int> path;
  for (int v = cyc[0]; v != -1; v = pred[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());

  LassoRun run;
  for (size_t i = 0; i + 1 < path.size(); ++i) run.prefix_states.push_back(path[i] / L);
  for (int v : cyc) run.period_states.push_back(v / L);
  return {true, run};
}

inline bool accepts_lasso(const Automaton& aut, const LassoWord& w) {
  return accepts_lasso_ex(aut, w).accepted;
}

// Product automaton whose language is "two distinct accepting runs exist".
inline Automaton ambiguity_product(const Automaton& aut) {
  if (aut.acceptance.kind != AcceptanceKind::Buchi || aut.acceptance.locus != Locus::State)
    throw std::runtime_error("ambiguity_product: requires state-based Buchi");
  int n = aut.state_count;
  auto id = [&](StateId p, StateId q, int d) { return (p * n + q) * 2 + d; };
  Automaton out;
  out.alphabet = aut.alphabet;
  out.state_count = n * n * 2;
  for (StateId p : aut.initial)
    for (StateId q : aut.initial) out.initial.push_back(id(p, q, p != q ? 1 : 0));
  for (const auto& t1 : aut.transitions)
    for (const auto& t2 : aut.transitions) {
      if (t1.sym != t2.sym) continue;
      for (int d = 0; d < 2; ++d) {
        int d2 = (d || t1.dst != t2.dst) ? 1 : 0;
        out.transitions.push_back({id(t1.src, t2.src, d), t1.sym, id(t1.dst, t2.dst, d2)});
      }
    }
  const auto& b = aut.acceptance.sets.at(0);
  std::vector<int> s1, s2, s3;
  for (StateId p = 0; p < n; ++p)
    for (StateId q = 0; q < n; ++q)
      for (int d = 0; d < 2; ++d) {
        if (contains_sorted(b, p)) s1.push_back(id(p, q, d));
        if (contains_sorted(b, q)) s2.push_back(id(p, q, d));
        if (d == 1) s3.push_back(id(p, q, d));
      }
  out.acceptance = Acceptance::gen_buchi({s1, s2, s3});
  out.normalize();
  return out;
}

// True iff the Buchi automaton has at most one accepting run on w.
inline bool unambiguous_on(const Automaton& aut, const LassoWord& w) {
  return !accepts_lasso(ambiguity_product(aut), w);
}

} // namespace omegakit
