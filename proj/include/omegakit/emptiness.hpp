// emptiness.hpp
// Emptiness per recurrence condition, with an ultimately periodic witness.

#pragma once

#include "omegakit/membership.hpp"

namespace omegakit {

struct EmptinessResult {
  bool empty = true;
  std::optional<LassoWord> witness;
};

inline EmptinessResult is_empty_ex(const Automaton& aut) {
  const int n = aut.state_count;
  if (n == 0 || aut.initial.empty()) return {};

  cycles::ElementGraph g;
  g.init(n, aut.element_count());
  for (size_t ti = 0; ti < aut.transitions.size(); ++ti) {
    const auto& t = aut.transitions[ti];
    int elem = aut.acceptance.locus == Locus::State ? t.dst : static_cast<int>(ti);
    g.add_edge(t.src, t.dst, elem);
  }

  std::vector<char> reach(n, 0);
  {
    std::deque<int> queue;
    for (StateId q : aut.initial) {
      if (!reach[q]) {
        reach[q] = 1;
        queue.push_back(q);
      }
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

  auto walk = cycles::find_good_cycle(g, aut.acceptance, reach, reach);
  if (!walk) return {};

  // Symbol of a walk step: determined by the element for the transition
  // locus; otherwise any transition between the two states inside the walk's
  // element constraints works, and since the element of an edge is the state
  // entered, every parallel transition carries the same element.
  auto step_symbol = [&](int from, int to, int elem) -> SymbolId {
    if (aut.acceptance.locus == Locus::Transition) return aut.transitions[elem].sym;
    for (const auto& t : aut.transitions)
      if (t.src == from && t.dst == to) return t.sym;
    throw std::runtime_error("internal: witness step without transition");
  };

  // Prefix: shortest path from an initial state to the walk start.
  std::vector<std::pair<int, SymbolId>> pred(n, {-2, -1});
  std::deque<int> queue;
  for (StateId q : aut.initial)
    if (pred[q].first == -2) {
      pred[q] = {-1, -1};
      queue.push_back(q);
    }
  int target = walk->vertices.front();
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == target) break;
    for (const auto& t : aut.transitions)
      if (t.src == v && pred[t.dst].first == -2) {
        pred[t.dst] = {v, t.sym};
        queue.push_back(t.dst);
      }
  }

  LassoWord w;
  {
    std::vector<SymbolId> rev;
    for (int v = target; pred[v].first != -1; v = pred[v].first) rev.push_back(pred[v].second);
    std::reverse(rev.begin(), rev.end());
    w.prefix = std::move(rev);
  }
  size_t m = walk->vertices.size();
  for (size_t i = 0; i < m; ++i) {
    int from = walk->vertices[i];
    int to = walk->vertices[(i + 1) % m];
    w.period.push_back(step_symbol(from, to, walk->elems[i]));
  }
  return {false, w};
}

inline bool is_empty(const Automaton& aut) { return is_empty_ex(aut).empty; }

} // namespace omegakit
