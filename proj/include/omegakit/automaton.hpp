// automaton.hpp
// Core data model: alphabets, transitions, recurrence conditions, automata.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace omegakit {

using StateId = int;
using SymbolId = int;

struct SymbolAlphabet {
  std::vector<std::string> symbols;

  int size() const { return static_cast<int>(symbols.size()); }

  std::optional<SymbolId> index_of(const std::string& name) const {
    for (SymbolId i = 0; i < size(); ++i)
      if (symbols[i] == name) return i;
    return std::nullopt;
  }

  const std::string& name(SymbolId s) const { return symbols.at(s); }

  void validate() const {
    if (symbols.empty()) throw std::runtime_error("alphabet: must be non-empty");
    std::set<std::string> seen;
    for (const auto& s : symbols) {
      if (s.empty()) throw std::runtime_error("alphabet: empty symbol name");
      for (char c : s)
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
          throw std::runtime_error("alphabet: symbol contains whitespace");
      if (!seen.insert(s).second)
        throw std::runtime_error("alphabet: duplicate symbol '" + s + "'");
    }
  }

  bool operator==(const SymbolAlphabet&) const = default;
};

struct Transition {
  StateId src;
  SymbolId sym;
  StateId dst;
  auto operator<=>(const Transition&) const = default;
};

enum class AcceptanceKind {
  Trivial,
  Buchi,
  CoBuchi,
  Weak,
  GenBuchi,
  Parity,
  Rabin,
  Streett,
  Muller,
};

enum class Locus { State, Transition };

inline const char* kind_name(AcceptanceKind k) {
  switch (k) {
    case AcceptanceKind::Trivial: return "trivial";
    case AcceptanceKind::Buchi: return "buchi";
    case AcceptanceKind::CoBuchi: return "cobuchi";
    case AcceptanceKind::Weak: return "weak";
    case AcceptanceKind::GenBuchi: return "genbuchi";
    case AcceptanceKind::Parity: return "parity";
    case AcceptanceKind::Rabin: return "rabin";
    case AcceptanceKind::Streett: return "streett";
    case AcceptanceKind::Muller: return "muller";
  }
  return "?";
}

// Recurrence condition.  Elements are plain ints: state ids for the state
// locus, indices into Automaton::transitions for the transition locus.
struct Acceptance {
  AcceptanceKind kind = AcceptanceKind::Trivial;
  Locus locus = Locus::State;

  // Buchi/CoBuchi/Weak use sets[0]; GenBuchi and Muller use the whole list.
  std::vector<std::vector<int>> sets;
  // Rabin pairs (L, U) / Streett pairs (R, G).
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
  // Parity: priority per element id (dense, -1 for "element not present").
  std::vector<int> priorities;

  bool operator==(const Acceptance&) const = default;

  static Acceptance trivial() { return Acceptance{}; }

  static Acceptance buchi(std::vector<int> b, Locus l = Locus::State) {
    Acceptance a;
    a.kind = AcceptanceKind::Buchi;
    a.locus = l;
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    a.sets = {std::move(b)};
    return a;
  }

  static Acceptance cobuchi(std::vector<int> c, Locus l = Locus::State) {
    Acceptance a = buchi(std::move(c), l);
    a.kind = AcceptanceKind::CoBuchi;
    return a;
  }

  static Acceptance weak(std::vector<int> w, Locus l = Locus::State) {
    Acceptance a = buchi(std::move(w), l);
    a.kind = AcceptanceKind::Weak;
    return a;
  }

  static Acceptance gen_buchi(std::vector<std::vector<int>> ss, Locus l = Locus::State) {
    Acceptance a;
    a.kind = AcceptanceKind::GenBuchi;
    a.locus = l;
    for (auto& s : ss) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    a.sets = std::move(ss);
    return a;
  }

  static Acceptance parity(std::vector<int> prios, Locus l = Locus::State) {
    Acceptance a;
    a.kind = AcceptanceKind::Parity;
    a.locus = l;
    a.priorities = std::move(prios);
    return a;
  }

  static Acceptance rabin(std::vector<std::pair<std::vector<int>, std::vector<int>>> ps,
                          Locus l = Locus::State) {
    Acceptance a;
    a.kind = AcceptanceKind::Rabin;
    a.locus = l;
    for (auto& [x, y] : ps) {
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
    }
    a.pairs = std::move(ps);
    return a;
  }

  static Acceptance streett(std::vector<std::pair<std::vector<int>, std::vector<int>>> ps,
                            Locus l = Locus::State) {
    Acceptance a = rabin(std::move(ps), l);
    a.kind = AcceptanceKind::Streett;
    return a;
  }

  static Acceptance muller(std::vector<std::vector<int>> ss, Locus l = Locus::State) {
    Acceptance a = gen_buchi(std::move(ss), l);
    a.kind = AcceptanceKind::Muller;
    return a;
  }
};

inline bool contains_sorted(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

// Table 1 semantics: does an inf-set satisfy the condition?  inf_set must be
// sorted.  Total on valid inputs.
inline bool satisfies(const Acceptance& acc, const std::vector<int>& inf_set) {
  auto intersects = [&](const std::vector<int>& s) {
    for (int x : inf_set)
      if (contains_sorted(s, x)) return true;
    return false;
  };
  auto subset_of = [&](const std::vector<int>& s) {
    for (int x : inf_set)
      if (!contains_sorted(s, x)) return false;
    return true;
  };
  switch (acc.kind) {
    case AcceptanceKind::Trivial:
      return true;
    case AcceptanceKind::Buchi:
      return intersects(acc.sets.at(0));
    case AcceptanceKind::CoBuchi:
    case AcceptanceKind::Weak:
      return subset_of(acc.sets.at(0));
    case AcceptanceKind::GenBuchi: {
      for (const auto& s : acc.sets)
        if (!intersects(s)) return false;
      return true;
    }
    case AcceptanceKind::Parity: {
      int best = -1;
      for (int x : inf_set) {
        int p = acc.priorities.at(x);
        if (best < 0 || p < best) best = p;
      }
      return best >= 0 && best % 2 == 0;
    }
    case AcceptanceKind::Rabin: {
      for (const auto& [l, u] : acc.pairs)
        if (!intersects(l) && intersects(u)) return true;
      return false;
    }
    case AcceptanceKind::Streett: {
      for (const auto& [r, g] : acc.pairs)
        if (intersects(r) && !intersects(g)) return false;
      return true;
    }
    case AcceptanceKind::Muller: {
      for (const auto& s : acc.sets)
        if (s == inf_set) return true;
      return false;
    }
  }
  return false;
}

struct Automaton {
  SymbolAlphabet alphabet;
  int state_count = 0;
  std::vector<StateId> initial;        // sorted, unique
  std::vector<Transition> transitions; // sorted, unique; acceptance indices point here
  Acceptance acceptance;

  void normalize() {
    std::sort(initial.begin(), initial.end());
    initial.erase(std::unique(initial.begin(), initial.end()), initial.end());
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());
  }

  int transition_index(const Transition& t) const {
    auto it = std::lower_bound(transitions.begin(), transitions.end(), t);
    if (it == transitions.end() || !(*it == t)) return -1;
    return static_cast<int>(it - transitions.begin());
  }

  std::vector<StateId> successors(StateId q, SymbolId a) const {
    std::vector<StateId> out;
    auto it = std::lower_bound(transitions.begin(), transitions.end(),
                               Transition{q, a, 0});
    for (; it != transitions.end() && it->src == q && it->sym == a; ++it)
      out.push_back(it->dst);
    return out;
  }

  std::vector<StateId> predecessors(StateId q, SymbolId a) const {
    std::vector<StateId> out;
    for (const auto& t : transitions)
      if (t.sym == a && t.dst == q) out.push_back(t.src);
    return out;
  }

  int element_count() const {
    return acceptance.locus == Locus::State ? state_count
                                            : static_cast<int>(transitions.size());
  }

  // Element id produced by taking transition index ti: the destination state
  // for the state locus, the transition itself otherwise.
  int element_of_transition(int ti) const {
    return acceptance.locus == Locus::State ? transitions[ti].dst : ti;
  }

  void validate() const;
};

inline bool weak_set_valid(const Automaton& aut);

namespace detail {

inline void check_elements(const Automaton& aut, const std::vector<int>& elems) {
  int n = aut.element_count();
  for (int e : elems)
    if (e < 0 || e >= n) throw std::runtime_error("acceptance: element out of range");
}

} // namespace detail

// SCCs of the transition graph (symbols ignored).  Tarjan, iterative.
// Returns component id per state; ids are in reverse topological order
// (a component only reaches components with smaller or equal id).
inline std::vector<int> scc_ids(int n, const std::vector<Transition>& edges,
                                int* count_out = nullptr) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& t : edges) adj[t.src].push_back(t.dst);
  std::vector<int> idx(n, -1), low(n, 0), comp(n, -1);
  std::vector<int> stk;
  std::vector<char> on(n, 0);
  int next = 0, comps = 0;
  struct Frame { int v; size_t i; };
  for (int root = 0; root < n; ++root) {
    if (idx[root] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    idx[root] = low[root] = next++;
    stk.push_back(root);
    on[root] = 1;
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i < adj[v].size()) {
        int w = adj[v][i++];
        if (idx[w] == -1) {
          idx[w] = low[w] = next++;
          stk.push_back(w);
          on[w] = 1;
          call.push_back({w, 0});
        } else if (on[w]) {
          low[v] = std::min(low[v], idx[w]);
        }
      } else {
        if (low[v] == idx[v]) {
          while (true) {
            int w = stk.back();
            stk.pop_back();
            on[w] = 0;
            comp[w] = comps;
            if (w == v) break;
          }
          ++comps;
        }
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }
  if (count_out) *count_out = comps;
  return comp;
}

inline void Automaton::validate() const {
  alphabet.validate();
  if (state_count < 0) throw std::runtime_error("automaton: negative state count");
  for (StateId q : initial)
    if (q < 0 || q >= state_count) throw std::runtime_error("automaton: initial state out of range");
  for (const auto& t : transitions) {
    if (t.src < 0 || t.src >= state_count || t.dst < 0 || t.dst >= state_count)
      throw std::runtime_error("automaton: transition state out of range");
    if (t.sym < 0 || t.sym >= alphabet.size())
      throw std::runtime_error("automaton: transition symbol out of range");
  }
  const Acceptance& acc = acceptance;
  for (const auto& s : acc.sets) detail::check_elements(*this, s);
  for (const auto& [x, y] : acc.pairs) {
    detail::check_elements(*this, x);
    detail::check_elements(*this, y);
  }
  if (acc.kind == AcceptanceKind::Parity) {
    if (static_cast<int>(acc.priorities.size()) != element_count())
      throw std::runtime_error("acceptance: parity priority map has wrong size");
    for (int p : acc.priorities)
      if (p < 0) throw std::runtime_error("acceptance: negative priority");
  }
  if (acc.kind == AcceptanceKind::Weak) {
    // A weak set must be a union of SCCs of the transition graph.
    if (acc.locus != Locus::State)
      throw std::runtime_error("acceptance: weak condition must be state-based");
    if (!weak_set_valid(*this))
      throw std::runtime_error("acceptance: weak set is not a union of SCCs");
  }
}

inline bool weak_set_valid(const Automaton& aut) {
  const auto& w = aut.acceptance.sets.at(0);
  std::vector<int> comp = scc_ids(aut.state_count, aut.transitions);
  std::map<int, std::pair<bool, bool>> seen; // comp -> (has in-set, has out-of-set)
  for (StateId q = 0; q < aut.state_count; ++q) {
    auto& [in, out] = seen[comp[q]];
    (contains_sorted(w, q) ? in : out) = true;
  }
  for (auto& [c, f] : seen)
    if (f.first && f.second) return false;
  return true;
}

// Forward/backward determinism flags (syntactic, per the definitions).
struct DeterminismFlags {
  bool forward_deterministic = false;
  bool forward_complete = false;
  bool backward_transition_deterministic = false;
};

inline DeterminismFlags classify_determinism(const Automaton& aut) {
  DeterminismFlags f;
  int n = aut.state_count, k = aut.alphabet.size();
  std::vector<int> out(static_cast<size_t>(n) * k, 0), in(static_cast<size_t>(n) * k, 0);
  for (const auto& t : aut.transitions) {
    ++out[static_cast<size_t>(t.src) * k + t.sym];
    ++in[static_cast<size_t>(t.dst) * k + t.sym];
  }
  bool out_all_one = true, in_all_one = true;
  for (int c : out)
    if (c != 1) out_all_one = false;
  for (int c : in)
    if (c != 1) in_all_one = false;
  f.forward_complete = out_all_one && n > 0;
  f.forward_deterministic = aut.initial.size() == 1 && out_all_one;
  f.backward_transition_deterministic = in_all_one && n > 0;
  return f;
}

} // namespace omegakit
