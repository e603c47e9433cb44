// Shared helpers for the test suites: the figure automata, random instance
// generators, and the exhaustive lasso suite.

#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "omegakit/automaton.hpp"
#include "omegakit/lasso.hpp"

namespace omegakit::test {

inline unsigned test_seed() {
  if (const char* s = std::getenv("OMEGAKIT_SEED")) return static_cast<unsigned>(std::atoi(s));
  return 20140301u;
}

struct Rng {
  std::mt19937 eng{test_seed()};
  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(eng); }
  bool coin() { return below(2) == 1; }
};

inline SymbolAlphabet digits(int k) {
  SymbolAlphabet a;
  for (int i = 0; i < k; ++i) a.symbols.push_back(std::to_string(i));
  return a;
}

inline Automaton make_aut(int n, int nsyms, std::vector<StateId> init,
                          std::vector<Transition> trans, Acceptance acc) {
  Automaton aut;
  aut.alphabet = digits(nsyms);
  aut.state_count = n;
  aut.initial = std::move(init);
  aut.transitions = std::move(trans);
  aut.acceptance = std::move(acc);
  aut.normalize();
  aut.validate();
  return aut;
}

// The four automata of the running figure, all recognizing the words with
// finitely many 1s.
inline Automaton fig1_first() {
  return make_aut(2, 2, {0}, {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}},
                  Acceptance::buchi({1}));
}

inline Automaton fig1_second() {
  return make_aut(2, 2, {0}, {{0, 0, 0}, {0, 1, 1}, {1, 1, 1}, {1, 0, 0}},
                  Acceptance::cobuchi({0}));
}

inline Automaton fig1_second_parity() {
  Automaton a = fig1_second();
  a.acceptance = Acceptance::parity({2, 1});
  return a;
}

inline Automaton fig1_second_muller() {
  Automaton a = fig1_second();
  a.acceptance = Acceptance::muller({{0}});
  return a;
}

inline Automaton fig1_third() {
  return make_aut(4, 2, {0, 1},
                  {{0, 0, 0}, {0, 1, 0}, {0, 1, 1}, {1, 0, 1},
                   {2, 0, 2}, {2, 0, 3}, {3, 1, 3}, {3, 1, 2}},
                  Acceptance::buchi({1, 3}));
}

inline Automaton fig1_fourth() {
  Automaton a = make_aut(1, 2, {0}, {{0, 0, 0}, {0, 1, 0}}, Acceptance::trivial());
  int loop0 = a.transition_index({0, 0, 0});
  a.acceptance = Acceptance::muller({{loop0}}, Locus::Transition);
  return a;
}

inline std::vector<std::vector<SymbolId>> all_words(int max_len, int min_len, int nsyms) {
  std::vector<std::vector<SymbolId>> out;
  std::vector<std::vector<SymbolId>> cur{{}};
  for (int len = 0; len <= max_len; ++len) {
    if (len >= min_len) out.insert(out.end(), cur.begin(), cur.end());
    std::vector<std::vector<SymbolId>> next;
    for (const auto& p : cur)
      for (SymbolId s = 0; s < nsyms; ++s) {
        auto q = p;
        q.push_back(s);
        next.push_back(std::move(q));
      }
    cur = std::move(next);
  }
  return out;
}

// All lassos over nsyms symbols with |u| <= pu and 1 <= |v| <= pv.
inline std::vector<LassoWord> lasso_suite(int pu = 3, int pv = 3, int nsyms = 2) {
  std::vector<LassoWord> out;
  for (const auto& u : all_words(pu, 0, nsyms))
    for (const auto& v : all_words(pv, 1, nsyms)) out.emplace_back(u, v);
  return out;
}

inline LassoWord random_lasso(Rng& rng, int max_u = 3, int max_v = 3, int nsyms = 2) {
  std::vector<SymbolId> u, v;
  int lu = rng.below(max_u + 1), lv = 1 + rng.below(max_v);
  for (int i = 0; i < lu; ++i) u.push_back(rng.below(nsyms));
  for (int i = 0; i < lv; ++i) v.push_back(rng.below(nsyms));
  return LassoWord(u, v);
}

inline Automaton random_structure(Rng& rng, int n, int nsyms, bool complete = false) {
  Automaton aut;
  aut.alphabet = digits(nsyms);
  aut.state_count = n;
  for (StateId q = 0; q < n; ++q)
    for (SymbolId a = 0; a < nsyms; ++a) {
      int count = complete ? 1 : rng.below(3); // 0, 1 or 2 successors
      for (int i = 0; i < count; ++i) aut.transitions.push_back({q, a, rng.below(n)});
    }
  aut.initial.push_back(rng.below(n));
  if (rng.coin() && n > 1) aut.initial.push_back(rng.below(n));
  aut.normalize();
  return aut;
}

inline std::vector<int> random_subset(Rng& rng, int n) {
  std::vector<int> s;
  for (int i = 0; i < n; ++i)
    if (rng.coin()) s.push_back(i);
  return s;
}

inline Automaton random_buchi(Rng& rng, int n, int nsyms = 2, bool complete = false) {
  Automaton aut = random_structure(rng, n, nsyms, complete);
  auto b = random_subset(rng, n);
  if (b.empty()) b.push_back(rng.below(n));
  aut.acceptance = Acceptance::buchi(b);
  aut.validate();
  return aut;
}

inline Automaton random_automaton(Rng& rng, int n, AcceptanceKind kind, int nsyms = 2) {
  Automaton aut = random_structure(rng, n, nsyms);
  switch (kind) {
    case AcceptanceKind::Trivial:
      aut.acceptance = Acceptance::trivial();
      break;
    case AcceptanceKind::Buchi:
      aut.acceptance = Acceptance::buchi(random_subset(rng, n));
      break;
    case AcceptanceKind::CoBuchi:
      aut.acceptance = Acceptance::cobuchi(random_subset(rng, n));
      break;
    case AcceptanceKind::Weak: {
      std::vector<int> comp = scc_ids(aut.state_count, aut.transitions);
      int nc = 0;
      for (int c : comp) nc = std::max(nc, c + 1);
      std::vector<int> w;
      auto chosen = random_subset(rng, nc);
      for (StateId q = 0; q < n; ++q)
        if (contains_sorted(chosen, comp[q])) w.push_back(q);
      aut.acceptance = Acceptance::weak(w);
      break;
    }
    case AcceptanceKind::GenBuchi: {
      int k = 1 + rng.below(2);
      std::vector<std::vector<int>> sets;
      for (int i = 0; i < k; ++i) sets.push_back(random_subset(rng, n));
      aut.acceptance = Acceptance::gen_buchi(sets);
      break;
    }
    case AcceptanceKind::Parity: {
      std::vector<int> prios;
      for (int q = 0; q < n; ++q) prios.push_back(rng.below(2 * n));
      aut.acceptance = Acceptance::parity(prios);
      break;
    }
    case AcceptanceKind::Rabin:
    case AcceptanceKind::Streett: {
      int k = rng.below(3);
      std::vector<std::pair<std::vector<int>, std::vector<int>>> ps;
      for (int i = 0; i < k; ++i) ps.emplace_back(random_subset(rng, n), random_subset(rng, n));
      aut.acceptance = kind == AcceptanceKind::Rabin ? Acceptance::rabin(ps)
                                                     : Acceptance::streett(ps);
      break;
    }
    case AcceptanceKind::Muller: {
      int k = rng.below(4);
      std::vector<std::vector<int>> sets;
      for (int i = 0; i < k; ++i) {
        auto s = random_subset(rng, n);
        if (!s.empty()) sets.push_back(s);
      }
      aut.acceptance = Acceptance::muller(sets);
      break;
    }
  }
  aut.validate();
  return aut;
}

} // namespace omegakit::test
