// lasso.hpp
// Ultimately periodic words u v^omega and lasso-shaped runs.

#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "omegakit/automaton.hpp"

namespace omegakit {

struct LassoWord {
  std::vector<SymbolId> prefix;
  std::vector<SymbolId> period; // non-empty

  LassoWord() = default;
  LassoWord(std::vector<SymbolId> u, std::vector<SymbolId> v)
      : prefix(std::move(u)), period(std::move(v)) {
    if (period.empty()) throw std::runtime_error("lasso: empty period");
  }

  SymbolId at(size_t i) const {
    if (i < prefix.size()) return prefix[i];
    return period[(i - prefix.size()) % period.size()];
  }

  // Rotate the period left by k, absorbing the rotated part into the prefix.
  LassoWord rotated(size_t k) const {
    LassoWord w = *this;
    for (size_t i = 0; i < k; ++i) {
      w.prefix.push_back(w.period.front());
      w.period.erase(w.period.begin());
      w.period.push_back(w.prefix.back());
    }
    return w;
  }

  // Replace the period by its k-fold repetition.
  LassoWord unrolled(size_t k) const {
    if (k == 0) throw std::runtime_error("lasso: zero unroll");
    LassoWord w = *this;
    std::vector<SymbolId> v;
    for (size_t i = 0; i < k; ++i) v.insert(v.end(), period.begin(), period.end());
    w.period = std::move(v);
    return w;
  }

  bool operator==(const LassoWord&) const = default;
};

struct LassoRun {
  std::vector<StateId> prefix_states; // r(0..k-1), k = |u| + s*|v| for a spin-up s
  std::vector<StateId> period_states; // non-empty, length a multiple of |v|, cycles
};

// Checks that a lasso run is an actual run of the automaton on the word and
// that the last period state loops back to the first.
inline bool lasso_run_valid(const Automaton& aut, const LassoWord& w, const LassoRun& r) {
  if (r.period_states.empty()) return false;
  if (r.period_states.size() % w.period.size() != 0) return false;
  size_t k = r.prefix_states.size();
  if (k < w.prefix.size() || (k - w.prefix.size()) % w.period.size() != 0) return false;
  auto has = [&](StateId a, SymbolId s, StateId b) {
    return aut.transition_index(Transition{a, s, b}) >= 0;
  };
  std::vector<StateId> all = r.prefix_states;
  all.insert(all.end(), r.period_states.begin(), r.period_states.end());
  for (size_t i = 0; i + 1 < all.size(); ++i)
    if (!has(all[i], w.at(i), all[i + 1])) return false;
  if (!has(all.back(), w.at(all.size() - 1), r.period_states.front())) return false;
  return true;
}

// The set of elements (states or transitions) occurring infinitely often in
// the run, i.e. those produced along the period cycle.
inline std::vector<int> lasso_run_inf_set(const Automaton& aut, const LassoWord& w,
                                          const LassoRun& r) {
  std::vector<int> inf;
  size_t base = r.prefix_states.size();
  size_t m = r.period_states.size();
  for (size_t i = 0; i < m; ++i) {
    StateId a = r.period_states[i];
    StateId b = (i + 1 < m) ? r.period_states[i + 1] : r.period_states[0];
    SymbolId s = w.at(base + i);
    if (aut.acceptance.locus == Locus::State) {
      inf.push_back(b);
    } else {
      int ti = aut.transition_index(Transition{a, s, b});
      if (ti < 0) throw std::runtime_error("lasso run: missing transition");
      inf.push_back(ti);
    }
  }
  std::sort(inf.begin(), inf.end());
  inf.erase(std::unique(inf.begin(), inf.end()), inf.end());
  return inf;
}

} // namespace omegakit
