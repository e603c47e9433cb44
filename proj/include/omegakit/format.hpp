// format.hpp
// Line-oriented textual format for automata and lasso words.
//
//   # comment
//   alphabet 0 1
//   states 2
//   initial 0
//   transitions
//   0 0 0
//   0 0 1
//   end
//   acceptance buchi state 1
//
// Acceptance forms: trivial | buchi state|trans <elems> | cobuchi state <ids>
// | weak state <ids> | genbuchi state { ids } ... | parity state <id:prio ...>
// | rabin state ( ids ; ids ) ... | streett state ( ids ; ids ) ... |
// muller state|trans { elems } ...
// Transition elements are written src.sym.dst.
// Lasso syntax: "u;v" with whitespace-separated symbols; u may be empty.

#pragma once

#include <sstream>
#include <string>

#include "omegakit/automaton.hpp"
#include "omegakit/lasso.hpp"

namespace omegakit {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int l, const std::string& msg)
      : std::runtime_error("line " + std::to_string(l) + ": " + msg), line(l) {}
};

namespace fmt_detail {

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::string spaced;
  for (char c : line) {
    if (c == '#') break;
    if (c == '{' || c == '}' || c == '(' || c == ')' || c == ';') {
      spaced += ' ';
      spaced += c;
      spaced += ' ';
    } else {
      spaced += c;
    }
  }
  std::vector<std::string> toks;
  std::istringstream in(spaced);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

inline int parse_int(const std::string& t, int line, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + t + "'");
  }
}

struct ElemParser {
  const Automaton& aut;
  Locus locus;
  int line;

  int operator()(const std::string& tok) const {
    if (locus == Locus::State) {
      int q = parse_int(tok, line, "state id");
      if (q < 0 || q >= aut.state_count) throw ParseError(line, "undeclared state " + tok);
      return q;
    }
    auto p1 = tok.find('.');
    auto p2 = tok.rfind('.');
    if (p1 == std::string::npos || p1 == p2)
      throw ParseError(line, "expected transition element src.sym.dst, got '" + tok + "'");
    int src = parse_int(tok.substr(0, p1), line, "state id");
    std::string sym = tok.substr(p1 + 1, p2 - p1 - 1);
    int dst = parse_int(tok.substr(p2 + 1), line, "state id");
    if (src < 0 || src >= aut.state_count || dst < 0 || dst >= aut.state_count)
      throw ParseError(line, "undeclared state in '" + tok + "'");
    auto s = aut.alphabet.index_of(sym);
    if (!s) throw ParseError(line, "unknown symbol '" + sym + "'");
    int ti = aut.transition_index(Transition{src, *s, dst});
    if (ti < 0) throw ParseError(line, "undeclared transition '" + tok + "'");
    return ti;
  }
};

} // namespace fmt_detail

inline Automaton parse_automaton(const std::string& text) {
  using fmt_detail::parse_int;
  using fmt_detail::tokens_of;

  Automaton aut;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_alphabet = false, have_states = false, have_initial = false,
       have_transitions = false, have_acceptance = false;

  auto next_tokens = [&](std::vector<std::string>& toks) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      toks = tokens_of(line);
      if (!toks.empty()) return true;
    }
    return false;
  };

  std::vector<std::string> toks;
  while (next_tokens(toks)) {
    const std::string& kw = toks[0];
    if (kw == "alphabet") {
      if (have_alphabet) throw ParseError(lineno, "duplicate alphabet section");
      for (size_t i = 1; i < toks.size(); ++i) aut.alphabet.symbols.push_back(toks[i]);
      try {
        aut.alphabet.validate();
      } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
      }
      have_alphabet = true;
    } else if (kw == "states") {
      if (!have_alphabet) throw ParseError(lineno, "states before alphabet");
      if (toks.size() != 2) throw ParseError(lineno, "expected: states <n>");
      aut.state_count = parse_int(toks[1], lineno, "state count");
      if (aut.state_count < 0) throw ParseError(lineno, "negative state count");
      have_states = true;
    } else if (kw == "initial") {
      if (!have_states) throw ParseError(lineno, "initial before states");
      for (size_t i = 1; i < toks.size(); ++i) {
        int q = parse_int(toks[i], lineno, "state id");
        if (q < 0 || q >= aut.state_count)
          throw ParseError(lineno, "undeclared state " + toks[i]);
        aut.initial.push_back(q);
      }
      have_initial = true;
    } else if (kw == "transitions") {
      if (!have_initial) throw ParseError(lineno, "transitions before initial");
      if (toks.size() != 1) throw ParseError(lineno, "unexpected tokens after 'transitions'");
      bool closed = false;
      while (next_tokens(toks)) {
        if (toks.size() == 1 && toks[0] == "end") {
          closed = true;
          break;
        }
        if (toks.size() != 3) throw ParseError(lineno, "expected: src sym dst");
        int src = parse_int(toks[0], lineno, "state id");
        int dst = parse_int(toks[2], lineno, "state id");
        if (src < 0 || src >= aut.state_count)
          throw ParseError(lineno, "undeclared state " + toks[0]);
        if (dst < 0 || dst >= aut.state_count)
          throw ParseError(lineno, "undeclared state " + toks[2]);
        auto s = aut.alphabet.index_of(toks[1]);
        if (!s) throw ParseError(lineno, "unknown symbol '" + toks[1] + "'");
        aut.transitions.push_back({src, *s, dst});
      }
      if (!closed) throw ParseError(lineno, "transitions block not closed by 'end'");
      aut.normalize();
      have_transitions = true;
    } else if (kw == "acceptance") {
      if (!have_transitions) throw ParseError(lineno, "acceptance before transitions");
      if (have_acceptance) throw ParseError(lineno, "duplicate acceptance line");
      if (toks.size() < 2) throw ParseError(lineno, "missing acceptance kind");
      const std::string& kind = toks[1];
      size_t i = 2;
      Locus locus = Locus::State;
      auto read_locus = [&](bool allow_trans) {
        if (i >= toks.size()) throw ParseError(lineno, "missing acceptance locus");
        if (toks[i] == "state") locus = Locus::State;
        else if (toks[i] == "trans" && allow_trans) locus = Locus::Transition;
        else throw ParseError(lineno, "bad acceptance locus '" + toks[i] + "'");
        ++i;
      };
      if (kind == "trivial") {
        if (toks.size() != 2) throw ParseError(lineno, "unexpected tokens after 'trivial'");
        aut.acceptance = Acceptance::trivial();
      } else if (kind == "buchi" || kind == "cobuchi" || kind == "weak") {
        read_locus(kind == "buchi");
        fmt_detail::ElemParser elem{aut, locus, lineno};
        std::vector<int> set;
        for (; i < toks.size(); ++i) set.push_back(elem(toks[i]));
        if (kind == "buchi") aut.acceptance = Acceptance::buchi(set, locus);
        else if (kind == "cobuchi") aut.acceptance = Acceptance::cobuchi(set, locus);
        else aut.acceptance = Acceptance::weak(set, locus);
      } else if (kind == "genbuchi" || kind == "muller") {
        read_locus(kind == "muller");
        fmt_detail::ElemParser elem{aut, locus, lineno};
        std::vector<std::vector<int>> sets;
        while (i < toks.size()) {
          if (toks[i] != "{") throw ParseError(lineno, "expected '{'");
          ++i;
          std::vector<int> set;
          while (i < toks.size() && toks[i] != "}") set.push_back(elem(toks[i++]));
          if (i >= toks.size()) throw ParseError(lineno, "unclosed '{'");
          ++i;
          sets.push_back(std::move(set));
        }
        if (kind == "genbuchi") aut.acceptance = Acceptance::gen_buchi(sets, locus);
        else aut.acceptance = Acceptance::muller(sets, locus);
      } else if (kind == "parity") {
        read_locus(false);
        std::vector<int> prios(aut.state_count, -1);
        for (; i < toks.size(); ++i) {
          auto c = toks[i].find(':');
          if (c == std::string::npos)
            throw ParseError(lineno, "expected id:prio, got '" + toks[i] + "'");
          int q = parse_int(toks[i].substr(0, c), lineno, "state id");
          int p = parse_int(toks[i].substr(c + 1), lineno, "priority");
          if (q < 0 || q >= aut.state_count)
            throw ParseError(lineno, "undeclared state " + toks[i].substr(0, c));
          if (p < 0) throw ParseError(lineno, "negative priority");
          prios[q] = p;
        }
        for (int q = 0; q < aut.state_count; ++q)
          if (prios[q] < 0)
            throw ParseError(lineno, "state " + std::to_string(q) + " has no priority");
        aut.acceptance = Acceptance::parity(prios, locus);
      } else if (kind == "rabin" || kind == "streett") {
        read_locus(false);
        fmt_detail::ElemParser elem{aut, locus, lineno};
        std::vector<std::pair<std::vector<int>, std::vector<int>>> ps;
        while (i < toks.size()) {
          if (toks[i] != "(") throw ParseError(lineno, "expected '('");
          ++i;
          std::vector<int> a, b;
          while (i < toks.size() && toks[i] != ";") a.push_back(elem(toks[i++]));
          if (i >= toks.size()) throw ParseError(lineno, "expected ';' in pair");
          ++i;
          while (i < toks.size() && toks[i] != ")") b.push_back(elem(toks[i++]));
          if (i >= toks.size()) throw ParseError(lineno, "unclosed '('");
          ++i;
          ps.emplace_back(std::move(a), std::move(b));
        }
        if (kind == "rabin") aut.acceptance = Acceptance::rabin(ps, locus);
        else aut.acceptance = Acceptance::streett(ps, locus);
      } else {
        throw ParseError(lineno, "unknown acceptance kind '" + kind + "'");
      }
      have_acceptance = true;
    } else {
      throw ParseError(lineno, "unknown section '" + kw + "'");
    }
  }
  if (!have_acceptance)
    throw ParseError(lineno, "input ends before a complete automaton was read");
  try {
    aut.validate();
  } catch (const std::exception& e) {
    throw ParseError(lineno, e.what());
  }
  return aut;
}

inline std::string print_automaton(const Automaton& aut) {
  std::ostringstream out;
  out << "alphabet";
  for (const auto& s : aut.alphabet.symbols) out << ' ' << s;
  out << "\nstates " << aut.state_count << "\ninitial";
  for (StateId q : aut.initial) out << ' ' << q;
  out << "\ntransitions\n";
  for (const auto& t : aut.transitions)
    out << t.src << ' ' << aut.alphabet.name(t.sym) << ' ' << t.dst << '\n';
  out << "end\nacceptance ";

  const Acceptance& acc = aut.acceptance;
  auto elem_str = [&](int e) {
    if (acc.locus == Locus::State) return std::to_string(e);
    const auto& t = aut.transitions[e];
    return std::to_string(t.src) + "." + aut.alphabet.name(t.sym) + "." + std::to_string(t.dst);
  };
  const char* locus_str = acc.locus == Locus::State ? "state" : "trans";
  switch (acc.kind) {
    case AcceptanceKind::Trivial:
      out << "trivial";
      break;
    case AcceptanceKind::Buchi:
    case AcceptanceKind::CoBuchi:
    case AcceptanceKind::Weak:
      out << kind_name(acc.kind) << ' ' << locus_str;
      for (int e : acc.sets.at(0)) out << ' ' << elem_str(e);
      break;
    case AcceptanceKind::GenBuchi:
    case AcceptanceKind::Muller:
      out << kind_name(acc.kind) << ' ' << locus_str;
      for (const auto& s : acc.sets) {
        out << " {";
        for (int e : s) out << ' ' << elem_str(e);
        out << " }";
      }
      break;
    case AcceptanceKind::Parity:
      out << "parity " << locus_str;
      for (size_t e = 0; e < acc.priorities.size(); ++e)
        out << ' ' << elem_str(static_cast<int>(e)) << ':' << acc.priorities[e];
      break;
    case AcceptanceKind::Rabin:
    case AcceptanceKind::Streett:
      out << kind_name(acc.kind) << ' ' << locus_str;
      for (const auto& [a, b] : acc.pairs) {
        out << " (";
        for (int e : a) out << ' ' << elem_str(e);
        out << " ;";
        for (int e : b) out << ' ' << elem_str(e);
        out << " )";
      }
      break;
  }
  out << '\n';
  return out.str();
}

inline LassoWord parse_lasso(const std::string& text, const SymbolAlphabet& alphabet) {
  auto semi = text.find(';');
  if (semi == std::string::npos) throw ParseError(1, "lasso: missing ';'");
  if (text.find(';', semi + 1) != std::string::npos)
    throw ParseError(1, "lasso: more than one ';'");
  auto parse_side = [&](const std::string& side) {
    std::vector<SymbolId> out;
    std::istringstream in(side);
    std::string t;
    while (in >> t) {
      auto s = alphabet.index_of(t);
      if (!s) throw ParseError(1, "lasso: unknown symbol '" + t + "'");
      out.push_back(*s);
    }
    return out;
  };
  std::vector<SymbolId> u = parse_side(text.substr(0, semi));
  std::vector<SymbolId> v = parse_side(text.substr(semi + 1));
  if (v.empty()) throw ParseError(1, "lasso: empty period");
  return LassoWord(std::move(u), std::move(v));
}

inline std::string print_lasso(const LassoWord& w, const SymbolAlphabet& alphabet) {
  std::ostringstream out;
  for (size_t i = 0; i < w.prefix.size(); ++i) {
    if (i) out << ' ';
    out << alphabet.name(w.prefix[i]);
  }
  out << ';';
  for (size_t i = 0; i < w.period.size(); ++i) {
    if (i) out << ' ';
    out << alphabet.name(w.period[i]);
  }
  return out.str();
}

} // namespace omegakit
