#include "powrec/automaton.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <unordered_set>

namespace powrec {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw RangeError("alphabet must be nonempty");
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw RangeError("alphabet symbols must be nonempty strings");
    if (!seen.insert(s).second) throw RangeError("duplicate alphabet symbol: " + s);
  }
}

std::optional<int> Alphabet::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (symbols_[i] == name) return i;
  return std::nullopt;
}

Dfa::Dfa(Alphabet alphabet, int states, std::vector<int> transitions, int initial,
         std::vector<bool> accepting)
    : alphabet_(std::move(alphabet)),
      states_(states),
      transitions_(std::move(transitions)),
      initial_(initial),
      accepting_(std::move(accepting)) {
  if (states_ <= 0) throw RangeError("automaton needs at least one state");
  if (transitions_.size() != static_cast<std::size_t>(states_) * alphabet_.size())
    throw RangeError("transition table must be total");
  for (int t : transitions_)
    if (t < 0 || t >= states_) throw RangeError("transition target out of range");
  if (initial_ < 0 || initial_ >= states_) throw RangeError("initial state out of range");
  if (accepting_.size() != static_cast<std::size_t>(states_))
    throw RangeError("accepting vector must cover all states");
}

int Dfa::run(int q, std::span<const int> word) const {
  for (int sym : word) {
    if (sym < 0 || sym >= alphabet_.size()) throw RangeError("symbol out of range");
    q = next(q, sym);
  }
  return q;
}

bool Dfa::accepts(std::span<const int> word) const {
  if (word.empty()) return false;
  return accepting_[run(initial_, word)];
}

Nfa::Nfa(Alphabet alphabet, int states, std::vector<std::vector<int>> transitions,
         std::vector<int> initial, std::vector<bool> accepting)
    : alphabet_(std::move(alphabet)),
      states_(states),
      transitions_(std::move(transitions)),
      initial_(std::move(initial)),
      accepting_(std::move(accepting)) {
  if (states_ < 0) throw RangeError("negative state count");
  if (transitions_.size() != static_cast<std::size_t>(states_) * alphabet_.size())
    throw RangeError("transition relation has wrong arity");
  for (auto& ts : transitions_) {
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (int t : ts)
      if (t < 0 || t >= states_) throw RangeError("transition target out of range");
  }
  for (int q : initial_)
    if (q < 0 || q >= states_) throw RangeError("initial state out of range");
  if (accepting_.size() != static_cast<std::size_t>(states_))
    throw RangeError("accepting vector must cover all states");
}

// -- regex -------------------------------------------------------------------

namespace {

struct RegexNode {
  enum class Kind { symbol, concat, alt, star, plus } kind;
  int symbol = -1;              // position index for leaves (filled later)
  int sym_id = -1;              // alphabet symbol
  int lhs = -1, rhs = -1;       // children
};

struct RegexParser {
  std::string_view text;
  std::size_t pos = 0;
  const Alphabet& alphabet;
  std::vector<RegexNode> nodes;

  explicit RegexParser(std::string_view t, const Alphabet& a) : text(t), alphabet(a) {}

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos, msg); }

  bool at_end() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos;
  }

  int add(RegexNode n) {
    nodes.push_back(n);
    return static_cast<int>(nodes.size() - 1);
  }

  int parse() {
    skip_ws();
    if (at_end()) fail("empty pattern");
    int e = parse_alt();
    skip_ws();
    if (!at_end()) fail("unexpected trailing input");
    return e;
  }

  int parse_alt() {
    int lhs = parse_concat();
    skip_ws();
    while (!at_end() && peek() == '|') {
      ++pos;
      int rhs = parse_concat();
      lhs = add({RegexNode::Kind::alt, -1, -1, lhs, rhs});
      skip_ws();
    }
    return lhs;
  }

  bool starts_atom() {
    skip_ws();
    if (at_end()) return false;
    const char c = peek();
    return c == '(' || c == '\'' || (c != ')' && c != '|' && c != '*' && c != '+' &&
                                     c != '.');
  }

  int parse_concat() {
    int lhs = parse_postfix();
    while (true) {
      skip_ws();
      if (!at_end() && peek() == '.') {
        ++pos;
        int rhs = parse_postfix();
        lhs = add({RegexNode::Kind::concat, -1, -1, lhs, rhs});
      } else if (starts_atom()) {
        int rhs = parse_postfix();
        lhs = add({RegexNode::Kind::concat, -1, -1, lhs, rhs});
      } else {
        return lhs;
      }
    }
  }

  int parse_postfix() {
    int e = parse_atom();
    while (true) {
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos;
        e = add({RegexNode::Kind::star, -1, -1, e, -1});
      } else if (!at_end() && peek() == '+') {
        ++pos;
        e = add({RegexNode::Kind::plus, -1, -1, e, -1});
      } else {
        return e;
      }
    }
  }

  int parse_atom() {
    skip_ws();
    if (at_end()) fail("expected symbol or '('");
    if (peek() == '(') {
      ++pos;
      int e = parse_alt();
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos;
      return e;
    }
    if (peek() == '\'') {
      ++pos;
      std::size_t start = pos;
      while (!at_end() && peek() != '\'') ++pos;
      if (at_end()) fail("unterminated quoted symbol");
      std::string name(text.substr(start, pos - start));
      ++pos;
      auto id = alphabet.index_of(name);
      if (!id) fail("unknown symbol '" + name + "'");
      return add({RegexNode::Kind::symbol, -1, *id, -1, -1});
    }
    const char c = peek();
    if (c == ')' || c == '|' || c == '*' || c == '+' || c == '.')
      fail(std::string("unexpected '") + c + "'");
    std::string name(1, c);
    auto id = alphabet.index_of(name);
    if (!id) fail("unknown symbol '" + name + "'");
    ++pos;
    return add({RegexNode::Kind::symbol, -1, *id, -1, -1});
  }
};

struct GlushkovInfo {
  bool nullable;
  std::vector<int> first, last;  // position ids
};

}  // namespace

Nfa parse_regex(std::string_view pattern, const Alphabet& alphabet) {
  RegexParser parser(pattern, alphabet);
  const int root = parser.parse();

  // number the leaf positions left to right
  std::vector<int> position_symbol;
  for (auto& n : parser.nodes)
    if (n.kind == RegexNode::Kind::symbol) {
      n.symbol = static_cast<int>(position_symbol.size());
      position_symbol.push_back(n.sym_id);
    }
  const int m = static_cast<int>(position_symbol.size());
  std::vector<std::set<int>> follow(m);

  auto merge = [](std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
  };

  auto analyze = [&](auto&& self, int id) -> GlushkovInfo {
    const RegexNode& n = parser.nodes[id];
    switch (n.kind) {
      case RegexNode::Kind::symbol:
        return {false, {n.symbol}, {n.symbol}};
      case RegexNode::Kind::alt: {
        auto l = self(self, n.lhs), r = self(self, n.rhs);
        return {l.nullable || r.nullable, merge(l.first, r.first), merge(l.last, r.last)};
      }
      case RegexNode::Kind::concat: {
        auto l = self(self, n.lhs), r = self(self, n.rhs);
        for (int p : l.last)
          for (int q : r.first) follow[p].insert(q);
        return {l.nullable && r.nullable,
                l.nullable ? merge(l.first, r.first) : l.first,
                r.nullable ? merge(l.last, r.last) : r.last};
      }
      case RegexNode::Kind::star:
      case RegexNode::Kind::plus: {
        auto l = self(self, n.lhs);
        for (int p : l.last)
          for (int q : l.first) follow[p].insert(q);
        return {n.kind == RegexNode::Kind::star || l.nullable, l.first, l.last};
      }
    }
    throw SyntaxError(0, "unreachable");
  };
  GlushkovInfo info = analyze(analyze, root);

  // state 0 = start, state p+1 = position p
  const int states = m + 1;
  std::vector<std::vector<int>> transitions(static_cast<std::size_t>(states) *
                                            alphabet.size());
  auto tr = [&](int q, int sym) -> std::vector<int>& {
    return transitions[static_cast<std::size_t>(q) * alphabet.size() + sym];
  };
  for (int p : info.first) tr(0, position_symbol[p]).push_back(p + 1);
  for (int p = 0; p < m; ++p)
    for (int q : follow[p]) tr(p + 1, position_symbol[q]).push_back(q + 1);
  std::vector<bool> accepting(states, false);
  for (int p : info.last) accepting[p + 1] = true;
  if (info.nullable) accepting[0] = true;  // invisible under A+ semantics
  return Nfa(alphabet, states, std::move(transitions), {0}, std::move(accepting));
}

// -- subset construction ------------------------------------------------------

Dfa determinize(const Nfa& n) {
  const int asz = n.alphabet().size();
  std::map<std::vector<int>, int> id_of;
  std::vector<std::vector<int>> subsets;
  std::vector<int> transitions;
  std::vector<bool> accepting;

  auto intern = [&](std::vector<int> subset) {
    auto [it, fresh] = id_of.emplace(std::move(subset), static_cast<int>(subsets.size()));
    if (fresh) {
      subsets.push_back(it->first);
      transitions.resize(subsets.size() * asz, -1);
      bool acc = false;
      for (int q : it->first) acc = acc || n.accepting(q);
      accepting.push_back(acc);
    }
    return it->second;
  };

  std::vector<int> init = n.initial();
  std::sort(init.begin(), init.end());
  init.erase(std::unique(init.begin(), init.end()), init.end());
  const int start = intern(std::move(init));
  for (int q = 0; q < static_cast<int>(subsets.size()); ++q) {
    for (int sym = 0; sym < asz; ++sym) {
      std::vector<int> next;
      for (int s : subsets[q]) {
        const auto& ts = n.targets(s, sym);
        next.insert(next.end(), ts.begin(), ts.end());
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      transitions[static_cast<std::size_t>(q) * asz + sym] = intern(std::move(next));
    }
  }
  return Dfa(n.alphabet(), static_cast<int>(subsets.size()), std::move(transitions),
             start, std::move(accepting));
}

// -- minimization --------------------------------------------------------------

namespace {

// BFS renumbering from the initial state over alphabet order.
Dfa renumber(const Alphabet& alphabet, int states, const std::vector<int>& transitions,
             int initial, const std::vector<bool>& accepting) {
  const int asz = alphabet.size();
  std::vector<int> order(states, -1);
  std::vector<int> bfs;
  order[initial] = 0;
  bfs.push_back(initial);
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (int sym = 0; sym < asz; ++sym) {
      const int t = transitions[static_cast<std::size_t>(bfs[i]) * asz + sym];
      if (order[t] < 0) {
        order[t] = static_cast<int>(bfs.size());
        bfs.push_back(t);
      }
    }
  const int reach = static_cast<int>(bfs.size());
  std::vector<int> tr(static_cast<std::size_t>(reach) * asz);
  std::vector<bool> acc(reach, false);
  for (int q = 0; q < states; ++q) {
    if (order[q] < 0) continue;
    acc[order[q]] = accepting[q];
    for (int sym = 0; sym < asz; ++sym)
      tr[static_cast<std::size_t>(order[q]) * asz + sym] =
          order[transitions[static_cast<std::size_t>(q) * asz + sym]];
  }
  return Dfa(alphabet, reach, std::move(tr), 0, std::move(acc));
}

}  // namespace

Dfa minimize(const Dfa& d) {
  const int asz = d.alphabet().size();

  // restrict to the reachable part
  Dfa r = renumber(d.alphabet(), d.state_count(), d.transitions(), d.initial(),
                   d.accepting_states());
  const int n = r.state_count();

  // The initial state's own acceptance is invisible when no nonempty word
  // comes back to it.
  bool root_plus_reachable = false;
  for (int q = 0; q < n && !root_plus_reachable; ++q)
    for (int sym = 0; sym < asz; ++sym)
      if (r.next(q, sym) == 0) {
        root_plus_reachable = true;
        break;
      }
  std::vector<bool> acc = r.accepting_states();
  if (!root_plus_reachable) acc[0] = false;

  // Moore partition refinement
  std::vector<int> cls(n);
  for (int q = 0; q < n; ++q) cls[q] = acc[q] ? 1 : 0;
  int count = 2;
  while (true) {
    std::map<std::vector<int>, int> sig_id;
    std::vector<int> next_cls(n);
    for (int q = 0; q < n; ++q) {
      std::vector<int> sig;
      sig.reserve(asz + 1);
      sig.push_back(cls[q]);
      for (int sym = 0; sym < asz; ++sym) sig.push_back(cls[r.next(q, sym)]);
      auto [it, fresh] = sig_id.emplace(std::move(sig), static_cast<int>(sig_id.size()));
      (void)fresh;
      next_cls[q] = it->second;
    }
    const int next_count = static_cast<int>(sig_id.size());
    cls = std::move(next_cls);
    if (next_count == count) break;
    count = next_count;
  }

  // quotient automaton
  std::vector<int> qtr(static_cast<std::size_t>(count) * asz, -1);
  std::vector<bool> qacc(count, false);
  for (int q = 0; q < n; ++q) {
    qacc[cls[q]] = qacc[cls[q]] || acc[q];
    for (int sym = 0; sym < asz; ++sym)
      qtr[static_cast<std::size_t>(cls[q]) * asz + sym] = cls[r.next(q, sym)];
  }
  int initial = cls[0];

  // If the initial class is only reachable by the empty word and some other
  // class has the same transition row, the two are A+-equivalent; fold them.
  if (!root_plus_reachable) {
    bool alone = true;
    for (int q = 1; q < n && alone; ++q)
      if (cls[q] == initial) alone = false;
    if (alone) {
      for (int c = 0; c < count && alone; ++c) {
        if (c == initial) continue;
        bool same_row = true;
        for (int sym = 0; sym < asz; ++sym)
          if (qtr[static_cast<std::size_t>(c) * asz + sym] !=
              qtr[static_cast<std::size_t>(initial) * asz + sym]) {
            same_row = false;
            break;
          }
        if (same_row) {
          // redirect everything into c and drop the initial class
          for (auto& t : qtr)
            if (t == initial) t = c;
          initial = c;
          break;
        }
      }
    }
  }

  return renumber(d.alphabet(), count, qtr, initial, qacc);
}

// -- boolean operations ---------------------------------------------------------

Dfa boolean_op(const Dfa& a, const Dfa& b, BoolOp op) {
  if (!(a.alphabet() == b.alphabet()))
    throw AlphabetMismatchError("boolean operation on different alphabets");
  const int asz = a.alphabet().size();
  std::map<std::pair<int, int>, int> id_of;
  std::vector<std::pair<int, int>> states;
  std::vector<int> transitions;
  std::vector<bool> accepting;
  auto combined = [&](bool x, bool y) {
    switch (op) {
      case BoolOp::intersect: return x && y;
      case BoolOp::unite: return x || y;
      case BoolOp::subtract: return x && !y;
    }
    return false;
  };
  auto intern = [&](std::pair<int, int> p) {
    auto [it, fresh] = id_of.emplace(p, static_cast<int>(states.size()));
    if (fresh) {
      states.push_back(p);
      transitions.resize(states.size() * asz, -1);
      accepting.push_back(combined(a.accepting(p.first), b.accepting(p.second)));
    }
    return it->second;
  };
  const int start = intern({a.initial(), b.initial()});
  for (int q = 0; q < static_cast<int>(states.size()); ++q)
    for (int sym = 0; sym < asz; ++sym) {
      const auto [x, y] = states[q];
      transitions[static_cast<std::size_t>(q) * asz + sym] =
          intern({a.next(x, sym), b.next(y, sym)});
    }
  return Dfa(a.alphabet(), static_cast<int>(states.size()), std::move(transitions),
             start, std::move(accepting));
}

Dfa complement(const Dfa& d) {
  std::vector<bool> acc(d.state_count());
  for (int q = 0; q < d.state_count(); ++q) acc[q] = !d.accepting(q);
  return Dfa(d.alphabet(), d.state_count(), d.transitions(), d.initial(), std::move(acc));
}

bool equivalent(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet()))
    throw AlphabetMismatchError("equivalence on different alphabets");
  const int asz = a.alphabet().size();
  std::set<std::pair<int, int>> seen;
  std::queue<std::pair<int, int>> todo;
  const std::pair<int, int> root{a.initial(), b.initial()};
  seen.insert(root);
  todo.push(root);
  while (!todo.empty()) {
    const auto [x, y] = todo.front();
    todo.pop();
    for (int sym = 0; sym < asz; ++sym) {
      const std::pair<int, int> nxt{a.next(x, sym), b.next(y, sym)};
      // every pair reached by a nonempty word must agree on acceptance
      if (a.accepting(nxt.first) != b.accepting(nxt.second)) return false;
      if (seen.insert(nxt).second) todo.push(nxt);
    }
  }
  return true;
}

Dfa quotient(const Dfa& l, std::span<const int> u, std::span<const int> v) {
  const int initial = l.run(l.initial(), u);
  std::vector<bool> acc(l.state_count());
  for (int q = 0; q < l.state_count(); ++q) acc[q] = l.accepting(l.run(q, v));
  return Dfa(l.alphabet(), l.state_count(), l.transitions(), initial, std::move(acc));
}

Dfa universal_dfa(const Alphabet& alphabet) {
  return Dfa(alphabet, 1, std::vector<int>(alphabet.size(), 0), 0, {true});
}

Dfa empty_dfa(const Alphabet& alphabet) {
  return Dfa(alphabet, 1, std::vector<int>(alphabet.size(), 0), 0, {false});
}

Dfa extend_alphabet(const Dfa& d, const Alphabet& full) {
  const int asz = full.size();
  const int dead = d.state_count();
  std::vector<int> tr(static_cast<std::size_t>(d.state_count() + 1) * asz, dead);
  for (int q = 0; q < d.state_count(); ++q)
    for (int sym = 0; sym < asz; ++sym) {
      auto sub = d.alphabet().index_of(full.name(sym));
      if (sub) tr[static_cast<std::size_t>(q) * asz + sym] = d.next(q, *sub);
    }
  for (const auto& name : d.alphabet().names())
    if (!full.index_of(name))
      throw AlphabetMismatchError("symbol '" + name + "' missing from full alphabet");
  std::vector<bool> acc = d.accepting_states();
  acc.push_back(false);
  return Dfa(full, d.state_count() + 1, std::move(tr), d.initial(), std::move(acc));
}

std::vector<Word> words_up_to(const Alphabet& alphabet, int max_len) {
  std::vector<Word> out;
  std::vector<Word> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int sym = 0; sym < alphabet.size(); ++sym) {
        Word x = w;
        x.push_back(sym);
        next.push_back(std::move(x));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::string format_word(const Alphabet& alphabet, std::span<const int> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += alphabet.name(word[i]);
  }
  return out;
}

}  // namespace powrec
