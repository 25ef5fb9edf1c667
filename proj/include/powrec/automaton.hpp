#ifndef POWREC_AUTOMATON_HPP
#define POWREC_AUTOMATON_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "powrec/error.hpp"

namespace powrec {

// Ordered list of distinct symbol names. Compound symbols (e.g. "a|01") are
// ordinary names here.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  int size() const noexcept { return static_cast<int>(symbols_.size()); }
  const std::string& name(int i) const { return symbols_[i]; }
  const std::vector<std::string>& names() const noexcept { return symbols_; }
  std::optional<int> index_of(std::string_view name) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> symbols_;
};

using Word = std::vector<int>;  // symbol indices

// Deterministic automaton with total transitions. The language is the set of
// nonempty words whose run ends in an accepting state; whether the initial
// state is accepting never affects the language.
class Dfa {
 public:
  Dfa(Alphabet alphabet, int states, std::vector<int> transitions, int initial,
      std::vector<bool> accepting);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  int state_count() const noexcept { return states_; }
  int initial() const noexcept { return initial_; }
  bool accepting(int q) const { return accepting_[q]; }
  const std::vector<bool>& accepting_states() const noexcept { return accepting_; }
  int next(int q, int sym) const {
    return transitions_[static_cast<std::size_t>(q) * alphabet_.size() + sym];
  }
  const std::vector<int>& transitions() const noexcept { return transitions_; }

  int run(int q, std::span<const int> word) const;
  bool accepts(std::span<const int> word) const;

  bool operator==(const Dfa&) const = default;

 private:
  Alphabet alphabet_;
  int states_;
  std::vector<int> transitions_;  // state * |A| + sym
  int initial_;
  std::vector<bool> accepting_;
};

class Nfa {
 public:
  Nfa(Alphabet alphabet, int states, std::vector<std::vector<int>> transitions,
      std::vector<int> initial, std::vector<bool> accepting);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  int state_count() const noexcept { return states_; }
  const std::vector<int>& targets(int q, int sym) const {
    return transitions_[static_cast<std::size_t>(q) * alphabet_.size() + sym];
  }
  const std::vector<int>& initial() const noexcept { return initial_; }
  bool accepting(int q) const { return accepting_[q]; }

 private:
  Alphabet alphabet_;
  int states_;
  std::vector<std::vector<int>> transitions_;  // state * |A| + sym -> sorted targets
  std::vector<int> initial_;
  std::vector<bool> accepting_;
};

enum class BoolOp { intersect, unite, subtract };

// Glushkov position construction. Grammar: symbols, '|' union, juxtaposition
// or '.' concatenation, '*', '+', parentheses; compound symbols quoted as
// 'a|01'. The automaton's A+ language is the regex language minus the empty
// word.
Nfa parse_regex(std::string_view pattern, const Alphabet& alphabet);

// Subset construction with BFS state numbering over alphabet order.
Dfa determinize(const Nfa& n);

// Canonical minimal automaton for the A+ language: Moore refinement over the
// reachable part, with the invisible acceptance of an initial state that no
// nonempty word reaches normalized away.
Dfa minimize(const Dfa& d);

Dfa boolean_op(const Dfa& a, const Dfa& b, BoolOp op);
Dfa complement(const Dfa& d);
bool equivalent(const Dfa& a, const Dfa& b);

// {w in A+ | uwv in L}; u, v may be empty.
Dfa quotient(const Dfa& l, std::span<const int> u, std::span<const int> v);

Dfa universal_dfa(const Alphabet& alphabet);  // A+
Dfa empty_dfa(const Alphabet& alphabet);

// Lifts a language over a subalphabet to a larger alphabet (missing symbols
// lead to a dead state). Symbol names of `sub` must all occur in `full`.
Dfa extend_alphabet(const Dfa& d, const Alphabet& full);

// All nonempty words of length <= max_len, in length-then-lex order.
std::vector<Word> words_up_to(const Alphabet& alphabet, int max_len);

std::string format_word(const Alphabet& alphabet, std::span<const int> word);

}  // namespace powrec

#endif  // POWREC_AUTOMATON_HPP
