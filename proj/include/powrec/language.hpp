#ifndef POWREC_LANGUAGE_HPP
#define POWREC_LANGUAGE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "powrec/automaton.hpp"
#include "powrec/powerset.hpp"
#include "powrec/semigroup.hpp"

namespace powrec {

// Homomorphism between free semigroups B+ -> A+, given by letter images.
struct FreeHom {
  Alphabet source;
  Alphabet target;
  std::vector<Word> images;  // one nonempty word per source letter

  FreeHom(Alphabet src, Alphabet tgt, std::vector<Word> imgs);

  bool is_lp() const;
  Word apply(std::span<const int> word) const;
};

bool lp_check(const FreeHom& f);

// {u in B+ | f(u) = w}, computed letterwise for lp morphisms and by
// factorization search in general; finite either way since letter images are
// nonempty.
std::vector<Word> free_inverse_on_words(const FreeHom& f, std::span<const int> word);

// Recognition data: letters into a finite semigroup plus an accepting subset.
// The recognized language is the multiplicative preimage of the accepting set.
struct RecognizingHom {
  Alphabet alphabet;
  FiniteSemigroup target;
  std::vector<int> letter_map;
  std::vector<bool> accepting;

  RecognizingHom(Alphabet a, FiniteSemigroup t, std::vector<int> lm,
                 std::vector<bool> acc);

  int eval(std::span<const int> word) const;  // word must be nonempty
  bool accepts(std::span<const int> word) const;
};

// Right-Cayley automaton of the recognizer: states are the semigroup elements
// plus a fresh start state.
Dfa recognize(const RecognizingHom& eta);
bool recognizes(const RecognizingHom& eta, const Dfa& l);

struct SyntacticResult {
  FiniteSemigroup semigroup;
  RecognizingHom hom;
  Dfa minimal;
};

// Transition semigroup of the canonical minimal automaton, with the letter
// homomorphism and image of L as accepting set. The identity transformation
// appears only when some nonempty word realizes it.
SyntacticResult syntactic_semigroup(const Dfa& l, std::size_t element_cap = 10000);

// f[L] for lp f, by relabeling transitions and determinizing.
Dfa forward_image_lp(const FreeHom& f, const Dfa& l);

// h^{-1}(L) for arbitrary free-semigroup h, by running each letter image.
Dfa inverse_image_hom(const FreeHom& h, const Dfa& l);

struct PowerRecognizer {
  PowerSemigroup power;   // generated from the letter-fiber images
  RecognizingHom hom;     // over the target alphabet, into power.as_semigroup()
};

// h(a) = g[f^{-1}(a)] with accepting family "meets g's accepting set"; the
// recognized language equals f[g^{-1}(accepting)].
PowerRecognizer power_recognizer(const FreeHom& f, const RecognizingHom& g,
                                 std::size_t element_cap = kDefaultElementCap);

// Indices of materialized elements meeting q_mask.
std::vector<std::size_t> diamond_set(const PowerSemigroup& p, std::uint64_t q_mask);

}  // namespace powrec

#endif  // POWREC_LANGUAGE_HPP
