#ifndef POWREC_POWERSET_HPP
#define POWREC_POWERSET_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "powrec/semigroup.hpp"

namespace powrec {

// Subset of a base semigroup, one bit per element index.
struct Subset {
  int base_size = 0;
  std::uint64_t bits = 0;

  bool operator==(const Subset&) const = default;
};

std::string subset_literal(std::uint64_t bits, int base_size);
std::uint64_t parse_subset_literal(const std::string& text, int base_size);

// Power semigroup of a base semigroup under pointwise product.
//
// full mode: all 2^|base| subsets, indexed by bit-vector value (empty set is
// index 0); requires |base| <= 20, and a materialized table only for
// |base| <= 10. generated mode: the closure of a generator family, indexed
// in discovery order.
class PowerSemigroup {
 public:
  enum class Mode { full, generated };

  static PowerSemigroup full(FiniteSemigroup base);
  static PowerSemigroup generated(FiniteSemigroup base,
                                  const std::vector<std::uint64_t>& generators,
                                  std::size_t element_cap = kDefaultElementCap);

  const FiniteSemigroup& base() const noexcept { return base_; }
  Mode mode() const noexcept { return mode_; }

  std::size_t size() const;
  std::uint64_t mask_of(std::size_t index) const;
  std::optional<std::size_t> index_of(std::uint64_t mask) const;

  std::uint64_t product_mask(std::uint64_t a, std::uint64_t b) const;
  std::size_t product(std::size_t i, std::size_t j) const;

  // Materialized table over the element enumeration, labeled with subset
  // literals. Full mode requires |base| <= 10 (SizeLimitError).
  FiniteSemigroup as_semigroup() const;

 private:
  PowerSemigroup(FiniteSemigroup base, Mode mode) : base_(std::move(base)), mode_(mode) {}

  FiniteSemigroup base_;
  Mode mode_;
  std::vector<std::uint64_t> elements_;  // generated mode only
};

// Span presentation of a homomorphism into a power semigroup: the pairs
// (t, s) with s in h(t), with the two coordinate projections. The pair set
// may be empty (h constant empty).
struct SpanOverPower {
  FiniteSemigroup left;   // T
  FiniteSemigroup base;   // S
  std::vector<std::pair<int, int>> pairs;  // ascending (t, s)

  FiniteSemigroup as_semigroup() const;       // throws RangeError when empty
  SemigroupHomomorphism proj_left() const;    // R -> T
  SemigroupHomomorphism proj_base() const;    // R -> S
};

// Left/right Vietoris actions of a subset Q: unions of element translations.
struct VietorisActions {
  const FiniteSemigroup* base;
  std::uint64_t q;

  std::uint64_t left(std::uint64_t c) const;
  std::uint64_t right(std::uint64_t c) const;
};

struct PreimageMap {
  std::vector<int> f;          // the underlying map S -> T
  int source_size;             // |S|
  int target_size;             // |T|
  bool is_homomorphism;        // exhaustive over all subset pairs of T

  std::uint64_t operator()(std::uint64_t target_mask) const;
};

// -- operations --------------------------------------------------------------

PowerSemigroup power(const FiniteSemigroup& s);

// s |-> {s}; injective homomorphism into the materialized power semigroup.
SemigroupHomomorphism singleton_embedding(const PowerSemigroup& p);

// Q |-> g[Q] as a homomorphism P(S) -> P(T) (both full, materialized).
SemigroupHomomorphism forward_image_hom(const SemigroupHomomorphism& g);

// Q |-> f^{-1}(Q), with the homomorphism law reported (in general it fails).
PreimageMap inverse_image_map(const SemigroupHomomorphism& f);

VietorisActions vietoris_actions(const PowerSemigroup& p, std::uint64_t q_mask);

// h: T -> P(S) presented as masks per element of T. Permissive mode drops
// pairs over empty fibers; strict mode raises EmptyFiberError instead.
SpanOverPower span_decompose(const FiniteSemigroup& t,
                             const std::vector<std::uint64_t>& h_masks,
                             const FiniteSemigroup& base, bool strict = false);

// h(t) = {s | (t, s) in R}; throws NotHomomorphismError when the fiber map
// fails the homomorphism law.
std::vector<std::uint64_t> span_compose(const SpanOverPower& span);

// Verifies that masks define a homomorphism T -> P(S) under pointwise product.
bool is_power_valued_hom(const FiniteSemigroup& t,
                         const std::vector<std::uint64_t>& h_masks,
                         const FiniteSemigroup& base);

}  // namespace powrec

#endif  // POWREC_POWERSET_HPP
