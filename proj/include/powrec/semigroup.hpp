#ifndef POWREC_SEMIGROUP_HPP
#define POWREC_SEMIGROUP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "powrec/error.hpp"

namespace powrec {

inline constexpr std::size_t kDefaultElementCap = std::size_t(1) << 16;

// Finite semigroup as a multiplication table over dense element indices.
// Immutable after construction; associativity is checked exhaustively.
class FiniteSemigroup {
 public:
  // Throws RangeError / AssociativityError.
  FiniteSemigroup(int size, std::vector<int> table,
                  std::vector<std::string> labels = {});

  static FiniteSemigroup from_rows(const std::vector<std::vector<int>>& rows,
                                   std::vector<std::string> labels = {});

  int size() const noexcept { return n_; }

  int product(int x, int y) const { return table_[static_cast<std::size_t>(x) * n_ + y]; }

  // x^exp for exp >= 1, by iterated multiplication.
  int power(int x, long exp) const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  // Label when present, else the decimal index.
  std::string label(int x) const;

  bool same_table(const FiniteSemigroup& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

  bool operator==(const FiniteSemigroup& other) const = default;

 private:
  int n_;
  std::vector<int> table_;
  std::vector<std::string> labels_;
};

// Homomorphism between finite semigroups; the law map[x*y] = map[x]*map[y]
// is verified on construction (NotHomomorphismError).
class SemigroupHomomorphism {
 public:
  SemigroupHomomorphism(FiniteSemigroup source, FiniteSemigroup target,
                        std::vector<int> map);

  const FiniteSemigroup& source() const noexcept { return source_; }
  const FiniteSemigroup& target() const noexcept { return target_; }
  const std::vector<int>& map() const noexcept { return map_; }
  int operator()(int x) const { return map_[x]; }

  bool surjective() const;

  bool operator==(const SemigroupHomomorphism& other) const = default;

 private:
  FiniteSemigroup source_;
  FiniteSemigroup target_;
  std::vector<int> map_;
};

// Product-closed subset of a parent semigroup, elements in ascending order.
struct SubsemigroupWitness {
  FiniteSemigroup parent;
  std::vector<int> elements;

  bool contains(int x) const;
  // Reindexed multiplication table over `elements`; throws RangeError when
  // the subset is empty.
  FiniteSemigroup as_semigroup() const;
};

// S divides T: a subsemigroup U <= T together with a surjection U ->> S.
struct DivisionWitness {
  SubsemigroupWitness sub;        // U inside T
  SemigroupHomomorphism onto;     // U.as_semigroup() ->> S, surjective
};

struct DivisionSearchOptions {
  int max_generators = 2;
  std::size_t candidate_budget = std::size_t(1) << 20;
};

// -- operations ------------------------------------------------------------

FiniteSemigroup validate(const std::vector<std::vector<int>>& rows,
                         std::vector<std::string> labels = {});

FiniteSemigroup direct_product(const FiniteSemigroup& s, const FiniteSemigroup& t,
                               std::size_t element_cap = kDefaultElementCap);

SubsemigroupWitness generated_subsemigroup(const FiniteSemigroup& s,
                                           const std::vector<int>& generators);

// x^n = x^{n+1} for every x, with n = |S|.
bool is_aperiodic(const FiniteSemigroup& s);

// Searches subsemigroups of `t` (generated by up to max_generators elements)
// for a surjection onto `s`. Candidate generator sets are tried by
// (generator count, closure size, generator order); the first witness wins.
// Absence within the bound is "not found", never a disproof.
std::optional<DivisionWitness> divides(const FiniteSemigroup& s,
                                       const FiniteSemigroup& t,
                                       const DivisionSearchOptions& opts = {});

// (left, right) with left[x] = s*x and right[x] = x*s.
std::pair<std::vector<int>, std::vector<int>> translations(const FiniteSemigroup& s,
                                                           int elem);

// S x 2 where 2 is the two-element meet semilattice on {0, 1}; element (x, b)
// has index 2*x + b.
FiniteSemigroup adjoin_semilattice_bit(const FiniteSemigroup& s,
                                       std::size_t element_cap = kDefaultElementCap);

// Witness composition: from S -< T and T -< U produce a checkable S -< U.
DivisionWitness compose_divisions(const DivisionWitness& s_div_t,
                                  const DivisionWitness& t_div_u);

// Image of a subsemigroup under a homomorphism, re-closed for safety.
SubsemigroupWitness homomorphic_image(const SemigroupHomomorphism& phi,
                                      const SubsemigroupWitness& sub);

// -- small catalog ----------------------------------------------------------

FiniteSemigroup trivial_semigroup();
FiniteSemigroup cyclic_group(int n);       // Z_n, addition mod n
FiniteSemigroup brandt_b2();               // {a, b, ab, ba, 0}
FiniteSemigroup meet_semilattice(int n);   // chain 0 < 1 < ... < n-1, product = min
FiniteSemigroup left_zero(int n);          // x*y = x
FiniteSemigroup right_zero(int n);         // x*y = y
FiniteSemigroup null_semigroup(int n);     // x*y = 0
FiniteSemigroup klein_four();              // Z_2 x Z_2

// Catalog entries up to the given size, in a fixed order (used by the
// exhaustive suites that quantify over "all cataloged semigroups").
std::vector<FiniteSemigroup> semigroup_catalog(int max_size);

}  // namespace powrec

#endif  // POWREC_SEMIGROUP_HPP
