#include "powrec/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace powrec {

FiniteSemigroup::FiniteSemigroup(int size, std::vector<int> table,
                                 std::vector<std::string> labels)
    : n_(size), table_(std::move(table)), labels_(std::move(labels)) {
  if (n_ <= 0) throw RangeError("semigroup size must be positive");
  if (table_.size() != static_cast<std::size_t>(n_) * n_)
    throw RangeError("multiplication table must have size n*n");
  for (int v : table_)
    if (v < 0 || v >= n_)
      throw RangeError("table entry " + std::to_string(v) + " out of range [0, " +
                       std::to_string(n_ - 1) + "]");
  if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n_))
    throw RangeError("label count must equal semigroup size");
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      for (int z = 0; z < n_; ++z)
        if (product(product(x, y), z) != product(x, product(y, z)))
          throw AssociativityError(
              x, y, z,
              "associativity fails at (" + std::to_string(x) + ", " +
                  std::to_string(y) + ", " + std::to_string(z) + ")");
}

FiniteSemigroup FiniteSemigroup::from_rows(const std::vector<std::vector<int>>& rows,
                                           std::vector<std::string> labels) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw RangeError("table rows must have length n");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return FiniteSemigroup(n, std::move(flat), std::move(labels));
}

int FiniteSemigroup::power(int x, long exp) const {
  if (x < 0 || x >= n_) throw RangeError("element out of range");
  if (exp < 1) throw RangeError("exponent must be >= 1");
  int acc = x;
  for (long i = 1; i < exp; ++i) acc = product(acc, x);
  return acc;
}

std::string FiniteSemigroup::label(int x) const {
  if (x < 0 || x >= n_) throw RangeError("element out of range");
  if (!labels_.empty()) return labels_[x];
  return std::to_string(x);
}

FiniteSemigroup validate(const std::vector<std::vector<int>>& rows,
                         std::vector<std::string> labels) {
  return FiniteSemigroup::from_rows(rows, std::move(labels));
}

SemigroupHomomorphism::SemigroupHomomorphism(FiniteSemigroup source,
                                             FiniteSemigroup target,
                                             std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != static_cast<std::size_t>(source_.size()))
    throw RangeError("homomorphism map must cover the source");
  for (int v : map_)
    if (v < 0 || v >= target_.size()) throw RangeError("homomorphism image out of range");
  for (int x = 0; x < source_.size(); ++x)
    for (int y = 0; y < source_.size(); ++y)
      if (map_[source_.product(x, y)] != target_.product(map_[x], map_[y]))
        throw NotHomomorphismError("map violates the homomorphism law at (" +
                                   std::to_string(x) + ", " + std::to_string(y) + ")");
}

bool SemigroupHomomorphism::surjective() const {
  std::vector<bool> hit(target_.size(), false);
  for (int v : map_) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool SubsemigroupWitness::contains(int x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

FiniteSemigroup SubsemigroupWitness::as_semigroup() const {
  if (elements.empty()) throw RangeError("empty subsemigroup has no table");
  const int m = static_cast<int>(elements.size());
  std::vector<int> pos(parent.size(), -1);
  for (int i = 0; i < m; ++i) pos[elements[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int p = parent.product(elements[i], elements[j]);
      if (pos[p] < 0) throw RangeError("element set is not product-closed");
      table[static_cast<std::size_t>(i) * m + j] = pos[p];
    }
  std::vector<std::string> labels;
  if (parent.has_labels()) {
    labels.reserve(m);
    for (int e : elements) labels.push_back(parent.label(e));
  }
  return FiniteSemigroup(m, std::move(table), std::move(labels));
}

FiniteSemigroup direct_product(const FiniteSemigroup& s, const FiniteSemigroup& t,
                               std::size_t element_cap) {
  const std::size_t n = static_cast<std::size_t>(s.size()) * t.size();
  if (n > element_cap)
    throw SizeLimitError("product size " + std::to_string(n) +
                         " exceeds element cap " + std::to_string(element_cap));
  const int nt = t.size();
  std::vector<int> table(n * n);
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < nt; ++b)
      for (int c = 0; c < s.size(); ++c)
        for (int d = 0; d < nt; ++d) {
          const std::size_t x = static_cast<std::size_t>(a) * nt + b;
          const std::size_t y = static_cast<std::size_t>(c) * nt + d;
          table[x * n + y] = s.product(a, c) * nt + t.product(b, d);
        }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < nt; ++b)
      labels.push_back("(" + s.label(a) + "," + t.label(b) + ")");
  return FiniteSemigroup(static_cast<int>(n), std::move(table), std::move(labels));
}

namespace {

// Worklist closure in discovery order; derivations[k] records how the k-th
// discovered element arises: (-1, g) for the g-th generator, else (i, j)
// meaning order[i]*order[j].
struct Closure {
  std::vector<int> order;
  std::vector<std::pair<int, int>> derivations;
};

Closure close_generators(const FiniteSemigroup& s, const std::vector<int>& generators) {
  Closure c;
  std::vector<int> pos(s.size(), -1);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const int e = generators[g];
    if (e < 0 || e >= s.size()) throw RangeError("generator out of range");
    if (pos[e] < 0) {
      pos[e] = static_cast<int>(c.order.size());
      c.order.push_back(e);
      c.derivations.emplace_back(-1, static_cast<int>(g));
    }
  }
  for (std::size_t i = 0; i < c.order.size(); ++i)
    for (std::size_t j = 0; j < c.order.size(); ++j) {
      const int p = s.product(c.order[i], c.order[j]);
      if (pos[p] < 0) {
        pos[p] = static_cast<int>(c.order.size());
        c.order.push_back(p);
        c.derivations.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  return c;
}

}  // namespace

SubsemigroupWitness generated_subsemigroup(const FiniteSemigroup& s,
                                           const std::vector<int>& generators) {
  if (generators.empty()) throw RangeError("generator set must be nonempty");
  Closure c = close_generators(s, generators);
  std::sort(c.order.begin(), c.order.end());
  return SubsemigroupWitness{s, std::move(c.order)};
}

bool is_aperiodic(const FiniteSemigroup& s) {
  const int n = s.size();
  for (int x = 0; x < n; ++x) {
    const int p = s.power(x, n);
    if (s.product(p, x) != p) return false;
  }
  return true;
}

namespace {

// Extends generator images through a closure; returns the full map on the
// closure order, or nullopt when the extension is not well defined.
std::optional<std::vector<int>> extend_assignment(const FiniteSemigroup& target,
                                                  const Closure& c,
                                                  const std::vector<int>& gen_images) {
  std::vector<int> img(c.order.size());
  for (std::size_t k = 0; k < c.order.size(); ++k) {
    const auto [i, j] = c.derivations[k];
    img[k] = (i < 0) ? gen_images[j] : target.product(img[i], img[j]);
  }
  return img;
}

bool is_hom_on_closure(const FiniteSemigroup& parent, const FiniteSemigroup& target,
                       const Closure& c, const std::vector<int>& img) {
  std::vector<int> pos(parent.size(), -1);
  for (std::size_t i = 0; i < c.order.size(); ++i) pos[c.order[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < c.order.size(); ++i)
    for (std::size_t j = 0; j < c.order.size(); ++j) {
      const int p = parent.product(c.order[i], c.order[j]);
      if (img[pos[p]] != target.product(img[i], img[j])) return false;
    }
  return true;
}

bool covers_target(int target_size, const std::vector<int>& img) {
  std::vector<bool> hit(target_size, false);
  for (int v : img) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace

std::optional<DivisionWitness> divides(const FiniteSemigroup& s,
                                       const FiniteSemigroup& t,
                                       const DivisionSearchOptions& opts) {
  if (opts.max_generators < 1) throw RangeError("max_generators must be >= 1");
  std::size_t candidates = 0;
  for (int k = 1; k <= std::min(opts.max_generators, t.size()); ++k) {
    // All k-subsets of t, in lexicographic order.
    std::vector<std::pair<Closure, std::vector<int>>> wave;
    std::vector<int> gens(k);
    std::iota(gens.begin(), gens.end(), 0);
    while (true) {
      if (++candidates > opts.candidate_budget)
        throw BoundExceededError("division search exceeded candidate budget of " +
                                 std::to_string(opts.candidate_budget));
      Closure c = close_generators(t, gens);
      if (static_cast<int>(c.order.size()) >= s.size())
        wave.emplace_back(std::move(c), gens);
      // next k-subset
      int i = k - 1;
      while (i >= 0 && gens[i] == t.size() - k + i) --i;
      if (i < 0) break;
      ++gens[i];
      for (int j = i + 1; j < k; ++j) gens[j] = gens[j - 1] + 1;
    }
    std::stable_sort(wave.begin(), wave.end(), [](const auto& a, const auto& b) {
      return a.first.order.size() < b.first.order.size();
    });
    for (const auto& [c, cg] : wave) {
      // Generator images in lexicographic order; each extends through the
      // closure derivations and is then checked as a full homomorphism.
      const int kk = static_cast<int>(cg.size());
      std::vector<int> assign(kk, 0);
      while (true) {
        auto img = extend_assignment(s, c, assign);
        if (img && covers_target(s.size(), *img) && is_hom_on_closure(t, s, c, *img)) {
          std::vector<int> sorted = c.order;
          std::sort(sorted.begin(), sorted.end());
          std::vector<int> pos(t.size(), -1);
          for (std::size_t i = 0; i < c.order.size(); ++i)
            pos[c.order[i]] = static_cast<int>(i);
          std::vector<int> map(sorted.size());
          for (std::size_t i = 0; i < sorted.size(); ++i) map[i] = (*img)[pos[sorted[i]]];
          SubsemigroupWitness sub{t, sorted};
          SemigroupHomomorphism onto(sub.as_semigroup(), s, std::move(map));
          return DivisionWitness{std::move(sub), std::move(onto)};
        }
        int i = kk - 1;
        while (i >= 0 && assign[i] == s.size() - 1) --i;
        if (i < 0) break;
        ++assign[i];
        for (int j = i + 1; j < kk; ++j) assign[j] = 0;
      }
    }
  }
  return std::nullopt;
}

std::pair<std::vector<int>, std::vector<int>> translations(const FiniteSemigroup& s,
                                                           int elem) {
  if (elem < 0 || elem >= s.size()) throw RangeError("element out of range");
  std::vector<int> left(s.size()), right(s.size());
  for (int x = 0; x < s.size(); ++x) {
    left[x] = s.product(elem, x);
    right[x] = s.product(x, elem);
  }
  return {std::move(left), std::move(right)};
}

FiniteSemigroup adjoin_semilattice_bit(const FiniteSemigroup& s,
                                       std::size_t element_cap) {
  FiniteSemigroup two = FiniteSemigroup::from_rows({{0, 0}, {0, 1}}, {"0", "1"});
  return direct_product(s, two, element_cap);
}

DivisionWitness compose_divisions(const DivisionWitness& s_div_t,
                                  const DivisionWitness& t_div_u) {
  const auto& t = s_div_t.sub.parent;
  if (!t_div_u.onto.target().same_table(t))
    throw RangeError("witnesses do not compose: middle semigroups differ");
  // V = psi^{-1}(U_s) inside t_div_u's subsemigroup; chi = phi . psi.
  std::vector<int> v_elems;
  for (std::size_t i = 0; i < t_div_u.sub.elements.size(); ++i)
    if (s_div_t.sub.contains(t_div_u.onto(static_cast<int>(i))))
      v_elems.push_back(t_div_u.sub.elements[i]);
  SubsemigroupWitness v{t_div_u.sub.parent, std::move(v_elems)};

  std::vector<int> s_pos(t.size(), -1);
  for (std::size_t i = 0; i < s_div_t.sub.elements.size(); ++i)
    s_pos[s_div_t.sub.elements[i]] = static_cast<int>(i);
  std::vector<int> u_pos;
  u_pos.assign(t_div_u.sub.parent.size(), -1);
  for (std::size_t i = 0; i < t_div_u.sub.elements.size(); ++i)
    u_pos[t_div_u.sub.elements[i]] = static_cast<int>(i);

  std::vector<int> chi;
  chi.reserve(v.elements.size());
  for (int e : v.elements) {
    const int mid = t_div_u.onto(u_pos[e]);
    chi.push_back(s_div_t.onto(s_pos[mid]));
  }
  SemigroupHomomorphism onto(v.as_semigroup(), s_div_t.onto.target(), std::move(chi));
  if (!onto.surjective())
    throw NotHomomorphismError("composed division witness is not surjective");
  return DivisionWitness{std::move(v), std::move(onto)};
}

SubsemigroupWitness homomorphic_image(const SemigroupHomomorphism& phi,
                                      const SubsemigroupWitness& sub) {
  std::vector<int> pos(sub.parent.size(), -1);
  for (std::size_t i = 0; i < sub.elements.size(); ++i)
    pos[sub.elements[i]] = static_cast<int>(i);
  std::vector<int> gens;
  for (int e : sub.elements) gens.push_back(phi(e));
  if (gens.empty()) return SubsemigroupWitness{phi.target(), {}};
  return generated_subsemigroup(phi.target(), gens);
}

// -- catalog -----------------------------------------------------------------

FiniteSemigroup trivial_semigroup() { return FiniteSemigroup::from_rows({{0}}, {"e"}); }

FiniteSemigroup cyclic_group(int n) {
  if (n < 1) throw RangeError("cyclic group order must be >= 1");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
  }
  return FiniteSemigroup::from_rows(rows, std::move(labels));
}

FiniteSemigroup brandt_b2() {
  // Elements a, b, ab, ba, 0 with aba = a, bab = b, a^2 = b^2 = 0.
  return FiniteSemigroup::from_rows(
      {
          {4, 2, 4, 0, 4},
          {3, 4, 1, 4, 4},
          {0, 4, 2, 4, 4},
          {4, 1, 4, 3, 4},
          {4, 4, 4, 4, 4},
      },
      {"a", "b", "ab", "ba", "0"});
}

FiniteSemigroup meet_semilattice(int n) {
  if (n < 1) throw RangeError("semilattice size must be >= 1");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = std::min(i, j);
  return FiniteSemigroup::from_rows(rows);
}

FiniteSemigroup left_zero(int n) {
  if (n < 1) throw RangeError("size must be >= 1");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = i;
  return FiniteSemigroup::from_rows(rows);
}

FiniteSemigroup right_zero(int n) {
  if (n < 1) throw RangeError("size must be >= 1");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = j;
  return FiniteSemigroup::from_rows(rows);
}

FiniteSemigroup null_semigroup(int n) {
  if (n < 1) throw RangeError("size must be >= 1");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  return FiniteSemigroup::from_rows(rows);
}

FiniteSemigroup klein_four() { return direct_product(cyclic_group(2), cyclic_group(2)); }

std::vector<FiniteSemigroup> semigroup_catalog(int max_size) {
  std::vector<FiniteSemigroup> all;
  all.push_back(trivial_semigroup());
  all.push_back(cyclic_group(2));
  all.push_back(meet_semilattice(2));
  all.push_back(left_zero(2));
  all.push_back(right_zero(2));
  all.push_back(null_semigroup(2));
  all.push_back(cyclic_group(3));
  all.push_back(meet_semilattice(3));
  all.push_back(null_semigroup(3));
  all.push_back(cyclic_group(4));
  all.push_back(klein_four());
  all.push_back(brandt_b2());
  all.push_back(adjoin_semilattice_bit(cyclic_group(3)));
  std::vector<FiniteSemigroup> out;
  for (auto& s : all)
    if (s.size() <= max_size) out.push_back(std::move(s));
  return out;
}

}  // namespace powrec
