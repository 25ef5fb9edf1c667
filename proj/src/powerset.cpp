#include "powrec/powerset.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace powrec {

namespace {
constexpr int kFullModeMaxBase = 20;
constexpr int kFullTableMaxBase = 10;
}  // namespace

std::string subset_literal(std::uint64_t bits, int base_size) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < base_size; ++i)
    if (bits >> i & 1) {
      if (!first) out += ',';
      out += std::to_string(i);
      first = false;
    }
  out += '}';
  return out;
}

std::uint64_t parse_subset_literal(const std::string& text, int base_size) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw FormatError("subset literal must look like {i,j,k} or {}: " + text);
  std::uint64_t bits = 0;
  std::size_t i = 1;
  while (i + 1 < text.size()) {
    std::size_t j = i;
    while (j + 1 < text.size() && text[j] != ',') ++j;
    const std::string tok = text.substr(i, j - i);
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw FormatError("bad subset entry '" + tok + "'");
    }
    if (used != tok.size() || v < 0 || v >= base_size)
      throw FormatError("subset entry out of range: '" + tok + "'");
    bits |= std::uint64_t(1) << v;
    i = (text[j] == ',') ? j + 1 : j;
  }
  return bits;
}

PowerSemigroup PowerSemigroup::full(FiniteSemigroup base) {
  if (base.size() > kFullModeMaxBase)
    throw SizeLimitError("full power semigroup needs |base| <= " +
                         std::to_string(kFullModeMaxBase) + ", got " +
                         std::to_string(base.size()));
  return PowerSemigroup(std::move(base), Mode::full);
}

PowerSemigroup PowerSemigroup::generated(FiniteSemigroup base,
                                         const std::vector<std::uint64_t>& generators,
                                         std::size_t element_cap) {
  if (base.size() > 64) throw SizeLimitError("base too large for subset masks");
  PowerSemigroup p(std::move(base), Mode::generated);
  const std::uint64_t all = (p.base_.size() == 64)
                                ? ~std::uint64_t(0)
                                : (std::uint64_t(1) << p.base_.size()) - 1;
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::uint64_t g : generators) {
    if (g & ~all) throw RangeError("generator subset out of range");
    if (!index.count(g)) {
      index.emplace(g, p.elements_.size());
      p.elements_.push_back(g);
    }
  }
  if (p.elements_.empty()) throw RangeError("generator family must be nonempty");
  for (std::size_t i = 0; i < p.elements_.size(); ++i)
    for (std::size_t j = 0; j < p.elements_.size(); ++j) {
      const std::uint64_t m = p.product_mask(p.elements_[i], p.elements_[j]);
      if (!index.count(m)) {
        if (p.elements_.size() >= element_cap)
          throw SizeLimitError("generated power subsemigroup exceeds cap of " +
                               std::to_string(element_cap));
        index.emplace(m, p.elements_.size());
        p.elements_.push_back(m);
      }
    }
  return p;
}

std::size_t PowerSemigroup::size() const {
  if (mode_ == Mode::full) return std::size_t(1) << base_.size();
  return elements_.size();
}

std::uint64_t PowerSemigroup::mask_of(std::size_t index) const {
  if (index >= size()) throw RangeError("power element index out of range");
  if (mode_ == Mode::full) return index;
  return elements_[index];
}

std::optional<std::size_t> PowerSemigroup::index_of(std::uint64_t mask) const {
  if (mode_ == Mode::full) {
    if (mask >= size()) return std::nullopt;
    return mask;
  }
  auto it = std::find(elements_.begin(), elements_.end(), mask);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::uint64_t PowerSemigroup::product_mask(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t out = 0;
  for (std::uint64_t x = a; x;) {
    const int i = std::countr_zero(x);
    x &= x - 1;
    for (std::uint64_t y = b; y;) {
      const int j = std::countr_zero(y);
      y &= y - 1;
      out |= std::uint64_t(1) << base_.product(i, j);
    }
  }
  return out;
}

std::size_t PowerSemigroup::product(std::size_t i, std::size_t j) const {
  const std::uint64_t m = product_mask(mask_of(i), mask_of(j));
  auto idx = index_of(m);
  if (!idx) throw RangeError("product left the materialized power subsemigroup");
  return *idx;
}

FiniteSemigroup PowerSemigroup::as_semigroup() const {
  if (mode_ == Mode::full && base_.size() > kFullTableMaxBase)
    throw SizeLimitError("full power table needs |base| <= " +
                         std::to_string(kFullTableMaxBase));
  const std::size_t n = size();
  std::vector<int> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = static_cast<int>(product(i, j));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back(subset_literal(mask_of(i), base_.size()));
  return FiniteSemigroup(static_cast<int>(n), std::move(table), std::move(labels));
}

PowerSemigroup power(const FiniteSemigroup& s) { return PowerSemigroup::full(s); }

SemigroupHomomorphism singleton_embedding(const PowerSemigroup& p) {
  std::vector<int> map(p.base().size());
  for (int s = 0; s < p.base().size(); ++s) {
    auto idx = p.index_of(std::uint64_t(1) << s);
    if (!idx)
      throw MissingSingletonError("singleton {" + std::to_string(s) +
                                  "} is not materialized");
    map[s] = static_cast<int>(*idx);
  }
  return SemigroupHomomorphism(p.base(), p.as_semigroup(), std::move(map));
}

SemigroupHomomorphism forward_image_hom(const SemigroupHomomorphism& g) {
  PowerSemigroup ps = PowerSemigroup::full(g.source());
  PowerSemigroup pt = PowerSemigroup::full(g.target());
  std::vector<int> map(ps.size());
  for (std::size_t q = 0; q < ps.size(); ++q) {
    std::uint64_t img = 0;
    for (std::uint64_t x = q; x;) {
      const int i = std::countr_zero(x);
      x &= x - 1;
      img |= std::uint64_t(1) << g(i);
    }
    map[q] = static_cast<int>(img);
  }
  return SemigroupHomomorphism(ps.as_semigroup(), pt.as_semigroup(), std::move(map));
}

std::uint64_t PreimageMap::operator()(std::uint64_t target_mask) const {
  std::uint64_t out = 0;
  for (int s = 0; s < source_size; ++s)
    if (target_mask >> f[s] & 1) out |= std::uint64_t(1) << s;
  return out;
}

PreimageMap inverse_image_map(const SemigroupHomomorphism& f) {
  PreimageMap pm{f.map(), f.source().size(), f.target().size(), true};
  PowerSemigroup ps = PowerSemigroup::full(f.source());
  PowerSemigroup pt = PowerSemigroup::full(f.target());
  for (std::uint64_t a = 0; a < pt.size() && pm.is_homomorphism; ++a)
    for (std::uint64_t b = 0; b < pt.size(); ++b)
      if (pm(pt.product_mask(a, b)) != ps.product_mask(pm(a), pm(b))) {
        pm.is_homomorphism = false;
        break;
      }
  return pm;
}

std::uint64_t VietorisActions::left(std::uint64_t c) const {
  std::uint64_t out = 0;
  for (std::uint64_t x = q; x;) {
    const int s = std::countr_zero(x);
    x &= x - 1;
    for (std::uint64_t y = c; y;) {
      const int e = std::countr_zero(y);
      y &= y - 1;
      out |= std::uint64_t(1) << base->product(s, e);
    }
  }
  return out;
}

std::uint64_t VietorisActions::right(std::uint64_t c) const {
  std::uint64_t out = 0;
  for (std::uint64_t y = c; y;) {
    const int e = std::countr_zero(y);
    y &= y - 1;
    for (std::uint64_t x = q; x;) {
      const int s = std::countr_zero(x);
      x &= x - 1;
      out |= std::uint64_t(1) << base->product(e, s);
    }
  }
  return out;
}

VietorisActions vietoris_actions(const PowerSemigroup& p, std::uint64_t q_mask) {
  return VietorisActions{&p.base(), q_mask};
}

bool is_power_valued_hom(const FiniteSemigroup& t,
                         const std::vector<std::uint64_t>& h_masks,
                         const FiniteSemigroup& base) {
  if (h_masks.size() != static_cast<std::size_t>(t.size())) return false;
  PowerSemigroup p = PowerSemigroup::full(base);
  for (int x = 0; x < t.size(); ++x)
    for (int y = 0; y < t.size(); ++y)
      if (h_masks[t.product(x, y)] != p.product_mask(h_masks[x], h_masks[y]))
        return false;
  return true;
}

SpanOverPower span_decompose(const FiniteSemigroup& t,
                             const std::vector<std::uint64_t>& h_masks,
                             const FiniteSemigroup& base, bool strict) {
  if (!is_power_valued_hom(t, h_masks, base))
    throw NotHomomorphismError("h is not a homomorphism into the power semigroup");
  SpanOverPower span{t, base, {}};
  for (int x = 0; x < t.size(); ++x) {
    if (h_masks[x] == 0) {
      if (strict)
        throw EmptyFiberError("h(" + std::to_string(x) + ") is empty");
      continue;
    }
    for (int s = 0; s < base.size(); ++s)
      if (h_masks[x] >> s & 1) span.pairs.emplace_back(x, s);
  }
  return span;
}

FiniteSemigroup SpanOverPower::as_semigroup() const {
  if (pairs.empty()) throw RangeError("empty span has no semigroup table");
  const int m = static_cast<int>(pairs.size());
  auto find = [&](int t, int s) {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(t, s));
    if (it == pairs.end() || *it != std::make_pair(t, s))
      throw RangeError("span pair set is not product-closed");
    return static_cast<int>(it - pairs.begin());
  };
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int t = left.product(pairs[i].first, pairs[j].first);
      const int s = base.product(pairs[i].second, pairs[j].second);
      table[static_cast<std::size_t>(i) * m + j] = find(t, s);
    }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& [t, s] : pairs)
    labels.push_back("(" + left.label(t) + "," + base.label(s) + ")");
  return FiniteSemigroup(m, std::move(table), std::move(labels));
}

SemigroupHomomorphism SpanOverPower::proj_left() const {
  std::vector<int> map;
  map.reserve(pairs.size());
  for (const auto& [t, s] : pairs) map.push_back(t);
  return SemigroupHomomorphism(as_semigroup(), left, std::move(map));
}

SemigroupHomomorphism SpanOverPower::proj_base() const {
  std::vector<int> map;
  map.reserve(pairs.size());
  for (const auto& [t, s] : pairs) map.push_back(s);
  return SemigroupHomomorphism(as_semigroup(), base, std::move(map));
}

std::vector<std::uint64_t> span_compose(const SpanOverPower& span) {
  std::vector<std::uint64_t> h(span.left.size(), 0);
  for (const auto& [t, s] : span.pairs) h[t] |= std::uint64_t(1) << s;
  if (!is_power_valued_hom(span.left, h, span.base))
    throw NotHomomorphismError("span fibers do not multiply onto each other");
  return h;
}

}  // namespace powrec
