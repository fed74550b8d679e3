#include "gensub/poset.hpp"

#include <algorithm>
#include <set>

#include "gensub/error.hpp"
#include "gensub/kernels.hpp"

namespace gensub {

Poset::Poset() : data_(std::make_shared<const Data>()) {}

Poset Poset::from_order(std::vector<std::string> elements, BitMatrix order) {
  const std::size_t n = elements.size();
  const std::size_t mutual = kernels::count_pairs(
      n, [&](std::size_t i, std::size_t j) { return i < j && order.test(i, j) && order.test(j, i); });
  if (mutual != 0) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (order.test(i, j) && order.test(j, i))
          throw CycleError("cycle: " + elements[i] + " -> " + elements[j] + " -> " + elements[i]);
  }

  auto data = std::make_shared<Data>();
  data->elements = std::move(elements);
  data->index.reserve(n);
  for (std::size_t i = 0; i < n; ++i) data->index.emplace(data->elements[i], i);

  const BitMatrix cov = kernels::covers(order);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (cov.test(i, j)) data->covers.emplace_back(i, j);
  data->closure = std::move(order);
  return Poset(std::move(data));
}

std::optional<std::size_t> Poset::index_of(std::string_view name) const {
  auto it = data_->index.find(std::string(name));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Poset::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw UnknownElement(std::string(name));
}

std::vector<Pair> Poset::covers() const {
  std::vector<Pair> out;
  out.reserve(data_->covers.size());
  for (auto [a, b] : data_->covers) out.emplace_back(element(a), element(b));
  return out;
}

OrderMap OrderMap::identity(const Poset& p) {
  OrderMap m;
  for (const auto& e : p.elements()) m.pairs.emplace(e, e);
  return m;
}

bool leq(const Poset& p, std::string_view a, std::string_view b) { return p.leq(a, b); }

Poset transitive_reduction(const std::vector<Pair>& rel, std::vector<std::string> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  auto position = [&](const std::string& name) {
    auto it = std::lower_bound(elements.begin(), elements.end(), name);
    if (it == elements.end() || *it != name) throw UnknownElement(name);
    return static_cast<std::size_t>(it - elements.begin());
  };

  BitMatrix order(elements.size());
  for (const auto& [lo, hi] : rel) {
    const std::size_t a = position(lo);
    const std::size_t b = position(hi);
    if (a != b) order.set(a, b);
  }

  if (auto cycle = kernels::find_cycle(order); !cycle.empty()) {
    std::string msg = "cycle:";
    for (std::size_t i = 0; i < cycle.size(); ++i)
      msg += (i == 0 ? " " : " -> ") + elements[cycle[i]];
    throw CycleError(msg);
  }

  kernels::close(order);
  return Poset::from_order(std::move(elements), std::move(order));
}

Bounds bounds(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<bool> has_upper(n, false), has_lower(n, false);
  for (auto [a, b] : p.cover_indices()) {
    has_upper[a] = true;
    has_lower[b] = true;
  }
  Bounds out;
  // In a finite poset a unique maximal element is the maximum.
  if (std::count(has_upper.begin(), has_upper.end(), false) == 1)
    out.top = p.element(static_cast<std::size_t>(
        std::find(has_upper.begin(), has_upper.end(), false) - has_upper.begin()));
  if (std::count(has_lower.begin(), has_lower.end(), false) == 1)
    out.bottom = p.element(static_cast<std::size_t>(
        std::find(has_lower.begin(), has_lower.end(), false) - has_lower.begin()));
  return out;
}

bool is_embedding(const Poset& p, const Poset& q, const OrderMap& m) {
  std::vector<std::size_t> image(p.size());
  std::set<std::size_t> used;
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto it = m.pairs.find(p.element(i));
    if (it == m.pairs.end()) throw Error("map is not total: no image for " + p.element(i));
    auto target = q.index_of(it->second);
    if (!target) throw Error("map leaves the target poset: " + it->second);
    if (!used.insert(*target).second) throw Error("map is not injective at " + it->second);
    image[i] = *target;
  }
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.leq(a, b) != q.leq(image[a], image[b])) return false;
  return true;
}

Poset chain(std::size_t n) {
  if (n == 0) throw Error("chain length must be positive");
  std::vector<std::string> names;
  std::vector<Pair> rel;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("e" + std::to_string(i));
    if (i > 0) rel.emplace_back(names[i - 1], names[i]);
  }
  return transitive_reduction(rel, std::move(names));
}

Poset antichain(std::vector<std::string> names) { return transitive_reduction({}, std::move(names)); }

}  // namespace gensub
