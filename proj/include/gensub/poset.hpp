#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gensub/bit_matrix.hpp"

namespace gensub {

using Pair = std::pair<std::string, std::string>;

/// Finite partial order over opaque string elements, stored as its Hasse
/// diagram. Elements are kept in lexicographic order and indices follow that
/// order. The reflexive-transitive closure is materialized at construction;
/// values are immutable and cheap to copy.
class Poset {
 public:
  Poset();

  /// Trusted constructor: `elements` sorted and unique, `order` already a
  /// reflexive-transitive relation over them. Throws CycleError if two
  /// distinct elements are mutually related.
  static Poset from_order(std::vector<std::string> elements, BitMatrix order);

  std::size_t size() const { return data_->elements.size(); }
  const std::vector<std::string>& elements() const { return data_->elements; }
  const std::string& element(std::size_t i) const { return data_->elements[i]; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws UnknownElement.
  std::size_t require(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  bool leq(std::size_t a, std::size_t b) const { return data_->closure.test(a, b); }
  bool leq(std::string_view a, std::string_view b) const { return leq(require(a), require(b)); }

  /// Cover pairs (lower, upper) as indices, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& cover_indices() const {
    return data_->covers;
  }
  std::vector<Pair> covers() const;

  const BitMatrix& closure() const { return data_->closure; }

 private:
  struct Data {
    std::vector<std::string> elements;
    std::unordered_map<std::string, std::size_t> index;
    BitMatrix closure;
    std::vector<std::pair<std::size_t, std::size_t>> covers;
  };
  explicit Poset(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Element-to-element map used for embeddings.
struct OrderMap {
  std::map<std::string, std::string> pairs;

  static OrderMap identity(const Poset& p);
};

struct Bounds {
  std::optional<std::string> top;
  std::optional<std::string> bottom;
};

/// a <= b in p. Throws UnknownElement naming the missing element.
bool leq(const Poset& p, std::string_view a, std::string_view b);

/// Builds the poset whose order is the reflexive-transitive closure of `rel`.
/// Self pairs are ignored. Throws CycleError (listing one cycle) if `rel`
/// relates distinct elements cyclically, UnknownElement if a pair mentions a
/// name outside `elements`.
Poset transitive_reduction(const std::vector<Pair>& rel, std::vector<std::string> elements);

Bounds bounds(const Poset& p);

/// True iff m reflects and preserves the order. Throws Error if m is partial,
/// non-injective, or maps outside q.
bool is_embedding(const Poset& p, const Poset& q, const OrderMap& m);

/// Total order e0 < e1 < ... < e(n-1). Throws Error for n == 0.
Poset chain(std::size_t n);

/// Discrete order over the given names.
Poset antichain(std::vector<std::string> names);

}  // namespace gensub
