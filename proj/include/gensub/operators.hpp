#pragma once

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gensub/poset.hpp"

namespace gensub {

enum class ArgMode { kWildcard, kInterval };

std::string_view to_string(ArgMode mode);

/// Containment-ordered type arguments built over a subtyping poset. Elements
/// are labelled "[lo,hi]" with lo <= hi in the source order.
struct ArgPoset {
  Poset base;
  std::shared_ptr<const Poset> source;
  ArgMode mode = ArgMode::kWildcard;
  /// Endpoint indices into *source, aligned with base.elements().
  std::vector<std::pair<std::size_t, std::size_t>> endpoints;

  std::size_t size() const { return base.size(); }
};

std::string interval_label(std::string_view lo, std::string_view hi);
/// Splits an "[lo,hi]" label at its top-level comma. Throws Error on malformed input.
std::pair<std::string, std::string> split_interval_label(std::string_view label);

/// Wildcard arguments: singletons, [bottom, u] and [l, top]. Throws Error if s
/// has no top or no bottom.
ArgPoset wc(const Poset& s);

/// Every interval [l, u] with l <= u.
ArgPoset int_op(const Poset& s);

/// Renders the argument at a given ArgPoset index inside `g<...>`.
using ArgLabel = std::function<std::string(std::size_t)>;

/// Partial poset product: non-generic elements of c stay as atoms, each
/// generic g pairs with every argument as "g<label>". "Null", when present,
/// is the global bottom. Throws UnknownElement if a generic name is not in c.
Poset ppp(const Poset& c, const std::set<std::string>& generic_subset, const ArgPoset& args,
          const ArgLabel& label = {});

}  // namespace gensub
