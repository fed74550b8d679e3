#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "gensub/operators.hpp"
#include "gensub/poset.hpp"
#include "gensub/types.hpp"

namespace gensub {

inline constexpr std::size_t kDefaultCeiling = 50000;

/// Finite approximation S_i of the subtyping relation: all ground types of
/// argument depth <= i, ordered by subtyping.
struct SubtypingApprox {
  Poset poset;
  /// Aligned with poset.elements().
  std::vector<TypeExpr> types;
  std::size_t depth = 0;
  ArgMode mode = ArgMode::kWildcard;
  std::shared_ptr<const ClassTable> table;
};

SubtypingApprox s0(std::shared_ptr<const ClassTable> table, ArgMode mode = ArgMode::kWildcard);

/// S_{i+1} = ppp(C, C_g, wc(S_i)) or ppp(C, C_g, int(S_i)) per s.mode.
/// Throws SizeError when the result would exceed `ceiling` elements.
SubtypingApprox step(const SubtypingApprox& s, std::size_t ceiling = kDefaultCeiling);

SubtypingApprox build(std::shared_ptr<const ClassTable> table, std::size_t depth_limit,
                      ArgMode mode, std::size_t ceiling = kDefaultCeiling);
SubtypingApprox build(const ClassTable& table, std::size_t depth_limit, ArgMode mode,
                      std::size_t ceiling = kDefaultCeiling);

ArgPoset containment_poset(const SubtypingApprox& s);

}  // namespace gensub
