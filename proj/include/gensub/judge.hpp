#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gensub/construct.hpp"
#include "gensub/types.hpp"

namespace gensub {

/// Ground subtyping decided by recursion on argument depth; App-to-App
/// subtyping is subclassing plus argument containment.
bool subtype(const ClassTable& table, const TypeExpr& t1, const TypeExpr& t2);

/// [lo1, hi1] is contained in [lo2, hi2]: lo2 <: lo1 and hi1 <: hi2.
bool contains(const ClassTable& table, const IntervalArg& a1, const IntervalArg& a2);

using SubtypeFn = std::function<bool(const TypeExpr&, const TypeExpr&)>;

struct GaloisViolation {
  enum class Direction {
    kErasureOnly,   // E(t) <= c holds, t <: FT(c) does not
    kFreeTypeOnly,  // t <: FT(c) holds, E(t) <= c does not
  };
  TypeExpr type;
  std::string cls;
  Direction direction;
};

struct GaloisReport {
  std::size_t checked_pairs = 0;
  std::vector<GaloisViolation> counterexamples;

  bool holds() const { return counterexamples.empty(); }
};

/// Checks E(t) <= c <=> t <: FT(c) for every t in build(table, depth_limit)
/// (wildcard mode) and every class c, Null included.
GaloisReport check_galois(const ClassTable& table, std::size_t depth_limit,
                          std::size_t ceiling = kDefaultCeiling);
/// Same check against an arbitrary subtyping judgment.
GaloisReport check_galois(const ClassTable& table, const std::vector<TypeExpr>& types,
                          const SubtypeFn& sub);

/// Arity-correct over declared classes with well-formed intervals; bounds ignored.
bool is_admittable(const ClassTable& table, const TypeExpr& t);

struct Validity {
  bool admittable = false;
  bool valid = false;
  /// Depth of the universe searched for interval witnesses, when a search ran.
  std::optional<std::size_t> search_depth;
};

/// Exact arguments must satisfy the class's bounds with the parameter replaced
/// by the argument; interval arguments need one valid exact witness inside
/// them, drawn from the ground types shallower than the type being checked.
/// Arguments are checked recursively. Throws Error if `t` is not admittable.
bool is_valid(const ClassTable& table, const TypeExpr& t, std::size_t ceiling = kDefaultCeiling);
Validity validity(const ClassTable& table, const TypeExpr& t, std::size_t ceiling = kDefaultCeiling);

struct BoundSpec {
  std::string param_name = "T";
  std::optional<BoundExpr> lower;
  std::optional<BoundExpr> upper;
};

/// lower[P:=candidate] <: candidate and candidate <: upper[P:=candidate],
/// each only when that bound is present.
bool dfbg_check(const ClassTable& table, const BoundSpec& spec, const TypeExpr& candidate);

/// Types t of depth <= depth_limit (drawn from the given mode's universe)
/// with t <: F<t>, in canonical-string order. The predicate itself is not
/// depth-limited. Throws Error if f is not generic.
std::vector<TypeExpr> f_subtypes(const ClassTable& table, std::string_view f,
                                 std::size_t depth_limit, ArgMode mode = ArgMode::kWildcard,
                                 std::size_t ceiling = kDefaultCeiling);
/// Dual of f_subtypes: F<t> <: t.
std::vector<TypeExpr> f_supertypes(const ClassTable& table, std::string_view f,
                                   std::size_t depth_limit, ArgMode mode = ArgMode::kWildcard,
                                   std::size_t ceiling = kDefaultCeiling);

/// Pairs of elements where the materialized order and `subtype` disagree.
/// Row-parallel; serial_oracle_mismatches is the sequential reference.
std::size_t oracle_mismatches(const SubtypingApprox& s);
std::size_t serial_oracle_mismatches(const SubtypingApprox& s);

}  // namespace gensub
