#include "gensub/judge.hpp"

#include <algorithm>

#include "gensub/error.hpp"
#include "gensub/kernels.hpp"

namespace gensub {

namespace {

void check_head(const ClassTable& table, const TypeExpr& t) {
  if (t.is_null()) return;
  const ClassDecl* decl = table.find(t.name());
  if (decl == nullptr) throw UnknownElement(t.name());
  if (decl->is_generic != t.is_app()) throw Error("ill-formed type " + render(t));
}

}  // namespace

bool subtype(const ClassTable& table, const TypeExpr& t1, const TypeExpr& t2) {
  check_head(table, t1);
  check_head(table, t2);
  if (t1.is_null() || t2.is_object()) return true;
  if (t2.is_null()) return false;
  if (!table.class_poset().leq(t1.name(), t2.name())) return false;
  if (!t2.is_app()) return true;
  if (!t1.is_app()) return false;
  return contains(table, t1.arg(), t2.arg());
}

bool contains(const ClassTable& table, const IntervalArg& a1, const IntervalArg& a2) {
  return subtype(table, a2.lo, a1.lo) && subtype(table, a1.hi, a2.hi);
}

GaloisReport check_galois(const ClassTable& table, const std::vector<TypeExpr>& types,
                          const SubtypeFn& sub) {
  GaloisReport report;
  const Poset& classes = table.class_poset();
  for (const auto& c : table.classes()) {
    const TypeExpr free = free_type(c, table);
    for (const auto& t : types) {
      const bool by_class = classes.leq(erasure(t), c);
      const bool by_type = sub(t, free);
      ++report.checked_pairs;
      if (by_class == by_type) continue;
      report.counterexamples.push_back(
          {t, c,
           by_class ? GaloisViolation::Direction::kErasureOnly
                    : GaloisViolation::Direction::kFreeTypeOnly});
    }
  }
  return report;
}

GaloisReport check_galois(const ClassTable& table, std::size_t depth_limit, std::size_t ceiling) {
  const SubtypingApprox s = build(table, depth_limit, ArgMode::kWildcard, ceiling);
  return check_galois(table, s.types, [&](const TypeExpr& a, const TypeExpr& b) {
    return subtype(table, a, b);
  });
}

bool is_admittable(const ClassTable& table, const TypeExpr& t) {
  if (t.is_null()) return true;
  const ClassDecl* decl = table.find(t.name());
  if (decl == nullptr || decl->is_generic != t.is_app()) return false;
  if (!t.is_app()) return true;
  const IntervalArg& a = t.arg();
  return is_admittable(table, a.lo) && is_admittable(table, a.hi) && subtype(table, a.lo, a.hi);
}

namespace {

bool satisfies_bounds(const ClassTable& table, const ClassDecl& decl, const TypeExpr& arg) {
  if (decl.lower_bound &&
      !subtype(table, substitute(*decl.lower_bound, decl.param_name, arg), arg))
    return false;
  if (decl.upper_bound &&
      !subtype(table, arg, substitute(*decl.upper_bound, decl.param_name, arg)))
    return false;
  return true;
}

class ValidityChecker {
 public:
  ValidityChecker(const ClassTable& table, std::size_t universe_depth, std::size_t ceiling)
      : table_(table), universe_depth_(universe_depth), ceiling_(ceiling) {}

  // Witnesses for an argument of `t` are strictly shallower than `t`, which
  // bounds the recursion through valid(w).

  bool valid(const TypeExpr& t) {
    if (!t.is_app()) return true;
    const ClassDecl& decl = *table_.find(t.name());
    const IntervalArg& a = t.arg();
    if (!valid(a.lo) || !valid(a.hi)) return false;
    if (a.is_exact()) return satisfies_bounds(table_, decl, a.lo);
    const std::size_t limit = depth(t);
    const auto& candidates = universe();
    return std::any_of(candidates.begin(), candidates.end(), [&](const TypeExpr& w) {
      return depth(w) < limit && subtype(table_, a.lo, w) && subtype(table_, w, a.hi) &&
             valid(w) && satisfies_bounds(table_, decl, w);
    });
  }

  std::optional<std::size_t> search_depth() const {
    if (!searched_) return std::nullopt;
    return universe_depth_;
  }

 private:
  const std::vector<TypeExpr>& universe() {
    if (!searched_) {
      universe_ = build(table_, universe_depth_, ArgMode::kInterval, ceiling_).types;
      searched_ = true;
    }
    return universe_;
  }

  const ClassTable& table_;
  std::size_t universe_depth_;
  std::size_t ceiling_;
  bool searched_ = false;
  std::vector<TypeExpr> universe_;
};

}  // namespace

Validity validity(const ClassTable& table, const TypeExpr& t, std::size_t ceiling) {
  Validity v;
  v.admittable = is_admittable(table, t);
  if (!v.admittable) return v;
  ValidityChecker checker(table, depth(t) - (t.is_app() ? 1 : 0), ceiling);
  v.valid = checker.valid(t);
  v.search_depth = checker.search_depth();
  return v;
}

bool is_valid(const ClassTable& table, const TypeExpr& t, std::size_t ceiling) {
  const Validity v = validity(table, t, ceiling);
  if (!v.admittable) throw Error("validity is defined only for admittable types: " + render(t));
  return v.valid;
}

bool dfbg_check(const ClassTable& table, const BoundSpec& spec, const TypeExpr& candidate) {
  if (spec.lower &&
      !subtype(table, substitute(*spec.lower, spec.param_name, candidate), candidate))
    return false;
  if (spec.upper &&
      !subtype(table, candidate, substitute(*spec.upper, spec.param_name, candidate)))
    return false;
  return true;
}

namespace {

template <typename Pred>
std::vector<TypeExpr> scan_generator(const ClassTable& table, std::string_view f,
                                     std::size_t depth_limit, ArgMode mode, std::size_t ceiling,
                                     Pred pred) {
  if (!table.is_generic(f)) throw Error(std::string(f) + " is not a generic class");
  const SubtypingApprox s = build(table, depth_limit, mode, ceiling);
  std::vector<TypeExpr> out;
  // Elements are already in canonical-string order.
  for (const auto& t : s.types) {
    const TypeExpr applied = TypeExpr::app(std::string(f), IntervalArg::exact(t));
    if (pred(t, applied)) out.push_back(t);
  }
  return out;
}

}  // namespace

std::vector<TypeExpr> f_subtypes(const ClassTable& table, std::string_view f,
                                 std::size_t depth_limit, ArgMode mode, std::size_t ceiling) {
  return scan_generator(table, f, depth_limit, mode, ceiling,
                        [&](const TypeExpr& t, const TypeExpr& ft) { return subtype(table, t, ft); });
}

std::vector<TypeExpr> f_supertypes(const ClassTable& table, std::string_view f,
                                   std::size_t depth_limit, ArgMode mode, std::size_t ceiling) {
  return scan_generator(table, f, depth_limit, mode, ceiling,
                        [&](const TypeExpr& t, const TypeExpr& ft) { return subtype(table, ft, t); });
}

std::size_t oracle_mismatches(const SubtypingApprox& s) {
  const ClassTable& table = *s.table;
  return kernels::count_pairs(s.types.size(), [&](std::size_t i, std::size_t j) {
    return s.poset.leq(i, j) != subtype(table, s.types[i], s.types[j]);
  });
}

std::size_t serial_oracle_mismatches(const SubtypingApprox& s) {
  const ClassTable& table = *s.table;
  return kernels::serial::count_pairs(s.types.size(), [&](std::size_t i, std::size_t j) {
    return s.poset.leq(i, j) != subtype(table, s.types[i], s.types[j]);
  });
}

}  // namespace gensub
