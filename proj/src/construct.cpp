#include "gensub/construct.hpp"

#include <unordered_map>

#include "gensub/error.hpp"

namespace gensub {

namespace {

TypeExpr class_type(const std::string& name) {
  return name == kNull ? TypeExpr::null() : TypeExpr::named(name);
}

void check_ceiling(std::size_t count, std::size_t ceiling, std::size_t depth) {
  if (count > ceiling)
    throw SizeError("subtyping approximation at depth " + std::to_string(depth) + " would have " +
                    std::to_string(count) + " elements, above the ceiling of " +
                    std::to_string(ceiling));
}

}  // namespace

SubtypingApprox s0(std::shared_ptr<const ClassTable> table, ArgMode mode) {
  const Poset& classes = table->class_poset();
  std::vector<std::string> names = table->non_generic();
  names.emplace_back(kNull);

  std::vector<Pair> rel;
  for (const auto& a : names)
    for (const auto& b : names)
      if (a != b && classes.leq(a, b)) rel.emplace_back(a, b);

  SubtypingApprox out;
  out.poset = transitive_reduction(rel, std::move(names));
  for (const auto& e : out.poset.elements()) out.types.push_back(class_type(e));
  out.depth = 0;
  out.mode = mode;
  out.table = std::move(table);
  return out;
}

ArgPoset containment_poset(const SubtypingApprox& s) {
  return s.mode == ArgMode::kWildcard ? wc(s.poset) : int_op(s.poset);
}

SubtypingApprox step(const SubtypingApprox& s, std::size_t ceiling) {
  const ClassTable& table = *s.table;
  const ArgPoset args = containment_poset(s);

  const std::size_t atoms = table.classes().size() - table.generic_set().size();
  check_ceiling(atoms + table.generic_set().size() * args.size(), ceiling, s.depth + 1);

  std::vector<IntervalArg> intervals;
  intervals.reserve(args.size());
  for (auto [lo, hi] : args.endpoints) intervals.push_back({s.types[lo], s.types[hi]});

  std::unordered_map<std::string, TypeExpr> by_name;
  for (const auto& c : table.classes())
    if (!table.is_generic(c)) by_name.emplace(c, class_type(c));
  for (const auto& g : table.generic_set()) {
    for (const auto& arg : intervals) {
      TypeExpr t = TypeExpr::app(g, arg);
      by_name.emplace(render(t), std::move(t));
    }
  }

  SubtypingApprox out;
  out.poset = ppp(table.class_poset(), table.generic_set(), args,
                  [&](std::size_t a) { return render(intervals[a]); });
  out.types.reserve(out.poset.size());
  for (const auto& e : out.poset.elements()) {
    auto it = by_name.find(e);
    if (it == by_name.end()) throw Error("internal: no type for element " + e);
    out.types.push_back(it->second);
  }
  out.depth = s.depth + 1;
  out.mode = s.mode;
  out.table = s.table;
  return out;
}

SubtypingApprox build(std::shared_ptr<const ClassTable> table, std::size_t depth_limit,
                      ArgMode mode, std::size_t ceiling) {
  SubtypingApprox s = s0(std::move(table), mode);
  check_ceiling(s.poset.size(), ceiling, 0);
  for (std::size_t i = 0; i < depth_limit; ++i) s = step(s, ceiling);
  return s;
}

SubtypingApprox build(const ClassTable& table, std::size_t depth_limit, ArgMode mode,
                      std::size_t ceiling) {
  return build(std::make_shared<const ClassTable>(table), depth_limit, mode, ceiling);
}

}  // namespace gensub
