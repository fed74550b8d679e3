#include <doctest.h>

#include "fixtures.hpp"
#include "gensub/construct.hpp"
#include "gensub/error.hpp"
#include "gensub/judge.hpp"

using namespace gensub;
using fixtures::ty;

namespace {

IntervalArg arg(const ClassTable& t, const std::string& text) { return parse_arg(text, t); }

std::vector<std::string> rendered(const std::vector<TypeExpr>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(render(t));
  return out;
}

}  // namespace

TEST_CASE("subtype") {
  const ClassTable& h1 = fixtures::h1();
  CHECK(subtype(h1, ty(h1, "LinkedList<String>"), ty(h1, "List<?>")));
  CHECK_FALSE(subtype(h1, ty(h1, "List<String>"), ty(h1, "List<Object>")));
  CHECK(subtype(h1, ty(h1, "List<String>"), ty(h1, "List<? extends Object>")));
  CHECK(subtype(h1, ty(h1, "List<Object>"), ty(h1, "List<? super String>")));
  CHECK(subtype(h1, TypeExpr::null(), ty(h1, "List<String>")));
  CHECK(subtype(h1, ty(h1, "LinkedList<?>"), TypeExpr::object()));
  CHECK_FALSE(subtype(h1, ty(h1, "String"), ty(h1, "List<?>")));
  CHECK_FALSE(subtype(h1, ty(h1, "List<?>"), ty(h1, "LinkedList<?>")));
  CHECK_FALSE(subtype(h1, ty(h1, "List<?>"), TypeExpr::null()));

  CHECK_THROWS_AS(subtype(h1, TypeExpr::named("Nope"), TypeExpr::object()), UnknownElement);
  CHECK_THROWS_AS(subtype(h1, TypeExpr::named("List"), TypeExpr::object()), Error);
}

TEST_CASE("contains") {
  const ClassTable& h1 = fixtures::h1();
  CHECK(contains(h1, arg(h1, "String"), arg(h1, "?")));
  CHECK_FALSE(contains(h1, arg(h1, "?"), arg(h1, "String")));
  CHECK(contains(h1, arg(h1, "? extends String"), arg(h1, "?")));
  CHECK(contains(h1, arg(h1, "Object"), arg(h1, "? super String")));
  CHECK_FALSE(contains(h1, arg(h1, "? super String"), arg(h1, "Object")));
}

TEST_CASE("subtype and contains are partial orders at depth <= 2") {
  for (const auto* name : {"h1", "h2", "h3", "c"}) {
    const ClassTable& t = fixtures::table(name);
    for (ArgMode mode : {ArgMode::kWildcard, ArgMode::kInterval}) {
      const SubtypingApprox s = build(t, 2, mode);
      const std::size_t n = s.types.size();
      std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = subtype(t, s.types[i], s.types[j]);
      std::size_t failures = 0;
      for (std::size_t i = 0; i < n; ++i) {
        failures += !m[i][i];
        for (std::size_t j = 0; j < n; ++j) {
          failures += i != j && m[i][j] && m[j][i];
          for (std::size_t k = 0; k < n; ++k) failures += m[i][j] && m[j][k] && !m[i][k];
        }
      }
      CHECK_MESSAGE(failures == 0, name);

      // Containment over the arguments of depth <= 1 types.
      const ArgPoset args = containment_poset(build(t, 1, mode));
      std::vector<IntervalArg> as;
      const SubtypingApprox s1 = build(t, 1, mode);
      for (auto [lo, hi] : args.endpoints) as.push_back({s1.types[lo], s1.types[hi]});
      failures = 0;
      for (const auto& a : as) {
        failures += !contains(t, a, a);
        for (const auto& b : as) {
          failures += !(a == b) && contains(t, a, b) && contains(t, b, a);
          for (const auto& c : as) failures += contains(t, a, b) && contains(t, b, c) && !contains(t, a, c);
        }
      }
      CHECK_MESSAGE(failures == 0, name);
    }
  }
}

TEST_CASE("materialized order equals the recursive procedure") {
  for (const auto* name : {"h1", "h2", "h3", "c"}) {
    for (ArgMode mode : {ArgMode::kWildcard, ArgMode::kInterval}) {
      const SubtypingApprox s = build(fixtures::table(name), 2, mode);
      CHECK(oracle_mismatches(s) == 0);
      CHECK(serial_oracle_mismatches(s) == 0);
    }
  }
}

TEST_CASE("Galois connection") {
  const ClassTable& h1 = fixtures::h1();
  const GaloisReport r = check_galois(h1, 2);
  CHECK(r.checked_pairs == 87 * 5);
  CHECK(r.holds());

  CHECK(h1.class_poset().leq("LinkedList", "List"));
  CHECK(subtype(h1, ty(h1, "LinkedList<String>"), free_type("List", h1)));

  for (const auto* name : {"h2", "h3", "c"}) CHECK(check_galois(fixtures::table(name), 2).holds());

  // Negative control: subtyping that ignores containment is too generous
  // for nothing, but one that ignores subclassing breaks the connection.
  const auto universe = build(h1, 2, ArgMode::kWildcard).types;
  const GaloisReport broken = check_galois(h1, universe, [&](const TypeExpr& a, const TypeExpr& b) {
    if (a.is_app() && b.is_app()) return contains(h1, a.arg(), b.arg());
    return subtype(h1, a, b);
  });
  CHECK_FALSE(broken.holds());
  CHECK(broken.counterexamples.front().direction == GaloisViolation::Direction::kFreeTypeOnly);
}

TEST_CASE("Galois unit and counit laws") {
  for (const auto* name : {"h1", "h2", "h3"}) {
    const ClassTable& t = fixtures::table(name);
    for (const auto& x : build(t, 2, ArgMode::kWildcard).types)
      CHECK(subtype(t, x, free_type(erasure(x), t)));
    for (const auto& c : t.classes()) CHECK(t.class_poset().leq(erasure(free_type(c, t)), c));
    for (const auto& c1 : t.classes())
      for (const auto& c2 : t.classes())
        if (t.class_poset().leq(c1, c2)) CHECK(subtype(t, free_type(c1, t), free_type(c2, t)));
  }
}

TEST_CASE("inheritance is the source of App-to-App subtyping") {
  const ClassTable& h1 = fixtures::h1();
  const auto types = build(h1, 2, ArgMode::kWildcard).types;
  for (const auto& a : types)
    for (const auto& b : types)
      if (a.is_app() && b.is_app() && subtype(h1, a, b))
        CHECK(h1.class_poset().leq(a.name(), b.name()));
}

TEST_CASE("admittable and valid") {
  const ClassTable& h2 = fixtures::h2();
  const TypeExpr enum_object = ty(h2, "Enum<Object>");
  CHECK(is_admittable(h2, enum_object));
  CHECK_FALSE(is_valid(h2, enum_object));
  CHECK(is_admittable(h2, ty(h2, "Enum<Null>")));
  CHECK(is_valid(h2, ty(h2, "Enum<Null>")));

  const TypeExpr bad = TypeExpr::app("Object", IntervalArg::exact(TypeExpr::object()));
  CHECK_FALSE(is_admittable(h2, bad));
  CHECK_THROWS_AS(is_valid(h2, bad), Error);
  CHECK_FALSE(is_admittable(h2, TypeExpr::app("Enum", {TypeExpr::object(), TypeExpr::null()})));

  const ClassTable& h1 = fixtures::h1();
  CHECK_FALSE(is_admittable(h1, TypeExpr::app("String", IntervalArg::exact(TypeExpr::object()))));
  CHECK(is_valid(h1, ty(h1, "List<String>")));

  // Wildcards are valid when some instance inside them is.
  const Validity any = validity(h2, ty(h2, "Enum<?>"));
  CHECK(any.valid);
  CHECK(any.search_depth == std::optional<std::size_t>{0});
  CHECK_FALSE(validity(h2, ty(h2, "Enum<Null>")).search_depth);
  CHECK(validity(h2, ty(h2, "Enum<? extends Enum<?>>")).search_depth == std::optional<std::size_t>{1});
  // Arguments must themselves be valid.
  CHECK_FALSE(is_valid(h2, ty(h2, "Enum<Enum<Object>>")));
  CHECK(is_valid(h2, ty(h2, "Enum<Enum<Null>>")) ==
        subtype(h2, ty(h2, "Enum<Enum<Null>>"), ty(h2, "Enum<Enum<Enum<Null>>>")));
}

TEST_CASE("validity with a lower F-bound") {
  const ClassTable t = parse_class_table("class C<T>\nclass D<T super C<T>>");
  CHECK(is_valid(t, ty(t, "D<Object>")));
  CHECK_FALSE(is_valid(t, ty(t, "D<Null>")));
  CHECK(is_valid(t, ty(t, "D<? super C<?>>")));
  // Witness C<?>: C<C<?>> <: C<?>.
  CHECK(is_valid(t, ty(t, "D<? extends C<?>>")));
  // Below C<Null> only Null and C<Null> are candidates; neither satisfies the bound.
  CHECK_FALSE(is_valid(t, ty(t, "D<? extends C<Null>>")));
}

TEST_CASE("dfbg_check") {
  const ClassTable& c = fixtures::c();
  BoundSpec spec;
  spec.lower = parse_bound("C<T>", c, "T");
  spec.upper = parse_bound("Object", c, "T");
  CHECK(dfbg_check(c, spec, TypeExpr::object()));
  CHECK_FALSE(dfbg_check(c, spec, TypeExpr::null()));
  CHECK(dfbg_check(c, BoundSpec{}, TypeExpr::null()));
  CHECK(dfbg_check(c, BoundSpec{}, ty(c, "C<?>")));
}

TEST_CASE("F-subtypes and F-supertypes") {
  const ClassTable& h2 = fixtures::h2();
  for (ArgMode mode : {ArgMode::kWildcard, ArgMode::kInterval}) {
    CHECK(rendered(f_subtypes(h2, "Enum", 2, mode)) == std::vector<std::string>{"Null"});
    CHECK(rendered(f_subtypes(fixtures::c(), "C", 1, mode)) == std::vector<std::string>{"Null"});
  }
  const auto sup = rendered(f_supertypes(h2, "Enum", 1));
  CHECK(sup == std::vector<std::string>{"Enum<?>", "Object"});
  CHECK_THROWS_AS(f_subtypes(fixtures::h1(), "String", 1), Error);
  CHECK_THROWS_AS(f_supertypes(fixtures::h1(), "Object", 1), Error);

  // Membership is exactly the defining predicate over the scanned universe.
  const auto universe = build(h2, 2, ArgMode::kWildcard).types;
  const auto subs = f_subtypes(h2, "Enum", 2);
  const auto sups = f_supertypes(h2, "Enum", 2);
  for (const auto& t : universe) {
    const TypeExpr ft = TypeExpr::app("Enum", IntervalArg::exact(t));
    CHECK((std::find(subs.begin(), subs.end(), t) != subs.end()) == subtype(h2, t, ft));
    CHECK((std::find(sups.begin(), sups.end(), t) != sups.end()) == subtype(h2, ft, t));
  }
}

TEST_CASE("dfbg with F on both sides selects F-subtypes that are also F-supertypes") {
  for (const auto* name : {"h2", "c"}) {
    const ClassTable& t = fixtures::table(name);
    const std::string f = *t.generic_set().begin();
    BoundSpec spec;
    spec.lower = parse_bound(f + "<T>", t, "T");
    spec.upper = parse_bound(f + "<T>", t, "T");
    const auto subs = f_subtypes(t, f, 2);
    const auto sups = f_supertypes(t, f, 2);
    for (const auto& x : build(t, 2, ArgMode::kWildcard).types) {
      if (!dfbg_check(t, spec, x)) continue;
      CHECK(std::find(subs.begin(), subs.end(), x) != subs.end());
      CHECK(std::find(sups.begin(), sups.end(), x) != sups.end());
    }
  }
}
