#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "gensub/construct.hpp"
#include "gensub/error.hpp"
#include "gensub/judge.hpp"
#include "gensub/operators.hpp"
#include "oracles.hpp"

using namespace gensub;

namespace {

std::size_t count_maximal(const Poset& p) {
  std::vector<bool> has_upper(p.size());
  for (auto [a, b] : p.cover_indices()) has_upper[a] = true;
  return static_cast<std::size_t>(std::count(has_upper.begin(), has_upper.end(), false));
}

std::size_t count_minimal(const Poset& p) {
  std::vector<bool> has_lower(p.size());
  for (auto [a, b] : p.cover_indices()) has_lower[b] = true;
  return static_cast<std::size_t>(std::count(has_lower.begin(), has_lower.end(), false));
}

// Containment order checked from labels alone.
void check_containment_invariant(const ArgPoset& args, const Poset& input) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto [lo, hi] = split_interval_label(args.base.element(i));
    CHECK(input.leq(lo, hi));
    for (std::size_t j = 0; j < args.size(); ++j) {
      const auto [lo2, hi2] = split_interval_label(args.base.element(j));
      CHECK(args.base.leq(i, j) == (input.leq(lo2, lo) && input.leq(hi, hi2)));
    }
  }
}

}  // namespace

TEST_CASE("wc on small chains") {
  const ArgPoset w2 = wc(chain(2));
  CHECK(w2.base.elements() == std::vector<std::string>{"[e0,e0]", "[e0,e1]", "[e1,e1]"});
  CHECK(bounds(w2.base).top == "[e0,e1]");
  CHECK(w2.base.covers().size() == 2);

  const ArgPoset w1 = wc(chain(1));
  CHECK(w1.base.elements() == std::vector<std::string>{"[e0,e0]"});

  CHECK_THROWS_WITH_AS(wc(antichain({"x", "y"})), "wc requires bounded poset", Error);
}

TEST_CASE("wc and int_op censuses on chains match interval enumeration") {
  for (std::size_t n = 2; n <= 8; ++n) {
    const Poset c = chain(n);
    const ArgPoset w = wc(c);
    const auto wc_oracle = oracle::chain_intervals(n, true);
    CHECK(w.size() == wc_oracle.elements);
    CHECK(w.size() == 3 * n - 3);
    CHECK(count_maximal(w.base) == 1);
    CHECK(count_minimal(w.base) == n);
    CHECK(wc_oracle.maximal == 1);
    CHECK(wc_oracle.minimal == n);

    const ArgPoset in = int_op(c);
    CHECK(in.size() == oracle::chain_intervals(n, false).elements);
    CHECK(in.size() == n * (n + 1) / 2);

    check_containment_invariant(w, c);
    check_containment_invariant(in, c);
  }
}

TEST_CASE("int_op needs no bounds") {
  const ArgPoset in = int_op(antichain({"x", "y"}));
  CHECK(in.base.elements() == std::vector<std::string>{"[x,x]", "[y,y]"});
  CHECK_FALSE(in.base.leq("[x,x]", "[y,y]"));
  CHECK_FALSE(in.base.leq("[y,y]", "[x,x]"));
  CHECK(int_op(chain(2)).base.elements() == wc(chain(2)).base.elements());
}

TEST_CASE("wildcards are a subset of intervals") {
  for (const auto* name : {"h1", "h2", "h3", "c"}) {
    const SubtypingApprox s1 = build(fixtures::table(name), 1, ArgMode::kWildcard);
    const auto w = wc(s1.poset).base.elements();
    const auto in = int_op(s1.poset).base.elements();
    CHECK(std::includes(in.begin(), in.end(), w.begin(), w.end()));
  }
}

TEST_CASE("split_interval_label") {
  CHECK(split_interval_label("[a,b]") == std::pair<std::string, std::string>{"a", "b"});
  CHECK(split_interval_label("[List<[A,B]>,Object]") ==
        std::pair<std::string, std::string>{"List<[A,B]>", "Object"});
  CHECK_THROWS_AS(split_interval_label("[a,b,c]"), Error);
  CHECK_THROWS_AS(split_interval_label("a,b"), Error);
}

TEST_CASE("ppp without generics is the class poset") {
  const Poset c = transitive_reduction({{"Null", "Object"}}, {"Null", "Object"});
  const Poset out = ppp(c, {}, wc(c));
  CHECK(out.elements() == c.elements());
  CHECK(out.covers() == c.covers());
  CHECK_THROWS_AS(ppp(c, {"List"}, wc(c)), UnknownElement);
}

TEST_CASE("ppp over H1 classes") {
  const ClassTable& h1 = fixtures::h1();
  const SubtypingApprox s0 = build(h1, 0, ArgMode::kWildcard);
  const Poset out = ppp(h1.class_poset(), h1.generic_set(), wc(s0.poset));

  CHECK(out.size() == 3 + 2 * 6);
  CHECK(out.leq("LinkedList<[String,String]>", "List<[Null,Object]>"));
  CHECK_FALSE(out.leq("List<[String,String]>", "List<[Object,Object]>"));
  CHECK(out.leq("LinkedList<[Null,String]>", "Object"));
  CHECK(out.leq("Null", "List<[Object,Object]>"));
  CHECK_FALSE(out.leq("String", "List<[Null,Object]>"));

  // Generated order is transitive: closure of the covers reproduces it.
  const auto rel = out.covers();
  CHECK(transitive_reduction(rel, out.elements()).closure() == out.closure());

  // Cross-check with the recursive decision procedure.
  for (const auto& a : out.elements()) {
    for (const auto& b : out.elements()) {
      auto as_type = [&](const std::string& e) {
        auto open = e.find('<');
        if (open == std::string::npos) return e;
        auto [lo, hi] = split_interval_label(e.substr(open + 1, e.size() - open - 2));
        return e.substr(0, open) + "<[" + lo + "," + hi + "]>";
      };
      CHECK(out.leq(a, b) == subtype(h1, parse_type(as_type(a), h1), parse_type(as_type(b), h1)));
    }
  }
}

TEST_CASE("ppp is monotone in its argument poset") {
  const ClassTable& h1 = fixtures::h1();
  const SubtypingApprox s1 = build(h1, 1, ArgMode::kWildcard);
  const ArgPoset small = wc(build(h1, 0, ArgMode::kWildcard).poset);
  const ArgPoset large = wc(s1.poset);
  const ArgPoset widest = int_op(s1.poset);
  CHECK(is_embedding(small.base, large.base, OrderMap::identity(small.base)));
  CHECK(is_embedding(large.base, widest.base, OrderMap::identity(large.base)));

  const Poset p_small = ppp(h1.class_poset(), h1.generic_set(), small);
  const Poset p_large = ppp(h1.class_poset(), h1.generic_set(), large);
  const Poset p_widest = ppp(h1.class_poset(), h1.generic_set(), widest);
  CHECK(is_embedding(p_small, p_large, OrderMap::identity(p_small)));
  CHECK(is_embedding(p_large, p_widest, OrderMap::identity(p_large)));
}
