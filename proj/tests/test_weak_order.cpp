#include <doctest.h>

#include <json.hpp>

#include "zerohecke/weak_order.hpp"

using namespace zerohecke;

TEST_CASE("left weak order") {
  auto g = make_group("A3");
  CHECK_FALSE(leq_L(*g, g->element("2134"), g->element("1243")));
  CHECK(leq_L(*g, g->element("2134"), g->element("4231")));
  CHECK(leq_L(*g, g->identity(), g->longest()));
}

TEST_CASE("interval sizes") {
  auto g = make_group("A3");
  CHECK(interval(g, g->element("2134"), g->element("4132")).size() == 6);
  CHECK(interval(g, g->element("2134"), g->element("4231")).size() == 8);
  CHECK(interval(g, g->identity(), g->longest()).size() == 24);
  CHECK(interval(g, g->element("1324"), g->element("1432")).size() == 3);
  CHECK_THROWS_AS(interval(g, g->element("2134"), g->element("1243")), ArgumentError);
}

TEST_CASE("interval members agree with leq_L") {
  auto g = make_group("B3");
  WeakInterval iv(g, g->generator(0), g->longest());
  for (ElementId w = 0; w < g->size(); ++w)
    CHECK(iv.contains(w) == (leq_L(*g, g->generator(0), w) && leq_L(*g, w, g->longest())));
}

TEST_CASE("paths from the bottom") {
  auto g = make_group("A3");
  WeakInterval iv(g, g->element("2134"), g->element("4231"));
  for (ElementId w : iv.members()) {
    ElementId x = iv.lo();
    auto path = iv.path_from_lo(w);
    for (auto it = path.rbegin(); it != path.rend(); ++it) x = g->left_mul(*it, x);
    CHECK(x == w);
    CHECK(static_cast<int>(path.size()) == iv.rank(w));
  }
}

TEST_CASE("upper ideals") {
  auto g = make_group("A3");
  WeakInterval iv(g, g->element("2134"), g->element("4231"));
  CHECK_THROWS_AS(UpperIdeal(iv, {iv.lo()}), ArgumentError);
  CHECK_THROWS_AS(UpperIdeal(iv, {g->element("1243")}), ArgumentError);
  UpperIdeal top(iv, {iv.hi()});
  CHECK(top.size() == 1);
  auto c = complement_ideal(iv, g->element("4132"));
  CHECK(c.size() == 2);
  CHECK(is_upper_ideal(iv, c.elements()));
  CHECK(complement_ideal(iv, iv.hi()).empty());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto y = random_upper_ideal(iv, seed);
    CHECK(is_upper_ideal(iv, y.elements()));
    CHECK(y.elements() == random_upper_ideal(iv, seed).elements());
  }
  CHECK(upward_closure(iv, {iv.lo()}).size() == iv.size());
}

TEST_CASE("Hasse export") {
  auto g = make_group("A3");
  WeakInterval iv(g, g->element("1324"), g->element("1432"));
  auto j = nlohmann::json::parse(export_hasse(iv, "json"));
  CHECK(j["members"].size() == 3);
  CHECK(j["covers"].size() == 2);
  CHECK(j["lo"] == g->element("1324"));
  auto dot = export_hasse(iv, "dot");
  CHECK(dot.find("label=\"pi_2\"") != std::string::npos);
  CHECK(dot == export_hasse(iv, "dot"));
  CHECK_THROWS_AS(export_hasse(iv, "svg"), ArgumentError);
}
