#include <doctest.h>

#include <json.hpp>

#include "zerohecke/module_io.hpp"

using namespace zerohecke;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE_TEMPLATE("module JSON round trip", K, Rational, Fp) {
  auto g = make_group("B3");
  auto m = projective_module<K>(g, GenSet::of({1}), GenSet::of({1, 2}));
  const auto text = module_to_json(m);
  auto back = module_from_json<K>(text);
  CHECK(back.actions() == m.actions());
  CHECK(back.labels() == m.labels());
  CHECK(back.group().model().name() == "B3");
  CHECK(module_to_json(back) == text);
}

TEST_CASE("module JSON schema") {
  auto g = make_group("A3");
  auto j = nlohmann::json::parse(module_to_json(interval_module<Rational>(g, g->element("1324"), g->element("1432"))));
  CHECK(j["group"] == "A3");
  CHECK(j["field"] == "Q");
  CHECK(j["dim"] == 3);
  CHECK(j["labels"] == nlohmann::json({"1324", "1423", "1432"}));
  CHECK(j["action"]["s2"].size() == 9);
  CHECK(j["action"]["s2"][0] == "1/1");
  ScopedModulus guard(101);
  auto f = nlohmann::json::parse(module_to_json(simple_module<Fp>(g, GenSet::of({1}))));
  CHECK(f["field"] == "Fp:101");
  CHECK(f["action"]["s1"][0] == "1 mod 101");
}

TEST_CASE("module JSON errors") {
  auto g = make_group("A3");
  const auto text = module_to_json(simple_module<Rational>(g, GenSet()));
  CHECK_THROWS_AS(module_from_json<Fp>(text), ArgumentError);
  CHECK_THROWS_AS(module_from_json<Rational>("{"), ArgumentError);
  CHECK_THROWS_AS(module_from_json<Rational>(R"({"group":"A3","dim":1,"action":{"s1":["0"]}})"), ArgumentError);
  CHECK_THROWS_AS(module_from_json<Rational>(R"({"group":"E8","dim":1,"action":{}})"), ConfigError);
  // a module JSON that breaks the relations still loads; checking is separate
  auto bad = module_from_json<Rational>(
      R"({"group":"I2:3","dim":1,"labels":["x"],"action":{"s1":["2"],"s2":["0"]}})");
  CHECK_FALSE(verify_relations(bad).ok);
}

TEST_CASE("action digraph of B(1324,1432)") {
  auto g = make_group("A3");
  auto dot = module_digraph_dot(interval_module<Rational>(g, g->element("1324"), g->element("1432")));
  CHECK(count(dot, "[label=\"13") == 1);
  CHECK(count(dot, "[label=\"14") == 2);
  CHECK(dot.find("b0 -> b0 [label=\"pi_2\"]") != std::string::npos);
  CHECK(dot.find("b1 -> b2 [label=\"pi_2\"]") != std::string::npos);
  CHECK(count(dot, "-> zero") == 3);
  CHECK(dot.find("zero [label=\"0\"") != std::string::npos);
  auto no_sink = module_digraph_dot(interval_module<Rational>(g, g->element("1324"), g->element("1432")), false);
  CHECK(no_sink.find("zero") == std::string::npos);
}

TEST_CASE("group JSON") {
  auto g = make_group("I2:5");
  auto j = nlohmann::json::parse(group_to_json(*g));
  CHECK(j["model"] == "I2:5");
  CHECK(j["size"] == 10);
  CHECK(j["elements"].size() == 10);
  CHECK(j["elements"][0]["length"] == 0);
  CHECK(j["elements"][0]["word"].empty());
  CHECK(j["elements"][1]["dr"].size() == 1);
}

TEST_CASE("descent classes of A3") {
  auto dot = descent_classes_dot(*make_group("A3"));
  CHECK(count(dot, "subgraph cluster_") == 8);
  CHECK(count(dot, "fillcolor=") == 24);
  CHECK(count(dot, "fillcolor=\"white\"") == 2);
  CHECK(dot == descent_classes_dot(*make_group("A3")));
}

TEST_CASE("twist square for I = {1} in A3") {
  auto dot = twist_square_dot(make_group("A3"), GenSet::of({1}));
  for (const char* label : {"P{1}", "P{3}", "P{1,2}", "P{2,3}"})
    CHECK(dot.find(std::string("label=\"") + label + "\"") != std::string::npos);
  CHECK(count(dot, "label=\"phi\"") == 2);
  CHECK(count(dot, "label=\"theta_hat\"") == 2);
  CHECK(count(dot, "label=\"omega_hat\"") == 2);
}
