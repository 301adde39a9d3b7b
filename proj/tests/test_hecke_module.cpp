#include <doctest.h>

#include "zerohecke/hecke_module.hpp"

using namespace zerohecke;

namespace {

template <class K>
HModule<K> B(const GroupPtr& g, const char* u, const char* v) {
  return interval_module<K>(g, g->element(u), g->element(v));
}

template <class K>
Vec<K> vector_on(const HModule<K>& m, const GroupPtr& g, std::initializer_list<std::pair<const char*, long>> terms) {
  Vec<K> v(m.dim());
  for (auto [label, c] : terms) v[m.position(g->element(label))] = K(c);
  return v;
}

}  // namespace

TEST_CASE_TEMPLATE("projective modules", K, Rational, Fp) {
  auto g = make_group("A3");
  CHECK(projective_module<K>(g, GenSet::of({2}), GenSet::of({2})).dim() == 5);
  auto trivial = projective_module<K>(g, GenSet(), GenSet());
  CHECK(trivial.dim() == 1);
  for (int s = 0; s < 3; ++s) CHECK(trivial.action(s).is_zero());
  CHECK(projective_module<K>(g, GenSet::of({1}), GenSet::of({1, 3})).dim() == 8);
  CHECK_THROWS_AS(projective_module<K>(g, GenSet::of({1, 2}), GenSet::of({1})), ArgumentError);
}

TEST_CASE_TEMPLATE("simple modules", K, Rational, Fp) {
  auto g = make_group("A3");
  auto none = simple_module<K>(g, GenSet());
  auto all = simple_module<K>(g, g->all_generators());
  for (int s = 0; s < 3; ++s) {
    CHECK(none.action(s)(0, 0).is_zero());
    CHECK(all.action(s)(0, 0) == K(1));
  }
  CHECK(hom_space(simple_module<K>(g, GenSet::of({1})), simple_module<K>(g, GenSet::of({1}))).size() == 1);
  CHECK(hom_space(simple_module<K>(g, GenSet::of({1})), simple_module<K>(g, GenSet::of({2}))).empty());
  CHECK(is_isomorphic(simple_module<K>(g, GenSet::of({1})), B<K>(g, "2134", "2134")).status == Verdict::yes);
  CHECK(radical(all).dim() == 0);
}

TEST_CASE_TEMPLATE("relations", K, Rational, Fp) {
  for (const char* name : {"A3", "B3", "I2:7"}) {
    auto g = make_group(name);
    for (GenSet I : all_subsets(g->rank())) {
      CHECK(verify_relations(projective_module<K>(g, I, I)).ok);
      CHECK(verify_relations(simple_module<K>(g, I)).ok);
    }
    CHECK(verify_relations(interval_module<K>(g, g->identity(), g->longest())).ok);
  }
  auto g = make_group("A3");
  auto m = B<K>(g, "2134", "4231");
  m.corrupt(1, 0, 0, K(1));
  auto rc = verify_relations(m);
  CHECK_FALSE(rc.ok);
  CHECK_FALSE(rc.witness.empty());
}

TEST_CASE_TEMPLATE("P_{1}^{1,3} and B(2134,4231)", K, Rational, Fp) {
  auto g = make_group("A3");
  auto p = projective_module<K>(g, GenSet::of({1}), GenSet::of({1, 3}));
  auto b = B<K>(g, "2134", "4231");
  auto iso = is_isomorphic(p, b);
  REQUIRE(iso.status == Verdict::yes);
  REQUIRE(iso.witness.has_value());
  CHECK(is_invertible(*iso.witness));
  for (int s = 0; s < 3; ++s) CHECK(*iso.witness * p.action(s) == b.action(s) * *iso.witness);
  CHECK(hom_space(p, p).size() == 3);
  CHECK(total(composition_factors(p)) == 8);
  std::vector<std::size_t> dims;
  for (const auto& m : decompose(p)) dims.push_back(m.dim());
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{3, 5});
}

TEST_CASE_TEMPLATE("hom spaces between projectives", K, Rational, Fp) {
  auto g = make_group("A3");
  auto p1 = projective_module<K>(g, GenSet::of({1}), GenSet::of({1}));
  auto p3 = projective_module<K>(g, GenSet::of({3}), GenSet::of({3}));
  CHECK(hom_space(p1, p3).size() == 1);
  CHECK(hom_space(p3, p1).size() == 1);
  for (const auto& t : hom_space(p1, p3))
    for (int s = 0; s < 3; ++s) CHECK(t * p1.action(s) == p3.action(s) * t);
}

TEST_CASE_TEMPLATE("isomorphism fast paths", K, Rational, Fp) {
  auto g = make_group("A3");
  auto m = B<K>(g, "1324", "1432");
  CHECK(is_isomorphic(m, direct_sum(m, m)).status == Verdict::no);
  CHECK(is_isomorphic(m, B<K>(g, "3142", "4231")).status == Verdict::no);
  CHECK(is_isomorphic(m, m).status == Verdict::yes);
}

TEST_CASE_TEMPLATE("top, socle, radical of projectives", K, Rational, Fp) {
  for (const char* name : {"A3", "B3", "I2:5"}) {
    auto g = make_group(name);
    for (GenSet I : all_subsets(g->rank())) {
      auto p = projective_module<K>(g, I, I);
      CHECK(p.dim() == g->descent_class(I).size());
      CHECK(top(p) == Multiplicities{{I, 1}});
      auto soc = socle(p);
      CHECK(total(soc.multiplicities) == 1);
      auto [u, v] = g->descent_class_bounds(I);
      CHECK(soc.space == Subspace<K>::coordinate({p.position(v)}, p.dim()));
      CHECK(radical(p).dim() + 1 == p.dim());
      CHECK_FALSE(radical(p).contains(Subspace<K>::coordinate({p.position(u)}, p.dim())));
    }
  }
}

TEST_CASE_TEMPLATE("decomposable socle of B(2143,4132)", K, Rational, Fp) {
  auto g = make_group("A3");
  auto m = B<K>(g, "2143", "4132");
  auto soc = socle(m);
  CHECK(soc.space.dim() >= 2);
  CHECK(soc.space.contains(vector_on(m, g, {{"3142", 1}, {"4132", -1}})));
  CHECK(soc.space.contains(vector_on(m, g, {{"4132", 1}})));
  CHECK(soc.multiplicities == Multiplicities{{GenSet::of({2}), 1}, {GenSet::of({2, 3}), 1}});
}

TEST_CASE_TEMPLATE("submodules and quotients", K, Rational, Fp) {
  auto g = make_group("A3");
  WeakInterval iv(g, g->element("2134"), g->element("4231"));
  auto m = interval_module<K>(iv);
  CHECK(submodule_from_ideal(m, UpperIdeal(iv, iv.members())).actions() == m.actions());
  auto top_only = submodule_from_ideal(m, UpperIdeal(iv, {iv.hi()}));
  CHECK(top_only.dim() == 1);
  for (int s = 0; s < 3; ++s)
    CHECK(top_only.action(s)(0, 0) == (g->left_descents(iv.hi()).contains(s) ? K(1) : K(0)));
  auto p = projective_module<K>(g, GenSet::of({1}), GenSet::of({1, 3}));
  auto q = quotient_by_ideal(p, complement_ideal(iv, g->element("4132")));
  CHECK(is_isomorphic(q, B<K>(g, "2134", "4132")).status == Verdict::yes);
  CHECK(direct_sum(m, q).dim() == m.dim() + q.dim());
  Subspace<K> not_invariant = Subspace<K>::coordinate({0}, m.dim());
  CHECK_FALSE(is_invariant(m, not_invariant));
  CHECK_THROWS_AS(submodule(m, not_invariant), ArgumentError);
  CHECK_THROWS_AS(quotient(m, not_invariant), ArgumentError);
}

TEST_CASE_TEMPLATE("composition factors", K, Rational, Fp) {
  auto g = make_group("B3");
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    WeakInterval iv(g, g->identity(), g->longest());
    auto m = quotient_by_ideal(interval_module<K>(iv), random_upper_ideal(iv, seed));
    CHECK(static_cast<std::size_t>(total(composition_factors(m))) == m.dim());
  }
  auto s = simple_module<K>(g, GenSet::of({2}));
  CHECK(composition_factors(s) == Multiplicities{{GenSet::of({2}), 1}});
}

TEST_CASE_TEMPLATE("indecomposability", K, Rational, Fp) {
  auto g = make_group("A3");
  CHECK(is_indecomposable(simple_module<K>(g, GenSet::of({1}))).status == Indecomposability::certified_yes);
  // [2134,4123] = D_{1} is cyclic with a one-dimensional endomorphism ring
  CHECK(is_indecomposable(B<K>(g, "2134", "4123")).status == Indecomposability::certified_yes);
  // 4132 has right descents {1,3}, so B(2134,4132) is not a quotient of P_{1} and it splits
  auto split = is_indecomposable(B<K>(g, "2134", "4132"));
  CHECK(split.status == Indecomposability::decomposable);
  CHECK(split.end_dim == 2);
  std::vector<std::size_t> dims;
  for (const auto& m : decompose(B<K>(g, "2134", "4132"))) dims.push_back(m.dim());
  CHECK(dims == std::vector<std::size_t>{3, 3});
  for (GenSet I : all_subsets(3))
    for (ElementId w : g->descent_class(I)) {
      auto [u, v] = g->descent_class_bounds(I);
      CHECK(is_indecomposable(interval_module<K>(g, w, v)).status == Indecomposability::certified_yes);
      CHECK(is_indecomposable(interval_module<K>(g, u, w)).status == Indecomposability::certified_yes);
    }
}

TEST_CASE_TEMPLATE("rank search", K, Rational, Fp) {
  Matrix<K> a = Matrix<K>::from_rows({{K(1), K(0)}, {K(0), K(0)}}, 2);
  Matrix<K> b = Matrix<K>::from_rows({{K(0), K(0)}, {K(0), K(1)}}, 2);
  auto found = find_full_rank<K>({a, b}, 2, 0);
  REQUIRE(found.status == Verdict::yes);
  CHECK(rank(combine<K>({a, b}, found.coeffs)) == 2);
  Matrix<K> n = Matrix<K>::from_rows({{K(0), K(1)}, {K(0), K(0)}}, 2);
  CHECK(find_full_rank<K>({n}, 2, 0).status == Verdict::no);
}

TEST_CASE("characteristic") {
  auto g = make_group("A3");
  auto p = projective_module<Rational>(g, GenSet::of({1}), GenSet::of({1}));
  auto ch = characteristic(p);
  int total_mult = 0;
  for (const auto& [alpha, k] : ch) total_mult += k;
  CHECK(total_mult == 3);
  CHECK(ch.count(parse_composition("1,3")) == 1);
  CHECK_THROWS(characteristic(projective_module<Rational>(make_group("B3"), GenSet(), GenSet())));
}
