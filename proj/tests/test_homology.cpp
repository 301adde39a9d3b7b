#include <doctest.h>

#include <set>

#include "zerohecke/homology.hpp"

using namespace zerohecke;

namespace {

Multiplicities summands(int rank, GenSet I, GenSet J) {
  Multiplicities m;
  for (GenSet X : all_subsets(rank))
    if (I.subset_of(X) && X.subset_of(J)) m[X] = 1;
  return m;
}

}  // namespace

TEST_CASE_TEMPLATE("superfluous and essential", K, Rational, Fp) {
  auto g = make_group("A3");
  auto p = projective_module<K>(g, GenSet::of({1}), GenSet::of({1}));
  CHECK(is_superfluous(p, radical(p)));
  CHECK_FALSE(is_superfluous(p, Subspace<K>::whole(p.dim())));
  CHECK(is_essential(p, socle(p).space) == Essential::essential);
  CHECK(is_essential(p, Subspace<K>::whole(p.dim())) == Essential::improper);
  auto m = direct_sum(simple_module<K>(g, GenSet()), simple_module<K>(g, GenSet::of({1})));
  CHECK(is_essential(m, Subspace<K>::coordinate({0}, 2)) == Essential::not_essential);
  CHECK_THROWS_AS(is_superfluous(p, Subspace<K>::coordinate({0}, p.dim())), ArgumentError);
}

TEST_CASE_TEMPLATE("cover of B(2134,4132)", K, Rational, Fp) {
  auto g = make_group("A3");
  auto m = interval_module<K>(g, g->element("2134"), g->element("4132"));
  auto c = projective_cover(m);
  CHECK(c.status == Verdict::yes);
  CHECK(c.cover == Multiplicities{{GenSet::of({1}), 1}, {GenSet::of({1, 3}), 1}});
  CHECK(c.kernel_in_radical);
  REQUIRE(c.epi.has_value());
  CHECK(rank(*c.epi) == m.dim());
}

TEST_CASE_TEMPLATE("hull of B(3142,4231)", K, Rational, Fp) {
  auto g = make_group("A3");
  auto h = injective_hull(interval_module<K>(g, g->element("3142"), g->element("4231")));
  CHECK(h.status == Verdict::yes);
  CHECK(h.hull == Multiplicities{{GenSet::of({1, 3}), 1}});
  CHECK(h.socle_contained);
}

TEST_CASE_TEMPLATE("projective socle labels", K, Rational, Fp) {
  for (const char* name : {"A3", "B3", "I2:5"}) {
    auto g = make_group(name);
    auto labels = projective_socle_labels<K>(g);
    std::set<GenSet> seen;
    for (const auto& [I, label] : labels) seen.insert(label);
    CHECK(seen.size() == labels.size());
    for (const auto& [I, label] : labels) CHECK(label == g->left_descents(g->descent_class_bounds(I).second));
  }
}

TEST_CASE_TEMPLATE("cover and hull sweep on A3", K, Rational, Fp) {
  auto g = make_group("A3");
  for (GenSet I : all_subsets(3))
    for (GenSet J : all_subsets(3)) {
      if (!I.subset_of(J)) continue;
      auto [uI, vI] = g->descent_class_bounds(I);
      auto [uJ, vJ] = g->descent_class_bounds(J);
      WeakInterval iv(g, uI, vJ);
      for (ElementId w : g->descent_class(J)) {
        auto y = complement_ideal(iv, w);
        CHECK(verify_cover_theorem<K>(g, I, J, y).status == CheckStatus::pass);
        CHECK(verify_path_lemma(g, I, J, y).status == CheckStatus::pass);
        CHECK(projective_cover(interval_module<K>(g, uI, w)).cover == summands(3, I, J));
      }
      for (ElementId w : g->descent_class(I)) {
        CHECK(verify_hull_theorem<K>(g, I, J, upward_closure(iv, {w})).status == CheckStatus::pass);
        CHECK(injective_hull(interval_module<K>(g, w, vJ)).hull == summands(3, I, J));
      }
    }
}

TEST_CASE_TEMPLATE("theorem preconditions", K, Rational, Fp) {
  auto g = make_group("A3");
  const GenSet I = GenSet::of({1}), J = GenSet::of({1, 3});
  auto [uI, vI] = g->descent_class_bounds(I);
  auto [uJ, vJ] = g->descent_class_bounds(J);
  WeakInterval iv(g, uI, vJ);
  CHECK(verify_cover_theorem<K>(g, I, J, UpperIdeal(iv, iv.members())).status == CheckStatus::precondition);
  CHECK(verify_hull_theorem<K>(g, I, J, UpperIdeal(iv, {})).status == CheckStatus::precondition);
  CHECK(verify_hull_theorem<K>(g, I, J, UpperIdeal(iv, iv.members())).status == CheckStatus::pass);
}
