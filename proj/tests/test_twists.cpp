#include <doctest.h>

#include "zerohecke/twists.hpp"

using namespace zerohecke;

TEST_CASE("twist names") {
  for (Twist t : {Twist::phi, Twist::theta, Twist::chi, Twist::theta_hat, Twist::omega_hat})
    CHECK(parse_twist(to_string(t)) == t);
  CHECK_THROWS_AS(parse_twist("psi"), ArgumentError);
}

TEST_CASE_TEMPLATE("matrix realisations", K, Rational, Fp) {
  auto g = make_group("A3");
  auto m = interval_module<K>(g, g->element("2134"), g->element("4231"));
  auto phi = apply_twist(Twist::phi, m), theta = apply_twist(Twist::theta, m), chi = apply_twist(Twist::chi, m);
  for (int s = 0; s < 3; ++s) {
    CHECK(phi.action(s) == m.action(g->conj_w0_generator(s)));
    CHECK(theta.action(s) == Matrix<K>::identity(m.dim()) - m.action(s));
    CHECK(chi.action(s) == m.action(s).transpose());
  }
  for (Twist t : {Twist::phi, Twist::theta, Twist::chi, Twist::theta_hat, Twist::omega_hat}) {
    auto tw = apply_twist(t, m);
    CHECK(tw.dim() == m.dim());
    CHECK(verify_relations(tw).ok);
  }
  CHECK(apply_twist(Twist::theta_hat, m).actions() == apply_twist(Twist::theta, chi).actions());
  CHECK(apply_twist(Twist::omega_hat, m).actions() == apply_twist(Twist::phi, apply_twist(Twist::theta_hat, m)).actions());
  CHECK(chi.labels().front().back() == '*');
}

TEST_CASE_TEMPLATE("theta on simples", K, Rational, Fp) {
  auto g = make_group("B3");
  for (GenSet I : all_subsets(3))
    CHECK(is_isomorphic(apply_twist(Twist::theta, simple_module<K>(g, I)), simple_module<K>(g, I.complement(3))).status ==
          Verdict::yes);
}

TEST_CASE("twisted projective indices in A3") {
  auto g = make_group("A3");
  const GenSet I = GenSet::of({1});
  CHECK(twisted_projective_index(Twist::phi, *g, I, I).first == GenSet::of({3}));
  CHECK(twisted_projective_index(Twist::theta_hat, *g, I, I).first == GenSet::of({1, 2}));
  CHECK(twisted_projective_index(Twist::omega_hat, *g, I, I).first == GenSet::of({2, 3}));
  CHECK_THROWS_AS(twisted_projective_index(Twist::chi, *g, I, I), ArgumentError);
}

TEST_CASE_TEMPLATE("twisted projectives", K, Rational, Fp) {
  for (const char* name : {"A3", "I2:5"}) {
    auto g = make_group(name);
    for (GenSet I : all_subsets(g->rank()))
      for (GenSet J : all_subsets(g->rank())) {
        if (!I.subset_of(J)) continue;
        auto p = projective_module<K>(g, I, J);
        for (Twist t : {Twist::phi, Twist::theta_hat, Twist::omega_hat}) {
          auto [I2, J2] = twisted_projective_index(t, *g, I, J);
          CHECK(is_isomorphic(apply_twist(t, p), projective_module<K>(g, I2, J2)).status == Verdict::yes);
        }
      }
  }
}

TEST_CASE_TEMPLATE("twist theorem", K, Rational, Fp) {
  auto g = make_group("A3");
  WeakInterval iv(g, g->element("2134"), g->element("4231"));
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto y = random_upper_ideal(iv, seed);
    for (Twist t : {Twist::phi, Twist::theta_hat, Twist::omega_hat}) {
      auto res = verify_twist_theorem<K>(t, g, iv.lo(), iv.hi(), y, seed);
      CHECK(res.status == Verdict::yes);
      CHECK(res.explicit_witness);
    }
  }
  auto predicted = predicted_twist_of_quotient<K>(Twist::phi, g, iv.lo(), iv.hi(), UpperIdeal(iv, {}));
  CHECK(is_isomorphic(predicted, interval_module<K>(g, g->element("1243"), g->element("4231"))).status == Verdict::yes);
}
