#include <doctest.h>

#include "zerohecke/field.hpp"
#include "zerohecke/matrix.hpp"

using namespace zerohecke;

TEST_CASE("rationals") {
  Rational a(1, 2), b(-2, 4);
  CHECK((a + b).is_zero());
  CHECK((a * a).str() == "1/4");
  CHECK(Rational(3).str() == "3/1");
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(a.inverse() == Rational(2));
  CHECK_THROWS(Rational(0).inverse());
  CHECK_THROWS(Rational::parse("1/x"));
}

TEST_CASE("integers mod p") {
  ScopedModulus guard(101);
  Fp a(100);
  CHECK((a + Fp(1)).is_zero());
  CHECK(Fp(-1) == a);
  CHECK(a.str() == "100 mod 101");
  CHECK(Fp::parse("7 mod 101") == Fp(7));
  CHECK_THROWS(Fp::parse("7 mod 103"));
  for (long k = 1; k < 101; ++k) CHECK(Fp(k) * Fp(k).inverse() == Fp(1));
}

TEST_CASE("field specs") {
  CHECK(parse_field("Q").rational);
  CHECK(parse_field("Fp:101").prime == 101);
  CHECK_THROWS_AS(parse_field("Fp:100"), ConfigError);
  CHECK_THROWS_AS(parse_field("R"), ConfigError);
  CHECK(is_prime(101));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE_TEMPLATE("rank, kernel, image", K, Rational, Fp) {
  auto id = Matrix<K>::identity(4);
  CHECK(rank(id) == 4);
  CHECK(kernel(id).dim() == 0);
  Matrix<K> m = Matrix<K>::from_rows({{K(1), K(2), K(3)}, {K(2), K(4), K(6)}}, 3);
  CHECK(rank(m) == 1);
  auto ker = kernel(m);
  CHECK(ker.dim() == 2);
  for (const auto& v : ker.basis()) {
    auto image_of_v = m.apply(v);
    CHECK(std::all_of(image_of_v.begin(), image_of_v.end(), [](const K& x) { return x.is_zero(); }));
  }
  CHECK(image(m).dim() == 1);
  CHECK(Matrix<K>(3, 5).is_zero());
}

TEST_CASE_TEMPLATE("solve, inverse, determinant", K, Rational, Fp) {
  Matrix<K> a = Matrix<K>::from_rows({{K(2), K(1)}, {K(1), K(1)}}, 2);
  auto x = solve(a, Vec<K>{K(3), K(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == K(1));
  CHECK((*x)[1] == K(1));
  CHECK(determinant(a) == K(1));
  CHECK(a * inverse(a) == Matrix<K>::identity(2));
  Matrix<K> singular = Matrix<K>::from_rows({{K(1), K(1)}, {K(1), K(1)}}, 2);
  CHECK_FALSE(is_invertible(singular));
  CHECK_FALSE(solve(singular, Vec<K>{K(1), K(0)}).has_value());
}

TEST_CASE_TEMPLATE("subspaces", K, Rational, Fp) {
  auto e = [](std::size_t i) {
    Vec<K> v(4);
    v[i] = K(1);
    return v;
  };
  auto u = Subspace<K>::span({e(0), e(1)}, 4);
  auto w = Subspace<K>::span({e(1), e(2)}, 4);
  CHECK(sum(u, w).dim() == 3);
  CHECK(intersect(u, w).dim() == 1);
  CHECK(intersect(u, w) == Subspace<K>::coordinate({1}, 4));
  CHECK(u.contains(e(0)));
  CHECK_FALSE(u.contains(e(3)));
  CHECK(Subspace<K>::whole(4).contains(w));
  CHECK(u.complement_indices() == std::vector<std::size_t>{2, 3});
}

TEST_CASE_TEMPLATE("minimal polynomials and Fitting splits", K, Rational, Fp) {
  // diag(1, 1, 2) with a Jordan block on the first two coordinates
  Matrix<K> m = Matrix<K>::from_rows({{K(1), K(1), K(0)}, {K(0), K(1), K(0)}, {K(0), K(0), K(2)}}, 3);
  auto p = min_poly(m);
  CHECK(p.degree() == 3);
  CHECK(p.eval(m).is_zero());
  auto roots = roots_in_field(p);
  CHECK(roots == std::vector<K>{K(1), K(2)});
  auto [nil, inv] = fitting_split<K>(m - Matrix<K>::identity(3));
  CHECK(nil.dim() == 2);
  CHECK(inv.dim() == 1);
}

TEST_CASE("rational roots") {
  // (x - 1/2)(x + 3)(x^2 + 1)
  Polynomial<Rational> p{{Rational(-3, 2), Rational(5, 2), Rational(-1, 2), Rational(5, 2), Rational(1)}};
  CHECK(roots_in_field(p) == std::vector<Rational>{Rational(-3), Rational(1, 2)});
}

TEST_CASE("roots mod p") {
  ScopedModulus guard(101);
  // x^2 + 1 splits mod 101 since 101 = 1 mod 4; 10^2 = 100 = -1
  Polynomial<Fp> p{{Fp(1), Fp(0), Fp(1)}};
  CHECK(roots_in_field(p) == std::vector<Fp>{Fp(10), Fp(91)});
}
