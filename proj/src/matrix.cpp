#include "zerohecke/matrix.hpp"

#include <map>

namespace zerohecke {
namespace {

// Prime factorisation by trial division up to a bound; any cofactor left
// over is kept as if it were prime, which can only add candidates.
std::map<mpz_class, int> factor(mpz_class n) {
  std::map<mpz_class, int> out;
  if (n < 0) n = -n;
  for (unsigned long d = 2; d < 100000 && mpz_class(d) * d <= n; ++d) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      ++out[mpz_class(d)];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : factor(n)) {
    std::size_t base = out.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> roots_in_field(const Polynomial<Rational>& p) {
  int deg = p.degree();
  if (deg < 0) throw ArgumentError("roots of the zero polynomial");
  mpz_class lcm = 1;
  for (int i = 0; i <= deg; ++i) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.coeffs[i].value().get_den_mpz_t());
  std::vector<mpz_class> a(deg + 1);
  for (int i = 0; i <= deg; ++i) a[i] = p.coeffs[i].value().get_num() * (lcm / p.coeffs[i].value().get_den());

  std::vector<Rational> roots;
  int low = 0;
  while (low <= deg && a[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (low == deg) return roots;

  // Rational root theorem on a[low..deg].
  std::vector<Rational> cand;
  for (const auto& num : divisors(a[low]))
    for (const auto& den : divisors(a[deg])) {
      mpq_class q(num, den);
      q.canonicalize();
      cand.emplace_back(q);
      cand.emplace_back(mpq_class(-q));
    }
  for (const auto& c : cand) {
    if (!p.eval(c).is_zero()) continue;
    bool seen = false;
    for (const auto& r : roots) seen = seen || r == c;
    if (!seen) roots.push_back(c);
  }
  std::sort(roots.begin(), roots.end(), [](const Rational& x, const Rational& y) { return x.value() < y.value(); });
  return roots;
}

std::vector<Fp> roots_in_field(const Polynomial<Fp>& p) {
  if (p.degree() < 0) throw ArgumentError("roots of the zero polynomial");
  std::vector<Fp> roots;
  const std::uint32_t q = Fp::modulus();
  const std::uint32_t limit = q <= (1u << 22) ? q : (1u << 22);
  for (std::uint32_t x = 0; x < limit && roots.size() < static_cast<std::size_t>(p.degree()); ++x)
    if (p.eval(Fp(static_cast<long>(x))).is_zero()) roots.emplace_back(static_cast<long>(x));
  return roots;
}

}  // namespace zerohecke
