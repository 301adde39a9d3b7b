#include "zerohecke/field.hpp"

#include <charconv>

#include "zerohecke/errors.hpp"

namespace zerohecke {

Rational::Rational(long n, long d) {
  if (d == 0) throw ArgumentError("zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) throw ArgumentError("division by zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArgumentError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

Rational Rational::parse(std::string_view text) {
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) throw ArgumentError("bad rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw ArgumentError("zero denominator");
  return Rational(q);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void Fp::set_modulus(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) throw ConfigError("modulus " + std::to_string(p) + " is not a prime below 2^31");
  modulus_ = p;
}

Fp::Fp(long n) {
  long m = static_cast<long>(modulus_);
  long r = n % m;
  v_ = static_cast<std::uint32_t>(r < 0 ? r + m : r);
}

Fp Fp::inverse() const {
  if (v_ == 0) throw ArgumentError("division by zero");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = v_, e = modulus_ - 2;
  while (e) {
    if (e & 1) result = result * base % modulus_;
    base = base * base % modulus_;
    e >>= 1;
  }
  Fp out;
  out.v_ = static_cast<std::uint32_t>(result);
  return out;
}

std::string Fp::str() const { return std::to_string(v_) + " mod " + std::to_string(modulus_); }

Fp Fp::parse(std::string_view text) {
  auto pos = text.find(" mod ");
  std::string_view head = text.substr(0, pos);
  long k = 0;
  auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), k);
  if (ec != std::errc() || ptr != head.data() + head.size()) throw ArgumentError("bad scalar '" + std::string(text) + "'");
  if (pos != std::string_view::npos) {
    std::string_view tail = text.substr(pos + 5);
    long p = 0;
    auto [pp, pe] = std::from_chars(tail.data(), tail.data() + tail.size(), p);
    if (pe != std::errc() || pp != tail.data() + tail.size() || p != static_cast<long>(modulus_))
      throw ArgumentError("scalar '" + std::string(text) + "' is not in " + field_name());
  }
  return Fp(k);
}

FieldSpec parse_field(std::string_view text) {
  FieldSpec f;
  if (text == "Q") return f;
  if (text.starts_with("Fp:")) {
    auto tail = text.substr(3);
    unsigned long p = 0;
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), p);
    if (ec != std::errc() || ptr != tail.data() + tail.size() || !is_prime(p) || p >= (1ul << 31))
      throw ConfigError("bad field '" + std::string(text) + "'");
    f.rational = false;
    f.prime = static_cast<std::uint32_t>(p);
    return f;
  }
  throw ConfigError("bad field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

}  // namespace zerohecke
