#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace zerohecke {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT: integer literals are scalars
  Rational(long n, long d);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static constexpr int characteristic() { return 0; }
  static std::string field_name() { return "Q"; }

  bool is_zero() const { return sgn(v_) == 0; }
  Rational inverse() const;
  const mpq_class& value() const { return v_; }

  /// "p/q" (denominator always present).
  std::string str() const;
  /// Accepts "p/q" or "p".
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

 private:
  mpq_class v_;
};

/// Integers modulo a prime p. The modulus is process-wide (set it once before
/// doing any arithmetic, or use ScopedModulus); values from different moduli
/// must not be mixed.
class Fp {
 public:
  Fp() = default;
  Fp(long n);  // NOLINT: integer literals are scalars

  static void set_modulus(std::uint32_t p);
  static std::uint32_t modulus() { return modulus_; }
  static int characteristic() { return static_cast<int>(modulus_); }
  static std::string field_name() { return "Fp:" + std::to_string(modulus_); }

  bool is_zero() const { return v_ == 0; }
  Fp inverse() const;
  std::uint32_t value() const { return v_; }

  /// "k mod p".
  std::string str() const;
  /// Accepts "k mod p" (p must match the current modulus) or a plain integer.
  static Fp parse(std::string_view text);

  Fp& operator+=(const Fp& o) {
    v_ += o.v_;
    if (v_ >= modulus_) v_ -= modulus_;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + modulus_ - o.v_;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % modulus_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const { return Fp() -= *this; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }

 private:
  std::uint32_t v_ = 0;
  static inline std::uint32_t modulus_ = 101;
};

/// Sets the Fp modulus for the lifetime of the guard.
class ScopedModulus {
 public:
  explicit ScopedModulus(std::uint32_t p) : saved_(Fp::modulus()) { Fp::set_modulus(p); }
  ~ScopedModulus() { Fp::set_modulus(saved_); }
  ScopedModulus(const ScopedModulus&) = delete;
  ScopedModulus& operator=(const ScopedModulus&) = delete;

 private:
  std::uint32_t saved_;
};

bool is_prime(std::uint64_t n);

/// Parsed "--field" argument: "Q" or "Fp:<p>".
struct FieldSpec {
  bool rational = true;
  std::uint32_t prime = 101;
  std::string name() const { return rational ? "Q" : "Fp:" + std::to_string(prime); }
};
FieldSpec parse_field(std::string_view text);

}  // namespace zerohecke
