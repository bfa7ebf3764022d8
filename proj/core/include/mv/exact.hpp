#pragma once

// Exact rational arithmetic and numbers graded by even powers of pi.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace mv {

class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(long num, long den);
  explicit BigRational(mpq_class value);
  explicit BigRational(const mpz_class& integer) : value_(integer) {}

  // Parses decimal integer strings; throws std::invalid_argument on bad input
  // or a zero denominator. The result is canonicalized.
  static BigRational parse(std::string_view num, std::string_view den = "1");

  std::string numerator_str() const { return value_.get_num().get_str(); }
  std::string denominator_str() const { return value_.get_den().get_str(); }
  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }

  // "num/den", or "num" when the denominator is 1.
  std::string str() const;

  const mpq_class& raw() const { return value_; }

  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.value_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

BigRational abs(const BigRational& x);
BigRational factorial(int n);
// 2^e for any integer e.
BigRational pow2(int e);
BigRational pow(const BigRational& base, int e);

// Finite sum of q_e * pi^e over even exponents e (negative allowed). Zero
// coefficients are never stored; the empty map is zero.
class PiValue {
 public:
  using Terms = std::map<int, BigRational>;

  PiValue() = default;
  static PiValue monomial(const BigRational& coefficient, int exponent);
  static PiValue rational(const BigRational& q) { return monomial(q, 0); }
  static PiValue one() { return rational(BigRational(1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  // Exponent of a monomial; nullopt for zero or multi-term values.
  std::optional<int> exponent() const;
  // Coefficient at the given exponent (zero when absent).
  BigRational coefficient(int exponent) const;
  // Coefficient of a monomial; throws DomainError otherwise.
  const BigRational& leading_coefficient() const;

  PiValue& operator+=(const PiValue& o);
  PiValue& operator-=(const PiValue& o);
  PiValue& operator*=(const PiValue& o);
  PiValue& operator*=(const BigRational& q);
  // Division by a nonzero monomial only.
  PiValue& operator/=(const PiValue& divisor);
  PiValue& operator/=(const BigRational& q);

  friend PiValue operator+(PiValue a, const PiValue& b) { return a += b; }
  friend PiValue operator-(PiValue a, const PiValue& b) { return a -= b; }
  friend PiValue operator*(PiValue a, const PiValue& b) { return a *= b; }
  friend PiValue operator*(PiValue a, const BigRational& q) { return a *= q; }
  friend PiValue operator*(const BigRational& q, PiValue a) { return a *= q; }
  friend PiValue operator/(PiValue a, const PiValue& b) { return a /= b; }
  friend PiValue operator/(PiValue a, const BigRational& q) { return a /= q; }
  friend PiValue operator-(PiValue a);

  friend bool operator==(const PiValue& a, const PiValue& b) = default;

  double to_double() const;
  // Rational approximation using the embedded 100-digit value of pi.
  BigRational approximate() const;

  // Canonical text: "num/den * pi^e", terms by increasing exponent.
  std::string str() const;
  // Decimal with the given number of significant digits (1..90).
  std::string to_decimal(int significant_digits) const;

 private:
  void add_term(int exponent, const BigRational& coefficient);
  Terms terms_;
};

// Bernoulli number B_n with B_1 = -1/2. Memoized; safe to call concurrently.
BigRational bernoulli(int n);

// zeta(k) for even k >= 2 as an exact monomial q * pi^k.
PiValue zeta_even(int k);

// (2 - 2^(2-k)) zeta(k) for even k >= 0, else 0. zeta(0) = -1/2 gives frak_z(0) = 1.
PiValue frak_z(int k);
// Rational coefficient of frak_z(k) at pi^k (0 when frak_z vanishes).
const BigRational& frak_z_coefficient(int k);

// 100 decimal places of pi as an exact rational.
const BigRational& pi_rational();

// Round-half-away-from-zero rendering with a fixed count of significant digits.
std::string format_significant(const BigRational& x, int significant_digits);

}  // namespace mv
