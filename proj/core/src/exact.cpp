#include "mv/exact.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "mv/errors.hpp"

namespace mv {

namespace {

constexpr std::string_view kPiDigits =
    "31415926535897932384626433832795028841971693993751"
    "05820974944592307816406286208998628034825342117067"
    "9";  // 3 followed by 100 decimal places

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

BigRational::BigRational(long num, long den) : value_(num, den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

BigRational BigRational::parse(std::string_view num, std::string_view den) {
  if (!is_decimal_integer(num) || !is_decimal_integer(den)) {
    throw std::invalid_argument("not a decimal integer: " + std::string(num) + "/" + std::string(den));
  }
  std::string n(num), d(den);
  if (n.front() == '+') n.erase(0, 1);
  if (d.front() == '+') d.erase(0, 1);
  mpz_class zn(n, 10), zd(d, 10);
  if (zd == 0) throw std::invalid_argument("zero denominator");
  mpq_class q(zn, zd);
  q.canonicalize();
  return BigRational(std::move(q));
}

std::string BigRational::str() const {
  if (is_integer()) return numerator_str();
  return numerator_str() + "/" + denominator_str();
}

BigRational& BigRational::operator+=(const BigRational& o) {
  value_ += o.value_;
  return *this;
}
BigRational& BigRational::operator-=(const BigRational& o) {
  value_ -= o.value_;
  return *this;
}
BigRational& BigRational::operator*=(const BigRational& o) {
  value_ *= o.value_;
  return *this;
}
BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

BigRational abs(const BigRational& x) { return x.sign() < 0 ? -x : x; }

BigRational factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return BigRational(r);
}

BigRational pow2(int e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return BigRational(p);
  return BigRational(1) / BigRational(p);
}

BigRational pow(const BigRational& base, int e) {
  if (e < 0) return BigRational(1) / pow(base, -e);
  BigRational result(1), b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------------------
// PiValue

PiValue PiValue::monomial(const BigRational& coefficient, int exponent) {
  if (exponent % 2 != 0) throw DomainError("odd power of pi: " + std::to_string(exponent));
  PiValue v;
  if (!coefficient.is_zero()) v.terms_.emplace(exponent, coefficient);
  return v;
}

std::optional<int> PiValue::exponent() const {
  if (!is_monomial()) return std::nullopt;
  return terms_.begin()->first;
}

BigRational PiValue::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigRational() : it->second;
}

const BigRational& PiValue::leading_coefficient() const {
  if (!is_monomial()) throw DomainError("value is not a single pi monomial: " + str());
  return terms_.begin()->second;
}

void PiValue::add_term(int exponent, const BigRational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

PiValue& PiValue::operator+=(const PiValue& o) {
  for (const auto& [e, q] : o.terms_) add_term(e, q);
  return *this;
}

PiValue& PiValue::operator-=(const PiValue& o) {
  for (const auto& [e, q] : o.terms_) add_term(e, -q);
  return *this;
}

PiValue& PiValue::operator*=(const PiValue& o) {
  PiValue product;
  for (const auto& [ea, qa] : terms_) {
    for (const auto& [eb, qb] : o.terms_) product.add_term(ea + eb, qa * qb);
  }
  terms_ = std::move(product.terms_);
  return *this;
}

PiValue& PiValue::operator*=(const BigRational& q) {
  if (q.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= q;
  return *this;
}

PiValue& PiValue::operator/=(const PiValue& divisor) {
  if (!divisor.is_monomial()) throw DomainError("division by a non-monomial pi value");
  const auto& [ed, qd] = *divisor.terms_.begin();
  Terms quotient;
  for (const auto& [e, q] : terms_) quotient.emplace(e - ed, q / qd);
  terms_ = std::move(quotient);
  return *this;
}

PiValue& PiValue::operator/=(const BigRational& q) {
  if (q.is_zero()) throw DomainError("division by zero");
  for (auto& [e, c] : terms_) c /= q;
  return *this;
}

PiValue operator-(PiValue a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

double PiValue::to_double() const {
  double sum = 0.0;
  for (const auto& [e, q] : terms_) sum += q.to_double() * std::pow(M_PI, e);
  return sum;
}

BigRational PiValue::approximate() const {
  BigRational sum;
  for (const auto& [e, q] : terms_) sum += q * pow(pi_rational(), e);
  return sum;
}

std::string PiValue::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, q] : terms_) {
    const BigRational mag = abs(q);
    if (first) {
      if (q.sign() < 0) out += "-";
    } else {
      out += q.sign() < 0 ? " - " : " + ";
    }
    first = false;
    out += mag.str();
    if (e != 0) out += " * pi^" + std::to_string(e);
  }
  return out;
}

std::string PiValue::to_decimal(int significant_digits) const {
  return format_significant(approximate(), significant_digits);
}

// ---------------------------------------------------------------------------
// Bernoulli numbers and zeta values

BigRational bernoulli(int n) {
  if (n < 0) throw DomainError("bernoulli index must be nonnegative");
  static std::shared_mutex mutex;
  static std::vector<BigRational> table{BigRational(1)};
  {
    std::shared_lock lock(mutex);
    if (static_cast<std::size_t>(n) < table.size()) return table[n];
  }
  std::unique_lock lock(mutex);
  // sum_{k=0}^{m} C(m+1, k) B_k = 0
  while (table.size() <= static_cast<std::size_t>(n)) {
    const auto m = static_cast<unsigned long>(table.size());
    BigRational sum;
    mpz_class binom(1);  // C(m+1, 0)
    for (unsigned long k = 0; k < m; ++k) {
      sum += BigRational(binom) * table[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    table.push_back(-sum / BigRational(static_cast<long>(m + 1)));
  }
  return table[n];
}

PiValue zeta_even(int k) {
  if (k < 2 || k % 2 != 0) throw DomainError("zeta_even requires an even k >= 2, got " + std::to_string(k));
  const BigRational sign((k / 2 + 1) % 2 == 0 ? 1 : -1);
  return PiValue::monomial(sign * bernoulli(k) * pow2(k - 1) / factorial(k), k);
}

const BigRational& frak_z_coefficient(int k) {
  static const BigRational zero;
  if (k < 0 || k % 2 != 0) return zero;
  static std::shared_mutex mutex;
  static std::map<int, BigRational> table;
  {
    std::shared_lock lock(mutex);
    if (auto it = table.find(k); it != table.end()) return it->second;
  }
  BigRational q = k == 0 ? BigRational(1) : (BigRational(2) - pow2(2 - k)) * zeta_even(k).leading_coefficient();
  std::unique_lock lock(mutex);
  return table.try_emplace(k, std::move(q)).first->second;
}

PiValue frak_z(int k) {
  const BigRational& q = frak_z_coefficient(k);
  if (q.is_zero()) return {};
  return PiValue::monomial(q, k);
}

const BigRational& pi_rational() {
  static const BigRational pi = [] {
    mpz_class digits{std::string(kPiDigits), 10};
    return BigRational(mpq_class(digits, pow10(kPiDigits.size() - 1)));
  }();
  return pi;
}

// ---------------------------------------------------------------------------
// Decimal rendering

std::string format_significant(const BigRational& x, int significant_digits) {
  if (significant_digits < 1) throw DomainError("need at least one significant digit");
  if (x.is_zero()) return "0";

  const bool negative = x.sign() < 0;
  mpq_class mag = abs(x).raw();

  // Decimal exponent E with 10^E <= mag < 10^(E+1).
  long exp10 = static_cast<long>(std::floor(std::log10(mag.get_d())));
  auto scaled_pow = [](long e) {
    return e >= 0 ? mpq_class(pow10(e)) : mpq_class(mpz_class(1), pow10(-e));
  };
  while (mag < scaled_pow(exp10)) --exp10;
  while (mag >= scaled_pow(exp10 + 1)) ++exp10;

  // Integer holding the leading significant digits, rounded half away from zero.
  const long shift = significant_digits - 1 - exp10;
  mpq_class shifted = mag * scaled_pow(shift);
  mpz_class digits = shifted.get_num() / shifted.get_den();
  mpq_class remainder = shifted - mpq_class(digits);
  if (remainder * 2 >= 1) digits += 1;
  if (digits == pow10(significant_digits)) {
    digits /= 10;
    ++exp10;
  }

  const std::string d = digits.get_str();
  std::string out = negative ? "-" : "";
  if (exp10 < -6 || exp10 >= 21) {
    out += d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    out += (exp10 < 0 ? "e-" : "e+") + std::to_string(exp10 < 0 ? -exp10 : exp10);
    return out;
  }
  if (exp10 < 0) {
    out += "0." + std::string(static_cast<std::size_t>(-exp10 - 1), '0') + d;
    return out;
  }
  const auto int_len = static_cast<std::size_t>(exp10 + 1);
  if (d.size() <= int_len) return out + d + std::string(int_len - d.size(), '0');
  return out + d.substr(0, int_len) + "." + d.substr(int_len);
}

}  // namespace mv
