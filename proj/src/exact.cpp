#include "debell/exact.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace debell {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  }
  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (negative) p = -p;
  return make_rational(p, q);
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

bool is_nonnegative_integer(const Rational& value) { return is_integer(value) && sgn(value) >= 0; }

Integer to_integer(const Rational& value) {
  if (!is_integer(value)) throw std::domain_error("expected an integer, got " + to_string(value));
  return value.get_num();
}

Integer factorial(unsigned n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0) {
    if (k > n) return 0;
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
  }
  Integer numerator = 1;
  for (long i = 0; i < k; ++i) numerator *= n - i;
  return numerator / factorial(static_cast<unsigned>(k));
}

Integer multinomial(unsigned n, std::span<const unsigned> parts) {
  const unsigned long total = std::accumulate(parts.begin(), parts.end(), 0UL);
  if (total != n) {
    throw std::invalid_argument("multinomial parts sum to " + std::to_string(total) + ", expected " +
                                std::to_string(n));
  }
  Integer result = factorial(n);
  for (unsigned p : parts) result /= factorial(p);
  return result;
}

Rational gen_falling(const Rational& t, const Rational& alpha, unsigned n) {
  Rational result = 1;
  for (unsigned k = 0; k < n; ++k) result *= t - alpha * k;
  return result;
}

Rational power(const Rational& base, unsigned exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return result;
}

}  // namespace debell
