#pragma once

#include "debell/exact.hpp"

#include <vector>

namespace debell {

/// Formal power series in t truncated after t^order, with exact rational
/// coefficients. Binary operations require both operands to share the same
/// order and throw std::invalid_argument otherwise.
class TruncatedSeries {
 public:
  /// The zero series.
  explicit TruncatedSeries(unsigned order);
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries constant(const Rational& c, unsigned order);
  /// c * t^degree (the zero series when degree > order).
  static TruncatedSeries monomial(unsigned degree, const Rational& c, unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& c);

  /// Formal derivative; the result has order - 1 (order 0 stays order 0).
  TruncatedSeries derivative() const;
  TruncatedSeries truncated(unsigned order) const;

  /// Index of the first nonzero coefficient, or order + 1 for the zero series.
  unsigned valuation() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(TruncatedSeries a, const Rational& c);
TruncatedSeries operator-(TruncatedSeries a);

TruncatedSeries scale(TruncatedSeries a, const Rational& c);

/// Multiplicative inverse; the constant term must be nonzero.
TruncatedSeries inverse(const TruncatedSeries& a);

/// exp(a) for a with zero constant term, via n b_n = sum k a_k b_{n-k}.
TruncatedSeries exp(const TruncatedSeries& a);

/// log(a) for a with constant term 1, via the inverse recurrence.
TruncatedSeries log(const TruncatedSeries& a);

/// a^e by repeated squaring.
TruncatedSeries pow(const TruncatedSeries& a, unsigned long exponent);

/// a^e for rational e; requires constant term 1.
TruncatedSeries pow(const TruncatedSeries& a, const Rational& exponent);

/// (1 + alpha t)^(c / alpha), and e^{c t} when alpha = 0.
TruncatedSeries binpow(const Rational& alpha, const Rational& c, unsigned order);

/// n! [t^n] a.
Rational egf_coeff(const TruncatedSeries& a, unsigned n);

}  // namespace debell
