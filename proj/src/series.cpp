#include "debell/series.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace debell {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(unsigned order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, unsigned order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(unsigned degree, const Rational& c, unsigned order) {
  TruncatedSeries s(order);
  if (degree <= order) s.coeffs_[degree] = c;
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& other) {
  *this = *this * other;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order() == 0) return TruncatedSeries(0u);
  TruncatedSeries d(order() - 1);
  for (unsigned i = 1; i <= order(); ++i) d.coeffs_[i - 1] = coeffs_[i] * i;
  return d;
}

TruncatedSeries TruncatedSeries::truncated(unsigned new_order) const {
  TruncatedSeries t(new_order);
  for (unsigned i = 0; i <= new_order && i <= order(); ++i) t.coeffs_[i] = coeffs_[i];
  return t;
}

unsigned TruncatedSeries::valuation() const {
  for (unsigned i = 0; i <= order(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return order() + 1;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }

TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const unsigned n = a.order();
  TruncatedSeries c(n);
  const unsigned va = a.valuation();
  const unsigned vb = b.valuation();
  for (unsigned i = va; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = vb; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }

TruncatedSeries operator-(TruncatedSeries a) { return a *= Rational(-1); }

TruncatedSeries scale(TruncatedSeries a, const Rational& c) { return a *= c; }

TruncatedSeries inverse(const TruncatedSeries& a) {
  if (a[0] == 0) throw std::domain_error("series inverse needs a nonzero constant term");
  const unsigned n = a.order();
  TruncatedSeries b(n);
  const Rational inv0 = 1 / a[0];
  b[0] = inv0;
  for (unsigned m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (unsigned k = 1; k <= m; ++k) acc += a[k] * b[m - k];
    b[m] = -acc * inv0;
  }
  return b;
}

TruncatedSeries exp(const TruncatedSeries& a) {
  if (a[0] != 0) throw std::domain_error("series exp needs a zero constant term");
  const unsigned n = a.order();
  TruncatedSeries b(n);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (unsigned k = 1; k <= m; ++k) acc += a[k] * b[m - k] * k;
    b[m] = acc / m;
  }
  return b;
}

TruncatedSeries log(const TruncatedSeries& a) {
  if (a[0] != 1) throw std::domain_error("series log needs constant term 1");
  const unsigned n = a.order();
  TruncatedSeries b(n);
  for (unsigned m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (unsigned k = 1; k < m; ++k) acc += b[k] * a[m - k] * k;
    b[m] = a[m] - acc / m;
  }
  return b;
}

TruncatedSeries pow(const TruncatedSeries& a, unsigned long exponent) {
  TruncatedSeries result = TruncatedSeries::constant(1, a.order());
  TruncatedSeries base = a;
  // a with positive valuation vanishes once exponent * valuation > order.
  const unsigned v = a.valuation();
  if (v > 0 && exponent > 0 && (v > a.order() || exponent > a.order() / v)) return TruncatedSeries(a.order());
  while (exponent > 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

TruncatedSeries pow(const TruncatedSeries& a, const Rational& exponent) {
  return exp(log(a) * exponent);
}

TruncatedSeries binpow(const Rational& alpha, const Rational& c, unsigned order) {
  if (alpha == 0) {
    return exp(TruncatedSeries::monomial(1, c, order));
  }
  TruncatedSeries one_plus = TruncatedSeries::constant(1, order);
  if (order >= 1) one_plus[1] = alpha;
  return exp(log(one_plus) * Rational(c / alpha));
}

Rational egf_coeff(const TruncatedSeries& a, unsigned n) {
  if (n > a.order()) {
    throw std::out_of_range("egf coefficient " + std::to_string(n) + " beyond series order " +
                            std::to_string(a.order()));
  }
  return a[n] * factorial(n);
}

}  // namespace debell
