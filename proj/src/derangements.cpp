#include "debell/derangements.hpp"

#include "debell/series.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace debell {

Integer derangement(unsigned n) {
  Rational sum = 0;
  Rational term = 1;
  for (unsigned i = 0; i <= n; ++i) {
    if (i > 0) term /= -static_cast<long>(i);
    sum += term;
  }
  return to_integer(sum * factorial(n));
}

namespace {

TruncatedSeries r_derangement_series(unsigned r, unsigned order) {
  const TruncatedSeries shift = TruncatedSeries::monomial(r, 1, order);
  const TruncatedSeries decay = exp(TruncatedSeries::monomial(1, -1, order));
  TruncatedSeries one_minus_t = TruncatedSeries::constant(1, order);
  if (order >= 1) one_minus_t[1] = -1;
  return shift * decay * pow(inverse(one_minus_t), static_cast<unsigned long>(r) + 1);
}

}  // namespace

Integer r_derangement_egf(unsigned k, unsigned r, unsigned order) {
  if (order < k) throw std::invalid_argument("series order below requested index");
  return to_integer(egf_coeff(r_derangement_series(r, order), k));
}

std::vector<Integer> r_derangement_row(unsigned r, unsigned k_max) {
  const TruncatedSeries series = r_derangement_series(r, k_max);
  std::vector<Integer> row;
  row.reserve(k_max + 1);
  for (unsigned k = 0; k <= k_max; ++k) row.push_back(to_integer(egf_coeff(series, k)));
  return row;
}

namespace {

class RecurrenceMemo {
 public:
  explicit RecurrenceMemo(unsigned pivot) : pivot_(pivot) {}

  Integer value(unsigned k, unsigned r) {
    if (r == 0) return derangement(k);
    const auto key = std::make_pair(k, r);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const unsigned s = std::min(pivot_, r);
    Integer total = 0;
    for (unsigned j = s; j <= k; ++j) {
      total += binomial(static_cast<long>(j) - 1, static_cast<long>(s) - 1) * (factorial(k) / factorial(k - j)) *
               value(k - j, r - s);
    }
    memo_.emplace(key, total);
    return total;
  }

 private:
  unsigned pivot_;
  std::map<std::pair<unsigned, unsigned>, Integer> memo_;
};

}  // namespace

Integer r_derangement_rec(unsigned k, unsigned r, unsigned s) {
  if (r == 0) return derangement(k);
  if (s < 1 || s > r) {
    throw std::invalid_argument("recurrence pivot s=" + std::to_string(s) + " outside 1.." + std::to_string(r));
  }
  return RecurrenceMemo(s).value(k, r);
}

Integer r_derangement_rec(unsigned k, unsigned r) { return r_derangement_rec(k, r, r); }

}  // namespace debell
