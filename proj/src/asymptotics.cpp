#include "debell/asymptotics.hpp"

#include "debell/bell.hpp"
#include "debell/series.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace debell {

unsigned IntPartition::total() const {
  unsigned sum = 0;
  for (std::size_t i = 0; i < multiplicity.size(); ++i) sum += static_cast<unsigned>(i + 1) * multiplicity[i];
  return sum;
}

unsigned IntPartition::parts() const { return std::accumulate(multiplicity.begin(), multiplicity.end(), 0u); }

std::vector<IntPartition> partitions_with_parts(unsigned n, unsigned k) {
  std::vector<IntPartition> out;
  if (k > n || (k == 0 && n > 0)) return out;
  std::vector<unsigned> mult(n, 0);
  // choose parts in nonincreasing order: largest allowed part first
  std::function<void(unsigned, unsigned, unsigned)> place = [&](unsigned remaining, unsigned slots, unsigned max_part) {
    if (slots == 0) {
      if (remaining == 0) out.push_back({mult});
      return;
    }
    // each of the remaining slots needs at least 1
    for (unsigned part = std::min(max_part, remaining - (slots - 1)); part >= 1; --part) {
      if (part * slots < remaining) break;
      ++mult[part - 1];
      place(remaining - part, slots - 1, part);
      --mult[part - 1];
    }
  };
  if (n == 0) {
    out.push_back({mult});
    return out;
  }
  place(n, k, n);
  return out;
}

Rational w_generic(const std::vector<Rational>& b, unsigned n, unsigned f) {
  if (f >= n) throw std::invalid_argument("W(n,f) needs f <= n-1");
  Rational sum = 0;
  for (const IntPartition& p : partitions_with_parts(n, n - f)) {
    Rational term = 1;
    for (std::size_t i = 0; i < p.multiplicity.size() && term != 0; ++i) {
      const unsigned k = p.multiplicity[i];
      if (k == 0) continue;
      const Rational bi = i + 1 < b.size() ? b[i + 1] : Rational(0);
      term *= power(bi, k) / Rational(factorial(k));
    }
    sum += term;
  }
  return sum;
}

namespace {

std::vector<Rational> bell_base(unsigned n_max, const ParamSet& params) {
  std::vector<Rational> b = bell_egf(n_max, params.with_lambda(1));
  for (unsigned i = 0; i <= n_max; ++i) b[i] /= factorial(i);
  return b;
}

struct Factor {
  unsigned index;
  long exponent;
};

// prod b_index^exponent / (multiplicity! * outer!), where outer is the
// exponent of b_1; zero when outer is negative.
Rational term(const std::vector<Rational>& b, long outer_factorial, unsigned multiplicity,
              std::initializer_list<Factor> factors) {
  if (outer_factorial < 0) return 0;
  Rational value = 1 / Rational(factorial(multiplicity) * factorial(static_cast<unsigned>(outer_factorial)));
  for (const Factor& fac : factors) {
    if (fac.exponent < 0) return 0;
    value *= power(b[fac.index], static_cast<unsigned>(fac.exponent));
  }
  return value;
}

}  // namespace

Rational w_coefficient(unsigned n, unsigned f, const ParamSet& params) {
  return w_generic(bell_base(n, params), n, f);
}

Rational w_explicit(unsigned n, unsigned f, const ParamSet& params) {
  if (f > 5) throw std::invalid_argument("explicit W(n,f) is only available for f <= 5");
  const std::vector<Rational> b = bell_base(std::max(n, 6u), params);
  const long m = n;
  switch (f) {
    case 0:
      return term(b, m, 1, {{1, m}});
    case 1:
      return term(b, m - 2, 1, {{1, m - 2}, {2, 1}});
    case 2:
      return term(b, m - 3, 1, {{1, m - 3}, {3, 1}}) + term(b, m - 4, 2, {{1, m - 4}, {2, 2}});
    case 3:
      return term(b, m - 4, 1, {{1, m - 4}, {4, 1}}) + term(b, m - 5, 1, {{1, m - 5}, {2, 1}, {3, 1}}) +
             term(b, m - 6, 3, {{1, m - 6}, {2, 3}});
    case 4:
      // third term carries B_{1,1}/3! where the partition sum has B_{3,1}/3!;
      // the fifth term carries an extra 1/2!
      return term(b, m - 5, 1, {{1, m - 5}, {5, 1}}) + term(b, m - 6, 2, {{1, m - 6}, {3, 2}}) +
             term(b, m - 7, 2, {{1, m - 7}, {2, 2}}) * b[1] / 6 + term(b, m - 8, 4, {{1, m - 8}, {2, 4}}) +
             term(b, m - 6, 2, {{1, m - 6}, {2, 1}, {4, 1}});
    case 5:
      // fourth term lacks the B_{4,1}/4! factor of partition 1^{n-8} 2^2 4
      return term(b, m - 6, 1, {{1, m - 6}, {6, 1}}) + term(b, m - 7, 1, {{1, m - 7}, {2, 1}, {5, 1}}) +
             term(b, m - 7, 1, {{1, m - 7}, {4, 1}, {3, 1}}) + term(b, m - 8, 2, {{1, m - 8}, {2, 2}}) +
             term(b, m - 8, 2, {{1, m - 8}, {2, 1}, {3, 2}}) + term(b, m - 9, 3, {{1, m - 9}, {2, 3}, {3, 1}}) +
             term(b, m - 10, 5, {{1, m - 10}, {2, 5}});
  }
  return 0;
}

Rational hsu_expansion(const BaseSequence& base, const Rational& delta, unsigned n, unsigned m) {
  if (base.b.empty() || base.b[0] != 1) throw std::domain_error("expansion needs b_0 = 1");
  if (n == 0) return 1;
  if (m >= n) throw std::invalid_argument("expansion order m must be at most n-1");
  Rational sum = 0;
  for (unsigned f = 0; f <= m; ++f) {
    const Rational denom = falling(delta - n + f, f);
    if (denom == 0) throw std::domain_error("(delta - n + f)_f vanishes");
    sum += w_generic(base.b, n, f) / denom;
  }
  return sum;
}

Rational hsu_target(const BaseSequence& base, const Rational& delta, unsigned n) {
  if (base.b.empty() || base.b[0] != 1) throw std::domain_error("expansion needs b_0 = 1");
  std::vector<Rational> coeffs(n + 1);
  for (unsigned i = 0; i <= n && i < base.b.size(); ++i) coeffs[i] = base.b[i];
  const TruncatedSeries powered = pow(TruncatedSeries(coeffs), delta);
  const Rational denom = falling(delta, n);
  if (denom == 0) throw std::domain_error("(delta)_n vanishes");
  return powered[n] / denom;
}

AsymptoticEstimate bell_asymptotic_estimate(unsigned n, unsigned m, unsigned delta, const ParamSet& params) {
  if (delta == 0) throw std::invalid_argument("delta must be a positive integer");
  if (n > 0 && m >= n) throw std::invalid_argument("expansion order m must be at most n-1");
  AsymptoticEstimate out;
  const std::vector<Rational> b = bell_base(n, params);
  if (n == 0) {
    out.estimate = 1;
  } else {
    for (unsigned f = 0; f <= m; ++f) out.estimate += falling(Rational(delta), n - f) * w_generic(b, n, f);
  }
  ParamSet scaled = params.with_gamma(params.gamma * delta);
  scaled.lambda = delta;
  out.exact = bell_egf(n, scaled)[n] / factorial(n);
  if (out.exact == 0) {
    out.status = EstimateStatus::ExactZero;
    out.rel_error = 0;
  } else {
    out.rel_error = abs(Rational(out.estimate / out.exact - 1));
  }
  return out;
}

}  // namespace debell
