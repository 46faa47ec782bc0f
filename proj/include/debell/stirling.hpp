#pragma once

// Hsu-Shiue generalized Stirling numbers S(n, k, alpha, beta, gamma): the
// connection coefficients in
//   (t|alpha)_n = sum_k S(n, k, alpha, beta, gamma) (t - gamma|beta)_k.

#include "debell/exact.hpp"
#include "debell/params.hpp"
#include "debell/series.hpp"

#include <vector>

namespace debell {

struct StirlingParams {
  Rational alpha;
  Rational beta;
  Rational gamma;

  friend bool operator==(const StirlingParams&, const StirlingParams&) = default;
};

inline StirlingParams stirling_params(const ParamSet& p) { return {p.alpha, p.beta, p.gamma}; }

/// Rows 0..n_max of the triangle for one (alpha, beta, gamma), filled by
///   S(n+1, k) = S(n, k-1) + (k beta - n alpha + gamma) S(n, k).
/// Immutable once built.
class StirlingTable {
 public:
  StirlingTable(StirlingParams params, unsigned n_max);

  const StirlingParams& params() const { return params_; }
  unsigned n_max() const { return static_cast<unsigned>(rows_.size() - 1); }

  /// Zero outside 0 <= k <= n; throws std::out_of_range for n > n_max.
  Rational operator()(long n, long k) const;

  const std::vector<Rational>& row(unsigned n) const { return rows_.at(n); }

 private:
  StirlingParams params_;
  std::vector<std::vector<Rational>> rows_;
};

/// Triangular-recurrence route.
Rational stirling_rec(long n, long k, const StirlingParams& params);

/// Generating-function route:
///   S(n, k) = n! [t^n] ((1+alpha t)^{beta/alpha} - 1)^k (1+alpha t)^{gamma/alpha} / (beta^k k!).
/// Throws std::domain_error when beta = 0 (the beta^k division is undefined).
Rational stirling_egf(unsigned n, unsigned k, const StirlingParams& params, unsigned order);

/// Entries n = 0..order of the EGF [x u]^{k+r} (1+alpha t)^{gamma/alpha} / (k+r)!,
/// u = (1+alpha t)^{beta/alpha} - 1; entry n equals x^{k+r} beta^{k+r} S(n, k+r).
std::vector<Rational> colored_block_egf(unsigned k, unsigned r, const ParamSet& params, unsigned order);

/// u = (1 + alpha t)^{beta/alpha} - 1 (e^{beta t} - 1 when alpha = 0).
TruncatedSeries block_series(const Rational& alpha, const Rational& beta, unsigned order);

}  // namespace debell
