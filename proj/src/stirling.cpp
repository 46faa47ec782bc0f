#include "debell/stirling.hpp"

#include <stdexcept>
#include <string>

namespace debell {

StirlingTable::StirlingTable(StirlingParams params, unsigned n_max) : params_(std::move(params)) {
  rows_.reserve(n_max + 1);
  rows_.push_back({Rational(1)});
  for (unsigned n = 0; n < n_max; ++n) {
    const auto& prev = rows_.back();
    std::vector<Rational> next(n + 2);
    for (unsigned k = 0; k <= n + 1; ++k) {
      Rational value = 0;
      if (k >= 1) value += prev[k - 1];
      if (k <= n) value += (params_.beta * k - params_.alpha * n + params_.gamma) * prev[k];
      next[k] = value;
    }
    rows_.push_back(std::move(next));
  }
}

Rational StirlingTable::operator()(long n, long k) const {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n > static_cast<long>(n_max())) {
    throw std::out_of_range("Stirling table holds rows up to " + std::to_string(n_max()) + ", asked for " +
                            std::to_string(n));
  }
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Rational stirling_rec(long n, long k, const StirlingParams& params) {
  if (n < 0 || k < 0 || k > n) return 0;
  return StirlingTable(params, static_cast<unsigned>(n))(n, k);
}

TruncatedSeries block_series(const Rational& alpha, const Rational& beta, unsigned order) {
  TruncatedSeries u = binpow(alpha, beta, order);
  u[0] -= 1;
  return u;
}

Rational stirling_egf(unsigned n, unsigned k, const StirlingParams& params, unsigned order) {
  if (params.beta == 0) throw std::domain_error("generating-function route for S(n,k) needs beta != 0");
  if (order < n) throw std::invalid_argument("series order below requested index");
  const TruncatedSeries u = block_series(params.alpha, params.beta, order);
  const TruncatedSeries series = pow(u, static_cast<unsigned long>(k)) * binpow(params.alpha, params.gamma, order);
  return egf_coeff(series, n) / (power(params.beta, k) * factorial(k));
}

std::vector<Rational> colored_block_egf(unsigned k, unsigned r, const ParamSet& params, unsigned order) {
  const unsigned blocks = k + r;
  TruncatedSeries xu = block_series(params.alpha, params.beta, order) * params.x;
  TruncatedSeries series = pow(xu, static_cast<unsigned long>(blocks)) * binpow(params.alpha, params.gamma, order);
  series *= Rational(1, 1) / Rational(factorial(blocks));
  std::vector<Rational> out(order + 1);
  for (unsigned n = 0; n <= order; ++n) out[n] = egf_coeff(series, n);
  return out;
}

}  // namespace debell
