#include "debell/bell.hpp"

#include "debell/derangements.hpp"
#include "debell/stirling.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace debell {

std::string_view to_string(BellRoute route) {
  switch (route) {
    case BellRoute::Egf: return "egf";
    case BellRoute::Lambda1Closed: return "lambda1";
    case BellRoute::GeneralClosed: return "closed";
    case BellRoute::Convolution: return "convolution";
    case BellRoute::ClassicSpecialization: return "classic";
  }
  return "unknown";
}

BellRoute parse_bell_route(std::string_view name) {
  for (BellRoute r : {BellRoute::Egf, BellRoute::Lambda1Closed, BellRoute::GeneralClosed, BellRoute::Convolution,
                      BellRoute::ClassicSpecialization}) {
    if (to_string(r) == name) return r;
  }
  throw std::invalid_argument("unknown bell route '" + std::string(name) + "'");
}

namespace {

TruncatedSeries scaled_block(const ParamSet& p, unsigned order) {
  return block_series(p.alpha, p.beta, order) * p.x;
}

TruncatedSeries one_minus(const TruncatedSeries& s) {
  return TruncatedSeries::constant(1, s.order()) - s;
}

// (xu)^r exp(-xu) / (1 - xu)^{r+1}: the lambda = 1 factor without the gamma part.
TruncatedSeries deranged_factor(const TruncatedSeries& xu, unsigned r) {
  return pow(xu, static_cast<unsigned long>(r)) * exp(-xu) *
         pow(inverse(one_minus(xu)), static_cast<unsigned long>(r) + 1);
}

std::vector<Rational> extract(const TruncatedSeries& s, unsigned n_max) {
  std::vector<Rational> out(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) out[n] = egf_coeff(s, n);
  return out;
}

// Sum over compositions of `total` into sections.size() + 1 parts of
// multinomial(total; parts) * tail[last part] * prod section[part].
Rational composition_sum(unsigned total, unsigned sections, const std::vector<Rational>& section_values,
                         const std::vector<Rational>& tail_values) {
  std::vector<unsigned> parts(sections + 1);
  Rational sum = 0;
  std::function<void(unsigned, unsigned)> visit = [&](unsigned slot, unsigned remaining) {
    if (slot == sections) {
      parts[slot] = remaining;
      Rational term = tail_values[remaining];
      for (unsigned s = 0; s < sections && term != 0; ++s) term *= section_values[parts[s]];
      if (term != 0) sum += term * multinomial(total, parts);
      return;
    }
    for (unsigned i = 0; i <= remaining; ++i) {
      parts[slot] = i;
      visit(slot + 1, remaining - i);
    }
  };
  visit(0, total);
  return sum;
}

Rational convolution(unsigned total, const ParamSet& params) {
  ParamSet section = params;
  section.lambda = 1;
  section.gamma = 0;
  const std::vector<Rational> section_values = bell_egf(total, section);
  std::vector<Rational> tail_values(total + 1);
  for (unsigned j = 0; j <= total; ++j) tail_values[j] = gen_falling(params.gamma, params.alpha, j);
  return composition_sum(total, params.lambda, section_values, tail_values);
}

}  // namespace

TruncatedSeries bell_series(const ParamSet& params, unsigned order) {
  const TruncatedSeries base = binpow(params.alpha, params.gamma, order);
  if (params.lambda == 0) return base;
  const TruncatedSeries xu = scaled_block(params, order);
  const unsigned long lambda = params.lambda;
  const TruncatedSeries prefix = pow(xu, static_cast<unsigned long>(params.r) * lambda);
  const TruncatedSeries decay = exp(xu * Rational(-static_cast<long>(params.lambda)));
  const TruncatedSeries denominator = pow(inverse(one_minus(xu)), (static_cast<unsigned long>(params.r) + 1) * lambda);
  return base * prefix * decay * denominator;
}

std::vector<Rational> bell_egf(unsigned n_max, const ParamSet& params) {
  return extract(bell_series(params, n_max + 1), n_max);
}

Rational bell_lambda1(unsigned n, const ParamSet& params) {
  if (params.lambda != 1) throw std::invalid_argument("bell_lambda1 requires lambda = 1");
  const StirlingTable table(stirling_params(params), n);
  const std::vector<Integer> d = r_derangement_row(params.r, n);
  Rational sum = 0;
  for (unsigned k = 0; k <= n; ++k) sum += Rational(d[k]) * power(params.x * params.beta, k) * table(n, k);
  return sum;
}

Rational bell_general_closed(unsigned n, const ParamSet& params) {
  const StirlingTable table(stirling_params(params), n);
  const std::vector<Integer> d = r_derangement_row(params.r, n);
  const long shift = static_cast<long>(params.r) + static_cast<long>(params.lambda) - 1;
  Rational sum = 0;
  for (unsigned k = 0; k <= n; ++k) {
    const Integer bars = binomial(static_cast<long>(k) + shift, static_cast<long>(k + params.r));
    if (bars == 0 || d[k] == 0) continue;
    sum += Rational(bars * d[k]) * power(params.x * params.beta, k) * table(n, k);
  }
  return sum;
}

Rational bell_convolution(unsigned n, const ParamSet& params) { return convolution(n, params); }

Rational bell_convolution_shifted(unsigned n, const ParamSet& params) { return convolution(n + params.r, params); }

Integer r_stirling(unsigned n, unsigned k, unsigned r) {
  if (n < r || k < r || k > n) return 0;
  // rows indexed by m = n - r, columns by j = k - r
  const unsigned rows = n - r;
  std::vector<std::vector<Integer>> t(rows + 1, std::vector<Integer>(rows + 1));
  t[0][0] = 1;
  for (unsigned m = 1; m <= rows; ++m) {
    for (unsigned j = 0; j <= m; ++j) {
      Integer v = t[m - 1][j] * (j + r);
      if (j > 0) v += t[m - 1][j - 1];
      t[m][j] = v;
    }
  }
  return t[rows][k - r];
}

Integer deranged_bell_classic(unsigned n, unsigned r) {
  const std::vector<Integer> d = r_derangement_row(r, n);
  Integer sum = 0;
  for (unsigned i = 0; i <= n; ++i) sum += d[i] * r_stirling(n + r, i + r, r);
  return sum;
}

BellValue compute_bell(unsigned n, const ParamSet& params, BellRoute route) {
  BellValue out{n, params, 0, route};
  switch (route) {
    case BellRoute::Egf: out.value = bell_egf(n, params)[n]; break;
    case BellRoute::Lambda1Closed: out.value = bell_lambda1(n, params); break;
    case BellRoute::GeneralClosed: out.value = bell_general_closed(n, params); break;
    case BellRoute::Convolution: out.value = bell_convolution(n, params); break;
    case BellRoute::ClassicSpecialization: {
      const ParamSet classic{0, 1, params.r, 1, 1, params.r};
      if (!(params == classic)) {
        throw std::invalid_argument("classic route only applies at alpha=0, beta=1, gamma=r, x=1, lambda=1");
      }
      out.value = deranged_bell_classic(n, params.r);
      break;
    }
  }
  return out;
}

Rational omega(unsigned n, const ParamSet& params) {
  const StirlingTable table(stirling_params(params), n);
  Rational sum = 0;
  for (unsigned k = 0; k <= n; ++k) {
    const Integer weight = binomial(static_cast<long>(k) + static_cast<long>(params.lambda) - 1, k);
    if (weight == 0) continue;
    sum += Rational(weight * factorial(k)) * power(params.x * params.beta, k) * table(n, k);
  }
  return sum;
}

std::vector<Rational> omega_egf(unsigned n_max, const ParamSet& params) {
  const unsigned order = n_max + 1;
  const TruncatedSeries xu = scaled_block(params, order);
  const TruncatedSeries series =
      binpow(params.alpha, params.gamma, order) * pow(inverse(one_minus(xu)), static_cast<unsigned long>(params.lambda));
  return extract(series, n_max);
}

IdentitySides omega_identity_check(unsigned n, const ParamSet& params) {
  const unsigned m = n + params.r;
  IdentitySides out{omega(m, params), 0};
  const std::vector<Rational> b = bell_egf(m, params);
  const StirlingTable fixed(StirlingParams{params.alpha, params.beta, 0}, m);
  const Rational weight = params.beta * params.x * params.lambda;
  for (unsigned i = 0; i <= m; ++i) {
    if (b[i] == 0) continue;
    Rational inner = 0;
    for (unsigned l = 0; l <= m - i; ++l) inner += power(weight, l) * fixed(m - i, l);
    out.rhs += Rational(binomial(m, i)) * b[i] * inner;
  }
  return out;
}

std::vector<ProductFormRow> product_form_check(unsigned n_max, const ParamSet& params) {
  const unsigned order = n_max + 1;
  const TruncatedSeries base = binpow(params.alpha, params.gamma, order);
  const TruncatedSeries xu = scaled_block(params, order);
  const TruncatedSeries inv = inverse(one_minus(xu));

  TruncatedSeries literal = base;
  for (unsigned i = 1; i <= params.lambda; ++i) {
    const unsigned long ri = static_cast<unsigned long>(params.r) * i;
    literal *= pow(xu, ri) * exp(xu * Rational(-static_cast<long>(i))) *
               pow(inv, (static_cast<unsigned long>(params.r) + 1) * i);
  }

  const TruncatedSeries factor = deranged_factor(xu, params.r);
  TruncatedSeries repeated = base;
  for (unsigned i = 0; i < params.lambda; ++i) repeated *= factor;

  const std::vector<Rational> reference = bell_egf(n_max, params);
  std::vector<ProductFormRow> rows;
  rows.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    rows.push_back({n, reference[n], egf_coeff(literal, n), egf_coeff(repeated, n)});
  }
  return rows;
}

}  // namespace debell
