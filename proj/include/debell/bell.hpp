#pragma once

// Higher-order r-deranged Bell numbers B^{r,x}_{n,lambda}(alpha, beta, gamma),
// the classical r-deranged Bell numbers, and the omega polynomials.
//
// The generating function
//   (1+alpha t)^{gamma/alpha} [x u]^{r lambda} exp(-lambda x u) / (1 - x u)^{(r+1) lambda},
//   u = (1+alpha t)^{beta/alpha} - 1,
// is the definition of B; every other route here is compared against it.

#include "debell/exact.hpp"
#include "debell/params.hpp"
#include "debell/series.hpp"

#include <string_view>
#include <vector>

namespace debell {

enum class BellRoute { Egf, Lambda1Closed, GeneralClosed, Convolution, ClassicSpecialization };

std::string_view to_string(BellRoute route);
BellRoute parse_bell_route(std::string_view name);

struct BellValue {
  unsigned n = 0;
  ParamSet params;
  Rational value;
  BellRoute route = BellRoute::Egf;
};

/// The defining EGF truncated at `order`.
TruncatedSeries bell_series(const ParamSet& params, unsigned order);

/// B_0 .. B_{n_max} by coefficient extraction (series order n_max + 1).
std::vector<Rational> bell_egf(unsigned n_max, const ParamSet& params);

/// sum_k d_{k,r} x^k beta^k S(n, k). Requires params.lambda == 1.
Rational bell_lambda1(unsigned n, const ParamSet& params);

/// sum_k C(k+r+lambda-1, k+r) d_{k,r} x^k beta^k S(n, k).
/// Coincides with bell_egf at lambda = 1; elsewhere it is a claim to be checked.
Rational bell_general_closed(unsigned n, const ParamSet& params);

/// Section convolution over compositions i_1 + ... + i_{lambda+1} = n:
///   sum multinomial(n; i) (gamma|alpha)_{i_{lambda+1}} prod_s B_{i_s,1}(alpha, beta, 0).
/// lambda = 0 leaves the single term (gamma|alpha)_n.
Rational bell_convolution(unsigned n, const ParamSet& params);

/// Same sum taken over compositions of n + r with multinomial upper index n + r.
Rational bell_convolution_shifted(unsigned n, const ParamSet& params);

/// sum_i d_{i,r} S_r(n+r, i+r) with r-Stirling numbers of the second kind.
Integer deranged_bell_classic(unsigned n, unsigned r);

/// r-Stirling numbers of the second kind S_r(n, k) (Broder's recurrence).
Integer r_stirling(unsigned n, unsigned k, unsigned r);

BellValue compute_bell(unsigned n, const ParamSet& params, BellRoute route);

/// omega_n = sum_k C(k+lambda-1, k) x^k k! beta^k S(n, k).
Rational omega(unsigned n, const ParamSet& params);

/// omega_0 .. omega_{n_max} from (1+alpha t)^{gamma/alpha} / (1 - x u)^lambda.
std::vector<Rational> omega_egf(unsigned n_max, const ParamSet& params);

struct IdentitySides {
  Rational lhs;
  Rational rhs;
};

/// Both sides of
///   omega_{n+r} = sum_i C(n+r, i) B_{i,lambda} sum_l beta^l S(n+r-i, l, alpha, beta, 0) x^l lambda^l.
/// Nothing is asserted.
IdentitySides omega_identity_check(unsigned n, const ParamSet& params);

struct ProductFormRow {
  unsigned n = 0;
  Rational reference;  // bell_egf
  Rational literal;    // prod_{i=1}^{lambda} with exponents r i, -i, (r+1) i
  Rational power;      // lambda-fold power of the lambda = 1 factor
};

/// lambda = 0 gives the empty product on both readings.
std::vector<ProductFormRow> product_form_check(unsigned n_max, const ParamSet& params);

}  // namespace debell
