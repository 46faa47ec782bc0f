#pragma once

#include "debell/exact.hpp"

#include <string>

namespace debell {

/// Free parameters of the higher-order r-deranged Bell family.
struct ParamSet {
  Rational alpha = 0;
  Rational beta = 1;
  Rational gamma = 0;
  Rational x = 1;
  unsigned lambda = 1;
  unsigned r = 0;

  /// alpha, beta, gamma nonnegative integers with alpha | beta and alpha | gamma
  /// (alpha = 0 counts as the degenerate limit) and x a positive integer.
  bool combinatorial_regime() const;

  ParamSet with_lambda(unsigned l) const {
    ParamSet p = *this;
    p.lambda = l;
    return p;
  }
  ParamSet with_gamma(const Rational& g) const {
    ParamSet p = *this;
    p.gamma = g;
    return p;
  }

  std::string to_string() const;

  friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

}  // namespace debell
