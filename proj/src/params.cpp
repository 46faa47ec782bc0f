#include "debell/params.hpp"

namespace debell {

namespace {

bool divides(const Rational& d, const Rational& v) {
  if (d == 0) return true;
  return is_integer(Rational(v / d));
}

}  // namespace

bool ParamSet::combinatorial_regime() const {
  if (!is_nonnegative_integer(alpha) || !is_nonnegative_integer(beta) || !is_nonnegative_integer(gamma)) {
    return false;
  }
  if (!divides(alpha, beta) || !divides(alpha, gamma)) return false;
  return is_integer(x) && x > 0;
}

std::string ParamSet::to_string() const {
  return "alpha=" + debell::to_string(alpha) + " beta=" + debell::to_string(beta) +
         " gamma=" + debell::to_string(gamma) + " x=" + debell::to_string(x) +
         " lambda=" + std::to_string(lambda) + " r=" + std::to_string(r);
}

}  // namespace debell
