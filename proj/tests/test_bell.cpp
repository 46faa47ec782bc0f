#include "debell/bell.hpp"
#include "debell/derangements.hpp"
#include "debell/stirling.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <stdexcept>

using namespace debell;

namespace {

std::vector<ParamSet> sample_points() {
  std::vector<ParamSet> out;
  for (const auto& [a, b, g] : std::vector<std::tuple<Rational, Rational, Rational>>{
           {0, 1, 0}, {0, 2, 4}, {1, 1, 2}, {2, 4, 2}, {Rational(1, 2), 3, Rational(-1, 3)}}) {
    for (const Rational& x : {Rational(1), Rational(2), Rational(-3, 2)}) {
      for (unsigned lambda = 0; lambda <= 3; ++lambda) {
        for (unsigned r = 0; r <= 2; ++r) out.push_back(ParamSet{a, b, g, x, lambda, r});
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("EGF matches the naive expansion") {
  for (const ParamSet& p : sample_points()) {
    const auto lib = bell_egf(8, p);
    const auto ref = oracle::bell(p.alpha, p.beta, p.gamma, p.x, p.lambda, p.r, 8);
    for (unsigned n = 0; n <= 8; ++n) CHECK_MESSAGE(lib[n] == ref[n], p.to_string() << " n=" << n);
  }
}

TEST_CASE("EGF edge values") {
  for (const ParamSet& p : sample_points()) {
    const auto b = bell_egf(6, p);
    if (p.lambda == 0) {
      for (unsigned n = 0; n <= 6; ++n) CHECK(b[n] == gen_falling(p.gamma, p.alpha, n));
    }
    if (p.r * p.lambda >= 1) CHECK(b[0] == 0);
  }
  CHECK(bell_egf(3, ParamSet{})[3] == 5);
  CHECK(bell_egf(1, ParamSet{0, 1, 1, 1, 1, 1})[1] == 1);
}

TEST_CASE("lambda = 1 closed form") {
  for (const ParamSet& p : sample_points()) {
    if (p.lambda != 1) {
      CHECK_THROWS_AS(bell_lambda1(2, p), std::invalid_argument);
      continue;
    }
    const auto b = bell_egf(8, p);
    for (unsigned n = 0; n <= 8; ++n) CHECK(bell_lambda1(n, p) == b[n]);
  }
  CHECK(bell_lambda1(3, ParamSet{}) == 5);
  CHECK(bell_lambda1(0, ParamSet{}) == 1);
}

TEST_CASE("general closed form") {
  for (const ParamSet& p : sample_points()) {
    if (p.lambda == 1) {
      for (unsigned n = 0; n <= 6; ++n) CHECK(bell_general_closed(n, p) == bell_lambda1(n, p));
    }
    if (p.lambda == 0) {
      for (unsigned n = 0; n <= 6; ++n) {
        CHECK(bell_general_closed(n, p) == (p.r == 0 ? gen_falling(p.gamma, p.alpha, n) : Rational(0)));
      }
    }
  }
  const ParamSet two{0, 1, 0, 1, 2, 0};
  CHECK(bell_egf(2, two)[2] == 2);
  CHECK(bell_general_closed(2, two) == 3);
}

TEST_CASE("convolution route") {
  for (const ParamSet& p : sample_points()) {
    const auto b = bell_egf(7, p);
    for (unsigned n = 0; n <= 7; ++n) CHECK(bell_convolution(n, p) == b[n]);
    if (p.r * p.lambda >= 1) CHECK(bell_convolution(0, p) == 0);
  }
  const ParamSet two{0, 1, 0, 1, 2, 0};
  const auto b = bell_egf(8, two);
  for (unsigned n = 0; n <= 8; ++n) CHECK(bell_convolution(n, two) == b[n]);
}

TEST_CASE("shifted convolution reads off index n + r") {
  for (const ParamSet& p : sample_points()) {
    if (p.lambda == 0) continue;  // no sections carry the r shift
    const auto b = bell_egf(8, p);
    for (unsigned n = 0; n + p.r <= 8; ++n) CHECK(bell_convolution_shifted(n, p) == b[n + p.r]);
  }
}

TEST_CASE("classic specialization and r-Stirling numbers") {
  for (unsigned r = 0; r <= 2; ++r) {
    for (unsigned n = 0; n + r <= 8; ++n) {
      const Integer c = deranged_bell_classic(n, r);
      CHECK(c == oracle::r_deranged_partitions(n, r));
      CHECK(Rational(c) == bell_egf(n, ParamSet{0, 1, Rational(r), 1, 1, r})[n]);
    }
  }
  for (unsigned r = 0; r <= 3; ++r) {
    for (unsigned n = 0; n <= 8; ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        if (k >= r && n >= r) CHECK(r_stirling(n, k, r) == oracle::r_stirling2(n - r, k - r, r));
      }
    }
  }
  CHECK(deranged_bell_classic(3, 0) == 5);
  CHECK(deranged_bell_classic(1, 1) == 1);
  CHECK(deranged_bell_classic(0, 1) == 0);
}

TEST_CASE("compute_bell dispatch") {
  const ParamSet p{1, 2, 4, 2, 1, 1};
  const Rational ref = bell_egf(6, p)[6];
  for (BellRoute route : {BellRoute::Egf, BellRoute::Lambda1Closed, BellRoute::GeneralClosed, BellRoute::Convolution}) {
    const BellValue v = compute_bell(6, p, route);
    CHECK(v.value == ref);
    CHECK(v.route == route);
    CHECK(parse_bell_route(to_string(route)) == route);
  }
  CHECK(compute_bell(4, ParamSet{0, 1, 2, 1, 1, 2}, BellRoute::ClassicSpecialization).value ==
        bell_egf(4, ParamSet{0, 1, 2, 1, 1, 2})[4]);
  CHECK_THROWS_AS(compute_bell(4, p, BellRoute::ClassicSpecialization), std::invalid_argument);
  CHECK_THROWS_AS(parse_bell_route("nope"), std::invalid_argument);
}

TEST_CASE("omega polynomials") {
  const ParamSet fub{0, 1, 0, 1, 1, 0};
  const auto e = omega_egf(7, fub);
  for (unsigned n = 0; n <= 7; ++n) {
    CHECK(omega(n, fub) == oracle::fubini(n));
    CHECK(e[n] == omega(n, fub));
  }
  CHECK(omega(3, fub) == 13);
  for (const ParamSet& p : sample_points()) {
    const auto w = omega_egf(6, p);
    for (unsigned n = 0; n <= 6; ++n) {
      CHECK(w[n] == omega(n, p));
      if (p.lambda == 0) CHECK(w[n] == gen_falling(p.gamma, p.alpha, n));
    }
  }
  for (unsigned lambda = 1; lambda <= 3; ++lambda) {
    for (unsigned n = 0; n <= 6; ++n) CHECK(omega(n, fub.with_lambda(lambda)) == oracle::barred(n, lambda));
  }
}

TEST_CASE("omega identity holds at r = 0") {
  for (const ParamSet& p : sample_points()) {
    if (p.r != 0) continue;
    for (unsigned n = 0; n <= 6; ++n) {
      const auto s = omega_identity_check(n, p);
      CHECK_MESSAGE(s.lhs == s.rhs, p.to_string() << " n=" << n);
    }
  }
}

TEST_CASE("product form readings") {
  for (const ParamSet& p : sample_points()) {
    for (const auto& row : product_form_check(6, p)) {
      CHECK(row.power == row.reference);
      if (p.lambda <= 1) CHECK(row.literal == row.reference);
    }
  }
}
