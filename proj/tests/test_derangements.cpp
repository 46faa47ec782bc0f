#include "debell/derangements.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <stdexcept>

using namespace debell;

TEST_CASE("derangement numbers") {
  CHECK(derangement(0) == 1);
  CHECK(derangement(1) == 0);
  CHECK(derangement(4) == 9);
  for (unsigned n = 0; n <= 8; ++n) CHECK(derangement(n) == oracle::derangements(n));
  CHECK(derangement(20) == Integer("895014631192902121"));
}

TEST_CASE("r-derangements: EGF, recurrence, enumeration") {
  CHECK(r_derangement_egf(3, 1) == 9);
  CHECK(r_derangement_egf(2, 2) == 2);
  CHECK(r_derangement_rec(2, 2, 1) == 2);
  for (unsigned r = 0; r <= 4; ++r) {
    for (unsigned k = 0; k + r <= 8; ++k) {
      const Integer e = r_derangement_egf(k, r);
      CHECK(e == oracle::r_derangements(k, r));
      if (r == 0) {
        CHECK(e == derangement(k));
        CHECK(r_derangement_rec(k, 0) == e);
      }
      for (unsigned s = 1; s <= r; ++s) CHECK(r_derangement_rec(k, r, s) == e);
    }
  }
  for (unsigned r = 1; r <= 4; ++r) {
    for (unsigned k = 0; k < r; ++k) CHECK(r_derangement_egf(k, r) == 0);
  }
  CHECK_THROWS_AS(r_derangement_rec(3, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(r_derangement_rec(3, 2, 0), std::invalid_argument);
}

TEST_CASE("row helper and larger orders") {
  const auto row = r_derangement_row(2, 10);
  REQUIRE(row.size() == 11);
  for (unsigned k = 0; k <= 10; ++k) {
    CHECK(row[k] == r_derangement_egf(k, 2));
    CHECK(row[k] == r_derangement_egf(k, 2, k + 3));
    CHECK(row[k] == r_derangement_rec(k, 2));
  }
}
