#pragma once

// Power-series asymptotics for coefficients of large powers of a fixed series
// Omega(t) = sum b_n t^n with b_0 = 1:
//
//   [t^n] Omega(t)^delta / (delta)_n  ~  sum_{f=0}^{m} W(n, f) / (delta - n + f)_f,
//   W(n, f) = sum over partitions 1^{k_1} 2^{k_2} ... of n with n - f parts of prod b_i^{k_i} / k_i!.
//
// Applied to the lambda = 1 Bell EGF, delta plays the role of lambda.

#include "debell/exact.hpp"
#include "debell/params.hpp"

#include <vector>

namespace debell {

/// Partition 1^{k_1} 2^{k_2} ... n^{k_n} stored as multiplicities; multiplicity[i-1] = k_i.
struct IntPartition {
  std::vector<unsigned> multiplicity;

  unsigned total() const;
  unsigned parts() const;
};

/// All partitions of n with exactly k parts, each exactly once.
std::vector<IntPartition> partitions_with_parts(unsigned n, unsigned k);

/// Coefficients b_0, b_1, ... of Omega(t). b_0 must be 1 for the expansion to apply.
struct BaseSequence {
  std::vector<Rational> b;
};

/// W(n, f) for an arbitrary coefficient list (missing b_i count as 0).
Rational w_generic(const std::vector<Rational>& b, unsigned n, unsigned f);

/// W(n, f) with b_i = B_{i,1}(alpha, beta, gamma) / i!. Requires f <= n - 1.
Rational w_coefficient(unsigned n, unsigned f, const ParamSet& params);

/// Hand-expanded W(n, f), f <= 5, one term per partition. The f = 4 and
/// f = 5 expansions carry terms that differ from the partition sum; verify
/// records the disagreement. Terms with a negative factorial vanish.
Rational w_explicit(unsigned n, unsigned f, const ParamSet& params);

/// sum_{f=0}^{m} W(n, f) / (delta - n + f)_f. Throws std::domain_error if b_0 != 1
/// or a denominator vanishes.
Rational hsu_expansion(const BaseSequence& base, const Rational& delta, unsigned n, unsigned m);

/// [t^n] Omega(t)^delta / (delta)_n, by direct series power.
Rational hsu_target(const BaseSequence& base, const Rational& delta, unsigned n);

enum class EstimateStatus { Ok, ExactZero };

struct AsymptoticEstimate {
  Rational estimate;   // sum_{f=0}^{m} (delta)_{n-f} W(n, f)
  Rational exact;      // B_{n, delta}(alpha, beta, gamma * delta) / n!
  Rational rel_error;  // |estimate / exact - 1|; 0 when status is ExactZero
  EstimateStatus status = EstimateStatus::Ok;
};

/// delta must be a positive integer (it becomes lambda on the exact side).
AsymptoticEstimate bell_asymptotic_estimate(unsigned n, unsigned m, unsigned delta, const ParamSet& params);

}  // namespace debell
