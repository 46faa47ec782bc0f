#pragma once

// Brute-force reference counts and a naive EGF expansion, written without any
// library routine so they can judge the library's formulas.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using Blocks = std::vector<std::vector<unsigned>>;

// Set partitions of {1..n} with blocks in standard form (ordered by minimum).
inline void set_partitions(unsigned n, const std::function<void(const Blocks&)>& visit) {
  std::vector<unsigned> a(n, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned used) {
    if (i == n) {
      Blocks blocks(used);
      for (unsigned e = 0; e < n; ++e) blocks[a[e]].push_back(e + 1);
      visit(blocks);
      return;
    }
    for (unsigned b = 0; b <= used; ++b) {
      a[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
}

inline std::uint64_t stirling2(unsigned n, unsigned k) {
  std::uint64_t c = 0;
  set_partitions(n, [&](const Blocks& b) { c += b.size() == k; });
  return c;
}

// Elements 1..r land in distinct blocks.
inline bool separates_first(const Blocks& blocks, unsigned r) {
  for (const auto& block : blocks) {
    if (std::count_if(block.begin(), block.end(), [&](unsigned e) { return e <= r; }) > 1) return false;
  }
  return true;
}

// Partitions of {1..n+r} into k+r blocks with 1..r separated.
inline std::uint64_t r_stirling2(unsigned n, unsigned k, unsigned r) {
  std::uint64_t c = 0;
  set_partitions(n + r, [&](const Blocks& b) { c += b.size() == k + r && separates_first(b, r); });
  return c;
}

// cycle_of[i] = representative of the cycle through i (0-based permutation).
inline std::vector<unsigned> cycle_labels(const std::vector<unsigned>& p) {
  std::vector<unsigned> label(p.size(), static_cast<unsigned>(p.size()));
  for (unsigned s = 0; s < p.size(); ++s) {
    if (label[s] != p.size()) continue;
    unsigned i = s;
    do {
      label[i] = s;
      i = p[i];
    } while (i != s);
  }
  return label;
}

inline bool is_r_derangement(const std::vector<unsigned>& p, unsigned r) {
  for (unsigned i = 0; i < p.size(); ++i) {
    if (p[i] == i) return false;
  }
  const auto label = cycle_labels(p);
  for (unsigned i = 0; i < r; ++i) {
    for (unsigned j = i + 1; j < r; ++j) {
      if (label[i] == label[j]) return false;
    }
  }
  return true;
}

inline std::uint64_t r_derangements(unsigned k, unsigned r) {
  std::vector<unsigned> p(k + r);
  std::iota(p.begin(), p.end(), 0u);
  std::uint64_t c = 0;
  do {
    c += is_r_derangement(p, r);
  } while (std::next_permutation(p.begin(), p.end()));
  return c;
}

inline std::uint64_t derangements(unsigned n) { return r_derangements(n, 0); }

// Partitions of {1..n+r} with 1..r separated, paired with an r-derangement of
// their standard-form block list.
inline std::uint64_t r_deranged_partitions(unsigned n, unsigned r) {
  std::uint64_t c = 0;
  set_partitions(n + r, [&](const Blocks& b) {
    if (!separates_first(b, r)) return;
    std::vector<unsigned> p(b.size());
    std::iota(p.begin(), p.end(), 0u);
    do {
      c += is_r_derangement(p, r);
    } while (std::next_permutation(p.begin(), p.end()));
  });
  return c;
}

// Maps {1..n} -> {1..k} hitting every value: ordered set partitions with k blocks.
inline std::uint64_t ordered_partitions(unsigned n, unsigned k) {
  std::vector<unsigned> f(n, 0);
  std::uint64_t c = 0;
  std::function<void(unsigned)> rec = [&](unsigned i) {
    if (i == n) {
      std::vector<bool> hit(k, false);
      for (unsigned v : f) hit[v] = true;
      c += std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
      return;
    }
    for (unsigned v = 0; v < k; ++v) {
      f[i] = v;
      rec(i + 1);
    }
  };
  if (k == 0) return n == 0;
  rec(0);
  return c;
}

inline std::uint64_t fubini(unsigned n) {
  std::uint64_t c = 0;
  for (unsigned k = 0; k <= n; ++k) c += ordered_partitions(n, k);
  return c;
}

// Ordered partitions with lambda - 1 identical bars dropped into the k + 1 gaps.
inline std::uint64_t barred(unsigned n, unsigned lambda) {
  std::uint64_t c = 0;
  for (unsigned k = 0; k <= n; ++k) {
    std::uint64_t placements = 0;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned min_gap) {
      if (left == 0) {
        ++placements;
        return;
      }
      for (unsigned g = min_gap; g <= k; ++g) rec(left - 1, g);
    };
    rec(lambda - 1, 0);
    c += ordered_partitions(n, k) * placements;
  }
  return c;
}

// ---- naive truncated polynomials over Q, coefficient lists of length N + 1 ----

using Poly = std::vector<mpq_class>;

inline Poly mul(const Poly& a, const Poly& b) {
  Poly c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

inline Poly ipow(const Poly& a, unsigned e) {
  Poly c(a.size(), 0);
  c[0] = 1;
  for (unsigned i = 0; i < e; ++i) c = mul(c, a);
  return c;
}

inline mpq_class fact(unsigned n) {
  mpq_class f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// (1 + alpha t)^{c/alpha} via its closed form sum (c|alpha)_n t^n / n!.
inline Poly binomial_series(const mpq_class& alpha, const mpq_class& c, unsigned N) {
  Poly p(N + 1, 0);
  mpq_class fall = 1;
  for (unsigned n = 0; n <= N; ++n) {
    p[n] = fall / fact(n);
    fall *= c - alpha * n;
  }
  return p;
}

// sum_j coef(j) s^j with s having zero constant term.
inline Poly compose(const Poly& s, const std::function<mpq_class(unsigned)>& coef) {
  Poly out(s.size(), 0);
  Poly sj(s.size(), 0);
  sj[0] = 1;
  for (unsigned j = 0; j < s.size(); ++j) {
    const mpq_class cj = coef(j);
    for (std::size_t i = 0; i < s.size(); ++i) out[i] += cj * sj[i];
    sj = mul(sj, s);
  }
  return out;
}

inline mpq_class binom_up(unsigned top, unsigned k) {  // C(top, k) with top >= k
  mpq_class c = 1;
  for (unsigned i = 0; i < k; ++i) c = c * (top - i) / (i + 1);
  return c;
}

// n! [t^n] of (1+at)^{g/a} (xu)^{r lambda} e^{-lambda x u} (1 - x u)^{-(r+1) lambda},
// u = (1+at)^{b/a} - 1, for n = 0..N.
inline std::vector<mpq_class> bell(const mpq_class& a, const mpq_class& b, const mpq_class& g, const mpq_class& x,
                                   unsigned lambda, unsigned r, unsigned N) {
  Poly s = binomial_series(a, b, N);
  s[0] = 0;
  for (auto& c : s) c *= x;
  const Poly head = binomial_series(a, g, N);
  const Poly lead = ipow(s, r * lambda);
  const Poly e = compose(s, [&](unsigned j) {
    mpq_class v = 1 / fact(j);
    for (unsigned i = 0; i < j; ++i) v *= -static_cast<long>(lambda);
    return v;
  });
  const unsigned m = (r + 1) * lambda;
  const Poly geo = compose(s, [&](unsigned j) { return m == 0 ? mpq_class(j == 0) : binom_up(j + m - 1, j); });
  const Poly total = mul(mul(head, lead), mul(e, geo));
  std::vector<mpq_class> out(N + 1);
  for (unsigned n = 0; n <= N; ++n) out[n] = total[n] * fact(n);
  return out;
}

}  // namespace oracle
