#pragma once

#include <vector>

#include <gmpxx.h>

#include "ffcensus/poly.hpp"

namespace ffcensus {

// Coefficients H(0..N) of sum_{f monic, (f,k)=1} mu(f) u^deg f as an exact
// integer sequence, i.e. of (1 - q u) * prod_{p | k} 1/(1 - u^deg p).
class CoeffSeries {
 public:
  CoeffSeries(Poly modulus_radical, unsigned distinct_primes, std::vector<mpz_class> values);

  const Poly& modulus_radical() const noexcept { return radical_; }
  unsigned q() const noexcept { return radical_.ctx().q(); }
  unsigned t() const noexcept { return t_; }
  unsigned length() const noexcept { return static_cast<unsigned>(values_.size()) - 1; }
  const std::vector<mpz_class>& values() const noexcept { return values_; }

  // Throws std::out_of_range beyond the truncation length.
  const mpz_class& at(unsigned n) const;

 private:
  Poly radical_;
  unsigned t_;
  std::vector<mpz_class> values_;
};

// [1, -q, 0, ..., 0] of length N + 1.
CoeffSeries h_series(const Field& field, unsigned N);

CoeffSeries hk_series(const Poly& k, unsigned N);

// sum of mu(f) over monic f of degree n with gcd(f, k) = 1, by enumeration.
mpz_class hk_bruteforce(const Poly& k, unsigned n, std::uint64_t budget = kDefaultBudget);

// q * n^(t-1) with t the number of distinct prime factors of k. n >= 1.
// For k == 1 (t == 0) the value is q, which bounds |H(n)| for every n >= 1.
mpz_class hk_bound(const Poly& k, unsigned n);
mpz_class hk_bound(unsigned q, unsigned t, unsigned n);

}  // namespace ffcensus
