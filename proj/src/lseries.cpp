#include "ffcensus/lseries.hpp"

#include <stdexcept>

#include "ffcensus/arith.hpp"

namespace ffcensus {

CoeffSeries::CoeffSeries(Poly modulus_radical, unsigned distinct_primes, std::vector<mpz_class> values)
    : radical_(std::move(modulus_radical)), t_(distinct_primes), values_(std::move(values)) {
  if (values_.empty()) throw InputError("empty coefficient series");
}

const mpz_class& CoeffSeries::at(unsigned n) const {
  if (n >= values_.size()) {
    throw std::out_of_range("series coefficient " + std::to_string(n) + " beyond truncation length " +
                            std::to_string(length()));
  }
  return values_[n];
}

CoeffSeries h_series(const Field& field, unsigned N) {
  std::vector<mpz_class> v(N + 1, 0);
  v[0] = 1;
  if (N >= 1) v[1] = -static_cast<long>(field->q());
  return CoeffSeries(Poly::one(field), 0, std::move(v));
}

CoeffSeries hk_series(const Poly& k, unsigned N) {
  if (!k.is_monic()) throw InputError("hk_series requires a monic modulus");
  const Factorization fac = factorize(k);
  std::vector<mpz_class> v = h_series(k.field(), N).values();
  Poly rad = Poly::one(k.field());
  // Multiply by 1/(1 - u^d) for each distinct prime: a running prefix sum
  // with stride d, i.e. H(n) <- sum_{i >= 0} H(n - i d).
  for (const auto& pp : fac.factors) {
    rad = rad * pp.prime;
    const unsigned d = static_cast<unsigned>(pp.prime.degree());
    for (unsigned n = d; n <= N; ++n) v[n] += v[n - d];
  }
  return CoeffSeries(std::move(rad), static_cast<unsigned>(fac.factors.size()), std::move(v));
}

mpz_class hk_bruteforce(const Poly& k, unsigned n, std::uint64_t budget) {
  if (!k.is_monic()) throw InputError("hk_bruteforce requires a monic modulus");
  mpz_class sum = 0;
  MonicEnumerator e(k.field(), n, budget);
  Poly f(k.field());
  while (e.next(f)) {
    if (!gcd(f, k).is_one()) continue;
    sum += mobius_poly(f);
  }
  return sum;
}

mpz_class hk_bound(unsigned q, unsigned t, unsigned n) {
  if (n == 0) throw InputError("the H(n,k) bound is only asserted for n >= 1");
  mpz_class b;
  mpz_ui_pow_ui(b.get_mpz_t(), n, t == 0 ? 0 : t - 1);
  return b * q;
}

mpz_class hk_bound(const Poly& k, unsigned n) {
  return hk_bound(k.ctx().q(), distinct_prime_factors(k), n);
}

}  // namespace ffcensus
