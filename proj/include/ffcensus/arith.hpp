#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ffcensus/poly.hpp"

namespace ffcensus {

struct PrimePower {
  Poly prime;
  unsigned multiplicity;
};

// unit * prod prime^multiplicity == the factored polynomial. Factors are
// distinct monic irreducibles sorted by (degree, ordinal).
struct Factorization {
  Elem unit = 1;
  std::vector<PrimePower> factors;

  Poly product(const Field& field) const;
  // Number of distinct irreducible factors.
  std::size_t distinct() const noexcept { return factors.size(); }
};

// Rabin: x^(q^n) == x mod f and gcd(x^(q^(n/l)) - x, f) == 1 for every prime
// l | n. f must be monic of degree >= 1.
bool is_irreducible(const Poly& f);

// Monic irreducibles of degree d in ordinal order. Cached per field; the
// cache is filled under a lock and entries are never modified afterwards.
std::shared_ptr<const std::vector<Poly>> irreducibles_of_degree(const Field& field, unsigned d);

// Trial division by cached irreducibles in ascending degree. f != 0.
Factorization factorize(const Poly& f);

// The next four reject non-monic input (InputError).
int mobius_poly(const Poly& f);
unsigned lambda_poly(const Poly& f);
mpz_class euler_phi(const Poly& k);
Poly radical(const Poly& k);
// Number of distinct irreducible factors of a monic k (0 for k == 1).
unsigned distinct_prime_factors(const Poly& k);

struct IntPrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

struct IntFactorization {
  std::vector<IntPrimePower> factors;  // primes strictly increasing
};

IntFactorization factor_int(std::uint64_t n);
// Least prime divisor of n >= 2. This is the quantity written Omega(n) in the
// error term q^(n / Omega(n)); it is NOT the prime-factor count.
std::uint64_t least_prime_divisor(std::uint64_t n);
int mobius_int(std::uint64_t d);
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace ffcensus
