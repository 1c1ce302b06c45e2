#include "ffcensus/arith.hpp"

#include <map>
#include <mutex>
#include <string>

namespace ffcensus {

namespace {

void require_monic(const Poly& f, const char* what) {
  if (!f.is_monic()) throw InputError(std::string(what) + " requires a monic nonzero polynomial");
}

// x^(q^k) mod f by k successive q-th powers.
Poly frobenius_iterate(const Poly& f, unsigned k) {
  Poly h = rem(Poly::x(f.field()), f);
  const mpz_class q = f.ctx().q();
  for (unsigned i = 0; i < k; ++i) h = powmod(h, q, f);
  return h;
}

}  // namespace

Poly Factorization::product(const Field& field) const {
  Poly r = Poly::constant(field, unit);
  for (const auto& pp : factors) r = r * pow(pp.prime, pp.multiplicity);
  return r;
}

bool is_irreducible(const Poly& f) {
  require_monic(f, "is_irreducible");
  if (f.degree() < 1) throw InputError("is_irreducible requires a nonconstant polynomial");
  const unsigned n = static_cast<unsigned>(f.degree());
  if (n == 1) return true;
  const Poly x = Poly::x(f.field());
  if (frobenius_iterate(f, n) != rem(x, f)) return false;
  for (const auto& pp : factor_int(n).factors) {
    const Poly h = frobenius_iterate(f, n / static_cast<unsigned>(pp.prime));
    if (!gcd(h - x, f).is_one()) return false;
  }
  return true;
}

std::shared_ptr<const std::vector<Poly>> irreducibles_of_degree(const Field& field, unsigned d) {
  using Entry = std::shared_ptr<const std::vector<Poly>>;
  static std::mutex mutex;
  static std::map<std::pair<std::string, unsigned>, Entry> cache;

  const auto key = std::make_pair(field->spec(), d);
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  auto list = std::make_shared<std::vector<Poly>>();
  if (d >= 1) {
    MonicEnumerator e(field, d);
    Poly f(field);
    while (e.next(f))
      if (is_irreducible(f)) list->push_back(f);
  }
  Entry entry = std::move(list);
  cache.emplace(key, entry);
  return entry;
}

Factorization factorize(const Poly& f) {
  if (f.is_zero()) throw InputError("cannot factor the zero polynomial");
  Factorization out;
  out.unit = f.lead();
  Poly g = f.monic();
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(g.degree()); ++d) {
    const auto primes = irreducibles_of_degree(f.field(), d);
    for (const Poly& p : *primes) {
      unsigned e = 0;
      while (true) {
        DivRem qr = divrem(g, p);
        if (!qr.remainder.is_zero()) break;
        g = std::move(qr.quotient);
        ++e;
      }
      if (e != 0) out.factors.push_back({p, e});
      if (2 * d > static_cast<unsigned>(g.degree())) break;
    }
  }
  // What remains has no factor of degree <= deg/2, so it is irreducible.
  if (g.degree() >= 1) out.factors.push_back({g, 1});
  return out;
}

int mobius_poly(const Poly& f) {
  require_monic(f, "mobius_poly");
  if (f.is_one()) return 1;
  const Factorization fac = factorize(f);
  for (const auto& pp : fac.factors)
    if (pp.multiplicity >= 2) return 0;
  return fac.factors.size() % 2 == 0 ? 1 : -1;
}

unsigned lambda_poly(const Poly& f) {
  require_monic(f, "lambda_poly");
  if (f.is_one()) return 0;
  const Factorization fac = factorize(f);
  return fac.factors.size() == 1 ? static_cast<unsigned>(fac.factors[0].prime.degree()) : 0;
}

mpz_class euler_phi(const Poly& k) {
  require_monic(k, "euler_phi");
  mpz_class phi = 1;
  for (const auto& pp : factorize(k).factors) {
    mpz_class norm;
    mpz_ui_pow_ui(norm.get_mpz_t(), k.ctx().q(), static_cast<unsigned long>(pp.prime.degree()));
    mpz_class hi, lo;
    mpz_pow_ui(hi.get_mpz_t(), norm.get_mpz_t(), pp.multiplicity);
    mpz_pow_ui(lo.get_mpz_t(), norm.get_mpz_t(), pp.multiplicity - 1);
    phi *= hi - lo;
  }
  return phi;
}

Poly radical(const Poly& k) {
  require_monic(k, "radical");
  Poly r = Poly::one(k.field());
  for (const auto& pp : factorize(k).factors) r = r * pp.prime;
  return r;
}

unsigned distinct_prime_factors(const Poly& k) {
  require_monic(k, "distinct_prime_factors");
  return static_cast<unsigned>(factorize(k).factors.size());
}

IntFactorization factor_int(std::uint64_t n) {
  if (n == 0) throw InputError("cannot factor zero");
  IntFactorization out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e != 0) out.factors.push_back({p, e});
  }
  if (n > 1) out.factors.push_back({n, 1});
  return out;
}

std::uint64_t least_prime_divisor(std::uint64_t n) {
  if (n <= 1) throw InputError("least prime divisor is undefined for n <= 1");
  return factor_int(n).factors.front().prime;
}

int mobius_int(std::uint64_t d) {
  if (d == 0) throw InputError("mobius of zero");
  const IntFactorization f = factor_int(d);
  for (const auto& pp : f.factors)
    if (pp.exponent >= 2) return 0;
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw InputError("divisors of zero");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace ffcensus
