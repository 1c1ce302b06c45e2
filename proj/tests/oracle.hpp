#pragma once

// Brute-force reference data for small fields, built only from Poly
// multiplication: reducibles are products of lower-degree monics, prime
// powers are powers of the survivors, mu comes from products of distinct
// primes. Nothing here touches division, gcd or the factorizer.

#include <cstdint>
#include <functional>
#include <vector>

#include "ffcensus/poly.hpp"

namespace oracle {

using ffcensus::Field;
using ffcensus::Poly;

inline std::uint64_t ord(const Poly& f) { return ffcensus::monic_index(f).ordinal.get_ui(); }

struct Tables {
  unsigned N = 0;
  std::vector<std::vector<char>> irreducible;  // [n][ordinal]
  std::vector<std::vector<unsigned>> lambda;
  std::vector<std::vector<int>> mu;
  std::vector<std::vector<Poly>> primes;       // [n] in ordinal order
};

inline Tables build(const Field& field, unsigned N) {
  Tables t;
  t.N = N;
  std::vector<std::vector<Poly>> monics(N + 1);
  for (unsigned n = 0; n <= N; ++n) monics[n] = ffcensus::monic_enumerate(field, n);

  t.irreducible.resize(N + 1);
  t.lambda.resize(N + 1);
  t.mu.resize(N + 1);
  t.primes.resize(N + 1);
  for (unsigned n = 0; n <= N; ++n) {
    t.irreducible[n].assign(monics[n].size(), n >= 1);
    t.lambda[n].assign(monics[n].size(), 0);
    t.mu[n].assign(monics[n].size(), 0);
    for (unsigned i = 1; 2 * i <= n; ++i)
      for (const Poly& a : monics[i])
        for (const Poly& b : monics[n - i]) t.irreducible[n][ord(a * b)] = 0;
    for (std::size_t j = 0; j < monics[n].size(); ++j)
      if (t.irreducible[n][j]) t.primes[n].push_back(monics[n][j]);
  }
  for (unsigned d = 1; d <= N; ++d)
    for (const Poly& p : t.primes[d]) {
      Poly pw = p;
      for (unsigned e = 1; d * e <= N; ++e, pw = pw * p) t.lambda[d * e][ord(pw)] = d;
    }

  std::vector<Poly> all;
  for (unsigned d = 1; d <= N; ++d)
    for (const Poly& p : t.primes[d]) all.push_back(p);
  t.mu[0][0] = 1;
  std::function<void(std::size_t, const Poly&, int)> extend = [&](std::size_t from, const Poly& f, int sign) {
    for (std::size_t i = from; i < all.size(); ++i) {
      if (static_cast<unsigned>(f.degree() + all[i].degree()) > N) continue;
      const Poly g = f * all[i];
      t.mu[g.degree()][ord(g)] = -sign;
      extend(i + 1, g, -sign);
    }
  };
  extend(0, Poly::one(field), 1);
  return t;
}

}  // namespace oracle
