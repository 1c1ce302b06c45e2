#include <doctest.h>

#include "ffcensus/arith.hpp"
#include "ffcensus/census.hpp"
#include "ffcensus/kernels.hpp"
#include "oracle.hpp"

using namespace ffcensus;

TEST_CASE("fast lambda and irreducibility agree with the sieve tables") {
  struct Grid {
    const char* spec;
    unsigned N;
  };
  for (const Grid g : {Grid{"2", 12}, Grid{"3", 7}, Grid{"2^2", 6}, Grid{"5", 5}, Grid{"2^3", 4}, Grid{"3^2", 4},
                       Grid{"7", 4}}) {
    const Field f = FieldCtx::parse(g.spec);
    const oracle::Tables t = oracle::build(f, g.N);
    INFO(g.spec);
    for (unsigned n = 0; n <= g.N; ++n) {
      const auto all = monic_enumerate(f, n);
      unsigned bad = 0;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (kernels::lambda_fast(*f, all[i].coeffs()) != t.lambda[n][i]) ++bad;
        if (kernels::irreducible_fast(*f, all[i].coeffs()) != static_cast<bool>(t.irreducible[n][i])) ++bad;
      }
      INFO("n=" << n);
      CHECK(bad == 0);
    }
  }
}

TEST_CASE("fast lambda agrees with the reference path on larger degrees") {
  // Pseudo-random ordinals beyond the sieve range; degrees are capped where
  // trial division in the reference path stays cheap.
  struct Grid {
    const char* spec;
    std::vector<unsigned> degrees;
  };
  for (const Grid& g : {Grid{"2", {14, 20, 31}}, Grid{"3", {9, 13}}, Grid{"2^2", {8, 11}}, Grid{"2^8", {3, 5}}}) {
    const Field f = FieldCtx::parse(g.spec);
    const char* spec = g.spec;
    for (unsigned n : g.degrees) {
      mpz_class qn;
      mpz_ui_pow_ui(qn.get_mpz_t(), f->q(), n);
      unsigned bad = 0;
      mpz_class ordinal = 12345;
      for (int i = 0; i < 300; ++i) {
        const Poly p = from_monic_index(f, {n, ordinal});
        if (kernels::lambda_fast(*f, p.coeffs()) != lambda_poly(p)) ++bad;
        ordinal = (ordinal * 1103515245 + 12345) % qn;
      }
      INFO(spec << " n=" << n);
      CHECK(bad == 0);
    }
    // Prime powers of high degree, where the squarefree split matters.
    const Poly p = from_monic_index(f, {3, 1});
    for (unsigned e = 1; e <= 6; ++e) {
      const Poly pe = pow(p, e);
      CHECK(kernels::lambda_fast(*f, pe.coeffs()) == lambda_poly(pe));
    }
  }
}

TEST_CASE("parallel scan equals the serial reference for any thread count") {
  struct Case {
    const char* field;
    const char* k;
    unsigned n;
  };
  for (const Case c : {Case{"2", "1", 10}, Case{"2", "x", 9}, Case{"2", "x^3+x^2", 11}, Case{"3", "x^2+1", 6},
                       Case{"2^2", "1,1,1", 5}, Case{"5", "x+3", 4}, Case{"2", "x^4+x+1", 3}}) {
    const Field f = FieldCtx::parse(c.field);
    const Poly k = parse_poly(f, c.k);
    const kernels::ClassTotals ref = kernels::scan_classes_serial(k, c.n);
    INFO(c.field << " k=" << c.k << " n=" << c.n);
    for (int threads : {1, 2, 3, 8}) CHECK(kernels::scan_classes_parallel(k, c.n, kDefaultBudget, threads) == ref);
    mpz_class qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), f->q(), c.n);
    CHECK(ref.lambda_total() == qn);
  }
}

TEST_CASE("scan rejects oversized requests") {
  const Field f = FieldCtx::parse("2");
  CHECK_THROWS(kernels::scan_classes_parallel(Poly::x(f), 30, 1 << 20));
  CHECK_THROWS(kernels::scan_classes_serial(Poly::x(f), 30, 1 << 20));
}
