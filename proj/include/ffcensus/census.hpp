#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "ffcensus/kernels.hpp"
#include "ffcensus/numfmt.hpp"
#include "ffcensus/poly.hpp"

namespace ffcensus {

struct ScanOptions {
  std::uint64_t budget = kDefaultBudget;
  int threads = 0;  // <= 0: OpenMP default
};

// pi(n) = (1/n) sum_{d | n} mu(d) q^(n/d). Throws InvariantError if the sum is
// not divisible by n.
mpz_class pi_formula(const Field& field, unsigned n);
// Exhaustive count of monic irreducibles of degree n.
mpz_class pi_enum(const Field& field, unsigned n, const ScanOptions& opts = {});

// The canonical representative l mod k (degree < deg k).
Poly reduce_residue(const Poly& l, const Poly& k);
// All residues mod k in ordinal order, and the subsets coprime / not coprime to k.
std::vector<Poly> all_residues(const Poly& k);
std::vector<Poly> unit_residues(const Poly& k);
std::vector<Poly> nonunit_residues(const Poly& k);

// Number of monic irreducible f of degree n with f == l (mod k); gcd(l,k) = 1.
mpz_class pi_progression(const Poly& l, const Poly& k, unsigned n, const ScanOptions& opts = {});
// Sum of Lambda(f) over monic f of degree n with f == l (mod k); any l.
mpz_class lambda_sum_class(const Poly& l, const Poly& k, unsigned n, const ScanOptions& opts = {});

// F(k,n) = -sum_{d=1}^{n - deg k} d q^(n-d-deg k) H(d,k); 0 when n < deg k.
mpz_class f_kn(const Poly& k, unsigned n);

// #{f monic, deg f = n, m | f, f == l (mod k)} with gcd(l,k) = gcd(m,k) = 1.
mpz_class divisor_class_count_enum(const Poly& m, const Poly& l, const Poly& k, unsigned n,
                                   std::uint64_t budget = kDefaultBudget);
// q^(n - deg k - deg m) when deg m <= n - deg k; otherwise 1 iff the reduced
// residue l * m^{-1} mod k is itself monic of degree n - deg m.
mpz_class divisor_class_count_formula(const Poly& m, const Poly& l, const Poly& k, unsigned n);
// Both paths; InvariantError if they disagree.
mpz_class divisor_class_count(const Poly& m, const Poly& l, const Poly& k, unsigned n,
                              std::uint64_t budget = kDefaultBudget);

// One exhaustive pass over degree-n monic polynomials, bucketed by residue
// mod k. Everything class-related reads from here.
class ClassCensus {
 public:
  ClassCensus(Poly k, unsigned n, kernels::ClassTotals totals);

  const Poly& k() const noexcept { return k_; }
  unsigned n() const noexcept { return n_; }
  const kernels::ClassTotals& totals() const noexcept { return totals_; }

  mpz_class lambda_sum(const Poly& l) const;
  mpz_class prime_count(const Poly& l) const;

 private:
  std::uint64_t slot(const Poly& l) const;

  Poly k_;
  unsigned n_;
  kernels::ClassTotals totals_;
};

ClassCensus scan_census(const Poly& k, unsigned n, const ScanOptions& opts = {});

// Error-term bounds, all exact.
mpz_class poly_bound(unsigned q, unsigned deg_k, unsigned t, unsigned n);  // q deg(k) n^t
mpz_class sieve_bound(unsigned q, unsigned deg_k, unsigned t, unsigned n);  // q deg(k) max(1, n^t)
mpq_class exp_bound(unsigned q, unsigned n);  // 3 q^(n / lpd(n)) / n; 0 for n == 1
SqrtRational weil_reference(unsigned q, unsigned n);  // q^(n/2) / n

struct CensusRow {
  unsigned q = 0;
  Poly k;
  Poly l;
  unsigned n = 0;
  unsigned t = 0;  // distinct prime factors of k
  mpz_class pi_exact{};
  mpz_class lambda_sum{};
  mpz_class f_kn{};
  mpz_class phi_k{};
  mpq_class main_term{};
  mpq_class abs_error{};
  mpz_class poly_bound{};
  mpq_class exp_bound{};
  SqrtRational weil_ref{};
  // poly_bound / n + exp_bound + deg k
  mpq_class theorem_bound{};
  bool within_bound = false;  // abs_error <= theorem_bound
  bool below_weil = false;    // abs_error < weil_ref
};

CensusRow census_row(const Poly& l, const Poly& k, unsigned n, const ScanOptions& opts = {});
// Rows for several residues from a single scan, in the order given.
std::vector<CensusRow> census_rows(const std::vector<Poly>& ls, const Poly& k, unsigned n,
                                   const ScanOptions& opts = {});
std::vector<CensusRow> census_rows(const std::vector<Poly>& ls, const ClassCensus& scan);

struct NonUnitReport {
  std::size_t classes_checked = 0;
  mpz_class max_lambda_sum = 0;
  Poly argmax;  // residue attaining the maximum (zero poly if no classes)
  unsigned bound = 0;  // deg k
  std::size_t violations = 0;
  bool holds() const noexcept { return violations == 0; }
};

NonUnitReport nonunit_lambda_bound_check(const Poly& k, unsigned n, const ScanOptions& opts = {});
NonUnitReport nonunit_lambda_bound_check(const ClassCensus& scan);

}  // namespace ffcensus
