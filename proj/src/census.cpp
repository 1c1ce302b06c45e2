#include "ffcensus/census.hpp"

#include "ffcensus/arith.hpp"
#include "ffcensus/lseries.hpp"

namespace ffcensus {

namespace {

mpz_class q_pow(unsigned q, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, e);
  return r;
}

unsigned deg_of(const Poly& k) { return static_cast<unsigned>(k.degree()); }

void require_modulus(const Poly& k) {
  if (!k.is_monic()) throw InputError("the modulus k must be monic and nonzero");
}

void require_unit(const Poly& l, const Poly& k) {
  if (!gcd(l, k).is_one()) throw InputError("l not coprime to k");
}

kernels::ClassTotals run_scan(const Poly& k, unsigned n, const ScanOptions& opts) {
  return kernels::scan_classes_parallel(k, n, opts.budget, opts.threads);
}

}  // namespace

mpz_class pi_formula(const Field& field, unsigned n) {
  if (n == 0) throw InputError("pi(n) needs n >= 1");
  mpz_class sum = 0;
  for (std::uint64_t d : divisors(n)) {
    const int mu = mobius_int(d);
    if (mu != 0) sum += mu * q_pow(field->q(), n / d);
  }
  if (!mpz_divisible_ui_p(sum.get_mpz_t(), n)) {
    throw InvariantError("sum of mu(d) q^(n/d) is not divisible by n = " + std::to_string(n));
  }
  return sum / n;
}

mpz_class pi_enum(const Field& field, unsigned n, const ScanOptions& opts) {
  if (n == 0) throw InputError("pi(n) needs n >= 1");
  return mpz_class(std::to_string(run_scan(Poly::one(field), n, opts).prime_total()));
}

Poly reduce_residue(const Poly& l, const Poly& k) {
  require_modulus(k);
  return rem(l, k);
}

std::vector<Poly> all_residues(const Poly& k) {
  require_modulus(k);
  std::uint64_t count = 1;
  for (int i = 0; i < k.degree(); ++i) count *= k.ctx().q();
  std::vector<Poly> out;
  out.reserve(count);
  for (std::uint64_t ord = 0; ord < count; ++ord) out.push_back(from_coeff_ordinal(k.field(), ord));
  return out;
}

std::vector<Poly> unit_residues(const Poly& k) {
  std::vector<Poly> out;
  for (Poly& l : all_residues(k))
    if (gcd(l, k).is_one()) out.push_back(std::move(l));
  return out;
}

std::vector<Poly> nonunit_residues(const Poly& k) {
  std::vector<Poly> out;
  for (Poly& l : all_residues(k))
    if (!gcd(l, k).is_one()) out.push_back(std::move(l));
  return out;
}

ClassCensus::ClassCensus(Poly k, unsigned n, kernels::ClassTotals totals)
    : k_(std::move(k)), n_(n), totals_(std::move(totals)) {}

std::uint64_t ClassCensus::slot(const Poly& l) const {
  require_same_field(l, k_);
  return k_.degree() == 0 ? 0 : coeff_ordinal_u64(rem(l, k_));
}

mpz_class ClassCensus::lambda_sum(const Poly& l) const {
  return mpz_class(std::to_string(totals_.lambda_sum[slot(l)]));
}

mpz_class ClassCensus::prime_count(const Poly& l) const {
  return mpz_class(std::to_string(totals_.prime_count[slot(l)]));
}

ClassCensus scan_census(const Poly& k, unsigned n, const ScanOptions& opts) {
  require_modulus(k);
  if (n == 0) throw InputError("census degree must be positive");
  return ClassCensus(k, n, run_scan(k, n, opts));
}

mpz_class pi_progression(const Poly& l, const Poly& k, unsigned n, const ScanOptions& opts) {
  require_modulus(k);
  require_same_field(l, k);
  require_unit(l, k);
  return scan_census(k, n, opts).prime_count(l);
}

mpz_class lambda_sum_class(const Poly& l, const Poly& k, unsigned n, const ScanOptions& opts) {
  require_modulus(k);
  require_same_field(l, k);
  return scan_census(k, n, opts).lambda_sum(l);
}

mpz_class f_kn(const Poly& k, unsigned n) {
  require_modulus(k);
  const unsigned dk = deg_of(k);
  if (n < dk) return 0;
  const unsigned top = n - dk;
  const CoeffSeries h = hk_series(k, top);
  mpz_class sum = 0;
  // The d = 0 term carries weight d = 0.
  for (unsigned d = 1; d <= top; ++d) sum += d * q_pow(k.ctx().q(), n - d - dk) * h.at(d);
  return -sum;
}

mpz_class divisor_class_count_enum(const Poly& m, const Poly& l, const Poly& k, unsigned n,
                                   std::uint64_t budget) {
  require_modulus(k);
  if (!m.is_monic()) throw InputError("m must be monic");
  require_same_field(m, k);
  require_same_field(l, k);
  require_unit(l, k);
  if (!gcd(m, k).is_one()) throw InputError("m not coprime to k");
  const Poly target = rem(l, k);
  mpz_class count = 0;
  MonicEnumerator e(k.field(), n, budget);
  Poly f(k.field());
  while (e.next(f)) {
    if (!rem(f, m).is_zero()) continue;
    if (rem(f, k) == target) ++count;
  }
  return count;
}

mpz_class divisor_class_count_formula(const Poly& m, const Poly& l, const Poly& k, unsigned n) {
  require_modulus(k);
  if (!m.is_monic()) throw InputError("m must be monic");
  require_unit(l, k);
  const std::optional<Poly> m_inv = inverse_mod(m, k);
  if (!m_inv) throw InputError("m not coprime to k");
  const int dm = m.degree(), dk = k.degree();
  if (dm + dk <= static_cast<int>(n)) return q_pow(k.ctx().q(), n - static_cast<unsigned>(dm + dk));
  // f = m g with g monic of degree n - deg m < deg k, so g is the reduced
  // residue l * m^{-1} itself or nothing.
  const int dg = static_cast<int>(n) - dm;
  if (dg < 0) return 0;
  const Poly g = rem(l * *m_inv, k);
  return (g.is_monic() && g.degree() == dg) ? 1 : 0;
}

mpz_class divisor_class_count(const Poly& m, const Poly& l, const Poly& k, unsigned n, std::uint64_t budget) {
  const mpz_class by_enum = divisor_class_count_enum(m, l, k, n, budget);
  const mpz_class by_formula = divisor_class_count_formula(m, l, k, n);
  if (by_enum != by_formula) {
    throw InvariantError("divisor class count mismatch for m = " + format_poly(m) + ", l = " + format_poly(l) +
                         ", k = " + format_poly(k) + ", n = " + std::to_string(n) + ": enumeration " +
                         by_enum.get_str() + " vs formula " + by_formula.get_str());
  }
  return by_enum;
}

mpz_class poly_bound(unsigned q, unsigned deg_k, unsigned t, unsigned n) {
  mpz_class nt;
  mpz_ui_pow_ui(nt.get_mpz_t(), n, t);
  return mpz_class(q) * deg_k * nt;
}

mpz_class sieve_bound(unsigned q, unsigned deg_k, unsigned t, unsigned n) {
  mpz_class nt;
  mpz_ui_pow_ui(nt.get_mpz_t(), n, t);
  if (nt < 1) nt = 1;
  return mpz_class(q) * deg_k * nt;
}

mpq_class exp_bound(unsigned q, unsigned n) {
  if (n == 0) throw InputError("exp_bound needs n >= 1");
  // pi(1) = q exactly; no error term.
  if (n == 1) return 0;
  const std::uint64_t lpd = least_prime_divisor(n);
  mpq_class r(3 * q_pow(q, n / lpd), mpz_class(n));
  r.canonicalize();
  return r;
}

SqrtRational weil_reference(unsigned q, unsigned n) {
  if (n == 0) throw InputError("weil_reference needs n >= 1");
  mpq_class sq(q_pow(q, n), mpz_class(n) * n);
  sq.canonicalize();
  return SqrtRational(sq);
}

std::vector<CensusRow> census_rows(const std::vector<Poly>& ls, const ClassCensus& scan) {
  const Poly& k = scan.k();
  const unsigned n = scan.n();
  const unsigned q = k.ctx().q();
  const unsigned dk = deg_of(k);
  const unsigned t = distinct_prime_factors(k);
  const mpz_class phi = euler_phi(k);
  const mpz_class fk = f_kn(k, n);
  const mpz_class pb = poly_bound(q, dk, t, n);
  const mpq_class eb = exp_bound(q, n);
  const SqrtRational weil = weil_reference(q, n);
  mpq_class main(q_pow(q, n), mpz_class(n) * phi);
  main.canonicalize();
  mpq_class tb = mpq_class(pb, mpz_class(n)) + eb + mpq_class(dk);
  tb.canonicalize();
  // Crude sanity: pi <= q^n / n + 1.
  const mpq_class sanity = mpq_class(q_pow(q, n), mpz_class(n)) + 1;

  std::vector<CensusRow> rows;
  rows.reserve(ls.size());
  for (const Poly& l_in : ls) {
    require_same_field(l_in, k);
    require_unit(l_in, k);
    CensusRow row{.q = q, .k = k, .l = rem(l_in, k), .n = n};
    row.t = t;
    row.pi_exact = scan.prime_count(row.l);
    row.lambda_sum = scan.lambda_sum(row.l);
    row.f_kn = fk;
    row.phi_k = phi;
    row.main_term = main;
    row.abs_error = abs(mpq_class(row.pi_exact) - main);
    row.abs_error.canonicalize();
    row.poly_bound = pb;
    row.exp_bound = eb;
    row.weil_ref = weil;
    row.theorem_bound = tb;
    row.within_bound = row.abs_error <= tb;
    row.below_weil = weil.exceeds(row.abs_error);
    if (row.pi_exact < 0 || mpq_class(row.pi_exact) > sanity) {
      throw InvariantError("prime count " + row.pi_exact.get_str() + " outside [0, q^n/n + 1]");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<CensusRow> census_rows(const std::vector<Poly>& ls, const Poly& k, unsigned n, const ScanOptions& opts) {
  for (const Poly& l : ls) {
    require_same_field(l, k);
    require_unit(l, k);
  }
  return census_rows(ls, scan_census(k, n, opts));
}

CensusRow census_row(const Poly& l, const Poly& k, unsigned n, const ScanOptions& opts) {
  return census_rows(std::vector<Poly>{l}, k, n, opts).front();
}

NonUnitReport nonunit_lambda_bound_check(const ClassCensus& scan) {
  const Poly& k = scan.k();
  NonUnitReport report{0, 0, Poly(k.field()), deg_of(k)};
  bool first = true;
  for (const Poly& l : nonunit_residues(k)) {
    const mpz_class s = scan.lambda_sum(l);
    ++report.classes_checked;
    if (first || s > report.max_lambda_sum) {
      report.max_lambda_sum = s;
      report.argmax = l;
      first = false;
    }
    if (s > report.bound) ++report.violations;
  }
  return report;
}

NonUnitReport nonunit_lambda_bound_check(const Poly& k, unsigned n, const ScanOptions& opts) {
  return nonunit_lambda_bound_check(scan_census(k, n, opts));
}

}  // namespace ffcensus
