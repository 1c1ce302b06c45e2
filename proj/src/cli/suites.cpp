#include <algorithm>
#include <functional>
#include <sstream>

#include "ffcensus/arith.hpp"
#include "ffcensus/cli.hpp"
#include "ffcensus/kernels.hpp"
#include "ffcensus/lseries.hpp"

namespace ffcensus::cli {

namespace {

constexpr std::size_t kMaxNotes = 40;

void check(SuiteResult& r, bool ok, const std::function<std::string()>& describe) {
  ++r.checked;
  if (ok) return;
  ++r.failed;
  if (r.notes.size() < kMaxNotes) r.notes.push_back("violation: " + describe());
}

mpz_class q_pow(unsigned q, unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, e);
  return r;
}

// The --k polynomial, or every monic modulus of degree 1..2 (1..3 when q <= 3).
std::vector<Poly> modulus_battery(const SuiteInput& in) {
  if (in.k) return {*in.k};
  std::vector<Poly> out;
  const unsigned max_deg = in.field->q() <= 3 ? 3 : 2;
  for (unsigned d = 1; d <= max_deg; ++d)
    for (Poly& k : monic_enumerate(in.field, d)) out.push_back(std::move(k));
  return out;
}

std::string fmt(const Poly& p) { return format_poly(p); }

SuiteResult field_axioms(const SuiteInput& in) {
  SuiteResult r{"field-axioms", 0, 0, {}};
  const FieldCtx& F = *in.field;
  const unsigned q = F.q();
  for (unsigned a = 0; a < q; ++a) {
    const Elem ea = static_cast<Elem>(a);
    bool ok = F.add(ea, 0) == ea && F.mul(ea, 1) == ea && F.add(ea, F.neg(ea)) == 0 && F.pow(ea, q) == ea;
    if (a != 0) ok = ok && F.inv(ea) == F.inv_euclid(ea) && F.mul(ea, F.inv(ea)) == 1;
    check(r, ok, [&] { return "identity/inverse/Frobenius failure at element " + std::to_string(a); });
    for (unsigned b = 0; b < q; ++b) {
      const Elem eb = static_cast<Elem>(b);
      const bool pair_ok = F.add(ea, eb) == F.add(eb, ea) && F.mul(ea, eb) == F.mul(eb, ea) &&
                           F.add(ea, eb) == F.add_direct(ea, eb) && F.mul(ea, eb) == F.mul_direct(ea, eb);
      check(r, pair_ok, [&] { return "commutativity/table mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ")"; });
      for (unsigned c = 0; c < q; ++c) {
        const Elem ec = static_cast<Elem>(c);
        const bool triple_ok = F.add(F.add(ea, eb), ec) == F.add(ea, F.add(eb, ec)) &&
                               F.mul(F.mul(ea, eb), ec) == F.mul(ea, F.mul(eb, ec)) &&
                               F.mul(ea, F.add(eb, ec)) == F.add(F.mul(ea, eb), F.mul(ea, ec));
        check(r, triple_ok, [&] {
          return "associativity/distributivity failure at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(c) + ")";
        });
      }
    }
  }
  return r;
}

SuiteResult poly_ring(const SuiteInput& in) {
  SuiteResult r{"poly-ring", 0, 0, {}};
  const Field& field = in.field;
  const unsigned q = field->q();
  // All polynomials of degree <= D, keeping the pair loop near 10^6.
  unsigned D = std::min(3U, std::max(1U, in.n.hi));
  while (D > 0 && q_pow(q, D + 1) > 1024) --D;
  std::vector<Poly> small;
  const std::uint64_t count = q_pow(q, D + 1).get_ui();
  for (std::uint64_t ord = 0; ord < count; ++ord) small.push_back(from_coeff_ordinal(field, ord));

  for (const Poly& a : small) {
    for (const Poly& b : small) {
      if (!b.is_zero()) {
        const DivRem qr = divrem(a, b);
        check(r, qr.quotient * b + qr.remainder == a && qr.remainder.degree() < b.degree(),
              [&] { return "divrem(" + fmt(a) + ", " + fmt(b) + ") does not reconstruct"; });
      }
      if (!(a.is_zero() && b.is_zero())) {
        const Poly g = gcd(a, b);
        check(r, g.is_monic() && rem(a, g).is_zero() && rem(b, g).is_zero() && g == gcd(b, a),
              [&] { return "gcd(" + fmt(a) + ", " + fmt(b) + ") = " + fmt(g); });
      }
      check(r, (a + b) - b == a && a * b == b * a, [&] { return "ring axiom failure on " + fmt(a) + ", " + fmt(b); });
    }
  }

  for (unsigned n : selected_degrees(in.n, false)) {
    if (q_pow(q, n) > 65536) {
      r.notes.push_back("enumeration checks skipped for n=" + std::to_string(n) + " (q^n > 65536)");
      continue;
    }
    const std::vector<Poly> all = monic_enumerate(field, n, in.scan.budget);
    check(r, q_pow(q, n) == all.size(), [&] { return "monic_enumerate size mismatch at n=" + std::to_string(n); });
    bool increasing = true;
    bool round_trip = true;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (monic_index(all[i]).ordinal != i) increasing = false;
      if (parse_poly(field, format_poly(all[i])) != all[i] || parse_poly(field, format_coeffs(all[i])) != all[i])
        round_trip = false;
    }
    check(r, increasing, [&] { return "ordinals not 0,1,2,... at n=" + std::to_string(n); });
    check(r, round_trip, [&] { return "parse/format round trip failed at n=" + std::to_string(n); });
    const std::uint64_t total = all.size();
    for (std::uint64_t cut : {std::uint64_t{0}, std::uint64_t{1}, total / 3, total / 2, total - 1, total}) {
      cut = std::min(cut, total);
      std::vector<Poly> joined = monic_enumerate(field, n, 0, cut, in.scan.budget);
      for (Poly& f : monic_enumerate(field, n, cut, total, in.scan.budget)) joined.push_back(std::move(f));
      check(r, joined == all, [&] { return "partitioned scan differs at n=" + std::to_string(n) + " cut=" + std::to_string(cut); });
    }
  }
  return r;
}

SuiteResult mobius_lambda(const SuiteInput& in) {
  SuiteResult r{"mobius-lambda", 0, 0, {}};
  for (unsigned n : selected_degrees(in.n, false)) {
    const CoeffSeries h = h_series(in.field, n);
    mpz_class mu_sum = 0;
    MonicEnumerator e(in.field, n, in.scan.budget);
    Poly f(in.field);
    while (e.next(f)) {
      const Factorization fac = factorize(f);
      const int mu = mobius_poly(f);
      const bool squarefree =
          std::all_of(fac.factors.begin(), fac.factors.end(), [](const PrimePower& pp) { return pp.multiplicity == 1; });
      mu_sum += mu;
      bool ok = fac.product(in.field) == f && ((mu == 0) == !squarefree);
      if (n >= 1) {
        const bool single = fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
        ok = ok && is_irreducible(f) == single;
      }
      ok = ok && lambda_poly(f) == kernels::lambda_fast(*in.field, f.coeffs());
      check(r, ok, [&] { return "mu/Lambda/factorization disagreement at " + fmt(f); });
    }
    check(r, mu_sum == h.at(n), [&] {
      return "sum of mu over degree " + std::to_string(n) + " is " + mu_sum.get_str() + ", expected " + h.at(n).get_str();
    });
  }
  return r;
}

SuiteResult hk_series_suite(const SuiteInput& in) {
  SuiteResult r{"hk-series", 0, 0, {}};
  const unsigned q = in.field->q();
  for (const Poly& k : modulus_battery(in)) {
    const unsigned N = std::max(in.n.hi, 200U);
    const CoeffSeries s = hk_series(k, N);
    check(r, s.at(0) == 1, [&] { return "H(0, " + fmt(k) + ") != 1"; });
    for (unsigned n = in.n.lo; n <= in.n.hi; ++n) {
      const mpz_class brute = hk_bruteforce(k, n, in.scan.budget);
      check(r, brute == s.at(n), [&] {
        return "H(" + std::to_string(n) + ", " + fmt(k) + ") series " + s.at(n).get_str() + " vs enumeration " + brute.get_str();
      });
    }
    const CoeffSeries sr = hk_series(radical(k), N);
    check(r, sr.values() == s.values(), [&] { return "radical invariance fails for " + fmt(k); });
    if (k.degree() >= 2 && is_irreducible(k)) {
      const unsigned d = static_cast<unsigned>(k.degree());
      for (unsigned n = 0; n <= std::max(in.n.hi, 20U); ++n) {
        const long expected = n % d == 0 ? 1 : (n % d == 1 ? -static_cast<long>(q) : 0);
        check(r, s.at(n) == expected, [&] { return "irreducible-modulus pattern fails at n=" + std::to_string(n) + " for " + fmt(k); });
      }
    }
    for (unsigned n = 1; n <= N; ++n) {
      const mpz_class bound = hk_bound(q, s.t(), n);
      check(r, abs(s.at(n)) <= bound, [&] {
        return "|H(" + std::to_string(n) + ", " + fmt(k) + ")| = " + mpz_class(abs(s.at(n))).get_str() + " > " + bound.get_str();
      });
    }
  }
  return r;
}

SuiteResult lemma6(const SuiteInput& in) {
  SuiteResult r{"lemma6", 0, 0, {}};
  const unsigned q = in.field->q();
  for (unsigned n : selected_degrees(in.n, in.primes_only)) {
    if (n == 0) continue;
    const mpz_class pf = pi_formula(in.field, n);
    const mpz_class pe = pi_enum(in.field, n, in.scan);
    check(r, pf == pe, [&] { return "pi(" + std::to_string(n) + "): formula " + pf.get_str() + " vs enumeration " + pe.get_str(); });
    mpz_class total = 0;
    for (std::uint64_t d : divisors(n)) total += mpz_class(static_cast<unsigned long>(d)) * pi_formula(in.field, static_cast<unsigned>(d));
    check(r, total == q_pow(q, n), [&] { return "sum d pi(d) != q^n at n=" + std::to_string(n); });
    if (n >= 2) {
      const mpz_class gap = abs(n * pf - q_pow(q, n));
      const mpz_class bound = 3 * q_pow(q, n / static_cast<unsigned>(least_prime_divisor(n)));
      check(r, gap <= bound, [&] { return "|n pi(n) - q^n| = " + gap.get_str() + " > " + bound.get_str() + " at n=" + std::to_string(n); });
    }
  }
  return r;
}

SuiteResult lemma12(const SuiteInput& in) {
  SuiteResult r{"lemma12", 0, 0, {}};
  for (const Poly& k : modulus_battery(in)) {
    const std::vector<Poly> units = unit_residues(k);
    for (unsigned n : selected_degrees(in.n, false)) {
      for (unsigned dm = 0; dm <= n; ++dm) {
        for (const Poly& m : monic_enumerate(in.field, dm, in.scan.budget)) {
          if (!gcd(m, k).is_one()) continue;
          for (const Poly& l : units) {
            const mpz_class a = divisor_class_count_enum(m, l, k, n, in.scan.budget);
            const mpz_class b = divisor_class_count_formula(m, l, k, n);
            check(r, a == b, [&] {
              return "m=" + fmt(m) + " l=" + fmt(l) + " k=" + fmt(k) + " n=" + std::to_string(n) + ": enumeration " +
                     a.get_str() + " vs formula " + b.get_str();
            });
          }
        }
      }
    }
  }
  return r;
}

SuiteResult lemma13(const SuiteInput& in) {
  SuiteResult r{"lemma13", 0, 0, {}};
  for (const Poly& k : modulus_battery(in)) {
    for (unsigned n : selected_degrees(in.n, false)) {
      if (n == 0) continue;
      const NonUnitReport rep = nonunit_lambda_bound_check(k, n, in.scan);
      r.checked += rep.classes_checked;
      r.failed += rep.violations;
      if (!rep.holds() && r.notes.size() < kMaxNotes) {
        r.notes.push_back("violation: k=" + fmt(k) + " n=" + std::to_string(n) + " max non-unit Lambda-sum " +
                          rep.max_lambda_sum.get_str() + " at l=" + fmt(rep.argmax) + " exceeds deg k = " +
                          std::to_string(rep.bound));
      }
    }
  }
  return r;
}

SuiteResult lemma11(const SuiteInput& in) {
  SuiteResult r{"lemma11", 0, 0, {}};
  const unsigned q = in.field->q();
  for (const Poly& k : modulus_battery(in)) {
    const std::vector<Poly> units = unit_residues(k);
    const unsigned t = distinct_prime_factors(k);
    for (unsigned n : selected_degrees(in.n, in.primes_only)) {
      if (n == 0) continue;
      const ClassCensus scan = scan_census(k, n, in.scan);
      const mpz_class F = f_kn(k, n);
      const mpz_class bound = sieve_bound(q, static_cast<unsigned>(k.degree()), t, n);
      mpz_class worst = 0, lo, hi;
      bool first = true;
      for (const Poly& l : units) {
        const mpz_class S = scan.lambda_sum(l);
        const mpz_class gap = abs(S - F);
        worst = std::max(worst, gap);
        if (first || S < lo) lo = S;
        if (first || S > hi) hi = S;
        first = false;
        check(r, gap <= bound, [&] {
          return "k=" + fmt(k) + " l=" + fmt(l) + " n=" + std::to_string(n) + ": |S - F| = " + gap.get_str() + " > " + bound.get_str();
        });
      }
      const mpz_class spread = hi - lo;
      check(r, spread <= 2 * bound, [&] { return "k=" + fmt(k) + " n=" + std::to_string(n) + ": spread " + spread.get_str() + " > 2*bound"; });
      std::ostringstream row;
      row << "k=" << fmt(k) << " n=" << n << " F=" << F.get_str() << " max|S-F|=" << worst.get_str()
          << " bound=" << bound.get_str() << " spread=" << spread.get_str() << (worst <= bound ? " ok" : " EXCEEDED");
      if (r.notes.size() < 4 * kMaxNotes) r.notes.push_back(row.str());
    }
  }
  return r;
}

SuiteResult theorem1(const SuiteInput& in) {
  SuiteResult r{"theorem1", 0, 0, {}};
  const Poly k = in.k ? *in.k : Poly::x(in.field);
  const std::vector<Poly> units = unit_residues(k);
  for (unsigned n : selected_degrees(in.n, in.primes_only)) {
    if (n == 0) continue;
    for (const CensusRow& row : census_rows(units, k, n, in.scan)) {
      check(r, row.within_bound, [&] {
        return "l=" + fmt(row.l) + " n=" + std::to_string(n) + ": error " + decimal_string(row.abs_error) +
               " exceeds bound " + decimal_string(row.theorem_bound);
      });
      if (n >= 7 && is_prime_u64(n)) {
        check(r, row.below_weil, [&] {
          return "l=" + fmt(row.l) + " n=" + std::to_string(n) + ": error " + decimal_string(row.abs_error) +
                 " not below q^(n/2)/n = " + row.weil_ref.decimal_string();
        });
      }
    }
  }
  return r;
}

SuiteResult lambda_total(const SuiteInput& in) {
  SuiteResult r{"lambda-total", 0, 0, {}};
  const unsigned q = in.field->q();
  for (unsigned n : selected_degrees(in.n, in.primes_only)) {
    if (n == 0) continue;
    const mpz_class qn = q_pow(q, n);
    const kernels::ClassTotals all =
        kernels::scan_classes_parallel(Poly::one(in.field), n, in.scan.budget, in.scan.threads);
    mpz_class by_formula = 0;
    for (std::uint64_t d : divisors(n)) by_formula += mpz_class(static_cast<unsigned long>(d)) * pi_formula(in.field, static_cast<unsigned>(d));
    bool ok = mpz_class(std::to_string(all.lambda_total())) == qn && by_formula == qn;
    if (in.k) {
      const kernels::ClassTotals classes =
          kernels::scan_classes_parallel(*in.k, n, in.scan.budget, in.scan.threads);
      ok = ok && mpz_class(std::to_string(classes.lambda_total())) == qn;
    }
    check(r, ok, [&] { return "sum of Lambda over degree " + std::to_string(n) + " is not q^n"; });
  }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"field-axioms", "poly-ring", "mobius-lambda", "hk-series", "lemma6",
                                                 "lemma12",      "lemma13",   "lemma11",       "theorem1",  "lemma14"};
  return names;
}

SuiteResult run_suite(std::string_view name, const SuiteInput& input) {
  if (name == "field-axioms") return field_axioms(input);
  if (name == "poly-ring") return poly_ring(input);
  if (name == "mobius-lambda") return mobius_lambda(input);
  if (name == "hk-series") return hk_series_suite(input);
  if (name == "lemma6") return lemma6(input);
  if (name == "lemma12") return lemma12(input);
  if (name == "lemma13") return lemma13(input);
  if (name == "lemma11") return lemma11(input);
  if (name == "theorem1") return theorem1(input);
  if (name == "lemma14" || name == "lambda-total") return lambda_total(input);
  throw InputError("unknown suite '" + std::string(name) + "'");
}

}  // namespace ffcensus::cli
