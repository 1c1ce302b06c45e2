// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Every comparison is exact (integers or rationals); the only tolerances are
// the wall-clock limits listed next to each criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ffcensus/arith.hpp"
#include "ffcensus/census.hpp"
#include "ffcensus/cli.hpp"
#include "ffcensus/kernels.hpp"
#include "ffcensus/lseries.hpp"
#include "oracle.hpp"

using namespace ffcensus;

namespace {

mpz_class qpow(unsigned q, unsigned n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, n);
  return r;
}

std::vector<Poly> monics_up_to(const Field& f, unsigned lo, unsigned hi) {
  std::vector<Poly> out;
  for (unsigned d = lo; d <= hi; ++d)
    for (const Poly& p : monic_enumerate(f, d)) out.push_back(p);
  return out;
}

struct Outcome {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::string first_failure;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = what();
  }
};

int g_failures = 0;

void report(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.failed = o.checked + 1;
    o.first_failure = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < limit_s;
  const bool pass = o.failed == 0 && in_time;
  if (!pass) ++g_failures;
  std::printf("%s %d %s: %llu/%llu checks, %.2f s (limit %.0f s)\n", pass ? "PASS" : "FAIL", id, title,
              static_cast<unsigned long long>(o.checked - o.failed), static_cast<unsigned long long>(o.checked), secs,
              limit_s);
  if (o.failed) std::printf("    first failure: %s\n", o.first_failure.c_str());
  if (!in_time) std::printf("    over the time limit\n");
  std::fflush(stdout);
}

// Degree-n scans over k = 1 for the Lambda identity, reused by the pi check.
std::map<std::pair<unsigned, unsigned>, kernels::ClassTotals> g_scans;

}  // namespace

int main() {
  const std::vector<const char*> grid_fields{"2", "3", "2^2", "5"};

  report(1, "lambda identity, sum of Lambda over monic degree n equals q^n (q in {2,3,4,5}, n <= 10)", 60, [&] {
    Outcome o;
    for (const char* spec : grid_fields) {
      const Field f = FieldCtx::parse(spec);
      for (unsigned n = 1; n <= 10; ++n) {
        auto totals = kernels::scan_classes_parallel(Poly::one(f), n);
        const mpz_class sum = totals.lambda_total();
        o.expect(sum == qpow(f->q(), n), [&] { return std::string(spec) + " n=" + std::to_string(n) + " sum=" + sum.get_str(); });
        g_scans.emplace(std::make_pair(f->q(), n), std::move(totals));
      }
    }
    return o;
  });

  report(2, "prime count formula equals enumeration on the same grid; sum_{d|n} d pi(d) = q^n for n <= 1000", 10, [&] {
    Outcome o;
    for (const char* spec : grid_fields) {
      const Field f = FieldCtx::parse(spec);
      for (unsigned n = 1; n <= 10; ++n) {
        const auto it = g_scans.find({f->q(), n});
        const mpz_class enumerated = it != g_scans.end() ? mpz_class(it->second.prime_total()) : pi_enum(f, n);
        const mpz_class formula = pi_formula(f, n);
        o.expect(formula == enumerated, [&] {
          return std::string(spec) + " n=" + std::to_string(n) + " formula=" + formula.get_str() + " enum=" + enumerated.get_str();
        });
      }
    }
    for (const char* spec : {"2", "3", "5"}) {
      const Field f = FieldCtx::parse(spec);
      std::vector<mpz_class> pi(1001);
      for (unsigned n = 1; n <= 1000; ++n) pi[n] = pi_formula(f, n);
      for (unsigned n = 1; n <= 1000; ++n) {
        mpz_class sum = 0;
        for (auto d : divisors(n)) sum += d * pi[d];
        o.expect(sum == qpow(f->q(), n), [&] { return std::string(spec) + " n=" + std::to_string(n); });
      }
    }
    return o;
  });

  report(3, "|n pi(n) - q^n| <= 3 q^(n/lpd(n)) for 2 <= n <= 64, q in {2,3,5}", 10, [&] {
    Outcome o;
    for (unsigned q : {2U, 3U, 5U}) {
      const Field f = FieldCtx::create(q, 1);
      for (unsigned n = 2; n <= 64; ++n) {
        const mpz_class lhs = abs(n * pi_formula(f, n) - qpow(q, n));
        const mpz_class rhs = 3 * qpow(q, n / static_cast<unsigned>(least_prime_divisor(n)));
        o.expect(lhs <= rhs, [&] { return "q=" + std::to_string(q) + " n=" + std::to_string(n); });
      }
    }
    return o;
  });

  report(4, "H(n,k): series equals mu-sum, radical invariance, irreducible-k pattern, |H| <= q n^(t-1)", 120, [&] {
    Outcome o;
    struct Battery {
      const char* spec;
      unsigned max_deg;
    };
    for (const Battery b : {Battery{"2", 4}, Battery{"3", 3}}) {
      const Field f = FieldCtx::parse(b.spec);
      const unsigned q = f->q();
      const oracle::Tables t = oracle::build(f, 8);
      std::vector<std::vector<Poly>> monics;
      for (unsigned n = 0; n <= 8; ++n) monics.push_back(monic_enumerate(f, n));
      for (const Poly& k : monics_up_to(f, 0, b.max_deg)) {
        const std::string name = std::string(b.spec) + " k=" + format_poly(k);
        const CoeffSeries s = hk_series(k, 200);
        for (unsigned n = 0; n <= 8; ++n) {
          long mu_sum = 0;
          for (std::size_t i = 0; i < monics[n].size(); ++i)
            if (gcd(monics[n][i], k).is_one()) mu_sum += t.mu[n][i];
          o.expect(s.at(n) == mu_sum && hk_bruteforce(k, n) == mu_sum,
                   [&] { return name + " n=" + std::to_string(n) + " series=" + s.at(n).get_str() + " oracle=" + std::to_string(mu_sum); });
        }
        const Poly rad = radical(k);
        o.expect(hk_series(rad, 200).values() == s.values(), [&] { return name + " radical " + format_poly(rad); });

        // |H(n,k)| <= q n^(t-1), compared as |H| n <= q n^t.
        const unsigned tk = distinct_prime_factors(k);
        for (unsigned n = 1; n <= 200; ++n)
          o.expect(abs(s.at(n)) * n <= q * qpow(n, tk), [&] { return name + " bound at n=" + std::to_string(n); });
      }
      // Irreducible k of degree d: H(n,k) = [d | n] - q [n >= 1 and d | n-1].
      for (unsigned d = 1; d <= 4; ++d)
        for (const Poly& k : t.primes[d]) {
          const CoeffSeries s = hk_series(k, 20);
          for (unsigned n = 0; n <= 20; ++n) {
            const long expect = (n % d == 0 ? 1 : 0) - (n >= 1 && (n - 1) % d == 0 ? static_cast<long>(q) : 0);
            o.expect(s.at(n) == expect, [&] { return std::string(b.spec) + " irreducible k=" + format_poly(k) + " n=" + std::to_string(n); });
          }
        }
    }
    return o;
  });

  report(5, "divisor class counts: formula equals enumeration, GF(2), deg k <= 2, deg m <= n <= 8", 60, [&] {
    Outcome o;
    const Field f = FieldCtx::parse("2");
    for (const Poly& k : monics_up_to(f, 0, 2)) {
      const auto units = unit_residues(k);
      for (unsigned n = 1; n <= 8; ++n) {
        const auto fs = monic_enumerate(f, n);
        for (const Poly& m : monics_up_to(f, 0, n)) {
          if (!gcd(m, k).is_one()) continue;
          std::map<std::string, long> by_class;
          for (const Poly& g : fs)
            if (rem(g, m).is_zero()) ++by_class[format_coeffs(rem(g, k))];
          for (const Poly& l : units) {
            const long expect = by_class[format_coeffs(l)];
            const mpz_class got = divisor_class_count_formula(m, l, k, n);
            o.expect(got == expect, [&] {
              return "k=" + format_poly(k) + " m=" + format_poly(m) + " l=" + format_poly(l) + " n=" + std::to_string(n) +
                     " formula=" + got.get_str() + " enum=" + std::to_string(expect);
            });
          }
        }
      }
    }
    return o;
  });

  report(6, "Lambda-sum over every non-unit class <= deg k, deg k <= 3 over GF(2) and GF(3), n <= 8", 60, [&] {
    Outcome o;
    for (const char* spec : {"2", "3"}) {
      const Field f = FieldCtx::parse(spec);
      const oracle::Tables t = oracle::build(f, 8);
      for (const Poly& k : monics_up_to(f, 1, 3)) {
        const unsigned dk = static_cast<unsigned>(k.degree());
        for (unsigned n = 1; n <= 8; ++n) {
          // Independent tally from the sieve tables.
          std::map<std::string, long> by_class;
          const auto fs = monic_enumerate(f, n);
          for (std::size_t i = 0; i < fs.size(); ++i) {
            const Poly r = rem(fs[i], k);
            if (r.is_zero() || !gcd(r, k).is_one()) by_class[format_coeffs(r)] += t.lambda[n][i];
          }
          long worst = 0;
          for (const auto& [cls, v] : by_class) worst = std::max(worst, v);
          const NonUnitReport rep = nonunit_lambda_bound_check(k, n);
          const std::string name = std::string(spec) + " k=" + format_poly(k) + " n=" + std::to_string(n);
          o.expect(rep.max_lambda_sum == worst, [&] { return name + " report max " + rep.max_lambda_sum.get_str() + " tally " + std::to_string(worst); });
          o.expect(worst <= static_cast<long>(dk) && rep.holds(), [&] { return name + " max " + std::to_string(worst); });
        }
      }
    }
    return o;
  });

  report(7, "|S(l,k;n) - F(k,n)| <= q deg k max(1, n^t) for unit l, GF(2), deg k <= 3, n <= 14", 180, [&] {
    Outcome o;
    const Field f = FieldCtx::parse("2");
    const Poly x = Poly::x(f);
    const mpz_class s_anchor = lambda_sum_class(Poly::one(f), x, 3);
    const mpz_class f_anchor = f_kn(x, 3);
    o.expect(s_anchor == 7 && f_anchor == 4, [&] { return "anchor S=" + s_anchor.get_str() + " F=" + f_anchor.get_str(); });
    o.expect(abs(s_anchor - f_anchor) <= 2 * 1 * 3, [] { return std::string("anchor gap"); });

    for (const Poly& k : monics_up_to(f, 0, 3)) {
      const unsigned dk = static_cast<unsigned>(k.degree());
      const unsigned tk = distinct_prime_factors(k);
      const auto units = unit_residues(k);
      for (unsigned n = 1; n <= 14; ++n) {
        const ClassCensus scan = scan_census(k, n);
        const mpz_class F = f_kn(k, n);
        const mpz_class bound = 2 * dk * std::max(mpz_class(1), qpow(n, tk));
        mpz_class lo = scan.lambda_sum(units.front()), hi = lo;
        for (const Poly& l : units) {
          const mpz_class S = scan.lambda_sum(l);
          lo = std::min(lo, S);
          hi = std::max(hi, S);
          o.expect(abs(S - F) <= bound, [&] {
            return "k=" + format_poly(k) + " l=" + format_poly(l) + " n=" + std::to_string(n) + " S=" + S.get_str() +
                   " F=" + F.get_str() + " bound=" + bound.get_str();
          });
        }
        o.expect(hi - lo <= 2 * bound, [&] { return "spread k=" + format_poly(k) + " n=" + std::to_string(n); });
      }
    }
    return o;
  });

  report(8, "q=2, k=x, prime n in {7,11,13,17,19}: error within the theorem bound and strictly below q^(n/2)/n", 120, [&] {
    Outcome o;
    const Field f = FieldCtx::parse("2");
    const Poly x = Poly::x(f);
    for (unsigned n : {7U, 11U, 13U, 17U, 19U}) {
      const auto rows = census_rows(unit_residues(x), x, n);
      o.expect(rows.size() == 1, [] { return std::string("x has one unit class"); });
      for (const CensusRow& r : rows) {
        const std::string name = "n=" + std::to_string(n);
        // Every irreducible of degree >= 2 has nonzero constant term, so it lies in class 1.
        o.expect(r.pi_exact == pi_formula(f, n), [&] { return name + " pi " + r.pi_exact.get_str(); });
        mpq_class main(qpow(2, n), n);
        main.canonicalize();
        o.expect(r.main_term == main, [&] { return name + " main term"; });
        mpq_class err = abs(mpq_class(r.pi_exact) - main);
        mpq_class bound = mpq_class(2 * n, n) + mpq_class(6, n) + 1;
        err.canonicalize();
        bound.canonicalize();
        o.expect(r.abs_error == err && err <= bound && r.within_bound, [&] { return name + " theorem bound"; });
        mpq_class weil_sq(qpow(2, n), n * n);
        weil_sq.canonicalize();
        o.expect(err * err < weil_sq && r.below_weil, [&] { return name + " not below the Weil reference"; });
      }
    }
    return o;
  });

  report(9, "census CSV for the criterion 8 run is byte-identical with 1 and N workers", 120, [&] {
    Outcome o;
    auto census = [](const std::string& threads) {
      const std::vector<std::string> args{"ffcensus", "census", "--field", "2", "--k", "x", "--l", "all-units",
                                          "--n", "7..19", "--primes-only", "--format", "csv", "--threads", threads};
      std::vector<const char*> argv;
      for (const auto& a : args) argv.push_back(a.c_str());
      std::ostringstream out, err;
      const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
      return std::make_pair(code, out.str());
    };
    const unsigned many = std::max(4U, std::thread::hardware_concurrency());
    const auto one = census("1");
    const auto lots = census(std::to_string(many));
    o.expect(one.first == 0 && lots.first == 0, [] { return std::string("nonzero exit"); });
    o.expect(std::count(one.second.begin(), one.second.end(), '\n') == 6, [] { return std::string("expected header + 5 rows"); });
    o.expect(one.second == lots.second, [&] { return "outputs differ with " + std::to_string(many) + " workers"; });
    return o;
  });

  std::printf("%s: %d criteria failed\n", g_failures == 0 ? "ALL PASS" : "FAILURES", g_failures);
  return g_failures == 0 ? 0 : 1;
}
