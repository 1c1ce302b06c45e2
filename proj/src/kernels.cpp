#include "ffcensus/kernels.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include <omp.h>

#include "ffcensus/arith.hpp"

namespace ffcensus::kernels {

std::uint64_t ClassTotals::lambda_total() const noexcept {
  return std::accumulate(lambda_sum.begin(), lambda_sum.end(), std::uint64_t{0});
}

std::uint64_t ClassTotals::prime_total() const noexcept {
  return std::accumulate(prime_count.begin(), prime_count.end(), std::uint64_t{0});
}

namespace {

constexpr int kCap = static_cast<int>(kMaxScanDegree) + 2;

struct Tables {
  explicit Tables(const FieldCtx& ctx)
      : q(ctx.q()),
        p(ctx.p()),
        add(ctx.add_table().data()),
        mul(ctx.mul_table().data()),
        neg(ctx.neg_table().data()),
        inv(ctx.inv_table().data()),
        root(ctx.q()) {
    for (unsigned a = 0; a < q; ++a) root[a] = ctx.pth_root(static_cast<Elem>(a));
  }

  Elem a(Elem x, Elem y) const noexcept { return add[x * q + y]; }
  Elem s(Elem x, Elem y) const noexcept { return add[x * q + neg[y]]; }
  Elem m(Elem x, Elem y) const noexcept { return mul[x * q + y]; }

  unsigned q, p;
  const Elem* add;
  const Elem* mul;
  const Elem* neg;
  const Elem* inv;
  std::vector<Elem> root;
};

// Fixed-capacity polynomial; deg == -1 is zero. Entries above deg are
// unspecified unless a routine says otherwise.
struct SmallPoly {
  int deg = -1;
  std::array<Elem, kCap> c{};
};

using Row = std::array<Elem, kCap>;

void trim(SmallPoly& a) noexcept {
  while (a.deg >= 0 && a.c[a.deg] == 0) --a.deg;
}

bool equal(const SmallPoly& a, const SmallPoly& b) noexcept {
  if (a.deg != b.deg) return false;
  for (int i = 0; i <= a.deg; ++i)
    if (a.c[i] != b.c[i]) return false;
  return true;
}

void make_monic(const Tables& T, SmallPoly& a) noexcept {
  if (a.deg < 0 || a.c[a.deg] == 1) return;
  const Elem li = T.inv[a.c[a.deg]];
  for (int i = 0; i <= a.deg; ++i) a.c[i] = T.m(a.c[i], li);
}

// a <- a mod b, b nonzero.
void rem_inplace(const Tables& T, SmallPoly& a, const SmallPoly& b) noexcept {
  const Elem li = T.inv[b.c[b.deg]];
  for (int i = a.deg; i >= b.deg; --i) {
    if (a.c[i] == 0) continue;
    const Elem c = T.m(a.c[i], li);
    const int sh = i - b.deg;
    for (int j = 0; j <= b.deg; ++j) a.c[sh + j] = T.s(a.c[sh + j], T.m(c, b.c[j]));
  }
  a.deg = std::min(a.deg, b.deg - 1);
  trim(a);
}

SmallPoly div_exact(const Tables& T, SmallPoly a, const SmallPoly& b) noexcept {
  SmallPoly quot;
  if (a.deg < b.deg) return quot;
  quot.deg = a.deg - b.deg;
  std::fill(quot.c.begin(), quot.c.begin() + quot.deg + 1, Elem{0});
  const Elem li = T.inv[b.c[b.deg]];
  for (int i = a.deg; i >= b.deg; --i) {
    if (a.c[i] == 0) continue;
    const Elem c = T.m(a.c[i], li);
    const int sh = i - b.deg;
    quot.c[sh] = c;
    for (int j = 0; j <= b.deg; ++j) a.c[sh + j] = T.s(a.c[sh + j], T.m(c, b.c[j]));
  }
  trim(quot);
  return quot;
}

SmallPoly gcd_monic(const Tables& T, SmallPoly a, SmallPoly b) noexcept {
  while (b.deg >= 0) {
    rem_inplace(T, a, b);
    std::swap(a, b);
  }
  make_monic(T, a);
  return a;
}

SmallPoly multiply(const Tables& T, const SmallPoly& a, const SmallPoly& b) noexcept {
  SmallPoly r;
  if (a.deg < 0 || b.deg < 0) return r;
  r.deg = a.deg + b.deg;
  std::fill(r.c.begin(), r.c.begin() + r.deg + 1, Elem{0});
  for (int i = 0; i <= a.deg; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j <= b.deg; ++j) r.c[i + j] = T.a(r.c[i + j], T.m(a.c[i], b.c[j]));
  }
  trim(r);
  return r;
}

SmallPoly derivative(const Tables& T, const SmallPoly& f) noexcept {
  SmallPoly d;
  if (f.deg < 1) return d;
  d.deg = f.deg - 1;
  // The prime-subfield element i mod p has encoding index i mod p.
  for (int i = 1; i <= f.deg; ++i) d.c[i - 1] = T.m(static_cast<Elem>(static_cast<unsigned>(i) % T.p), f.c[i]);
  trim(d);
  return d;
}

// v <- v * x mod f, with v dense of length n = deg f.
void shift_mod(const Tables& T, Row& v, const SmallPoly& f) noexcept {
  const int n = f.deg;
  const Elem top = v[n - 1];
  for (int i = n - 1; i > 0; --i) v[i] = v[i - 1];
  v[0] = 0;
  if (top != 0)
    for (int i = 0; i < n; ++i) v[i] = T.s(v[i], T.m(top, f.c[i]));
}

// gcd(h - x, f) == 1 for h dense of length n.
bool coprime_to_frobenius_gap(const Tables& T, const Row& h, const SmallPoly& f) noexcept {
  SmallPoly g;
  g.deg = f.deg - 1;
  std::copy(h.begin(), h.begin() + f.deg, g.c.begin());
  g.c[1] = T.s(g.c[1], 1);
  trim(g);
  if (g.deg < 0) return false;  // h == x: f splits over F_q^i
  return gcd_monic(T, f, g).deg == 0;
}

// Distinct-degree test: f (monic, deg n) is irreducible iff it has no factor
// of degree i <= n/2, i.e. gcd(x^(q^i) - x, f) == 1 for those i. Frobenius is
// applied through the matrix of x^(jq) mod f.
bool irreducible_small(const Tables& T, const SmallPoly& f) noexcept {
  const int n = f.deg;
  if (n < 1) return false;
  if (n == 1) return true;
  std::array<Row, kCap> frob;
  frob[0].fill(0);
  frob[0][0] = 1;
  frob[1] = frob[0];
  for (unsigned s = 0; s < T.q; ++s) shift_mod(T, frob[1], f);
  if (!coprime_to_frobenius_gap(T, frob[1], f)) return false;
  if (n / 2 < 2) return true;
  for (int j = 2; j < n; ++j) {
    frob[j] = frob[j - 1];
    for (unsigned s = 0; s < T.q; ++s) shift_mod(T, frob[j], f);
  }
  Row h = frob[1];
  for (int i = 2; i <= n / 2; ++i) {
    Row next{};
    for (int j = 0; j < n; ++j) {
      if (h[j] == 0) continue;
      for (int t = 0; t < n; ++t) next[t] = T.a(next[t], T.m(h[j], frob[j][t]));
    }
    h = next;
    if (!coprime_to_frobenius_gap(T, h, f)) return false;
  }
  return true;
}

unsigned lambda_small(const Tables& T, SmallPoly f) noexcept {
  while (true) {
    const int n = f.deg;
    if (n < 1) return 0;
    const SmallPoly d = derivative(T, f);
    if (d.deg < 0) {
      // f = h^p; Lambda(h^p) = Lambda(h).
      SmallPoly h;
      h.deg = n / static_cast<int>(T.p);
      for (int i = 0; i <= h.deg; ++i) h.c[i] = T.root[f.c[i * static_cast<int>(T.p)]];
      f = h;
      continue;
    }
    const SmallPoly g = gcd_monic(T, f, d);
    if (g.deg == 0) return irreducible_small(T, f) ? static_cast<unsigned>(n) : 0;
    // f = p^a with p not dividing a gives gcd = p^(a-1) and f/gcd = p.
    const SmallPoly r = div_exact(T, f, g);
    if (n % r.deg != 0) return 0;
    SmallPoly acc = r;
    for (int i = 1; i < n / r.deg; ++i) acc = multiply(T, acc, r);
    if (!equal(acc, f)) return 0;
    return irreducible_small(T, r) ? static_cast<unsigned>(r.deg) : 0;
  }
}

SmallPoly to_small(std::span<const Elem> coeffs) {
  if (coeffs.size() > static_cast<std::size_t>(kCap)) throw InputError("polynomial degree exceeds kernel capacity");
  SmallPoly s;
  s.deg = static_cast<int>(coeffs.size()) - 1;
  std::copy(coeffs.begin(), coeffs.end(), s.c.begin());
  trim(s);
  return s;
}

void require_kernel_input(const FieldCtx& ctx, std::span<const Elem> monic) {
  if (monic.empty() || monic.back() != 1) throw InputError("kernel evaluators need a monic polynomial");
  if (monic.size() - 1 > kMaxScanDegree) throw InputError("polynomial degree exceeds kernel capacity");
  for (Elem c : monic)
    if (c >= ctx.q()) throw InputError("coefficient out of range");
}

std::uint64_t class_count(const Poly& k) {
  std::uint64_t classes = 1;
  for (int i = 0; i < k.degree(); ++i) classes *= k.ctx().q();
  return classes;
}

void check_scan_args(const Poly& k, unsigned n) {
  if (!k.is_monic()) throw InputError("class scans need a monic modulus");
  if (n > kMaxScanDegree) throw InputError("degree exceeds kernel capacity");
}

}  // namespace

unsigned lambda_fast(const FieldCtx& ctx, std::span<const Elem> monic) {
  require_kernel_input(ctx, monic);
  return lambda_small(Tables(ctx), to_small(monic));
}

bool irreducible_fast(const FieldCtx& ctx, std::span<const Elem> monic) {
  require_kernel_input(ctx, monic);
  return irreducible_small(Tables(ctx), to_small(monic));
}

ClassTotals scan_classes_serial(const Poly& k, unsigned n, std::uint64_t budget) {
  check_scan_args(k, n);
  ClassTotals out;
  out.n = n;
  const std::uint64_t classes = class_count(k);
  out.lambda_sum.assign(classes, 0);
  out.prime_count.assign(classes, 0);
  MonicEnumerator e(k.field(), n, budget);
  Poly f(k.field());
  while (e.next(f)) {
    const std::uint64_t cls = k.degree() == 0 ? 0 : coeff_ordinal_u64(rem(f, k));
    out.lambda_sum[cls] += lambda_poly(f);
    if (n >= 1 && is_irreducible(f)) ++out.prime_count[cls];
  }
  return out;
}

ClassTotals scan_classes_parallel(const Poly& k, unsigned n, std::uint64_t budget, int threads) {
  check_scan_args(k, n);
  const std::uint64_t total = monic_count_within(k.ctx(), n, budget);
  const Tables T(k.ctx());
  const SmallPoly mod = to_small(k.coeffs());
  const std::uint64_t classes = class_count(k);
  const unsigned q = T.q;
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  const std::uint64_t nchunks = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(nthreads) * 64);
  const std::uint64_t chunk = (total + nchunks - 1) / nchunks;

  ClassTotals out;
  out.n = n;
  out.lambda_sum.assign(classes, 0);
  out.prime_count.assign(classes, 0);

#pragma omp parallel num_threads(nthreads)
  {
    std::vector<std::uint64_t> lam(classes, 0), primes(classes, 0);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(nchunks); ++ci) {
      const std::uint64_t lo = static_cast<std::uint64_t>(ci) * chunk;
      const std::uint64_t hi = std::min(total, lo + chunk);
      SmallPoly f;
      f.deg = static_cast<int>(n);
      std::uint64_t t = lo;
      for (unsigned i = 0; i < n; ++i) {
        f.c[i] = static_cast<Elem>(t % q);
        t /= q;
      }
      f.c[n] = 1;
      for (std::uint64_t ord = lo; ord < hi; ++ord) {
        std::uint64_t cls = 0;
        if (mod.deg > 0) {
          SmallPoly r = f;
          rem_inplace(T, r, mod);
          for (int i = r.deg; i >= 0; --i) cls = cls * q + r.c[i];
        }
        const unsigned l = lambda_small(T, f);
        lam[cls] += l;
        if (n >= 1 && l == n) ++primes[cls];
        for (unsigned i = 0; i < n; ++i) {
          if (f.c[i] + 1U < q) {
            ++f.c[i];
            break;
          }
          f.c[i] = 0;
        }
      }
    }
#pragma omp critical
    {
      for (std::uint64_t c = 0; c < classes; ++c) {
        out.lambda_sum[c] += lam[c];
        out.prime_count[c] += primes[c];
      }
    }
  }
  return out;
}

}  // namespace ffcensus::kernels
