#include "ffcensus/field.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ffcensus {

namespace {

// Dense polynomials over Z_p used only to realize the extension field; the
// general polynomial ring lives one layer up and depends on this module.
using ZpPoly = std::vector<unsigned>;

void trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod_p(unsigned a, unsigned p) {
  // Extended Euclid on integers.
  long long r0 = p, r1 = a % p, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long qt = r0 / r1;
    long long t = r0 - qt * r1;
    r0 = r1;
    r1 = t;
    t = s0 - qt * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw InputError("element is not invertible");
  long long s = s0 % static_cast<long long>(p);
  if (s < 0) s += p;
  return static_cast<unsigned>(s);
}

// a mod b for b nonzero.
ZpPoly zp_rem(ZpPoly a, const ZpPoly& b, unsigned p) {
  trim(a);
  const unsigned lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const unsigned c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - c * b[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

ZpPoly zp_sub(ZpPoly a, const ZpPoly& b, unsigned p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

ZpPoly zp_divq(ZpPoly a, const ZpPoly& b, unsigned p) {
  trim(a);
  if (a.size() < b.size()) return {};
  ZpPoly quot(a.size() - b.size() + 1, 0);
  const unsigned lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const unsigned c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - c * b[i] % p) % p;
    }
    trim(a);
  }
  return quot;
}

// True iff the monic polynomial f of degree m has no monic factor of degree
// 1..m/2 (plain trial division; m is tiny).
bool zp_irreducible(const ZpPoly& f, unsigned p) {
  const std::size_t m = f.size() - 1;
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t ord = 0; ord < count; ++ord) {
      ZpPoly g(d + 1, 0);
      std::uint64_t t = ord;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(t % p);
        t /= p;
      }
      g[d] = 1;
      if (zp_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

ZpPoly digits_of(unsigned index, unsigned p, unsigned m) {
  ZpPoly d(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    d[i] = index % p;
    index /= p;
  }
  trim(d);
  return d;
}

unsigned index_of(const ZpPoly& d, unsigned p) {
  unsigned idx = 0;
  for (std::size_t i = d.size(); i-- > 0;) idx = idx * p + d[i];
  return idx;
}

unsigned parse_uint(std::string_view s, std::string_view what) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError("bad " + std::string(what) + " in field spec: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field FieldCtx::create(unsigned p, unsigned m, const std::vector<unsigned>* modulus) {
  if (!is_prime_u64(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw InputError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldSize) throw InputError("field size exceeds " + std::to_string(kMaxFieldSize));
  }

  ZpPoly mod;
  if (modulus != nullptr) {
    mod = *modulus;
    if (m == 1) {
      // A degree-1 modulus is harmless (GF(p)[x]/(x - c) = GF(p)); normalize it away.
      if (mod.size() != 2 || mod[1] != 1 || mod[0] >= p)
        throw InputError("modulus must be monic of degree m");
      mod.clear();
    } else {
      if (mod.size() != m + 1 || mod.back() != 1) throw InputError("modulus must be monic of degree m");
      for (unsigned c : mod)
        if (c >= p) throw InputError("modulus coefficient out of range");
      if (!zp_irreducible(mod, p)) throw InputError("modulus is reducible over GF(p)");
    }
  } else if (m >= 2) {
    std::uint64_t count = q;  // p^m low-coefficient choices
    for (std::uint64_t ord = 0; ord < count; ++ord) {
      ZpPoly g(m + 1, 0);
      std::uint64_t t = ord;
      for (unsigned i = 0; i < m; ++i) {
        g[i] = static_cast<unsigned>(t % p);
        t /= p;
      }
      g[m] = 1;
      if (zp_irreducible(g, p)) {
        mod = std::move(g);
        break;
      }
    }
  }
  return Field(new FieldCtx(p, m, std::move(mod)));
}

Field FieldCtx::parse(std::string_view spec) {
  std::string_view rest = spec;
  std::vector<unsigned> coeffs;
  bool have_mod = false;
  if (auto colon = rest.find(':'); colon != std::string_view::npos) {
    std::string_view list = rest.substr(colon + 1);
    rest = rest.substr(0, colon);
    have_mod = true;
    while (true) {
      auto comma = list.find(',');
      coeffs.push_back(parse_uint(list.substr(0, comma), "modulus coefficient"));
      if (comma == std::string_view::npos) break;
      list = list.substr(comma + 1);
    }
  }
  unsigned p = 0;
  unsigned m = 1;
  if (auto caret = rest.find('^'); caret != std::string_view::npos) {
    p = parse_uint(rest.substr(0, caret), "characteristic");
    m = parse_uint(rest.substr(caret + 1), "extension degree");
  } else {
    p = parse_uint(rest, "characteristic");
    // A bare prime power q is shorthand for p^m.
    if (p > 1 && p <= kMaxFieldSize && !is_prime_u64(p)) {
      unsigned base = 2;
      while (p % base != 0) ++base;
      unsigned k = 0;
      for (unsigned v = p; v % base == 0; v /= base) ++k;
      unsigned pw = 1;
      for (unsigned i = 0; i < k; ++i) pw *= base;
      if (pw == p) {
        p = base;
        m = k;
      }
    }
  }
  return create(p, m, have_mod ? &coeffs : nullptr);
}

FieldCtx::FieldCtx(unsigned p, unsigned m, std::vector<unsigned> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < m_; ++i) q_ *= p_;
  build_tables();
}

std::string FieldCtx::spec() const {
  std::ostringstream os;
  os << p_;
  if (m_ > 1) {
    os << '^' << m_ << ':';
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  }
  return os.str();
}

std::vector<unsigned> FieldCtx::digits(Elem a) const {
  std::vector<unsigned> d(m_, 0);
  unsigned v = a;
  for (unsigned i = 0; i < m_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

Elem FieldCtx::add_direct(Elem a, Elem b) const noexcept {
  unsigned x = a, y = b, r = 0, place = 1;
  for (unsigned i = 0; i < m_; ++i) {
    r += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return static_cast<Elem>(r);
}

Elem FieldCtx::mul_direct(Elem a, Elem b) const {
  if (m_ == 1) return static_cast<Elem>(static_cast<unsigned>(a) * b % p_);
  ZpPoly prod = zp_mul(digits_of(a, p_, m_), digits_of(b, p_, m_), p_);
  return static_cast<Elem>(index_of(zp_rem(prod, modulus_, p_), p_));
}

Elem FieldCtx::inv_euclid(Elem a) const {
  if (a == 0) throw InputError("inversion of zero");
  if (m_ == 1) return static_cast<Elem>(inv_mod_p(a, p_));
  // s*a + t*mod = gcd, tracking only s.
  ZpPoly r0 = modulus_, r1 = digits_of(a, p_, m_);
  ZpPoly s0, s1{1};
  while (!r1.empty()) {
    ZpPoly qt = zp_divq(r0, r1, p_);
    ZpPoly r2 = zp_sub(r0, zp_mul(qt, r1, p_), p_);
    ZpPoly s2 = zp_sub(s0, zp_mul(qt, s1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  const unsigned c = inv_mod_p(r0[0], p_);
  for (auto& v : s0) v = v * c % p_;
  return static_cast<Elem>(index_of(s0, p_));
}

void FieldCtx::build_tables() {
  const std::size_t qq = static_cast<std::size_t>(q_) * q_;
  add_.resize(qq);
  mul_.resize(qq);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  root_.resize(q_);
  for (unsigned a = 0; a < q_; ++a) {
    for (unsigned b = 0; b < q_; ++b) {
      add_[a * q_ + b] = add_direct(static_cast<Elem>(a), static_cast<Elem>(b));
      mul_[a * q_ + b] = mul_direct(static_cast<Elem>(a), static_cast<Elem>(b));
    }
  }
  for (unsigned a = 0; a < q_; ++a) {
    for (unsigned b = 0; b < q_; ++b) {
      if (add_[a * q_ + b] == 0) neg_[a] = static_cast<Elem>(b);
    }
    if (a != 0) inv_[a] = inv_euclid(static_cast<Elem>(a));
  }
  // a^(q/p) is the inverse of Frobenius.
  for (unsigned a = 0; a < q_; ++a) root_[a] = pow(static_cast<Elem>(a), q_ / p_);
}

Elem FieldCtx::inv(Elem a) const {
  if (a == 0) throw InputError("inversion of zero");
  return inv_[a];
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = 1, base = a;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

FieldElem::FieldElem(Field field, unsigned index) : field_(std::move(field)), index_(0) {
  if (!field_) throw InputError("field element without a field");
  if (index >= field_->q()) throw InputError("element index out of range");
  index_ = static_cast<Elem>(index);
}

namespace {
const FieldCtx& common(const FieldElem& a, const FieldElem& b) {
  if (!a.field()->same_as(*b.field())) throw InputError("field elements from different fields");
  return *a.field();
}
}  // namespace

FieldElem FieldElem::inv() const { return FieldElem(field_, field_->inv(index_)); }
FieldElem FieldElem::pow(std::uint64_t e) const { return FieldElem(field_, field_->pow(index_, e)); }

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  return FieldElem(a.field_, common(a, b).add(a.index_, b.index_));
}
FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  return FieldElem(a.field_, common(a, b).sub(a.index_, b.index_));
}
FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  return FieldElem(a.field_, common(a, b).mul(a.index_, b.index_));
}
FieldElem operator-(const FieldElem& a) { return FieldElem(a.field_, a.field_->neg(a.index_)); }
bool operator==(const FieldElem& a, const FieldElem& b) {
  return common(a, b).q() != 0 && a.index_ == b.index_;
}

}  // namespace ffcensus
