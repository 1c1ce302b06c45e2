#include "ffcensus/poly.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace ffcensus {

Poly::Poly(Field field) : field_(std::move(field)) {
  if (!field_) throw InputError("polynomial without a field");
}

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw InputError("polynomial without a field");
  for (Elem c : coeffs_)
    if (c >= field_->q()) throw InputError("coefficient out of range");
  canonicalize();
}

Poly Poly::constant(Field field, Elem c) { return Poly(std::move(field), std::vector<Elem>{c}); }

Poly Poly::monomial(Field field, Elem c, unsigned degree) {
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = c;
  return Poly(std::move(field), std::move(v));
}

void Poly::canonicalize() noexcept {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monic() const {
  if (is_zero()) throw InputError("cannot normalize the zero polynomial");
  return scaled(field_->inv(lead()));
}

Poly Poly::scaled(Elem c) const {
  Poly r(*this);
  for (auto& v : r.coeffs_) v = field_->mul(v, c);
  r.canonicalize();
  return r;
}

const FieldCtx& require_same_field(const Poly& a, const Poly& b) {
  if (!a.ctx().same_as(b.ctx())) throw InputError("polynomials over different fields");
  return a.ctx();
}

Poly operator+(const Poly& a, const Poly& b) {
  const FieldCtx& F = require_same_field(a, b);
  std::vector<Elem> r(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(a[i], b[i]);
  Poly out(a.field_);
  out.coeffs_ = std::move(r);
  out.canonicalize();
  return out;
}

Poly operator-(const Poly& a, const Poly& b) {
  const FieldCtx& F = require_same_field(a, b);
  std::vector<Elem> r(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a[i], b[i]);
  Poly out(a.field_);
  out.coeffs_ = std::move(r);
  out.canonicalize();
  return out;
}

Poly operator-(const Poly& a) {
  Poly out(a);
  for (auto& v : out.coeffs_) v = a.field_->neg(v);
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  const FieldCtx& F = require_same_field(a, b);
  Poly out(a.field_);
  if (a.is_zero() || b.is_zero()) return out;
  std::vector<Elem> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
  }
  out.coeffs_ = std::move(r);
  out.canonicalize();
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.ctx().same_as(b.ctx()) && a.coeffs_ == b.coeffs_;
}

DivRem divrem(const Poly& a, const Poly& b) {
  const FieldCtx& F = require_same_field(a, b);
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Elem> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  if (a.degree() < db) return {Poly(a.field()), a};
  std::vector<Elem> quot(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const Elem lead_inv = F.inv(b.lead());
  for (int i = a.degree(); i >= db; --i) {
    const Elem c = F.mul(r[i], lead_inv);
    if (c == 0) continue;
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b[j]));
  }
  r.resize(db);
  return {Poly(a.field(), std::move(quot)), Poly(a.field(), std::move(r))};
}

Poly rem(const Poly& a, const Poly& b) { return divrem(a, b).remainder; }

Poly gcd(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (a.is_zero() && b.is_zero()) throw InputError("gcd(0, 0) is undefined");
  Poly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Poly r2 = rem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return r0.monic();
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& m) {
  require_same_field(base, m);
  if (m.degree() < 1) throw InputError("powmod needs a nonconstant modulus");
  if (e < 0) throw InputError("negative exponent");
  Poly result = Poly::one(base.field());
  Poly b = rem(base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(result * result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(result * b, m);
  }
  return result;
}

Poly pow(const Poly& base, unsigned e) {
  Poly result = Poly::one(base.field());
  Poly b = base;
  while (e != 0) {
    if (e & 1U) result = result * b;
    e >>= 1U;
    if (e != 0) b = b * b;
  }
  return result;
}

Poly derivative(const Poly& a) {
  const FieldCtx& F = a.ctx();
  if (a.degree() < 1) return Poly(a.field());
  std::vector<Elem> d(static_cast<std::size_t>(a.degree()), 0);
  for (int i = 1; i <= a.degree(); ++i) {
    // i * a_i: repeated addition of a_i, i mod p times.
    Elem acc = 0;
    for (unsigned t = 0; t < static_cast<unsigned>(i) % F.p(); ++t) acc = F.add(acc, a[i]);
    d[i - 1] = acc;
  }
  return Poly(a.field(), std::move(d));
}

std::optional<Poly> inverse_mod(const Poly& a, const Poly& k) {
  require_same_field(a, k);
  if (k.is_zero()) throw InputError("inverse modulo zero");
  if (k.degree() == 0) return Poly(a.field());
  Poly r0 = k, r1 = rem(a, k);
  Poly s0(a.field()), s1 = Poly::one(a.field());
  while (!r1.is_zero()) {
    DivRem qr = divrem(r0, r1);
    Poly s2 = s0 - qr.quotient * s1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) return std::nullopt;
  return rem(s0.scaled(a.ctx().inv(r0.lead())), k);
}

mpz_class coeff_ordinal(const Poly& a) {
  mpz_class r = 0;
  const unsigned q = a.ctx().q();
  for (int i = a.degree(); i >= 0; --i) r = r * q + a[i];
  return r;
}

std::uint64_t coeff_ordinal_u64(const Poly& a) {
  std::uint64_t r = 0;
  const unsigned q = a.ctx().q();
  for (int i = a.degree(); i >= 0; --i) r = r * q + a[i];
  return r;
}

Poly from_coeff_ordinal(Field field, std::uint64_t ordinal) {
  const unsigned q = field->q();
  std::vector<Elem> c;
  while (ordinal != 0) {
    c.push_back(static_cast<Elem>(ordinal % q));
    ordinal /= q;
  }
  return Poly(std::move(field), std::move(c));
}

MonicIndex monic_index(const Poly& f) {
  if (!f.is_monic()) throw InputError("monic index of a non-monic polynomial");
  MonicIndex idx;
  idx.degree = static_cast<unsigned>(f.degree());
  const unsigned q = f.ctx().q();
  for (int i = f.degree() - 1; i >= 0; --i) idx.ordinal = idx.ordinal * q + f[i];
  return idx;
}

Poly from_monic_index(Field field, const MonicIndex& idx) {
  const unsigned q = field->q();
  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), q, idx.degree);
  if (idx.ordinal < 0 || idx.ordinal >= bound) throw InputError("monic ordinal out of range");
  std::vector<Elem> c(idx.degree + 1, 0);
  mpz_class t = idx.ordinal;
  for (unsigned i = 0; i < idx.degree; ++i) {
    c[i] = static_cast<Elem>(mpz_class(t % q).get_ui());
    t /= q;
  }
  c[idx.degree] = 1;
  return Poly(std::move(field), std::move(c));
}

bool ordinal_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::uint64_t monic_count_within(const FieldCtx& ctx, unsigned n, std::uint64_t budget) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (count > budget / ctx.q()) {
      throw BudgetError("q^" + std::to_string(n) + " states exceed the enumeration budget of " +
                        std::to_string(budget));
    }
    count *= ctx.q();
  }
  if (count > budget) {
    throw BudgetError("q^" + std::to_string(n) + " states exceed the enumeration budget of " +
                      std::to_string(budget));
  }
  return count;
}

MonicEnumerator::MonicEnumerator(Field field, unsigned n, std::uint64_t budget)
    : MonicEnumerator(field, n, 0, monic_count_within(*field, n, budget), budget) {}

MonicEnumerator::MonicEnumerator(Field field, unsigned n, std::uint64_t lo, std::uint64_t hi,
                                 std::uint64_t budget)
    : field_(std::move(field)), n_(n), lo_(lo), hi_(hi), pos_(lo), low_(n, 0) {
  const std::uint64_t total = monic_count_within(*field_, n_, budget);
  if (lo_ > hi_ || hi_ > total) throw InputError("enumeration sub-range out of bounds");
  std::uint64_t t = lo_;
  for (unsigned i = 0; i < n_; ++i) {
    low_[i] = static_cast<Elem>(t % field_->q());
    t /= field_->q();
  }
}

bool MonicEnumerator::next(Poly& out) {
  if (pos_ == hi_) return false;
  std::vector<Elem> c(low_);
  c.push_back(1);
  out = Poly(field_, std::move(c));
  ++pos_;
  const unsigned q = field_->q();
  for (unsigned i = 0; i < n_; ++i) {
    if (low_[i] + 1U < q) {
      ++low_[i];
      break;
    }
    low_[i] = 0;
  }
  return true;
}

std::vector<Poly> monic_enumerate(Field field, unsigned n, std::uint64_t budget) {
  const std::uint64_t total = monic_count_within(*field, n, budget);
  return monic_enumerate(std::move(field), n, 0, total, budget);
}

std::vector<Poly> monic_enumerate(Field field, unsigned n, std::uint64_t lo, std::uint64_t hi,
                                  std::uint64_t budget) {
  MonicEnumerator e(field, n, lo, hi, budget);
  std::vector<Poly> out;
  out.reserve(e.size());
  Poly f(field);
  while (e.next(f)) out.push_back(f);
  return out;
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s.push_back(ch);
  return s;
}

unsigned parse_number(std::string_view s, std::string_view context) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError("malformed polynomial: bad number '" + std::string(s) + "' in '" + std::string(context) + "'");
  }
  return v;
}

Poly parse_coeff_form(Field field, std::string_view s) {
  if (s == "0") return Poly(field);
  std::vector<Elem> c;
  while (true) {
    auto comma = s.find(',');
    const unsigned v = parse_number(s.substr(0, comma), s);
    if (v >= field->q()) throw InputError("coefficient " + std::to_string(v) + " out of range");
    c.push_back(static_cast<Elem>(v));
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  if (c.back() == 0) throw InputError("malformed polynomial: trailing zero coefficient");
  return Poly(std::move(field), std::move(c));
}

Poly parse_symbolic(Field field, std::string_view s) {
  const std::string_view whole = s;
  std::map<unsigned, Elem> terms;
  while (true) {
    auto plus = s.find('+');
    std::string_view term = s.substr(0, plus);
    if (term.empty()) throw InputError("malformed polynomial: empty term in '" + std::string(whole) + "'");
    unsigned coef = 1;
    unsigned expo = 0;
    auto xpos = term.find('x');
    if (xpos == std::string_view::npos) {
      coef = parse_number(term, whole);
    } else {
      if (xpos > 0) {
        if (term[xpos - 1] != '*') throw InputError("malformed polynomial: expected '*' before x");
        coef = parse_number(term.substr(0, xpos - 1), whole);
      }
      std::string_view tail = term.substr(xpos + 1);
      if (tail.empty()) {
        expo = 1;
      } else {
        if (tail[0] != '^') throw InputError("malformed polynomial: unexpected text after x");
        expo = parse_number(tail.substr(1), whole);
      }
    }
    if (coef >= field->q()) throw InputError("coefficient " + std::to_string(coef) + " out of range");
    if (coef == 0) throw InputError("malformed polynomial: zero coefficient term");
    if (!terms.emplace(expo, static_cast<Elem>(coef)).second) {
      throw InputError("malformed polynomial: non-canonical duplicate term x^" + std::to_string(expo));
    }
    if (plus == std::string_view::npos) break;
    s = s.substr(plus + 1);
  }
  std::vector<Elem> c(terms.rbegin()->first + 1, 0);
  for (auto [e, v] : terms) c[e] = v;
  return Poly(std::move(field), std::move(c));
}

}  // namespace

Poly parse_poly(Field field, std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw InputError("malformed polynomial: empty text");
  if (s.find('x') != std::string::npos) {
    if (!field->is_prime_field()) {
      throw InputError("symbolic polynomial form needs a prime field; use coefficient form");
    }
    return parse_symbolic(std::move(field), s);
  }
  return parse_coeff_form(std::move(field), s);
}

std::string format_coeffs(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  for (int i = 0; i <= p.degree(); ++i) os << (i ? "," : "") << static_cast<unsigned>(p[i]);
  return os.str();
}

std::string format_poly(const Poly& p) {
  if (!p.ctx().is_prime_field()) return format_coeffs(p);
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const unsigned c = p[i];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace ffcensus
