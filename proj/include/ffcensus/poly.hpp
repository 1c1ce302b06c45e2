#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ffcensus/field.hpp"

namespace ffcensus {

// Default cap on the number of states an exhaustive scan may visit.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

// Dense polynomial over a finite field, coefficients lowest degree first.
// Always canonical: no trailing zero coefficients, so the zero polynomial has
// an empty coefficient vector and degree kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  explicit Poly(Field field);
  Poly(Field field, std::vector<Elem> coeffs);

  static Poly constant(Field field, Elem c);
  static Poly one(Field field) { return constant(std::move(field), 1); }
  static Poly x(Field field) { return monomial(std::move(field), 1, 1); }
  static Poly monomial(Field field, Elem c, unsigned degree);

  const Field& field() const noexcept { return field_; }
  const FieldCtx& ctx() const noexcept { return *field_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Elem lead() const noexcept { return coeffs_.empty() ? Elem{0} : coeffs_.back(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  Elem operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Elem{0}; }
  std::span<const Elem> coeffs() const noexcept { return coeffs_; }

  // Scaled by the inverse of the leading coefficient; throws on zero.
  Poly monic() const;
  Poly scaled(Elem c) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void canonicalize() noexcept;

  Field field_;
  std::vector<Elem> coeffs_;
};

// Throws InputError if a and b live over different fields.
const FieldCtx& require_same_field(const Poly& a, const Poly& b);

struct DivRem {
  Poly quotient;
  Poly remainder;
};

DivRem divrem(const Poly& a, const Poly& b);
Poly rem(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) throws.
Poly gcd(const Poly& a, const Poly& b);
// base^e mod m by square-and-multiply; m must be nonconstant.
Poly powmod(const Poly& base, const mpz_class& e, const Poly& m);
Poly pow(const Poly& base, unsigned e);
Poly derivative(const Poly& a);
// Inverse of a modulo k, or nullopt when gcd(a, k) != 1. For k == 1 the
// only residue is 0 and the inverse is 0.
std::optional<Poly> inverse_mod(const Poly& a, const Poly& k);

// Sum c_i q^i over all coefficients (the integer whose base-q digits are the
// coefficients). Injective on polynomials of a fixed field.
mpz_class coeff_ordinal(const Poly& a);
std::uint64_t coeff_ordinal_u64(const Poly& a);
Poly from_coeff_ordinal(Field field, std::uint64_t ordinal);

// Monic polynomial of degree n <-> ordinal in [0, q^n): the ordinal's base-q
// digits are the n low coefficients.
struct MonicIndex {
  unsigned degree = 0;
  mpz_class ordinal;
};

MonicIndex monic_index(const Poly& f);
Poly from_monic_index(Field field, const MonicIndex& idx);

// Sort key used wherever polynomials are listed: degree, then ordinal.
bool ordinal_less(const Poly& a, const Poly& b);

// q^n as a checked 64-bit count, or BudgetError if it exceeds `budget`.
std::uint64_t monic_count_within(const FieldCtx& ctx, unsigned n, std::uint64_t budget);

// Stream of the monic polynomials of degree n with ordinal in [lo, hi), in
// increasing ordinal order.
class MonicEnumerator {
 public:
  MonicEnumerator(Field field, unsigned n, std::uint64_t budget = kDefaultBudget);
  MonicEnumerator(Field field, unsigned n, std::uint64_t lo, std::uint64_t hi,
                  std::uint64_t budget = kDefaultBudget);

  std::uint64_t size() const noexcept { return hi_ - lo_; }
  // Returns false once the range is exhausted.
  bool next(Poly& out);

 private:
  Field field_;
  unsigned n_;
  std::uint64_t lo_, hi_, pos_;
  std::vector<Elem> low_;
};

std::vector<Poly> monic_enumerate(Field field, unsigned n, std::uint64_t budget = kDefaultBudget);
std::vector<Poly> monic_enumerate(Field field, unsigned n, std::uint64_t lo, std::uint64_t hi,
                                  std::uint64_t budget = kDefaultBudget);

// Text forms. Symbolic ("x^3+x+1", "2*x^2+1") for prime fields; coefficient
// form ("1,2,1", lowest degree first) for every field.
Poly parse_poly(Field field, std::string_view text);
// Symbolic for prime fields, coefficient form otherwise.
std::string format_poly(const Poly& p);
std::string format_coeffs(const Poly& p);

}  // namespace ffcensus
