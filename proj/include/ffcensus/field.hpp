#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ffcensus/errors.hpp"

namespace ffcensus {

// Canonical encoding of a field element: the integer whose base-p digits are
// the coefficients of the residue representative (lowest degree first).
using Elem = std::uint8_t;

// Largest supported field; every arithmetic table is q*q bytes.
inline constexpr unsigned kMaxFieldSize = 256;

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

// GF(p^m) with a fixed monic irreducible modulus over GF(p). Immutable after
// construction and safe to share between threads.
class FieldCtx {
 public:
  // If m >= 2 and no modulus is given, the first monic irreducible of degree
  // m in ordinal order (sum c_i p^i over the low coefficients) is chosen.
  static Field create(unsigned p, unsigned m, const std::vector<unsigned>* modulus = nullptr);

  // "p", "p^m" or "p^m:c0,c1,...,cm".
  static Field parse(std::string_view spec);

  unsigned p() const noexcept { return p_; }
  unsigned m() const noexcept { return m_; }
  unsigned q() const noexcept { return q_; }
  mpz_class size() const { return mpz_class(q_); }
  bool is_prime_field() const noexcept { return m_ == 1; }

  // Modulus coefficients over Z_p, lowest degree first; empty when m == 1.
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  // Canonical spec string, always parseable by parse(). Prime fields render
  // as "p", extension fields as "p^m:c0,...,cm".
  std::string spec() const;

  bool same_as(const FieldCtx& other) const noexcept {
    return this == &other || (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
  }

  Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const noexcept { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  // Throws InputError for a == 0.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  // Unique b with b^p == a (Frobenius is a bijection on a finite field).
  Elem pth_root(Elem a) const noexcept { return root_[a]; }

  // Table-free paths; the tables above are built from these and must agree
  // bit for bit.
  Elem add_direct(Elem a, Elem b) const noexcept;
  Elem mul_direct(Elem a, Elem b) const;
  Elem inv_euclid(Elem a) const;

  std::span<const Elem> add_table() const noexcept { return add_; }
  std::span<const Elem> mul_table() const noexcept { return mul_; }
  std::span<const Elem> neg_table() const noexcept { return neg_; }
  std::span<const Elem> inv_table() const noexcept { return inv_; }

  // Base-p digits of an element index (length m).
  std::vector<unsigned> digits(Elem a) const;

 private:
  FieldCtx(unsigned p, unsigned m, std::vector<unsigned> modulus);
  void build_tables();

  unsigned p_;
  unsigned m_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<Elem> root_;
};

// Trial-division primality for small integers.
bool is_prime_u64(std::uint64_t n) noexcept;

// A field element bound to its context. Mixing contexts throws InputError.
class FieldElem {
 public:
  FieldElem(Field field, unsigned index);

  static FieldElem zero(Field field) { return FieldElem(std::move(field), 0); }
  static FieldElem one(Field field) { return FieldElem(std::move(field), 1); }

  Elem index() const noexcept { return index_; }
  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return index_ == 0; }

  FieldElem inv() const;
  FieldElem pow(std::uint64_t e) const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a);
  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  Field field_;
  Elem index_;
};

}  // namespace ffcensus
