#pragma once

#include <string>

#include <gmpxx.h>

namespace ffcensus {

// "num/den" in lowest terms; integers render as "n/1".
std::string exact_string(const mpq_class& v);

// Fixed-point rendering with round-half-even; display only.
std::string decimal_string(const mpq_class& v, unsigned places = 6);

// The nonnegative real sqrt(square). Used for q^(n/2)/n, which is irrational
// for odd n and non-square q, so comparisons go through squares.
class SqrtRational {
 public:
  SqrtRational() = default;
  explicit SqrtRational(mpq_class square);

  const mpq_class& square() const noexcept { return square_; }
  // Exact comparisons against a nonnegative rational.
  bool exceeds(const mpq_class& r) const;  // sqrt(square) > r
  std::string exact_string() const;         // "sqrt(num/den)"
  std::string decimal_string(unsigned places = 6) const;

 private:
  mpq_class square_ = 0;
};

}  // namespace ffcensus
