#include "ffcensus/numfmt.hpp"

#include "ffcensus/errors.hpp"

namespace ffcensus {

namespace {

mpz_class pow10(unsigned places) {
  mpz_class s;
  mpz_ui_pow_ui(s.get_mpz_t(), 10, places);
  return s;
}

// Renders the integer `scaled` as a decimal with `places` fractional digits.
std::string place_point(mpz_class scaled, unsigned places) {
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (places > 0) {
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    digits.insert(digits.size() - places, ".");
  }
  return (negative && scaled != 0 ? "-" : "") + digits;
}

}  // namespace

std::string exact_string(const mpq_class& v) {
  mpq_class c(v);
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string decimal_string(const mpq_class& v, unsigned places) {
  mpq_class scaled = v * pow10(places);
  mpz_class num = scaled.get_num(), den = scaled.get_den();
  mpz_class fl, r;
  mpz_fdiv_qr(fl.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  // Compare the fractional part r/den with 1/2.
  const mpz_class twice = 2 * r;
  if (twice > den || (twice == den && mpz_odd_p(fl.get_mpz_t()))) fl += 1;
  return place_point(fl, places);
}

SqrtRational::SqrtRational(mpq_class square) : square_(std::move(square)) {
  square_.canonicalize();
  if (square_ < 0) throw InputError("square root of a negative rational");
}

bool SqrtRational::exceeds(const mpq_class& r) const {
  if (r < 0) return true;
  return square_ > r * r;
}

std::string SqrtRational::exact_string() const { return "sqrt(" + ffcensus::exact_string(square_) + ")"; }

std::string SqrtRational::decimal_string(unsigned places) const {
  // x = square * 10^(2 places); floor(sqrt(x)) = isqrt(floor(x)).
  const mpq_class x = square_ * pow10(2 * places);
  mpz_class fx;
  mpz_fdiv_q(fx.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  mpz_class k;
  mpz_sqrt(k.get_mpz_t(), fx.get_mpz_t());
  // sqrt(x) vs k + 1/2  <=>  4x vs (2k+1)^2.
  const mpq_class four_x = 4 * x;
  const mpz_class odd = 2 * k + 1;
  const mpq_class half_sq(odd * odd);
  if (four_x > half_sq || (four_x == half_sq && mpz_odd_p(k.get_mpz_t()))) k += 1;
  return place_point(k, places);
}

}  // namespace ffcensus
