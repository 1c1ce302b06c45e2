#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ffcensus/poly.hpp"

namespace ffcensus::kernels {

// Largest degree the fixed-capacity scan kernels accept.
inline constexpr unsigned kMaxScanDegree = 62;

// Per-residue totals over all monic f of degree n, indexed by the coefficient
// ordinal of (f mod k). There are q^deg(k) residues.
struct ClassTotals {
  unsigned n = 0;
  std::vector<std::uint64_t> lambda_sum;   // sum of Lambda(f) in the class
  std::vector<std::uint64_t> prime_count;  // irreducible f in the class

  std::uint64_t lambda_total() const noexcept;
  std::uint64_t prime_total() const noexcept;
  friend bool operator==(const ClassTotals&, const ClassTotals&) = default;
};

// Reference path: MonicEnumerator + lambda_poly (factorization) +
// is_irreducible (Rabin) + divrem, one polynomial at a time.
ClassTotals scan_classes_serial(const Poly& k, unsigned n, std::uint64_t budget = kDefaultBudget);

// OpenMP path over ordinal chunks with fixed-size polynomials; threads <= 0
// means the OpenMP default. Integer accumulation makes the result independent
// of the thread count and schedule.
ClassTotals scan_classes_parallel(const Poly& k, unsigned n, std::uint64_t budget = kDefaultBudget,
                                  int threads = 0);

// Kernel-level evaluators on a monic coefficient vector (lowest degree first,
// last entry 1). Exposed for cross-checking against the reference path.
unsigned lambda_fast(const FieldCtx& ctx, std::span<const Elem> monic);
bool irreducible_fast(const FieldCtx& ctx, std::span<const Elem> monic);

}  // namespace ffcensus::kernels
