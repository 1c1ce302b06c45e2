#include <charconv>

#include "ffcensus/cli.hpp"
#include "ffcensus/field.hpp"

namespace ffcensus::cli {

namespace {

unsigned parse_degree(std::string_view s, std::string_view whole) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError("bad degree range '" + std::string(whole) + "' (expected lo..hi)");
  }
  return v;
}

}  // namespace

NRange parse_n_range(std::string_view text) {
  NRange r;
  if (auto dots = text.find(".."); dots != std::string_view::npos) {
    r.lo = parse_degree(text.substr(0, dots), text);
    r.hi = parse_degree(text.substr(dots + 2), text);
  } else {
    r.lo = r.hi = parse_degree(text, text);
  }
  if (r.lo > r.hi) throw InputError("empty degree range '" + std::string(text) + "'");
  return r;
}

std::vector<unsigned> selected_degrees(const NRange& range, bool primes_only) {
  std::vector<unsigned> out;
  for (unsigned n = range.lo; n <= range.hi; ++n)
    if (!primes_only || is_prime_u64(n)) out.push_back(n);
  return out;
}

}  // namespace ffcensus::cli
