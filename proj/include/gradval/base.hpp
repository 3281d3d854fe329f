#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradval {

using Int = mpz_class;
using Rat = mpq_class;

// Malformed or contradictory input data (files, CLI arguments, bad payloads).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A checked internal invariant failed; indicates a bug, not bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Interval refinement hit its cap without separating two values. Either a
// declared-independent constant set is not actually independent or a custom
// constant's interval list is too short. Never silently guessed around.
struct precision_exhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw input_error(msg);
}

inline void check_internal(bool ok, const std::string& msg) {
  if (!ok) throw internal_error(msg);
}

// Parses "n" or "n/d" with optional sign; rejects anything else.
Rat parse_rat(const std::string& s);

std::string to_string(const Int& z);
std::string to_string(const Rat& q);

// Least common multiple of the denominators, always positive.
Int common_denominator(const std::vector<Rat>& qs);

// Conversion for quantities that must stay at desk scale (loop bounds, sieve
// sizes, group orders); failing the fit is an internal invariant violation.
long to_long(const Int& z, const char* what);

int sign(const Rat& q);
int sign(const Int& z);

// SplitMix64 step; spreads one seed into independent per-index streams so
// parallel and serial runs draw identical values.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace gradval
