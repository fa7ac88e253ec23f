#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace linkhom {

struct TorsionEntry {
  int degree = 0;
  std::vector<mpz_class> factors;  // invariant factors > 1

  friend bool operator==(const TorsionEntry&, const TorsionEntry&) = default;
};

/// Ranks of H_0, H_1, ... plus any torsion found. The formula paths always
/// report empty torsion: the homology of these spaces is free.
struct BettiVector {
  std::vector<std::int64_t> ranks;
  std::vector<TorsionEntry> torsion;

  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// Alternating sum of ranks.
std::int64_t euler_characteristic(const BettiVector& bv);

/// Element-wise equality after padding the shorter vector with zeros, plus
/// equal torsion.
bool same_homology(const BettiVector& a, const BettiVector& b);

std::string format_ranks(const std::vector<std::int64_t>& ranks);

}  // namespace linkhom
