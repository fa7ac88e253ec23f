#include "linkhom/betti.hpp"

#include <algorithm>

namespace linkhom {

std::int64_t euler_characteristic(const BettiVector& bv) {
  std::int64_t chi = 0;
  for (std::size_t j = 0; j < bv.ranks.size(); ++j) chi += (j % 2 == 0 ? 1 : -1) * bv.ranks[j];
  return chi;
}

bool same_homology(const BettiVector& a, const BettiVector& b) {
  const std::size_t n = std::max(a.ranks.size(), b.ranks.size());
  for (std::size_t j = 0; j < n; ++j) {
    const auto x = j < a.ranks.size() ? a.ranks[j] : 0;
    const auto y = j < b.ranks.size() ? b.ranks[j] : 0;
    if (x != y) return false;
  }
  return a.torsion == b.torsion;
}

std::string format_ranks(const std::vector<std::int64_t>& ranks) {
  std::string out = "(";
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ranks[i]);
  }
  return out + ")";
}

}  // namespace linkhom
