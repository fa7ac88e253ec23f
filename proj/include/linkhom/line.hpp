#pragma once

#include <cstdint>
#include <vector>

#include "linkhom/arm.hpp"
#include "linkhom/betti.hpp"
#include "linkhom/rational.hpp"

namespace linkhom::line {

/// a_j, b_j indexed by j = 0..k.
struct AbCounts {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;

  friend bool operator==(const AbCounts&, const AbCounts&) = default;
};

/// a_j counts J with |J| = j and r_J <= -|h|; b_j counts |J| = j and r_J > |h|.
AbCounts count_ab(const arm::CriticalSpectrum& spec, const Rational& h);

/// ranks[j] = a_j + b_{j+1}, j = 0..k-1.
BettiVector betti_from_ab(const AbCounts& ab);

/// Homology of the arm's motion space with the end vertex on y = h. The
/// linkage is normalized internally and h rescaled by the same factor.
BettiVector betti_line(const arm::Linkage& link, const Rational& h);

/// Sublevel/supralevel families of the height function at h:
///   U_j = {J : |J| = j, r_J <= h}      (u_J lies in the sublevel set)
///   V_j = {J : |J| = j, r_J <= -h}     (v_J = u_{J^c} lies in the supralevel set,
///                                       since -s_2(v_J) = r_J)
/// With this convention a_j = |U_j ∩ V_j| and b_j = |(U_j ∪ V_j)^c| for every h.
struct UvFamilies {
  std::vector<std::vector<arm::SubsetMask>> U;
  std::vector<std::vector<arm::SubsetMask>> V;
};

UvFamilies uv_families(const arm::CriticalSpectrum& spec, const Rational& h);

/// (a, b) recovered from the families by set intersection and union.
AbCounts ab_from_families(const UvFamilies& families, std::size_t k);

}  // namespace linkhom::line
