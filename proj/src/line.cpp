#include "linkhom/line.hpp"

#include <algorithm>
#include <iterator>

namespace linkhom::line {

using arm::CriticalSpectrum;
using arm::SubsetMask;

namespace {

std::int64_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  std::int64_t c = 1;
  for (std::size_t i = 1; i <= r; ++i) c = c * static_cast<std::int64_t>(n - r + i) / static_cast<std::int64_t>(i);
  return c;
}

}  // namespace

AbCounts count_ab(const CriticalSpectrum& spec, const Rational& h) {
  const std::size_t k = spec.k();
  const Rational level = h.abs();
  // r_J <= -|h|  <=>  num_J <= floor(-|h| D);   r_J > |h|  <=>  num_J > floor(|h| D)
  const std::int64_t low = spec.floor_scaled(-level);
  const std::int64_t high = spec.floor_scaled(level);
  AbCounts ab{std::vector<std::int64_t>(k + 1, 0), std::vector<std::int64_t>(k + 1, 0)};
  for (std::uint32_t m = 0; m < spec.size(); ++m) {
    const SubsetMask mask(m);
    const std::int64_t num = spec.numerator(mask);
    const auto j = static_cast<std::size_t>(mask.cardinality());
    if (num <= low) ++ab.a[j];
    if (num > high) ++ab.b[j];
  }
  return ab;
}

BettiVector betti_from_ab(const AbCounts& ab) {
  const std::size_t k = ab.a.size() - 1;
  BettiVector bv;
  bv.ranks.resize(k, 0);
  for (std::size_t j = 0; j < k; ++j) bv.ranks[j] = ab.a[j] + ab.b[j + 1];
  return bv;
}

BettiVector betti_line(const arm::Linkage& link, const Rational& h) {
  const auto normalized = arm::normalize(link);
  const auto spec = arm::spectrum(normalized.linkage);
  return betti_from_ab(count_ab(spec, h * normalized.scale));
}

UvFamilies uv_families(const CriticalSpectrum& spec, const Rational& h) {
  const std::size_t k = spec.k();
  const std::int64_t u_cut = spec.floor_scaled(h);
  const std::int64_t v_cut = spec.floor_scaled(-h);
  UvFamilies f{std::vector<std::vector<SubsetMask>>(k + 1), std::vector<std::vector<SubsetMask>>(k + 1)};
  for (std::uint32_t m = 0; m < spec.size(); ++m) {
    const SubsetMask mask(m);
    const std::int64_t num = spec.numerator(mask);
    const auto j = static_cast<std::size_t>(mask.cardinality());
    if (num <= u_cut) f.U[j].push_back(mask);
    if (num <= v_cut) f.V[j].push_back(mask);
  }
  return f;
}

AbCounts ab_from_families(const UvFamilies& families, std::size_t k) {
  AbCounts ab{std::vector<std::int64_t>(k + 1, 0), std::vector<std::int64_t>(k + 1, 0)};
  for (std::size_t j = 0; j <= k; ++j) {
    const auto& u = families.U[j];
    const auto& v = families.V[j];
    std::vector<SubsetMask> both;
    std::vector<SubsetMask> either;
    std::set_intersection(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(both));
    std::set_union(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(either));
    ab.a[j] = static_cast<std::int64_t>(both.size());
    ab.b[j] = binomial(k, j) - static_cast<std::int64_t>(either.size());
  }
  return ab;
}

}  // namespace linkhom::line
