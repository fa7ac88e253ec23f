#include "linkhom/arm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <limits>

#include "linkhom/error.hpp"

namespace linkhom::arm {

Linkage::Linkage(std::vector<Rational> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.empty()) throw Error(ErrorKind::input, "empty_linkage", "a linkage needs at least one edge");
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (lengths_[i].sign() <= 0) {
      throw Error(ErrorKind::input, "nonpositive_length",
                  "edge " + std::to_string(i + 1) + " has non-positive length " + lengths_[i].to_string());
    }
  }
}

Linkage Linkage::parse(std::span<const std::string> literals) {
  std::vector<Rational> lengths;
  lengths.reserve(literals.size());
  for (const auto& s : literals) lengths.push_back(Rational::parse(s));
  return Linkage(std::move(lengths));
}

Linkage Linkage::parse_list(std::string_view csv) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    const auto end = comma == std::string_view::npos ? csv.size() : comma;
    parts.emplace_back(csv.substr(start, end - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parse(parts);
}

Rational Linkage::total() const {
  Rational sum;
  for (const auto& l : lengths_) sum += l;
  return sum;
}

std::vector<double> Linkage::lengths_as_double() const {
  std::vector<double> out;
  out.reserve(lengths_.size());
  for (const auto& l : lengths_) out.push_back(l.to_double());
  return out;
}

Normalized normalize(const Linkage& link) {
  const Rational scale = Rational(1) / link.total();
  std::vector<std::size_t> order(link.k());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Stable so equal lengths keep their original relative order.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return link[a] > link[b]; });
  std::vector<Rational> lengths;
  lengths.reserve(link.k());
  for (auto i : order) lengths.push_back(link[i] * scale);
  return Normalized{Linkage(std::move(lengths)), scale, std::move(order)};
}

std::string SubsetMask::to_string(std::size_t k) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < k; ++i) {
    if (!contains(i)) continue;
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

Rational CriticalSpectrum::r(SubsetMask mask) const {
  return Rational(mpz_class(static_cast<long>(numerator(mask))), denominator_);
}

CollinearConfig CriticalSpectrum::config(SubsetMask mask) const {
  return CollinearConfig{mask, r(mask), mask.cardinality()};
}

std::vector<CollinearConfig> CriticalSpectrum::configs() const {
  std::vector<CollinearConfig> out;
  out.reserve(size());
  for (std::uint32_t m = 0; m < size(); ++m) out.push_back(config(SubsetMask(m)));
  return out;
}

std::vector<Rational> CriticalSpectrum::critical_values() const {
  std::vector<std::int64_t> values(numerators_);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Rational> out;
  out.reserve(values.size());
  for (auto v : values) out.emplace_back(mpz_class(static_cast<long>(v)), denominator_);
  return out;
}

std::int64_t CriticalSpectrum::floor_scaled(const Rational& x) const {
  mpz_class scaled = x.numerator() * denominator_;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.denominator().get_mpz_t());
  // |numerators| never exceed bound, so clamping keeps every comparison intact.
  const long bound = std::numeric_limits<std::int64_t>::max() / 4;
  if (q > bound) return bound;
  if (q < -bound) return -bound;
  return q.get_si();
}

CriticalSpectrum spectrum(const Linkage& link, std::size_t cap) {
  const std::size_t k = link.k();
  if (k > cap || k > 31) {
    throw Error(ErrorKind::input, "enumeration_too_large",
                "subset enumeration too large: k = " + std::to_string(k) + " exceeds cap " +
                    std::to_string(std::min<std::size_t>(cap, 31)));
  }

  CriticalSpectrum spec;
  spec.k_ = k;
  for (const auto& l : link.lengths()) {
    mpz_lcm(spec.denominator_.get_mpz_t(), spec.denominator_.get_mpz_t(),
            l.denominator().get_mpz_t());
  }
  std::vector<std::int64_t> scaled(k);
  mpz_class total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    mpz_class n = link[i].numerator() * (spec.denominator_ / link[i].denominator());
    total += n;
    if (!n.fits_slong_p() || total > (mpz_class(1) << 60)) {
      throw Error(ErrorKind::input, "length_overflow",
                  "edge lengths over their common denominator exceed 60 bits");
    }
    scaled[i] = n.get_si();
  }
  const std::int64_t sum = total.get_si();

  // subset sums by peeling the lowest bit: sum(J) = sum(J \ {min J}) + l_min
  const std::uint32_t count = 1U << k;
  spec.numerators_.resize(count);
  std::vector<std::int64_t> subset_sum(count, 0);
  for (std::uint32_t m = 1; m < count; ++m) {
    const int low = std::countr_zero(m);
    subset_sum[m] = subset_sum[m & (m - 1)] + scaled[static_cast<std::size_t>(low)];
  }
  for (std::uint32_t m = 0; m < count; ++m) spec.numerators_[m] = 2 * subset_sum[m] - sum;

  std::vector<std::uint32_t> by_radius(count);
  std::iota(by_radius.begin(), by_radius.end(), 0U);
  const auto& nums = spec.numerators_;
  std::stable_sort(by_radius.begin(), by_radius.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::llabs(nums[a]) < std::llabs(nums[b]);
  });
  for (std::size_t i = 0; i < by_radius.size();) {
    const std::int64_t radius = std::llabs(nums[by_radius[i]]);
    CriticalRadius entry{Rational(mpz_class(static_cast<long>(radius)), spec.denominator_), {}};
    while (i < by_radius.size() && std::llabs(nums[by_radius[i]]) == radius) {
      entry.masks.emplace_back(by_radius[i]);
      ++i;
    }
    spec.radii_.push_back(std::move(entry));
  }
  return spec;
}

Point end_position(const Linkage& link, std::span<const double> angles) {
  if (angles.size() != link.k()) {
    throw Error(ErrorKind::input, "angle_count_mismatch",
                "expected " + std::to_string(link.k()) + " angles, got " + std::to_string(angles.size()));
  }
  Point p;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double l = link[i].to_double();
    p.x += l * std::cos(angles[i]);
    p.y += l * std::sin(angles[i]);
  }
  return p;
}

bool is_regular_height(const CriticalSpectrum& spec, const Rational& h) {
  // h * D must be an integer to coincide with some r_J at all.
  const mpz_class scaled_num = h.numerator() * spec.denominator();
  if (!mpz_divisible_p(scaled_num.get_mpz_t(), h.denominator().get_mpz_t())) return true;
  const mpz_class target = scaled_num / h.denominator();
  if (!target.fits_slong_p()) return true;
  const std::int64_t t = target.get_si();
  for (std::uint32_t m = 0; m < spec.size(); ++m) {
    if (spec.numerator(SubsetMask(m)) == t) return false;
  }
  return true;
}

}  // namespace linkhom::arm
