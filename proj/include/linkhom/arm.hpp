#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "linkhom/rational.hpp"

namespace linkhom::arm {

/// Edge lengths (l_1, ..., l_k) of a planar robotic arm pinned at the origin.
/// Every length is a strictly positive exact rational and k >= 1.
class Linkage {
 public:
  explicit Linkage(std::vector<Rational> lengths);

  /// Parses a list of literals ("1/3", "0.5", ...).
  static Linkage parse(std::span<const std::string> literals);
  /// Parses a comma separated list, as given to --lengths.
  static Linkage parse_list(std::string_view csv);

  std::size_t k() const { return lengths_.size(); }
  const std::vector<Rational>& lengths() const { return lengths_; }
  const Rational& operator[](std::size_t i) const { return lengths_[i]; }
  Rational total() const;
  std::vector<double> lengths_as_double() const;

  friend bool operator==(const Linkage&, const Linkage&) = default;

 private:
  std::vector<Rational> lengths_;
};

/// Result of normalize(): lengths sum to 1 and are sorted non-increasing.
struct Normalized {
  Linkage linkage;
  // normalized length = scale * original length; apply the same factor to
  // heights and curve coordinates.
  Rational scale;
  // order[i] is the original (0-based) index of normalized edge i.
  std::vector<std::size_t> order;
};

Normalized normalize(const Linkage& link);

/// Subset J of {1..k} encoded as a bit mask; bit i is edge i (0-based).
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int cardinality() const { return std::popcount(bits_); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr SubsetMask complement(std::size_t k) const {
    return SubsetMask(~bits_ & ((k >= 32 ? 0U : (1U << k)) - 1U));
  }
  // "{1,3}" with 1-based edge numbers.
  std::string to_string(std::size_t k) const;

  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Vertical collinear configuration u_J: edge i points up iff i is in J.
struct CollinearConfig {
  SubsetMask mask;
  Rational r;  // height of the last vertex, sum_{J} l_i - sum_{not J} l_i
  int index;   // Morse index of u_J for the height function, equal to |J|
};

struct CriticalRadius {
  Rational radius;                 // |r_J|
  std::vector<SubsetMask> masks;   // every J with |r_J| == radius, ascending
};

inline constexpr std::size_t kDefaultEnumerationCap = 24;

/// All 2^k vertical collinear configurations of an arm together with the
/// deduplicated critical radii.
///
/// Heights are held as integer numerators over one common denominator, so
/// every comparison against a rational threshold reduces to one integer
/// comparison per subset.
class CriticalSpectrum {
 public:
  std::size_t k() const { return k_; }
  std::size_t size() const { return numerators_.size(); }

  Rational r(SubsetMask mask) const;
  CollinearConfig config(SubsetMask mask) const;
  std::vector<CollinearConfig> configs() const;
  const std::vector<CriticalRadius>& radii() const { return radii_; }
  /// Distinct values r_J in increasing order.
  std::vector<Rational> critical_values() const;

  // Low-level access for counting loops: r_J = numerator(J) / denominator().
  std::int64_t numerator(SubsetMask mask) const { return numerators_[mask.bits()]; }
  const mpz_class& denominator() const { return denominator_; }
  /// Largest integer m with m / denominator() <= x.
  std::int64_t floor_scaled(const Rational& x) const;

 private:
  friend CriticalSpectrum spectrum(const Linkage&, std::size_t);

  std::size_t k_ = 0;
  mpz_class denominator_{1};
  std::vector<std::int64_t> numerators_;
  std::vector<CriticalRadius> radii_;
};

/// Throws Error{input, "enumeration_too_large"} when k exceeds `cap`, and
/// Error{input, "length_overflow"} when the common-denominator numerators do
/// not fit in 62 bits.
CriticalSpectrum spectrum(const Linkage& link, std::size_t cap = kDefaultEnumerationCap);

struct Point {
  double x = 0;
  double y = 0;
};

/// Position of the last vertex for joint angles `angles` (radians).
Point end_position(const Linkage& link, std::span<const double> angles);

/// True iff h differs from every r_J.
bool is_regular_height(const CriticalSpectrum& spec, const Rational& h);

}  // namespace linkhom::arm
