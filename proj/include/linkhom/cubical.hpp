#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linkhom/arm.hpp"
#include "linkhom/betti.hpp"
#include "linkhom/rational.hpp"
#include "linkhom/snf.hpp"

namespace linkhom::oracle {

/// Periodic grid on the k-torus: each circle factor split into n arcs.
struct GridSpec {
  std::size_t k = 1;
  std::uint32_t n = 8;
  Rational h;      // level, in normalized units
  Rational delta;  // half-width of the thickening
};

/// Cubical cell [base, base + extent] on the grid torus. Coordinates are
/// taken mod n; bit i of `extent` marks a non-degenerate direction i.
struct Cube {
  std::vector<std::uint32_t> base;
  std::uint32_t extent = 0;

  std::size_t dimension() const;
  friend bool operator==(const Cube&, const Cube&) = default;
};

struct Interval {
  double lo = 0;
  double hi = 0;
};

/// Exact range of the height function sum_i l_i sin(theta_i) over a cube.
Interval s2_range_on_cube(const arm::Linkage& link, const Cube& cube, std::uint32_t n);

/// Face-closed set of cubes on the grid torus. Cells of each dimension are
/// kept sorted lexicographically by base, then extent.
class CubicalComplex {
 public:
  CubicalComplex(std::size_t k, std::uint32_t n);

  std::size_t k() const { return k_; }
  std::uint32_t n() const { return n_; }
  std::size_t cell_count(std::size_t d) const { return cells_[d].size(); }
  std::size_t total_cells() const;
  std::vector<std::size_t> cells_per_dim() const;
  bool empty() const { return total_cells() == 0; }

  // Packed code: linear base index (first coordinate most significant) * 2^k + extent.
  std::uint64_t encode(const Cube& c) const;
  Cube decode(std::uint64_t code) const;
  const std::vector<std::uint64_t>& codes(std::size_t d) const { return cells_[d]; }
  std::optional<std::size_t> index_of(std::size_t d, std::uint64_t code) const;

  /// Builds the face closure of the given top-dimensional base cells.
  /// Throws Error{resource, "cell_budget_exceeded"} past `cell_budget`.
  static CubicalComplex closure_of_top_cells(std::size_t k, std::uint32_t n,
                                             const std::vector<std::uint64_t>& top_bases,
                                             std::uint64_t cell_budget);

 private:
  std::size_t k_;
  std::uint32_t n_;
  std::vector<std::vector<std::uint64_t>> cells_;
};

inline constexpr std::uint64_t kDefaultCellBudget = 50'000'000;

/// Every cube of the grid torus.
CubicalComplex full_torus(std::size_t k, std::uint32_t n, std::uint64_t cell_budget = kDefaultCellBudget);

struct ThickenedComplex {
  CubicalComplex complex;
  GridSpec grid;
  // No included cube touches a critical point at a level other than h.
  // When false the cover has swallowed a handle and the grid is too coarse.
  bool contained = true;
};

/// Half the exact distance from h to the nearest critical value other than h.
Rational auto_delta(const arm::CriticalSpectrum& spec, const Rational& h);

/// Cubical cover of the thickened level set s_2^{-1}[h - delta, h + delta]:
/// every top cube whose height range meets the band (bounds widened by
/// 1e-12), closed under faces. `link` is normalized internally and h (and
/// delta, when given) rescaled. Without `delta` it is auto-selected.
ThickenedComplex build_thickened_complex(const arm::Linkage& link, const Rational& h, std::uint32_t n,
                                         std::optional<Rational> delta = std::nullopt,
                                         std::uint64_t cell_budget = kDefaultCellBudget);

/// Cellular boundary d -> d-1 with signs (-1)^p (upper face - lower face),
/// p the position of the collapsed direction among the extent bits.
snf::SparseIntMatrix boundary_matrix(const CubicalComplex& complex, std::size_t d);

enum class HomologyMode { full, rank_only };

/// Integral homology in degrees 0..k.
BettiVector homology(const CubicalComplex& complex, HomologyMode mode = HomologyMode::full);

/// Internal consistency of a complex and its computed homology.
struct ComplexAudit {
  bool boundary_squares_to_zero = true;  // d_{d-1} d_d == 0 for every d
  std::int64_t euler_cells = 0;          // sum (-1)^d #cells_d
  std::int64_t euler_ranks = 0;          // sum (-1)^d rank H_d

  bool ok() const { return boundary_squares_to_zero && euler_cells == euler_ranks; }
};

ComplexAudit audit(const CubicalComplex& complex, const BettiVector& betti);

}  // namespace linkhom::oracle
