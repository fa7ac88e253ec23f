#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace linkhom::snf {

/// Column-major sparse integer matrix; each column is sorted by row index
/// and holds no explicit zeros.
struct SparseIntMatrix {
  using Entry = std::pair<std::uint32_t, std::int64_t>;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Entry>> columns;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  static SparseIntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense);
  std::vector<std::vector<std::int64_t>> to_dense() const;
  std::size_t nonzeros() const;
};

struct SnfResult {
  std::size_t rank = 0;
  // Nonzero diagonal of the Smith form, d_1 | d_2 | ... | d_rank.
  std::vector<mpz_class> invariant_factors;

  /// Invariant factors different from 1.
  std::vector<mpz_class> torsion() const;
};

/// Smith normal form over the integers.
///
/// Unit pivots are eliminated first with Markowitz-style ordering (column
/// with fewest entries, then the sparsest row), which is a unimodular change
/// of basis and leaves a small residual block. The residual block, and
/// anything that would overflow 64-bit arithmetic, is finished with
/// arbitrary-precision dense elimination. Pivot choices are deterministic.
SnfResult smith_normal_form(const SparseIntMatrix& m);

/// Rank only: the same unit-pivot elimination, with any residual block
/// ranked modulo a large prime. Does not detect torsion.
std::size_t rank_fast(const SparseIntMatrix& m);

/// Sparse product a * b, used to check the boundary identity.
SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);

}  // namespace linkhom::snf
