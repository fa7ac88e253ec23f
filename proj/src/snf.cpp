#include "linkhom/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <queue>

namespace linkhom::snf {

namespace {

using Entry = SparseIntMatrix::Entry;
using Column = std::vector<Entry>;

constexpr std::int64_t kValueLimit = std::int64_t{1} << 62;

// Eliminates every pivot that can be taken with a +-1 entry. Column
// operations only, so the residual block has the same Smith form tail.
class UnitEliminator {
 public:
  explicit UnitEliminator(const SparseIntMatrix& m)
      : rows_(m.rows), cols_(m.columns), row_cols_(m.rows), col_alive_(m.cols, 1) {
    for (std::uint32_t c = 0; c < cols_.size(); ++c) {
      for (const auto& [r, v] : cols_[c]) row_cols_[r].push_back(c);
    }
  }

  // Returns false if 64-bit arithmetic would have overflowed; the matrix is
  // left in a consistent (partially reduced) state either way.
  bool run() {
    using Key = std::pair<std::size_t, std::uint32_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
    for (std::uint32_t c = 0; c < cols_.size(); ++c) {
      if (!cols_[c].empty()) heap.emplace(cols_[c].size(), c);
    }
    while (!heap.empty()) {
      const auto [count, c] = heap.top();
      heap.pop();
      if (!col_alive_[c] || cols_[c].size() != count) continue;

      std::uint32_t pivot_row = 0;
      std::int64_t pivot_value = 0;
      std::size_t best = SIZE_MAX;
      for (const auto& [r, v] : cols_[c]) {
        if ((v == 1 || v == -1) && row_cols_[r].size() < best) {
          best = row_cols_[r].size();
          pivot_row = r;
          pivot_value = v;
        }
      }
      if (pivot_value == 0) continue;  // revisited if the column changes

      std::vector<std::uint32_t> touched = std::move(row_cols_[pivot_row]);
      row_cols_[pivot_row].clear();
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      for (auto other : touched) {
        if (other == c || !col_alive_[other]) continue;
        auto& target = cols_[other];
        auto it = std::lower_bound(target.begin(), target.end(), Entry{pivot_row, 0},
                                   [](const Entry& x, const Entry& y) { return x.first < y.first; });
        if (it == target.end() || it->first != pivot_row) continue;
        const std::int64_t factor = it->second * pivot_value;
        Column merged;
        if (!axpy(target, cols_[c], factor, merged)) {
          row_cols_[pivot_row] = std::move(touched);
          return false;
        }
        for (const auto& [r, v] : merged) {
          if (!std::binary_search(target.begin(), target.end(), Entry{r, 0},
                                  [](const Entry& x, const Entry& y) { return x.first < y.first; })) {
            row_cols_[r].push_back(other);
          }
        }
        target = std::move(merged);
        if (!target.empty()) heap.emplace(target.size(), other);
      }
      col_alive_[c] = 0;
      ++rank_;
    }
    return true;
  }

  std::size_t rank() const { return rank_; }

  // Alive, nonzero columns with rows renumbered densely.
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> residual(std::size_t& residual_rows) const {
    std::map<std::uint32_t, std::uint32_t> row_index;
    std::vector<Column> out;
    for (std::uint32_t c = 0; c < cols_.size(); ++c) {
      if (!col_alive_[c] || cols_[c].empty()) continue;
      for (const auto& e : cols_[c]) row_index.emplace(e.first, 0);
    }
    std::uint32_t next = 0;
    for (auto& [r, idx] : row_index) idx = next++;
    for (std::uint32_t c = 0; c < cols_.size(); ++c) {
      if (!col_alive_[c] || cols_[c].empty()) continue;
      Column col;
      for (const auto& [r, v] : cols_[c]) col.emplace_back(row_index.at(r), v);
      out.push_back(std::move(col));
    }
    residual_rows = next;
    return out;
  }

 private:
  // out = target - factor * source, or false on overflow.
  static bool axpy(const Column& target, const Column& source, std::int64_t factor, Column& out) {
    out.reserve(target.size() + source.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < target.size() || j < source.size()) {
      if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
        out.push_back(target[i++]);
        continue;
      }
      std::int64_t scaled = 0;
      if (__builtin_mul_overflow(source[j].second, factor, &scaled)) return false;
      if (i == target.size() || source[j].first < target[i].first) {
        if (scaled <= -kValueLimit || scaled >= kValueLimit) return false;
        out.emplace_back(source[j].first, -scaled);
        ++j;
        continue;
      }
      std::int64_t value = 0;
      if (__builtin_sub_overflow(target[i].second, scaled, &value)) return false;
      if (value <= -kValueLimit || value >= kValueLimit) return false;
      if (value != 0) out.emplace_back(target[i].first, value);
      ++i;
      ++j;
    }
    return true;
  }

  std::size_t rows_;
  std::vector<Column> cols_;
  std::vector<std::vector<std::uint32_t>> row_cols_;
  std::vector<char> col_alive_;
  std::size_t rank_ = 0;
};

using DenseZ = std::vector<std::vector<mpz_class>>;

// Nonzero Smith diagonal of a dense integer matrix, as a divisibility chain.
std::vector<mpz_class> dense_smith_diagonal(DenseZ a) {
  std::vector<mpz_class> diag;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // smallest nonzero magnitude in the trailing block
    std::size_t pi = rows;
    std::size_t pj = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] != 0 && (pi == rows || ::abs(a[i][j]) < ::abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        // move the smallest remainder in row/column t onto the diagonal
        std::size_t bi = t;
        std::size_t bj = t;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a[i][t] != 0 && ::abs(a[i][t]) < ::abs(a[bi][bj])) { bi = i; bj = t; }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[t][j] != 0 && ::abs(a[t][j]) < ::abs(a[bi][bj])) { bi = t; bj = j; }
        }
        std::swap(a[t], a[bi]);
        for (auto& row : a) std::swap(row[t], row[bj]);
        continue;
      }
      // pivot must divide the whole trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(::abs(a[t][t]));
  }
  return diag;
}

std::size_t dense_rank_mod_p(std::vector<std::vector<std::int64_t>> a) {
  constexpr std::int64_t p = 2147483647;
  auto inverse = [](std::int64_t x) {
    std::int64_t result = 1;
    std::int64_t e = p - 2;
    x %= p;
    while (e) {
      if (e & 1) result = result * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return result;
  };
  for (auto& row : a) {
    for (auto& v : row) v = ((v % p) + p) % p;
  }
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t r = rank;
    while (r < rows && a[r][c] == 0) ++r;
    if (r == rows) continue;
    std::swap(a[rank], a[r]);
    const std::int64_t inv = inverse(a[rank][c]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const std::int64_t f = a[i][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
  const std::size_t r = dense.size();
  const std::size_t c = r == 0 ? 0 : dense[0].size();
  SparseIntMatrix m(r, c);
  for (std::size_t j = 0; j < c; ++j) {
    for (std::size_t i = 0; i < r; ++i) {
      if (dense[i][j] != 0) m.columns[j].emplace_back(static_cast<std::uint32_t>(i), dense[i][j]);
    }
  }
  return m;
}

std::vector<std::vector<std::int64_t>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> d(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& [i, v] : columns[j]) d[i][j] = v;
  }
  return d;
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

std::vector<mpz_class> SnfResult::torsion() const {
  std::vector<mpz_class> out;
  for (const auto& f : invariant_factors) {
    if (f != 1) out.push_back(f);
  }
  return out;
}

SnfResult smith_normal_form(const SparseIntMatrix& m) {
  UnitEliminator elim(m);
  elim.run();
  std::size_t residual_rows = 0;
  const auto residual = elim.residual(residual_rows);

  SnfResult result;
  result.invariant_factors.assign(elim.rank(), mpz_class(1));
  if (!residual.empty()) {
    DenseZ dense(residual_rows, std::vector<mpz_class>(residual.size(), mpz_class(0)));
    for (std::size_t j = 0; j < residual.size(); ++j) {
      for (const auto& [i, v] : residual[j]) dense[i][j] = mpz_class(static_cast<long>(v));
    }
    for (auto& d : dense_smith_diagonal(std::move(dense))) result.invariant_factors.push_back(std::move(d));
  }
  result.rank = result.invariant_factors.size();
  return result;
}

std::size_t rank_fast(const SparseIntMatrix& m) {
  UnitEliminator elim(m);
  elim.run();
  std::size_t residual_rows = 0;
  const auto residual = elim.residual(residual_rows);
  if (residual.empty()) return elim.rank();
  std::vector<std::vector<std::int64_t>> dense(residual_rows, std::vector<std::int64_t>(residual.size(), 0));
  for (std::size_t j = 0; j < residual.size(); ++j) {
    for (const auto& [i, v] : residual[j]) dense[i][j] = v;
  }
  return elim.rank() + dense_rank_mod_p(std::move(dense));
}

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  SparseIntMatrix out(a.rows, b.cols);
  for (std::size_t j = 0; j < b.cols; ++j) {
    std::map<std::uint32_t, std::int64_t> acc;
    for (const auto& [k, bv] : b.columns[j]) {
      for (const auto& [i, av] : a.columns[k]) acc[i] += av * bv;
    }
    for (const auto& [i, v] : acc) {
      if (v != 0) out.columns[j].emplace_back(i, v);
    }
  }
  return out;
}

}  // namespace linkhom::snf
