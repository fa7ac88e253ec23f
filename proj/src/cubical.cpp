#include "linkhom/cubical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "linkhom/error.hpp"

namespace linkhom::oracle {

namespace {

// sin(2 pi b / n), exact at the quarter turns.
double vertex_sin(std::uint64_t b, std::uint32_t n) {
  b %= n;
  if (4 * b == n) return 1.0;
  if (4 * b == 3ULL * n) return -1.0;
  if (b == 0 || 2 * b == n) return 0.0;
  return std::sin(2.0 * std::numbers::pi * static_cast<double>(b) / static_cast<double>(n));
}

// Range of sin over the arc between grid coordinates b and b + 1.
Interval arc_sin_range(std::uint32_t b, std::uint32_t n) {
  const double s0 = vertex_sin(b, n);
  const double s1 = vertex_sin(b + 1ULL, n);
  Interval r{std::min(s0, s1), std::max(s0, s1)};
  const std::uint64_t lo4 = 4ULL * b;
  const std::uint64_t hi4 = 4ULL * (b + 1);
  if (lo4 <= n && n <= hi4) r.hi = 1.0;                 // contains pi/2
  if (lo4 <= 3ULL * n && 3ULL * n <= hi4) r.lo = -1.0;  // contains 3 pi/2
  return r;
}

std::vector<std::uint64_t> strides_for(std::size_t k, std::uint32_t n) {
  std::vector<std::uint64_t> s(k, 1);
  for (std::size_t i = k; i-- > 1;) s[i - 1] = s[i] * n;
  return s;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > (std::uint64_t{1} << 40) / base) {
      throw Error(ErrorKind::resource, "cell_budget_exceeded", "grid too large to enumerate");
    }
    r *= base;
  }
  return r;
}

// True when no included top cube touches a critical point u_J whose level
// r_J differs from h. Only meaningful when u_J sits on grid vertices (4 | n);
// otherwise the nearest vertex stands in for it.
bool avoids_foreign_critical_points(const arm::CriticalSpectrum& spec, const GridSpec& grid,
                                    const std::vector<std::uint64_t>& tops) {
  const std::size_t k = grid.k;
  const std::uint32_t n = grid.n;
  const auto strides = strides_for(k, n);
  std::vector<bool> included(checked_power(n, k), false);
  for (auto t : tops) included[t] = true;
  const std::uint32_t up = (n + 2) / 4;              // nearest vertex to pi/2
  const std::uint32_t down = (3 * n + 2) / 4 % n;    // nearest vertex to 3 pi / 2
  for (std::uint32_t m = 0; m < spec.size(); ++m) {
    const arm::SubsetMask mask(m);
    if (spec.r(mask) == grid.h) continue;
    // the 2^k top cubes sharing this vertex
    for (std::uint32_t corner = 0; corner < (1U << k); ++corner) {
      std::uint64_t lin = 0;
      for (std::size_t i = 0; i < k; ++i) {
        std::uint32_t c = mask.contains(i) ? up : down;
        if ((corner >> i) & 1U) c = (c + n - 1) % n;
        lin += c * strides[i];
      }
      if (included[lin]) return false;
    }
  }
  return true;
}

}  // namespace

std::size_t Cube::dimension() const { return static_cast<std::size_t>(std::popcount(extent)); }

Interval s2_range_on_cube(const arm::Linkage& link, const Cube& cube, std::uint32_t n) {
  if (cube.base.size() != link.k()) {
    throw Error(ErrorKind::input, "cube_dimension_mismatch", "cube and linkage disagree on k");
  }
  Interval total;
  for (std::size_t i = 0; i < link.k(); ++i) {
    const double l = link[i].to_double();
    Interval r;
    if ((cube.extent >> i) & 1U) {
      r = arc_sin_range(cube.base[i] % n, n);
    } else {
      const double s = vertex_sin(cube.base[i], n);
      r = {s, s};
    }
    total.lo += l * r.lo;
    total.hi += l * r.hi;
  }
  return total;
}

CubicalComplex::CubicalComplex(std::size_t k, std::uint32_t n) : k_(k), n_(n), cells_(k + 1) {
  if (k < 1) throw Error(ErrorKind::input, "bad_grid", "grid dimension must be at least 1");
  if (n < 3) throw Error(ErrorKind::input, "bad_grid", "grid needs at least 3 subdivisions per circle");
}

std::size_t CubicalComplex::total_cells() const {
  std::size_t t = 0;
  for (const auto& c : cells_) t += c.size();
  return t;
}

std::vector<std::size_t> CubicalComplex::cells_per_dim() const {
  std::vector<std::size_t> out;
  for (const auto& c : cells_) out.push_back(c.size());
  return out;
}

std::uint64_t CubicalComplex::encode(const Cube& c) const {
  std::uint64_t lin = 0;
  for (std::size_t i = 0; i < k_; ++i) lin = lin * n_ + (c.base[i] % n_);
  return (lin << k_) | c.extent;
}

Cube CubicalComplex::decode(std::uint64_t code) const {
  Cube c;
  c.extent = static_cast<std::uint32_t>(code & ((std::uint64_t{1} << k_) - 1));
  std::uint64_t lin = code >> k_;
  c.base.assign(k_, 0);
  for (std::size_t i = k_; i-- > 0;) {
    c.base[i] = static_cast<std::uint32_t>(lin % n_);
    lin /= n_;
  }
  return c;
}

std::optional<std::size_t> CubicalComplex::index_of(std::size_t d, std::uint64_t code) const {
  const auto& v = cells_[d];
  const auto it = std::lower_bound(v.begin(), v.end(), code);
  if (it == v.end() || *it != code) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

CubicalComplex CubicalComplex::closure_of_top_cells(std::size_t k, std::uint32_t n,
                                                    const std::vector<std::uint64_t>& top_bases,
                                                    std::uint64_t cell_budget) {
  CubicalComplex cx(k, n);
  const std::uint64_t bases = checked_power(n, k);
  const std::uint64_t code_space = bases << k;
  const auto strides = strides_for(k, n);
  const std::uint32_t full = (1U << k) - 1;

  std::vector<bool> present(code_space, false);
  std::vector<std::uint32_t> digits(k);
  std::uint64_t faces = 1;
  for (std::size_t i = 0; i < k; ++i) faces *= 3;

  for (const std::uint64_t lin : top_bases) {
    std::uint64_t rest = lin;
    for (std::size_t i = k; i-- > 0;) {
      digits[i] = static_cast<std::uint32_t>(rest % n);
      rest /= n;
    }
    // each direction: 0 = lower face, 1 = upper face, 2 = kept
    for (std::uint64_t f = 0; f < faces; ++f) {
      std::uint64_t choice = f;
      std::uint64_t face_lin = lin;
      std::uint32_t extent = full;
      for (std::size_t i = 0; i < k; ++i) {
        const auto c = choice % 3;
        choice /= 3;
        if (c == 2) continue;
        extent &= ~(1U << i);
        if (c == 1) {
          const std::uint32_t up = (digits[i] + 1) % n;
          face_lin = face_lin - digits[i] * strides[i] + up * strides[i];
        }
      }
      present[(face_lin << k) | extent] = true;
    }
  }

  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < code_space; ++code) {
    if (!present[code]) continue;
    if (++count > cell_budget) {
      throw Error(ErrorKind::resource, "cell_budget_exceeded",
                  "cubical complex exceeds cell budget of " + std::to_string(cell_budget) + " cells");
    }
    cx.cells_[static_cast<std::size_t>(std::popcount(static_cast<std::uint32_t>(code & full)))].push_back(code);
  }
  return cx;
}

CubicalComplex full_torus(std::size_t k, std::uint32_t n, std::uint64_t cell_budget) {
  std::vector<std::uint64_t> tops(checked_power(n, k));
  for (std::uint64_t i = 0; i < tops.size(); ++i) tops[i] = i;
  return CubicalComplex::closure_of_top_cells(k, n, tops, cell_budget);
}

Rational auto_delta(const arm::CriticalSpectrum& spec, const Rational& h) {
  std::optional<Rational> gap;
  for (const auto& v : spec.critical_values()) {
    if (v == h) continue;
    const Rational d = (v - h).abs();
    if (!gap || d < *gap) gap = d;
  }
  if (!gap) throw Error(ErrorKind::input, "no_delta", "no critical value distinct from h");
  return *gap / Rational(2);
}

ThickenedComplex build_thickened_complex(const arm::Linkage& link, const Rational& h, std::uint32_t n,
                                         std::optional<Rational> delta, std::uint64_t cell_budget) {
  if (n < 8) throw Error(ErrorKind::input, "bad_grid", "grid resolution n must be at least 8");
  const auto normalized = arm::normalize(link);
  const auto& arm = normalized.linkage;
  const auto spec = arm::spectrum(arm);
  const std::size_t k = arm.k();

  GridSpec grid{k, n, h * normalized.scale, Rational(0)};
  if (delta) {
    grid.delta = *delta * normalized.scale;
    if (grid.delta.sign() <= 0) throw Error(ErrorKind::input, "bad_delta", "delta must be positive");
    for (const auto& v : spec.critical_values()) {
      if (v != grid.h && (v - grid.h).abs() <= grid.delta) {
        throw Error(ErrorKind::input, "bad_delta",
                    "band [h - delta, h + delta] contains the critical value " + v.to_string());
      }
    }
  } else {
    grid.delta = auto_delta(spec, grid.h);
  }

  constexpr double widen = 1e-12;
  const double band_lo = (grid.h - grid.delta).to_double() - widen;
  const double band_hi = (grid.h + grid.delta).to_double() + widen;

  // per direction, per arc: l_i * (min sin, max sin)
  std::vector<std::vector<Interval>> arcs(k, std::vector<Interval>(n));
  for (std::size_t i = 0; i < k; ++i) {
    const double l = arm[i].to_double();
    for (std::uint32_t b = 0; b < n; ++b) {
      const Interval r = arc_sin_range(b, n);
      arcs[i][b] = {l * r.lo, l * r.hi};
    }
  }

  std::vector<std::uint64_t> tops;
  const std::uint64_t bases = checked_power(n, k);
  std::vector<std::uint32_t> digit(k, 0);
  for (std::uint64_t lin = 0; lin < bases; ++lin) {
    double lo = 0;
    double hi = 0;
    for (std::size_t i = 0; i < k; ++i) {
      lo += arcs[i][digit[i]].lo;
      hi += arcs[i][digit[i]].hi;
    }
    if (hi >= band_lo && lo <= band_hi) tops.push_back(lin);
    for (std::size_t i = k; i-- > 0;) {
      if (++digit[i] < n) break;
      digit[i] = 0;
    }
  }

  ThickenedComplex result{CubicalComplex::closure_of_top_cells(k, n, tops, cell_budget), grid,
                          avoids_foreign_critical_points(spec, grid, tops)};
  if (result.complex.empty() && grid.h.abs() <= Rational(1)) {
    throw Error(ErrorKind::resource, "resolution_too_coarse",
                "resolution too coarse: no grid cube meets the band around h = " + grid.h.to_string());
  }
  return result;
}

snf::SparseIntMatrix boundary_matrix(const CubicalComplex& complex, std::size_t d) {
  if (d < 1 || d > complex.k()) throw Error(ErrorKind::input, "bad_degree", "boundary degree out of range");
  const std::size_t k = complex.k();
  const std::uint32_t n = complex.n();
  const auto strides = strides_for(k, n);
  const auto& cells = complex.codes(d);
  snf::SparseIntMatrix m(complex.cell_count(d - 1), cells.size());

  for (std::size_t col = 0; col < cells.size(); ++col) {
    const std::uint64_t code = cells[col];
    const auto extent = static_cast<std::uint32_t>(code & ((std::uint64_t{1} << k) - 1));
    const std::uint64_t lin = code >> k;
    auto& column = m.columns[col];
    int position = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!((extent >> i) & 1U)) continue;
      const std::int64_t sign = position % 2 == 0 ? 1 : -1;
      const std::uint32_t face_extent = extent & ~(1U << i);
      const auto digit = static_cast<std::uint32_t>((lin / strides[i]) % n);
      const std::uint64_t upper_lin = lin - digit * strides[i] + ((digit + 1) % n) * strides[i];
      const auto lower = complex.index_of(d - 1, (lin << k) | face_extent);
      const auto upper = complex.index_of(d - 1, (upper_lin << k) | face_extent);
      if (!lower || !upper) throw Error(ErrorKind::internal, "not_face_closed", "complex is not closed under faces");
      column.emplace_back(static_cast<std::uint32_t>(*lower), -sign);
      column.emplace_back(static_cast<std::uint32_t>(*upper), sign);
      ++position;
    }
    std::sort(column.begin(), column.end());
  }
  return m;
}

BettiVector homology(const CubicalComplex& complex, HomologyMode mode) {
  const std::size_t k = complex.k();
  // ranks[d] = rank of boundary d -> d-1; ranks[0] = ranks[k+1] = 0
  std::vector<std::int64_t> ranks(k + 2, 0);
  std::vector<std::vector<mpz_class>> torsion_of(k + 2);
  for (std::size_t d = 1; d <= k; ++d) {
    if (complex.cell_count(d) == 0 || complex.cell_count(d - 1) == 0) continue;
    const auto m = boundary_matrix(complex, d);
    if (mode == HomologyMode::full) {
      const auto s = snf::smith_normal_form(m);
      ranks[d] = static_cast<std::int64_t>(s.rank);
      torsion_of[d] = s.torsion();
    } else {
      ranks[d] = static_cast<std::int64_t>(snf::rank_fast(m));
    }
  }
  BettiVector bv;
  bv.ranks.resize(k + 1);
  for (std::size_t d = 0; d <= k; ++d) {
    bv.ranks[d] = static_cast<std::int64_t>(complex.cell_count(d)) - ranks[d] - ranks[d + 1];
    // torsion of H_d comes from the boundary into degree d
    if (!torsion_of[d + 1].empty()) bv.torsion.push_back({static_cast<int>(d), torsion_of[d + 1]});
  }
  return bv;
}

ComplexAudit audit(const CubicalComplex& complex, const BettiVector& betti) {
  ComplexAudit a;
  const std::size_t k = complex.k();
  for (std::size_t d = 2; d <= k; ++d) {
    const auto product = snf::multiply(boundary_matrix(complex, d - 1), boundary_matrix(complex, d));
    if (product.nonzeros() != 0) a.boundary_squares_to_zero = false;
  }
  for (std::size_t d = 0; d <= k; ++d) {
    const auto sign = d % 2 == 0 ? 1 : -1;
    a.euler_cells += sign * static_cast<std::int64_t>(complex.cell_count(d));
  }
  a.euler_ranks = euler_characteristic(betti);
  return a;
}

}  // namespace linkhom::oracle
