#ifndef TROPSEV_LINALG_HPP
#define TROPSEV_LINALG_HPP

#include <cstddef>
#include <vector>

#include "tropsev/rat.hpp"
#include "tropsev/vec.hpp"

namespace tropsev {

/// Dense rational matrix with just the operations the moduli computations
/// need: rank, affine solve, kernel basis. Row-reduction over Q is exact.
class RatMat {
 public:
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows, std::vector<Rat>(cols, Rat(0))) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t i, std::size_t j) { return a_[i][j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i][j]; }

  void append_row(const std::vector<Rat>& row);

  std::size_t rank() const;

  /// Kernel of the linear map, as a basis of column vectors.
  std::vector<std::vector<Rat>> kernel() const;

  /// One solution of A x = b, or empty if inconsistent.
  std::vector<Rat> solve(const std::vector<Rat>& b) const;

 private:
  std::size_t rows_, cols_;
  std::vector<std::vector<Rat>> a_;
};

inline void RatMat::append_row(const std::vector<Rat>& row) {
  a_.push_back(row);
  a_.back().resize(cols_, Rat(0));
  ++rows_;
}

namespace detail {

// Reduced row echelon form in place; returns pivot column per pivot row.
inline std::vector<std::size_t> rref(std::vector<std::vector<Rat>>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rat inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

inline std::size_t RatMat::rank() const {
  auto m = a_;
  return detail::rref(m, cols_).size();
}

inline std::vector<std::vector<Rat>> RatMat::kernel() const {
  auto m = a_;
  auto pivots = detail::rref(m, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols_, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::vector<Rat> RatMat::solve(const std::vector<Rat>& b) const {
  auto m = a_;
  for (std::size_t i = 0; i < rows_; ++i) m[i].push_back(b[i]);
  auto pivots = detail::rref(m, cols_ + 1);
  // Inconsistent iff a pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == cols_) return {};
  std::vector<Rat> x(cols_, Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][cols_];
  return x;
}

/// Index [Z^2 : L] of the sublattice L spanned by the given integer vectors,
/// via the 2x2 Hermite form. Returns 0 when the span has rank < 2
/// ("infinite index").
inline std::int64_t sublattice_index(const std::vector<Vec2i>& gens) {
  // Reduce the generator list to a Hermite-style basis by gcd steps.
  std::vector<Vec2i> g = gens;
  // First column gcd.
  Vec2i row1{0, 0};
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& v : g) {
      if (v.x == 0) continue;
      if (row1.x == 0) {
        row1 = v;
        v = {0, 0};
        changed = true;
        continue;
      }
      while (v.x != 0) {
        std::int64_t q = row1.x / v.x;
        row1 = row1 - q * v;
        std::swap(row1, v);
        changed = true;
      }
    }
  }
  std::int64_t d2 = 0;
  for (auto& v : g) d2 = gcd64(d2, v.y);
  if (row1.x == 0) return 0;  // rank < 2 in x; cannot span
  if (d2 == 0) return 0;
  std::int64_t ax = row1.x < 0 ? -row1.x : row1.x;
  return ax * d2;
}

}  // namespace tropsev

#endif
