#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mslat {

/// Rank of a dense matrix over F by Gaussian elimination.
template <class F>
std::size_t matrix_rank(std::vector<std::vector<typename F::value_type>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == F::zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    auto inv = F::inv(rows[rank][c]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == F::zero()) continue;
      auto f = F::mul(rows[r][c], inv);
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = F::sub(rows[r][k], F::mul(f, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

/// Determinant of a square matrix over F.
template <class F>
typename F::value_type determinant(std::vector<std::vector<typename F::value_type>> m) {
  const std::size_t n = m.size();
  auto det = F::one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == F::zero()) ++piv;
    if (piv == n) return F::zero();
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = F::sub(F::zero(), det);
    }
    det = F::mul(det, m[c][c]);
    auto inv = F::inv(m[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == F::zero()) continue;
      auto f = F::mul(m[r][c], inv);
      for (std::size_t k = c; k < n; ++k) m[r][k] = F::sub(m[r][k], F::mul(f, m[c][k]));
    }
  }
  return det;
}

/// Seeded invertible n x n matrix with uniform entries. Singular draws are
/// discarded and the next matrix is taken from the same stream.
template <class F>
class GenericMatrix {
 public:
  using value_type = typename F::value_type;

  GenericMatrix(std::size_t n, std::uint64_t seed) : n_(n), seed_(seed) {
    std::mt19937_64 rng(seed);
    do {
      entries_.assign(n, std::vector<value_type>(n));
      for (auto& row : entries_) {
        for (auto& v : row) v = F::from_random(rng());
      }
    } while (matrix_rank<F>(entries_) != n);
  }

  std::size_t size() const { return n_; }
  std::uint64_t seed() const { return seed_; }
  value_type at(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const std::vector<std::vector<value_type>>& rows() const { return entries_; }

 private:
  std::size_t n_;
  std::uint64_t seed_;
  std::vector<std::vector<value_type>> entries_;
};

/// Row space built one row at a time; add() reports whether the row was
/// independent of everything added before.
template <class F>
class IncrementalBasis {
 public:
  using value_type = typename F::value_type;

  explicit IncrementalBasis(std::size_t cols) : cols_(cols) {}

  bool add(std::vector<value_type> row) {
    for (const auto& [pivot, basis_row] : rows_) {
      if (row[pivot] == F::zero()) continue;
      auto f = row[pivot];
      for (std::size_t c = 0; c < cols_; ++c) row[c] = F::sub(row[c], F::mul(f, basis_row[c]));
    }
    std::size_t pivot = 0;
    while (pivot < cols_ && row[pivot] == F::zero()) ++pivot;
    if (pivot == cols_) return false;
    auto inv = F::inv(row[pivot]);
    for (auto& v : row) v = F::mul(v, inv);
    // Keep earlier rows reduced at the new pivot so every pivot column holds a
    // single nonzero entry.
    for (auto& [p, basis_row] : rows_) {
      if (basis_row[pivot] == F::zero()) continue;
      auto f = basis_row[pivot];
      for (std::size_t c = 0; c < cols_; ++c) basis_row[c] = F::sub(basis_row[c], F::mul(f, row[c]));
    }
    rows_.emplace_back(pivot, std::move(row));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t cols_;
  std::vector<std::pair<std::size_t, std::vector<value_type>>> rows_;
};

}  // namespace mslat
