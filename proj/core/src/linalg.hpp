#pragma once

// Exact linear algebra over a field type F (CheckedRational or Rational).

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "linedyn/complex.hpp"
#include "linedyn/matrix.hpp"

namespace linedyn::detail {

template <class F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivot_cols;
};

template <class F>
Echelon<F> rref(Matrix<F> m) {
  Echelon<F> e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(row, p);
    const F inv = F(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!(m(row, c) == 0)) m(row, c) = m(row, c) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const F factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!(m(row, c) == 0)) m(r, c) = m(r, c) - factor * m(row, c);
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

/// Columns spanning the null space of m.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  const auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  const std::size_t nullity = m.cols() - e.pivot_cols.size();
  Matrix<F> k(m.cols(), nullity);
  std::size_t j = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    k(free, j) = F(1);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) k(e.pivot_cols[r], j) = F(0) - e.reduced(r, free);
    ++j;
  }
  return k;
}

template <class F>
Matrix<F> select_columns(const Matrix<F>& m, const std::vector<std::size_t>& cols) {
  Matrix<F> out(m.rows(), cols.size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = m(r, cols[j]);
  return out;
}

template <class F>
Matrix<F> hconcat(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

/// Throws std::logic_error for a singular or non-square matrix.
template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw std::logic_error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const auto e = rref(hconcat(m, Matrix<F>::identity(n)));
  if (e.pivot_cols.size() < n || (n > 0 && e.pivot_cols[n - 1] != n - 1))
    throw std::logic_error("matrix is singular");
  Matrix<F> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

template <class F>
Matrix<F> to_field(const IntMatrix& m) {
  Matrix<F> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) out(r, c) = F(m(r, c));
  return out;
}

/// Representative cycles of a basis of H_k (columns of reps[k]) and the
/// linear functional sending a k-cycle to its homology coordinates.
template <class F>
struct HomologyBasis {
  std::vector<Matrix<F>> reps;
  std::vector<Matrix<F>> coords;
};

template <class F>
HomologyBasis<F> homology_basis(const ChainComplex& cc) {
  HomologyBasis<F> hb;
  const int top = cc.top_dimension();
  for (int k = 0; k <= top; ++k) {
    const std::size_t ck = cc.chain_ranks[static_cast<std::size_t>(k)];
    Matrix<F> cycles = k == 0 ? Matrix<F>::identity(ck)
                              : kernel_basis(to_field<F>(cc.boundary[static_cast<std::size_t>(k)]));
    Matrix<F> bounds(ck, 0);
    if (k < top) {
      const Matrix<F> d = to_field<F>(cc.boundary[static_cast<std::size_t>(k + 1)]);
      bounds = select_columns(d, rref(d).pivot_cols);
    }
    // extend a basis of the boundaries to one of the cycles
    const auto ext = rref(hconcat(bounds, cycles));
    std::vector<std::size_t> chosen;
    for (std::size_t c : ext.pivot_cols)
      if (c >= bounds.cols()) chosen.push_back(c - bounds.cols());
    Matrix<F> reps = select_columns(cycles, chosen);

    // coordinates: solve [bounds | reps] x = z on an invertible set of rows
    const Matrix<F> full = hconcat(bounds, reps);
    const std::size_t r = full.cols();
    Matrix<F> coords(reps.cols(), ck);
    if (r > 0) {
      const auto rows = rref(full.transpose()).pivot_cols;
      Matrix<F> sub(r, r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) sub(i, j) = full(rows[i], j);
      const Matrix<F> inv = inverse(sub);
      for (std::size_t h = 0; h < reps.cols(); ++h)
        for (std::size_t i = 0; i < r; ++i) coords(h, rows[i]) = inv(bounds.cols() + h, i);
    }
    hb.reps.push_back(std::move(reps));
    hb.coords.push_back(std::move(coords));
  }
  return hb;
}

/// Matrix of the induced map on H_k given both bases and the chain map.
template <class F>
Matrix<F> induced_on_homology(const HomologyBasis<F>& src, const HomologyBasis<F>& dst,
                              const IntMatrix& chain, std::size_t k) {
  const std::size_t h_src = k < src.reps.size() ? src.reps[k].cols() : 0;
  const std::size_t h_dst = k < dst.reps.size() ? dst.reps[k].cols() : 0;
  if (h_src == 0 || h_dst == 0) return Matrix<F>(h_dst, h_src);
  return dst.coords[k] * (to_field<F>(chain) * src.reps[k]);
}

}  // namespace linedyn::detail
