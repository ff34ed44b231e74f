#pragma once

#include <cstddef>
#include <vector>

#include "linedyn/matrix.hpp"

namespace linedyn {

/// D = U * M * V with U, V unimodular and D diagonal, d_1 | d_2 | ... .
template <class T>
struct SmithForm {
  Matrix<T> u;
  Matrix<T> d;
  Matrix<T> v;
  /// Positive diagonal entries of D, in order.
  std::vector<T> invariant_factors;
  std::size_t rank() const { return invariant_factors.size(); }
};

namespace detail {

/**
 * Smith normal form by elimination. The pivot is always the nonzero entry of
 * least absolute value in the trailing block; rows and columns of the pivot
 * are cleared by Euclidean reduction and divisibility is restored by adding
 * an offending row into the pivot row.
 *
 * With Track = false the transforms are not accumulated.
 */
template <class T, bool Track>
SmithForm<T> smith_impl(Matrix<T> d) {
  using namespace arith;
  const std::size_t m = d.rows();
  const std::size_t n = d.cols();
  SmithForm<T> out;
  if constexpr (Track) {
    out.u = Matrix<T>::identity(m);
    out.v = Matrix<T>::identity(n);
  }

  auto row_addmul = [&](std::size_t target, std::size_t source, const T& q) {
    // row_target -= q * row_source
    for (std::size_t c = 0; c < n; ++c)
      if (d(source, c) != 0) d(target, c) = sub(d(target, c), mul(q, d(source, c)));
    if constexpr (Track)
      for (std::size_t c = 0; c < m; ++c)
        if (out.u(source, c) != 0) out.u(target, c) = sub(out.u(target, c), mul(q, out.u(source, c)));
  };
  auto col_addmul = [&](std::size_t target, std::size_t source, const T& q) {
    for (std::size_t r = 0; r < m; ++r)
      if (d(r, source) != 0) d(r, target) = sub(d(r, target), mul(q, d(r, source)));
    if constexpr (Track)
      for (std::size_t r = 0; r < n; ++r)
        if (out.v(r, source) != 0) out.v(r, target) = sub(out.v(r, target), mul(q, out.v(r, source)));
  };
  auto swap_r = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    if constexpr (Track) out.u.swap_rows(a, b);
  };
  auto swap_c = [&](std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    if constexpr (Track) out.v.swap_cols(a, b);
  };

  const std::size_t limit = m < n ? m : n;
  for (std::size_t t = 0; t < limit; ++t) {
    // smallest nonzero entry of the trailing block
    bool found = false;
    std::size_t pr = t, pc = t;
    T best = 0;
    for (std::size_t r = t; r < m; ++r)
      for (std::size_t c = t; c < n; ++c) {
        if (d(r, c) == 0) continue;
        T a = abs(d(r, c));
        if (!found || a < best) {
          found = true;
          best = a;
          pr = r;
          pc = c;
        }
      }
    if (!found) break;
    swap_r(t, pr);
    swap_c(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (d(r, t) == 0) continue;
        row_addmul(r, t, quot(d(r, t), d(t, t)));
        if (d(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (d(t, c) == 0) continue;
        col_addmul(c, t, quot(d(t, c), d(t, t)));
        if (d(t, c) != 0) clean = false;
      }
      if (!clean) {
        // a remainder smaller than the pivot survived; promote it
        std::size_t br = t, bc = t;
        T b = abs(d(t, t));
        for (std::size_t r = t + 1; r < m; ++r)
          if (d(r, t) != 0 && abs(d(r, t)) < b) {
            b = abs(d(r, t));
            br = r;
            bc = t;
          }
        for (std::size_t c = t + 1; c < n; ++c)
          if (d(t, c) != 0 && abs(d(t, c)) < b) {
            b = abs(d(t, c));
            br = t;
            bc = c;
          }
        swap_r(t, br);
        swap_c(t, bc);
        continue;
      }
      bool divisible = true;
      for (std::size_t r = t + 1; r < m && divisible; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (rem(d(r, c), d(t, t)) != 0) {
            row_addmul(t, r, T(-1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }

    if (d(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) d(t, c) = neg(d(t, c));
      if constexpr (Track)
        for (std::size_t c = 0; c < m; ++c) out.u(t, c) = neg(out.u(t, c));
    }
    out.invariant_factors.push_back(d(t, t));
  }
  out.d = std::move(d);
  return out;
}

}  // namespace detail

/// Full Smith normal form with transforms, exact big-integer arithmetic.
SmithForm<BigInt> smith_normal_form(const BigIntMatrix& m);
SmithForm<BigInt> smith_normal_form(const IntMatrix& m);

/// Invariant factors only. Runs in checked 64-bit arithmetic and repeats the
/// elimination with big integers if an intermediate value overflows.
std::vector<BigInt> invariant_factors(const IntMatrix& m);

std::size_t integer_rank(const IntMatrix& m);

/// Exact determinant (fraction-free elimination).
BigInt determinant(const BigIntMatrix& m);

}  // namespace linedyn
