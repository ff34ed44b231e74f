#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "linedyn/errors.hpp"

namespace linedyn {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major matrix. Used for boundary operators and homology maps; all
/// matrices handled here are small.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw InvalidRange("ragged matrix initializer");
      for (const auto& v : row) data_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = U((*this)(r, c));
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw InvalidRange("matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

using IntMatrix = Matrix<std::int64_t>;
using BigIntMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<Rational>;

/// Overflow-checked 64-bit helpers; the BigInt overloads never throw. Generic
/// code calls these unqualified so either representation can be used.
namespace arith {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}
inline std::int64_t neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw ArithmeticOverflow();
  return -a;
}
inline std::int64_t abs(std::int64_t a) { return a < 0 ? neg(a) : a; }
inline std::int64_t quot(std::int64_t a, std::int64_t b) {
  if (a == std::numeric_limits<std::int64_t>::min() && b == -1) throw ArithmeticOverflow();
  return a / b;
}
inline std::int64_t rem(std::int64_t a, std::int64_t b) { return b == -1 ? 0 : a % b; }

inline BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt neg(const BigInt& a) { return -a; }
inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }
inline BigInt quot(const BigInt& a, const BigInt& b) { return a / b; }
inline BigInt rem(const BigInt& a, const BigInt& b) { return a % b; }

}  // namespace arith

__extension__ using Wide = __int128;

/**
 * Rational number with 64-bit numerator and denominator.
 *
 * Every operation is exact or throws ArithmeticOverflow, so a computation
 * carried out in this type either yields the true rational answer or signals
 * that it must be redone with Rational.
 */
class CheckedRational {
 public:
  CheckedRational() = default;
  CheckedRational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  CheckedRational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("zero denominator");
    set(static_cast<Wide>(n), static_cast<Wide>(d));
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  explicit operator Rational() const { return Rational(num_, den_); }

  friend CheckedRational operator+(const CheckedRational& a, const CheckedRational& b) {
    CheckedRational r;
    r.set(static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
          static_cast<Wide>(a.den_) * b.den_);
    return r;
  }
  friend CheckedRational operator-(const CheckedRational& a, const CheckedRational& b) {
    CheckedRational r;
    r.set(static_cast<Wide>(a.num_) * b.den_ - static_cast<Wide>(b.num_) * a.den_,
          static_cast<Wide>(a.den_) * b.den_);
    return r;
  }
  friend CheckedRational operator*(const CheckedRational& a, const CheckedRational& b) {
    CheckedRational r;
    r.set(static_cast<Wide>(a.num_) * b.num_, static_cast<Wide>(a.den_) * b.den_);
    return r;
  }
  friend CheckedRational operator/(const CheckedRational& a, const CheckedRational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    CheckedRational r;
    r.set(static_cast<Wide>(a.num_) * b.den_, static_cast<Wide>(a.den_) * b.num_);
    return r;
  }
  CheckedRational operator-() const { return CheckedRational(arith::neg(num_), den_); }
  CheckedRational& operator+=(const CheckedRational& o) { return *this = *this + o; }
  CheckedRational& operator-=(const CheckedRational& o) { return *this = *this - o; }
  CheckedRational& operator*=(const CheckedRational& o) { return *this = *this * o; }
  CheckedRational& operator/=(const CheckedRational& o) { return *this = *this / o; }

  friend bool operator==(const CheckedRational& a, const CheckedRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator==(const CheckedRational& a, std::int64_t b) { return a.den_ == 1 && a.num_ == b; }

 private:
  void set(Wide n, Wide d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Wide x = n < 0 ? -n : n;
    Wide y = d;
    while (y != 0) {
      Wide t = x % y;
      x = y;
      y = t;
    }
    if (x > 1) {
      n /= x;
      d /= x;
    }
    constexpr Wide lo = std::numeric_limits<std::int64_t>::min() + 1;
    constexpr Wide hi = std::numeric_limits<std::int64_t>::max();
    if (n < lo || n > hi || d > hi) throw ArithmeticOverflow();
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace linedyn
