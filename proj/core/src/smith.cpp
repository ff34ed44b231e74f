#include "linedyn/smith.hpp"

namespace linedyn {

SmithForm<BigInt> smith_normal_form(const BigIntMatrix& m) {
  return detail::smith_impl<BigInt, true>(m);
}

SmithForm<BigInt> smith_normal_form(const IntMatrix& m) {
  return detail::smith_impl<BigInt, true>(m.cast<BigInt>());
}

std::vector<BigInt> invariant_factors(const IntMatrix& m) {
  try {
    auto fast = detail::smith_impl<std::int64_t, false>(m);
    return {fast.invariant_factors.begin(), fast.invariant_factors.end()};
  } catch (const ArithmeticOverflow&) {
    return detail::smith_impl<BigInt, false>(m.cast<BigInt>()).invariant_factors;
  }
}

std::size_t integer_rank(const IntMatrix& m) { return invariant_factors(m).size(); }

BigInt determinant(const BigIntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidRange("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigIntMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace linedyn
