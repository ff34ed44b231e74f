#pragma once

// Reference implementations used only by the tests. Each one recomputes a
// quantity from its definition, by a route that shares no code with the
// library.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "linedyn/complex.hpp"
#include "linedyn/poset.hpp"

namespace oracle {

using Index = std::int64_t;
/// le[a][b] != 0 iff a <= b.
using Order = std::vector<std::vector<char>>;
using BigInt = boost::multiprecision::cpp_int;

/// x_a <= x_b in the line model, read off the zigzag picture.
bool line_leq(Index a, Index b);

/// Every order-preserving function on [lo, hi], found by testing all
/// |W|^|W| functions. Values listed in lexicographic order.
std::vector<std::vector<Index>> brute_force_selfmaps(Index lo, Index hi);

/// Number of order-preserving self-maps of [lo, hi] by a transfer matrix over
/// consecutive positions.
std::uint64_t transfer_matrix_count(Index lo, Index hi);

Order order_of(const linedyn::Poset& p);
Order line_order(Index lo, Index hi);
/// Random partial order on n points: a random DAG closed transitively.
Order random_order(std::size_t n, double density, std::mt19937_64& rng);

/// Backtracking search for an order isomorphism.
bool isomorphic(const Order& a, const Order& b);

/// Reduced rational Betti numbers of the order complex, index k + 1 for
/// degree k (entry 0 is degree -1). Gaussian elimination over Q.
std::vector<std::size_t> reduced_betti(const Order& p);
std::vector<std::size_t> reduced_betti(const linedyn::SimplicialComplex& k);

/// Non-empty chains of the order, bottom to top.
std::vector<std::vector<std::size_t>> chains(const Order& p);

/// Rank over Q.
std::size_t rank(std::vector<std::vector<BigInt>> m);
/// Exact determinant over Q (square matrix).
BigInt determinant(std::vector<std::vector<BigInt>> m);

/// d_k = gcd of all k x k minors; invariant factors are d_k / d_{k-1}.
std::vector<BigInt> determinantal_divisors(const std::vector<std::vector<BigInt>>& m);

/// Number of simple directed cycles of each length, by trying every sequence
/// of distinct nodes that starts at its least node.
std::map<std::size_t, std::size_t> simple_cycle_counts(const std::vector<std::vector<char>>& adj,
                                                       std::size_t max_len);

}  // namespace oracle
