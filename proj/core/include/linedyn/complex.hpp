#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "linedyn/matrix.hpp"
#include "linedyn/poset.hpp"

namespace linedyn {

using Vertex = std::size_t;
/// Strictly ascending vertex list.
using Simplex = std::vector<Vertex>;

/**
 * Finite abstract simplicial complex.
 *
 * Simplices are grouped by dimension and sorted lexicographically inside each
 * dimension. The global order (dimension first, then lexicographic) fixes the
 * ids of the face poset and the signs of the boundary matrices.
 */
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of the given simplices. Vertex lists are sorted;
  /// empty simplices or repeated vertices throw InvalidRange.
  static SimplicialComplex from_simplices(std::vector<Simplex> simplices);

  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<Simplex>& simplices(int dim) const;
  std::size_t count(int dim) const;
  std::size_t size() const;
  bool empty() const { return by_dim_.empty(); }

  /// Position of s among simplices of its dimension.
  std::optional<std::size_t> find(const Simplex& s) const;
  bool contains(const Simplex& s) const { return find(s).has_value(); }

  /// Global id: simplices of lower dimension first.
  std::size_t global_id(int dim, std::size_t local) const;
  std::vector<Simplex> all() const;

  std::vector<Vertex> vertices() const;

 private:
  std::vector<std::vector<Simplex>> by_dim_;
};

/// Non-empty chains of p; vertex ids are the element ids of p.
SimplicialComplex order_complex(const Poset& p);

/// Poset of simplices ordered by inclusion. Element k is the k-th simplex in
/// the complex's global order.
struct FacePoset {
  Poset poset;
  std::vector<Simplex> simplices;
};

FacePoset face_poset(const SimplicialComplex& k);

/// Vertex map of a simplicial map; vertex_image[v] is the image of vertex v.
struct SimplicialMap {
  std::vector<Vertex> vertex_image;

  Simplex apply(const Simplex& s) const;
};

/// Checks that every simplex of k maps onto a simplex of n.
bool is_simplicial(const SimplicialComplex& k, const SimplicialComplex& n, const SimplicialMap& g);

/// K(f): the chain f(x_1) <= ... <= f(x_n) of images. Throws InvalidMap when f
/// is not order-preserving.
SimplicialMap induced_simplicial_map(const Poset& x, const Poset& y, std::span<const ElemId> f);

/// X(g): sigma -> g(sigma) on face posets (global ids). Throws InvalidMap when
/// g is not simplicial.
std::vector<ElemId> induced_poset_map(const SimplicialComplex& k, const SimplicialComplex& n,
                                      const SimplicialMap& g);

/// Simplicial chain complex with integer boundary operators.
struct ChainComplex {
  /// boundary[k] is d_k : C_k -> C_{k-1} for k >= 1 (rows indexed by
  /// (k-1)-simplices). boundary[0] is the augmentation C_0 -> Z, a single row
  /// of ones.
  std::vector<IntMatrix> boundary;
  std::vector<std::size_t> chain_ranks;  // dim C_k

  int top_dimension() const { return static_cast<int>(chain_ranks.size()) - 1; }
};

/// Alternating face rule: removing vertex j of a k-simplex contributes (-1)^j.
ChainComplex boundary_matrices(const SimplicialComplex& k);

/// Chain map C_dim(k) -> C_dim(n) induced by g (degenerate images go to 0).
IntMatrix chain_map(const SimplicialComplex& k, const SimplicialComplex& n, const SimplicialMap& g,
                    int dim);

}  // namespace linedyn
