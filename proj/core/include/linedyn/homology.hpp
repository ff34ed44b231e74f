#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "linedyn/complex.hpp"
#include "linedyn/matrix.hpp"
#include "linedyn/poset.hpp"

namespace linedyn {

struct HomologyDegree {
  std::size_t betti = 0;
  /// Invariant factors > 1, each dividing the next.
  std::vector<BigInt> torsion;

  bool is_zero() const { return betti == 0 && torsion.empty(); }
  friend bool operator==(const HomologyDegree&, const HomologyDegree&) = default;
};

/// Integral homology, degrees 0..dim. Reduced groups also carry degree -1,
/// which is Z exactly for the empty complex.
struct HomologyGroups {
  bool reduced = true;
  std::size_t betti_minus_one = 0;
  std::vector<HomologyDegree> degrees;

  std::size_t betti(std::size_t k) const { return k < degrees.size() ? degrees[k].betti : 0; }
  bool is_zero() const;
  std::string summary() const;
};

HomologyGroups homology(const SimplicialComplex& k, bool reduced);
HomologyGroups reduced_homology(const SimplicialComplex& k);
/// Homology of the order complex of p.
HomologyGroups reduced_homology(const Poset& p);

/// True iff every reduced homology group vanishes. The empty space is not
/// acyclic.
bool is_acyclic(const SimplicialComplex& k);
/// Reduces p to its core by removing beat points first; a one-point core is
/// contractible, anything else goes through Smith normal form.
bool is_acyclic(const Poset& p);

/// Ids of the core of p (beat points removed in ascending id order).
std::vector<ElemId> core_elements(const Poset& p);

/// Matrices of g_* on rational homology H_k, k = 0..dim(K). Bases of each
/// H_k are fixed by the deterministic simplex order; rows index H_k of the
/// target, columns H_k of the source.
std::vector<RationalMatrix> rational_homology_map(const SimplicialComplex& k,
                                                  const SimplicialComplex& n,
                                                  const SimplicialMap& g);
/// f_* for an order-preserving f: X -> Y through the order complexes.
std::vector<RationalMatrix> rational_homology_map(const Poset& x, const Poset& y,
                                                  std::span<const ElemId> f);

std::vector<std::size_t> rational_betti_numbers(const SimplicialComplex& k);

/// Lefschetz data: per-degree traces of the induced endomorphism on rational
/// homology and their alternating sum.
struct LefschetzResult {
  std::vector<Rational> traces;
  Rational lambda = 0;
  bool fixed_point_predicted = false;
  /// Whether a fixed point was actually located (cross-check).
  bool fixed_point_found = false;
};

/// Lefschetz number of an order-preserving self-map f: X -> X.
LefschetzResult lefschetz_number(const Poset& x, std::span<const ElemId> f);

/// Lefschetz number of the multivalued map with graph poset `graph` and
/// projections p, q: graph -> X, computed as the traces of q_* (p_*)^{-1}.
/// Throws std::logic_error when p_* is not invertible.
LefschetzResult lefschetz_number_from_graph(const Poset& graph, const Poset& x,
                                            std::span<const ElemId> p,
                                            std::span<const ElemId> q);

}  // namespace linedyn
