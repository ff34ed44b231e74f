#include "linedyn/homology.hpp"

#include <sstream>
#include <stdexcept>

#include "beat.hpp"
#include "linalg.hpp"
#include "linedyn/smith.hpp"

namespace linedyn {

bool HomologyGroups::is_zero() const {
  if (betti_minus_one != 0) return false;
  for (const auto& d : degrees)
    if (!d.is_zero()) return false;
  return true;
}

std::string HomologyGroups::summary() const {
  std::ostringstream os;
  if (reduced && betti_minus_one) os << "H~_-1 = Z; ";
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    os << (reduced ? "H~_" : "H_") << k << " = ";
    bool first = true;
    if (degrees[k].betti) {
      os << "Z";
      if (degrees[k].betti > 1) os << "^" << degrees[k].betti;
      first = false;
    }
    for (const auto& t : degrees[k].torsion) {
      os << (first ? "" : " + ") << "Z/" << t;
      first = false;
    }
    if (first) os << "0";
    if (k + 1 < degrees.size()) os << "; ";
  }
  return os.str();
}

HomologyGroups homology(const SimplicialComplex& k, bool reduced) {
  const ChainComplex cc = boundary_matrices(k);
  HomologyGroups h;
  h.reduced = reduced;
  const int top = cc.top_dimension();

  // rank and torsion of every boundary operator; index 0 is the augmentation
  std::vector<std::size_t> rank(static_cast<std::size_t>(top + 2), 0);
  std::vector<std::vector<BigInt>> factors(static_cast<std::size_t>(top + 2));
  for (int d = 0; d <= top; ++d) {
    if (d == 0 && !reduced) continue;
    factors[static_cast<std::size_t>(d)] = invariant_factors(cc.boundary[static_cast<std::size_t>(d)]);
    rank[static_cast<std::size_t>(d)] = factors[static_cast<std::size_t>(d)].size();
  }
  if (reduced) h.betti_minus_one = 1 - rank[0];

  for (int d = 0; d <= top; ++d) {
    const auto i = static_cast<std::size_t>(d);
    HomologyDegree deg;
    deg.betti = cc.chain_ranks[i] - rank[i] - rank[i + 1];
    for (const auto& f : factors[i + 1])
      if (f > 1) deg.torsion.push_back(f);
    h.degrees.push_back(std::move(deg));
  }
  return h;
}

HomologyGroups reduced_homology(const SimplicialComplex& k) { return homology(k, true); }

HomologyGroups reduced_homology(const Poset& p) { return homology(order_complex(p), true); }

bool is_acyclic(const SimplicialComplex& k) { return reduced_homology(k).is_zero(); }

std::vector<ElemId> core_elements(const Poset& p) {
  return detail::beat_core(p.size(), [&](std::size_t a, std::size_t b) { return p.leq(a, b); });
}

bool is_acyclic(const Poset& p) {
  if (p.empty()) return false;
  const auto core = core_elements(p);
  if (core.size() == 1) return true;
  return reduced_homology(p.induced(core)).is_zero();
}

namespace {

template <class F>
std::vector<RationalMatrix> homology_map_in(const SimplicialComplex& k, const SimplicialComplex& n,
                                            const SimplicialMap& g) {
  const auto src = detail::homology_basis<F>(boundary_matrices(k));
  const auto dst = detail::homology_basis<F>(boundary_matrices(n));
  std::vector<RationalMatrix> out;
  for (int d = 0; d <= k.dimension(); ++d) {
    const auto m = detail::induced_on_homology(src, dst, chain_map(k, n, g, d), static_cast<std::size_t>(d));
    RationalMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    out.push_back(std::move(r));
  }
  return out;
}

template <class F>
Rational trace_of(const Matrix<F>& m) {
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows() && i < m.cols(); ++i) t += Rational(m(i, i));
  return t;
}

void finish(LefschetzResult& r) {
  r.lambda = 0;
  for (std::size_t k = 0; k < r.traces.size(); ++k) r.lambda += (k % 2 == 0) ? r.traces[k] : Rational(-r.traces[k]);
  r.fixed_point_predicted = r.lambda != 0;
}

template <class F>
LefschetzResult graph_lefschetz_in(const Poset& graph, const Poset& x, std::span<const ElemId> p,
                                   std::span<const ElemId> q) {
  const SimplicialComplex kg = order_complex(graph);
  const SimplicialComplex kx = order_complex(x);
  const auto hg = detail::homology_basis<F>(boundary_matrices(kg));
  const auto hx = detail::homology_basis<F>(boundary_matrices(kx));
  const SimplicialMap sp{{p.begin(), p.end()}};
  const SimplicialMap sq{{q.begin(), q.end()}};

  LefschetzResult r;
  const int top = std::max(kg.dimension(), kx.dimension());
  for (int d = 0; d <= top; ++d) {
    const auto k = static_cast<std::size_t>(d);
    const std::size_t hgk = k < hg.reps.size() ? hg.reps[k].cols() : 0;
    const std::size_t hxk = k < hx.reps.size() ? hx.reps[k].cols() : 0;
    if (hgk != hxk) throw std::logic_error("p_* is not an isomorphism: ranks differ in degree " + std::to_string(d));
    if (hgk == 0) {
      r.traces.emplace_back(0);
      continue;
    }
    const auto pk = detail::induced_on_homology(hg, hx, chain_map(kg, kx, sp, d), k);
    const auto qk = detail::induced_on_homology(hg, hx, chain_map(kg, kx, sq, d), k);
    Matrix<F> pinv;
    try {
      pinv = detail::inverse(pk);
    } catch (const std::logic_error&) {
      throw std::logic_error("p_* is not invertible in degree " + std::to_string(d));
    }
    r.traces.push_back(trace_of(qk * pinv));
  }
  finish(r);
  return r;
}

}  // namespace

std::vector<RationalMatrix> rational_homology_map(const SimplicialComplex& k, const SimplicialComplex& n,
                                                  const SimplicialMap& g) {
  if (!is_simplicial(k, n, g)) throw InvalidMap("map is not simplicial");
  try {
    return homology_map_in<CheckedRational>(k, n, g);
  } catch (const ArithmeticOverflow&) {
    return homology_map_in<Rational>(k, n, g);
  }
}

std::vector<RationalMatrix> rational_homology_map(const Poset& x, const Poset& y,
                                                  std::span<const ElemId> f) {
  const SimplicialMap g = induced_simplicial_map(x, y, f);
  return rational_homology_map(order_complex(x), order_complex(y), g);
}

std::vector<std::size_t> rational_betti_numbers(const SimplicialComplex& k) {
  const auto hb = detail::homology_basis<Rational>(boundary_matrices(k));
  std::vector<std::size_t> out;
  for (const auto& r : hb.reps) out.push_back(r.cols());
  return out;
}

LefschetzResult lefschetz_number(const Poset& x, std::span<const ElemId> f) {
  LefschetzResult r;
  for (const auto& m : rational_homology_map(x, x, f)) {
    Rational t = 0;
    for (std::size_t i = 0; i < m.rows() && i < m.cols(); ++i) t += m(i, i);
    r.traces.push_back(t);
  }
  finish(r);
  for (ElemId e = 0; e < f.size(); ++e)
    if (f[e] == e) r.fixed_point_found = true;
  return r;
}

LefschetzResult lefschetz_number_from_graph(const Poset& graph, const Poset& x, std::span<const ElemId> p,
                                            std::span<const ElemId> q) {
  if (!is_order_preserving(graph, x, p) || !is_order_preserving(graph, x, q))
    throw InvalidMap("graph projections must be order-preserving");
  // The inclusion of the core is a homotopy equivalence, so q_* (p_*)^{-1}
  // can be read off the restrictions of p and q to it.
  const auto core = core_elements(graph);
  const Poset small = graph.induced(core);
  std::vector<ElemId> pc, qc;
  for (ElemId e : core) {
    pc.push_back(p[e]);
    qc.push_back(q[e]);
  }
  try {
    return graph_lefschetz_in<CheckedRational>(small, x, pc, qc);
  } catch (const ArithmeticOverflow&) {
    return graph_lefschetz_in<Rational>(small, x, pc, qc);
  }
}

}  // namespace linedyn
