#include <catch_amalgamated.hpp>

#include <random>

#include "linedyn/complex.hpp"
#include "linedyn/errors.hpp"
#include "linedyn/homology.hpp"
#include "linedyn/line.hpp"
#include "linedyn/smith.hpp"
#include "oracles.hpp"

using namespace linedyn;

namespace {

Poset from_order(const oracle::Order& le) {
  std::vector<Relation> rel;
  for (std::size_t a = 0; a < le.size(); ++a)
    for (std::size_t b = 0; b < le.size(); ++b)
      if (a != b && le[a][b]) rel.emplace_back(a, b);
  return Poset::from_relations(le.size(), rel);
}

Poset minimal_circle() {
  std::vector<Relation> rel{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  return Poset::from_relations(4, rel, {"a", "b", "c", "d"});
}

SimplicialComplex path(std::size_t edges) {
  std::vector<Simplex> s;
  for (std::size_t i = 0; i < edges; ++i) s.push_back({i, i + 1});
  if (edges == 0) s.push_back({0});
  return SimplicialComplex::from_simplices(s);
}

SimplicialComplex projective_plane() {
  std::vector<Simplex> s{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                         {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}};
  return SimplicialComplex::from_simplices(s);
}

std::vector<std::size_t> library_betti(const HomologyGroups& h) {
  std::vector<std::size_t> out{h.betti_minus_one};
  for (const auto& d : h.degrees) out.push_back(d.betti);
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::vector<std::size_t> trim(std::vector<std::size_t> v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}

std::vector<std::vector<oracle::BigInt>> to_rows(const IntMatrix& m) {
  std::vector<std::vector<oracle::BigInt>> out(m.rows(), std::vector<oracle::BigInt>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

std::vector<std::vector<oracle::BigInt>> to_rows(const BigIntMatrix& m) {
  std::vector<std::vector<oracle::BigInt>> out(m.rows(), std::vector<oracle::BigInt>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, int bound) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix m(dim(rng), dim(rng));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
  return m;
}

}  // namespace

TEST_CASE("order complex of a window is a path", "[homology]") {
  const LineWindow w(-2, 2);
  const auto k = order_complex(w.poset());
  CHECK(k.count(0) == 5);
  CHECK(k.count(1) == 4);
  CHECK(k.dimension() == 1);
  CHECK(order_complex(Poset()).empty());
}

TEST_CASE("boundary of boundary vanishes", "[homology]") {
  std::mt19937_64 rng(3);
  std::vector<SimplicialComplex> corpus{projective_plane(), path(4), order_complex(minimal_circle())};
  for (int t = 0; t < 15; ++t) corpus.push_back(order_complex(from_order(oracle::random_order(7, 0.45, rng))));
  for (const auto& k : corpus) {
    const auto cc = boundary_matrices(k);
    for (std::size_t d = 1; d < cc.boundary.size(); ++d) {
      const auto prod = cc.boundary[d - 1] * cc.boundary[d];
      for (std::size_t r = 0; r < prod.rows(); ++r)
        for (std::size_t c = 0; c < prod.cols(); ++c) REQUIRE(prod(r, c) == 0);
    }
  }
}

TEST_CASE("Smith normal form of small examples", "[smith]") {
  const IntMatrix a{{2, 0}, {0, 3}};
  const auto fa = invariant_factors(a);
  REQUIRE(fa.size() == 2);
  CHECK(fa[0] == 1);
  CHECK(fa[1] == 6);

  // incidence matrix of a 4-cycle
  const IntMatrix c4{{-1, 0, 0, 1}, {1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}};
  CHECK(integer_rank(c4) == 3);
  const auto f4 = invariant_factors(c4);
  CHECK(f4 == std::vector<BigInt>{1, 1, 1});

  const IntMatrix z(3, 2);
  CHECK(integer_rank(z) == 0);
  CHECK(determinant(BigIntMatrix{{4, 7}, {2, 6}}) == 10);
}

TEST_CASE("Smith form identities against determinantal divisors", "[smith]") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix m = random_matrix(rng, 5, 9);
    const auto sf = smith_normal_form(m);
    const BigIntMatrix big = m.cast<BigInt>();
    REQUIRE(sf.u * big * sf.v == sf.d);
    REQUIRE(abs(oracle::determinant(to_rows(sf.u))) == 1);
    REQUIRE(abs(oracle::determinant(to_rows(sf.v))) == 1);
    for (std::size_t r = 0; r < sf.d.rows(); ++r)
      for (std::size_t c = 0; c < sf.d.cols(); ++c)
        if (r != c) REQUIRE(sf.d(r, c) == 0);
    const auto dk = oracle::determinantal_divisors(to_rows(m));
    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t k = 0; k < dk.size() && dk[k] != 0; ++k) {
      REQUIRE(k < sf.invariant_factors.size());
      REQUIRE(sf.invariant_factors[k] == dk[k] / prev);
      if (k > 0) REQUIRE(sf.invariant_factors[k] % sf.invariant_factors[k - 1] == 0);
      prev = dk[k];
      rank = k + 1;
    }
    REQUIRE(sf.rank() == rank);
    REQUIRE(rank == oracle::rank(to_rows(m)));
  }
}

TEST_CASE("Smith form survives entries beyond 64 bits", "[smith]") {
  const BigInt big = BigInt(1) << 80;
  const BigIntMatrix m{{big, big + 1}, {big - 1, big}};
  const auto sf = smith_normal_form(m);
  REQUIRE(sf.u * m * sf.v == sf.d);
  REQUIRE(sf.invariant_factors.size() == 2);
  CHECK(sf.invariant_factors[0] == 1);
  CHECK(sf.invariant_factors[1] == 1);  // det = big^2 - (big^2 - 1)
}

TEST_CASE("windows are acyclic", "[homology]") {
  for (LineIndex lo = -4; lo <= 1; ++lo)
    for (LineIndex hi = lo; hi <= lo + 8; ++hi) {
      const LineWindow w(lo, hi);
      const auto h = reduced_homology(w.poset());
      REQUIRE(h.is_zero());
      REQUIRE(is_acyclic(w.poset()));
      REQUIRE(core_elements(w.poset()).size() == 1);
    }
}

TEST_CASE("minimal circle has one loop", "[homology]") {
  const Poset c = minimal_circle();
  const auto h = reduced_homology(c);
  CHECK(h.betti(0) == 0);
  CHECK(h.betti(1) == 1);
  CHECK(h.degrees[1].torsion.empty());
  CHECK_FALSE(is_acyclic(c));
  CHECK(core_elements(c).size() == 4);
  CHECK(h.summary() == "H~_0 = 0; H~_1 = Z");
}

TEST_CASE("empty space is not acyclic; a cone is", "[homology]") {
  const auto h = reduced_homology(Poset());
  CHECK(h.betti_minus_one == 1);
  CHECK_FALSE(is_acyclic(Poset()));
  CHECK_FALSE(is_acyclic(SimplicialComplex()));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    auto le = oracle::random_order(6, 0.3, rng);
    for (auto& row : le) row.push_back(1);  // a new top element
    le.push_back(std::vector<char>(le.size() + 1, 0));
    le.back().back() = 1;
    REQUIRE(is_acyclic(from_order(le)));
  }
}

TEST_CASE("projective plane has 2-torsion", "[homology]") {
  const auto k = projective_plane();
  const auto h = reduced_homology(k);
  CHECK(h.betti(0) == 0);
  CHECK(h.betti(1) == 0);
  CHECK(h.betti(2) == 0);
  REQUIRE(h.degrees[1].torsion.size() == 1);
  CHECK(h.degrees[1].torsion[0] == 2);
  CHECK_FALSE(is_acyclic(k));
  // rationally invisible
  CHECK(trim(oracle::reduced_betti(k)) == std::vector<std::size_t>{0});
}

TEST_CASE("Betti numbers agree with elimination over Q", "[homology]") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    const auto le = oracle::random_order(1 + t % 9, 0.25 + 0.05 * (t % 5), rng);
    const Poset p = from_order(le);
    const auto h = reduced_homology(p);
    REQUIRE(library_betti(h) == trim(oracle::reduced_betti(le)));
    REQUIRE(is_acyclic(p) == (library_betti(h) == std::vector<std::size_t>{0} && h.is_zero()));
    // the core carries the same homology
    const auto core = core_elements(p);
    const auto hc = reduced_homology(p.induced(core));
    REQUIRE(library_betti(hc) == library_betti(h));
  }
}

TEST_CASE("face poset of a path is a window", "[complex]") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto fp = face_poset(path(n));
    const auto lo = LineIndex{1}, hi = static_cast<LineIndex>(2 * n + 1);
    REQUIRE(oracle::isomorphic(oracle::order_of(fp.poset), oracle::line_order(lo, hi)));
  }
}

TEST_CASE("subdivision keeps simplices and homology", "[complex]") {
  std::mt19937_64 rng(29);
  std::vector<SimplicialComplex> corpus{projective_plane(), path(3)};
  for (int t = 0; t < 8; ++t) corpus.push_back(order_complex(from_order(oracle::random_order(5, 0.4, rng))));
  for (const auto& k : corpus) {
    const auto fp = face_poset(k);
    const auto sd = order_complex(fp.poset);
    REQUIRE(sd.count(0) == k.size());
    REQUIRE(trim(oracle::reduced_betti(sd)) == trim(oracle::reduced_betti(k)));
  }
}

TEST_CASE("induced maps are functorial", "[homology]") {
  const Poset c = minimal_circle();
  std::vector<std::vector<ElemId>> maps;
  for (ElemId a = 0; a < 4; ++a)
    for (ElemId b = 0; b < 4; ++b)
      for (ElemId x = 0; x < 4; ++x)
        for (ElemId y = 0; y < 4; ++y) {
          std::vector<ElemId> f{a, b, x, y};
          if (is_order_preserving(c, c, f)) maps.push_back(f);
        }
  REQUIRE_FALSE(maps.empty());
  for (std::size_t i = 0; i < maps.size(); i += 3)
    for (std::size_t j = 0; j < maps.size(); j += 5) {
      const auto hf = rational_homology_map(c, c, maps[i]);
      const auto hg = rational_homology_map(c, c, maps[j]);
      const auto hgf = rational_homology_map(c, c, compose(maps[j], maps[i]));
      REQUIRE(hgf.size() == hf.size());
      for (std::size_t d = 0; d < hf.size(); ++d) REQUIRE(hg[d] * hf[d] == hgf[d]);
    }
}

TEST_CASE("reflection of the minimal circle reverses H_1", "[homology]") {
  const Poset c = minimal_circle();
  const std::vector<ElemId> swap_ab{1, 0, 2, 3};
  const auto h = rational_homology_map(c, c, swap_ab);
  REQUIRE(h.size() >= 2);
  REQUIRE(h[1].rows() == 1);
  CHECK(h[1](0, 0) == -1);
  const auto l = lefschetz_number(c, swap_ab);
  CHECK(l.lambda == 2);
  CHECK(l.fixed_point_found);

  const std::vector<ElemId> identity{0, 1, 2, 3};
  CHECK(lefschetz_number(c, identity).lambda == 0);
  const std::vector<ElemId> constant{2, 2, 2, 2};
  CHECK(lefschetz_number(c, constant).lambda == 1);
  // rotation by a half turn: swaps both pairs and has no fixed point
  const std::vector<ElemId> rotate{1, 0, 3, 2};
  const auto r = lefschetz_number(c, rotate);
  CHECK(r.lambda == 0);
  CHECK_FALSE(r.fixed_point_found);
}

TEST_CASE("simplicial maps induce poset maps", "[complex]") {
  const auto k = path(2);
  const SimplicialMap fold{{0, 1, 0}};
  REQUIRE(is_simplicial(k, k, fold));
  const auto f = induced_poset_map(k, k, fold);
  const auto fp = face_poset(k);
  CHECK(is_order_preserving(fp.poset, fp.poset, f));
  const SimplicialMap bad{{0, 2, 1}};
  CHECK_FALSE(is_simplicial(k, k, bad));
  CHECK_THROWS_AS(rational_homology_map(k, k, bad), InvalidMap);
}
