#include "linedyn/complex.hpp"

#include <algorithm>
#include <set>

#include "linedyn/errors.hpp"

namespace linedyn {

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices) {
  std::set<Simplex> closed;
  for (auto& s : simplices) {
    if (s.empty()) throw InvalidRange("empty simplex");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw InvalidRange("simplex with a repeated vertex");
    if (s.size() > 62) throw SizeGuard("simplex too large to close");
    if (closed.count(s)) continue;
    const std::size_t faces = (std::size_t{1} << s.size());
    for (std::size_t mask = 1; mask < faces; ++mask) {
      Simplex face;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (mask & (std::size_t{1} << j)) face.push_back(s[j]);
      closed.insert(std::move(face));
    }
  }
  SimplicialComplex k;
  for (const auto& s : closed) {
    const std::size_t dim = s.size() - 1;
    if (k.by_dim_.size() <= dim) k.by_dim_.resize(dim + 1);
    k.by_dim_[dim].push_back(s);
  }
  // std::set iteration is already lexicographic within each dimension
  return k;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
  static const std::vector<Simplex> none;
  if (dim < 0 || dim > dimension()) return none;
  return by_dim_[static_cast<std::size_t>(dim)];
}

std::size_t SimplicialComplex::count(int dim) const { return simplices(dim).size(); }

std::size_t SimplicialComplex::size() const {
  std::size_t total = 0;
  for (const auto& d : by_dim_) total += d.size();
  return total;
}

std::optional<std::size_t> SimplicialComplex::find(const Simplex& s) const {
  if (s.empty()) return std::nullopt;
  const auto& list = simplices(static_cast<int>(s.size()) - 1);
  auto it = std::lower_bound(list.begin(), list.end(), s);
  if (it == list.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - list.begin());
}

std::size_t SimplicialComplex::global_id(int dim, std::size_t local) const {
  std::size_t offset = 0;
  for (int d = 0; d < dim; ++d) offset += count(d);
  return offset + local;
}

std::vector<Simplex> SimplicialComplex::all() const {
  std::vector<Simplex> out;
  out.reserve(size());
  for (const auto& d : by_dim_) out.insert(out.end(), d.begin(), d.end());
  return out;
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::vector<Vertex> out;
  for (const auto& s : simplices(0)) out.push_back(s.front());
  return out;
}

SimplicialComplex order_complex(const Poset& p) {
  auto chains = p.chains();
  for (auto& c : chains) std::sort(c.begin(), c.end());
  if (chains.empty()) return {};
  return SimplicialComplex::from_simplices(std::move(chains));
}

FacePoset face_poset(const SimplicialComplex& k) {
  FacePoset fp;
  fp.simplices = k.all();
  std::vector<Relation> covers;
  std::vector<std::string> labels;
  labels.reserve(fp.simplices.size());
  for (std::size_t id = 0; id < fp.simplices.size(); ++id) {
    const Simplex& s = fp.simplices[id];
    std::string label = "{";
    for (std::size_t j = 0; j < s.size(); ++j) label += (j ? "," : "") + std::to_string(s[j]);
    labels.push_back(label + "}");
    if (s.size() < 2) continue;
    const int face_dim = static_cast<int>(s.size()) - 2;
    for (std::size_t j = 0; j < s.size(); ++j) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
      covers.emplace_back(k.global_id(face_dim, *k.find(face)), id);
    }
  }
  fp.poset = Poset::from_relations(fp.simplices.size(), covers, std::move(labels));
  return fp;
}

Simplex SimplicialMap::apply(const Simplex& s) const {
  Simplex out;
  out.reserve(s.size());
  for (Vertex v : s) {
    if (v >= vertex_image.size()) throw InvalidMap("simplicial map undefined on a vertex");
    out.push_back(vertex_image[v]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_simplicial(const SimplicialComplex& k, const SimplicialComplex& n, const SimplicialMap& g) {
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(d)) {
      for (Vertex v : s)
        if (v >= g.vertex_image.size()) return false;
      if (!n.contains(g.apply(s))) return false;
    }
  return true;
}

SimplicialMap induced_simplicial_map(const Poset& x, const Poset& y, std::span<const ElemId> f) {
  if (auto bad = find_order_violation(x, y, f))
    throw InvalidMap("map is not order-preserving at " + x.label(bad->a) + " <= " + x.label(bad->b));
  return SimplicialMap{{f.begin(), f.end()}};
}

std::vector<ElemId> induced_poset_map(const SimplicialComplex& k, const SimplicialComplex& n,
                                      const SimplicialMap& g) {
  std::vector<ElemId> out;
  out.reserve(k.size());
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(d)) {
      const Simplex image = g.apply(s);
      auto local = n.find(image);
      if (!local) throw InvalidMap("simplicial map sends a simplex outside the target complex");
      out.push_back(n.global_id(static_cast<int>(image.size()) - 1, *local));
    }
  return out;
}

ChainComplex boundary_matrices(const SimplicialComplex& k) {
  ChainComplex cc;
  const int top = k.dimension();
  for (int d = 0; d <= top; ++d) cc.chain_ranks.push_back(k.count(d));
  if (top < 0) {
    // The augmentation of the empty complex is the 1 x 0 matrix.
    cc.boundary.emplace_back(1, 0);
    return cc;
  }
  IntMatrix aug(1, k.count(0));
  for (std::size_t c = 0; c < k.count(0); ++c) aug(0, c) = 1;
  cc.boundary.push_back(std::move(aug));
  for (int d = 1; d <= top; ++d) {
    IntMatrix m(k.count(d - 1), k.count(d));
    const auto& cols = k.simplices(d);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (std::size_t j = 0; j < cols[c].size(); ++j) {
        Simplex face = cols[c];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
        m(*k.find(face), c) = (j % 2 == 0) ? 1 : -1;
      }
    }
    cc.boundary.push_back(std::move(m));
  }
  return cc;
}

IntMatrix chain_map(const SimplicialComplex& k, const SimplicialComplex& n, const SimplicialMap& g,
                    int dim) {
  const auto& src = k.simplices(dim);
  IntMatrix m(n.count(dim), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    Simplex image;
    image.reserve(src[c].size());
    for (Vertex v : src[c]) {
      if (v >= g.vertex_image.size()) throw InvalidMap("simplicial map undefined on a vertex");
      image.push_back(g.vertex_image[v]);
    }
    // sign of the sorting permutation; repeated vertices give a degenerate simplex
    int sign = 1;
    bool degenerate = false;
    for (std::size_t i = 1; i < image.size() && !degenerate; ++i)
      for (std::size_t j = i; j > 0; --j) {
        if (image[j - 1] == image[j]) {
          degenerate = true;
          break;
        }
        if (image[j - 1] < image[j]) break;
        std::swap(image[j - 1], image[j]);
        sign = -sign;
      }
    if (degenerate) continue;
    auto row = n.find(image);
    if (!row) throw InvalidMap("simplicial map sends a simplex outside the target complex");
    m(*row, c) = sign;
  }
  return m;
}

}  // namespace linedyn
