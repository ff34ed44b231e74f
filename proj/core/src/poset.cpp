#include "linedyn/poset.hpp"

#include <algorithm>
#include <sstream>

#include "linedyn/errors.hpp"

namespace linedyn {

Poset Poset::from_relations(std::size_t n, std::span<const Relation> less,
                            std::vector<std::string> labels) {
  Poset p;
  p.n_ = n;
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  } else if (labels.size() != n) {
    throw InvalidRange("label count does not match element count");
  }
  p.labels_ = std::move(labels);

  std::vector<std::vector<ElemId>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [a, b] : less) {
    if (a >= n || b >= n) throw NotFound("relation endpoint outside the poset");
    if (a == b) continue;
    succ[a].push_back(b);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (ElemId b : s) ++indegree[b];
  }

  // Kahn's algorithm; a leftover element means the relation has a cycle.
  std::vector<ElemId> topo;
  topo.reserve(n);
  std::vector<ElemId> ready;
  for (ElemId v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    ElemId v = ready.back();
    ready.pop_back();
    topo.push_back(v);
    for (ElemId w : succ[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  if (topo.size() != n) throw NotAPartialOrder("relation contains a cycle");

  std::vector<std::vector<ElemId>> pred(n);
  for (ElemId a = 0; a < n; ++a)
    for (ElemId b : succ[a]) pred[b].push_back(a);

  p.leq_.assign(n * n, 0);
  for (ElemId b : topo) {
    p.leq_[b * n + b] = 1;
    for (ElemId a : pred[b]) {
      // everything below a is below b
      for (ElemId c = 0; c < n; ++c)
        if (p.leq_[c * n + a]) p.leq_[c * n + b] = 1;
    }
  }

  p.up_.assign(n, {});
  p.down_.assign(n, {});
  for (ElemId a = 0; a < n; ++a) {
    for (ElemId b = 0; b < n; ++b) {
      if (a == b || !p.leq_[a * n + b]) continue;
      bool cover = true;
      for (ElemId c = 0; c < n && cover; ++c) {
        if (c == a || c == b) continue;
        if (p.leq_[a * n + c] && p.leq_[c * n + b]) cover = false;
      }
      if (cover) {
        p.covers_.emplace_back(a, b);
        p.up_[a].push_back(b);
        p.down_[b].push_back(a);
      }
    }
  }

  p.height_.assign(n, 0);
  for (ElemId v : topo)
    for (ElemId c : p.down_[v]) p.height_[v] = std::max(p.height_[v], p.height_[c] + 1);
  return p;
}

void Poset::check(ElemId x) const {
  if (x >= n_) throw NotFound("element " + std::to_string(x) + " is not in the poset");
}

bool Poset::leq(ElemId a, ElemId b) const {
  check(a);
  check(b);
  return leq_[a * n_ + b] != 0;
}

const std::vector<ElemId>& Poset::upper_covers(ElemId a) const {
  check(a);
  return up_[a];
}

const std::vector<ElemId>& Poset::lower_covers(ElemId a) const {
  check(a);
  return down_[a];
}

std::vector<ElemId> Poset::down_set(ElemId x) const {
  check(x);
  std::vector<ElemId> out;
  for (ElemId y = 0; y < n_; ++y)
    if (leq_[y * n_ + x]) out.push_back(y);
  return out;
}

std::vector<ElemId> Poset::up_set(ElemId x) const {
  check(x);
  std::vector<ElemId> out;
  for (ElemId y = 0; y < n_; ++y)
    if (leq_[x * n_ + y]) out.push_back(y);
  return out;
}

int Poset::height(ElemId x) const {
  check(x);
  return height_[x];
}

int Poset::height() const {
  int h = -1;
  for (int v : height_) h = std::max(h, v);
  return h;
}

std::vector<ElemId> Poset::minimal_elements() const {
  std::vector<ElemId> out;
  for (ElemId x = 0; x < n_; ++x)
    if (down_[x].empty()) out.push_back(x);
  return out;
}

std::vector<ElemId> Poset::maximal_elements() const {
  std::vector<ElemId> out;
  for (ElemId x = 0; x < n_; ++x)
    if (up_[x].empty()) out.push_back(x);
  return out;
}

namespace {

void extend_chains(const Poset& p, std::vector<ElemId>& chain,
                   std::vector<std::vector<ElemId>>& out) {
  out.push_back(chain);
  const ElemId top = chain.back();
  for (ElemId next = 0; next < p.size(); ++next) {
    if (next == top || !p.leq(top, next)) continue;
    chain.push_back(next);
    extend_chains(p, chain, out);
    chain.pop_back();
  }
}

}  // namespace

std::vector<std::vector<ElemId>> Poset::chains() const {
  std::vector<std::vector<ElemId>> out;
  std::vector<ElemId> chain;
  for (ElemId x = 0; x < n_; ++x) {
    chain.assign(1, x);
    extend_chains(*this, chain, out);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

Poset Poset::induced(std::span<const ElemId> elems) const {
  for (ElemId e : elems) check(e);
  std::vector<Relation> rel;
  std::vector<std::string> labels;
  labels.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    labels.push_back(labels_[elems[i]]);
    for (std::size_t j = 0; j < elems.size(); ++j)
      if (i != j && leq_[elems[i] * n_ + elems[j]]) rel.emplace_back(i, j);
  }
  return from_relations(elems.size(), rel, std::move(labels));
}

const std::string& Poset::label(ElemId x) const {
  check(x);
  return labels_[x];
}

Poset product(const Poset& p, const Poset& q) {
  const std::size_t m = q.size();
  std::vector<Relation> rel;
  std::vector<std::string> labels;
  labels.reserve(p.size() * m);
  for (ElemId a = 0; a < p.size(); ++a)
    for (ElemId b = 0; b < m; ++b) labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
  for (const auto& [a, a2] : p.covers())
    for (ElemId b = 0; b < m; ++b) rel.emplace_back(a * m + b, a2 * m + b);
  for (ElemId a = 0; a < p.size(); ++a)
    for (const auto& [b, b2] : q.covers()) rel.emplace_back(a * m + b, a * m + b2);
  return Poset::from_relations(p.size() * m, rel, std::move(labels));
}

std::optional<OrderViolation> find_order_violation(const Poset& x, const Poset& y,
                                                   std::span<const ElemId> f) {
  if (f.size() != x.size()) throw InvalidMap("map is not total on its domain");
  for (ElemId img : f)
    if (img >= y.size()) throw NotFound("image element is not in the target poset");
  for (const auto& [a, b] : x.covers())
    if (!y.leq(f[a], f[b])) return OrderViolation{a, b};
  return std::nullopt;
}

std::vector<ElemId> compose(std::span<const ElemId> g, std::span<const ElemId> f) {
  std::vector<ElemId> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] >= g.size()) throw NotFound("composition: image outside the middle poset");
    out[i] = g[f[i]];
  }
  return out;
}

std::string to_dot(const Poset& p, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=circle];\n";
  for (ElemId x = 0; x < p.size(); ++x) os << "  \"" << p.label(x) << "\";\n";
  for (int h = 0; h <= p.height(); ++h) {
    os << "  { rank=same;";
    for (ElemId x = 0; x < p.size(); ++x)
      if (p.height(x) == h) os << " \"" << p.label(x) << "\";";
    os << " }\n";
  }
  for (const auto& [a, b] : p.covers())
    os << "  \"" << p.label(a) << "\" -> \"" << p.label(b) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace linedyn
