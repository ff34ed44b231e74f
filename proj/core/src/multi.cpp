#include "linedyn/multi.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

#include "beat.hpp"
#include "linedyn/errors.hpp"

namespace linedyn {

MultiMap::MultiMap(LineWindow window, std::vector<std::vector<LineIndex>> values)
    : window_(std::move(window)), values_(std::move(values)) {
  if (values_.size() != window_.size())
    throw InvalidMultiMap("multimap needs one value set per window point");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    auto& v = values_[k];
    const std::string where = line_label(window_.lo() + static_cast<LineIndex>(k));
    if (v.empty()) throw InvalidMultiMap("empty value set at " + where);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (!window_.contains(v.front()) || !window_.contains(v.back()))
      throw InvalidMultiMap("value set at " + where + " leaves the window");
  }
}

MultiMap MultiMap::from_selfmap(const SelfMap& f) {
  if (!f.is_window_selfmap()) throw OutOfWindow("self-map leaves its window");
  std::vector<std::vector<LineIndex>> values;
  values.reserve(f.values().size());
  for (LineIndex v : f.values()) values.push_back({v});
  return MultiMap(f.window().with_tails(TailRule::none(), TailRule::none()), std::move(values));
}

const std::vector<LineIndex>& MultiMap::at(LineIndex x) const { return values_[window_.elem(x)]; }

bool MultiMap::contains(LineIndex x, LineIndex y) const {
  const auto& v = at(x);
  return std::binary_search(v.begin(), v.end(), y);
}

GraphPoset graph_poset(const MultiMap& f) {
  const LineWindow& w = f.window();
  GraphPoset g;
  for (LineIndex x = w.lo(); x <= w.hi(); ++x)
    for (LineIndex y : f.at(x)) {
      g.points.emplace_back(x, y);
      g.proj_p.push_back(w.elem(x));
      g.proj_q.push_back(w.elem(y));
    }
  const Poset& base = w.poset();
  std::vector<Relation> rel;
  std::vector<std::string> labels;
  labels.reserve(g.points.size());
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    labels.push_back("(" + line_label(g.points[i].first) + "," + line_label(g.points[i].second) + ")");
    for (std::size_t j = 0; j < g.points.size(); ++j)
      if (i != j && base.leq(g.proj_p[i], g.proj_p[j]) && base.leq(g.proj_q[i], g.proj_q[j]))
        rel.emplace_back(i, j);
  }
  g.poset = Poset::from_relations(g.points.size(), rel, std::move(labels));
  return g;
}

VietorisVerdict is_vietoris_like_map(const Poset& x, const Poset& y, std::span<const ElemId> f) {
  if (auto bad = find_order_violation(x, y, f))
    throw InvalidMap("map is not order-preserving at " + x.label(bad->a) + " <= " + x.label(bad->b));
  VietorisVerdict verdict;
  for (const auto& chain : y.chains()) {
    std::vector<ElemId> fibre;
    for (ElemId e = 0; e < x.size(); ++e)
      if (std::find(chain.begin(), chain.end(), f[e]) != chain.end()) fibre.push_back(e);
    const Poset sub = x.induced(fibre);
    if (is_acyclic(sub)) continue;
    verdict.ok = false;
    verdict.witness_chain = chain;
    verdict.witness_homology = reduced_homology(sub);
    return verdict;
  }
  return verdict;
}

VietorisVerdict is_vietoris_like_multimap(const MultiMap& f) {
  const LineWindow& w = f.window();
  const Poset& base = w.poset();
  std::vector<std::pair<LineIndex, LineIndex>> pts;
  for (const auto& chain : base.chains()) {
    pts.clear();
    for (ElemId e : chain)
      for (LineIndex y : f.at(w.index(e))) pts.emplace_back(w.index(e), y);
    const auto core = detail::beat_core(pts.size(), [&](std::size_t a, std::size_t b) {
      return line_leq(pts[a].first, pts[b].first) && line_leq(pts[a].second, pts[b].second);
    });
    if (core.size() == 1) continue;
    // not contractible by beat points; settle it with homology on the graph
    const GraphPoset g = graph_poset(f);
    return is_vietoris_like_map(g.poset, base, g.proj_p);
  }
  return {};
}

LefschetzResult lefschetz_number(const MultiMap& f) {
  if (!is_vietoris_like_multimap(f).ok) throw NotVietoris("multimap is not Vietoris-like");
  const GraphPoset g = graph_poset(f);
  LefschetzResult r = lefschetz_number_from_graph(g.poset, f.window().poset(), g.proj_p, g.proj_q);
  r.fixed_point_found = !fixed_points(f).empty();
  return r;
}

void for_each_interval_multimap(const LineWindow& w, const std::function<void(const MultiMap&)>& visit,
                                std::optional<std::size_t> first_choice) {
  std::vector<std::vector<LineIndex>> choices;
  for (LineIndex a = w.lo(); a <= w.hi(); ++a)
    for (LineIndex b = a; b <= w.hi(); ++b) choices.push_back(line_interval(a, b).points);
  const LineWindow plain = w.with_tails(TailRule::none(), TailRule::none());
  const std::size_t n = w.size();
  std::vector<std::size_t> pick(n, 0);
  if (first_choice) {
    if (*first_choice >= choices.size()) return;
    pick[0] = *first_choice;
  }
  while (true) {
    std::vector<std::vector<LineIndex>> values(n);
    for (std::size_t k = 0; k < n; ++k) values[k] = choices[pick[k]];
    visit(MultiMap(plain, std::move(values)));
    // odometer, last point fastest; the first point stays put when pinned
    const std::size_t stop = first_choice ? 1 : 0;
    bool advanced = false;
    for (std::size_t k = n; k > stop && !advanced;) {
      --k;
      if (++pick[k] < choices.size()) advanced = true;
      else pick[k] = 0;
    }
    if (!advanced) return;
  }
}

std::size_t interval_value_choices(const LineWindow& w) { return w.size() * (w.size() + 1) / 2; }

std::vector<LineIndex> fixed_points(const MultiMap& f) {
  std::vector<LineIndex> out;
  for (LineIndex x = f.window().lo(); x <= f.window().hi(); ++x)
    if (f.contains(x, x)) out.push_back(x);
  return out;
}

TransitionGraph transition_graph(const MultiMap& f) {
  const LineWindow& w = f.window();
  TransitionGraph g;
  for (LineIndex x = w.lo(); x <= w.hi(); ++x) {
    g.nodes.push_back(x);
    std::vector<std::size_t> succ;
    for (LineIndex y : f.at(x)) succ.push_back(w.elem(y));
    g.successors.push_back(std::move(succ));
    g.self_loop_multi.push_back(f.contains(x, x) && f.at(x).size() >= 2);
  }
  return g;
}

std::vector<std::size_t> PeriodicOrbits::spectrum() const {
  std::vector<std::size_t> out;
  for (const auto& [n, list] : orbits)
    if (!list.empty()) out.push_back(n);
  return out;
}

namespace {

/// Simple cycles whose least node is `start`, through nodes >= start only.
/// dist[v] is a lower bound on the steps from v back to start.
class CycleSearch {
 public:
  CycleSearch(const TransitionGraph& g, std::size_t start) : g_(g), start_(start) {
    const std::size_t n = g.nodes.size();
    dist_.assign(n, kFar);
    std::vector<std::vector<std::size_t>> pred(n);
    for (std::size_t v = start; v < n; ++v)
      for (std::size_t w : g.successors[v])
        if (w >= start) pred[w].push_back(v);
    std::deque<std::size_t> queue{start};
    dist_[start] = 0;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t u : pred[v])
        if (dist_[u] == kFar) {
          dist_[u] = dist_[v] + 1;
          queue.push_back(u);
        }
    }
    on_path_.assign(n, false);
  }

  /// Calls found(path) for cycles of exactly `length` nodes until it returns
  /// false.
  template <class Found>
  void run(std::size_t length, Found&& found) {
    path_.assign(1, start_);
    on_path_[start_] = true;
    stop_ = false;
    extend(length, found);
    on_path_[start_] = false;
  }

 private:
  static constexpr std::size_t kFar = static_cast<std::size_t>(-1);

  template <class Found>
  void extend(std::size_t length, Found& found) {
    const std::size_t v = path_.back();
    const std::size_t remaining = length - path_.size();  // nodes still to add
    for (std::size_t w : g_.successors[v]) {
      if (stop_) return;
      if (w == start_) {
        if (remaining == 0 && !found(path_)) stop_ = true;
        continue;
      }
      if (remaining == 0 || w < start_ || on_path_[w] || dist_[w] == kFar || dist_[w] > remaining) continue;
      on_path_[w] = true;
      path_.push_back(w);
      extend(length, found);
      path_.pop_back();
      on_path_[w] = false;
    }
  }

  const TransitionGraph& g_;
  std::size_t start_;
  std::vector<std::size_t> dist_;
  std::vector<bool> on_path_;
  std::vector<std::size_t> path_;
  bool stop_ = false;
};

}  // namespace

PeriodicOrbits periodic_orbits(const MultiMap& f, std::size_t max_period, std::size_t limit) {
  if (max_period > f.window().size())
    throw InvalidRange("max_period exceeds the number of window points");
  const TransitionGraph g = transition_graph(f);
  PeriodicOrbits out;
  for (std::size_t n = 1; n <= max_period; ++n) {
    auto& list = out.orbits[n];
    bool truncated = false;
    for (std::size_t s = 0; s < g.nodes.size() && !truncated; ++s) {
      CycleSearch search(g, s);
      search.run(n, [&](const std::vector<std::size_t>& path) {
        if (list.size() == limit) {
          truncated = true;
          return false;
        }
        std::vector<LineIndex> orbit;
        for (std::size_t v : path) orbit.push_back(g.nodes[v]);
        list.push_back(std::move(orbit));
        return true;
      });
    }
    if (truncated) out.truncated.push_back(n);
  }
  return out;
}

std::vector<std::size_t> period_spectrum(const MultiMap& f, std::size_t max_period) {
  if (max_period > f.window().size())
    throw InvalidRange("max_period exceeds the number of window points");
  const TransitionGraph g = transition_graph(f);
  std::vector<std::size_t> out;
  std::vector<CycleSearch> searches;
  searches.reserve(g.nodes.size());
  for (std::size_t s = 0; s < g.nodes.size(); ++s) searches.emplace_back(g, s);
  for (std::size_t n = 1; n <= max_period; ++n) {
    bool found = false;
    for (auto& search : searches) {
      search.run(n, [&](const std::vector<std::size_t>&) {
        found = true;
        return false;
      });
      if (found) break;
    }
    if (found) out.push_back(n);
  }
  return out;
}

std::vector<LineIndex> orbit_stream(const MultiMap& f, LineIndex start, const OrbitPolicy& policy,
                                    std::size_t max_steps) {
  if (policy.stall_bound == 0) throw InvalidRange("stall bound must be at least 1");
  f.window().elem(start);
  std::mt19937_64 rng(policy.seed);
  std::vector<LineIndex> points{start};
  LineIndex t = start;
  std::size_t run = 1;
  std::vector<LineIndex> candidates;
  for (std::size_t step = 0; step < max_steps; ++step) {
    const auto& values = f.at(t);
    candidates = values;
    const bool stall_node = values.size() >= 2 && f.contains(t, t);
    if (stall_node && run >= policy.stall_bound)
      candidates.erase(std::remove(candidates.begin(), candidates.end(), t), candidates.end());
    LineIndex next = candidates.front();
    if (policy.kind == OrbitPolicy::Kind::Random) {
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      next = candidates[pick(rng)];
    }
    run = next == t ? run + 1 : 1;
    t = next;
    points.push_back(t);
  }
  return points;
}

MultiMap mirror_conjugate(const MultiMap& f) {
  const LineWindow& w = f.window();
  LineWindow mw(-w.hi(), -w.lo());
  std::vector<std::vector<LineIndex>> values;
  for (LineIndex i = mw.lo(); i <= mw.hi(); ++i) {
    std::vector<LineIndex> v;
    for (LineIndex y : f.at(-i)) v.push_back(-y);
    values.push_back(std::move(v));
  }
  return MultiMap(std::move(mw), std::move(values));
}

}  // namespace linedyn
