#include <algorithm>
#include <functional>

#include "linedyn/multi.hpp"

namespace linedyn {

std::string to_string(SideKind s) {
  switch (s) {
    case SideKind::Attracting:
      return "attracting";
    case SideKind::Repelling:
      return "repelling";
    case SideKind::Boundary:
      return "boundary";
    case SideKind::Mixed:
      return "mixed";
  }
  return "?";
}

std::string to_string(InvariantClass c) {
  switch (c) {
    case InvariantClass::Attractor:
      return "attractor";
    case InvariantClass::Repeller:
      return "repeller";
    case InvariantClass::Saddle:
      return "saddle";
  }
  return "?";
}

std::vector<InvariantSet> InvariantSetReport::classified() const {
  std::vector<InvariantSet> out;
  for (const auto& s : sets)
    if (s.cls) out.push_back(s);
  return out;
}

namespace {

// Tarjan's algorithm on the graph without self-loops; returns component ids.
std::vector<std::size_t> strong_components(const TransitionGraph& g, std::vector<std::size_t>& sizes) {
  const std::size_t n = g.nodes.size();
  std::vector<std::size_t> index(n, n), low(n, 0), comp(n, n);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : g.successors[v]) {
      if (w == v) continue;
      if (index[w] == n) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      const std::size_t id = sizes.size();
      sizes.push_back(0);
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = id;
        ++sizes[id];
      } while (w != v);
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] == n) visit(v);
  return comp;
}

bool reaches(const TransitionGraph& g, std::size_t from, const std::vector<bool>& target) {
  std::vector<bool> seen(g.nodes.size(), false);
  std::vector<std::size_t> todo{from};
  seen[from] = true;
  while (!todo.empty()) {
    const std::size_t v = todo.back();
    todo.pop_back();
    if (target[v]) return true;
    for (std::size_t w : g.successors[v])
      if (!seen[w]) {
        seen[w] = true;
        todo.push_back(w);
      }
  }
  return false;
}

// Nodes from which every fair orbit enters the target. A pause at a
// multi-valued node cannot last forever, so its self-loop is ignored.
std::vector<bool> inevitable(const TransitionGraph& g, const std::vector<bool>& target) {
  std::vector<bool> inev = target;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
      if (inev[v]) continue;
      bool any = false;
      bool all = true;
      for (std::size_t w : g.successors[v]) {
        if (w == v && g.self_loop_multi[v]) continue;
        any = true;
        if (!inev[w]) {
          all = false;
          break;
        }
      }
      if (any && all) {
        inev[v] = true;
        changed = true;
      }
    }
  }
  return inev;
}

}  // namespace

InvariantSetReport classify_invariant_sets(const MultiMap& f) {
  const TransitionGraph g = transition_graph(f);
  const std::size_t n = g.nodes.size();
  std::vector<std::size_t> sizes;
  const auto comp = strong_components(g, sizes);

  std::vector<bool> recurrent(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    const bool rest = g.successors[v].size() == 1 && g.successors[v][0] == v;
    recurrent[v] = rest || sizes[comp[v]] >= 2;
  }

  InvariantSetReport report;
  for (std::size_t v = 0; v < n;) {
    if (!recurrent[v]) {
      ++v;
      continue;
    }
    std::size_t end = v;
    while (end + 1 < n && recurrent[end + 1]) ++end;

    std::vector<bool> in_set(n, false);
    for (std::size_t k = v; k <= end; ++k) in_set[k] = true;
    const auto inev = inevitable(g, in_set);
    auto side = [&](std::size_t neighbour) {
      if (!reaches(g, neighbour, in_set)) return SideKind::Repelling;
      return inev[neighbour] ? SideKind::Attracting : SideKind::Mixed;
    };

    InvariantSet s;
    s.set = line_interval(g.nodes[v], g.nodes[end]);
    s.left = v == 0 ? SideKind::Boundary : side(v - 1);
    s.right = end + 1 == n ? SideKind::Boundary : side(end + 1);
    if (s.left == SideKind::Attracting && s.right == SideKind::Attracting) {
      s.cls = InvariantClass::Attractor;
    } else if (s.left == SideKind::Repelling && s.right == SideKind::Repelling) {
      s.cls = InvariantClass::Repeller;
    } else if ((s.left == SideKind::Attracting && s.right == SideKind::Repelling) ||
               (s.left == SideKind::Repelling && s.right == SideKind::Attracting)) {
      s.cls = InvariantClass::Saddle;
    } else {
      std::string why;
      if (s.left == SideKind::Boundary || s.right == SideKind::Boundary) why = "touches the window boundary";
      if (s.left == SideKind::Mixed || s.right == SideKind::Mixed)
        why += std::string(why.empty() ? "" : "; ") + "mixed side";
      s.diagnostic = "unclassified: " + why;
    }
    report.sets.push_back(std::move(s));
    v = end + 1;
  }
  return report;
}

}  // namespace linedyn
