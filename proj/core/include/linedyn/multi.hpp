#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linedyn/homology.hpp"
#include "linedyn/line.hpp"
#include "linedyn/single.hpp"

namespace linedyn {

/// Multivalued self-map of a window: every point has a non-empty set of
/// images inside the window.
class MultiMap {
 public:
  /// values[k] lists the images of x_{lo + k}; sorted and deduplicated on
  /// construction. Throws InvalidMultiMap on empty or out-of-window values.
  MultiMap(LineWindow window, std::vector<std::vector<LineIndex>> values);

  static MultiMap from_selfmap(const SelfMap& f);

  const LineWindow& window() const { return window_; }
  const std::vector<LineIndex>& at(LineIndex x) const;
  const std::vector<std::vector<LineIndex>>& values() const { return values_; }
  bool contains(LineIndex x, LineIndex y) const;

 private:
  LineWindow window_;
  std::vector<std::vector<LineIndex>> values_;
};

/// Gamma(F) = {(x, y) : y in F(x)} with the product order, and its two
/// projections into the window poset.
struct GraphPoset {
  Poset poset;
  std::vector<std::pair<LineIndex, LineIndex>> points;
  std::vector<ElemId> proj_p;
  std::vector<ElemId> proj_q;
};

GraphPoset graph_poset(const MultiMap& f);

struct VietorisVerdict {
  bool ok = true;
  /// First chain (bottom to top, target element ids) whose preimage union is
  /// not acyclic.
  std::vector<ElemId> witness_chain;
  HomologyGroups witness_homology;
};

/// For every chain y_1 < ... < y_n of Y, the union of the fibres f^{-1}(y_i)
/// must be acyclic. Throws InvalidMap when f is not order-preserving.
VietorisVerdict is_vietoris_like_map(const Poset& x, const Poset& y, std::span<const ElemId> f);
/// Applies the check to the projection p of the graph poset.
VietorisVerdict is_vietoris_like_multimap(const MultiMap& f);

/// Lambda(F) from q_* (p_*)^{-1}. Throws NotVietoris unless F is Vietoris-like.
LefschetzResult lefschetz_number(const MultiMap& f);

std::vector<LineIndex> fixed_points(const MultiMap& f);

/// Visits every multimap of the window whose value sets are intervals
/// [a, b], a <= b, once. Value choices per point are ordered by (a, b); the
/// last point varies fastest. first_choice pins the first point's value to
/// one choice, which splits the corpus into interval_value_choices(w) parts.
void for_each_interval_multimap(const LineWindow& w, const std::function<void(const MultiMap&)>& visit,
                                std::optional<std::size_t> first_choice = std::nullopt);
std::size_t interval_value_choices(const LineWindow& w);

/// x -> y for y in F(x).
struct TransitionGraph {
  std::vector<LineIndex> nodes;
  std::vector<std::vector<std::size_t>> successors;  // node positions
  /// x in F(x) and |F(x)| >= 2: the orbit may pause here but not forever.
  std::vector<bool> self_loop_multi;
};

TransitionGraph transition_graph(const MultiMap& f);

struct PeriodicOrbits {
  /// Cycles of pairwise distinct points, x_1 -> ... -> x_n -> x_1, each
  /// listed from its least index.
  std::map<std::size_t, std::vector<std::vector<LineIndex>>> orbits;
  /// Periods whose orbit list was cut at the per-period limit.
  std::vector<std::size_t> truncated;

  std::vector<std::size_t> spectrum() const;
};

/// Simple cycles of each length up to max_period (at most `limit` listed per
/// length). Throws InvalidRange when max_period exceeds the window size.
PeriodicOrbits periodic_orbits(const MultiMap& f, std::size_t max_period, std::size_t limit = 1000);
/// Lengths n <= max_period for which a simple cycle of length n exists.
std::vector<std::size_t> period_spectrum(const MultiMap& f, std::size_t max_period);

struct OrbitPolicy {
  enum class Kind { LeastIndex, Random };
  Kind kind = Kind::LeastIndex;
  std::uint64_t seed = 0;
  /// Longest run of one point allowed at a node with x in F(x), |F(x)| >= 2.
  std::size_t stall_bound = 1;
};

/// A forward orbit prefix t_0 = start, t_{i+1} in F(t_i), respecting the
/// stall bound. Returns max_steps + 1 points.
std::vector<LineIndex> orbit_stream(const MultiMap& f, LineIndex start, const OrbitPolicy& policy,
                                    std::size_t max_steps);

enum class SideKind { Attracting, Repelling, Boundary, Mixed };
enum class InvariantClass { Attractor, Repeller, Saddle };

std::string to_string(SideKind s);
std::string to_string(InvariantClass c);

struct InvariantSet {
  Interval set;
  SideKind left = SideKind::Boundary;
  SideKind right = SideKind::Boundary;
  /// Empty when a side is mixed or touches the window boundary.
  std::optional<InvariantClass> cls;
  std::string diagnostic;
};

struct InvariantSetReport {
  std::vector<InvariantSet> sets;

  std::vector<InvariantSet> classified() const;
};

/// Invariant intervals (runs of rest points and recurrent classes) and the
/// attracting / repelling behaviour of their neighbours.
InvariantSetReport classify_invariant_sets(const MultiMap& f);

/// x_i -> -F(x_{-i}) on the mirrored window.
MultiMap mirror_conjugate(const MultiMap& f);

}  // namespace linedyn
