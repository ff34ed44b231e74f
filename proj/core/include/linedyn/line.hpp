#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "linedyn/poset.hpp"

namespace linedyn {

/// The integer i naming the point x_i of the line model.
using LineIndex = std::int64_t;

/// x_i is minimal (a vertex of the triangulation) exactly when i is odd.
constexpr bool is_vertex_index(LineIndex i) { return (i % 2) != 0; }

/// Order of the infinite line model: a <= b iff a == b, or they are neighbours
/// and a is the odd one.
constexpr bool line_leq(LineIndex a, LineIndex b) {
  if (a == b) return true;
  return (a - b == 1 || b - a == 1) && is_vertex_index(a);
}

std::string line_label(LineIndex i);

/// Behaviour of a self-map beyond one end of a window.
struct TailRule {
  enum class Kind { None, Shift, Collapse, Mirror };

  Kind kind = Kind::None;
  /// Shift offset, or Collapse target index.
  LineIndex param = 0;

  static TailRule none() { return {}; }
  static TailRule shift(LineIndex offset) { return {Kind::Shift, offset}; }
  static TailRule collapse(LineIndex target) { return {Kind::Collapse, target}; }
  static TailRule mirror() { return {Kind::Mirror, 0}; }

  /// Image of an index governed by this rule; nullopt for None.
  std::optional<LineIndex> apply(LineIndex i) const;

  friend bool operator==(const TailRule&, const TailRule&) = default;
};

std::string to_string(const TailRule& rule);

/**
 * The finite fragment {x_lo, ..., x_hi} of the line model.
 *
 * Element x_i has poset id i - lo. The poset is shared between copies, so
 * windows are cheap to pass around by value.
 */
class LineWindow {
 public:
  /// Throws InvalidRange when lo > hi.
  LineWindow(LineIndex lo, LineIndex hi, TailRule left = {}, TailRule right = {});

  LineIndex lo() const { return lo_; }
  LineIndex hi() const { return hi_; }
  std::size_t size() const { return static_cast<std::size_t>(hi_ - lo_ + 1); }
  bool contains(LineIndex i) const { return lo_ <= i && i <= hi_; }

  /// Poset id of x_i; throws NotFound outside the window.
  ElemId elem(LineIndex i) const;
  LineIndex index(ElemId e) const;

  const Poset& poset() const { return *poset_; }

  const TailRule& left_tail() const { return left_; }
  const TailRule& right_tail() const { return right_; }
  LineWindow with_tails(TailRule left, TailRule right) const;

  bool symmetric() const { return lo_ == -hi_; }

 private:
  LineIndex lo_;
  LineIndex hi_;
  std::shared_ptr<const Poset> poset_;
  TailRule left_;
  TailRule right_;
};

LineWindow build_line_window(LineIndex lo, LineIndex hi);

/// Order queries on a window, addressed by line index.
bool leq(const LineWindow& w, LineIndex a, LineIndex b);
std::vector<LineIndex> minimal_open(const LineWindow& w, LineIndex x);
int height(const LineWindow& w, LineIndex x);

/// The fence [a, b] of the line model. [a, b] and [b, a] are the same set.
struct Interval {
  LineIndex a = 0;
  LineIndex b = 0;
  /// Ascending indices from min(a, b) to max(a, b).
  std::vector<LineIndex> points;

  LineIndex lower() const { return a < b ? a : b; }
  LineIndex upper() const { return a < b ? b : a; }
  std::size_t size() const { return points.size(); }
  bool contains(LineIndex i) const { return lower() <= i && i <= upper(); }
  /// Points strictly between the endpoints, (a, b).
  std::vector<LineIndex> interior() const;
};

/// Interval of the whole line model, no window bounds.
Interval line_interval(LineIndex a, LineIndex b);
/// Interval inside a window; throws NotFound when an endpoint is outside.
Interval interval(const LineWindow& w, LineIndex a, LineIndex b);

enum class Direction { PlusInfinity, MinusInfinity, Neither };

std::string to_string(Direction d);

/// A sequence given by a finite prefix whose continuation is generated by a
/// tail rule applied to the last point.
struct OrbitDescription {
  std::vector<LineIndex> prefix;
  TailRule continuation;
};

/// Decided from the continuation: a positive shift runs to x_{+inf}, a
/// negative one to x_{-inf}; anything else stays bounded.
Direction tends_to(const OrbitDescription& seq);

}  // namespace linedyn
