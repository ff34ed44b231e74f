#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linedyn/homology.hpp"
#include "linedyn/line.hpp"

namespace linedyn {

/**
 * A self-map of the line model described by its values on a window plus the
 * window's tail rules for everything outside it.
 *
 * Window values may point outside the window (a shift map does); evaluating
 * such a point then falls back on the tail rule of that side.
 */
class SelfMap {
 public:
  /// values[k] is the image index of x_{lo + k}.
  SelfMap(LineWindow window, std::vector<LineIndex> values);

  const LineWindow& window() const { return window_; }
  const std::vector<LineIndex>& values() const { return values_; }

  /// Image of x_i; nullopt when i lies in a tail with rule None.
  std::optional<LineIndex> operator()(LineIndex i) const;
  /// Image of a window point; throws NotFound outside the window.
  LineIndex at(LineIndex i) const;

  /// True when every window value lies in the window.
  bool is_window_selfmap() const;

  /// Same map with values[k] replaced (used by the enumerator).
  std::vector<LineIndex>& mutable_values() { return values_; }

 private:
  LineWindow window_;
  std::vector<LineIndex> values_;
};

SelfMap identity_map(const LineWindow& w);
/// x_i -> x_{-i} on a symmetric window, with mirror tails.
SelfMap mirror_map(LineIndex n);
/// x_i -> x_{i + offset} everywhere (window values plus shift tails).
SelfMap shift_map(const LineWindow& w, LineIndex offset);
/// Conjugate m o f o m by the mirror x_i -> x_{-i}; window [-hi, -lo], tails
/// swapped and reflected.
SelfMap mirror_conjugate(const SelfMap& f);

struct LineViolation {
  LineIndex a;
  LineIndex b;  // a <= b in L but f(a) <= f(b) fails
};

/// Order-preservation on the window and across both seams. Throws
/// InvalidTail for an odd shift offset or a mirror tail on a non-symmetric
/// window.
std::optional<LineViolation> is_order_preserving_line(const SelfMap& f);
inline bool check_continuity(const SelfMap& f) { return !is_order_preserving_line(f).has_value(); }

/// f([a, b]) as ascending indices. Throws OutOfWindow if an image leaves the
/// window and NotFound if a or b is outside it.
std::vector<LineIndex> image_of_interval(const SelfMap& f, LineIndex a, LineIndex b);
/// [f(a), f(b)] is contained in f([a, b]).
bool contains_interval_check(const SelfMap& f, LineIndex a, LineIndex b);

struct OrbitRecord {
  enum class Status { Periodic, LeftWindow, Inconclusive };

  LineIndex start = 0;
  std::vector<LineIndex> points;
  Status status = Status::Inconclusive;
  std::size_t period = 0;     // Periodic
  std::size_t preperiod = 0;  // Periodic
  Direction direction = Direction::Neither;  // LeftWindow
};

/// Iterates until the orbit repeats, escapes into a tail (None tails, or
/// shifts pointing away from the window), or max_steps is exhausted.
OrbitRecord iterate(const SelfMap& f, LineIndex x, std::size_t max_steps);

Direction tends_to(const SelfMap& f, LineIndex x, std::size_t max_steps);

/// Window points with minimal period <= max_period, keyed by period.
std::map<std::size_t, std::vector<LineIndex>> periodic_points(const SelfMap& f, std::size_t max_period);
std::vector<LineIndex> fixed_points(const SelfMap& f);

struct DynamicsClass {
  enum class Tag {
    Identity,
    EventuallyFixedInterval,
    PeriodTwoHomeomorphism,
    PeriodTwoAttractor,
    DriftRight,
    DriftLeft,
  };

  Tag tag = Tag::Identity;
  /// The unique fixed point z of the period-two classes.
  std::optional<LineIndex> fixed_point;
  /// Fixed interval [z, w] or attractor [x, y]; nullopt means unbounded on
  /// that side.
  std::optional<LineIndex> lower;
  std::optional<LineIndex> upper;
};

std::string to_string(DynamicsClass::Tag tag);

/// Decides which case of the period-two / no-periodic-point classification a
/// continuous map falls into. Throws InvalidMap for discontinuous maps and
/// Inconclusive when an orbit leaves the window into a None tail.
DynamicsClass classify_dynamics(const SelfMap& f);

/// P(2): the period-two points of the window plus the unique fixed point.
/// Throws EmptyResult when f has no period-two point.
Interval p2_set(const SelfMap& f);

/// Single-valued Lefschetz number of a window self-map.
LefschetzResult lefschetz_number(const SelfMap& f);

struct EnumerationOptions {
  /// Refuse windows larger than this unless force is set.
  std::size_t size_guard = 13;
  bool force = false;
  /// Restrict to maps sending x_lo to this index (one partition).
  std::optional<LineIndex> first_image;
};

/// Visits every order-preserving self-map of the window (tails None) once,
/// in lexicographic order of the value vector. The SelfMap passed to `visit`
/// is reused between calls.
void for_each_continuous_selfmap(const LineWindow& w, const std::function<void(const SelfMap&)>& visit,
                                 const EnumerationOptions& options = {});
std::vector<SelfMap> enumerate_continuous_selfmaps(const LineWindow& w,
                                                   const EnumerationOptions& options = {});

}  // namespace linedyn
