#include "linedyn/single.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "linedyn/errors.hpp"

namespace linedyn {

SelfMap::SelfMap(LineWindow window, std::vector<LineIndex> values)
    : window_(std::move(window)), values_(std::move(values)) {
  if (values_.size() != window_.size())
    throw InvalidMap("self-map needs exactly one value per window point");
}

std::optional<LineIndex> SelfMap::operator()(LineIndex i) const {
  if (window_.contains(i)) return values_[static_cast<std::size_t>(i - window_.lo())];
  return i < window_.lo() ? window_.left_tail().apply(i) : window_.right_tail().apply(i);
}

LineIndex SelfMap::at(LineIndex i) const {
  if (!window_.contains(i)) throw NotFound(line_label(i) + " is outside the window");
  return values_[static_cast<std::size_t>(i - window_.lo())];
}

bool SelfMap::is_window_selfmap() const {
  return std::all_of(values_.begin(), values_.end(), [&](LineIndex v) { return window_.contains(v); });
}

SelfMap identity_map(const LineWindow& w) {
  std::vector<LineIndex> v;
  for (LineIndex i = w.lo(); i <= w.hi(); ++i) v.push_back(i);
  return SelfMap(w, std::move(v));
}

SelfMap mirror_map(LineIndex n) {
  LineWindow w(-n, n, TailRule::mirror(), TailRule::mirror());
  std::vector<LineIndex> v;
  for (LineIndex i = -n; i <= n; ++i) v.push_back(-i);
  return SelfMap(std::move(w), std::move(v));
}

SelfMap shift_map(const LineWindow& w, LineIndex offset) {
  std::vector<LineIndex> v;
  for (LineIndex i = w.lo(); i <= w.hi(); ++i) v.push_back(i + offset);
  return SelfMap(w.with_tails(TailRule::shift(offset), TailRule::shift(offset)), std::move(v));
}

namespace {

TailRule reflect(const TailRule& r) {
  switch (r.kind) {
    case TailRule::Kind::Shift:
      return TailRule::shift(-r.param);
    case TailRule::Kind::Collapse:
      return TailRule::collapse(-r.param);
    default:
      return r;
  }
}

void validate_tail(const LineWindow& w, const TailRule& r) {
  if (r.kind == TailRule::Kind::Shift && r.param % 2 != 0)
    throw InvalidTail("shift tail offset " + std::to_string(r.param) + " is odd");
  if (r.kind == TailRule::Kind::Mirror && !w.symmetric())
    throw InvalidTail("mirror tail requires a window symmetric about x0");
}

// Checks the single cover between neighbours i and i + 1.
std::optional<LineViolation> check_pair(const SelfMap& f, LineIndex i) {
  const LineIndex lower = is_vertex_index(i) ? i : i + 1;
  const LineIndex upper = is_vertex_index(i) ? i + 1 : i;
  const auto fl = f(lower);
  const auto fu = f(upper);
  if (!fl || !fu) return std::nullopt;
  if (!line_leq(*fl, *fu)) return LineViolation{lower, upper};
  return std::nullopt;
}

}  // namespace

SelfMap mirror_conjugate(const SelfMap& f) {
  const LineWindow& w = f.window();
  LineWindow mw(-w.hi(), -w.lo(), reflect(w.right_tail()), reflect(w.left_tail()));
  std::vector<LineIndex> v;
  for (LineIndex i = mw.lo(); i <= mw.hi(); ++i) v.push_back(-f.at(-i));
  return SelfMap(std::move(mw), std::move(v));
}

std::optional<LineViolation> is_order_preserving_line(const SelfMap& f) {
  const LineWindow& w = f.window();
  validate_tail(w, w.left_tail());
  validate_tail(w, w.right_tail());
  for (LineIndex i = w.lo(); i < w.hi(); ++i)
    if (auto bad = check_pair(f, i)) return bad;
  if (w.left_tail().kind != TailRule::Kind::None)
    if (auto bad = check_pair(f, w.lo() - 1)) return bad;
  if (w.right_tail().kind != TailRule::Kind::None)
    if (auto bad = check_pair(f, w.hi())) return bad;
  return std::nullopt;
}

std::vector<LineIndex> image_of_interval(const SelfMap& f, LineIndex a, LineIndex b) {
  const Interval iv = interval(f.window(), a, b);
  std::vector<LineIndex> out;
  out.reserve(iv.size());
  for (LineIndex p : iv.points) {
    const LineIndex v = f.at(p);
    if (!f.window().contains(v))
      throw OutOfWindow("image " + line_label(v) + " of " + line_label(p) + " leaves the window");
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool contains_interval_check(const SelfMap& f, LineIndex a, LineIndex b) {
  const auto image = image_of_interval(f, a, b);
  for (LineIndex p : line_interval(f.at(a), f.at(b)).points)
    if (!std::binary_search(image.begin(), image.end(), p)) return false;
  return true;
}

OrbitRecord iterate(const SelfMap& f, LineIndex x, std::size_t max_steps) {
  const LineWindow& w = f.window();
  OrbitRecord rec;
  rec.start = x;
  rec.points.push_back(x);
  std::unordered_map<LineIndex, std::size_t> seen{{x, 0}};
  LineIndex cur = x;
  for (std::size_t step = 0;; ++step) {
    if (!w.contains(cur)) {
      const TailRule& rule = cur < w.lo() ? w.left_tail() : w.right_tail();
      if (rule.kind == TailRule::Kind::None) {
        if (step == 0) throw NotFound(line_label(x) + " lies in an undefined tail");
        rec.status = OrbitRecord::Status::LeftWindow;
        rec.direction = Direction::Neither;
        return rec;
      }
      const bool outward = rule.kind == TailRule::Kind::Shift &&
                           ((cur > w.hi() && rule.param > 0) || (cur < w.lo() && rule.param < 0));
      if (outward) {
        rec.status = OrbitRecord::Status::LeftWindow;
        rec.direction = tends_to(OrbitDescription{rec.points, rule});
        return rec;
      }
    }
    if (step == max_steps) {
      rec.status = OrbitRecord::Status::Inconclusive;
      return rec;
    }
    const LineIndex next = *f(cur);
    rec.points.push_back(next);
    if (auto it = seen.find(next); it != seen.end()) {
      rec.status = OrbitRecord::Status::Periodic;
      rec.preperiod = it->second;
      rec.period = step + 1 - it->second;
      return rec;
    }
    seen.emplace(next, step + 1);
    cur = next;
  }
}

Direction tends_to(const SelfMap& f, LineIndex x, std::size_t max_steps) {
  const OrbitRecord rec = iterate(f, x, max_steps);
  return rec.status == OrbitRecord::Status::LeftWindow ? rec.direction : Direction::Neither;
}

std::map<std::size_t, std::vector<LineIndex>> periodic_points(const SelfMap& f, std::size_t max_period) {
  std::map<std::size_t, std::vector<LineIndex>> out;
  const LineWindow& w = f.window();
  for (LineIndex x = w.lo(); x <= w.hi(); ++x) {
    LineIndex y = x;
    for (std::size_t n = 1; n <= max_period; ++n) {
      const auto next = f(y);
      if (!next) break;
      y = *next;
      if (y == x) {
        out[n].push_back(x);
        break;
      }
    }
  }
#ifndef NDEBUG
  if (check_continuity(f))
    for (const auto& [n, pts] : out) assert(n <= 2 && "continuous self-map with a point of period >= 3");
#endif
  return out;
}

std::vector<LineIndex> fixed_points(const SelfMap& f) {
  std::vector<LineIndex> out;
  for (LineIndex x = f.window().lo(); x <= f.window().hi(); ++x)
    if (f.at(x) == x) out.push_back(x);
  return out;
}

std::string to_string(DynamicsClass::Tag tag) {
  switch (tag) {
    case DynamicsClass::Tag::Identity:
      return "identity";
    case DynamicsClass::Tag::EventuallyFixedInterval:
      return "eventually_fixed_interval";
    case DynamicsClass::Tag::PeriodTwoHomeomorphism:
      return "period_two_homeomorphism";
    case DynamicsClass::Tag::PeriodTwoAttractor:
      return "period_two_attractor";
    case DynamicsClass::Tag::DriftRight:
      return "drift_right";
    case DynamicsClass::Tag::DriftLeft:
      return "drift_left";
  }
  return "?";
}

namespace {

bool contiguous(const std::set<LineIndex>& s) {
  return s.empty() || static_cast<std::size_t>(*s.rbegin() - *s.begin() + 1) == s.size();
}

// Tail points whose orbits stand in for the whole tail.
std::vector<LineIndex> tail_probes(const LineWindow& w, bool left) {
  const TailRule& r = left ? w.left_tail() : w.right_tail();
  std::vector<LineIndex> out;
  if (r.kind == TailRule::Kind::None) return out;
  LineIndex depth = 2;
  if (r.kind == TailRule::Kind::Shift) depth = std::max<LineIndex>(2, r.param < 0 ? -r.param : r.param);
  for (LineIndex d = 1; d <= depth; ++d) out.push_back(left ? w.lo() - d : w.hi() + d);
  if (r.kind == TailRule::Kind::Collapse) out.push_back(r.param);
  return out;
}

}  // namespace

DynamicsClass classify_dynamics(const SelfMap& f) {
  if (auto bad = is_order_preserving_line(f))
    throw InvalidMap("map is not continuous at " + line_label(bad->a) + " <= " + line_label(bad->b));
  const LineWindow& w = f.window();
  const TailRule& lt = w.left_tail();
  const TailRule& rt = w.right_tail();

  std::vector<LineIndex> probes;
  for (LineIndex i = w.lo(); i <= w.hi(); ++i) probes.push_back(i);
  for (bool left : {true, false})
    for (LineIndex p : tail_probes(w, left)) probes.push_back(p);

  const std::size_t max_steps = 4 * (probes.size() + 8);
  std::set<LineIndex> fixed;
  std::set<LineIndex> period_two;
  std::set<Direction> drifts;
  std::map<LineIndex, OrbitRecord> records;
  for (LineIndex p : probes) {
    OrbitRecord rec = iterate(f, p, max_steps);
    switch (rec.status) {
      case OrbitRecord::Status::Inconclusive:
        throw Inconclusive("orbit of " + line_label(p) + " did not settle");
      case OrbitRecord::Status::LeftWindow:
        if (rec.direction == Direction::Neither)
          throw Inconclusive("orbit of " + line_label(p) + " leaves the window into an undefined tail");
        drifts.insert(rec.direction);
        break;
      case OrbitRecord::Status::Periodic:
        for (std::size_t k = rec.preperiod; k < rec.preperiod + rec.period; ++k) {
          if (rec.period == 1)
            fixed.insert(rec.points[k]);
          else if (rec.period == 2)
            period_two.insert(rec.points[k]);
          else
            throw std::logic_error("continuous map with a periodic point of period " + std::to_string(rec.period));
        }
        break;
    }
    records.emplace(p, std::move(rec));
  }

  const bool fixed_left_tail = lt.kind == TailRule::Kind::Shift && lt.param == 0;
  const bool fixed_right_tail = rt.kind == TailRule::Kind::Shift && rt.param == 0;
  const bool mirror_tails = lt.kind == TailRule::Kind::Mirror && rt.kind == TailRule::Kind::Mirror;

  DynamicsClass out;
  if (!period_two.empty() || mirror_tails) {
    if (fixed.size() != 1 || fixed_left_tail || fixed_right_tail)
      throw std::logic_error("map with period-two points does not have exactly one fixed point");
    const LineIndex z = *fixed.begin();
    out.fixed_point = z;
    const bool tails_ok = (lt.kind == TailRule::Kind::None && rt.kind == TailRule::Kind::None) || mirror_tails;
    const bool all_two = std::all_of(probes.begin(), probes.end(), [&](LineIndex p) {
      const OrbitRecord& r = records.at(p);
      return p == z || (r.status == OrbitRecord::Status::Periodic && r.preperiod == 0 && r.period == 2);
    });
    if (tails_ok && all_two) {
      out.tag = DynamicsClass::Tag::PeriodTwoHomeomorphism;
      if (lt.kind == TailRule::Kind::None) {
        out.lower = w.lo();
        out.upper = w.hi();
      }
      return out;
    }
    std::set<LineIndex> p2 = period_two;
    p2.insert(z);
    if (!contiguous(p2)) throw std::logic_error("P(2) is not an interval");
    if (!drifts.empty()) throw std::logic_error("orbit escapes although a period-two point exists");
    out.tag = DynamicsClass::Tag::PeriodTwoAttractor;
    out.lower = *p2.begin();
    out.upper = *p2.rbegin();
    return out;
  }

  if (!fixed.empty() || fixed_left_tail || fixed_right_tail) {
    const bool tails_identity = (lt.kind == TailRule::Kind::None || fixed_left_tail) &&
                                (rt.kind == TailRule::Kind::None || fixed_right_tail);
    const bool everything_fixed = std::all_of(probes.begin(), probes.end(), [&](LineIndex p) {
      return fixed.count(p) != 0;
    });
    if (tails_identity && everything_fixed) {
      out.tag = DynamicsClass::Tag::Identity;
      return out;
    }
    if (!contiguous(fixed)) throw std::logic_error("fixed point set is not an interval");
    if (!drifts.empty()) throw std::logic_error("orbit escapes although a fixed point exists");
    out.tag = DynamicsClass::Tag::EventuallyFixedInterval;
    if (!fixed_left_tail) out.lower = *fixed.begin();
    if (!fixed_right_tail) out.upper = *fixed.rbegin();
    return out;
  }

  if (drifts.size() != 1) throw std::logic_error("orbits drift in both directions");
  out.tag = *drifts.begin() == Direction::PlusInfinity ? DynamicsClass::Tag::DriftRight
                                                        : DynamicsClass::Tag::DriftLeft;
  return out;
}

Interval p2_set(const SelfMap& f) {
  const LineWindow& w = f.window();
  std::set<LineIndex> p2;
  std::set<LineIndex> fixed;
  for (LineIndex x = w.lo(); x <= w.hi(); ++x) {
    const auto y = f(x);
    if (!y) continue;
    if (*y == x) {
      fixed.insert(x);
      continue;
    }
    const auto back = f(*y);
    if (back && *back == x) p2.insert(x);
  }
  if (p2.empty()) throw EmptyResult("map has no point of period two");
  if (fixed.size() != 1) throw std::logic_error("map with period-two points does not have exactly one fixed point");
  p2.insert(*fixed.begin());
  if (!contiguous(p2)) throw std::logic_error("P(2) is not an interval");
  return line_interval(*p2.begin(), *p2.rbegin());
}

LefschetzResult lefschetz_number(const SelfMap& f) {
  if (!f.is_window_selfmap()) throw OutOfWindow("Lefschetz number needs a self-map of the window");
  const LineWindow& w = f.window();
  std::vector<ElemId> images;
  images.reserve(w.size());
  for (LineIndex v : f.values()) images.push_back(w.elem(v));
  return lefschetz_number(w.poset(), images);
}

void for_each_continuous_selfmap(const LineWindow& w, const std::function<void(const SelfMap&)>& visit,
                                 const EnumerationOptions& options) {
  const std::size_t n = w.size();
  if (n > options.size_guard && !options.force)
    throw SizeGuard("window has " + std::to_string(n) + " points; enumeration guard is " +
                    std::to_string(options.size_guard));
  SelfMap f(w.with_tails(TailRule::none(), TailRule::none()), std::vector<LineIndex>(n, w.lo()));
  auto& vals = f.mutable_values();

  // Depth-first over positions; position k holds the image of x_{lo + k}.
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == n) {
      visit(f);
      return;
    }
    if (k == 0) {
      for (LineIndex v = w.lo(); v <= w.hi(); ++v) {
        if (options.first_image && *options.first_image != v) continue;
        vals[0] = v;
        fill(1);
      }
      return;
    }
    const LineIndex here = w.lo() + static_cast<LineIndex>(k);
    const LineIndex prev = vals[k - 1];
    // x_{here-1} < x_here when here-1 is odd, otherwise x_here < x_{here-1}
    const bool up = is_vertex_index(here - 1);
    for (LineIndex v = prev - 1; v <= prev + 1; ++v) {
      if (!w.contains(v)) continue;
      if (up ? !line_leq(prev, v) : !line_leq(v, prev)) continue;
      vals[k] = v;
      fill(k + 1);
    }
  };
  fill(0);
}

std::vector<SelfMap> enumerate_continuous_selfmaps(const LineWindow& w, const EnumerationOptions& options) {
  std::vector<SelfMap> out;
  for_each_continuous_selfmap(w, [&](const SelfMap& f) { out.push_back(f); }, options);
  return out;
}

}  // namespace linedyn
