#include "linedyn/line.hpp"

#include <algorithm>

#include "linedyn/errors.hpp"

namespace linedyn {

std::string line_label(LineIndex i) { return "x" + std::to_string(i); }

std::optional<LineIndex> TailRule::apply(LineIndex i) const {
  switch (kind) {
    case Kind::None:
      return std::nullopt;
    case Kind::Shift:
      return i + param;
    case Kind::Collapse:
      return param;
    case Kind::Mirror:
      return -i;
  }
  return std::nullopt;
}

std::string to_string(const TailRule& rule) {
  switch (rule.kind) {
    case TailRule::Kind::None:
      return "none";
    case TailRule::Kind::Shift:
      return "shift(" + std::to_string(rule.param) + ")";
    case TailRule::Kind::Collapse:
      return "collapse(" + line_label(rule.param) + ")";
    case TailRule::Kind::Mirror:
      return "mirror";
  }
  return "?";
}

namespace {

std::shared_ptr<const Poset> window_poset(LineIndex lo, LineIndex hi) {
  const auto n = static_cast<std::size_t>(hi - lo + 1);
  std::vector<Relation> covers;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (LineIndex i = lo; i <= hi; ++i) labels.push_back(line_label(i));
  for (LineIndex i = lo; i < hi; ++i) {
    const auto a = static_cast<ElemId>(i - lo);
    if (is_vertex_index(i))
      covers.emplace_back(a, a + 1);
    else
      covers.emplace_back(a + 1, a);
  }
  return std::make_shared<const Poset>(Poset::from_relations(n, covers, std::move(labels)));
}

}  // namespace

LineWindow::LineWindow(LineIndex lo, LineIndex hi, TailRule left, TailRule right)
    : lo_(lo), hi_(hi), left_(left), right_(right) {
  if (lo > hi)
    throw InvalidRange("window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                       "] has lo > hi");
  poset_ = window_poset(lo, hi);
}

ElemId LineWindow::elem(LineIndex i) const {
  if (!contains(i)) throw NotFound(line_label(i) + " is outside the window");
  return static_cast<ElemId>(i - lo_);
}

LineIndex LineWindow::index(ElemId e) const {
  if (e >= size()) throw NotFound("element id outside the window");
  return lo_ + static_cast<LineIndex>(e);
}

LineWindow LineWindow::with_tails(TailRule left, TailRule right) const {
  LineWindow copy = *this;
  copy.left_ = left;
  copy.right_ = right;
  return copy;
}

LineWindow build_line_window(LineIndex lo, LineIndex hi) { return LineWindow(lo, hi); }

bool leq(const LineWindow& w, LineIndex a, LineIndex b) {
  return w.poset().leq(w.elem(a), w.elem(b));
}

std::vector<LineIndex> minimal_open(const LineWindow& w, LineIndex x) {
  std::vector<LineIndex> out;
  for (ElemId e : w.poset().down_set(w.elem(x))) out.push_back(w.index(e));
  return out;
}

int height(const LineWindow& w, LineIndex x) { return w.poset().height(w.elem(x)); }

std::vector<LineIndex> Interval::interior() const {
  std::vector<LineIndex> out;
  for (LineIndex i : points)
    if (i != a && i != b) out.push_back(i);
  return out;
}

Interval line_interval(LineIndex a, LineIndex b) {
  Interval iv{a, b, {}};
  const LineIndex first = std::min(a, b);
  const LineIndex last = std::max(a, b);
  iv.points.reserve(static_cast<std::size_t>(last - first + 1));
  for (LineIndex i = first; i <= last; ++i) iv.points.push_back(i);
  return iv;
}

Interval interval(const LineWindow& w, LineIndex a, LineIndex b) {
  if (!w.contains(a)) throw NotFound(line_label(a) + " is outside the window");
  if (!w.contains(b)) throw NotFound(line_label(b) + " is outside the window");
  return line_interval(a, b);
}

std::string to_string(Direction d) {
  switch (d) {
    case Direction::PlusInfinity:
      return "plus_infinity";
    case Direction::MinusInfinity:
      return "minus_infinity";
    case Direction::Neither:
      return "neither";
  }
  return "?";
}

Direction tends_to(const OrbitDescription& seq) {
  if (seq.continuation.kind != TailRule::Kind::Shift) return Direction::Neither;
  if (seq.continuation.param > 0) return Direction::PlusInfinity;
  if (seq.continuation.param < 0) return Direction::MinusInfinity;
  return Direction::Neither;
}

}  // namespace linedyn
