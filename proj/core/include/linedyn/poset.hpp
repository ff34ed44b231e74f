#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace linedyn {

/// Dense element identifier inside a Poset (0 .. size()-1).
using ElemId = std::size_t;

using Relation = std::pair<ElemId, ElemId>;

/**
 * Finite partially ordered set stored through its Hasse diagram.
 *
 * Elements are the integers 0..size()-1 and carry an optional label used for
 * DOT output. Construction always reduces the input relation to its covers, so
 * two posets built from different generating relations of the same order
 * compare equal. The reflexive-transitive closure is kept as a dense table;
 * every poset handled here is small.
 */
class Poset {
 public:
  Poset() = default;

  /// Builds the order generated by `less` (pairs a < b). Pairs (a, a) are
  /// ignored. Throws NotAPartialOrder when the relation has a cycle and
  /// NotFound when an endpoint is >= n.
  static Poset from_relations(std::size_t n, std::span<const Relation> less,
                              std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }

  bool leq(ElemId a, ElemId b) const;
  bool less(ElemId a, ElemId b) const { return a != b && leq(a, b); }
  bool comparable(ElemId a, ElemId b) const { return leq(a, b) || leq(b, a); }

  /// Cover pairs (a, b), a < b with nothing strictly between, sorted.
  const std::vector<Relation>& covers() const { return covers_; }
  const std::vector<ElemId>& upper_covers(ElemId a) const;
  const std::vector<ElemId>& lower_covers(ElemId a) const;

  /// U_x = {y : y <= x}, ascending ids.
  std::vector<ElemId> down_set(ElemId x) const;
  std::vector<ElemId> up_set(ElemId x) const;

  /// One less than the longest chain in the down-set of x.
  int height(ElemId x) const;
  /// One less than the longest chain of the poset; -1 for the empty poset.
  int height() const;

  std::vector<ElemId> minimal_elements() const;
  std::vector<ElemId> maximal_elements() const;

  /// All non-empty chains, each listed bottom to top. Ordered by length, then
  /// lexicographically.
  std::vector<std::vector<ElemId>> chains() const;

  /// Subposet on `elems`; element k of the result is elems[k].
  Poset induced(std::span<const ElemId> elems) const;

  const std::string& label(ElemId x) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.covers_ == b.covers_;
  }

 private:
  void check(ElemId x) const;

  std::size_t n_ = 0;
  std::vector<std::uint8_t> leq_;  // leq_[a * n_ + b] == 1 iff a <= b
  std::vector<Relation> covers_;
  std::vector<std::vector<ElemId>> up_;
  std::vector<std::vector<ElemId>> down_;
  std::vector<int> height_;
  std::vector<std::string> labels_;
};

/// Product order on pairs; element (a, b) has id a * q.size() + b.
Poset product(const Poset& p, const Poset& q);

/// A cover a < b of the source whose images are not ordered in the target.
struct OrderViolation {
  ElemId a;
  ElemId b;
};

/// Checks f: X -> Y (f[x] is the image of x) for monotonicity. Returns the
/// first failing cover in cover order, or nullopt when f is order-preserving.
std::optional<OrderViolation> find_order_violation(const Poset& x, const Poset& y,
                                                   std::span<const ElemId> f);

inline bool is_order_preserving(const Poset& x, const Poset& y, std::span<const ElemId> f) {
  return !find_order_violation(x, y, f).has_value();
}

std::vector<ElemId> compose(std::span<const ElemId> g, std::span<const ElemId> f);

/// Hasse diagram as DOT: edges point upward, one rank per height.
std::string to_dot(const Poset& p, const std::string& graph_name = "hasse");

}  // namespace linedyn
