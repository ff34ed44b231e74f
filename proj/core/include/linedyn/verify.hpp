#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linedyn/line.hpp"
#include "linedyn/multi.hpp"
#include "linedyn/single.hpp"

namespace linedyn {

/// Exhaustive window-scale suites.
enum class Theorem {
  NoPeriodThree,       // no continuous self-map has a point of period >= 3
  PeriodTwoStructure,  // one fixed point, P(2) an interval, every orbit enters it
  IntervalLemma,       // [f(a), f(b)] in f([a, b]) and the cardinality chain
  Trichotomy,          // no period two: fixed set is an interval that attracts
  Lefschetz,           // interval-valued Vietoris-like F with nonzero Lambda has a fixed point
  Consistency,         // single-valued maps seen as multimaps
};

std::string to_string(Theorem t);
/// Accepts the CLI spellings: no-period-3, period-2-structure, interval-lemma,
/// trichotomy, lefschetz, consistency.
std::optional<Theorem> parse_theorem(std::string_view name);
const std::vector<Theorem>& all_theorems();

struct VerifyOptions {
  /// Worker threads; partitions are the possible images of the first point.
  unsigned jobs = 1;
  bool force = false;
  std::size_t size_guard = 13;
  std::size_t max_examples = 10;
};

struct VerifyReport {
  Theorem theorem = Theorem::NoPeriodThree;
  LineIndex lo = 0;
  LineIndex hi = 0;
  /// Maps examined.
  std::size_t corpus_size = 0;
  /// Individual assertions evaluated.
  std::size_t checks = 0;
  std::size_t violations = 0;
  /// First violations in corpus order, at most max_examples.
  std::vector<std::string> examples;
  std::map<std::string, std::size_t> counters;

  bool ok() const { return violations == 0; }
};

/// Runs one suite over every continuous self-map (or, for Lefschetz, every
/// interval-valued multimap) of the window. Results do not depend on jobs.
/// Throws SizeGuard when the window exceeds the guard and force is unset.
VerifyReport verify_theorem(Theorem t, const LineWindow& w, const VerifyOptions& options = {});

/// "[v_lo, ..., v_hi]" for a self-map, "[[..], ..]" for a multimap.
std::string describe(const SelfMap& f);
std::string describe(const MultiMap& f);

}  // namespace linedyn
