#include "linedyn/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "linedyn/errors.hpp"

namespace linedyn {

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::NoPeriodThree:
      return "no-period-3";
    case Theorem::PeriodTwoStructure:
      return "period-2-structure";
    case Theorem::IntervalLemma:
      return "interval-lemma";
    case Theorem::Trichotomy:
      return "trichotomy";
    case Theorem::Lefschetz:
      return "lefschetz";
    case Theorem::Consistency:
      return "consistency";
  }
  return "?";
}

const std::vector<Theorem>& all_theorems() {
  static const std::vector<Theorem> all{Theorem::NoPeriodThree, Theorem::PeriodTwoStructure,
                                        Theorem::IntervalLemma,  Theorem::Trichotomy,
                                        Theorem::Lefschetz,      Theorem::Consistency};
  return all;
}

std::optional<Theorem> parse_theorem(std::string_view name) {
  for (Theorem t : all_theorems())
    if (to_string(t) == name) return t;
  return std::nullopt;
}

std::string describe(const SelfMap& f) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < f.values().size(); ++k) os << (k ? "," : "") << f.values()[k];
  os << "]";
  return os.str();
}

std::string describe(const MultiMap& f) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < f.values().size(); ++k) {
    os << (k ? "," : "") << "[";
    const auto& v = f.values()[k];
    for (std::size_t j = 0; j < v.size(); ++j) os << (j ? "," : "") << v[j];
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

/// Results of one partition, with violation messages kept in corpus order.
struct Partial {
  std::size_t corpus = 0;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::vector<std::pair<std::size_t, std::string>> examples;  // (sequence, text)
  std::map<std::string, std::size_t> counters;
  std::size_t limit = 10;

  void check(bool ok, std::size_t seq, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    ++violations;
    if (examples.size() < limit) examples.emplace_back(seq, what());
  }
};

bool contiguous(const std::set<LineIndex>& s) {
  return !s.empty() && static_cast<std::size_t>(*s.rbegin() - *s.begin() + 1) == s.size();
}

// Steps until the orbit of x first lies in `target`, or nullopt within `bound`.
std::optional<std::size_t> steps_into(const SelfMap& f, LineIndex x, const std::set<LineIndex>& target,
                                      std::size_t bound) {
  for (std::size_t s = 0; s <= bound; ++s) {
    if (target.count(x)) return s;
    x = f.at(x);
  }
  return std::nullopt;
}

void no_period_three(const SelfMap& f, std::size_t seq, Partial& out) {
  const LineWindow& w = f.window();
  bool has_two = false;
  for (LineIndex x = w.lo(); x <= w.hi(); ++x) {
    const OrbitRecord rec = iterate(f, x, w.size() + 1);
    const bool periodic_x = rec.status == OrbitRecord::Status::Periodic && rec.preperiod == 0;
    out.check(rec.status == OrbitRecord::Status::Periodic, seq,
              [&] { return describe(f) + ": orbit of " + line_label(x) + " did not close"; });
    out.check(!periodic_x || rec.period <= 2, seq, [&] {
      return describe(f) + ": " + line_label(x) + " has period " + std::to_string(rec.period);
    });
    has_two = has_two || (periodic_x && rec.period == 2);
  }
  const auto table = periodic_points(f, w.size());
  out.check(table.empty() || table.rbegin()->first <= 2, seq,
            [&] { return describe(f) + ": periodic_points reports period " + std::to_string(table.rbegin()->first); });
  if (has_two) ++out.counters["maps_with_period_two"];
}

void period_two_structure(const SelfMap& f, std::size_t seq, Partial& out) {
  const LineWindow& w = f.window();
  std::set<LineIndex> fixed, two;
  for (LineIndex x = w.lo(); x <= w.hi(); ++x) {
    const LineIndex y = f.at(x);
    if (y == x) fixed.insert(x);
    else if (f.at(y) == x) two.insert(x);
  }
  if (two.empty()) return;
  ++out.counters["maps_with_period_two"];
  out.check(fixed.size() == 1, seq,
            [&] { return describe(f) + ": " + std::to_string(fixed.size()) + " fixed points"; });
  if (fixed.size() != 1) return;
  const LineIndex z = *fixed.begin();
  std::set<LineIndex> p2 = two;
  p2.insert(z);
  out.check(contiguous(p2), seq, [&] { return describe(f) + ": P(2) is not an interval"; });
  for (LineIndex x = w.lo(); x <= w.hi(); ++x)
    out.check(steps_into(f, x, p2, w.size()).has_value(), seq,
              [&] { return describe(f) + ": " + line_label(x) + " does not reach P(2)"; });
  bool api_ok = false;
  try {
    const Interval iv = p2_set(f);
    api_ok = iv.lower() == *p2.begin() && iv.upper() == *p2.rbegin();
  } catch (const std::exception&) {
  }
  out.check(api_ok, seq, [&] { return describe(f) + ": p2_set disagrees"; });
  std::string tag;
  try {
    const DynamicsClass c = classify_dynamics(f);
    const bool home = c.tag == DynamicsClass::Tag::PeriodTwoHomeomorphism;
    const bool attr = c.tag == DynamicsClass::Tag::PeriodTwoAttractor;
    api_ok = c.fixed_point == z && (home || (attr && c.lower == *p2.begin() && c.upper == *p2.rbegin()));
    tag = to_string(c.tag);
  } catch (const std::exception& e) {
    api_ok = false;
    tag = e.what();
  }
  out.check(api_ok, seq, [&] { return describe(f) + ": classified as " + tag; });
  ++out.counters[tag];
}

void interval_lemma(const SelfMap& f, std::size_t seq, Partial& out) {
  const LineWindow& w = f.window();
  for (LineIndex a = w.lo(); a <= w.hi(); ++a)
    for (LineIndex b = a; b <= w.hi(); ++b) {
      const auto image = image_of_interval(f, a, b);
      const Interval ends = line_interval(f.at(a), f.at(b));
      const bool contained = std::all_of(ends.points.begin(), ends.points.end(), [&](LineIndex p) {
        return std::binary_search(image.begin(), image.end(), p);
      });
      const auto what = [&] { return describe(f) + " on [" + line_label(a) + "," + line_label(b) + "]"; };
      out.check(contained, seq, [&] { return what() + ": [f(a),f(b)] not in f([a,b])"; });
      out.check(contains_interval_check(f, a, b) == contained, seq,
                [&] { return what() + ": contains_interval_check disagrees"; });
      const std::size_t n_ab = static_cast<std::size_t>(b - a + 1);
      out.check(n_ab >= image.size() && image.size() >= ends.size(), seq,
                [&] { return what() + ": cardinality chain fails"; });
    }
}

void trichotomy(const SelfMap& f, std::size_t seq, Partial& out) {
  const LineWindow& w = f.window();
  std::set<LineIndex> fixed;
  for (LineIndex x = w.lo(); x <= w.hi(); ++x) {
    const LineIndex y = f.at(x);
    if (y == x) fixed.insert(x);
    else if (f.at(y) == x) return;  // has a period-two point
  }
  ++out.counters["maps_without_period_two"];
  out.check(!fixed.empty(), seq, [&] { return describe(f) + ": no fixed point"; });
  if (fixed.empty()) return;
  out.check(contiguous(fixed), seq, [&] { return describe(f) + ": fixed set is not an interval"; });
  for (LineIndex x = w.lo(); x <= w.hi(); ++x)
    out.check(steps_into(f, x, fixed, w.size()).has_value(), seq,
              [&] { return describe(f) + ": " + line_label(x) + " never becomes fixed"; });
  std::string tag;
  bool ok = false;
  try {
    const DynamicsClass c = classify_dynamics(f);
    tag = to_string(c.tag);
    if (c.tag == DynamicsClass::Tag::Identity)
      ok = fixed.size() == w.size();
    else if (c.tag == DynamicsClass::Tag::EventuallyFixedInterval)
      ok = c.lower == *fixed.begin() && c.upper == *fixed.rbegin();
  } catch (const std::exception& e) {
    tag = e.what();
  }
  out.check(ok, seq, [&] { return describe(f) + ": classified as " + tag; });
  ++out.counters[tag];
}

void consistency(const SelfMap& f, std::size_t seq, Partial& out) {
  const LineWindow& w = f.window();
  const MultiMap m = MultiMap::from_selfmap(f);
  out.check(fixed_points(m) == fixed_points(f), seq, [&] { return describe(f) + ": fixed sets differ"; });
  std::vector<std::size_t> periods;
  for (const auto& [n, pts] : periodic_points(f, w.size())) periods.push_back(n);
  const auto spectrum = period_spectrum(m, w.size());
  out.check(spectrum == periods, seq, [&] { return describe(f) + ": period spectra differ"; });
  out.check(spectrum.empty() || spectrum.back() <= 2, seq,
            [&] { return describe(f) + ": spectrum reaches " + std::to_string(spectrum.back()); });
  std::string detail;
  bool same = false;
  try {
    const auto single = lefschetz_number(f).lambda;
    const auto multi = lefschetz_number(m).lambda;
    same = single == multi;
    detail = single.str() + " vs " + multi.str();
  } catch (const std::exception& e) {
    detail = e.what();
  }
  out.check(same, seq, [&] { return describe(f) + ": Lefschetz numbers " + detail; });
}

void lefschetz(const MultiMap& f, std::size_t seq, Partial& out) {
  if (!is_vietoris_like_multimap(f).ok) return;
  ++out.counters["vietoris_like"];
  const bool has_fixed = !fixed_points(f).empty();
  if (has_fixed) ++out.counters["with_fixed_point"];
  std::string detail;
  bool ok = false;
  try {
    // the Vietoris check already passed; go straight to the graph
    const GraphPoset g = graph_poset(f);
    const LefschetzResult r = lefschetz_number_from_graph(g.poset, f.window().poset(), g.proj_p, g.proj_q);
    if (r.lambda != 0) ++out.counters["lambda_nonzero"];
    ok = r.lambda == 0 || has_fixed;
    detail = "lambda " + r.lambda.str();
  } catch (const std::exception& e) {
    detail = e.what();
  }
  out.check(ok, seq, [&] { return describe(f) + ": " + detail + " without a fixed point"; });
}

}  // namespace

VerifyReport verify_theorem(Theorem t, const LineWindow& w, const VerifyOptions& options) {
  if (w.size() > options.size_guard && !options.force)
    throw SizeGuard("window has " + std::to_string(w.size()) + " points; enumeration guard is " +
                    std::to_string(options.size_guard));
  const bool multi = t == Theorem::Lefschetz;
  const std::size_t parts = multi ? interval_value_choices(w) : w.size();
  std::vector<Partial> partial(parts);

  auto run = [&](std::size_t p) {
    Partial& out = partial[p];
    out.limit = options.max_examples;
    std::size_t seq = 0;
    if (multi) {
      for_each_interval_multimap(
          w,
          [&](const MultiMap& f) {
            ++out.corpus;
            lefschetz(f, seq++, out);
          },
          p);
      return;
    }
    EnumerationOptions eo;
    eo.force = true;
    eo.first_image = w.lo() + static_cast<LineIndex>(p);
    for_each_continuous_selfmap(
        w,
        [&](const SelfMap& f) {
          ++out.corpus;
          switch (t) {
            case Theorem::NoPeriodThree:
              no_period_three(f, seq, out);
              break;
            case Theorem::PeriodTwoStructure:
              period_two_structure(f, seq, out);
              break;
            case Theorem::IntervalLemma:
              interval_lemma(f, seq, out);
              break;
            case Theorem::Trichotomy:
              trichotomy(f, seq, out);
              break;
            case Theorem::Consistency:
              consistency(f, seq, out);
              break;
            case Theorem::Lefschetz:
              break;
          }
          ++seq;
        },
        eo);
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(parts)));
  if (jobs == 1) {
    for (std::size_t p = 0; p < parts; ++p) run(p);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j)
      pool.emplace_back([&] {
        for (std::size_t p = next++; p < parts; p = next++) run(p);
      });
    for (auto& th : pool) th.join();
  }

  VerifyReport report;
  report.theorem = t;
  report.lo = w.lo();
  report.hi = w.hi();
  for (const Partial& p : partial) {
    report.corpus_size += p.corpus;
    report.checks += p.checks;
    report.violations += p.violations;
    for (const auto& [k, v] : p.counters) report.counters[k] += v;
    for (const auto& e : p.examples)
      if (report.examples.size() < options.max_examples) report.examples.push_back(e.second);
  }
  return report;
}

}  // namespace linedyn
