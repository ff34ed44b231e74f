// linedyn: command-line driver for the line-model dynamics library.

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "linedyn/complex.hpp"
#include "linedyn/errors.hpp"
#include "linedyn/homology.hpp"
#include "linedyn/io.hpp"
#include "linedyn/line.hpp"
#include "linedyn/multi.hpp"
#include "linedyn/single.hpp"
#include "linedyn/verify.hpp"
#include "report.hpp"

using namespace linedyn;
using namespace linedyn::cli;

namespace {

struct Common {
  std::optional<std::string> json_path;
  bool no_timing = false;
  unsigned jobs = 1;
  bool force = false;
  std::string echo;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--json", c.json_path, "Also write the report to this file");
  sub->add_flag("--no-timing", c.no_timing, "Leave timing out of the report");
  sub->add_option("--jobs", c.jobs, "Worker threads for exhaustive searches")->check(CLI::PositiveNumber);
  sub->add_flag("--force", c.force, "Ignore the enumeration size guard");
}

void emit(const Report& r, const Common& c) { r.emit(!c.no_timing, c.json_path); }

// ---- window ----------------------------------------------------------------

struct WindowArgs {
  std::vector<LineIndex> bounds;
  std::optional<LineIndex> lo, hi;
  std::optional<std::string> dot;
};

int run_window(const WindowArgs& a, const Common& c) {
  std::optional<LineIndex> lo = a.lo, hi = a.hi;
  if (a.bounds.size() == 2) {
    lo = a.bounds[0];
    hi = a.bounds[1];
  } else if (!a.bounds.empty()) {
    throw CLI::ValidationError("window", "give LO HI or --lo/--hi");
  }
  if (!lo || !hi) throw CLI::ValidationError("window", "both bounds are required");
  const LineWindow w = build_line_window(*lo, *hi);
  Report rep(c.echo, c.echo);
  const Poset& p = w.poset();
  Json covers = Json::array();
  for (const auto& [x, y] : p.covers()) covers.push_back({line_label(w.index(x)), line_label(w.index(y))});
  auto ids_to_labels = [&](const std::vector<ElemId>& ids) {
    Json j = Json::array();
    for (ElemId e : ids) j.push_back(line_label(w.index(e)));
    return j;
  };
  auto& r = rep.results();
  r["window"] = {w.lo(), w.hi()};
  r["elements"] = w.size();
  r["covers"] = covers;
  r["minimal"] = ids_to_labels(p.minimal_elements());
  r["maximal"] = ids_to_labels(p.maximal_elements());
  r["height"] = p.height();
  if (a.dot) {
    write_file(*a.dot, to_dot(p, "window"));
    r["dot"] = *a.dot;
  }
  emit(rep, c);
  return kOk;
}

// ---- check-map ---------------------------------------------------------------

struct CheckArgs {
  std::string file;
  bool multi = false;
  bool single = false;
};

Json classify_json(const SelfMap& f) {
  try {
    const DynamicsClass d = classify_dynamics(f);
    Json j{{"tag", to_string(d.tag)}};
    if (d.fixed_point) j["fixed_point"] = line_label(*d.fixed_point);
    j["lower"] = d.lower ? Json(line_label(*d.lower)) : Json(nullptr);
    j["upper"] = d.upper ? Json(line_label(*d.upper)) : Json(nullptr);
    return j;
  } catch (const Inconclusive& e) {
    return {{"tag", "inconclusive"}, {"reason", e.what()}};
  }
}

int run_check(const CheckArgs& a, const Common& c) {
  const std::string text = read_file(a.file);
  const SpecKind kind = a.multi ? SpecKind::Multi : a.single ? SpecKind::Single : detect_spec_kind(text);
  Report rep(c.echo, c.echo + "\n" + text);
  auto& r = rep.results();
  if (kind == SpecKind::Single) {
    const SelfMap f = parse_selfmap_spec(text);
    const auto bad = is_order_preserving_line(f);
    r["kind"] = "single";
    r["window"] = {f.window().lo(), f.window().hi()};
    r["left_tail"] = to_string(f.window().left_tail());
    r["right_tail"] = to_string(f.window().right_tail());
    r["continuous"] = !bad;
    if (bad) {
      r["witness"] = {line_label(bad->a), line_label(bad->b)};
    } else {
      r["fixed_points"] = labels(fixed_points(f));
      r["classification"] = classify_json(f);
    }
    emit(rep, c);
    return bad ? kFalse : kOk;
  }
  const MultiMap f = parse_multimap_spec(text);
  const VietorisVerdict v = is_vietoris_like_multimap(f);
  r["kind"] = "multi";
  r["window"] = {f.window().lo(), f.window().hi()};
  r["vietoris_like"] = v.ok;
  if (!v.ok) {
    Json chain = Json::array();
    for (ElemId e : v.witness_chain) chain.push_back(line_label(f.window().index(e)));
    r["witness_chain"] = chain;
    r["witness_homology"] = to_json(v.witness_homology);
  }
  r["fixed_points"] = labels(fixed_points(f));
  if (v.ok) r["lefschetz"] = to_json(lefschetz_number(f));
  emit(rep, c);
  return v.ok ? kOk : kFalse;
}

// ---- orbits ------------------------------------------------------------------

struct OrbitArgs {
  std::string file;
  std::optional<LineIndex> start;
  std::size_t max_period = 8;
  std::size_t steps = 16;
  std::size_t limit = 1000;
  std::optional<std::string> dot;
};

int run_orbits(const OrbitArgs& a, const Common& c) {
  const std::string text = read_file(a.file);
  Report rep(c.echo, c.echo + "\n" + text);
  auto& r = rep.results();
  if (detect_spec_kind(text) == SpecKind::Single) {
    const SelfMap f = parse_selfmap_spec(text);
    if (!f.is_window_selfmap()) {
      // maps leaving the window are analysed as single-valued maps only
      r["kind"] = "single";
      Json table = Json::object();
      for (const auto& [n, pts] : periodic_points(f, a.max_period)) table[std::to_string(n)] = labels(pts);
      r["minimal_periods"] = table;
      const LineIndex s = a.start.value_or(f.window().lo());
      const OrbitRecord rec = iterate(f, s, a.steps);
      r["orbit"] = {{"start", line_label(s)}, {"points", labels(rec.points)}};
      if (rec.status == OrbitRecord::Status::LeftWindow) r["orbit"]["tends_to"] = to_string(rec.direction);
      emit(rep, c);
      return kOk;
    }
  }
  const MultiMap f = parse_multimap_spec(text);
  const std::size_t mp = std::min(a.max_period, f.window().size());
  const PeriodicOrbits po = periodic_orbits(f, mp, a.limit);
  r["kind"] = "multi";
  r["window"] = {f.window().lo(), f.window().hi()};
  r["max_period"] = mp;
  r["spectrum"] = po.spectrum();
  Json table = Json::object();
  for (const auto& [n, list] : po.orbits) {
    Json orbits = Json::array();
    for (const auto& o : list) orbits.push_back(labels(o));
    table[std::to_string(n)] = {{"count", list.size()}, {"orbits", orbits}};
  }
  r["periodic_orbits"] = table;
  r["truncated"] = po.truncated;
  r["fixed_points"] = labels(fixed_points(f));
  const LineIndex s = a.start.value_or(f.window().lo());
  r["orbit"] = {{"start", line_label(s)}, {"policy", "least_index"}, {"stall_bound", 1},
                {"points", labels(orbit_stream(f, s, {}, a.steps))}};
  const InvariantSetReport sets = classify_invariant_sets(f);
  Json js = Json::array();
  for (const auto& set : sets.sets) js.push_back(to_json(set));
  r["invariant_sets"] = js;
  if (a.dot) {
    write_file(*a.dot, transition_dot(f, &sets));
    r["dot"] = *a.dot;
  }
  emit(rep, c);
  return kOk;
}

// ---- verify ------------------------------------------------------------------

struct VerifyArgs {
  LineIndex n = 2;
  std::string theorem = "all";
};

int run_verify(const VerifyArgs& a, const Common& c) {
  std::vector<Theorem> which;
  if (a.theorem == "all") {
    which = all_theorems();
  } else if (auto t = parse_theorem(a.theorem)) {
    which.push_back(*t);
  } else {
    throw CLI::ValidationError("--theorem", "unknown theorem " + a.theorem);
  }
  if (a.n < 0) throw CLI::ValidationError("--window", "must be >= 0");
  const LineWindow w(-a.n, a.n);
  VerifyOptions opt;
  opt.jobs = c.jobs;
  opt.force = c.force;
  Report rep(c.echo, c.echo);
  Json suites = Json::array();
  std::size_t violations = 0;
  for (Theorem t : which) {
    // the multimap corpus grows as (|W|(|W|+1)/2)^|W|
    if (t == Theorem::Lefschetz && w.size() > 5 && !c.force)
      throw SizeGuard("the lefschetz suite is limited to windows of 5 points; pass --force to override");
    const VerifyReport vr = verify_theorem(t, w, opt);
    violations += vr.violations;
    suites.push_back(to_json(vr));
  }
  rep.results()["window"] = {w.lo(), w.hi()};
  rep.results()["suites"] = suites;
  rep.results()["violations"] = violations;
  emit(rep, c);
  return violations ? kFalse : kOk;
}

// ---- homology ----------------------------------------------------------------

Poset builtin_poset(const std::string& target, std::string& digest_text) {
  auto field = [&](const std::string& s, std::size_t from) {
    std::vector<LineIndex> out;
    std::size_t pos = from;
    while (pos <= s.size()) {
      const std::size_t colon = std::min(s.find(':', pos), s.size());
      try {
        std::size_t used = 0;
        const std::string part = s.substr(pos, colon - pos);
        out.push_back(std::stoll(part, &used));
        if (used != part.size()) throw ParseError("bad number");
      } catch (const std::exception&) {
        throw ParseError("cannot read bounds in " + s);
      }
      pos = colon + 1;
    }
    if (out.size() != 2) throw ParseError(s + " needs two bounds");
    return out;
  };
  if (target == "point") return Poset::from_relations(1, {}, {"p"});
  if (target == "minimal-circle") {
    const std::vector<Relation> rel{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    return Poset::from_relations(4, rel, {"a", "b", "c", "d"});
  }
  if (target.rfind("window:", 0) == 0) {
    const auto b = field(target, 7);
    return build_line_window(b[0], b[1]).poset();
  }
  if (target.rfind("interval:", 0) == 0) {
    const auto b = field(target, 9);
    const Interval iv = line_interval(b[0], b[1]);
    return build_line_window(iv.lower(), iv.upper()).poset();
  }
  digest_text = read_file(target);
  return parse_poset_spec(digest_text);
}

int run_homology(const std::string& target, const Common& c) {
  std::string text;
  const Poset p = builtin_poset(target, text);
  Report rep(c.echo, c.echo + "\n" + text);
  auto& r = rep.results();
  r["target"] = target;
  r["elements"] = p.size();
  r["covers"] = p.covers().size();
  const HomologyGroups h = reduced_homology(p);
  r["homology"] = to_json(h);
  r["acyclic"] = is_acyclic(p);
  emit(rep, c);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial dynamics on the face-poset model of the real line"};
  app.set_version_flag("--version", LINEDYN_VERSION);
  app.require_subcommand(1);

  Common common;
  for (int i = 1; i < argc; ++i) common.echo += (i > 1 ? " " : "") + std::string(argv[i]);

  WindowArgs wa;
  auto* win = app.add_subcommand("window", "Summarise a line window and optionally export its Hasse diagram");
  win->add_option("bounds", wa.bounds, "LO HI")->expected(0, 2);
  win->add_option("--lo", wa.lo);
  win->add_option("--hi", wa.hi);
  win->add_option("--dot", wa.dot, "Write the Hasse diagram here");
  add_common(win, common);

  CheckArgs ca;
  auto* chk = app.add_subcommand("check-map", "Continuity of a self-map or the Vietoris check of a multimap");
  chk->add_option("spec", ca.file, "Map spec (JSON)")->required();
  chk->add_flag("--multi", ca.multi, "Read the spec as a multivalued map");
  chk->add_flag("--single", ca.single, "Read the spec as a single-valued map")->excludes("--multi");
  add_common(chk, common);

  OrbitArgs oa;
  auto* orb = app.add_subcommand("orbits", "Periodic orbits, orbit samples and invariant sets");
  orb->add_option("spec", oa.file, "Map spec (JSON)")->required();
  orb->add_option("--start", oa.start, "Start of the sample orbit");
  orb->add_option("--max-period", oa.max_period, "Longest period to search (capped at the window size)")
      ->check(CLI::PositiveNumber);
  orb->add_option("--steps", oa.steps, "Length of the sample orbit");
  orb->add_option("--limit", oa.limit, "Orbits listed per period");
  orb->add_option("--dot", oa.dot, "Write the transition graph here");
  add_common(orb, common);

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run an exhaustive suite on the window [-n, n]");
  ver->add_option("--window", va.n, "n, giving the window [-n, n]");
  ver->add_option("--theorem", va.theorem,
                  "no-period-3 | period-2-structure | interval-lemma | trichotomy | lefschetz | consistency | all");
  add_common(ver, common);

  std::string target;
  auto* hom = app.add_subcommand("homology", "Reduced integral homology of a poset");
  hom->add_option("target", target, "window:LO:HI | interval:A:B | minimal-circle | point | poset spec file")
      ->required();
  add_common(hom, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*win) return run_window(wa, common);
    if (*chk) return run_check(ca, common);
    if (*orb) return run_orbits(oa, common);
    if (*ver) return run_verify(va, common);
    if (*hom) return run_homology(target, common);
  } catch (const CLI::Error& e) {
    std::cerr << "linedyn: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "linedyn: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
