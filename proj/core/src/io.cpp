#include "linedyn/io.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "linedyn/errors.hpp"

namespace linedyn {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

LineIndex as_index(const json& j, const std::string& what) {
  if (j.is_number_integer()) return j.get<LineIndex>();
  if (j.is_string()) {
    try {
      std::size_t used = 0;
      const std::string s = j.get<std::string>();
      const LineIndex v = std::stoll(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  throw ParseError(what + " must be an integer index");
}

LineWindow parse_window(const json& spec) {
  if (!spec.is_object()) throw ParseError("spec must be a JSON object");
  if (!spec.contains("window")) throw ParseError("spec needs \"window\": [lo, hi]");
  const json& w = spec["window"];
  if (!w.is_array() || w.size() != 2) throw ParseError("\"window\" must be [lo, hi]");
  const LineIndex lo = as_index(w[0], "window bound");
  const LineIndex hi = as_index(w[1], "window bound");
  if (lo > hi) throw ParseError("window has lo > hi");
  return LineWindow(lo, hi);
}

TailRule parse_tail(const json& spec, const char* key) {
  if (!spec.contains(key)) return TailRule::none();
  const json& t = spec[key];
  if (!t.is_object() || !t.contains("kind") || !t["kind"].is_string())
    throw ParseError(std::string(key) + " needs a \"kind\"");
  const std::string kind = t["kind"].get<std::string>();
  if (kind == "none") return TailRule::none();
  if (kind == "mirror") return TailRule::mirror();
  if (kind == "shift") {
    if (!t.contains("offset")) throw ParseError("shift tail needs \"offset\"");
    return TailRule::shift(as_index(t["offset"], "shift offset"));
  }
  if (kind == "collapse") {
    if (!t.contains("target")) throw ParseError("collapse tail needs \"target\"");
    return TailRule::collapse(as_index(t["target"], "collapse target"));
  }
  throw ParseError("unknown tail kind \"" + kind + "\"");
}

const json& values_of(const json& spec) {
  static const json empty = json::object();
  if (!spec.contains("values")) return empty;
  if (!spec["values"].is_object()) throw ParseError("\"values\" must be an object keyed by index");
  return spec["values"];
}

LineIndex key_index(const std::string& key) {
  return as_index(json(key), "value key \"" + key + "\"");
}

// "i", "i+2", "i - 1", "3", or a bare integer.
struct Expr {
  bool uses_i = false;
  LineIndex offset = 0;

  LineIndex at(LineIndex i) const { return (uses_i ? i : 0) + offset; }
};

Expr parse_expr(const json& j) {
  if (j.is_number_integer()) return {false, j.get<LineIndex>()};
  if (!j.is_string()) throw ParseError("rule expression must be an integer or a string");
  static const std::regex re(R"(^\s*(?:(i)\s*(?:([+-])\s*(\d+))?|([+-]?\d+))\s*$)");
  const std::string s = j.get<std::string>();
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw ParseError("cannot parse rule expression \"" + s + "\"");
  if (m[4].matched) return {false, std::stoll(m[4].str())};
  Expr e{true, 0};
  if (m[3].matched) e.offset = (m[2].str() == "-" ? -1 : 1) * std::stoll(m[3].str());
  return e;
}

struct Rule {
  std::optional<LineIndex> from;
  std::optional<LineIndex> to;
  std::optional<int> parity;  // 1 odd, 0 even
  Expr lo;
  Expr hi;

  bool matches(LineIndex i) const {
    if (from && i < *from) return false;
    if (to && i > *to) return false;
    if (parity && static_cast<int>(is_vertex_index(i)) != *parity) return false;
    return true;
  }
};

Rule parse_rule(const json& r) {
  if (!r.is_object() || !r.contains("kind") || !r["kind"].is_string())
    throw ParseError("each rule needs a \"kind\"");
  Rule rule;
  if (r.contains("range")) {
    const json& range = r["range"];
    if (!range.is_array() || range.size() != 2) throw ParseError("rule \"range\" must be [from, to]");
    if (!range[0].is_null()) rule.from = as_index(range[0], "range bound");
    if (!range[1].is_null()) rule.to = as_index(range[1], "range bound");
  }
  if (r.contains("parity")) {
    const std::string p = r["parity"].is_string() ? r["parity"].get<std::string>() : "";
    if (p == "odd") rule.parity = 1;
    else if (p == "even") rule.parity = 0;
    else throw ParseError("rule \"parity\" must be \"odd\" or \"even\"");
  }
  const std::string kind = r["kind"].get<std::string>();
  if (kind == "interval") {
    if (!r.contains("from") || !r.contains("to")) throw ParseError("interval rule needs \"from\" and \"to\"");
    rule.lo = parse_expr(r["from"]);
    rule.hi = parse_expr(r["to"]);
  } else if (kind == "point") {
    if (!r.contains("to")) throw ParseError("point rule needs \"to\"");
    rule.lo = rule.hi = parse_expr(r["to"]);
  } else {
    throw ParseError("unknown rule kind \"" + kind + "\"");
  }
  return rule;
}

std::string dot_id(LineIndex i) { return i < 0 ? "xm" + std::to_string(-i) : "x" + std::to_string(i); }

}  // namespace

SpecKind detect_spec_kind(std::string_view text) {
  const json spec = parse_json(text);
  if (!spec.is_object()) throw ParseError("spec must be a JSON object");
  if (spec.contains("rules")) return SpecKind::Multi;
  for (const auto& [k, v] : values_of(spec).items())
    if (v.is_array()) return SpecKind::Multi;
  return SpecKind::Single;
}

SelfMap parse_selfmap_spec(std::string_view text) {
  const json spec = parse_json(text);
  const LineWindow plain = parse_window(spec);
  const LineWindow w = plain.with_tails(parse_tail(spec, "left_tail"), parse_tail(spec, "right_tail"));
  std::vector<std::optional<LineIndex>> got(w.size());
  for (const auto& [k, v] : values_of(spec).items()) {
    const LineIndex i = key_index(k);
    if (!w.contains(i)) throw ParseError("value given for " + line_label(i) + " outside the window");
    got[static_cast<std::size_t>(i - w.lo())] = as_index(v, "value of " + line_label(i));
  }
  std::vector<LineIndex> values;
  for (std::size_t k = 0; k < got.size(); ++k) {
    if (!got[k]) throw ParseError("missing value for " + line_label(w.lo() + static_cast<LineIndex>(k)));
    values.push_back(*got[k]);
  }
  return SelfMap(w, std::move(values));
}

MultiMap parse_multimap_spec(std::string_view text) {
  const json spec = parse_json(text);
  const LineWindow w = parse_window(spec);
  std::vector<Rule> rules;
  if (spec.contains("rules")) {
    if (!spec["rules"].is_array()) throw ParseError("\"rules\" must be a list");
    for (const auto& r : spec["rules"]) rules.push_back(parse_rule(r));
  }
  std::vector<std::vector<LineIndex>> values(w.size());
  for (LineIndex i = w.lo(); i <= w.hi(); ++i) {
    for (const auto& r : rules) {
      if (!r.matches(i)) continue;
      LineIndex a = r.lo.at(i), b = r.hi.at(i);
      if (a > b) std::swap(a, b);
      a = std::max(a, w.lo());
      b = std::min(b, w.hi());
      auto& v = values[static_cast<std::size_t>(i - w.lo())];
      for (LineIndex y = a; y <= b; ++y) v.push_back(y);
      break;
    }
  }
  for (const auto& [k, v] : values_of(spec).items()) {
    const LineIndex i = key_index(k);
    if (!w.contains(i)) throw ParseError("value given for " + line_label(i) + " outside the window");
    auto& slot = values[static_cast<std::size_t>(i - w.lo())];
    slot.clear();
    if (v.is_array()) {
      for (const auto& y : v) slot.push_back(as_index(y, "value of " + line_label(i)));
    } else {
      slot.push_back(as_index(v, "value of " + line_label(i)));
    }
  }
  for (std::size_t k = 0; k < values.size(); ++k)
    if (values[k].empty())
      throw ParseError("no value for " + line_label(w.lo() + static_cast<LineIndex>(k)));
  try {
    return MultiMap(w, std::move(values));
  } catch (const InvalidMultiMap& e) {
    throw ParseError(e.what());
  }
}

Poset parse_poset_spec(std::string_view text) {
  const json spec = parse_json(text);
  if (!spec.is_object() || !spec.contains("elements")) throw ParseError("poset spec needs \"elements\"");
  const json& el = spec["elements"];
  std::vector<std::string> labels;
  std::size_t n = 0;
  if (el.is_number_unsigned()) {
    n = el.get<std::size_t>();
  } else if (el.is_array()) {
    for (const auto& l : el) {
      if (!l.is_string()) throw ParseError("element labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    n = labels.size();
  } else {
    throw ParseError("\"elements\" must be a count or a list of labels");
  }
  auto ref = [&](const json& j) -> ElemId {
    if (j.is_number_unsigned() && j.get<std::size_t>() < n) return j.get<std::size_t>();
    if (j.is_string()) {
      const auto it = std::find(labels.begin(), labels.end(), j.get<std::string>());
      if (it != labels.end()) return static_cast<ElemId>(it - labels.begin());
    }
    throw ParseError("unknown element " + j.dump());
  };
  std::vector<Relation> rel;
  if (spec.contains("less")) {
    for (const auto& pair : spec["less"]) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("\"less\" entries must be [a, b]");
      rel.emplace_back(ref(pair[0]), ref(pair[1]));
    }
  }
  try {
    return Poset::from_relations(n, rel, std::move(labels));
  } catch (const NotAPartialOrder& e) {
    throw ParseError(e.what());
  }
}

std::string transition_dot(const MultiMap& f, const InvariantSetReport* sets) {
  const LineWindow& w = f.window();
  std::ostringstream out;
  out << "digraph transitions {\n  rankdir=LR;\n  node [shape=circle];\n";
  std::map<LineIndex, std::size_t> owner;
  if (sets) {
    for (std::size_t k = 0; k < sets->sets.size(); ++k) {
      const auto& s = sets->sets[k];
      const std::string cls = s.cls ? to_string(*s.cls) : "unclassified";
      out << "  subgraph cluster_" << k << " {\n    label=\"" << cls << " [" << line_label(s.set.lower())
          << "," << line_label(s.set.upper()) << "]\";\n";
      for (LineIndex i : s.set.points) {
        out << "    " << dot_id(i) << " [label=\"" << line_label(i) << "\"];\n";
        owner[i] = k;
      }
      out << "  }\n";
    }
  }
  for (LineIndex i = w.lo(); i <= w.hi(); ++i)
    if (!owner.count(i)) out << "  " << dot_id(i) << " [label=\"" << line_label(i) << "\"];\n";
  for (LineIndex i = w.lo(); i <= w.hi(); ++i) {
    const bool multi = f.at(i).size() >= 2;
    for (LineIndex j : f.at(i)) {
      out << "  " << dot_id(i) << " -> " << dot_id(j);
      if (i == j) out << (multi ? " [style=dashed, label=\"stay\"]" : " [label=\"rest\"]");
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace linedyn
