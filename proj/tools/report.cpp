#include "report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "linedyn/errors.hpp"

namespace linedyn::cli {

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

Json to_json(const HomologyGroups& h) {
  Json degrees = Json::array();
  for (std::size_t k = 0; k < h.degrees.size(); ++k) {
    Json torsion = Json::array();
    for (const auto& t : h.degrees[k].torsion) torsion.push_back(t.str());
    degrees.push_back({{"degree", k}, {"betti", h.degrees[k].betti}, {"torsion", torsion}});
  }
  Json j{{"reduced", h.reduced}};
  if (h.reduced) j["betti_minus_one"] = h.betti_minus_one;
  j["degrees"] = degrees;
  j["zero"] = h.is_zero();
  return j;
}

Json to_json(const Interval& iv) { return Json::array({line_label(iv.lower()), line_label(iv.upper())}); }

Json to_json(const LefschetzResult& r) {
  Json traces = Json::array();
  for (const auto& t : r.traces) traces.push_back(t.str());
  return {{"traces", traces},
          {"lambda", r.lambda.str()},
          {"fixed_point_predicted", r.fixed_point_predicted},
          {"fixed_point_found", r.fixed_point_found}};
}

Json to_json(const InvariantSet& s) {
  Json j{{"set", to_json(s.set)}, {"left", to_string(s.left)}, {"right", to_string(s.right)}};
  j["class"] = s.cls ? Json(to_string(*s.cls)) : Json(nullptr);
  if (!s.diagnostic.empty()) j["diagnostic"] = s.diagnostic;
  return j;
}

Json to_json(const VerifyReport& r) {
  Json counters = Json::object();
  for (const auto& [k, v] : r.counters) counters[k] = v;
  return {{"theorem", to_string(r.theorem)},
          {"window", {r.lo, r.hi}},
          {"corpus_size", r.corpus_size},
          {"checks", r.checks},
          {"violations", r.violations},
          {"examples", r.examples},
          {"counters", counters}};
}

Json labels(const std::vector<LineIndex>& points) {
  Json j = Json::array();
  for (LineIndex p : points) j.push_back(line_label(p));
  return j;
}

Report::Report(std::string command, std::string digest_input)
    : command_(std::move(command)), digest_(fnv1a_hex(digest_input)) {}

void Report::emit(bool timing, const std::optional<std::string>& json_path) const {
  Json j{{"command", command_}, {"input_digest", digest_}, {"results", results_}};
  if (timing) {
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    j["timing"] = {{"seconds", s}};
  }
  j["version"] = LINEDYN_VERSION;
  const std::string text = j.dump(2) + "\n";
  std::cout << text;
  if (json_path) write_file(*json_path, text);
}

}  // namespace linedyn::cli
