#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "linedyn/homology.hpp"
#include "linedyn/line.hpp"
#include "linedyn/multi.hpp"
#include "linedyn/verify.hpp"

namespace linedyn::cli {

using Json = nlohmann::ordered_json;

enum Exit : int { kOk = 0, kFalse = 1, kUsage = 2 };

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

Json to_json(const HomologyGroups& h);
Json to_json(const Interval& iv);
Json to_json(const LefschetzResult& r);
Json to_json(const InvariantSet& s);
Json to_json(const VerifyReport& r);
Json labels(const std::vector<LineIndex>& points);

/// Collects one command's report: {command, input_digest, results, timing, version}.
class Report {
 public:
  Report(std::string command, std::string digest_input);

  Json& results() { return results_; }
  /// Dumps to stdout and, when json_path is set, to that file.
  void emit(bool timing, const std::optional<std::string>& json_path) const;

 private:
  std::string command_;
  std::string digest_;
  Json results_ = Json::object();
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace linedyn::cli
