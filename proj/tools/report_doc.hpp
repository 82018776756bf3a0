#pragma once
// Canonical report documents: the JSON body is the single source; the table is a rendering of it.

#include <string>
#include <vector>

#include "json_io.hpp"

namespace crossmod::cli {

inline constexpr const char* kToolName = "crossmod";
inline constexpr const char* kToolVersion = "0.1.0";

struct CheckRecord {
  std::string name;
  Report report;
  double millis = 0;
};

/// What a command produced: named checks plus command-specific results.
struct Outcome {
  std::vector<CheckRecord> checks;
  Json results = Json::object();

  bool ok() const;
};

Json report_json(const Report& r);

struct DocHeader {
  std::string command;
  Json options = Json::object();
  std::vector<std::pair<std::string, std::string>> inputs;  ///< role, raw bytes
};

/// No timestamps unless `timing` is set, so identical inputs give identical bodies.
Json make_doc(const DocHeader& header, const Outcome& outcome, bool timing);
/// Document for an input that could not be processed (exit code 2).
Json error_doc(const DocHeader& header, const std::string& field, const std::string& message);

std::string render_human(const Json& doc);

std::string sha256_hex(const std::string& bytes);

}  // namespace crossmod::cli
