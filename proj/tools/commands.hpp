#pragma once

#include <functional>
#include <map>
#include <string>

#include "report_doc.hpp"

namespace crossmod::cli {

/// Every flag of every subcommand; each command reads the ones it registered.
struct Options {
  std::string input;
  std::string h = "empty", omega = "zero", coeffs = "-1,0,1";
  std::string h0, h1, r = "zero", mu = "zero";
  std::string two_subgroup;
  std::string action = "left";
  std::string cm, rep, samples;
};

/// Loaded inputs are recorded for the digest; option values go into the report header.
class Context {
 public:
  Context(Options opt, std::string command) : opt_(std::move(opt)) { header_.command = std::move(command); }

  const Options& opt() const { return opt_; }
  DocHeader& header() { return header_; }

  Document load(const std::string& role, const std::string& path);
  /// Records a non-file option in the header.
  void record(const std::string& name, const std::string& value) { header_.options[name] = value; }

 private:
  Options opt_;
  DocHeader header_;
};

using Command = std::function<Outcome(Context&)>;

/// Keyed by the command path, e.g. "fin2grp quotient".
const std::map<std::string, Command>& commands();

}  // namespace crossmod::cli
