#include "report_doc.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <sstream>

namespace crossmod::cli {

bool Outcome::ok() const {
  for (const auto& c : checks)
    if (!c.report.ok()) return false;
  return true;
}

Json report_json(const Report& r) {
  Json out;
  out["name"] = r.name();
  out["verdict"] = r.ok() ? "pass" : "fail";
  out["checks"] = r.checks();
  out["failures"] = r.failure_count();
  Json witnesses = Json::array();
  for (const auto& f : r.failures()) {
    Json fields = Json::object();
    for (const auto& [k, v] : f.witness) fields[k] = v;
    witnesses.push_back({{"condition", f.condition}, {"fields", fields}});
  }
  out["witnesses"] = witnesses;
  if (!r.notes().empty()) {
    Json notes = Json::object();
    for (const auto& [k, v] : r.notes()) notes[k] = v;
    out["notes"] = notes;
  }
  if (!r.children().empty()) {
    Json children = Json::array();
    for (const auto& c : r.children()) children.push_back(report_json(c));
    out["children"] = children;
  }
  return out;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  EVP_DigestUpdate(ctx, bytes.data(), bytes.size());
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

namespace {

Json header_json(const DocHeader& h) {
  Json doc;
  doc["schema"] = "report/1";
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["command"] = h.command;
  doc["options"] = h.options;
  // the digest covers the command, the options and every input file, not their paths
  std::string all = h.command + '\n' + h.options.dump() + '\n';
  Json inputs = Json::array();
  for (const auto& [role, bytes] : h.inputs) {
    std::string d = sha256_hex(bytes);
    inputs.push_back({{"role", role}, {"sha256", d}});
    all += role + '=' + d + '\n';
  }
  doc["inputs"] = inputs;
  doc["input_digest"] = sha256_hex(all);
  return doc;
}

}  // namespace

Json make_doc(const DocHeader& header, const Outcome& outcome, bool timing) {
  Json doc = header_json(header);
  Json checks = Json::array();
  for (const auto& c : outcome.checks) {
    Json rec;
    rec["name"] = c.name;
    rec["verdict"] = c.report.ok() ? "pass" : "fail";
    rec["report"] = report_json(c.report);
    if (timing) rec["timing_ms"] = c.millis;
    checks.push_back(rec);
  }
  doc["checks"] = checks;
  doc["results"] = outcome.results;
  doc["verdict"] = outcome.ok() ? "pass" : "fail";
  return doc;
}

Json error_doc(const DocHeader& header, const std::string& field, const std::string& message) {
  Json doc = header_json(header);
  doc["error"] = {{"field", field}, {"message", message}};
  doc["verdict"] = "invalid";
  return doc;
}

// ---- human rendering ----

namespace {

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string witness_text(const Json& report) {
  const Json& w = report.at("witnesses");
  if (w.empty()) return "";
  std::string out = w[0].at("condition").get<std::string>();
  for (const auto& [k, v] : w[0].at("fields").items()) out += " " + k + "=" + scalar_text(v);
  return out;
}

void report_rows(std::ostringstream& os, const Json& report, std::size_t depth, const std::string& name) {
  std::string label = std::string(2 * depth, ' ') + name;
  os << "  " << pad(label, 34) << pad(report.at("verdict").get<std::string>(), 7) << ' '
     << pad(std::to_string(report.at("checks").get<std::size_t>()), 8) << witness_text(report) << '\n';
  if (report.contains("notes"))
    for (const auto& [k, v] : report.at("notes").items())
      os << "  " << std::string(2 * depth + 2, ' ') << k << ": " << scalar_text(v) << '\n';
  if (report.contains("children"))
    for (const auto& c : report.at("children")) report_rows(os, c, depth + 1, c.at("name").get<std::string>());
}

void value_rows(std::ostringstream& os, const Json& v, std::size_t depth) {
  const std::string indent(2 * depth, ' ');
  for (const auto& [k, item] : v.items()) {
    bool nested = item.is_object() && !item.empty() && !item.contains("schema");
    if (nested) {
      os << indent << k << ":\n";
      value_rows(os, item, depth + 1);
    } else {
      os << indent << k << ": " << scalar_text(item) << '\n';
    }
  }
}

}  // namespace

std::string render_human(const Json& doc) {
  std::ostringstream os;
  os << doc.at("tool").get<std::string>() << ' ' << doc.at("version").get<std::string>() << "  "
     << doc.at("command").get<std::string>() << "  verdict: " << doc.at("verdict").get<std::string>() << '\n';
  os << "input digest: " << doc.at("input_digest").get<std::string>() << '\n';
  if (!doc.at("options").empty()) {
    os << "options:\n";
    value_rows(os, doc.at("options"), 1);
  }
  if (doc.contains("error")) {
    os << "error at " << doc.at("error").at("field").get<std::string>() << ": "
       << doc.at("error").at("message").get<std::string>() << '\n';
    return os.str();
  }
  os << "  " << pad("check", 34) << pad("verdict", 7) << ' ' << pad("checks", 8) << "first witness\n";
  for (const auto& c : doc.at("checks")) {
    report_rows(os, c.at("report"), 0, c.at("name").get<std::string>());
    if (c.contains("timing_ms")) os << "    time: " << c.at("timing_ms").get<double>() << " ms\n";
  }
  if (!doc.at("results").empty()) {
    os << "results:\n";
    value_rows(os, doc.at("results"), 1);
  }
  return os.str();
}

}  // namespace crossmod::cli
