#pragma once
// Structured pass/fail reports with witnesses.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace crossmod {

/// Ordered key/value witness data; values are already rendered.
using Fields = std::vector<std::pair<std::string, std::string>>;

struct Failure {
  std::string condition;
  Fields witness;
};

class Report {
 public:
  static constexpr std::size_t kMaxStoredFailures = 16;

  Report() = default;
  explicit Report(std::string name) : name_(std::move(name)) {}

  /// Counts one check; records a failure (witness built lazily) when !ok.
  template <class MakeWitness>
  bool expect(bool ok, const std::string& condition, MakeWitness&& make) {
    ++checks_;
    if (!ok) fail(condition, make());
    return ok;
  }
  bool expect(bool ok, const std::string& condition) {
    return expect(ok, condition, [] { return Fields{}; });
  }

  void fail(const std::string& condition, Fields witness = {});
  void note(std::string key, std::string value) { notes_.emplace_back(std::move(key), std::move(value)); }
  Report& add(Report child);
  /// Adds a child under a different name (same checker used for several parts).
  Report& add_as(std::string name, Report child);

  const std::string& name() const { return name_; }
  bool ok() const;
  std::size_t checks() const { return checks_; }
  std::size_t failure_count() const { return failure_count_; }
  const std::vector<Failure>& failures() const { return failures_; }
  const std::vector<Report>& children() const { return children_; }
  const Fields& notes() const { return notes_; }
  /// First failing condition in depth-first order, or empty.
  std::string first_failure() const;
  /// True when some failure (here or below) names this condition.
  bool failed(const std::string& condition) const;
  const Report* child(const std::string& name) const;

 private:
  std::string name_;
  std::size_t checks_ = 0;
  std::size_t failure_count_ = 0;
  std::vector<Failure> failures_;
  std::vector<Report> children_;
  Fields notes_;
};

/// Upper bound for exhaustive searches; the CROSSMOD_GUARD_SCALE environment variable multiplies it.
std::size_t enumeration_guard(std::size_t base);

}  // namespace crossmod
