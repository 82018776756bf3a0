#include "crossmod/report.hpp"

#include <algorithm>
#include <cstdlib>

namespace crossmod {

void Report::fail(const std::string& condition, Fields witness) {
  ++failure_count_;
  // keep the first witness of every condition, plus a few more
  bool seen = std::any_of(failures_.begin(), failures_.end(), [&](const Failure& f) { return f.condition == condition; });
  if (!seen || failures_.size() < kMaxStoredFailures) failures_.push_back({condition, std::move(witness)});
}

Report& Report::add(Report child) {
  children_.push_back(std::move(child));
  return children_.back();
}

Report& Report::add_as(std::string name, Report child) {
  child.name_ = std::move(name);
  return add(std::move(child));
}

bool Report::ok() const {
  if (failure_count_ != 0) return false;
  for (const auto& c : children_)
    if (!c.ok()) return false;
  return true;
}

std::string Report::first_failure() const {
  if (!failures_.empty()) return failures_.front().condition;
  for (const auto& c : children_) {
    auto f = c.first_failure();
    if (!f.empty()) return f;
  }
  return {};
}

bool Report::failed(const std::string& condition) const {
  for (const auto& f : failures_)
    if (f.condition == condition) return true;
  for (const auto& c : children_)
    if (c.failed(condition)) return true;
  return false;
}

const Report* Report::child(const std::string& name) const {
  for (const auto& c : children_)
    if (c.name() == name) return &c;
  return nullptr;
}

std::size_t enumeration_guard(std::size_t base) {
  if (const char* s = std::getenv("CROSSMOD_GUARD_SCALE")) {
    char* end = nullptr;
    unsigned long k = std::strtoul(s, &end, 10);
    if (end != s && *end == '\0' && k > 0) return base * k;
  }
  return base;
}

}  // namespace crossmod
