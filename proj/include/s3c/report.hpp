#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

namespace s3c {

enum class Status { pass, fail, mismatch };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::mismatch: return "mismatch-vs-paper";
  }
  return "fail";
}

struct Case {
  std::string name;
  Status status = Status::pass;
  std::string computed, claimed;
};

// A suite's outcome. Mismatch entries are informational and count as neither.
struct Report {
  std::string suite;
  std::vector<Case> cases;

  void add(std::string name, bool ok, std::string computed = {}, std::string claimed = {}) {
    cases.push_back({std::move(name), ok ? Status::pass : Status::fail, std::move(computed), std::move(claimed)});
  }
  void note(std::string name, bool agrees, std::string computed, std::string claimed) {
    cases.push_back({std::move(name), agrees ? Status::pass : Status::mismatch, std::move(computed), std::move(claimed)});
  }
  void merge(const Report& o, const std::string& prefix) {
    for (auto c : o.cases) {
      c.name = prefix + c.name;
      cases.push_back(std::move(c));
    }
  }

  int count(Status s) const {
    return static_cast<int>(std::count_if(cases.begin(), cases.end(), [&](const Case& c) { return c.status == s; }));
  }
  int passed() const { return count(Status::pass); }
  int failed() const { return count(Status::fail); }
  bool ok() const { return failed() == 0; }
  // Pass iff every case whose name starts with prefix passed (and at least one exists).
  bool ok_prefix(const std::string& prefix) const {
    bool any = false;
    for (auto& c : cases)
      if (c.name.rfind(prefix, 0) == 0) {
        any = true;
        if (c.status == Status::fail) return false;
      }
    return any;
  }

  void sort() {
    std::stable_sort(cases.begin(), cases.end(), [](const Case& x, const Case& y) { return x.name < y.name; });
  }

  nlohmann::json to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (auto& c : cases)
      cs.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"computed", c.computed}, {"claimed", c.claimed}});
    return {{"suite", suite}, {"cases", cs}, {"passed", passed()}, {"failed", failed()}};
  }
};

}  // namespace s3c
