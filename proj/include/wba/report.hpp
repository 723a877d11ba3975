#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace wba {

struct Check {
  std::string name;
  bool pass = true;
  nlohmann::ordered_json witness;  // null when passing
};

// Named pass/fail results with witnesses on failure.
class Report {
 public:
  void add(std::string name, bool pass, nlohmann::ordered_json witness = nullptr);
  void pass(std::string name) { add(std::move(name), true); }
  void fail(std::string name, nlohmann::ordered_json witness) {
    add(std::move(name), false, std::move(witness));
  }
  // Appends another report's checks, prefixing their names.
  void merge(const Report& other, const std::string& prefix = "");

  bool all_pass() const;
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& name) const;
  // Names of failing checks, in order.
  std::vector<std::string> failures() const;
  nlohmann::ordered_json to_json() const;

  // Facts that are not pass/fail (cocommutativity, completeness tags, ...).
  nlohmann::ordered_json& info() { return info_; }
  const nlohmann::ordered_json& info() const { return info_; }

 private:
  std::vector<Check> checks_;
  nlohmann::ordered_json info_ = nlohmann::ordered_json::object();
};

}  // namespace wba
