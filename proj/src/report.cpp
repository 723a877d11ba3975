#include "wba/report.hpp"

#include <algorithm>

namespace wba {

void Report::add(std::string name, bool pass, nlohmann::ordered_json witness) {
  checks_.push_back({std::move(name), pass, pass ? nlohmann::ordered_json() : std::move(witness)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.pass, c.witness});
  for (const auto& [k, v] : other.info_.items()) info_[prefix + k] = v;
}

bool Report::all_pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<std::string> Report::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks_)
    if (!c.pass) out.push_back(c.name);
  return out;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["witness"] = c.witness;
    arr.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["checks"] = std::move(arr);
  if (!info_.empty()) out["info"] = info_;
  return out;
}

}  // namespace wba
