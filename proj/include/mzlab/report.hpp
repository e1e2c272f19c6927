#pragma once

#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace mzlab {

/// Ordered key/value lines. Machine form is `key<TAB>value`, human form
/// `key: value`; both come from the same entries so they never diverge.
class Report {
 public:
  Report& add(std::string key, std::string value) {
    entries_.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  Report& add(std::string key, const char* value) { return add(std::move(key), std::string(value)); }
  Report& add(std::string key, bool value) { return add(std::move(key), std::string(value ? "true" : "false")); }
  template <class Int>
    requires std::is_integral_v<Int>
  Report& add(std::string key, Int value) {
    return add(std::move(key), std::to_string(value));
  }

  Report& append(const Report& other, const std::string& prefix = "") {
    for (const auto& [k, v] : other.entries_) entries_.emplace_back(prefix + k, v);
    return *this;
  }

  const std::vector<std::pair<std::string, std::string>>& entries() const noexcept { return entries_; }

  /// First value stored under `key`, or empty.
  std::string get(const std::string& key) const {
    for (const auto& [k, v] : entries_) {
      if (k == key) return v;
    }
    return {};
  }

  std::string machine() const {
    std::string s;
    for (const auto& [k, v] : entries_) s += k + "\t" + v + "\n";
    return s;
  }

  std::string human() const {
    std::string s;
    for (const auto& [k, v] : entries_) s += k + ": " + v + "\n";
    return s;
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace mzlab
