#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace supercohom {

struct CheckEntry {
  CheckEntry() = default;
  explicit CheckEntry(std::string n) : name(std::move(n)) {}
  CheckEntry(std::string n, bool ok, std::vector<std::size_t> w, std::string d)
      : name(std::move(n)), passed(ok), witness(std::move(w)), detail(std::move(d)) {}

  std::string name;
  bool passed = true;
  std::vector<std::size_t> witness;  // basis indices of the first failure
  std::string detail;
};

struct CheckReport {
  std::vector<CheckEntry> entries;

  bool passed() const {
    for (const auto& e : entries)
      if (!e.passed) return false;
    return true;
  }
  const CheckEntry* find(const std::string& name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }
  void append(const CheckReport& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  }
};

}  // namespace supercohom
