#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace u1kepler {

// One verified identity or bound: label plus both sides, rendered exactly.
struct CheckLine {
  std::string label;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct CheckReport {
  std::string suite;
  std::vector<CheckLine> lines;

  void add(std::string label, std::string lhs, std::string rhs, bool pass) {
    lines.push_back({std::move(label), std::move(lhs), std::move(rhs), pass});
  }

  void merge(const CheckReport& other) {
    lines.insert(lines.end(), other.lines.begin(), other.lines.end());
  }

  std::size_t failures() const {
    std::size_t count = 0;
    for (const auto& line : lines)
      if (!line.pass) ++count;
    return count;
  }

  bool all_pass() const { return failures() == 0; }
};

}  // namespace u1kepler
