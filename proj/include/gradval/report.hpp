#pragma once

#include <gradval/base.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gradval {

// Outcome of one check in a serializable shape. The JSON field names
// (verdict, witnesses, e, invariant_factors, coset_values, levels) are a
// stable contract; consumers may rely on them.
struct Report {
  std::string kind;
  std::string label;
  std::string verdict;
  std::vector<std::string> witnesses;
  std::optional<Int> e;
  std::vector<Int> invariant_factors;
  std::vector<std::string> coset_values;
  std::vector<long long> levels;
  std::vector<std::pair<std::string, std::string>> details;
  std::vector<std::string> notes;
  bool ok = true;
};

std::string to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace gradval
