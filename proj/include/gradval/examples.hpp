#pragma once

#include <gradval/report.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gradval {

// Bundled named examples with their documented verdicts baked in: a run that
// disagrees with its own documentation reports ok = false (nonzero exit at
// the CLI). The seed feeds the pseudorandom coefficient stream of ex4.
std::vector<std::string> example_names();
Report run_example(const std::string& name, std::uint64_t seed = 2026);

}  // namespace gradval
