#pragma once

#include <gradval/report.hpp>

#include <string>

namespace gradval {

struct CheckOptions {
  Int bound = 20;             // box bound for coverage and semigroup scans
  long long truncation = 0;   // series trust window; 0 keeps per-file values
};

// One instance file, schema-tagged "gradval-instance/1". Parsing checks the
// envelope (schema tag, kind, label); the kind-specific payload is validated
// by check_instance before any computation. The full normalized JSON text is
// kept so the payload and expected blocks stay schema-agnostic here.
struct Instance {
  std::string kind;
  std::string label;
  std::string text;
};

Instance parse_instance_text(const std::string& text, const std::string& origin = "<memory>");
Instance load_instance(const std::string& path);

// Validates the payload, runs the kind's pipeline, and compares the computed
// report against the optional expected block. Expected mismatches flip ok to
// false (exit code 1 at the CLI); structural problems raise input_error.
Report check_instance(const Instance& inst, const CheckOptions& opts = {});

}  // namespace gradval
