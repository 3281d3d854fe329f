#include <gradval/examples.hpp>
#include <gradval/instance.hpp>
#include <gradval/randsuite.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace gradval;

namespace {

// Seed precedence: explicit --seed, then GRADVAL_SEED, then the default.
std::uint64_t env_seed(std::uint64_t fallback) {
  const char* s = std::getenv("GRADVAL_SEED");
  if (!s || !*s) return fallback;
  try {
    size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos);
    require(pos == std::string(s).size(), "trailing characters");
    return v;
  } catch (const std::exception&) {
    throw input_error("GRADVAL_SEED must be a nonnegative integer, got \"" + std::string(s) +
                      "\"");
  }
}

int emit(const Report& r, bool json) {
  if (json) std::cout << to_json(r) << "\n";
  else std::cout << to_text(r);
  return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic checks for value semigroups, graded-ring extensions, "
               "and monomial valuations"};
  app.require_subcommand(1);

  std::string file;
  long long bound = 20, truncation = 0;
  bool check_json = false;
  CLI::App* check = app.add_subcommand("check", "validate and check one instance file");
  check->add_option("file", file, "instance file (schema gradval-instance/1)")->required();
  check->add_option("--bound,-b", bound, "box bound for coverage scans (default 20)");
  check->add_option("--truncation,-n", truncation,
                    "series trust window for instances that do not pin one");
  check->add_flag("--json", check_json, "emit the machine-readable report");

  std::string name = "all";
  bool ex_json = false;
  CLI::App* examples = app.add_subcommand("examples", "run bundled examples");
  examples->add_option("name", name, "example name or \"all\"");
  examples->add_flag("--json", ex_json, "emit machine-readable reports");

  RandParams rp;
  long long seed_opt = 0;
  bool rand_json = false, serial = false;
  CLI::App* rand = app.add_subcommand("rand", "randomized property suite");
  rand->add_option("--dims,-d", rp.dims, "matrix size (1..4, default 2)");
  rand->add_option("--max-entry,-m", rp.max_entry, "largest matrix entry (default 5)");
  rand->add_option("--count,-c", rp.count, "number of nonsingular trials (default 200)");
  CLI::Option* seed_flag = rand->add_option("--seed,-s", seed_opt, "trial-stream seed");
  rand->add_flag("--serial", serial, "force the serial reference path");
  rand->add_flag("--json", rand_json, "emit the machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      require(bound >= 0, "--bound must be nonnegative");
      require(truncation >= 0, "--truncation must be nonnegative");
      CheckOptions opts;
      opts.bound = Int(static_cast<long>(bound));
      opts.truncation = truncation;
      return emit(check_instance(load_instance(file), opts), check_json);
    }
    if (examples->parsed()) {
      std::uint64_t seed = env_seed(2026);
      std::vector<std::string> names =
          name == "all" ? example_names() : std::vector<std::string>{name};
      std::vector<Report> reports;
      for (const auto& n : names) reports.push_back(run_example(n, seed));
      int rc = 0;
      if (ex_json) {
        std::cout << "[\n";
        for (size_t i = 0; i < reports.size(); ++i)
          std::cout << to_json(reports[i]) << (i + 1 < reports.size() ? ",\n" : "\n");
        std::cout << "]\n";
      }
      for (size_t i = 0; i < reports.size(); ++i) {
        if (!ex_json) {
          if (i) std::cout << "\n";
          std::cout << to_text(reports[i]);
        }
        if (!reports[i].ok) rc = 1;
      }
      return rc;
    }
    if (rand->parsed()) {
      if (seed_flag->count() > 0) {
        require(seed_opt >= 0, "--seed must be nonnegative");
        rp.seed = static_cast<std::uint64_t>(seed_opt);
      } else {
        rp.seed = env_seed(rp.seed);
      }
      RandSummary s = rand_suite(rp, serial ? ExecMode::serial : ExecMode::openmp);
      return emit(rand_report(s), rand_json);
    }
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const precision_exhausted& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return 3;
  } catch (const internal_error& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
