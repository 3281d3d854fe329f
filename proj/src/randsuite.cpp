#include <gradval/randsuite.hpp>

#include <gradval/verifier.hpp>

#include <random>

namespace gradval {

namespace {

struct TrialResult {
  bool passed = false;
  long skipped = 0;
  std::string reason;
};

// Entries and coefficients come from plain modulo so the stream is portable;
// std::uniform_int_distribution is implementation-defined.
long draw(std::mt19937_64& rng, long hi) { return static_cast<long>(rng() % (hi + 1)); }

TrialResult run_trial(const RandParams& params, long index) {
  std::uint64_t state =
      params.seed + 0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(index) + 1);
  std::mt19937_64 rng(splitmix64(state));

  TrialResult out;
  const int s = params.dims;

  std::vector<std::vector<Int>> rows;
  for (int attempt = 0;; ++attempt) {
    check_internal(attempt < 1000, "could not draw a nonsingular matrix in 1000 attempts");
    rows.assign(static_cast<size_t>(s), std::vector<Int>(static_cast<size_t>(s)));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = draw(rng, params.max_entry);
    if (det(IntMatrix::from_rows(rows)) != 0) break;
    ++out.skipped;
  }

  GroupPtr g = standard_positive_group(s);
  std::vector<GroupElement> ys;
  for (int j = 0; j < s; ++j) {
    Rat q(1 + draw(rng, 8), static_cast<unsigned long>(1 + draw(rng, 8)));
    q.canonicalize();
    std::vector<Rat> coords(static_cast<size_t>(s), Rat(0));
    coords[static_cast<size_t>(j)] = q;
    ys.push_back(element(g, std::move(coords)));
  }

  try {
    IntMatrix a = IntMatrix::from_rows(rows);
    Int d = abs(det(a));

    MonomialExtension ext = make_monomial_extension(
        s, s, a, ys, std::vector<bool>(static_cast<size_t>(s), false),
        "trial " + std::to_string(index));
    AJReport rep = analyze(ext);
    if (!rep.all_ok()) {
      out.reason = "analysis checks failed:";
      for (const auto& n : rep.notes) out.reason += " " + n;
      return out;
    }

    if (Int(rep.w_exponents.size()) != d) {
      out.reason = "parallelepiped count " + std::to_string(rep.w_exponents.size()) +
                   " != |det| = " + to_string(d);
      return out;
    }

    Int bound = 2 * Int(params.max_entry);
    if (auto bad = par_cover_check(rows, bound)) {
      out.reason = bad->reason + " at " + to_string(bad->point[0]);
      return out;
    }

    // Four-way agreement, each index computed by an independent route.
    QuotientStructure qs = quotient_structure(transpose(a));
    SubgroupIndex si = subgroup_index(x_values(ext), ys);
    if (qs.order != d || !si.finite || si.index != d) {
      out.reason = "index disagreement: |det| = " + to_string(d) + ", quotient order = " +
                   to_string(qs.order) + ", value-group index = " +
                   (si.finite ? to_string(si.index) : std::string("infinite"));
      return out;
    }
  } catch (const std::exception& e) {
    out.reason = std::string("exception: ") + e.what();
    return out;
  }

  out.passed = true;
  return out;
}

}  // namespace

RandSummary rand_suite(const RandParams& params, ExecMode mode) {
  require(params.dims >= 1 && params.dims <= 4, "dims must be between 1 and 4");
  require(params.count >= 0 && params.count <= 10000, "count must be between 0 and 10000");
  require(params.max_entry >= 1, "max-entry must be at least 1");

  const long n = params.count;
  std::vector<TrialResult> results(static_cast<size_t>(n));

  bool parallel = mode == ExecMode::openmp;
#if !defined(GRADVAL_HAVE_OPENMP)
  parallel = false;
#endif

  if (parallel) {
#if defined(GRADVAL_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) results[static_cast<size_t>(i)] = run_trial(params, i);
#endif
  } else {
    for (long i = 0; i < n; ++i) results[static_cast<size_t>(i)] = run_trial(params, i);
  }

  RandSummary s;
  s.requested = n;
  s.mode = parallel ? "openmp" : "serial";
  for (long i = 0; i < n; ++i) {
    const TrialResult& t = results[static_cast<size_t>(i)];
    s.skipped_singular += t.skipped;
    if (t.passed) ++s.passed;
    else if (!s.first_failure) s.first_failure = TrialFailure{i, t.reason};
  }
  return s;
}

Report rand_report(const RandSummary& s) {
  Report r;
  r.kind = "rand_suite";
  r.verdict = s.passed == s.requested ? "Pass" : "Fail";
  r.ok = s.passed == s.requested;
  r.details.emplace_back("trials", std::to_string(s.requested));
  r.details.emplace_back("passed", std::to_string(s.passed));
  r.details.emplace_back("skipped_singular", std::to_string(s.skipped_singular));
  r.details.emplace_back("mode", s.mode);
  if (s.first_failure)
    r.witnesses.push_back("trial " + std::to_string(s.first_failure->index) + ": " +
                          s.first_failure->reason);
  return r;
}

}  // namespace gradval
