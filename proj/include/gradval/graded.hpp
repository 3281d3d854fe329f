#pragma once

#include <gradval/monoid.hpp>

#include <map>

namespace gradval {

// Extension of monomial-type graded rings, modeled by the pair of value
// semigroups: s1 for the base ring, s2 for the extension ring, plus a
// declared residue degree f. Both semigroups live in one ambient group.
struct GradedExtension {
  AffineMonoid s1;
  AffineMonoid s2;
  Int f = 1;
  std::string label;
};

GradedExtension make_extension(AffineMonoid s1, AffineMonoid s2, Int f = 1,
                               std::string label = {});

// Saturation test of every s2 generator over s1. Exact for monomial-type
// rings (semigroup algebras); for general graded rings NotIntegral stays
// sound while Integral is advisory, and every report carries that caveat.
struct IntegralityResult {
  bool integral = false;
  std::vector<SaturationWitness> certs;  // one per s2 generator when integral
  std::optional<GroupElement> witness;   // a generator outside the saturation
  std::string caveat;
};
IntegralityResult integrality_test(const GradedExtension& ext);

// Module generators of s2 over s1 (delegates to module_generators).
// Requires integrality; raises input_error with the witness otherwise.
ModuleGenerators finiteness_test(const GradedExtension& ext);

// Per-level module-generator counts of a truncation tower. The tower is
// flagged non-finite when the counts strictly increase across every tested
// level.
struct TowerReport {
  std::vector<long long> counts;
  bool counts_strictly_increase = false;
  std::string label;
};
TowerReport finiteness_tower(const std::vector<GradedExtension>& levels);

// Whether p^n * gamma lies in s1 for every generator gamma of s2. In
// characteristic p this is exactly the inclusion of the p^n-th power of the
// extension ring in the base ring, since p^n-th powers are additive on
// exponents and generators generate multiplicatively.
struct PPowerResult {
  bool holds = false;
  std::optional<GroupElement> witness;  // the scaled generator missing from s1
  std::vector<std::vector<Int>> certs;  // combinations for the scaled generators
};
PPowerResult p_power_inclusion(const GradedExtension& ext, const Int& p, unsigned n);

// Degree of the extension of graded quotient fields: the group index
// [<s2>:<s1>] times the declared residue degree f. Errors when the index is
// infinite.
Int qf_degree(const GradedExtension& ext);

// Binomial presentation: variables with positive value tags and relations
// between monomials of equal value, given as exponent vectors.
struct BinomialPresentation {
  std::vector<std::string> vars;
  std::vector<Rat> values;
  std::vector<std::pair<std::vector<Int>, std::vector<Int>>> relations;
  std::string label;
};

BinomialPresentation make_presentation(
    std::vector<std::string> vars, std::vector<Rat> values,
    std::vector<std::pair<std::vector<Int>, std::vector<Int>>> relations,
    std::string label = {});

Rat monomial_value(const BinomialPresentation& p, const std::vector<Int>& expo);

// Whether every src relation becomes trivial after substituting variables by
// dst monomials and rewriting exhaustively with the dst relations. Rewriting
// is oriented by value, then lex on exponents with higher-index variables
// more significant; each monomial reduction is capped (0 picks the default
// 10 * relation count), and hitting the cap is inconclusive, not false.
enum class SubstStatus { holds, fails, inconclusive };

struct SubstitutionResult {
  SubstStatus status = SubstStatus::inconclusive;
  std::optional<size_t> failing_relation;
  long long steps_used = 0;
  long long depth_cap = 0;
};

SubstitutionResult substitution_check(const BinomialPresentation& src,
                                      const BinomialPresentation& dst,
                                      const std::map<std::string, std::vector<Int>>& var_map,
                                      long long depth_cap = 0);

}  // namespace gradval
