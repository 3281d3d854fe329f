#pragma once

#include <gradval/cyclotomic.hpp>
#include <gradval/monoid.hpp>
#include <gradval/series.hpp>

namespace gradval {

// Monomial normal form of a ramified extension: the first s base parameters
// are monomials in the first s extension parameters via the matrix a (up to
// units, recorded in unit_flags), the remaining n - s parameters coincide.
// y_values are the extension-side parameter values; base-side values are
// induced. The first s y-values are expected to be Q-independent (checked and
// reported, not assumed).
struct MonomialExtension {
  int s = 0;
  int n = 0;
  IntMatrix a;                         // s x s, nonnegative entries, det != 0
  std::vector<GroupElement> y_values;  // size n, one shared group
  std::vector<bool> unit_flags;        // size s
  std::string label;
};

MonomialExtension make_monomial_extension(int s, int n, IntMatrix a,
                                          std::vector<GroupElement> y_values,
                                          std::vector<bool> unit_flags,
                                          std::string label = {});

// Induced base-side values: rows of a applied to the first s y-values, then
// the shared tail.
std::vector<GroupElement> x_values(const MonomialExtension& ext);

// Full analysis of one extension: e = |det a|, the invariant factors of the
// value-group quotient, the free-basis exponents (parallelepiped points of
// the rows of a padded by unit rows), their values, and the four checks.
// w_exponents[0] is always the zero vector; the rest are sorted by value.
struct AJReport {
  Int e = 0;
  QuotientStructure invariant_factors;
  std::vector<std::vector<Int>> w_exponents;
  std::vector<GroupElement> coset_values;
  bool free_basis_ok = false;
  bool cosets_complete = false;
  bool cover_disjoint = false;
  bool invariants_trivial_only = false;
  std::vector<std::string> notes;
  bool all_ok() const {
    return free_basis_ok && cosets_complete && cover_disjoint && invariants_trivial_only;
  }
};

AJReport analyze(const MonomialExtension& ext);

// Pairwise validation that the given exponents represent distinct classes
// modulo the base value group: returns the first offending pair, whose value
// difference lies in the base group.
struct CosetViolation {
  size_t i = 0, j = 0;
};
std::optional<CosetViolation> validate_coset_exponents(
    const MonomialExtension& ext, const std::vector<std::vector<Int>>& w_exponents);

// The e coset values, validated (errors carry the offending pair).
std::vector<GroupElement> coset_representatives(const MonomialExtension& ext);

// min_i(coeff_i + coset_value_i) over the present coefficients. Coefficients
// must lie in the base value group; the minimizing index is unique whenever
// the coset representatives validate, and a tie is a contract violation.
GroupElement min_formula_check(const MonomialExtension& ext,
                               const std::vector<std::optional<GroupElement>>& coeff_values);

// Diagonal root-of-unity action of Z^s/(a Z^s) on the extension parameters:
// group element c acts on parameter j by the adj(a)*c-th power of a fixed
// primitive e-th root of unity. The table lists, for every group element and
// every free-basis exponent, the root-of-unity power picked up; the invariant
// exponents must be exactly the zero vector (the base ring).
struct CharacterAction {
  Int e = 0;
  std::vector<std::vector<Int>> group_elements;  // representatives, zero first
  std::vector<std::vector<Int>> psi;             // adj(a) * c per representative
  std::vector<std::vector<Int>> w_exponents;     // same order as analyze
  std::vector<std::vector<Int>> table;           // table[c][i] in [0, e)
  std::vector<size_t> invariant_ws;
};

CharacterAction character_action(const MonomialExtension& ext);

// Symmetric-function integrality certificate for a polynomial z in the
// extension parameters: conjugates under the diagonal action, coefficients
// S_i of the monic product over the conjugates, value inequalities
// value(S_i) >= i * value(z) (strict for 0 < i < r in strict mode), and the
// homogeneous minimal-value equation assembled from the equality indices,
// which must vanish identically. S_i are cross-checked by an independent
// power-sum expansion.
struct SymmetricCertificate {
  long long r = 0;
  GroupElement z_value;
  std::vector<GroupElement> conjugate_values;
  std::vector<std::optional<GroupElement>> s_values;  // S_1..S_r; absent = zero
  bool inequalities_ok = false;
  bool strict_mode = false;
  std::vector<long long> equality_indices;
  bool equation_vanishes = false;
  std::string equation_text;
  std::vector<std::string> notes;
};

SymmetricCertificate kummer_symmetric_certificate(const SeriesPoly& z,
                                                  const MonomialExtension& ext, bool strict);

}  // namespace gradval
