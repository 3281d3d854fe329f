#pragma once

#include <gradval/values.hpp>

namespace gradval {

// Finitely generated submonoid of a value group. Generators must be strictly
// positive in the group order (group_like relaxes that for auxiliary lattice
// work); zero generators are always rejected. Membership-style operations
// need coefficient bounds from generator values, so the group must not have a
// lex prefix.
struct AffineMonoid {
  GroupPtr group;
  std::vector<GroupElement> gens;
  bool group_like = false;
};

AffineMonoid make_monoid(GroupPtr g, std::vector<GroupElement> gens, bool group_like = false);

// Convenience: rank-n group with an all-positive, pairwise Q-independent
// basis (the rational unit followed by square roots of squarefree integers),
// suitable for monoids given by integer coordinate vectors.
GroupPtr standard_positive_group(int n);
GroupElement element_from_ints(GroupPtr g, const std::vector<Int>& v);

// Lattice points of the half-open parallelepiped spanned by n independent
// vectors in Z^n. |points| always equals |det| of the basis matrix; that
// identity is asserted before returning.
struct ParBox {
  std::vector<std::vector<Int>> basis;
  std::vector<std::vector<Int>> points;  // lex sorted, contains the origin
};
ParBox par_points(const std::vector<std::vector<Int>>& basis);

// Exhaustive box audit of the parallelepiped decomposition: every point of
// {0..bound}^n that lies in the rational cone of the basis rows must lie in
// exactly one translate lambda + M, lambda ranging over the parallelepiped
// points. Returns the first violation found, if any.
struct CoverViolation {
  std::vector<Int> point;
  std::string reason;
};
std::optional<CoverViolation> par_cover_check(const std::vector<std::vector<Int>>& basis,
                                              const Int& bound);

// Nonnegative integer combination of the generators equal to g, if one
// exists. Decidable because generator values are strictly positive.
std::optional<std::vector<Int>> member(const GroupElement& g, const AffineMonoid& m);

// Membership of g in the saturation of m: the minimal multiplier mult >= 1
// with mult*g in m, together with the witnessing combination. Present exactly
// when g lies in the rational cone of the generators.
struct SaturationWitness {
  Int multiplier;
  std::vector<Int> coeffs;  // sum coeffs_i * gens_i == multiplier * g
};
std::optional<SaturationWitness> saturation_member(const GroupElement& g, const AffineMonoid& m);

// Whether the translates t + M are pairwise disjoint. Two translates meet
// exactly when the difference of their offsets lies in the group generated by
// the monoid; the witness carries a common point.
struct TranslateOverlap {
  size_t i, j;
  std::vector<Int> common;  // a point of (t_i + M) ∩ (t_j + M)
};
std::optional<TranslateOverlap> translates_overlap(const std::vector<std::vector<Int>>& translates,
                                                   const std::vector<std::vector<Int>>& monoid_gens);
struct TranslateOverlapElems {
  size_t i, j;
  GroupElement common;
};
std::optional<TranslateOverlapElems> translates_overlap(const std::vector<GroupElement>& translates,
                                                        const AffineMonoid& m);

// Generators of s2 as a module over s1. Preconditions: every s2 generator
// passes saturation_member over s1 (error with witness otherwise). Finite
// when the cones agree and the group index is finite; rank-1 lattices get the
// exact minimal generating set via a conductor-bounded sieve, higher ranks
// the parallelepiped recipe with a closure verification.
struct ModuleGenerators {
  bool finite = false;
  std::vector<GroupElement> gens;     // finite case, sorted by value
  std::string evidence;               // non-finite reason
  std::optional<GroupElement> witness;
};
ModuleGenerators module_generators(const AffineMonoid& s2, const AffineMonoid& s1);

}  // namespace gradval
