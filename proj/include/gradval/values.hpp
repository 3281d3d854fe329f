#pragma once

#include <gradval/lattice.hpp>

#include <memory>
#include <utility>

namespace gradval {

enum class Cmp { less, equal, greater };

// One coordinate direction of an ordered group: a real number declared
// Q-linearly independent of the other basis entries. Irrational entries are
// known only through nested rational intervals that can be refined on demand;
// refinement level k guarantees width <= 2^-k for the builtin constants.
struct BasisReal {
  enum class Kind { rational_unit, pi, sqrt, custom };
  Kind kind = Kind::rational_unit;
  unsigned radicand = 0;                             // sqrt only; not a perfect square
  std::string name;                                  // custom only
  std::vector<std::pair<Rat, Rat>> intervals;        // custom only; nested, shrinking

  static BasisReal rational_unit();
  static BasisReal pi();
  static BasisReal sqrt(unsigned n);
  static BasisReal custom(std::string name, std::vector<std::pair<Rat, Rat>> intervals);

  // Enclosing interval at the given refinement level. Custom constants throw
  // precision_exhausted once their declared list runs out.
  std::pair<Rat, Rat> interval(int level) const;

  bool operator==(const BasisReal& o) const;
  std::string describe() const;
};

// Finite-rank ordered abelian group: the first lex_prefix coordinates are
// compared lexicographically, the rest weigh the declared basis reals.
struct OrderedGroup {
  int lex_prefix = 0;
  std::vector<BasisReal> basis;

  int rank() const { return lex_prefix + static_cast<int>(basis.size()); }
  bool operator==(const OrderedGroup& o) const;
};

using GroupPtr = std::shared_ptr<const OrderedGroup>;

GroupPtr make_group(int lex_prefix, std::vector<BasisReal> basis);

struct GroupElement {
  GroupPtr group;
  std::vector<Rat> coords;  // size == group->rank()
};

GroupElement element(GroupPtr g, std::vector<Rat> coords);
GroupElement zero_element(GroupPtr g);

bool same_group(const GroupElement& a, const GroupElement& b);
GroupElement add(const GroupElement& a, const GroupElement& b);
GroupElement sub(const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupElement& a);
GroupElement scale(const Rat& c, const GroupElement& a);
bool is_zero(const GroupElement& a);
std::string to_string(const GroupElement& a);

// Total order; exact rational parts are decided directly, irrational parts by
// interval refinement up to the doubling cap (default 256), after which a
// precision_exhausted diagnostic is raised rather than guessing.
inline constexpr int kRefinementCap = 256;
Cmp compare(const GroupElement& a, const GroupElement& b);
Cmp sign_of(const GroupElement& a);  // comparison against zero

// Rational enclosure of the embedded-real value of a at the given refinement
// level; only defined for groups without a lex prefix.
std::pair<Rat, Rat> value_interval(const GroupElement& a, int level);

// Certificate of membership in the subgroup generated by gens: integer
// coefficients c with sum c_i * gens_i == g, if any exist.
std::optional<std::vector<Int>> in_subgroup(const GroupElement& g,
                                            const std::vector<GroupElement>& gens);

struct SubgroupIndex {
  bool finite = false;
  Int index;  // meaningful when finite
};

// Index of the subgroup generated by sub inside the one generated by amb.
// Every sub generator must already lie in the ambient group (witnessed error
// otherwise); a rank drop makes the index infinite.
SubgroupIndex subgroup_index(const std::vector<GroupElement>& sub,
                             const std::vector<GroupElement>& amb);

}  // namespace gradval
