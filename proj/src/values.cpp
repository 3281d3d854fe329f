#include <gradval/values.hpp>

#include <map>
#include <mutex>
#include <sstream>

namespace gradval {

namespace {

// Bracketing partial sums of arctan(1/x) for integer x >= 2: consecutive
// partial sums of the alternating series enclose the true value.
std::pair<Rat, Rat> arctan_inv_bounds(unsigned x, const Rat& max_width) {
  Rat s = 0;
  Rat xq(x);
  Rat pow = 1 / xq;  // 1/x^(2k+1)
  Rat inv_x2 = 1 / (xq * xq);
  unsigned k = 0;
  for (;;) {
    Rat term = pow / Rat(2 * k + 1);
    Rat next = s + (k % 2 ? -term : term);
    if (term <= max_width) {
      return k % 2 ? std::make_pair(next, s) : std::make_pair(s, next);
    }
    s = next;
    pow *= inv_x2;
    ++k;
  }
}

Rat pow2_neg(int level) {
  Int den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), level);
  return Rat(1) / Rat(den);
}

// pi = 16*arctan(1/5) - 4*arctan(1/239), every bound exact rational.
std::pair<Rat, Rat> pi_interval(int level) {
  Rat budget = pow2_neg(level + 5);
  auto [l5, h5] = arctan_inv_bounds(5, budget);
  auto [l239, h239] = arctan_inv_bounds(239, budget);
  return {16 * l5 - 4 * h239, 16 * h5 - 4 * l239};
}

// Bisection enclosure of sqrt(n) for non-square n >= 2, starting from [1, n].
std::pair<Rat, Rat> sqrt_interval(unsigned n, int level) {
  Rat lo(1), hi(n);
  Rat target = pow2_neg(level);
  Rat nq(n);
  while (hi - lo > target) {
    Rat mid = (lo + hi) / 2;
    if (mid * mid <= nq)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

// Refinement cache for the builtin constants, shared across checking
// threads, so reads and inserts stay behind one mutex.
std::mutex g_cache_mutex;
std::map<std::pair<int, unsigned>, std::vector<std::pair<Rat, Rat>>> g_cache;

std::pair<Rat, Rat> cached_interval(BasisReal::Kind kind, unsigned radicand, int level) {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto& seq = g_cache[{static_cast<int>(kind), radicand}];
  while (static_cast<int>(seq.size()) <= level) {
    int lvl = static_cast<int>(seq.size());
    std::pair<Rat, Rat> iv = kind == BasisReal::Kind::pi ? pi_interval(lvl)
                                                         : sqrt_interval(radicand, lvl);
    if (!seq.empty()) {  // keep the sequence nested
      iv.first = std::max(iv.first, seq.back().first);
      iv.second = std::min(iv.second, seq.back().second);
    }
    check_internal(iv.first <= iv.second, "constant refinement produced an empty interval");
    seq.push_back(iv);
  }
  return seq[level];
}

}  // namespace

BasisReal BasisReal::rational_unit() { return BasisReal{}; }

BasisReal BasisReal::pi() {
  BasisReal b;
  b.kind = Kind::pi;
  return b;
}

BasisReal BasisReal::sqrt(unsigned n) {
  require(n >= 2, "sqrt radicand must be at least 2");
  Int z(n);
  require(mpz_perfect_square_p(z.get_mpz_t()) == 0,
          "sqrt radicand is a perfect square; use the rational unit");
  BasisReal b;
  b.kind = Kind::sqrt;
  b.radicand = n;
  return b;
}

BasisReal BasisReal::custom(std::string name, std::vector<std::pair<Rat, Rat>> intervals) {
  require(!name.empty(), "custom constant needs a name");
  require(!intervals.empty(), "custom constant needs at least one interval");
  for (size_t i = 0; i < intervals.size(); ++i) {
    require(intervals[i].first <= intervals[i].second,
            "custom constant '" + name + "': interval " + std::to_string(i) + " is empty");
    if (i > 0) {
      require(intervals[i].first >= intervals[i - 1].first &&
                  intervals[i].second <= intervals[i - 1].second,
              "custom constant '" + name + "': intervals not nested at step " + std::to_string(i));
      require(intervals[i].second - intervals[i].first <
                  intervals[i - 1].second - intervals[i - 1].first,
              "custom constant '" + name + "': widths not strictly decreasing at step " +
                  std::to_string(i));
    }
  }
  BasisReal b;
  b.kind = Kind::custom;
  b.name = std::move(name);
  b.intervals = std::move(intervals);
  return b;
}

std::pair<Rat, Rat> BasisReal::interval(int level) const {
  switch (kind) {
    case Kind::rational_unit:
      return {Rat(1), Rat(1)};
    case Kind::pi:
    case Kind::sqrt:
      return cached_interval(kind, radicand, level);
    case Kind::custom:
      if (level >= static_cast<int>(intervals.size()))
        throw precision_exhausted("custom constant '" + name + "' has only " +
                                  std::to_string(intervals.size()) +
                                  " refinement intervals; needed level " + std::to_string(level));
      return intervals[level];
  }
  throw internal_error("unreachable basis real kind");
}

bool BasisReal::operator==(const BasisReal& o) const {
  return kind == o.kind && radicand == o.radicand && name == o.name && intervals == o.intervals;
}

std::string BasisReal::describe() const {
  switch (kind) {
    case Kind::rational_unit:
      return "rat";
    case Kind::pi:
      return "pi";
    case Kind::sqrt:
      return "sqrt:" + std::to_string(radicand);
    case Kind::custom:
      return "custom:" + name;
  }
  return "?";
}

bool OrderedGroup::operator==(const OrderedGroup& o) const {
  return lex_prefix == o.lex_prefix && basis == o.basis;
}

GroupPtr make_group(int lex_prefix, std::vector<BasisReal> basis) {
  require(lex_prefix >= 0, "negative lex prefix");
  require(lex_prefix + static_cast<int>(basis.size()) > 0, "group must have positive rank");
  int rational_units = 0;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].kind == BasisReal::Kind::rational_unit) ++rational_units;
    for (size_t j = i + 1; j < basis.size(); ++j)
      require(!(basis[i] == basis[j]),
              "duplicate basis constant " + basis[i].describe() + "; basis must be independent");
  }
  require(rational_units <= 1, "at most one rational unit per basis");
  OrderedGroup g;
  g.lex_prefix = lex_prefix;
  g.basis = std::move(basis);
  return std::make_shared<const OrderedGroup>(std::move(g));
}

GroupElement element(GroupPtr g, std::vector<Rat> coords) {
  require(g != nullptr, "null group");
  require(static_cast<int>(coords.size()) == g->rank(),
          "coordinate count " + std::to_string(coords.size()) + " does not match group rank " +
              std::to_string(g->rank()));
  return GroupElement{std::move(g), std::move(coords)};
}

GroupElement zero_element(GroupPtr g) {
  require(g != nullptr, "null group");
  return GroupElement{g, std::vector<Rat>(g->rank())};
}

bool same_group(const GroupElement& a, const GroupElement& b) {
  return a.group == b.group || *a.group == *b.group;
}

static void require_same_group(const GroupElement& a, const GroupElement& b) {
  require(same_group(a, b), "group mismatch between " + to_string(a) + " and " + to_string(b));
}

GroupElement add(const GroupElement& a, const GroupElement& b) {
  require_same_group(a, b);
  GroupElement r = a;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

GroupElement sub(const GroupElement& a, const GroupElement& b) {
  require_same_group(a, b);
  GroupElement r = a;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

GroupElement neg(const GroupElement& a) {
  GroupElement r = a;
  for (Rat& c : r.coords) c = -c;
  return r;
}

GroupElement scale(const Rat& c, const GroupElement& a) {
  GroupElement r = a;
  for (Rat& x : r.coords) x *= c;
  return r;
}

bool is_zero(const GroupElement& a) {
  for (const Rat& c : a.coords)
    if (c != 0) return false;
  return true;
}

std::string to_string(const GroupElement& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.coords.size(); ++i) os << (i ? ", " : "") << a.coords[i].get_str();
  os << ")";
  return os.str();
}

Cmp compare(const GroupElement& a, const GroupElement& b) {
  require_same_group(a, b);
  const OrderedGroup& g = *a.group;
  std::vector<Rat> d(a.coords.size());
  for (size_t i = 0; i < d.size(); ++i) d[i] = a.coords[i] - b.coords[i];

  for (int i = 0; i < g.lex_prefix; ++i) {
    int s = sign(d[i]);
    if (s > 0) return Cmp::greater;
    if (s < 0) return Cmp::less;
  }

  Rat exact = 0;
  std::vector<std::pair<Rat, const BasisReal*>> terms;
  for (size_t j = 0; j < g.basis.size(); ++j) {
    const Rat& c = d[g.lex_prefix + j];
    if (c == 0) continue;
    if (g.basis[j].kind == BasisReal::Kind::rational_unit)
      exact += c;
    else
      terms.emplace_back(c, &g.basis[j]);
  }
  if (terms.empty()) {
    int s = sign(exact);
    return s > 0 ? Cmp::greater : s < 0 ? Cmp::less : Cmp::equal;
  }
  for (int level = 0; level <= kRefinementCap; ++level) {
    Rat lo = exact, hi = exact;
    for (const auto& [c, br] : terms) {
      auto [l, h] = br->interval(level);
      if (sign(c) > 0) {
        lo += c * l;
        hi += c * h;
      } else {
        lo += c * h;
        hi += c * l;
      }
    }
    if (sign(lo) > 0) return Cmp::greater;
    if (sign(hi) < 0) return Cmp::less;
  }
  throw precision_exhausted(
      "comparison undecided after " + std::to_string(kRefinementCap) +
      " refinement doublings; declared basis independence is suspect for difference " +
      to_string(sub(a, b)));
}

Cmp sign_of(const GroupElement& a) { return compare(a, zero_element(a.group)); }

std::pair<Rat, Rat> value_interval(const GroupElement& a, int level) {
  check_internal(a.group->lex_prefix == 0, "value interval needs a purely embedded group");
  Rat lo = 0, hi = 0;
  for (size_t j = 0; j < a.group->basis.size(); ++j) {
    const Rat& c = a.coords[j];
    if (c == 0) continue;
    auto [l, h] = a.group->basis[j].interval(level);
    if (sign(c) > 0) {
      lo += c * l;
      hi += c * h;
    } else {
      lo += c * h;
      hi += c * l;
    }
  }
  return {lo, hi};
}

namespace {

// Clears denominators across elems; returns the matrix whose COLUMNS are the
// scaled elements.
IntMatrix columns_scaled(const std::vector<GroupElement>& elems, const Int& den) {
  int rank = elems.empty() ? 0 : elems[0].group->rank();
  IntMatrix m(rank, static_cast<int>(elems.size()));
  for (size_t k = 0; k < elems.size(); ++k)
    for (int i = 0; i < rank; ++i) {
      Rat q = elems[k].coords[i] * Rat(den);
      check_internal(q.get_den() == 1, "denominator clearing failed");
      m.at(i, static_cast<int>(k)) = q.get_num();
    }
  return m;
}

Int denominator_over(const std::vector<const GroupElement*>& elems) {
  std::vector<Rat> all;
  for (const GroupElement* e : elems)
    for (const Rat& c : e->coords) all.push_back(c);
  return common_denominator(all);
}

}  // namespace

std::optional<std::vector<Int>> in_subgroup(const GroupElement& g,
                                            const std::vector<GroupElement>& gens) {
  for (const GroupElement& x : gens) require_same_group(g, x);
  if (gens.empty()) {
    if (is_zero(g)) return std::vector<Int>{};
    return std::nullopt;
  }
  std::vector<const GroupElement*> all{&g};
  for (const GroupElement& x : gens) all.push_back(&x);
  Int den = denominator_over(all);
  IntMatrix a = columns_scaled(gens, den);
  std::vector<Int> b(g.group->rank());
  for (int i = 0; i < g.group->rank(); ++i) {
    Rat q = g.coords[i] * Rat(den);
    b[i] = q.get_num();
  }
  return solve_integral(a, b);
}

SubgroupIndex subgroup_index(const std::vector<GroupElement>& sub,
                             const std::vector<GroupElement>& amb) {
  for (size_t i = 1; i < sub.size(); ++i) require_same_group(sub[0], sub[i]);
  for (size_t i = 0; i < amb.size(); ++i)
    if (!sub.empty()) require_same_group(sub[0], amb[i]);

  std::vector<const GroupElement*> all;
  for (const GroupElement& e : sub) all.push_back(&e);
  for (const GroupElement& e : amb) all.push_back(&e);
  if (all.empty()) return SubgroupIndex{true, 1};
  Int den = denominator_over(all);

  // Row bases of the two scaled lattices.
  IntMatrix sub_rows = transpose(columns_scaled(sub, den));
  IntMatrix amb_rows = transpose(columns_scaled(amb, den));
  HermiteResult hs = hermite_normal_form(sub_rows);
  HermiteResult ha = hermite_normal_form(amb_rows);

  IntMatrix amb_basis(ha.rank, amb_rows.cols);
  for (int i = 0; i < ha.rank; ++i)
    for (int j = 0; j < amb_rows.cols; ++j) amb_basis.at(i, j) = ha.h.at(i, j);
  IntMatrix amb_basis_t = transpose(amb_basis);

  for (size_t k = 0; k < sub.size(); ++k) {
    std::vector<Rat> scaled;
    std::vector<Int> b;
    for (const Rat& c : sub[k].coords) b.push_back(Rat(c * Rat(den)).get_num());
    if (!solve_integral(amb_basis_t, b))
      throw input_error("subgroup_index: generator " + to_string(sub[k]) +
                        " lies outside the ambient group");
  }

  if (hs.rank < ha.rank) return SubgroupIndex{false, 0};
  check_internal(hs.rank == ha.rank, "subgroup rank exceeds ambient rank");

  // Express the sub basis over the ambient basis; the index is |det| of that.
  int r = hs.rank;
  if (r == 0) return SubgroupIndex{true, 1};
  IntMatrix c(r, r);
  for (int i = 0; i < r; ++i) {
    std::vector<Int> b(sub_rows.cols);
    for (int j = 0; j < sub_rows.cols; ++j) b[j] = hs.h.at(i, j);
    auto sol = solve_integral(amb_basis_t, b);
    check_internal(sol.has_value(), "sub basis escaped ambient lattice after membership check");
    for (int j = 0; j < r; ++j) c.at(i, j) = (*sol)[j];
  }
  Int d = det(c);
  check_internal(d != 0, "independent sub basis with zero determinant");
  return SubgroupIndex{true, abs(d)};
}

}  // namespace gradval
