#include <gradval/monoid.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace gradval {

namespace {

Int rat_floor(const Rat& q) {
  Int out;
  Int num = q.get_num(), den = q.get_den();
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

bool cmp_value_less(const GroupElement& a, const GroupElement& b) {
  return compare(a, b) == Cmp::less;
}

// Common denominator across the coordinates of all listed elements.
Int scale_denominator(const std::vector<const GroupElement*>& elems) {
  std::vector<Rat> all;
  for (const GroupElement* e : elems)
    for (const Rat& c : e->coords) all.push_back(c);
  return common_denominator(all);
}

std::vector<Int> scaled_coords(const GroupElement& e, const Int& den) {
  std::vector<Int> v(e.coords.size());
  for (size_t i = 0; i < e.coords.size(); ++i) {
    Rat q = e.coords[i] * Rat(den);
    check_internal(q.get_den() == 1, "denominator clearing failed");
    v[i] = q.get_num();
  }
  return v;
}

IntMatrix columns_of(const std::vector<std::vector<Int>>& vecs) {
  int n = vecs.empty() ? 0 : static_cast<int>(vecs[0].size());
  IntMatrix m(n, static_cast<int>(vecs.size()));
  for (size_t k = 0; k < vecs.size(); ++k)
    for (int i = 0; i < n; ++i) m.at(i, static_cast<int>(k)) = vecs[k][i];
  return m;
}

// ---- rank-1 reduction -------------------------------------------------

// All vectors lie on one line; expresses them as integer multiples of a
// primitive direction, oriented so the monoid generators come out positive.
struct Line {
  std::vector<Int> v0;
  std::vector<long> gen_multiples;
};

std::optional<Line> line_of(const std::vector<std::vector<Int>>& gen_vecs) {
  IntMatrix rows = transpose(columns_of(gen_vecs));
  HermiteResult h = hermite_normal_form(rows);
  if (h.rank != 1) return std::nullopt;
  Line line;
  line.v0 = h.h.row(0);
  int j0 = -1;
  for (size_t j = 0; j < line.v0.size(); ++j)
    if (line.v0[j] != 0) { j0 = static_cast<int>(j); break; }
  check_internal(j0 >= 0, "zero direction vector");
  for (const auto& g : gen_vecs) {
    Int m;
    mpz_divexact(m.get_mpz_t(), g[j0].get_mpz_t(), line.v0[j0].get_mpz_t());
    line.gen_multiples.push_back(to_long(m, "rank-1 generator multiple"));
  }
  if (!line.gen_multiples.empty() && line.gen_multiples[0] < 0) {
    for (Int& c : line.v0) c = -c;
    for (long& m : line.gen_multiples) m = -m;
  }
  for (long m : line.gen_multiples)
    check_internal(m > 0, "rank-1 generator with nonpositive multiple of the direction");
  return line;
}

// Multiple of v0 giving the target vector, if the target is on the line.
std::optional<Rat> multiple_on_line(const Line& line, const std::vector<Int>& target) {
  int j0 = -1;
  for (size_t j = 0; j < line.v0.size(); ++j)
    if (line.v0[j] != 0) { j0 = static_cast<int>(j); break; }
  Rat c = Rat(target[j0]) / Rat(line.v0[j0]);
  for (size_t j = 0; j < line.v0.size(); ++j)
    if (Rat(target[j]) != c * Rat(line.v0[j])) return std::nullopt;
  return c;
}

// Unbounded-knapsack reachability over positive integer steps, with one
// predecessor remembered per reachable value for certificate extraction.
constexpr long kSieveCap = 64'000'000;

struct Sieve {
  std::vector<int> parent;  // generator index, -1 unreachable, -2 zero
  const std::vector<long>* steps;
  explicit Sieve(const std::vector<long>& s, long bound) : steps(&s) {
    check_internal(bound < kSieveCap, "numerical sieve bound exceeds the desk-scale cap");
    parent.assign(static_cast<size_t>(bound) + 1, -1);
    parent[0] = -2;
    for (long x = 0; x <= bound; ++x) {
      if (parent[x] < -1 || parent[x] >= 0) {
        for (size_t i = 0; i < s.size(); ++i) {
          long y = x + s[i];
          if (y <= bound && parent[y] == -1) parent[y] = static_cast<int>(i);
        }
      }
    }
  }
  bool reachable(long x) const {
    return x >= 0 && x < static_cast<long>(parent.size()) && parent[x] != -1;
  }
  std::vector<Int> combination(long x, size_t gen_count) const {
    std::vector<Int> c(gen_count);
    while (x > 0) {
      int g = parent[x];
      check_internal(g >= 0, "certificate walk on unreachable value");
      c[g] += 1;
      x -= (*steps)[g];
    }
    return c;
  }
};

// ---- Fourier-Motzkin --------------------------------------------------

constexpr int kConeDimCap = 6;

struct Ineq {
  std::vector<Rat> a;  // a . x <= b
  Rat b;
};

void normalize(Ineq& q) {
  std::vector<Rat> all = q.a;
  all.push_back(q.b);
  Int den = common_denominator(all);
  Int g = 0;
  for (Rat& c : all) {
    Rat s = c * Rat(den);
    Int n = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0) g = 1;
  Rat f = Rat(den) / Rat(g);
  for (Rat& c : q.a) c *= f;
  q.b *= f;
}

// Finds x >= 0 with sum x_i * cols_i == target, if the cone contains target.
std::optional<std::vector<Rat>> cone_point(const std::vector<std::vector<Int>>& gen_vecs,
                                           const std::vector<Int>& target) {
  int k = static_cast<int>(gen_vecs.size());
  require(k <= kConeDimCap, "cone feasibility dimension " + std::to_string(k) +
                                " exceeds the cap of " + std::to_string(kConeDimCap));
  size_t n = target.size();
  std::vector<Ineq> cur;
  for (size_t r = 0; r < n; ++r) {
    Ineq up, dn;
    up.a.resize(k);
    dn.a.resize(k);
    for (int i = 0; i < k; ++i) {
      up.a[i] = Rat(gen_vecs[i][r]);
      dn.a[i] = -Rat(gen_vecs[i][r]);
    }
    up.b = Rat(target[r]);
    dn.b = -Rat(target[r]);
    cur.push_back(up);
    cur.push_back(dn);
  }
  for (int i = 0; i < k; ++i) {
    Ineq nn;
    nn.a.assign(k, Rat(0));
    nn.a[i] = -1;
    nn.b = 0;
    cur.push_back(nn);
  }

  auto eliminate = [&](const std::vector<Ineq>& rows, int j) {
    std::vector<Ineq> next;
    std::vector<const Ineq*> pos, neg;
    for (const Ineq& q : rows) {
      int s = sign(q.a[j]);
      if (s == 0)
        next.push_back(q);
      else if (s > 0)
        pos.push_back(&q);
      else
        neg.push_back(&q);
    }
    std::map<std::pair<std::vector<Rat>, Rat>, bool> seen;
    for (const Ineq* p : pos)
      for (const Ineq* m : neg) {
        Ineq q;
        q.a.assign(k, Rat(0));
        Rat wp = -m->a[j], wm = p->a[j];
        for (int t = 0; t < k; ++t) q.a[t] = p->a[t] * wp + m->a[t] * wm;
        q.b = p->b * wp + m->b * wm;
        check_internal(q.a[j] == 0, "variable did not cancel in elimination");
        normalize(q);
        if (!seen.emplace(std::make_pair(q.a, q.b), true).second) continue;
        next.push_back(q);
      }
    return next;
  };

  std::vector<std::vector<Ineq>> stages(k);
  for (int j = k - 1; j >= 0; --j) {
    stages[j] = cur;
    cur = eliminate(cur, j);
  }
  // only constant rows remain; they decide feasibility
  for (const Ineq& q : cur)
    if (q.b < 0) return std::nullopt;

  std::vector<Rat> x(k, Rat(0));
  for (int j = 0; j < k; ++j) {
    bool have_lo = false, have_hi = false;
    Rat lo = 0, hi = 0;
    for (const Ineq& q : stages[j]) {
      Rat lhs = q.b;
      for (int t = 0; t < j; ++t) lhs -= q.a[t] * x[t];
      int s = sign(q.a[j]);
      if (s == 0) {
        check_internal(lhs >= 0, "carried constraint failed during back-substitution");
        continue;
      }
      Rat bound = lhs / q.a[j];
      if (s > 0) {
        if (!have_hi || bound < hi) { hi = bound; have_hi = true; }
      } else {
        if (!have_lo || bound > lo) { lo = bound; have_lo = true; }
      }
    }
    check_internal(have_lo, "missing nonnegativity bound in elimination stage");
    check_internal(!have_hi || lo <= hi, "empty bound interval despite feasibility");
    x[j] = lo;
  }
  for (size_t r = 0; r < n; ++r) {
    Rat s = 0;
    for (int i = 0; i < k; ++i) s += x[i] * Rat(gen_vecs[i][r]);
    check_internal(s == Rat(target[r]), "cone point does not satisfy the equalities");
  }
  return x;
}

// Upper bound on how many copies of gen can fit under rem, by value.
// Returns -1 when rem itself has negative value at the refined level.
long count_bound(const GroupElement& rem, const GroupElement& gen) {
  for (int level = 4; level <= kRefinementCap; level *= 2) {
    auto [glo, ghi] = value_interval(gen, level);
    (void)ghi;
    if (sign(glo) <= 0) continue;
    auto [rlo, rhi] = value_interval(rem, level);
    (void)rlo;
    if (sign(rhi) < 0) return -1;
    return to_long(rat_floor(rhi / glo), "membership coefficient bound");
  }
  throw precision_exhausted("could not certify a generator value positive within the cap");
}

bool member_dfs(const std::vector<GroupElement>& gens, size_t idx, const GroupElement& rem,
                std::vector<Int>& coeffs) {
  if (is_zero(rem)) {
    for (size_t i = idx; i < gens.size(); ++i) coeffs[i] = 0;
    return true;
  }
  if (idx == gens.size()) return false;
  long hi = count_bound(rem, gens[idx]);
  for (long c = hi; c >= 0; --c) {
    GroupElement next = rem;
    for (size_t t = 0; t < next.coords.size(); ++t)
      next.coords[t] -= Rat(c) * gens[idx].coords[t];
    coeffs[idx] = c;
    if (member_dfs(gens, idx + 1, next, coeffs)) return true;
  }
  return false;
}

}  // namespace

AffineMonoid make_monoid(GroupPtr g, std::vector<GroupElement> gens, bool group_like) {
  require(g != nullptr, "null group");
  require(g->lex_prefix == 0,
          "monoids need a purely embedded group order (coefficient bounds come from values)");
  for (const GroupElement& x : gens) {
    require(same_group(x, zero_element(g)), "generator group mismatch");
    require(!is_zero(x), "degenerate zero generator");
    if (!group_like)
      require(sign_of(x) == Cmp::greater,
              "generator " + to_string(x) + " is not strictly positive");
  }
  return AffineMonoid{std::move(g), std::move(gens), group_like};
}

GroupPtr standard_positive_group(int n) {
  require(n >= 1 && n <= 12, "standard positive group supports ranks 1..12");
  std::vector<BasisReal> basis;
  basis.push_back(BasisReal::rational_unit());
  for (unsigned q = 2; static_cast<int>(basis.size()) < n; ++q) {
    bool squarefree = true;
    for (unsigned p = 2; p * p <= q; ++p)
      if (q % (p * p) == 0) { squarefree = false; break; }
    if (squarefree) basis.push_back(BasisReal::sqrt(q));
  }
  return make_group(0, std::move(basis));
}

GroupElement element_from_ints(GroupPtr g, const std::vector<Int>& v) {
  std::vector<Rat> coords;
  coords.reserve(v.size());
  for (const Int& z : v) coords.emplace_back(z);
  return element(std::move(g), std::move(coords));
}

ParBox par_points(const std::vector<std::vector<Int>>& basis) {
  require(!basis.empty(), "empty parallelepiped basis");
  int n = static_cast<int>(basis.size());
  for (const auto& v : basis)
    require(static_cast<int>(v.size()) == n, "parallelepiped basis must be square");
  IntMatrix v = IntMatrix::from_rows(basis);
  Int d = det(v);
  require(d != 0, "parallelepiped basis is linearly dependent");
  IntMatrix adj = adjugate(v);

  std::vector<Int> lo(n), hi(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (basis[i][j] < 0) lo[j] += basis[i][j];
      if (basis[i][j] > 0) hi[j] += basis[i][j];
    }

  ParBox box;
  box.basis = basis;
  std::vector<Int> p = lo;
  bool ads = d > 0;
  for (;;) {
    // p is inside iff every coordinate of p * adj(v), signed by det, is in [0, |det|)
    bool inside = true;
    for (int i = 0; i < n && inside; ++i) {
      Int s = 0;
      for (int j = 0; j < n; ++j) s += p[j] * adj.at(j, i);
      if (ads ? (s < 0 || s >= d) : (s > 0 || s <= d)) inside = false;
    }
    if (inside) box.points.push_back(p);
    int j = n - 1;
    while (j >= 0) {
      ++p[j];
      if (p[j] <= hi[j]) break;
      p[j] = lo[j];
      --j;
    }
    if (j < 0) break;
  }
  std::sort(box.points.begin(), box.points.end());
  check_internal(Int(box.points.size()) == abs(d),
                 "parallelepiped point count " + std::to_string(box.points.size()) +
                     " differs from |det| = " + to_string(Int(abs(d))));
  std::vector<Int> origin(n, 0);
  check_internal(std::binary_search(box.points.begin(), box.points.end(), origin),
                 "parallelepiped lost the origin");
  return box;
}

std::optional<CoverViolation> par_cover_check(const std::vector<std::vector<Int>>& basis,
                                              const Int& bound) {
  require(bound >= 0, "cover bound must be nonnegative");
  int n = static_cast<int>(basis.size());
  ParBox box = par_points(basis);  // validates squareness and independence
  IntMatrix v = IntMatrix::from_rows(basis);
  Int d = det(v);
  IntMatrix adj = adjugate(v);
  int ds = sign(d);

  // x = q^T * basis  <=>  q^T = x^T * adj / d; membership in a translate
  // lambda + M needs (x - lambda)^T * adj divisible by d with quotient >= 0.
  auto row_times_adj = [&](const std::vector<Int>& p) {
    std::vector<Int> s(n);
    for (int i = 0; i < n; ++i) {
      Int acc = 0;
      for (int j = 0; j < n; ++j) acc += p[j] * adj.at(j, i);
      s[i] = acc;
    }
    return s;
  };

  std::vector<std::vector<Int>> lambda_adj;
  for (const auto& lam : box.points) lambda_adj.push_back(row_times_adj(lam));

  long b = to_long(bound, "cover bound");
  std::vector<long> x(n, 0);
  std::vector<Int> xi(n, 0);
  for (;;) {
    for (int j = 0; j < n; ++j) xi[j] = x[j];
    std::vector<Int> s = row_times_adj(xi);
    bool in_cone = true;
    for (int i = 0; i < n && in_cone; ++i)
      if (sign(s[i]) * ds < 0) in_cone = false;
    // Points outside the cone cannot meet any translate (translates sit
    // inside the cone), so only cone points are audited.
    if (in_cone) {
      int hits = 0;
      for (const auto& la : lambda_adj) {
        bool inside = true;
        for (int i = 0; i < n && inside; ++i) {
          Int y = s[i] - la[i];
          if (!mpz_divisible_p(y.get_mpz_t(), d.get_mpz_t()) || sign(y) * ds < 0)
            inside = false;
        }
        if (inside) ++hits;
      }
      if (hits != 1)
        return CoverViolation{xi, hits == 0 ? "cone point covered by no translate"
                                            : "cone point covered by " +
                                                  std::to_string(hits) + " translates"};
    }
    int j = n - 1;
    while (j >= 0) {
      ++x[j];
      if (x[j] <= b) break;
      x[j] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return std::nullopt;
}

std::optional<std::vector<Int>> member(const GroupElement& g, const AffineMonoid& m) {
  require(!m.group_like, "membership is undefined for group-like auxiliaries");
  require(same_group(g, zero_element(m.group)), "element group mismatch");
  size_t k = m.gens.size();
  if (is_zero(g)) return std::vector<Int>(k, 0);
  if (sign_of(g) != Cmp::greater) return std::nullopt;
  if (k == 0) return std::nullopt;

  std::vector<const GroupElement*> all{&g};
  for (const GroupElement& x : m.gens) all.push_back(&x);
  Int den = scale_denominator(all);
  std::vector<std::vector<Int>> gen_vecs;
  for (const GroupElement& x : m.gens) gen_vecs.push_back(scaled_coords(x, den));
  std::vector<Int> target = scaled_coords(g, den);

  IntMatrix cols = columns_of(gen_vecs);
  int r = rank(cols);
  if (r == static_cast<int>(k)) {
    // independent generators: the rational combination is unique
    std::vector<Rat> b(target.size());
    for (size_t i = 0; i < target.size(); ++i) b[i] = Rat(target[i]);
    auto sol = solve_rational(cols, b);
    if (!sol) return std::nullopt;
    std::vector<Int> coeffs(k);
    for (size_t i = 0; i < k; ++i) {
      if ((*sol)[i].get_den() != 1 || (*sol)[i] < 0) return std::nullopt;
      coeffs[i] = (*sol)[i].get_num();
    }
    return coeffs;
  }
  if (r == 1) {
    auto line = line_of(gen_vecs);
    check_internal(line.has_value(), "rank-1 lattice without a line");
    auto c = multiple_on_line(*line, target);
    if (!c || c->get_den() != 1) return std::nullopt;
    long t = to_long(c->get_num(), "rank-1 membership target");
    if (t < 0) return std::nullopt;
    Sieve sieve(line->gen_multiples, t);
    if (!sieve.reachable(t)) return std::nullopt;
    return sieve.combination(t, k);
  }
  // dependent generators of higher rank: bounded search ordered by value
  std::vector<size_t> order(k);
  for (size_t i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return cmp_value_less(m.gens[b], m.gens[a]); });
  std::vector<GroupElement> sorted;
  for (size_t i : order) sorted.push_back(m.gens[i]);
  std::vector<Int> sorted_coeffs(k);
  if (!member_dfs(sorted, 0, g, sorted_coeffs)) return std::nullopt;
  std::vector<Int> coeffs(k);
  for (size_t i = 0; i < k; ++i) coeffs[order[i]] = sorted_coeffs[i];
  return coeffs;
}

std::optional<SaturationWitness> saturation_member(const GroupElement& g, const AffineMonoid& m) {
  require(!m.group_like, "saturation is undefined for group-like auxiliaries");
  require(same_group(g, zero_element(m.group)), "element group mismatch");
  size_t k = m.gens.size();
  if (is_zero(g)) return SaturationWitness{1, std::vector<Int>(k, 0)};
  if (k == 0) return std::nullopt;
  if (sign_of(g) != Cmp::greater) return std::nullopt;

  std::vector<const GroupElement*> all{&g};
  for (const GroupElement& x : m.gens) all.push_back(&x);
  Int den = scale_denominator(all);
  std::vector<std::vector<Int>> gen_vecs;
  for (const GroupElement& x : m.gens) gen_vecs.push_back(scaled_coords(x, den));
  std::vector<Int> target = scaled_coords(g, den);

  IntMatrix cols = columns_of(gen_vecs);
  int r = rank(cols);

  if (r == static_cast<int>(k)) {
    std::vector<Rat> b(target.size());
    for (size_t i = 0; i < target.size(); ++i) b[i] = Rat(target[i]);
    auto sol = solve_rational(cols, b);
    if (!sol) return std::nullopt;
    for (const Rat& q : *sol)
      if (q < 0) return std::nullopt;
    // mult*g is in the monoid exactly when mult clears every denominator, so
    // the lcm is the true minimum here
    Int mult = common_denominator(*sol);
    SaturationWitness w;
    w.multiplier = mult;
    for (const Rat& q : *sol) {
      Rat c = q * Rat(mult);
      w.coeffs.push_back(c.get_num());
    }
    return w;
  }

  if (r == 1) {
    auto line = line_of(gen_vecs);
    check_internal(line.has_value(), "rank-1 lattice without a line");
    auto c = multiple_on_line(*line, target);
    if (!c || *c <= 0) return std::nullopt;
    long p = to_long(c->get_num(), "saturation numerator");
    long q = to_long(c->get_den(), "saturation denominator");
    long max_step = *std::max_element(line->gen_multiples.begin(), line->gen_multiples.end());
    long min_step = *std::min_element(line->gen_multiples.begin(), line->gen_multiples.end());
    long g = 0;
    for (long s : line->gen_multiples) g = std::gcd(g, s);
    // conductor bound of the step semigroup plus one full stride of j*p
    Int bound_z = Int(min_step) * Int(max_step) / g + Int(p) * g + p;
    long bound = to_long(bound_z, "rank-1 saturation sieve bound");
    Sieve sieve(line->gen_multiples, bound);
    for (long j = 1; j * p <= bound; ++j) {
      if (sieve.reachable(j * p)) {
        SaturationWitness w;
        w.multiplier = Int(j) * Int(q);
        w.coeffs = sieve.combination(j * p, k);
        return w;
      }
    }
    throw internal_error("rank-1 saturation scan passed the conductor without a hit");
  }

  auto point = cone_point(gen_vecs, target);
  if (!point) return std::nullopt;
  Int m0 = common_denominator(*point);
  for (Int d = 1; d <= m0; ++d) {
    GroupElement gd = scale(Rat(d), g);
    if (auto combo = member(gd, m)) return SaturationWitness{d, *combo};
  }
  throw internal_error("saturation scan missed its own feasible multiplier");
}

std::optional<TranslateOverlap> translates_overlap(
    const std::vector<std::vector<Int>>& translates,
    const std::vector<std::vector<Int>>& monoid_gens) {
  size_t n = translates.empty() ? 0 : translates[0].size();
  for (const auto& t : translates) require(t.size() == n, "ragged translate list");
  for (const auto& g : monoid_gens) require(g.size() == n, "translate/generator size mismatch");
  IntMatrix cols(static_cast<int>(n), static_cast<int>(monoid_gens.size()));
  for (size_t kk = 0; kk < monoid_gens.size(); ++kk)
    for (size_t t = 0; t < n; ++t) cols.at(static_cast<int>(t), static_cast<int>(kk)) = monoid_gens[kk][t];
  for (size_t i = 0; i < translates.size(); ++i)
    for (size_t j = i + 1; j < translates.size(); ++j) {
      std::vector<Int> delta(n);
      for (size_t t = 0; t < n; ++t) delta[t] = translates[i][t] - translates[j][t];
      auto sol = solve_integral(cols, delta);
      if (!sol) continue;
      // delta = sum c_k g_k; splitting signs lands one point in both translates
      std::vector<Int> common = translates[i];
      for (size_t kk = 0; kk < sol->size(); ++kk)
        if ((*sol)[kk] < 0)
          for (size_t t = 0; t < n; ++t) common[t] += -(*sol)[kk] * monoid_gens[kk][t];
      std::vector<Int> other = translates[j];
      for (size_t kk = 0; kk < sol->size(); ++kk)
        if ((*sol)[kk] > 0)
          for (size_t t = 0; t < n; ++t) other[t] += (*sol)[kk] * monoid_gens[kk][t];
      check_internal(common == other, "overlap witness mismatch");
      return TranslateOverlap{i, j, common};
    }
  return std::nullopt;
}

std::optional<TranslateOverlapElems> translates_overlap(const std::vector<GroupElement>& translates,
                                                        const AffineMonoid& m) {
  for (size_t i = 0; i < translates.size(); ++i)
    for (size_t j = i + 1; j < translates.size(); ++j) {
      auto sol = in_subgroup(sub(translates[i], translates[j]), m.gens);
      if (!sol) continue;
      GroupElement common = translates[i];
      for (size_t kk = 0; kk < sol->size(); ++kk)
        if ((*sol)[kk] < 0) common = add(common, scale(Rat(-(*sol)[kk]), m.gens[kk]));
      return TranslateOverlapElems{i, j, common};
    }
  return std::nullopt;
}

namespace {

// Exact minimal module generators on a rank-1 lattice: the members of s2 not
// of the form (positive element of s1) + (member of s1+s2), cut off at the
// conductor.
ModuleGenerators rank1_module_generators(const AffineMonoid& s2, const Int& den,
                                         const std::vector<std::vector<Int>>& vecs2,
                                         const std::vector<std::vector<Int>>& vecs1) {
  std::vector<std::vector<Int>> all_vecs = vecs2;
  all_vecs.insert(all_vecs.end(), vecs1.begin(), vecs1.end());
  auto line = line_of(all_vecs);
  check_internal(line.has_value(), "rank-1 module path without a line");
  std::vector<long> a(line->gen_multiples.begin(), line->gen_multiples.begin() + vecs2.size());
  std::vector<long> b(line->gen_multiples.begin() + vecs2.size(), line->gen_multiples.end());

  long g2 = 0;
  for (long x : a) g2 = std::gcd(g2, x);
  long min_a = *std::min_element(a.begin(), a.end());
  long max_a = *std::max_element(a.begin(), a.end());
  long max_b = *std::max_element(b.begin(), b.end());
  long min_b = *std::min_element(b.begin(), b.end());
  // past any gap of s2 (Schur bound on the gcd-normalized steps)
  long cond_cap = to_long(Int(min_a) * Int(max_a) / g2, "module sieve conductor bound");
  long bound = to_long(Int(cond_cap) + max_a + max_b + 1, "module sieve bound");

  Sieve s2_sieve(a, bound);
  std::vector<long> ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  Sieve union_sieve(ab, bound);

  long conductor = 0;
  for (long x = cond_cap; x >= 0; --x)
    if (x % g2 == 0 && !s2_sieve.reachable(x)) { conductor = x + 1; break; }

  ModuleGenerators out;
  out.finite = true;
  for (long s = 0; s <= conductor + min_b && s <= bound; ++s) {
    if (!s2_sieve.reachable(s)) continue;
    bool reducible = false;
    for (long step : b)
      if (s >= step && union_sieve.reachable(s - step)) { reducible = true; break; }
    if (reducible) continue;
    std::vector<Rat> coords(line->v0.size());
    for (size_t t = 0; t < coords.size(); ++t) coords[t] = Rat(Int(s) * line->v0[t]) / Rat(den);
    out.gens.push_back(element(s2.group, coords));
  }
  std::sort(out.gens.begin(), out.gens.end(), cmp_value_less);
  return out;
}

}  // namespace

ModuleGenerators module_generators(const AffineMonoid& s2, const AffineMonoid& s1) {
  require(s2.group == s1.group || *s2.group == *s1.group, "module over a different group");
  for (const GroupElement& g : s2.gens)
    if (!saturation_member(g, s1))
      throw input_error("module_generators: extension is not integral; witness " + to_string(g));
  for (const GroupElement& g : s1.gens)
    if (!saturation_member(g, s2)) {
      ModuleGenerators out;
      out.finite = false;
      out.evidence = "cone mismatch";
      out.witness = g;
      return out;
    }
  SubgroupIndex idx = subgroup_index(s1.gens, s2.gens);
  if (!idx.finite) {
    ModuleGenerators out;
    out.finite = false;
    out.evidence = "rank drop: the generated groups differ in rank";
    return out;
  }

  std::vector<const GroupElement*> all;
  for (const GroupElement& e : s2.gens) all.push_back(&e);
  for (const GroupElement& e : s1.gens) all.push_back(&e);
  Int den = scale_denominator(all);
  std::vector<std::vector<Int>> vecs2, vecs1;
  for (const GroupElement& e : s2.gens) vecs2.push_back(scaled_coords(e, den));
  for (const GroupElement& e : s1.gens) vecs1.push_back(scaled_coords(e, den));

  HermiteResult h2 = hermite_normal_form(transpose(columns_of(vecs2)));
  if (h2.rank == 1) return rank1_module_generators(s2, den, vecs2, vecs1);

  HermiteResult h1 = hermite_normal_form(transpose(columns_of(vecs1)));
  check_internal(h1.rank == h2.rank, "finite index with differing lattice ranks");
  int r = h2.rank;
  int n = s2.group->rank();
  IntMatrix b2(r, n), b2t(n, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) {
      b2.at(i, j) = h2.h.at(i, j);
      b2t.at(j, i) = h2.h.at(i, j);
    }
  std::vector<std::vector<Int>> c_rows;
  for (int i = 0; i < r; ++i) {
    auto sol = solve_integral(b2t, h1.h.row(i));
    check_internal(sol.has_value(), "s1 basis escaped the s2 lattice after index check");
    c_rows.push_back(*sol);
  }
  ParBox box = par_points(c_rows);

  ModuleGenerators out;
  out.finite = true;
  for (const auto& lp : box.points) {
    std::vector<Rat> coords(n, Rat(0));
    for (int j = 0; j < n; ++j) {
      Int s = 0;
      for (int i = 0; i < r; ++i) s += lp[i] * b2.at(i, j);
      coords[j] = Rat(s) / Rat(den);
    }
    GroupElement cand = element(s2.group, coords);
    if (member(cand, s2)) out.gens.push_back(cand);
  }
  // the kept set must absorb every generator step back into itself modulo s1
  for (const GroupElement& lam : out.gens)
    for (const GroupElement& v : s2.gens) {
      GroupElement x = add(lam, v);
      bool reduced = false;
      for (const GroupElement& mu : out.gens)
        if (member(sub(x, mu), s1)) { reduced = true; break; }
      if (!reduced)
        throw internal_error(
            "parallelepiped recipe could not certify module generation; offending element " +
            to_string(x));
    }
  std::sort(out.gens.begin(), out.gens.end(), cmp_value_less);
  return out;
}

}  // namespace gradval
