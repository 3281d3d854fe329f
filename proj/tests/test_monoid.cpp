#include <doctest.h>

#include <gradval/lattice.hpp>
#include <gradval/monoid.hpp>

#include <algorithm>
#include <random>
#include <set>

using namespace gradval;

namespace {

std::vector<std::vector<Int>> m_from(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Int>> out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

// Independent parallelepiped oracle: scan a box and keep points whose Cramer
// coordinates with respect to the basis rows lie in [0, 1).
std::vector<std::vector<Int>> par_oracle(const std::vector<std::vector<Int>>& basis, long radius) {
  size_t n = basis.size();
  IntMatrix a(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a.at(i, j) = basis[i][j];
  Int d = det(a);
  REQUIRE(d != 0);
  IntMatrix adj = adjugate(a);
  std::vector<std::vector<Int>> found;
  std::vector<long> p(n, -radius);
  while (true) {
    // coords * det = p * adj (row vector times adjugate)
    bool inside = true;
    for (size_t i = 0; i < n && inside; ++i) {
      Int s = 0;
      for (size_t j = 0; j < n; ++j) s += Int(p[j]) * adj.at(j, i);
      // membership in [0,1): 0 <= s/d < 1, sign of d decides the direction
      if (d > 0) inside = (s >= 0 && s < d);
      else inside = (s <= 0 && s > d);
    }
    if (inside) found.emplace_back(p.begin(), p.end());
    size_t k = 0;
    while (k < n && ++p[k] > radius) p[k++] = -radius;
    if (k == n) break;
  }
  std::sort(found.begin(), found.end());
  return found;
}

AffineMonoid monoid_of(GroupPtr g, const std::vector<std::vector<long>>& gens) {
  std::vector<GroupElement> es;
  for (const auto& v : gens) es.push_back(element_from_ints(g, std::vector<Int>(v.begin(), v.end())));
  return make_monoid(std::move(g), std::move(es));
}

}  // namespace

TEST_CASE("parallelepiped points of [[2,1],[1,2]]") {
  ParBox pb = par_points(m_from({{2, 1}, {1, 2}}));
  REQUIRE(pb.points.size() == 3);
  CHECK(pb.points[0] == std::vector<Int>{0, 0});
  CHECK(pb.points[1] == std::vector<Int>{1, 1});
  CHECK(pb.points[2] == std::vector<Int>{2, 2});
}

TEST_CASE("parallelepiped points match the box-scan oracle on random bases") {
  std::mt19937_64 rng(31);
  int done = 0;
  while (done < 25) {
    size_t n = 2 + rng() % 2;
    std::vector<std::vector<Int>> basis(n, std::vector<Int>(n));
    IntMatrix a(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        long v = static_cast<long>(rng() % 9) - 4;
        basis[i][j] = v;
        a.at(i, j) = v;
      }
    if (det(a) == 0) continue;
    ++done;
    ParBox pb = par_points(basis);
    CHECK(abs(det(a)) == Int(pb.points.size()));
    // radius 4*4 covers every parallelepiped point for entries bounded by 4
    CHECK(pb.points == par_oracle(basis, 16));
    CHECK(std::count(pb.points.begin(), pb.points.end(), std::vector<Int>(n, 0)) == 1);
  }
}

TEST_CASE("box cover audit passes on a clean basis and flags overlap-free decompositions only") {
  CHECK_FALSE(par_cover_check(m_from({{2, 1}, {1, 2}}), Int(10)).has_value());
  CHECK_FALSE(par_cover_check(m_from({{3, 0}, {0, 2}}), Int(8)).has_value());
  CHECK_FALSE(par_cover_check(m_from({{2, 0, 1}, {0, 3, 0}, {1, 0, 2}}), Int(5)).has_value());
  CHECK_THROWS_AS(par_cover_check(m_from({{1, 1}, {2, 2}}), Int(4)), input_error);
}

TEST_CASE("membership in a two-generator monoid") {
  AffineMonoid m = monoid_of(standard_positive_group(2), {{1, 1}, {0, 1}});
  auto yes = member(element_from_ints(m.group, {Int(2), Int(3)}), m);
  REQUIRE(yes.has_value());
  CHECK((*yes)[0] == 2);
  CHECK((*yes)[1] == 1);
  CHECK_FALSE(member(element_from_ints(m.group, {Int(1), Int(0)}), m).has_value());
  CHECK_FALSE(member(element_from_ints(m.group, {Int(3), Int(2)}), m).has_value());
  auto zero = member(element_from_ints(m.group, {Int(0), Int(0)}), m);
  REQUIRE(zero.has_value());
  CHECK((*zero) == std::vector<Int>{0, 0});
}

TEST_CASE("membership search copes with more generators than rank") {
  AffineMonoid m = monoid_of(standard_positive_group(2), {{2, 0}, {0, 3}, {1, 1}});
  auto got = member(element_from_ints(m.group, {Int(3), Int(4)}), m);
  REQUIRE(got.has_value());
  CHECK((*got)[0] * Int(2) + (*got)[2] == 3);
  CHECK((*got)[1] * Int(3) + (*got)[2] == 4);
  CHECK_FALSE(member(element_from_ints(m.group, {Int(1), Int(0)}), m).has_value());
  CHECK_FALSE(member(element_from_ints(m.group, {Int(0), Int(1)}), m).has_value());
}

TEST_CASE("rank-1 membership reproduces numerical-semigroup gaps") {
  GroupPtr g = standard_positive_group(1);
  AffineMonoid m = monoid_of(g, {{3}, {5}});
  std::set<long> gaps = {1, 2, 4, 7};
  for (long v = 0; v <= 12; ++v) {
    bool in = member(element_from_ints(g, {Int(v)}), m).has_value();
    CHECK(in == (gaps.count(v) == 0));
  }
}

TEST_CASE("saturation membership reports the minimal multiplier") {
  AffineMonoid m = monoid_of(standard_positive_group(2), {{2, 0}, {0, 2}});
  auto w = saturation_member(element_from_ints(m.group, {Int(1), Int(3)}), m);
  REQUIRE(w.has_value());
  CHECK(w->multiplier == 2);
  CHECK(w->coeffs == std::vector<Int>{1, 3});
  // outside the cone: no positive multiple ever enters
  CHECK_FALSE(saturation_member(element_from_ints(m.group, {Int(-1), Int(1)}), m).has_value());
}

TEST_CASE("rank-1 saturation multiplier is minimal") {
  GroupPtr g = make_group(0, {BasisReal::rational_unit()});
  AffineMonoid m = make_monoid(g, {element(g, {Rat(1)})});
  GroupElement third = element(g, {Rat(2, 3)});
  auto w = saturation_member(third, m);
  REQUIRE(w.has_value());
  CHECK(w->multiplier == 3);  // 3 * (2/3) = 2, and no smaller multiple is integral
  CHECK(w->coeffs == std::vector<Int>{2});
}

TEST_CASE("translate overlap detection") {
  auto gens = m_from({{2, 0}, {0, 2}});
  // distinct residues: disjoint
  CHECK_FALSE(translates_overlap(m_from({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), gens).has_value());
  // (0,0) and (2,4) differ by a group element: they overlap
  auto hit = translates_overlap(m_from({{0, 0}, {2, 4}}), gens);
  REQUIRE(hit.has_value());
  CHECK(hit->i == 0);
  CHECK(hit->j == 1);
  // the common point lies in both translates
  AffineMonoid m = monoid_of(standard_positive_group(2), {{2, 0}, {0, 2}});
  GroupElement c = element_from_ints(m.group, hit->common);
  CHECK(member(c, m).has_value());
  CHECK(member(sub(c, element_from_ints(m.group, {Int(2), Int(4)})), m).has_value());
}

TEST_CASE("module generators over a finite-index submonoid") {
  GroupPtr g = standard_positive_group(2);
  AffineMonoid s1 = monoid_of(g, {{2, 0}, {0, 2}});
  AffineMonoid s2 = monoid_of(g, {{1, 0}, {0, 1}});
  ModuleGenerators mg = module_generators(s2, s1);
  REQUIRE(mg.finite);
  REQUIRE(mg.gens.size() == 4);
  // the four residue representatives (0,0), (1,0), (0,1), (1,1)
  std::set<std::vector<Rat>> got;
  for (const auto& e : mg.gens) got.insert(e.coords);
  std::set<std::vector<Rat>> want = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
  CHECK(got == want);
}

TEST_CASE("module generators flag infinite growth for strictly refining rank-1 towers") {
  GroupPtr g = make_group(0, {BasisReal::rational_unit()});
  auto level = [&](const std::vector<Rat>& vals) {
    std::vector<GroupElement> es;
    for (const Rat& v : vals) es.push_back(element(g, {v}));
    return make_monoid(g, std::move(es));
  };
  AffineMonoid s1 = level({Rat(1)});
  // levels of the one-third refinement tower: generator counts 3, 9, 27
  std::vector<long> want = {3, 9, 27};
  Rat step(1, 1);
  for (int k = 0; k < 3; ++k) {
    step /= 3;
    ModuleGenerators mg = module_generators(level({step}), s1);
    REQUIRE(mg.finite);
    CHECK(Int(mg.gens.size()) == Int(want[k]));
  }
}

TEST_CASE("surrogate tower counts double at each level for p = 2") {
  GroupPtr g = make_group(0, {BasisReal::rational_unit()});
  long p = 2;
  std::vector<Rat> v = {Rat(1)};
  v.push_back(v[0] / (p * p));
  for (int j = 2; j <= 4; ++j) {
    Rat pw(1);
    for (int t = 0; t < 2 * j - 2; ++t) pw *= p;
    Rat next = (pw * v[0] + v[j - 1]) / (p * p);
    next.canonicalize();
    v.push_back(next);
  }
  std::vector<long> want = {2, 4, 8, 16};
  for (int J = 1; J <= 4; ++J) {
    std::vector<GroupElement> g2, g1;
    for (int j = 0; j <= J; ++j) {
      g2.push_back(element(g, {v[j]}));
      g1.push_back(element(g, {Rat(p) * v[j]}));
    }
    ModuleGenerators mg = module_generators(make_monoid(g, g2), make_monoid(g, g1));
    REQUIRE(mg.finite);
    CHECK(Int(mg.gens.size()) == Int(want[J - 1]));
  }
}

TEST_CASE("module generators reject base monoids that do not dominate") {
  GroupPtr g = standard_positive_group(2);
  AffineMonoid s1 = monoid_of(g, {{1, 0}});
  AffineMonoid s2 = monoid_of(g, {{0, 1}});
  CHECK_THROWS_AS(module_generators(s2, s1), input_error);
}

TEST_CASE("monoid construction rejects zero and nonpositive generators") {
  GroupPtr g = standard_positive_group(2);
  CHECK_THROWS_AS(make_monoid(g, {element_from_ints(g, {Int(0), Int(0)})}), input_error);
  CHECK_THROWS_AS(make_monoid(g, {element_from_ints(g, {Int(-1), Int(0)})}), input_error);
}
