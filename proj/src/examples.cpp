#include <gradval/examples.hpp>

#include <gradval/graded.hpp>
#include <gradval/series.hpp>
#include <gradval/verifier.hpp>

#include <algorithm>

namespace gradval {

namespace {

GroupElement el(const GroupPtr& g, std::vector<Rat> coords) {
  return element(g, std::move(coords));
}

void add_detail(Report& r, std::string key, std::string value) {
  r.details.emplace_back(std::move(key), std::move(value));
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

// Documented-verdict assertion: failures are collected, not thrown, so the
// report shows everything that disagrees.
void expect(Report& r, bool cond, const std::string& what) {
  if (!cond) {
    r.ok = false;
    r.notes.push_back("documented-verdict mismatch: " + what);
  }
}

Int int_pow(long base, unsigned e) {
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
  return out;
}

// ---- ex1: an extension of one-dimensional semigroups that is not integral --
//
// Base semigroup generated by 1 + q and q, extension by 1 and q, where q is
// the irrational second basis direction. No positive multiple of 1 (the
// value of the first extension parameter) lies in the rational cone of the
// base generators, so integrality fails with that witness.

Report ex1() {
  GroupPtr g = make_group(0, {BasisReal::rational_unit(), BasisReal::pi()});
  AffineMonoid s1 = make_monoid(g, {el(g, {Rat(1), Rat(1)}), el(g, {Rat(0), Rat(1)})});
  AffineMonoid s2 = make_monoid(g, {el(g, {Rat(1), Rat(0)}), el(g, {Rat(0), Rat(1)})});
  GradedExtension ext = make_extension(s1, s2, 1, "ex1");

  Report r;
  r.kind = "example";
  r.verdict = "NotIntegral";

  IntegralityResult ir = integrality_test(ext);
  r.notes.push_back(ir.caveat);
  expect(r, !ir.integral, "extension must not be integral");
  GroupElement vx = el(g, {Rat(1), Rat(0)});
  if (ir.witness) {
    r.witnesses.push_back(to_string(*ir.witness));
    expect(r, is_zero(sub(*ir.witness, vx)),
           "witness must be the value of the first extension parameter");
  }

  bool brute = true;
  for (long m = 1; m <= 12 && brute; ++m)
    if (member(scale(Rat(m), vx), s1)) brute = false;
  add_detail(r, "no_multiple_up_to_12_in_base", bool_text(brute));
  expect(r, brute, "a multiple m <= 12 of the witness landed in the base semigroup");

  if (ir.integral) r.verdict = "Integral";
  return r;
}

// ---- ex2: integral but not finite, shown on a truncation tower ------------
//
// Levels N = 1..3 pair the base semigroup generated by 1 against extensions
// generated by 1/3^N. Every level is integral, yet the module-generator
// counts 3, 9, 27 keep growing: the divisible limit (1/3^inf)Z admits no
// finite module basis. The tower is a labeled surrogate: the underlying
// construction defers its explicit valuation data to an external source.

Report ex2() {
  GroupPtr g = make_group(0, {BasisReal::rational_unit()});
  std::vector<GradedExtension> levels;
  for (int n = 1; n <= 3; ++n) {
    AffineMonoid s1 = make_monoid(g, {el(g, {Rat(1)})});
    AffineMonoid s2 = make_monoid(g, {el(g, {Rat(1) / Rat(int_pow(3, static_cast<unsigned>(n)))})});
    levels.push_back(make_extension(s1, s2, 1, "ex2 level " + std::to_string(n)));
  }

  Report r;
  r.kind = "example";

  for (size_t i = 0; i < levels.size(); ++i) {
    IntegralityResult ir = integrality_test(levels[i]);
    if (i == 0) r.notes.push_back(ir.caveat);
    expect(r, ir.integral, "level " + std::to_string(i + 1) + " must be integral");
  }

  TowerReport tr = finiteness_tower(levels);
  r.levels = tr.counts;
  r.verdict = tr.counts_strictly_increase ? "IntegralNotFinite" : "TowerInconclusive";
  expect(r, tr.counts == std::vector<long long>({3, 9, 27}),
         "module-generator counts must be 3, 9, 27");
  expect(r, tr.counts_strictly_increase, "counts must strictly increase");
  r.notes.push_back(
      "surrogate tower: levels (1/3^N)Z over Z stand in for the divisible limit "
      "(1/3^inf)Z; the source construction defers its explicit valuation data, so "
      "this models the limit rather than reproducing a printed map");
  return r;
}

// ---- ex3: characteristic-p tower, purely inseparable, integral not finite --
//
// The printed relations (W1^(p^2) = W0, Wj = W0^(p^(2j-2)) W(j-1)) are
// encoded literally for the substitution check U_j -> X_j^p. The printed
// relations force bounded denominators on the value tags, which would make
// the truncation tower stationary, while the declared value group is the
// divisible limit (1/p^inf)Z; the tower therefore runs on a labeled
// surrogate value stream v_0 = 1, v_1 = v_0/p^2,
// v_j = (p^(2j-2) v_0 + v_(j-1))/p^2, whose denominators realize the limit.
// The discrepancy is reported, not repaired.

BinomialPresentation tower_presentation(const std::string& prefix, long p, int j_max,
                                        const std::vector<Rat>& values) {
  std::vector<std::string> vars;
  for (int j = 0; j <= j_max; ++j) vars.push_back(prefix + std::to_string(j));
  auto unit = [&](int j, Int c) {
    std::vector<Int> e(static_cast<size_t>(j_max) + 1, Int(0));
    e[static_cast<size_t>(j)] = std::move(c);
    return e;
  };
  std::vector<std::pair<std::vector<Int>, std::vector<Int>>> rels;
  rels.emplace_back(unit(1, Int(p) * Int(p)), unit(0, Int(1)));
  for (int j = 2; j <= j_max; ++j) {
    std::vector<Int> rhs = unit(j - 1, Int(1));
    rhs[0] = int_pow(p, static_cast<unsigned>(2 * j - 2));
    rels.emplace_back(unit(j, Int(1)), std::move(rhs));
  }
  return make_presentation(std::move(vars), values, std::move(rels), prefix + "-tower");
}

std::vector<Rat> literal_values(long p, int j_max) {
  std::vector<Rat> x(static_cast<size_t>(j_max) + 1);
  x[0] = 1;
  x[1] = Rat(1) / Rat(Int(p) * Int(p));
  for (int j = 2; j <= j_max; ++j)
    x[static_cast<size_t>(j)] =
        Rat(int_pow(p, static_cast<unsigned>(2 * j - 2))) + x[static_cast<size_t>(j - 1)];
  return x;
}

std::vector<Rat> surrogate_values(long p, int j_max) {
  Rat p2(Int(p) * Int(p));
  std::vector<Rat> v(static_cast<size_t>(j_max) + 1);
  v[0] = 1;
  if (j_max >= 1) v[1] = v[0] / p2;
  for (int j = 2; j <= j_max; ++j)
    v[static_cast<size_t>(j)] =
        (Rat(int_pow(p, static_cast<unsigned>(2 * j - 2))) * v[0] + v[static_cast<size_t>(j - 1)]) /
        p2;
  return v;
}

Report ex3() {
  Report r;
  r.kind = "example";
  r.verdict = "Pass";

  const std::map<long, std::vector<long long>> frozen_counts = {
      {2, {2, 4, 8, 16}}, {3, {3, 9, 27}}};

  for (long p : {2L, 3L}) {
    const int j_lit = 4;
    std::vector<Rat> xs = literal_values(p, j_lit);
    std::vector<Rat> us(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) us[i] = Rat(p) * xs[i];
    BinomialPresentation src = tower_presentation("U", p, j_lit, us);
    BinomialPresentation dst = tower_presentation("X", p, j_lit, xs);
    std::map<std::string, std::vector<Int>> var_map;
    for (int j = 0; j <= j_lit; ++j) {
      std::vector<Int> img(static_cast<size_t>(j_lit) + 1, Int(0));
      img[static_cast<size_t>(j)] = p;
      var_map["U" + std::to_string(j)] = std::move(img);
    }
    SubstitutionResult sr = substitution_check(src, dst, var_map);
    std::string verdict = sr.status == SubstStatus::holds        ? "Holds"
                          : sr.status == SubstStatus::fails      ? "Fails"
                                                                 : "Inconclusive";
    add_detail(r, "substitution(p=" + std::to_string(p) + ")", verdict);
    expect(r, sr.status == SubstStatus::holds,
           "substitution W_j -> (extension W_j)^" + std::to_string(p) + " must hold");

    int j_tower = p == 2 ? 4 : 3;
    GroupPtr g = make_group(0, {BasisReal::rational_unit()});
    std::vector<Rat> v = surrogate_values(p, j_tower);
    std::vector<GradedExtension> levels;
    for (int jl = 1; jl <= j_tower; ++jl) {
      std::vector<GroupElement> g2, g1;
      for (int j = 0; j <= jl; ++j) {
        g2.push_back(el(g, {v[static_cast<size_t>(j)]}));
        g1.push_back(el(g, {Rat(p) * v[static_cast<size_t>(j)]}));
      }
      levels.push_back(make_extension(make_monoid(g, std::move(g1)),
                                      make_monoid(g, std::move(g2)), 1,
                                      "ex3 p=" + std::to_string(p) + " level " +
                                          std::to_string(jl)));
    }
    for (size_t i = 0; i < levels.size(); ++i)
      expect(r, integrality_test(levels[i]).integral,
             "p=" + std::to_string(p) + " level " + std::to_string(i + 1) +
                 " must be integral");

    TowerReport tr = finiteness_tower(levels);
    if (p == 2) r.levels = tr.counts;
    std::string counts_text;
    for (long long c : tr.counts) counts_text += (counts_text.empty() ? "" : " ") + std::to_string(c);
    add_detail(r, "levels(p=" + std::to_string(p) + ")", counts_text);
    expect(r, tr.counts_strictly_increase,
           "p=" + std::to_string(p) + " module-generator counts must strictly increase");
    expect(r, tr.counts == frozen_counts.at(p),
           "p=" + std::to_string(p) + " counts must match the frozen oracle values");

    for (unsigned n : {1u, 2u}) {
      bool all = true;
      for (const auto& level : levels)
        if (!p_power_inclusion(level, Int(p), n).holds) all = false;
      add_detail(r, "p_power(" + std::to_string(p) + "," + std::to_string(n) + ")",
                 all ? "holds" : "fails");
      expect(r, all, "p^" + std::to_string(n) + "-th powers of every level must land in the base");
    }
  }

  r.notes.push_back(
      "the printed relations force bounded denominators on the value tags (a stationary "
      "tower), while the declared value group is the divisible limit (1/p^inf)Z; the tower "
      "runs on the labeled surrogate stream v_0 = 1, v_1 = v_0/p^2, "
      "v_j = (p^(2j-2) v_0 + v_(j-1))/p^2, and the discrepancy is reported, not repaired");
  return r;
}

// ---- ex4: immediate extension with a non-regular upstairs ring -------------
//
// The valuation is the order of vanishing after substituting a pseudorandom
// unit-slope series p(x) for y (and its square-root branch phi, with
// phi^2 = x p(x), for z). Both y - p(x) and z^2 - x y vanish beyond every
// tested trust window (the infinite-value detector), while the visible value
// semigroups and per-degree ranks of the two graded models agree.

Report ex4(std::uint64_t seed) {
  Report r;
  r.kind = "example";
  r.verdict = "Pass";
  add_detail(r, "seed", std::to_string(seed));

  for (long long n : {16LL, 32LL, 64LL}) {
    TruncatedSeries p = seeded_unit_series("x", seed, n);
    TruncatedSeries phi = sqrt_branch_of_x_times(p);
    std::map<std::string, TruncatedSeries> subs_r = {{"x", identity_series("x", n)},
                                                     {"y", p}};
    std::map<std::string, TruncatedSeries> subs_s = {{"x", identity_series("x", n)},
                                                     {"y", p},
                                                     {"z", phi}};

    std::map<std::vector<long long>, Rat> t1 = {{{0, 1}, Rat(1)}};
    for (long long d = 1; d <= n; ++d) t1[{d, 0}] = -p.c[static_cast<size_t>(d)];
    SeriesPoly f1 = make_series_poly({"x", "y"}, std::move(t1));
    SeriesOrder o1 = series_order(f1, subs_r);
    add_detail(r, "order[y - p(x)] at N=" + std::to_string(n),
               o1.beyond ? "beyond" : std::to_string(o1.value));
    expect(r, o1.beyond,
           "y - p(x) must vanish beyond the trust window at N = " + std::to_string(n));

    SeriesPoly f2 = make_series_poly({"x", "y", "z"},
                                     {{{0, 0, 2}, Rat(1)}, {{1, 1, 0}, Rat(-1)}});
    SeriesOrder o2 = series_order(f2, subs_s);
    add_detail(r, "order[z^2 - x y] at N=" + std::to_string(n),
               o2.beyond ? "beyond" : std::to_string(o2.value));
    expect(r, o2.beyond,
           "z^2 - x y must vanish beyond the trust window at N = " + std::to_string(n));
  }

  // Value semigroups of both models at N = 64: the orders of the coordinate
  // functions generate them, and both collapse to the one-generator
  // degree-one semigroup, so the per-degree ranks agree.
  const long long n = 64;
  TruncatedSeries p = seeded_unit_series("x", seed, n);
  TruncatedSeries phi = sqrt_branch_of_x_times(p);
  std::map<std::string, TruncatedSeries> subs_r = {{"x", identity_series("x", n)}, {"y", p}};
  std::map<std::string, TruncatedSeries> subs_s = {
      {"x", identity_series("x", n)}, {"y", p}, {"z", phi}};

  auto order_of = [&](const char* v, const std::map<std::string, TruncatedSeries>& subs) {
    std::vector<std::string> vars;
    std::vector<long long> expo;
    for (const auto& [name, unused] : subs) {
      vars.push_back(name);
      expo.push_back(name == v ? 1 : 0);
    }
    SeriesPoly f = make_series_poly(vars, {{expo, Rat(1)}});
    SeriesOrder so = series_order(f, subs);
    check_internal(!so.beyond, "coordinate function with indeterminate order");
    return static_cast<long>(so.value);
  };

  std::vector<Rat> gens_r = {Rat(order_of("x", subs_r)), Rat(order_of("y", subs_r))};
  std::vector<Rat> gens_s = {Rat(order_of("x", subs_s)), Rat(order_of("y", subs_s)),
                             Rat(order_of("z", subs_s))};
  GroupPtr g = make_group(0, {BasisReal::rational_unit()});
  auto monoid_from = [&](const std::vector<Rat>& vals) {
    std::vector<GroupElement> gens;
    for (const Rat& q : vals) gens.push_back(el(g, {q}));
    return make_monoid(g, std::move(gens));
  };
  AffineMonoid mr = monoid_from(gens_r);
  AffineMonoid ms = monoid_from(gens_s);

  bool contains_all = true, ranks_agree = true;
  for (long d = 0; d <= 20; ++d) {
    bool in_r = member(el(g, {Rat(d)}), mr).has_value() || d == 0;
    bool in_s = member(el(g, {Rat(d)}), ms).has_value() || d == 0;
    if (!in_r || !in_s) contains_all = false;
    if (in_r != in_s) ranks_agree = false;
  }
  add_detail(r, "semigroup_contains_0_to_20", bool_text(contains_all));
  add_detail(r, "per_degree_ranks_agree_0_to_20", bool_text(ranks_agree));
  expect(r, contains_all, "both value semigroups must contain 0..20");
  expect(r, ranks_agree, "per-degree ranks of the two graded models must agree");

  r.notes.push_back(
      "all verdicts hold at the stated truncations; the coefficient stream is "
      "pseudorandom from the seed, standing in for a transcendental series");
  return r;
}

// ---- monomial-extension showcases ------------------------------------------

Report thm2_case(const std::string& name, const std::vector<std::vector<Int>>& rows,
                 const Int& expected_e, const std::vector<Int>& expected_factors) {
  GroupPtr g = make_group(0, {BasisReal::rational_unit(), BasisReal::sqrt(2)});
  std::vector<GroupElement> ys = {el(g, {Rat(1), Rat(0)}), el(g, {Rat(0), Rat(1)})};
  MonomialExtension ext =
      make_monomial_extension(2, 2, IntMatrix::from_rows(rows), ys, {false, false}, name);
  AJReport a = analyze(ext);

  Report r;
  r.kind = "example";
  r.verdict = a.all_ok() ? "Pass" : "Fail";
  r.ok = a.all_ok();
  r.e = a.e;
  r.invariant_factors = a.invariant_factors.invariant_factors;
  for (const auto& cv : a.coset_values) r.coset_values.push_back(to_string(cv));
  for (const auto& note : a.notes) r.notes.push_back(note);
  expect(r, a.e == expected_e, "e must equal " + to_string(expected_e));
  expect(r, a.invariant_factors.invariant_factors == expected_factors,
         "invariant factors disagree with the documented ones");

  CharacterAction ca = character_action(ext);
  add_detail(r, "invariant_characters",
             ca.invariant_ws == std::vector<size_t>{0} ? "only the unit monomial" : "unexpected");
  expect(r, ca.invariant_ws == std::vector<size_t>{0},
         "only the unit monomial may be invariant under the diagonal action");
  return r;
}

}  // namespace

std::vector<std::string> example_names() {
  return {"ex1", "ex2", "ex3", "ex4", "thm2_diag", "thm2_det3"};
}

Report run_example(const std::string& name, std::uint64_t seed) {
  Report r;
  if (name == "ex1") r = ex1();
  else if (name == "ex2") r = ex2();
  else if (name == "ex3") r = ex3();
  else if (name == "ex4") r = ex4(seed);
  else if (name == "thm2_diag")
    r = thm2_case(name, {{Int(2), Int(0)}, {Int(0), Int(2)}}, Int(4), {Int(2), Int(2)});
  else if (name == "thm2_det3")
    r = thm2_case(name, {{Int(2), Int(1)}, {Int(1), Int(2)}}, Int(3), {Int(3)});
  else
    throw input_error("unknown example \"" + name +
                      "\" (expected ex1, ex2, ex3, ex4, thm2_diag, or thm2_det3)");
  r.label = name;
  return r;
}

}  // namespace gradval
