#include <doctest.h>

#include <gradval/series.hpp>

using namespace gradval;

TEST_CASE("orders and order lower bounds") {
  TruncatedSeries s = make_series("x", {Rat(0), Rat(0), Rat(5), Rat(1)});
  CHECK(s.valid_to == 3);
  CHECK(order_lower_bound(s) == 2);
  REQUIRE(exact_order(s).has_value());
  CHECK(*exact_order(s) == 2);

  TruncatedSeries z = zero_series("x", 6);
  CHECK(order_lower_bound(z) == 7);
  CHECK_FALSE(exact_order(z).has_value());

  TruncatedSeries c = constant_series("x", Rat(3), 4);
  CHECK(*exact_order(c) == 0);
  CHECK(*exact_order(identity_series("x", 4)) == 1);
}

TEST_CASE("multiplication narrows the trust window by the factor orders") {
  // a known to degree 5 with order 3, b known to degree 7 with order 2:
  // the product is trustworthy to min(5 + 2, 7 + 3) = 7
  TruncatedSeries a = make_series("x", {Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(2)});
  TruncatedSeries b = make_series("x", {Rat(0), Rat(0), Rat(3), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
  TruncatedSeries p = mul(a, b);
  CHECK(p.valid_to == 7);
  CHECK(p.c[5] == Rat(3));   // x^3 * 3x^2
  CHECK(p.c[6] == Rat(0));
  CHECK(p.c[7] == Rat(6));   // 2x^5 * 3x^2
  CHECK(*exact_order(p) == 5);

  TruncatedSeries q = sub(add(a, b), b);
  CHECK(q.valid_to == 5);
  for (int i = 0; i <= 5; ++i) CHECK(q.c[i] == a.c[i]);
}

TEST_CASE("square root of 1 + t reproduces the binomial series") {
  // sqrt(1 + x) = 1 + x/2 - x^2/8 + x^3/16 - 5x^4/128 + ...
  TruncatedSeries t = make_series("x", {Rat(1), Rat(1), Rat(0), Rat(0), Rat(0)});
  TruncatedSeries w = sqrt_one_plus(t);
  CHECK(w.valid_to == 4);
  CHECK(w.c[0] == Rat(1));
  CHECK(w.c[1] == Rat(1, 2));
  CHECK(w.c[2] == Rat(-1, 8));
  CHECK(w.c[3] == Rat(1, 16));
  CHECK(w.c[4] == Rat(-5, 128));
  // squaring recovers 1 + x within the window
  TruncatedSeries sq = mul(w, w);
  CHECK(sq.c[0] == Rat(1));
  CHECK(sq.c[1] == Rat(1));
  for (long long i = 2; i <= sq.valid_to; ++i) CHECK(sq.c[i] == Rat(0));
}

TEST_CASE("seeded unit series is reproducible and unit-slope") {
  TruncatedSeries p1 = seeded_unit_series("x", 2026, 24);
  TruncatedSeries p2 = seeded_unit_series("x", 2026, 24);
  TruncatedSeries p3 = seeded_unit_series("x", 2027, 24);
  CHECK(p1.c == p2.c);
  CHECK(p1.c != p3.c);
  CHECK(p1.c[0] == Rat(0));
  CHECK(p1.c[1] == Rat(1));
  // longer windows extend, never rewrite, earlier coefficients
  TruncatedSeries longer = seeded_unit_series("x", 2026, 40);
  for (int i = 0; i <= 24; ++i) CHECK(longer.c[i] == p1.c[i]);
}

TEST_CASE("the square-root branch squares back to x times p") {
  TruncatedSeries p = seeded_unit_series("x", 7, 20);
  TruncatedSeries phi = sqrt_branch_of_x_times(p);
  CHECK(phi.valid_to == 20);
  CHECK(phi.c[0] == Rat(0));
  CHECK(phi.c[1] == Rat(1));
  TruncatedSeries xp = mul(identity_series("x", 20), p);
  TruncatedSeries diff = sub(mul(phi, phi), xp);
  CHECK(order_lower_bound(diff) > diff.valid_to);  // vanishes through the window
  CHECK_THROWS_AS(sqrt_branch_of_x_times(constant_series("x", Rat(1), 8)), input_error);
}

TEST_CASE("series order of polynomial substitutions") {
  TruncatedSeries p = seeded_unit_series("x", 11, 16);
  std::map<std::string, TruncatedSeries> subs = {{"x", identity_series("x", 16)}, {"y", p}};

  // f = y: order 1 because p has unit slope
  SeriesOrder o1 = series_order(make_series_poly({"x", "y"}, {{{0, 1}, Rat(1)}}), subs);
  CHECK_FALSE(o1.beyond);
  CHECK(o1.value == 1);

  // f = y - (truncation of p): every stored coefficient cancels
  std::map<std::vector<long long>, Rat> terms = {{{0, 1}, Rat(1)}};
  for (long long d = 1; d <= 16; ++d)
    if (p.c[d] != 0) terms[{d, 0}] = -p.c[d];
  SeriesOrder o2 = series_order(make_series_poly({"x", "y"}, terms), subs);
  CHECK(o2.beyond);
  CHECK(o2.value == 16);

  // missing substitution is an input error
  std::map<std::string, TruncatedSeries> partial = {{"x", identity_series("x", 16)}};
  CHECK_THROWS_AS(series_order(make_series_poly({"x", "y"}, {{{0, 1}, Rat(1)}}), partial),
                  input_error);
}

TEST_CASE("orders are additive under polynomial products") {
  TruncatedSeries p = seeded_unit_series("x", 13, 18);
  std::map<std::string, TruncatedSeries> subs = {{"x", identity_series("x", 18)}, {"y", p}};
  SeriesPoly f = make_series_poly({"x", "y"}, {{{2, 0}, Rat(1)}, {{0, 1}, Rat(3)}});
  SeriesPoly g = make_series_poly({"x", "y"}, {{{1, 1}, Rat(1)}, {{3, 0}, Rat(-2)}});
  SeriesOrder of = series_order(f, subs);
  SeriesOrder og = series_order(g, subs);
  SeriesOrder ofg = series_order(poly_mul(f, g), subs);
  REQUIRE_FALSE(of.beyond);
  REQUIRE_FALSE(og.beyond);
  REQUIRE_FALSE(ofg.beyond);
  CHECK(ofg.value == of.value + og.value);
}
