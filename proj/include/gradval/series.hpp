#pragma once

#include <gradval/base.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gradval {

// Power series in one variable, known exactly up to degree valid_to and
// unknown beyond. Arithmetic tracks how far results stay trustworthy; orders
// can only be reported within that window.
struct TruncatedSeries {
  std::string var;
  std::vector<Rat> c;  // coefficients 0..valid_to
  long long valid_to = 0;
};

TruncatedSeries make_series(std::string var, std::vector<Rat> coeffs);
TruncatedSeries zero_series(const std::string& var, long long n);
TruncatedSeries constant_series(const std::string& var, const Rat& value, long long n);
TruncatedSeries identity_series(const std::string& var, long long n);

// First index with a nonzero stored coefficient; valid_to + 1 when all stored
// coefficients vanish (the order is then known only to exceed valid_to).
long long order_lower_bound(const TruncatedSeries& s);
std::optional<long long> exact_order(const TruncatedSeries& s);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const Rat& q, const TruncatedSeries& a);
TruncatedSeries pow_series(const TruncatedSeries& a, unsigned e);

// Square root with constant term 1 of a series with constant term 1, solved
// coefficient by coefficient; same trust window as the input.
TruncatedSeries sqrt_one_plus(const TruncatedSeries& t);

// Deterministic pseudorandom unit-slope series x + a_2 x^2 + ... with small
// rational coefficients drawn from the seed. Stands in for a transcendental
// series at desk scale — transcendence is not certifiable, so every verdict
// that depends on it holds "at truncation n" only.
TruncatedSeries seeded_unit_series(const std::string& var, std::uint64_t seed, long long n);

// The square-root branch phi with phi^2 == x * p exactly, for p with zero
// constant term and unit linear coefficient; phi = x + b_2 x^2 + ...
TruncatedSeries sqrt_branch_of_x_times(const TruncatedSeries& p);

// Sparse polynomial with rational coefficients, used as the thing whose order
// of vanishing is measured after substituting series for its variables.
struct SeriesPoly {
  std::vector<std::string> vars;
  std::map<std::vector<long long>, Rat> terms;  // exponent vector -> coefficient
};

SeriesPoly make_series_poly(std::vector<std::string> vars,
                            std::map<std::vector<long long>, Rat> terms);
SeriesPoly poly_mul(const SeriesPoly& f, const SeriesPoly& g);

// Order of vanishing of f after substituting a series for every variable.
// beyond means every coefficient inside the trust window vanished; value then
// holds the bound reached instead of the order.
struct SeriesOrder {
  bool beyond = false;
  long long value = 0;
};

SeriesOrder series_order(const SeriesPoly& f,
                         const std::map<std::string, TruncatedSeries>& subs);

}  // namespace gradval
