#include <gradval/series.hpp>

#include <algorithm>

namespace gradval {

namespace {

constexpr long long kMaxValidTo = 1'000'000;

void check_same_var(const TruncatedSeries& a, const TruncatedSeries& b) {
  require(a.var == b.var, "series in different variables: " + a.var + " vs " + b.var);
}

}  // namespace

TruncatedSeries make_series(std::string var, std::vector<Rat> coeffs) {
  require(!var.empty(), "series variable name must be nonempty");
  require(!coeffs.empty(), "series needs at least the degree-0 coefficient");
  TruncatedSeries s;
  s.var = std::move(var);
  s.valid_to = static_cast<long long>(coeffs.size()) - 1;
  s.c = std::move(coeffs);
  return s;
}

TruncatedSeries zero_series(const std::string& var, long long n) {
  require(n >= 0, "truncation must be nonnegative");
  return make_series(var, std::vector<Rat>(static_cast<size_t>(n) + 1, Rat(0)));
}

TruncatedSeries constant_series(const std::string& var, const Rat& value, long long n) {
  TruncatedSeries s = zero_series(var, n);
  s.c[0] = value;
  return s;
}

TruncatedSeries identity_series(const std::string& var, long long n) {
  require(n >= 1, "identity series needs truncation >= 1");
  TruncatedSeries s = zero_series(var, n);
  s.c[1] = 1;
  return s;
}

long long order_lower_bound(const TruncatedSeries& s) {
  for (size_t i = 0; i < s.c.size(); ++i)
    if (s.c[i] != 0) return static_cast<long long>(i);
  return s.valid_to + 1;
}

std::optional<long long> exact_order(const TruncatedSeries& s) {
  long long lb = order_lower_bound(s);
  if (lb > s.valid_to) return std::nullopt;
  return lb;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_same_var(a, b);
  long long n = std::min(a.valid_to, b.valid_to);
  TruncatedSeries s = zero_series(a.var, n);
  for (long long d = 0; d <= n; ++d) s.c[d] = a.c[d] + b.c[d];
  return s;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  return add(a, scale(Rat(-1), b));
}

TruncatedSeries scale(const Rat& q, const TruncatedSeries& a) {
  TruncatedSeries s = a;
  for (Rat& x : s.c) x *= q;
  return s;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_same_var(a, b);
  // Coefficient d of the product is trustworthy while the unknown tails can
  // only meet known-zero coefficients of the other factor.
  long long n = std::min(a.valid_to + order_lower_bound(b), b.valid_to + order_lower_bound(a));
  n = std::min(n, kMaxValidTo);
  TruncatedSeries s = zero_series(a.var, n);
  for (long long d = 0; d <= n; ++d) {
    Rat acc = 0;
    long long lo = std::max<long long>(0, d - b.valid_to);
    long long hi = std::min(d, a.valid_to);
    for (long long i = lo; i <= hi; ++i) acc += a.c[i] * b.c[d - i];
    s.c[d] = acc;
  }
  return s;
}

TruncatedSeries pow_series(const TruncatedSeries& a, unsigned e) {
  TruncatedSeries s = constant_series(a.var, Rat(1), a.valid_to);
  for (unsigned i = 0; i < e; ++i) s = mul(s, a);
  return s;
}

TruncatedSeries sqrt_one_plus(const TruncatedSeries& t) {
  require(t.c[0] == 1, "square-root recursion needs constant term 1, got " + to_string(t.c[0]));
  TruncatedSeries s = zero_series(t.var, t.valid_to);
  s.c[0] = 1;
  for (long long d = 1; d <= t.valid_to; ++d) {
    Rat acc = 0;
    for (long long i = 1; i < d; ++i) acc += s.c[i] * s.c[d - i];
    s.c[d] = (t.c[d] - acc) / 2;
  }
  return s;
}

TruncatedSeries seeded_unit_series(const std::string& var, std::uint64_t seed, long long n) {
  require(n >= 1, "seeded series needs truncation >= 1");
  TruncatedSeries s = zero_series(var, n);
  s.c[1] = 1;
  std::uint64_t state = seed;
  for (long long d = 2; d <= n; ++d) {
    std::uint64_t r = splitmix64(state);
    long num = static_cast<long>(r % 7) - 3;
    long den = 1 + static_cast<long>((r >> 32) % 3);
    Rat q(num, den);
    q.canonicalize();
    s.c[d] = q;
  }
  return s;
}

TruncatedSeries sqrt_branch_of_x_times(const TruncatedSeries& p) {
  require(p.valid_to >= 1 && p.c[0] == 0 && p.c[1] == 1,
          "square-root branch needs zero constant term and unit linear coefficient");
  // u = p / x has constant term 1; phi = x * sqrt(u) has phi^2 = x^2 u = x p.
  TruncatedSeries u = zero_series(p.var, p.valid_to - 1);
  for (long long d = 0; d <= u.valid_to; ++d) u.c[d] = p.c[d + 1];
  TruncatedSeries w = sqrt_one_plus(u);
  TruncatedSeries phi = zero_series(p.var, w.valid_to + 1);
  for (long long d = 0; d <= w.valid_to; ++d) phi.c[d + 1] = w.c[d];
  return phi;
}

SeriesPoly make_series_poly(std::vector<std::string> vars,
                            std::map<std::vector<long long>, Rat> terms) {
  require(!vars.empty(), "polynomial needs at least one variable");
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      require(vars[i] != vars[j], "duplicate variable " + vars[i]);
  SeriesPoly f;
  f.vars = std::move(vars);
  for (auto& [expo, coeff] : terms) {
    require(expo.size() == f.vars.size(), "exponent vector must cover every variable");
    for (long long e : expo) require(e >= 0, "polynomial exponents must be nonnegative");
    if (coeff != 0) f.terms.emplace(expo, coeff);
  }
  return f;
}

SeriesPoly poly_mul(const SeriesPoly& f, const SeriesPoly& g) {
  require(f.vars == g.vars, "polynomial product needs matching variable lists");
  std::map<std::vector<long long>, Rat> terms;
  for (const auto& [ea, ca] : f.terms)
    for (const auto& [eb, cb] : g.terms) {
      std::vector<long long> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      terms[e] += ca * cb;
    }
  return make_series_poly(f.vars, std::move(terms));
}

SeriesOrder series_order(const SeriesPoly& f,
                         const std::map<std::string, TruncatedSeries>& subs) {
  require(!subs.empty(), "series_order needs at least one substitution");
  std::vector<const TruncatedSeries*> images;
  std::string base_var = subs.begin()->second.var;
  long long n = kMaxValidTo;
  for (const std::string& v : f.vars) {
    auto it = subs.find(v);
    require(it != subs.end(), "no substitution for variable " + v);
    require(it->second.var == base_var, "substitutions mix base variables " + base_var +
                                            " and " + it->second.var);
    images.push_back(&it->second);
    n = std::min(n, it->second.valid_to);
  }

  TruncatedSeries total = zero_series(base_var, n);
  for (const auto& [expo, coeff] : f.terms) {
    TruncatedSeries term = constant_series(base_var, coeff, n);
    for (size_t i = 0; i < expo.size(); ++i)
      if (expo[i] > 0) term = mul(term, pow_series(*images[i], static_cast<unsigned>(expo[i])));
    total = add(total, term);
  }

  SeriesOrder out;
  if (auto ord = exact_order(total)) {
    out.beyond = false;
    out.value = *ord;
  } else {
    out.beyond = true;
    out.value = total.valid_to;
  }
  return out;
}

}  // namespace gradval
