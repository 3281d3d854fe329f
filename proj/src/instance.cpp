#include <gradval/instance.hpp>

#include <gradval/graded.hpp>
#include <gradval/series.hpp>
#include <gradval/verifier.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace gradval {

namespace {

using ojson = nlohmann::ordered_json;

const std::set<std::string> kKinds = {"monomial_extension", "graded_extension",
                                      "presentation_pair", "monoid", "series_valuation"};

// ---- field access with path-carrying diagnostics ------------------------

const ojson& need(const ojson& o, const std::string& key, const std::string& where) {
  require(o.is_object(), where + " must be an object");
  auto it = o.find(key);
  require(it != o.end(), where + " is missing required field \"" + key + "\"");
  return *it;
}

std::string need_string(const ojson& o, const std::string& key, const std::string& where) {
  const ojson& v = need(o, key, where);
  require(v.is_string(), where + "." + key + " must be a string");
  return v.get<std::string>();
}

long long need_ll(const ojson& v, const std::string& where) {
  require(v.is_number_integer(), where + " must be an integer");
  return v.get<long long>();
}

bool opt_flag(const ojson& o, const std::string& key, const std::string& where) {
  auto it = o.find(key);
  if (it == o.end()) return false;
  require(it->is_boolean(), where + "." + key + " must be a boolean");
  return it->get<bool>();
}

Rat rat_from(const ojson& v, const std::string& where) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    try {
      return parse_rat(v.get<std::string>());
    } catch (const input_error& e) {
      throw input_error(where + ": " + e.what());
    }
  }
  throw input_error(where + " must be an integer or a rational string like \"3/4\"");
}

Int int_from(const ojson& v, const std::string& where) {
  Rat q = rat_from(v, where);
  require(q.get_den() == 1, where + " must be an integer");
  return q.get_num();
}

std::vector<Rat> rat_vec(const ojson& v, const std::string& where) {
  require(v.is_array(), where + " must be an array");
  std::vector<Rat> out;
  for (size_t i = 0; i < v.size(); ++i)
    out.push_back(rat_from(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Int> int_vec(const ojson& v, const std::string& where) {
  require(v.is_array(), where + " must be an array");
  std::vector<Int> out;
  for (size_t i = 0; i < v.size(); ++i)
    out.push_back(int_from(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::vector<Int>> int_matrix(const ojson& v, const std::string& where) {
  require(v.is_array() && !v.empty(), where + " must be a nonempty array of rows");
  std::vector<std::vector<Int>> rows;
  for (size_t i = 0; i < v.size(); ++i)
    rows.push_back(int_vec(v[i], where + " row " + std::to_string(i)));
  for (size_t i = 1; i < rows.size(); ++i)
    require(rows[i].size() == rows[0].size(),
            where + " row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                " entries, expected " + std::to_string(rows[0].size()));
  return rows;
}

// ---- group and element descriptors ---------------------------------------

BasisReal parse_basis_real(const ojson& v, const std::string& where) {
  if (v.is_string()) {
    std::string tag = v.get<std::string>();
    if (tag == "rat") return BasisReal::rational_unit();
    if (tag == "pi") return BasisReal::pi();
    if (tag.rfind("sqrt:", 0) == 0) {
      Int n = int_from(ojson(tag.substr(5)), where);
      require(n >= 2, where + ": sqrt radicand must be >= 2");
      return BasisReal::sqrt(static_cast<unsigned>(to_long(n, "sqrt radicand")));
    }
    throw input_error(where + ": unknown basis tag \"" + tag +
                      "\" (use \"rat\", \"pi\", \"sqrt:N\", or a custom object)");
  }
  if (v.is_object()) {
    std::string name = need_string(v, "name", where);
    const ojson& ivs = need(v, "intervals", where);
    require(ivs.is_array() && !ivs.empty(), where + ".intervals must be a nonempty array");
    std::vector<std::pair<Rat, Rat>> intervals;
    for (size_t i = 0; i < ivs.size(); ++i) {
      std::string iw = where + ".intervals[" + std::to_string(i) + "]";
      require(ivs[i].is_array() && ivs[i].size() == 2, iw + " must be a [lo, hi] pair");
      intervals.emplace_back(rat_from(ivs[i][0], iw), rat_from(ivs[i][1], iw));
    }
    return BasisReal::custom(name, std::move(intervals));
  }
  throw input_error(where + " must be a basis tag string or a custom-constant object");
}

GroupPtr parse_group(const ojson& root, const std::string& origin) {
  const ojson& g = need(root, "group", origin);
  const ojson& basis = need(g, "basis", "group");
  require(basis.is_array() && !basis.empty(), "group.basis must be a nonempty array");
  std::vector<BasisReal> reals;
  for (size_t i = 0; i < basis.size(); ++i)
    reals.push_back(parse_basis_real(basis[i], "group.basis[" + std::to_string(i) + "]"));
  int lex = 0;
  if (auto it = g.find("lex_prefix"); it != g.end()) {
    lex = static_cast<int>(need_ll(*it, "group.lex_prefix"));
    require(lex >= 0, "group.lex_prefix must be nonnegative");
  }
  return make_group(lex, std::move(reals));
}

GroupElement parse_element(GroupPtr g, const ojson& v, const std::string& where) {
  std::vector<Rat> coords = rat_vec(v, where);
  require(static_cast<int>(coords.size()) == g->rank(),
          where + " has " + std::to_string(coords.size()) + " coordinates, expected rank " +
              std::to_string(g->rank()));
  return element(std::move(g), std::move(coords));
}

std::vector<GroupElement> parse_elements(const GroupPtr& g, const ojson& v,
                                         const std::string& where) {
  require(v.is_array() && !v.empty(), where + " must be a nonempty array");
  std::vector<GroupElement> out;
  for (size_t i = 0; i < v.size(); ++i)
    out.push_back(parse_element(g, v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

// ---- shared report helpers ------------------------------------------------

void add_detail(Report& r, std::string key, std::string value) {
  r.details.emplace_back(std::move(key), std::move(value));
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string vec_text(const std::vector<Int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
  return s + "]";
}

// ---- kind handlers ---------------------------------------------------------

Report check_monomial_extension(const ojson& root, const std::string& label,
                                const CheckOptions&) {
  GroupPtr g = parse_group(root, "instance");
  const ojson& p = need(root, "payload", "instance");
  int s = static_cast<int>(need_ll(need(p, "s", "payload"), "payload.s"));
  int n = static_cast<int>(need_ll(need(p, "n", "payload"), "payload.n"));
  auto rows = int_matrix(need(p, "matrix", "payload"), "payload.matrix");
  require(static_cast<int>(rows.size()) == s && static_cast<int>(rows[0].size()) == s,
          "payload.matrix must be s x s (s = " + std::to_string(s) + ")");
  auto ys = parse_elements(g, need(p, "y_values", "payload"), "payload.y_values");
  std::vector<bool> units(static_cast<size_t>(s), false);
  if (auto it = p.find("unit_flags"); it != p.end()) {
    require(it->is_array() && it->size() == static_cast<size_t>(s),
            "payload.unit_flags must list s booleans");
    for (size_t i = 0; i < it->size(); ++i) {
      require((*it)[i].is_boolean(), "payload.unit_flags[" + std::to_string(i) + "] must be a boolean");
      units[i] = (*it)[i].get<bool>();
    }
  }
  MonomialExtension ext =
      make_monomial_extension(s, n, IntMatrix::from_rows(rows), std::move(ys), units, label);
  AJReport a = analyze(ext);

  Report r;
  r.kind = "monomial_extension";
  r.verdict = a.all_ok() ? "Pass" : "Fail";
  r.ok = a.all_ok();
  r.e = a.e;
  r.invariant_factors = a.invariant_factors.invariant_factors;
  for (const auto& cv : a.coset_values) r.coset_values.push_back(to_string(cv));
  add_detail(r, "free_basis_ok", bool_text(a.free_basis_ok));
  add_detail(r, "cosets_complete", bool_text(a.cosets_complete));
  add_detail(r, "cover_disjoint", bool_text(a.cover_disjoint));
  add_detail(r, "invariants_trivial_only", bool_text(a.invariants_trivial_only));
  std::string ws;
  for (const auto& w : a.w_exponents) ws += (ws.empty() ? "" : " ") + vec_text(w);
  add_detail(r, "w_exponents", ws);
  r.notes = a.notes;
  if (!a.all_ok()) r.witnesses = a.notes;
  return r;
}

struct PPowerSpec {
  Int p;
  unsigned n = 0;
};

std::vector<PPowerSpec> parse_p_powers(const ojson& p) {
  std::vector<PPowerSpec> out;
  auto it = p.find("p_power");
  if (it == p.end()) return out;
  require(it->is_array(), "payload.p_power must be an array of {p, n} blocks");
  for (size_t i = 0; i < it->size(); ++i) {
    std::string where = "payload.p_power[" + std::to_string(i) + "]";
    PPowerSpec spec;
    spec.p = int_from(need((*it)[i], "p", where), where + ".p");
    long long n = need_ll(need((*it)[i], "n", where), where + ".n");
    require(n >= 1, where + ".n must be >= 1");
    spec.n = static_cast<unsigned>(n);
    out.push_back(std::move(spec));
  }
  return out;
}

Report check_graded_extension(const ojson& root, const std::string& label,
                              const CheckOptions&) {
  GroupPtr g = parse_group(root, "instance");
  const ojson& p = need(root, "payload", "instance");
  Int f = 1;
  if (auto it = p.find("f"); it != p.end()) f = int_from(*it, "payload.f");
  auto ppowers = parse_p_powers(p);

  Report r;
  r.kind = "graded_extension";

  auto level_of = [&](const ojson& src, const std::string& where) {
    auto g1 = parse_elements(g, need(src, "gens1", where), where + ".gens1");
    auto g2 = parse_elements(g, need(src, "gens2", where), where + ".gens2");
    return make_extension(make_monoid(g, std::move(g1)), make_monoid(g, std::move(g2)), f, label);
  };

  std::vector<GradedExtension> levels;
  bool tower = p.contains("tower");
  if (tower) {
    const ojson& tw = need(p, "tower", "payload");
    require(tw.is_array() && !tw.empty(), "payload.tower must be a nonempty array of levels");
    for (size_t i = 0; i < tw.size(); ++i)
      levels.push_back(level_of(tw[i], "payload.tower[" + std::to_string(i) + "]"));
  } else {
    levels.push_back(level_of(p, "payload"));
  }

  std::optional<size_t> nonintegral_level;
  for (size_t i = 0; i < levels.size(); ++i) {
    IntegralityResult ir = integrality_test(levels[i]);
    if (i == 0) r.notes.push_back(ir.caveat);
    if (!ir.integral) {
      nonintegral_level = i;
      r.verdict = "NotIntegral";
      std::string w = to_string(*ir.witness);
      if (tower) w += " (level " + std::to_string(i) + ")";
      r.witnesses.push_back(w);
      break;
    }
  }

  if (!nonintegral_level) {
    if (tower) {
      TowerReport tr = finiteness_tower(levels);
      r.levels = tr.counts;
      r.verdict = tr.counts_strictly_increase ? "IntegralNotFinite" : "TowerInconclusive";
      add_detail(r, "levels_tested", std::to_string(tr.counts.size()));
      if (!tr.counts_strictly_increase)
        r.notes.push_back("module-generator counts do not strictly increase; "
                          "the tower neither certifies nor refutes finiteness");
    } else {
      ModuleGenerators mg = finiteness_test(levels[0]);
      if (mg.finite) {
        r.verdict = "IntegralFinite";
        add_detail(r, "module_generators", std::to_string(mg.gens.size()));
        std::string gs;
        for (size_t i = 0; i < mg.gens.size() && i < 32; ++i)
          gs += (gs.empty() ? "" : " ") + to_string(mg.gens[i]);
        if (mg.gens.size() > 32) gs += " ...";
        add_detail(r, "module_generator_list", gs);
      } else {
        r.verdict = "IntegralNotFinite";
        add_detail(r, "evidence", mg.evidence);
        if (mg.witness) r.witnesses.push_back(to_string(*mg.witness));
      }
      try {
        add_detail(r, "qf_degree", to_string(qf_degree(levels[0])));
      } catch (const input_error&) {
        add_detail(r, "qf_degree", "infinite group index");
      }
    }
  }

  for (const auto& spec : ppowers) {
    std::string key = "p_power(" + to_string(spec.p) + "," + std::to_string(spec.n) + ")";
    bool all = true;
    std::string failure;
    for (size_t i = 0; i < levels.size() && all; ++i) {
      PPowerResult pr = p_power_inclusion(levels[i], spec.p, spec.n);
      if (!pr.holds) {
        all = false;
        failure = "fails: " + (pr.witness ? to_string(*pr.witness) : std::string("?"));
        if (tower) failure += " at level " + std::to_string(i);
      }
    }
    add_detail(r, key, all ? "holds" : failure);
  }
  return r;
}

BinomialPresentation parse_presentation(const ojson& v, const std::string& where,
                                        const std::string& label) {
  const ojson& jvars = need(v, "vars", where);
  require(jvars.is_array() && !jvars.empty(), where + ".vars must be a nonempty array");
  std::vector<std::string> vars;
  for (size_t i = 0; i < jvars.size(); ++i) {
    require(jvars[i].is_string(), where + ".vars[" + std::to_string(i) + "] must be a string");
    vars.push_back(jvars[i].get<std::string>());
  }
  std::vector<Rat> values = rat_vec(need(v, "values", where), where + ".values");
  const ojson& jrel = need(v, "relations", where);
  require(jrel.is_array(), where + ".relations must be an array");
  std::vector<std::pair<std::vector<Int>, std::vector<Int>>> relations;
  for (size_t i = 0; i < jrel.size(); ++i) {
    std::string rw = where + ".relations[" + std::to_string(i) + "]";
    require(jrel[i].is_array() && jrel[i].size() == 2, rw + " must be a [lhs, rhs] pair");
    relations.emplace_back(int_vec(jrel[i][0], rw + ".lhs"), int_vec(jrel[i][1], rw + ".rhs"));
  }
  try {
    return make_presentation(std::move(vars), std::move(values), std::move(relations), label);
  } catch (const input_error& e) {
    throw input_error(where + ": " + e.what());
  }
}

Report check_presentation_pair(const ojson& root, const std::string& label,
                               const CheckOptions&) {
  const ojson& p = need(root, "payload", "instance");
  BinomialPresentation src = parse_presentation(need(p, "src", "payload"), "payload.src", label);
  BinomialPresentation dst = parse_presentation(need(p, "dst", "payload"), "payload.dst", label);
  const ojson& jmap = need(p, "map", "payload");
  require(jmap.is_object(), "payload.map must map source variables to exponent vectors");
  std::map<std::string, std::vector<Int>> var_map;
  for (const auto& [k, v] : jmap.items()) var_map[k] = int_vec(v, "payload.map." + k);
  long long cap = 0;
  if (auto it = p.find("depth_cap"); it != p.end()) {
    cap = need_ll(*it, "payload.depth_cap");
    require(cap >= 0, "payload.depth_cap must be nonnegative");
  }

  SubstitutionResult sr = substitution_check(src, dst, var_map, cap);

  Report r;
  r.kind = "presentation_pair";
  switch (sr.status) {
    case SubstStatus::holds: r.verdict = "Holds"; r.ok = true; break;
    case SubstStatus::fails: r.verdict = "Fails"; r.ok = false; break;
    case SubstStatus::inconclusive:
      r.verdict = "Inconclusive";
      r.ok = false;
      r.notes.push_back("rewriting hit the depth cap; raise depth_cap to decide");
      break;
  }
  if (sr.failing_relation)
    add_detail(r, "failing_relation", std::to_string(*sr.failing_relation));
  add_detail(r, "steps_used", std::to_string(sr.steps_used));
  add_detail(r, "depth_cap", std::to_string(sr.depth_cap));
  return r;
}

Report check_monoid(const ojson& root, const std::string& label, const CheckOptions& opts) {
  GroupPtr g = parse_group(root, "instance");
  const ojson& p = need(root, "payload", "instance");
  AffineMonoid m = make_monoid(g, parse_elements(g, need(p, "gens", "payload"), "payload.gens"));
  (void)label;

  Report r;
  r.kind = "monoid";
  r.verdict = "Computed";

  if (auto it = p.find("queries"); it != p.end()) {
    auto queries = parse_elements(g, *it, "payload.queries");
    for (size_t i = 0; i < queries.size(); ++i) {
      auto mem = member(queries[i], m);
      add_detail(r, "member[" + std::to_string(i) + "]",
                 mem ? "yes " + vec_text(*mem) : std::string("no"));
      auto sat = saturation_member(queries[i], m);
      add_detail(r, "saturation[" + std::to_string(i) + "]",
                 sat ? "multiplier " + to_string(sat->multiplier) : std::string("no"));
    }
  }

  if (opt_flag(p, "par_cover", "payload")) {
    std::vector<std::vector<Int>> basis;
    for (const auto& gen : m.gens) {
      std::vector<Int> row;
      for (const Rat& c : gen.coords) {
        require(c.get_den() == 1, "payload.par_cover needs integer generator coordinates");
        row.push_back(c.get_num());
      }
      basis.push_back(std::move(row));
    }
    auto bad = par_cover_check(basis, opts.bound);
    if (bad) {
      r.ok = false;
      add_detail(r, "par_cover", bad->reason + " at " + vec_text(bad->point));
    } else {
      add_detail(r, "par_cover", "ok up to bound " + to_string(opts.bound));
    }
  }
  return r;
}

TruncatedSeries parse_series(const ojson& v, const std::string& var, long long trunc,
                             const std::string& where) {
  std::string kind = need_string(v, "kind", where);
  if (kind == "identity") return identity_series(var, trunc);
  if (kind == "coeffs") return make_series(var, rat_vec(need(v, "coeffs", where), where + ".coeffs"));
  if (kind == "seeded" || kind == "seeded_sqrt_branch") {
    Int seed = int_from(need(v, "seed", where), where + ".seed");
    require(seed >= 0, where + ".seed must be nonnegative");
    TruncatedSeries base =
        seeded_unit_series(var, static_cast<std::uint64_t>(to_long(seed, "series seed")), trunc);
    return kind == "seeded" ? base : sqrt_branch_of_x_times(base);
  }
  throw input_error(where + ".kind must be one of identity, coeffs, seeded, seeded_sqrt_branch");
}

Report check_series_valuation(const ojson& root, const std::string& label,
                              const CheckOptions& opts) {
  const ojson& p = need(root, "payload", "instance");
  (void)label;
  std::string var = "x";
  if (auto it = p.find("var"); it != p.end()) {
    require(it->is_string(), "payload.var must be a string");
    var = it->get<std::string>();
  }
  long long trunc = opts.truncation > 0 ? opts.truncation : 64;
  if (auto it = p.find("truncation"); it != p.end()) {
    trunc = need_ll(*it, "payload.truncation");
    require(trunc >= 1, "payload.truncation must be >= 1");
  }

  const ojson& jsubs = need(p, "substitutions", "payload");
  require(jsubs.is_object() && !jsubs.empty(),
          "payload.substitutions must map variables to series");
  std::map<std::string, TruncatedSeries> subs;
  for (const auto& [k, v] : jsubs.items())
    subs.emplace(k, parse_series(v, var, trunc, "payload.substitutions." + k));

  const ojson& jpolys = need(p, "polys", "payload");
  require(jpolys.is_array() && !jpolys.empty(), "payload.polys must be a nonempty array");

  Report r;
  r.kind = "series_valuation";
  r.verdict = "Computed";
  add_detail(r, "truncation", std::to_string(trunc));

  for (size_t i = 0; i < jpolys.size(); ++i) {
    std::string where = "payload.polys[" + std::to_string(i) + "]";
    const ojson& jp = jpolys[i];
    std::string plabel = std::to_string(i);
    if (auto it = jp.find("label"); it != jp.end()) {
      require(it->is_string(), where + ".label must be a string");
      plabel = it->get<std::string>();
    }
    const ojson& jvars = need(jp, "vars", where);
    require(jvars.is_array() && !jvars.empty(), where + ".vars must be a nonempty array");
    std::vector<std::string> vars;
    for (const auto& jv : jvars) {
      require(jv.is_string(), where + ".vars entries must be strings");
      vars.push_back(jv.get<std::string>());
    }
    const ojson& jterms = need(jp, "terms", where);
    require(jterms.is_array() && !jterms.empty(), where + ".terms must be a nonempty array");
    std::map<std::vector<long long>, Rat> terms;
    for (size_t t = 0; t < jterms.size(); ++t) {
      std::string tw = where + ".terms[" + std::to_string(t) + "]";
      const ojson& je = need(jterms[t], "expo", tw);
      require(je.is_array() && je.size() == vars.size(),
              tw + ".expo must list one exponent per variable");
      std::vector<long long> expo;
      for (size_t k = 0; k < je.size(); ++k)
        expo.push_back(need_ll(je[k], tw + ".expo[" + std::to_string(k) + "]"));
      Rat coeff = rat_from(need(jterms[t], "coeff", tw), tw + ".coeff");
      terms[expo] += coeff;
    }
    SeriesPoly f = make_series_poly(std::move(vars), std::move(terms));
    SeriesOrder so = series_order(f, subs);
    add_detail(r, "order[" + plabel + "]",
               so.beyond ? std::string("beyond") : std::to_string(so.value));
    if (so.beyond)
      r.notes.push_back("order[" + plabel + "]: every coefficient up to degree " +
                        std::to_string(so.value) + " vanishes; order exceeds the trust window");
  }
  return r;
}

// ---- expected-block comparison ---------------------------------------------

void mismatch(Report& r, const std::string& field, const std::string& want,
              const std::string& got) {
  r.ok = false;
  r.notes.push_back("mismatch: " + field + " expected " + want + ", computed " + got);
}

template <class T>
std::string list_text(const std::vector<T>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    if constexpr (std::is_same_v<T, Int>) s += to_string(v[i]);
    else if constexpr (std::is_same_v<T, std::string>) s += v[i];
    else s += std::to_string(v[i]);
  }
  return s + "]";
}

void apply_expected(const ojson& exp, Report& r) {
  require(exp.is_object(), "expected must be an object");
  for (const auto& [key, val] : exp.items()) {
    std::string where = "expected." + key;
    if (key == "verdict") {
      require(val.is_string(), where + " must be a string");
      if (r.verdict != val.get<std::string>())
        mismatch(r, "verdict", val.get<std::string>(), r.verdict);
    } else if (key == "ok") {
      require(val.is_boolean(), where + " must be a boolean");
      if (r.ok != val.get<bool>())
        mismatch(r, "ok", bool_text(val.get<bool>()), bool_text(r.ok));
    } else if (key == "e") {
      Int want = int_from(val, where);
      if (!r.e || *r.e != want)
        mismatch(r, "e", to_string(want), r.e ? to_string(*r.e) : "absent");
    } else if (key == "invariant_factors") {
      std::vector<Int> want = int_vec(val, where);
      if (r.invariant_factors != want)
        mismatch(r, "invariant_factors", list_text(want), list_text(r.invariant_factors));
    } else if (key == "levels") {
      std::vector<long long> want;
      require(val.is_array(), where + " must be an array");
      for (size_t i = 0; i < val.size(); ++i)
        want.push_back(need_ll(val[i], where + "[" + std::to_string(i) + "]"));
      if (r.levels != want) mismatch(r, "levels", list_text(want), list_text(r.levels));
    } else if (key == "witnesses") {
      require(val.is_array(), where + " must be an array of strings");
      std::vector<std::string> want;
      for (const auto& w : val) {
        require(w.is_string(), where + " entries must be strings");
        want.push_back(w.get<std::string>());
      }
      if (r.witnesses != want) mismatch(r, "witnesses", list_text(want), list_text(r.witnesses));
    } else if (key == "details") {
      require(val.is_object(), where + " must be an object of detail rows");
      for (const auto& [dk, dv] : val.items()) {
        require(dv.is_string(), where + "." + dk + " must be a string");
        auto it = std::find_if(r.details.begin(), r.details.end(),
                               [&](const auto& row) { return row.first == dk; });
        if (it == r.details.end())
          mismatch(r, "details." + dk, dv.get<std::string>(), "absent");
        else if (it->second != dv.get<std::string>())
          mismatch(r, "details." + dk, dv.get<std::string>(), it->second);
      }
    } else {
      throw input_error(where + " is not a comparable field (use verdict, ok, e, "
                        "invariant_factors, levels, witnesses, or details)");
    }
  }
}

}  // namespace

Instance parse_instance_text(const std::string& text, const std::string& origin) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(origin + ": " + e.what());
  }
  require(j.is_object(), origin + ": instance must be a JSON object");
  std::string schema = need_string(j, "schema", "instance");
  require(schema == "gradval-instance/1",
          origin + ": unsupported schema \"" + schema + "\" (expected gradval-instance/1)");
  std::string kind = need_string(j, "kind", "instance");
  require(kKinds.count(kind) != 0, origin + ": unknown kind \"" + kind +
                                       "\" (expected monomial_extension, graded_extension, "
                                       "presentation_pair, monoid, or series_valuation)");
  Instance inst;
  inst.kind = kind;
  if (j.contains("label")) inst.label = need_string(j, "label", "instance");
  inst.text = j.dump();
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot read instance file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str(), path);
}

Report check_instance(const Instance& inst, const CheckOptions& opts) {
  ojson j = ojson::parse(inst.text);  // envelope revalidated at parse time
  Report r;
  if (inst.kind == "monomial_extension") r = check_monomial_extension(j, inst.label, opts);
  else if (inst.kind == "graded_extension") r = check_graded_extension(j, inst.label, opts);
  else if (inst.kind == "presentation_pair") r = check_presentation_pair(j, inst.label, opts);
  else if (inst.kind == "monoid") r = check_monoid(j, inst.label, opts);
  else if (inst.kind == "series_valuation") r = check_series_valuation(j, inst.label, opts);
  else check_internal(false, "unhandled instance kind " + inst.kind);
  r.label = inst.label;
  if (j.contains("expected")) apply_expected(j["expected"], r);
  return r;
}

}  // namespace gradval
