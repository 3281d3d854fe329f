#include <gradval/graded.hpp>

#include <algorithm>

namespace gradval {

namespace {

const char* kIntegralityCaveat =
    "exact for monomial-type (semigroup-algebra) graded rings; for general "
    "graded rings a NotIntegral verdict stays sound, an Integral verdict is "
    "advisory";

}  // namespace

GradedExtension make_extension(AffineMonoid s1, AffineMonoid s2, Int f, std::string label) {
  require(f >= 1, "residue degree f must be positive");
  require(s1.group == s2.group || *s1.group == *s2.group,
          "extension semigroups must share their ambient group");
  GradedExtension ext;
  ext.s1 = std::move(s1);
  ext.s2 = std::move(s2);
  ext.f = std::move(f);
  ext.label = std::move(label);
  return ext;
}

IntegralityResult integrality_test(const GradedExtension& ext) {
  IntegralityResult out;
  out.caveat = kIntegralityCaveat;
  out.integral = true;
  for (const GroupElement& g : ext.s2.gens) {
    auto w = saturation_member(g, ext.s1);
    if (!w) {
      out.integral = false;
      out.certs.clear();
      out.witness = g;
      return out;
    }
    out.certs.push_back(*w);
  }
  return out;
}

ModuleGenerators finiteness_test(const GradedExtension& ext) {
  IntegralityResult integ = integrality_test(ext);
  if (!integ.integral)
    throw input_error("finiteness_test: extension is not integral; witness " +
                      to_string(*integ.witness));
  return module_generators(ext.s2, ext.s1);
}

TowerReport finiteness_tower(const std::vector<GradedExtension>& levels) {
  require(!levels.empty(), "tower needs at least one level");
  TowerReport out;
  out.label = levels.front().label;
  for (const GradedExtension& ext : levels) {
    ModuleGenerators m = finiteness_test(ext);
    check_internal(m.finite, "tower level returned a non-finite module: " + m.evidence);
    out.counts.push_back(static_cast<long long>(m.gens.size()));
  }
  out.counts_strictly_increase = out.counts.size() >= 2;
  for (size_t i = 0; i + 1 < out.counts.size(); ++i)
    if (out.counts[i] >= out.counts[i + 1]) out.counts_strictly_increase = false;
  return out;
}

PPowerResult p_power_inclusion(const GradedExtension& ext, const Int& p, unsigned n) {
  require(p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 30) != 0, "p must be prime");
  Int scale = 1;
  for (unsigned i = 0; i < n; ++i) scale *= p;
  PPowerResult out;
  out.holds = true;
  for (const GroupElement& g : ext.s2.gens) {
    GroupElement scaled = gradval::scale(Rat(scale), g);
    auto w = member(scaled, ext.s1);
    if (!w) {
      out.holds = false;
      out.certs.clear();
      out.witness = scaled;
      return out;
    }
    out.certs.push_back(*w);
  }
  return out;
}

Int qf_degree(const GradedExtension& ext) {
  SubgroupIndex idx = subgroup_index(ext.s1.gens, ext.s2.gens);
  if (!idx.finite)
    throw input_error("qf_degree: the group index [<s2>:<s1>] is infinite (rank drop)");
  return idx.index * ext.f;
}

BinomialPresentation make_presentation(
    std::vector<std::string> vars, std::vector<Rat> values,
    std::vector<std::pair<std::vector<Int>, std::vector<Int>>> relations, std::string label) {
  require(!vars.empty(), "presentation needs at least one variable");
  require(vars.size() == values.size(), "one value tag per variable");
  for (size_t i = 0; i < vars.size(); ++i) {
    require(!vars[i].empty(), "variable names must be nonempty");
    require(sign(values[i]) > 0, "value tag of " + vars[i] + " must be positive");
    for (size_t j = i + 1; j < vars.size(); ++j)
      require(vars[i] != vars[j], "duplicate variable " + vars[i]);
  }
  BinomialPresentation p;
  p.vars = std::move(vars);
  p.values = std::move(values);
  p.label = std::move(label);
  for (size_t r = 0; r < relations.size(); ++r) {
    const auto& [lhs, rhs] = relations[r];
    require(lhs.size() == p.vars.size() && rhs.size() == p.vars.size(),
            "relation " + std::to_string(r) + " exponent vectors must cover every variable");
    for (const std::vector<Int>* side : {&lhs, &rhs})
      for (const Int& e : *side)
        require(e >= 0, "relation " + std::to_string(r) + " has a negative exponent");
    require(lhs != rhs, "relation " + std::to_string(r) + " has identical sides");
    Rat vl = 0, vr = 0;
    for (size_t i = 0; i < p.vars.size(); ++i) {
      vl += Rat(lhs[i]) * p.values[i];
      vr += Rat(rhs[i]) * p.values[i];
    }
    require(vl == vr, "relation " + std::to_string(r) + " equates values " + to_string(vl) +
                          " and " + to_string(vr));
  }
  p.relations = std::move(relations);
  return p;
}

Rat monomial_value(const BinomialPresentation& p, const std::vector<Int>& expo) {
  require(expo.size() == p.vars.size(), "exponent vector size mismatch");
  Rat v = 0;
  for (size_t i = 0; i < expo.size(); ++i) v += Rat(expo[i]) * p.values[i];
  return v;
}

namespace {

// Term order for rewriting: value first, then lex on exponents with the
// highest-index variable most significant, so every oriented rule eliminates
// its top variable and monomials of one value class form a finite chain.
int monomial_cmp(const BinomialPresentation& p, const std::vector<Int>& a,
                 const std::vector<Int>& b) {
  Rat va = monomial_value(p, a), vb = monomial_value(p, b);
  if (va != vb) return va < vb ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

bool divides(const std::vector<Int>& lead, const std::vector<Int>& m) {
  for (size_t i = 0; i < lead.size(); ++i)
    if (m[i] < lead[i]) return false;
  return true;
}

}  // namespace

SubstitutionResult substitution_check(const BinomialPresentation& src,
                                      const BinomialPresentation& dst,
                                      const std::map<std::string, std::vector<Int>>& var_map,
                                      long long depth_cap) {
  if (depth_cap <= 0) depth_cap = 10 * static_cast<long long>(dst.relations.size());
  require(depth_cap > 0, "rewriting needs dst relations or an explicit depth cap");

  std::vector<std::vector<Int>> images(src.vars.size());
  for (size_t i = 0; i < src.vars.size(); ++i) {
    auto it = var_map.find(src.vars[i]);
    require(it != var_map.end(), "substitution map misses variable " + src.vars[i]);
    require(it->second.size() == dst.vars.size(),
            "substitution image for " + src.vars[i] + " has the wrong arity");
    for (const Int& e : it->second)
      require(e >= 0, "substitution image for " + src.vars[i] + " has a negative exponent");
    Rat vi = monomial_value(dst, it->second);
    require(vi == src.values[i], "substitution image for " + src.vars[i] + " has value " +
                                     to_string(vi) + " but the variable is tagged " +
                                     to_string(src.values[i]));
    images[i] = it->second;
  }
  for (const auto& [name, expo] : var_map) {
    (void)expo;
    require(std::find(src.vars.begin(), src.vars.end(), name) != src.vars.end(),
            "substitution map names unknown variable " + name);
  }

  // Orient every dst rule from its larger side to its smaller one.
  std::vector<std::pair<std::vector<Int>, std::vector<Int>>> rules;
  for (const auto& [lhs, rhs] : dst.relations) {
    int c = monomial_cmp(dst, lhs, rhs);
    check_internal(c != 0, "presentation relation with equal sides survived validation");
    rules.push_back(c > 0 ? std::make_pair(lhs, rhs) : std::make_pair(rhs, lhs));
  }

  SubstitutionResult out;
  out.depth_cap = depth_cap;

  auto apply = [&](const std::vector<Int>& expo) {
    std::vector<Int> m(dst.vars.size(), 0);
    for (size_t i = 0; i < expo.size(); ++i)
      for (size_t j = 0; j < m.size(); ++j) m[j] += expo[i] * images[i][j];
    return m;
  };

  auto normal_form = [&](std::vector<Int> m) -> std::optional<std::vector<Int>> {
    long long steps = 0;
    for (;;) {
      bool hit = false;
      for (const auto& [from, to] : rules) {
        if (!divides(from, m)) continue;
        for (size_t j = 0; j < m.size(); ++j) m[j] += to[j] - from[j];
        hit = true;
        break;
      }
      if (!hit) return m;
      if (++steps > depth_cap) return std::nullopt;
      out.steps_used = std::max(out.steps_used, steps);
    }
  };

  for (size_t r = 0; r < src.relations.size(); ++r) {
    auto nl = normal_form(apply(src.relations[r].first));
    auto nr = normal_form(apply(src.relations[r].second));
    if (!nl || !nr) {
      out.status = SubstStatus::inconclusive;
      out.failing_relation = r;
      return out;
    }
    if (*nl != *nr) {
      out.status = SubstStatus::fails;
      out.failing_relation = r;
      return out;
    }
  }
  out.status = SubstStatus::holds;
  return out;
}

}  // namespace gradval
