#include <gradval/verifier.hpp>

#include <algorithm>
#include <map>

namespace gradval {

MonomialExtension make_monomial_extension(int s, int n, IntMatrix a,
                                          std::vector<GroupElement> y_values,
                                          std::vector<bool> unit_flags, std::string label) {
  require(s >= 1, "need at least one ramified parameter");
  require(s <= n, "s must not exceed n");
  require(a.rows == s && a.cols == s, "matrix must be s x s");
  for (const Int& x : a.a) require(x >= 0, "matrix entries must be nonnegative");
  require(det(a) != 0, "matrix is singular");
  require(static_cast<int>(y_values.size()) == n, "need one value per extension parameter");
  for (size_t i = 1; i < y_values.size(); ++i)
    require(same_group(y_values[0], y_values[i]), "parameter values must share one group");
  require(static_cast<int>(unit_flags.size()) == s, "need one unit flag per ramified parameter");
  MonomialExtension ext;
  ext.s = s;
  ext.n = n;
  ext.a = std::move(a);
  ext.y_values = std::move(y_values);
  ext.unit_flags = std::move(unit_flags);
  ext.label = std::move(label);
  return ext;
}

std::vector<GroupElement> x_values(const MonomialExtension& ext) {
  std::vector<GroupElement> xs;
  for (int i = 0; i < ext.s; ++i) {
    GroupElement v = zero_element(ext.y_values[0].group);
    for (int j = 0; j < ext.s; ++j) v = add(v, scale(Rat(ext.a.at(i, j)), ext.y_values[j]));
    xs.push_back(v);
  }
  for (int i = ext.s; i < ext.n; ++i) xs.push_back(ext.y_values[i]);
  return xs;
}

namespace {

// Rows of a padded with zeros to length n, followed by the unit rows for the
// unramified parameters.
std::vector<std::vector<Int>> padded_rows(const MonomialExtension& ext) {
  std::vector<std::vector<Int>> rows;
  for (int i = 0; i < ext.s; ++i) {
    std::vector<Int> r(ext.n, 0);
    for (int j = 0; j < ext.s; ++j) r[j] = ext.a.at(i, j);
    rows.push_back(std::move(r));
  }
  for (int i = ext.s; i < ext.n; ++i) {
    std::vector<Int> r(ext.n, 0);
    r[i] = 1;
    rows.push_back(std::move(r));
  }
  return rows;
}

GroupElement exponent_value(const MonomialExtension& ext, const std::vector<Int>& expo) {
  GroupElement v = zero_element(ext.y_values[0].group);
  for (size_t j = 0; j < expo.size(); ++j)
    if (expo[j] != 0) v = add(v, scale(Rat(expo[j]), ext.y_values[j]));
  return v;
}

struct LambdaData {
  std::vector<std::vector<Int>> rows;       // the padded parallelepiped basis
  std::vector<std::vector<Int>> exponents;  // zero first, then sorted by value
  std::vector<GroupElement> values;
};

LambdaData lambda_sorted(const MonomialExtension& ext) {
  LambdaData out;
  out.rows = padded_rows(ext);
  ParBox box = par_points(out.rows);
  std::vector<size_t> order(box.points.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<GroupElement> vals;
  for (const auto& p : box.points) vals.push_back(exponent_value(ext, p));
  auto is_origin = [&](size_t i) {
    return std::all_of(box.points[i].begin(), box.points[i].end(),
                       [](const Int& x) { return x == 0; });
  };
  std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
    bool oi = is_origin(i), oj = is_origin(j);
    if (oi != oj) return oi;
    Cmp c = compare(vals[i], vals[j]);
    if (c != Cmp::equal) return c == Cmp::less;
    return box.points[i] < box.points[j];
  });
  for (size_t i : order) {
    out.exponents.push_back(box.points[i]);
    out.values.push_back(vals[i]);
  }
  return out;
}

// Representatives of Z^s/(a Z^s) via the Smith form u*a*v = d: the classes
// are the mixed-radix tuples r over the diagonal, pulled back through u^-1.
std::vector<std::vector<Int>> quotient_representatives(const IntMatrix& a) {
  SmithResult sm = smith_normal_form(a);
  IntMatrix u_inv = adjugate(sm.u);
  Int du = det(sm.u);
  check_internal(du == 1 || du == -1, "smith transform not unimodular");
  if (du == -1)
    for (Int& x : u_inv.a) x = -x;
  std::vector<Int> diag = sm.d.rows == sm.d.cols ? sm.diagonal() : std::vector<Int>{};
  check_internal(!diag.empty(), "quotient of a nonsquare matrix");
  std::vector<std::vector<Int>> reps;
  std::vector<Int> radix(diag.size(), 0);
  for (;;) {
    reps.push_back(mul_vec(u_inv, radix));
    size_t k = 0;
    while (k < radix.size()) {
      radix[k] += 1;
      if (radix[k] < diag[k]) break;
      radix[k] = 0;
      ++k;
    }
    if (k == radix.size()) break;
  }
  return reps;
}

std::vector<size_t> invariant_indices(const std::vector<std::vector<Int>>& table) {
  std::vector<size_t> out;
  if (table.empty()) return out;
  for (size_t i = 0; i < table[0].size(); ++i) {
    bool inv = true;
    for (const auto& row : table)
      if (row[i] != 0) {
        inv = false;
        break;
      }
    if (inv) out.push_back(i);
  }
  return out;
}

// Character table: entry [c][i] is the root-of-unity exponent picked up by
// the i-th basis monomial under the c-th group element, reduced into [0, e).
std::vector<std::vector<Int>> character_table(const MonomialExtension& ext, const Int& e,
                                              const std::vector<std::vector<Int>>& reps,
                                              std::vector<std::vector<Int>>& psi_out,
                                              const std::vector<std::vector<Int>>& lams) {
  IntMatrix adj = adjugate(ext.a);
  std::vector<std::vector<Int>> table;
  psi_out.clear();
  for (const auto& c : reps) {
    std::vector<Int> psi = mul_vec(adj, c);
    std::vector<Int> row;
    for (const auto& lam : lams) {
      Int k = 0;
      for (int j = 0; j < ext.s; ++j) k += lam[j] * psi[j];
      k %= e;
      if (k < 0) k += e;
      row.push_back(k);
    }
    psi_out.push_back(std::move(psi));
    table.push_back(std::move(row));
  }
  return table;
}

bool rationally_independent(const std::vector<GroupElement>& elems) {
  if (elems.empty()) return true;
  size_t m = elems[0].coords.size();
  std::vector<Rat> all;
  for (const auto& e : elems) all.insert(all.end(), e.coords.begin(), e.coords.end());
  Int den = common_denominator(all);
  IntMatrix mat(elems.size(), m);
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < m; ++j) {
      Rat scaled = elems[i].coords[j] * Rat(den);
      check_internal(scaled.get_den() == 1, "denominator scaling failed");
      mat.at(i, j) = scaled.get_num();
    }
  return rank(mat) == static_cast<int>(elems.size());
}

}  // namespace

AJReport analyze(const MonomialExtension& ext) {
  AJReport r;
  r.e = abs(det(ext.a));
  require(r.e != 0, "matrix is singular");

  LambdaData lam = lambda_sorted(ext);
  r.w_exponents = lam.exponents;
  r.coset_values = lam.values;
  check_internal(Int(static_cast<long>(r.w_exponents.size())) == r.e,
                 "free-basis count differs from e");

  r.invariant_factors = quotient_structure(transpose(ext.a));
  check_internal(r.invariant_factors.order == r.e, "quotient order differs from |det|");

  std::vector<GroupElement> first_s(ext.y_values.begin(), ext.y_values.begin() + ext.s);
  r.free_basis_ok = rationally_independent(first_s);
  if (!r.free_basis_ok)
    r.notes.push_back("the first s parameter values are rationally dependent");

  std::vector<GroupElement> xs = x_values(ext);
  SubgroupIndex idx = subgroup_index(xs, ext.y_values);
  bool index_ok = idx.finite && idx.index == r.e;
  if (!index_ok)
    r.notes.push_back("group index " + (idx.finite ? to_string(idx.index) : std::string("oo")) +
                      " differs from e = " + to_string(r.e));

  auto violation = validate_coset_exponents(ext, r.w_exponents);
  if (violation)
    r.notes.push_back("coset collision between basis monomials " + std::to_string(violation->i) +
                      " and " + std::to_string(violation->j));
  r.cosets_complete = !violation && index_ok;

  auto overlap = translates_overlap(lam.exponents, lam.rows);
  if (overlap)
    r.notes.push_back("translates " + std::to_string(overlap->i) + " and " +
                      std::to_string(overlap->j) + " meet");
  r.cover_disjoint = !overlap;

  std::vector<std::vector<Int>> psi;
  auto reps = quotient_representatives(ext.a);
  check_internal(Int(static_cast<long>(reps.size())) == r.e, "group element count differs from e");
  auto table = character_table(ext, r.e, reps, psi, r.w_exponents);
  auto inv = invariant_indices(table);
  r.invariants_trivial_only = inv.size() == 1 && inv[0] == 0;
  if (!r.invariants_trivial_only)
    r.notes.push_back("character-invariant basis monomials: " + std::to_string(inv.size()));

  return r;
}

std::optional<CosetViolation> validate_coset_exponents(
    const MonomialExtension& ext, const std::vector<std::vector<Int>>& w_exponents) {
  std::vector<GroupElement> xs = x_values(ext);
  std::vector<GroupElement> vals;
  for (const auto& w : w_exponents) {
    require(w.size() == static_cast<size_t>(ext.n), "exponent vector must have length n");
    vals.push_back(exponent_value(ext, w));
  }
  for (size_t i = 0; i < vals.size(); ++i)
    for (size_t j = i + 1; j < vals.size(); ++j)
      if (in_subgroup(sub(vals[i], vals[j]), xs)) return CosetViolation{i, j};
  return std::nullopt;
}

std::vector<GroupElement> coset_representatives(const MonomialExtension& ext) {
  LambdaData lam = lambda_sorted(ext);
  auto violation = validate_coset_exponents(ext, lam.exponents);
  if (violation)
    throw input_error("coset representatives invalid: the values of basis monomials " +
                      std::to_string(violation->i) + " and " + std::to_string(violation->j) +
                      " differ by a base-group element");
  return lam.values;
}

GroupElement min_formula_check(const MonomialExtension& ext,
                               const std::vector<std::optional<GroupElement>>& coeff_values) {
  std::vector<GroupElement> ws = coset_representatives(ext);
  require(coeff_values.size() == ws.size(),
          "need one optional coefficient value per basis monomial");
  std::vector<GroupElement> xs = x_values(ext);
  std::optional<size_t> best;
  GroupElement best_val = zero_element(ext.y_values[0].group);
  for (size_t i = 0; i < ws.size(); ++i) {
    if (!coeff_values[i]) continue;
    require(in_subgroup(*coeff_values[i], xs).has_value(),
            "coefficient value " + std::to_string(i) + " = " + to_string(*coeff_values[i]) +
                " lies outside the base value group");
    GroupElement total = add(*coeff_values[i], ws[i]);
    if (!best) {
      best = i;
      best_val = total;
      continue;
    }
    Cmp c = compare(total, best_val);
    check_internal(c != Cmp::equal,
                   "minimum value formula tie between basis monomials " + std::to_string(*best) +
                       " and " + std::to_string(i));
    if (c == Cmp::less) {
      best = i;
      best_val = total;
    }
  }
  require(best.has_value(), "at least one coefficient must be present");
  return best_val;
}

CharacterAction character_action(const MonomialExtension& ext) {
  CharacterAction act;
  act.e = abs(det(ext.a));
  LambdaData lam = lambda_sorted(ext);
  act.w_exponents = lam.exponents;
  act.group_elements = quotient_representatives(ext.a);
  check_internal(Int(static_cast<long>(act.group_elements.size())) == act.e,
                 "group element count differs from e");
  act.table = character_table(ext, act.e, act.group_elements, act.psi, act.w_exponents);
  act.invariant_ws = invariant_indices(act.table);
  check_internal(act.invariant_ws.size() == 1 && act.invariant_ws[0] == 0,
                 "character-invariant monomials are not exactly the trivial one");
  return act;
}

namespace {

// Sparse polynomial in the extension parameters with cyclotomic coefficients.
using CPoly = std::map<std::vector<long long>, Cyclo>;

void cpoly_add_term(CPoly& p, const std::vector<long long>& expo, const Cyclo& c) {
  if (is_zero(c)) return;
  auto it = p.find(expo);
  if (it == p.end()) {
    p.emplace(expo, c);
    return;
  }
  it->second = add(it->second, c);
  if (is_zero(it->second)) p.erase(it);
}

CPoly cpoly_mul(const CPoly& a, const CPoly& b) {
  CPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<long long> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      cpoly_add_term(out, e, mul(ca, cb));
    }
  return out;
}

CPoly cpoly_add(CPoly a, const CPoly& b) {
  for (const auto& [e, c] : b) cpoly_add_term(a, e, c);
  return a;
}

CPoly cpoly_sub(CPoly a, const CPoly& b) {
  for (const auto& [e, c] : b) cpoly_add_term(a, e, neg(c));
  return a;
}

CPoly cpoly_scale(const Rat& q, const CPoly& a) {
  CPoly out;
  for (const auto& [e, c] : a) cpoly_add_term(out, e, scale(q, c));
  return out;
}

std::vector<Int> to_int_vector(const std::vector<long long>& e) {
  std::vector<Int> out(e.size());
  for (size_t i = 0; i < e.size(); ++i) out[i] = static_cast<long>(e[i]);
  return out;
}

GroupElement cpoly_min_value(const MonomialExtension& ext, const CPoly& p) {
  std::optional<GroupElement> best;
  for (const auto& [e, c] : p) {
    (void)c;
    GroupElement v = exponent_value(ext, to_int_vector(e));
    if (!best || compare(v, *best) == Cmp::less) best = v;
  }
  check_internal(best.has_value(), "minimum value of the zero polynomial");
  return *best;
}

CPoly cpoly_leading(const MonomialExtension& ext, const CPoly& p, const GroupElement& value) {
  CPoly out;
  for (const auto& [e, c] : p) {
    if (compare(exponent_value(ext, to_int_vector(e)), value) == Cmp::equal) out.emplace(e, c);
  }
  return out;
}

std::string cpoly_text(const CPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : p) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")";
    for (size_t j = 0; j < e.size(); ++j)
      if (e[j] != 0) out += "*y" + std::to_string(j + 1) +
                           (e[j] != 1 ? "^" + std::to_string(e[j]) : "");
  }
  return out;
}

}  // namespace

SymmetricCertificate kummer_symmetric_certificate(const SeriesPoly& z,
                                                  const MonomialExtension& ext, bool strict) {
  require(z.vars.size() == static_cast<size_t>(ext.n),
          "z must be a polynomial in the n extension parameters");
  if (z.terms.empty())
    throw input_error("certificate withheld: z is zero, so its leading form vanishes");

  CharacterAction act = character_action(ext);
  long long r = to_long(act.e, "group order");
  CycloPtr field = make_cyclo_field(static_cast<int>(r));

  SymmetricCertificate cert;
  cert.r = r;
  cert.strict_mode = strict;

  // z as a cyclotomic-coefficient polynomial, and its value.
  CPoly zc;
  for (const auto& [expo, coeff] : z.terms)
    cpoly_add_term(zc, expo, cyclo_rat(field, coeff));
  cert.z_value = cpoly_min_value(ext, zc);
  CPoly z_lead = cpoly_leading(ext, zc, cert.z_value);
  if (z_lead.size() > 1)
    cert.notes.push_back("leading form spans " + std::to_string(z_lead.size()) + " monomials");

  // Conjugates: group element c multiplies each monomial by the root power
  // given by its ramified exponents against psi(c).
  std::vector<CPoly> conj;
  for (size_t ci = 0; ci < act.group_elements.size(); ++ci) {
    CPoly t;
    for (const auto& [expo, coeff] : z.terms) {
      Int k = 0;
      for (int j = 0; j < ext.s; ++j) k += Int(static_cast<long>(expo[j])) * act.psi[ci][j];
      cpoly_add_term(t, expo, mul(cyclo_rat(field, coeff), root_power(field, k)));
    }
    check_internal(!t.empty(), "conjugate vanished");
    cert.conjugate_values.push_back(cpoly_min_value(ext, t));
    check_internal(compare(cert.conjugate_values.back(), cert.z_value) == Cmp::equal,
                   "conjugate value differs from the value of z");
    conj.push_back(std::move(t));
  }

  // Monic product over the conjugates: coef[k] multiplies X^k; S_i = coef[r-i].
  std::vector<CPoly> coef(1);
  cpoly_add_term(coef[0], std::vector<long long>(ext.n, 0), cyclo_rat(field, Rat(1)));
  for (const CPoly& t : conj) {
    std::vector<CPoly> next(coef.size() + 1);
    for (size_t k = 0; k < coef.size(); ++k) {
      next[k + 1] = cpoly_add(std::move(next[k + 1]), coef[k]);
      next[k] = cpoly_sub(std::move(next[k]), cpoly_mul(t, coef[k]));
    }
    coef = std::move(next);
  }
  check_internal(coef.size() == static_cast<size_t>(r) + 1, "product degree mismatch");

  std::vector<CPoly> s_polys(static_cast<size_t>(r) + 1);
  for (long long i = 1; i <= r; ++i) s_polys[i] = coef[static_cast<size_t>(r - i)];

  // Independent expansion via power sums: p_k = sum of k-th powers of the
  // conjugates; the elementary symmetric recurrence must reproduce S_i up to
  // the alternating sign.
  {
    std::vector<CPoly> pows(static_cast<size_t>(r) + 1);
    for (const CPoly& t : conj) {
      CPoly acc;
      cpoly_add_term(acc, std::vector<long long>(ext.n, 0), cyclo_rat(field, Rat(1)));
      for (long long k = 1; k <= r; ++k) {
        acc = cpoly_mul(acc, t);
        pows[k] = cpoly_add(std::move(pows[k]), acc);
      }
    }
    std::vector<CPoly> elem(static_cast<size_t>(r) + 1);
    cpoly_add_term(elem[0], std::vector<long long>(ext.n, 0), cyclo_rat(field, Rat(1)));
    for (long long k = 1; k <= r; ++k) {
      CPoly acc;
      Rat s = 1;
      for (long long i = 1; i <= k; ++i) {
        acc = cpoly_add(std::move(acc), cpoly_scale(s, cpoly_mul(elem[k - i], pows[i])));
        s = -s;
      }
      elem[k] = cpoly_scale(Rat(1, static_cast<unsigned long>(k)), acc);
      CPoly expect = (k % 2 == 0) ? elem[k] : cpoly_scale(Rat(-1), elem[k]);
      check_internal(cpoly_sub(expect, s_polys[k]).empty(),
                     "product and power-sum expansions disagree at S_" + std::to_string(k));
    }
  }

  // Values and inequalities.
  cert.inequalities_ok = true;
  cert.s_values.assign(static_cast<size_t>(r), std::nullopt);
  for (long long i = 1; i <= r; ++i) {
    if (s_polys[i].empty()) continue;  // identically zero: value is infinite
    GroupElement v = cpoly_min_value(ext, s_polys[i]);
    cert.s_values[static_cast<size_t>(i - 1)] = v;
    Cmp c = compare(v, scale(Rat(static_cast<long>(i)), cert.z_value));
    if (c == Cmp::equal) cert.equality_indices.push_back(i);
    bool ok = strict && i < r ? c == Cmp::greater : c != Cmp::less;
    if (!ok) {
      cert.inequalities_ok = false;
      cert.notes.push_back("value of S_" + std::to_string(i) + " violates the bound");
    }
  }

  // Homogeneous minimal-value equation from the equality indices.
  std::vector<CPoly> lead_pows(static_cast<size_t>(r) + 1);
  lead_pows[0] = CPoly{};
  cpoly_add_term(lead_pows[0], std::vector<long long>(ext.n, 0), cyclo_rat(field, Rat(1)));
  for (long long k = 1; k <= r; ++k) lead_pows[k] = cpoly_mul(lead_pows[k - 1], z_lead);
  CPoly equation = lead_pows[static_cast<size_t>(r)];
  std::string text = "in(z)^" + std::to_string(r);
  for (long long i : cert.equality_indices) {
    CPoly si_lead = cpoly_leading(ext, s_polys[i], scale(Rat(static_cast<long>(i)), cert.z_value));
    equation = cpoly_add(std::move(equation), cpoly_mul(si_lead, lead_pows[static_cast<size_t>(r - i)]));
    text += " + (" + cpoly_text(si_lead) + ")*in(z)^" + std::to_string(r - i);
  }
  cert.equation_vanishes = equation.empty();
  cert.equation_text = text + " = " + (cert.equation_vanishes ? "0" : cpoly_text(equation));

  return cert;
}

}  // namespace gradval
