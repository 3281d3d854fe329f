#include <gradval/cyclotomic.hpp>

#include <map>
#include <mutex>

namespace gradval {

namespace {

// Exact division of polynomials with rational coefficients (low-to-high),
// divisor monic; remainder must vanish.
std::vector<Rat> poly_divide_exact(std::vector<Rat> num, const std::vector<Rat>& den) {
  check_internal(!den.empty() && den.back() == 1, "cyclotomic divisor must be monic");
  check_internal(num.size() >= den.size(), "cyclotomic division underflow");
  std::vector<Rat> quot(num.size() - den.size() + 1, Rat(0));
  for (size_t k = quot.size(); k-- > 0;) {
    Rat q = num[k + den.size() - 1];
    quot[k] = q;
    if (q == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) num[k + j] -= q * den[j];
  }
  for (const Rat& r : num) check_internal(r == 0, "cyclotomic division left a remainder");
  return quot;
}

std::vector<Rat> cyclotomic_poly(int m, std::map<int, std::vector<Rat>>& memo) {
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  // x^m - 1 divided by the cyclotomic polynomials of all proper divisors
  std::vector<Rat> f(static_cast<size_t>(m) + 1, Rat(0));
  f[0] = -1;
  f[static_cast<size_t>(m)] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) f = poly_divide_exact(std::move(f), cyclotomic_poly(d, memo));
  memo[m] = f;
  return f;
}

std::mutex g_mutex;
std::map<int, CycloPtr> g_fields;

}  // namespace

CycloPtr make_cyclo_field(int m) {
  require(m >= 1, "root order must be positive");
  std::lock_guard<std::mutex> lock(g_mutex);
  auto it = g_fields.find(m);
  if (it != g_fields.end()) return it->second;
  auto f = std::make_shared<CycloField>();
  f->m = m;
  std::map<int, std::vector<Rat>> memo;
  f->phi = cyclotomic_poly(m, memo);
  g_fields[m] = f;
  return f;
}

Cyclo cyclo_zero(CycloPtr f) {
  require(f != nullptr, "null cyclotomic field");
  Cyclo a;
  a.field = std::move(f);
  a.c.assign(a.field->degree(), Rat(0));
  return a;
}

Cyclo cyclo_rat(CycloPtr f, const Rat& q) {
  Cyclo a = cyclo_zero(std::move(f));
  a.c[0] = q;
  return a;
}

namespace {

// Reduce a raw coefficient vector modulo phi (monic), in place, to degree
// below deg(phi).
void reduce(const CycloField& f, std::vector<Rat>& c) {
  size_t d = static_cast<size_t>(f.degree());
  for (size_t k = c.size(); k-- > d;) {
    Rat q = c[k];
    if (q == 0) continue;
    c[k] = 0;
    for (size_t j = 0; j < d; ++j) c[k - d + j] -= q * f.phi[j];
  }
  c.resize(d);
}

void check_same_field(const Cyclo& a, const Cyclo& b) {
  check_internal(a.field == b.field || (a.field && b.field && a.field->m == b.field->m),
                 "cyclotomic elements from different fields");
}

}  // namespace

Cyclo root_power(CycloPtr f, const Int& k) {
  Cyclo a = cyclo_zero(std::move(f));
  Int r = k % a.field->m;
  if (r < 0) r += a.field->m;
  size_t e = static_cast<size_t>(r.get_ui());
  std::vector<Rat> raw(e + 1, Rat(0));
  raw[e] = 1;
  reduce(*a.field, raw);
  a.c = std::move(raw);
  return a;
}

Cyclo add(const Cyclo& a, const Cyclo& b) {
  check_same_field(a, b);
  Cyclo s = a;
  for (size_t i = 0; i < s.c.size(); ++i) s.c[i] += b.c[i];
  return s;
}

Cyclo sub(const Cyclo& a, const Cyclo& b) { return add(a, neg(b)); }

Cyclo neg(const Cyclo& a) {
  Cyclo s = a;
  for (Rat& x : s.c) x = -x;
  return s;
}

Cyclo scale(const Rat& q, const Cyclo& a) {
  Cyclo s = a;
  for (Rat& x : s.c) x *= q;
  return s;
}

Cyclo mul(const Cyclo& a, const Cyclo& b) {
  check_same_field(a, b);
  std::vector<Rat> raw(a.c.size() + b.c.size(), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) raw[i + j] += a.c[i] * b.c[j];
  }
  reduce(*a.field, raw);
  Cyclo s;
  s.field = a.field;
  s.c = std::move(raw);
  return s;
}

bool is_zero(const Cyclo& a) {
  for (const Rat& x : a.c)
    if (x != 0) return false;
  return true;
}

bool equal(const Cyclo& a, const Cyclo& b) { return is_zero(sub(a, b)); }

std::string to_string(const Cyclo& a) {
  std::string out;
  bool first = true;
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    if (!first) out += " + ";
    out += to_string(a.c[i]);
    if (i >= 1) out += "*w" + (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return first ? "0" : out;
}

}  // namespace gradval
