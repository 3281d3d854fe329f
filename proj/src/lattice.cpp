#include <gradval/lattice.hpp>

#include <sstream>

namespace gradval {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    require(static_cast<int>(rows[i].size()) == c, "ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> IntMatrix::row(int i) const {
  std::vector<Int> r(cols);
  for (int j = 0; j < cols; ++j) r[j] = at(i, j);
  return r;
}

IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
  check_internal(x.cols == y.rows, "matrix product shape mismatch");
  IntMatrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
    }
  return z;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

std::vector<Int> mul_vec(const IntMatrix& m, const std::vector<Int>& v) {
  check_internal(m.cols == static_cast<int>(v.size()), "matrix-vector shape mismatch");
  std::vector<Int> r(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * v[j];
  return r;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < m.cols; ++j) os << (j ? " " : "") << m.at(i, j).get_str();
  }
  os << "]";
  return os.str();
}

Int det(const IntMatrix& m) {
  require(m.rows == m.cols, "determinant of non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  IntMatrix b = m;
  int sgn = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (b.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (b.at(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(b.at(k, j), b.at(piv, j));
      sgn = -sgn;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j);
        mpz_divexact(b.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      b.at(i, k) = 0;
    }
    prev = b.at(k, k);
  }
  return sgn * b.at(n - 1, n - 1);
}

IntMatrix adjugate(const IntMatrix& m) {
  require(m.rows == m.cols, "adjugate of non-square matrix");
  int n = m.rows;
  IntMatrix adj(n, n);
  if (n == 0) return adj;
  IntMatrix minor(n - 1, n - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc) = m.at(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = det(minor);
      if ((i + j) % 2) cof = -cof;
      adj.at(j, i) = cof;
    }
  Int d = det(m);
  IntMatrix prod = mul(m, adj);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      check_internal(prod.at(i, j) == (i == j ? d : Int(0)), "adjugate identity failed");
  return adj;
}

namespace {

void add_row_multiple(IntMatrix& m, int dst, int src, const Int& q) {
  if (q == 0) return;
  for (int j = 0; j < m.cols; ++j) m.at(dst, j) -= q * m.at(src, j);
}

void add_col_multiple(IntMatrix& m, int dst, int src, const Int& q) {
  if (q == 0) return;
  for (int i = 0; i < m.rows; ++i) m.at(i, dst) -= q * m.at(i, src);
}

void swap_rows(IntMatrix& m, int i, int k) {
  if (i == k) return;
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(i, j), m.at(k, j));
}

void swap_cols(IntMatrix& m, int j, int k) {
  if (j == k) return;
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, j), m.at(i, k));
}

void negate_row(IntMatrix& m, int i) {
  for (int j = 0; j < m.cols; ++j) m.at(i, j) = -m.at(i, j);
}

bool is_unimodular(const IntMatrix& m) {
  Int d = det(m);
  return d == 1 || d == -1;
}

}  // namespace

std::vector<Int> SmithResult::diagonal() const {
  std::vector<Int> out;
  int k = std::min(d.rows, d.cols);
  for (int i = 0; i < k; ++i) out.push_back(d.at(i, i));
  return out;
}

SmithResult smith_normal_form(const IntMatrix& a) {
  int m = a.rows, n = a.cols;
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);
  int lim = std::min(m, n);
  for (int t = 0; t < lim; ++t) {
    // move a nonzero entry of smallest magnitude in the trailing block to (t,t)
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (d.at(i, j) == 0) continue;
        if (pi < 0 || abs(d.at(i, j)) < abs(d.at(pi, pj))) { pi = i; pj = j; }
      }
    if (pi < 0) break;  // trailing block is zero
    swap_rows(d, t, pi);
    swap_rows(u, t, pi);
    swap_cols(d, t, pj);
    swap_cols(v, t, pj);

    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);  // truncated; remainder shrinks
        add_row_multiple(d, i, t, q);
        add_row_multiple(u, i, t, q);
        if (d.at(i, t) != 0) {
          swap_rows(d, t, i);
          swap_rows(u, t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        add_col_multiple(d, j, t, q);
        add_col_multiple(v, j, t, q);
        if (d.at(t, j) != 0) {
          swap_cols(d, t, j);
          swap_cols(v, t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide every trailing entry; fold an offending row in and retry
      int oi = -1;
      for (int i = t + 1; i < m && oi < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) { oi = i; break; }
      if (oi < 0) break;
      add_row_multiple(d, t, oi, Int(-1));
      add_row_multiple(u, t, oi, Int(-1));
    }
    if (d.at(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
  SmithResult res{d, u, v};
  check_internal(mul(mul(u, a), v) == d, "smith form transform identity failed");
  check_internal(is_unimodular(u) && is_unimodular(v), "smith transforms not unimodular");
  std::vector<Int> diag = res.diagonal();
  for (size_t i = 0; i + 1 < diag.size(); ++i) {
    check_internal(diag[i] >= 0, "smith diagonal sign");
    check_internal(diag[i + 1] == 0 || (diag[i] != 0 && diag[i + 1] % diag[i] == 0) ||
                       (diag[i] == 0 && diag[i + 1] == 0),
                   "smith divisibility chain failed");
  }
  for (int i = 0; i < d.rows; ++i)
    for (int j = 0; j < d.cols; ++j)
      check_internal(i == j || d.at(i, j) == 0, "smith form not diagonal");
  return res;
}

HermiteResult hermite_normal_form(const IntMatrix& a) {
  int m = a.rows, n = a.cols;
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(m);
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    for (;;) {
      int piv = -1;
      for (int i = r; i < m; ++i) {
        if (h.at(i, c) == 0) continue;
        if (piv < 0 || abs(h.at(i, c)) < abs(h.at(piv, c))) piv = i;
      }
      if (piv < 0) break;
      swap_rows(h, r, piv);
      swap_rows(u, r, piv);
      bool leftover = false;
      for (int i = r + 1; i < m; ++i) {
        if (h.at(i, c) == 0) continue;
        Int q = h.at(i, c) / h.at(r, c);
        add_row_multiple(h, i, r, q);
        add_row_multiple(u, i, r, q);
        if (h.at(i, c) != 0) leftover = true;
      }
      if (!leftover) break;
    }
    if (r < m && h.at(r, c) != 0) {
      if (h.at(r, c) < 0) {
        negate_row(h, r);
        negate_row(u, r);
      }
      for (int i = 0; i < r; ++i) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(), h.at(r, c).get_mpz_t());
        add_row_multiple(h, i, r, q);
        add_row_multiple(u, i, r, q);
      }
      ++r;
    }
  }
  HermiteResult res{h, u, r};
  check_internal(mul(u, a) == h, "hermite transform identity failed");
  check_internal(is_unimodular(u), "hermite transform not unimodular");
  return res;
}

std::optional<std::vector<Int>> solve_integral(const IntMatrix& a, const std::vector<Int>& b) {
  require(static_cast<int>(b.size()) == a.rows, "solve_integral shape mismatch");
  int m = a.rows, n = a.cols;
  if (n == 0) {
    for (const Int& z : b)
      if (z != 0) return std::nullopt;
    return std::vector<Int>{};
  }
  HermiteResult ht = hermite_normal_form(transpose(a));  // u * a^t = h
  // a * u^t = h^t =: c, a column-echelon matrix; solve c*y = b pivot by pivot.
  std::vector<Int> residual = b;
  std::vector<Int> y(n, 0);
  for (int j = 0; j < ht.rank; ++j) {
    int p = -1;
    for (int cidx = 0; cidx < m; ++cidx)
      if (ht.h.at(j, cidx) != 0) { p = cidx; break; }
    check_internal(p >= 0, "hermite rank row is zero");
    const Int& den = ht.h.at(j, p);
    if (residual[p] % den != 0) return std::nullopt;
    Int yj = residual[p] / den;
    if (yj != 0)
      for (int cidx = 0; cidx < m; ++cidx) residual[cidx] -= yj * ht.h.at(j, cidx);
    y[j] = yj;
  }
  for (const Int& z : residual)
    if (z != 0) return std::nullopt;
  std::vector<Int> x = mul_vec(transpose(ht.u), y);
  check_internal(mul_vec(a, x) == b, "solve_integral verification failed");
  return x;
}

std::optional<std::vector<Rat>> solve_rational(const IntMatrix& a, const std::vector<Rat>& b) {
  require(static_cast<int>(b.size()) == a.rows, "solve_rational shape mismatch");
  int m = a.rows, n = a.cols;
  std::vector<std::vector<Rat>> w(m, std::vector<Rat>(n + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) w[i][j] = Rat(a.at(i, j));
    w[i][n] = b[i];
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (w[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(w[r], w[piv]);
    Rat inv = 1 / w[r][c];
    for (int j = c; j <= n; ++j) w[r][j] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || w[i][c] == 0) continue;
      Rat f = w[i][c];
      for (int j = c; j <= n; ++j) w[i][j] -= f * w[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < m; ++i)
    if (w[i][n] != 0) return std::nullopt;
  std::vector<Rat> x(n, Rat(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = w[i][n];
  return x;
}

int rank(const IntMatrix& a) { return hermite_normal_form(a).rank; }

QuotientStructure quotient_structure(const IntMatrix& a) {
  require(a.rows == a.cols, "quotient structure of non-square matrix");
  Int d = det(a);
  require(d != 0, "quotient structure of singular matrix " + to_string(a));
  SmithResult s = smith_normal_form(a);
  QuotientStructure q;
  q.order = 1;
  for (const Int& f : s.diagonal()) {
    q.order *= f;
    if (f > 1) q.invariant_factors.push_back(f);
  }
  check_internal(q.order == abs(d), "quotient order disagrees with determinant");
  return q;
}

}  // namespace gradval
