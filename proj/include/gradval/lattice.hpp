#pragma once

#include <gradval/base.hpp>

namespace gradval {

// Dense matrix over Z with arbitrary-precision entries, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  std::vector<Int> row(int i) const;

  bool operator==(const IntMatrix&) const = default;
};

IntMatrix mul(const IntMatrix& x, const IntMatrix& y);
IntMatrix transpose(const IntMatrix& m);
std::vector<Int> mul_vec(const IntMatrix& m, const std::vector<Int>& v);
std::string to_string(const IntMatrix& m);

// Determinant by fraction-free elimination; matrix must be square.
Int det(const IntMatrix& m);

// Adjugate; the identity m * adj(m) == det(m) * I is checked before returning.
IntMatrix adjugate(const IntMatrix& m);

// u * a * v == d with u, v unimodular and d diagonal, d[i] >= 0, d[i] | d[i+1].
// The identity and |det u| == |det v| == 1 are checked on every call.
struct SmithResult {
  IntMatrix d, u, v;
  std::vector<Int> diagonal() const;
};
SmithResult smith_normal_form(const IntMatrix& a);

// u * a == h with u unimodular, h in row echelon form with positive pivots and
// entries above each pivot reduced into [0, pivot). rank = number of nonzero rows.
struct HermiteResult {
  IntMatrix h, u;
  int rank = 0;
};
HermiteResult hermite_normal_form(const IntMatrix& a);

// One integral solution of a * x == b, if any exists.
std::optional<std::vector<Int>> solve_integral(const IntMatrix& a, const std::vector<Int>& b);

// One rational solution of a * x == b (free variables set to zero), if the
// system is consistent. For a square nonsingular a this is the unique one.
std::optional<std::vector<Rat>> solve_rational(const IntMatrix& a, const std::vector<Rat>& b);

// Row rank over Q.
int rank(const IntMatrix& a);

// Invariant factors of Z^s / A^t Z^s for square nonsingular A, from the Smith
// form. Only the nontrivial factors (> 1) are listed; order == |det A|.
struct QuotientStructure {
  std::vector<Int> invariant_factors;
  Int order;
};
QuotientStructure quotient_structure(const IntMatrix& a);

}  // namespace gradval
