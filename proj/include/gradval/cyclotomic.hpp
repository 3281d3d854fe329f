#pragma once

#include <gradval/base.hpp>

#include <memory>
#include <string>
#include <vector>

namespace gradval {

// Exact arithmetic in Q(w) for a primitive m-th root of unity w: vectors of
// rationals modulo the m-th cyclotomic polynomial. Used to detect exact
// cancellation in symmetric-function expansions.
struct CycloField {
  int m = 1;
  std::vector<Rat> phi;  // monic, coefficients low to high, size degree + 1
  int degree() const { return static_cast<int>(phi.size()) - 1; }
};

using CycloPtr = std::shared_ptr<const CycloField>;

CycloPtr make_cyclo_field(int m);

struct Cyclo {
  CycloPtr field;
  std::vector<Rat> c;  // size = field->degree()
};

Cyclo cyclo_zero(CycloPtr f);
Cyclo cyclo_rat(CycloPtr f, const Rat& q);
Cyclo root_power(CycloPtr f, const Int& k);  // w^k, exponent taken mod m

Cyclo add(const Cyclo& a, const Cyclo& b);
Cyclo sub(const Cyclo& a, const Cyclo& b);
Cyclo mul(const Cyclo& a, const Cyclo& b);
Cyclo neg(const Cyclo& a);
Cyclo scale(const Rat& q, const Cyclo& a);
bool is_zero(const Cyclo& a);
bool equal(const Cyclo& a, const Cyclo& b);
std::string to_string(const Cyclo& a);

}  // namespace gradval
