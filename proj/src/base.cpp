#include <gradval/base.hpp>

namespace gradval {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw input_error("empty rational literal");
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  bool seen_digit = false, seen_slash = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      seen_digit = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
      seen_digit = false;  // require digits after the slash too
    } else {
      throw input_error("bad rational literal: " + s);
    }
  }
  if (!seen_digit) throw input_error("bad rational literal: " + s);
  Rat q;
  if (q.set_str(s, 10) != 0) throw input_error("bad rational literal: " + s);
  if (seen_slash && q.get_den() == 0) throw input_error("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rat& q) { return q.get_str(); }

Int common_denominator(const std::vector<Rat>& qs) {
  Int l = 1;
  for (const Rat& q : qs) {
    Int d = q.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

long to_long(const Int& z, const char* what) {
  check_internal(z.fits_slong_p(), std::string(what) + " exceeds the supported desk scale");
  return z.get_si();
}

int sign(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

int sign(const Int& z) { return mpz_sgn(z.get_mpz_t()); }

}  // namespace gradval
