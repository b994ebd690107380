// Words realizing specific homology classes, built through the module
// action g -> (h g h^-1) g^-1, which multiplies the class by (ab(h) - 1).
#ifndef F2SQ_TESTS_CONSTRUCTIONS_HPP
#define F2SQ_TESTS_CONSTRUCTIONS_HPP

#include "f2sq/word.hpp"

namespace f2sq::testing {

inline Word times_unit_minus_1(const Word& g, const Word& h) {
  return conjugate(g, h) * invert(g);
}

/// Class (y-1)^(k-1) [x,y]: P = -(y-1)^k, Q = (y-1)^(k-1) (x-1).
inline Word ladder_word(unsigned k) {
  Word w = parse("[x,y]");
  for (unsigned i = 1; i < k; ++i) w = times_unit_minus_1(w, parse("y"));
  return w;
}

/// Class (x-1)(y-1) [x,y]: f and g vanish identically.
inline Word all_vanishing_word() { return times_unit_minus_1(ladder_word(2), parse("x")); }

/// The explicit witness for [x^m, y^n] when mn is even.
inline std::pair<Word, Word> commutator_power_witness(int m, int n) {
  const Word xm = power(parse("x"), m), yn = power(parse("y"), n);
  if (m % 2 == 0) {
    const Word half = power(parse("x"), m / 2);
    return {half, yn * invert(half) * invert(yn)};
  }
  // n even: [g, h] = (g h^(1/2) g^-1)^2 (h^(-1/2))^2.
  const Word half = power(parse("y"), n / 2);
  return {xm * half * invert(xm), invert(half)};
}

}  // namespace f2sq::testing

#endif
