#include "f2sq/cover.hpp"

#include <string>

namespace f2sq {

ChainPair lift_chain(const Word& w) {
  ChainPair c;
  std::int64_t i = 0;
  std::int64_t j = 0;
  for (Generator g : w.letters()) {
    if (g.letter == Letter::x) {
      if (g.inverted) {
        --i;
        c.p.add_term({i, j}, -1);
      } else {
        c.p.add_term({i, j}, 1);
        ++i;
      }
    } else {
      if (g.inverted) {
        --j;
        c.q.add_term({i, j}, -1);
      } else {
        c.q.add_term({i, j}, 1);
        ++j;
      }
    }
  }
  return c;
}

std::vector<LatticePoint> lift_trace(const Word& w) {
  std::vector<LatticePoint> trace;
  trace.reserve(w.length() + 1);
  LatticePoint at;
  trace.push_back(at);
  for (Generator g : w.letters()) {
    const std::int64_t step = g.inverted ? -1 : 1;
    (g.letter == Letter::x ? at.i : at.j) += step;
    trace.push_back(at);
  }
  return trace;
}

ChainPair translate_chain(const ChainPair& c, std::int64_t a, std::int64_t b) {
  return {monomial_mul(c.p, a, b), monomial_mul(c.q, a, b)};
}

NotALoop::NotALoop(ExponentSums sums)
    : std::invalid_argument("word is not in the commutator subgroup: exponent sums (" +
                            std::to_string(sums.x) + ", " + std::to_string(sums.y) + ")"),
      sums_(sums) {}

ChainPair homology_image(const Word& w) {
  if (auto s = abelianize(w); s != ExponentSums{}) throw NotALoop(s);
  return lift_chain(w);
}

}  // namespace f2sq
