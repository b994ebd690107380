#ifndef F2SQ_COVER_HPP
#define F2SQ_COVER_HPP

#include <stdexcept>
#include <vector>

#include "f2sq/laurent.hpp"
#include "f2sq/word.hpp"

namespace f2sq {

/// A 1-chain P*X + Q*Y on the Z^2 grid: P collects the horizontal edge
/// orbit x^i y^j X, Q the vertical orbit x^i y^j Y.
struct ChainPair {
  Laurent2 p;
  Laurent2 q;

  friend bool operator==(const ChainPair&, const ChainPair&) = default;
  friend ChainPair operator+(const ChainPair& a, const ChainPair& b) {
    return {a.p + b.p, a.q + b.q};
  }
  friend ChainPair operator-(const ChainPair& a, const ChainPair& b) {
    return {a.p - b.p, a.q - b.q};
  }
  /// Action of the group ring on chains.
  friend ChainPair operator*(const Laurent2& r, const ChainPair& c) {
    return {r * c.p, r * c.q};
  }
};

struct LatticePoint {
  std::int64_t i = 0;
  std::int64_t j = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Chain of the lift of w starting at the origin. Defined for every word;
/// it is a cycle exactly when w lies in the commutator subgroup.
ChainPair lift_chain(const Word& w);

/// Lattice points visited by the lift, origin first; size is |w| + 1.
std::vector<LatticePoint> lift_trace(const Word& w);

/// Deck transformation x^a y^b applied to a chain.
ChainPair translate_chain(const ChainPair& c, std::int64_t a, std::int64_t b);

/// Raised when an operation that needs a loop gets a word with nonzero
/// exponent sums.
class NotALoop : public std::invalid_argument {
 public:
  explicit NotALoop(ExponentSums sums);
  ExponentSums sums() const { return sums_; }

 private:
  ExponentSums sums_;
};

/// Homology class of a commutator-subgroup element. Throws NotALoop.
ChainPair homology_image(const Word& w);

}  // namespace f2sq

#endif  // F2SQ_COVER_HPP
