#ifndef F2SQ_OBSTRUCTIONS_HPP
#define F2SQ_OBSTRUCTIONS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2sq/cover.hpp"
#include "f2sq/laurent.hpp"
#include "f2sq/oracle.hpp"
#include "f2sq/word.hpp"

namespace f2sq {

inline constexpr unsigned kDefaultDepth = 8;

/// phi_k reads Taylor coefficients of f(y) = P(1,y); psi_k those of g(x) = Q(x,1).
enum class LadderSide { phi, psi };

const char* to_string(LadderSide s);

/// phi(g) = f'(1). Throws NotALoop outside the commutator subgroup.
Coeff phi(const Word& w);
/// psi(g) = g'(1); equals -phi(g).
Coeff psi(const Word& w);

/// Values at level k. The raw Taylor coefficients are always reported, but
/// a level is only a conjugacy invariant (defined) when every lower level
/// on the same side vanishes.
struct LadderEntry {
  unsigned k = 0;
  Coeff phi;
  Coeff psi;
  bool phi_defined = false;
  bool psi_defined = false;
};

std::vector<LadderEntry> ladder(const Word& w, unsigned depth);

struct ObstructionHit {
  unsigned k = 0;
  Coeff value;
  LadderSide side = LadderSide::phi;

  bool odd() const { return mpz_odd_p(value.get_mpz_t()) != 0; }
  /// e.g. "phi_2 = -1"
  std::string str() const;
};

/// First defined nonzero level on each side within `depth`; the phi-side
/// hit (if any) comes first.
std::vector<ObstructionHit> first_obstruction(const std::vector<LadderEntry>& entries);
std::vector<ObstructionHit> first_obstruction(const Word& w, unsigned depth);

/// An odd first-nonzero level on either side proves w is not a product of
/// two squares.
std::optional<ObstructionHit> parity_obstruction(const Word& w, unsigned depth);

enum class ChainSide { P, Q };

const char* to_string(ChainSide s);

/// source = (x-1)^k (y-1)^l h with h divisible by neither factor.
struct FactorReport {
  unsigned k = 0;
  unsigned l = 0;
  Laurent2 h;
  Coeff h11;
  ChainSide source = ChainSide::P;

  bool obstructs() const { return mpz_odd_p(h11.get_mpz_t()) != 0; }
  /// The P-side criterion is the published statement; the Q side follows
  /// from the same argument but is an extension.
  bool derived_extension() const { return source == ChainSide::Q; }
};

class CriterionInapplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Throws NotALoop, or CriterionInapplicable when the chosen coefficient is 0.
FactorReport factor_criterion(const Word& w, ChainSide side = ChainSide::P);

enum class SideSelection { P, Q, both };

struct AnalysisOptions {
  unsigned depth = kDefaultDepth;
  std::optional<unsigned> bound;  // defaults to the word length
  SideSelection sides = SideSelection::both;
};

enum class VerdictKind { not_two_squares, two_squares, unknown };

const char* to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::unknown;
  std::string reason;
  std::optional<Witness> witness;  // set for two_squares
};

struct FactorOutcome {
  ChainSide side = ChainSide::P;
  std::optional<FactorReport> report;  // empty: coefficient is identically 0
};

struct ObstructionReport {
  Word word;
  ExponentSums expsums;
  bool loop = false;
  ChainPair chain;
  Laurent1 f;
  Laurent1 g;
  unsigned depth = kDefaultDepth;
  std::vector<LadderEntry> ladder;
  std::vector<ObstructionHit> first_obstruction;
  std::vector<FactorOutcome> factors;
  std::optional<SearchResult> search;  // skipped when already obstructed
  Verdict verdict;
};

/// Runs every applicable criterion and then the witness search.
/// Precedence: odd obstruction, then verified witness, else unknown.
ObstructionReport analyze(const Word& w, const AnalysisOptions& options = {});

}  // namespace f2sq

#endif  // F2SQ_OBSTRUCTIONS_HPP
