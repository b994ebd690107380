#ifndef F2SQ_ORACLE_HPP
#define F2SQ_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "f2sq/word.hpp"

namespace f2sq {

enum class WitnessForm {
  squares,     // target = a^2 b^2
  conjugates,  // target = a (b^-1 a b)
};

struct Witness {
  Word a;
  Word b;
  WitnessForm form = WitnessForm::squares;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// The element a witness claims to produce.
Word witnessed_product(const Witness& w);

/// a^2 b^2 = (ab) (b^-1 (ab) b): c = ab, d = b.
Witness squares_to_conjugates(const Witness& w);
/// c (d^-1 c d) = (c d^-1)^2 d^2: a = c d^-1, b = d.
Witness conjugates_to_squares(const Witness& w);

/// Every freely reduced word of length <= max_length, in shortlex order.
class ReducedWordEnumerator {
 public:
  explicit ReducedWordEnumerator(unsigned max_length);

  /// Current word; valid until done().
  Word current() const;
  bool done() const { return done_; }
  void advance();

 private:
  void fill_from(std::size_t pos);

  unsigned max_length_;
  std::vector<int> ranks_;
  bool done_ = false;
};

std::vector<Word> enumerate_reduced(unsigned max_length);

/// Number of reduced words of length <= max_length: 1 + sum 4*3^(n-1).
std::uint64_t reduced_word_count(unsigned max_length);

struct SearchResult {
  std::optional<Witness> witness;  // squares form
  std::uint64_t checked = 0;       // candidates a examined
  unsigned bound = 0;
};

/// Tries every reduced a with |a| <= bound in shortlex order and solves for
/// b as the square root of a^-2 g. The first hit is returned. No hit only
/// means no witness with |a| <= bound exists.
SearchResult search_two_squares(const Word& g, unsigned bound);

}  // namespace f2sq

#endif  // F2SQ_ORACLE_HPP
