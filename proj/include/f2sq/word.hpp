#ifndef F2SQ_WORD_HPP
#define F2SQ_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace f2sq {

enum class Letter : std::uint8_t { x, y };

/// One of the four letters x, x^-1, y, y^-1.
struct Generator {
  Letter letter = Letter::x;
  bool inverted = false;

  constexpr Generator inverse() const { return {letter, !inverted}; }
  constexpr bool cancels(Generator other) const {
    return letter == other.letter && inverted != other.inverted;
  }
  /// 'x', 'X', 'y' or 'Y' (upper case is the inverse).
  char symbol() const;

  /// Shortlex letter order: x < X < y < Y.
  constexpr int rank() const {
    return 2 * static_cast<int>(letter) + (inverted ? 1 : 0);
  }
  friend constexpr bool operator==(Generator a, Generator b) {
    return a.letter == b.letter && a.inverted == b.inverted;
  }
  friend constexpr auto operator<=>(Generator a, Generator b) {
    return a.rank() <=> b.rank();
  }
};

inline constexpr Generator kX{Letter::x, false};
inline constexpr Generator kXInv{Letter::x, true};
inline constexpr Generator kY{Letter::y, false};
inline constexpr Generator kYInv{Letter::y, true};
inline constexpr Generator kAllGenerators[4] = {kX, kXInv, kY, kYInv};

/// Element of the free group on x, y. Always stored freely reduced, so
/// sequence equality is group equality.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Generator> letters);
  explicit Word(std::span<const Generator> letters);

  static Word generator(Generator g) { return Word({g}); }

  const std::vector<Generator>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Compact form such as "xyXY"; the identity prints as "e".
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Shortlex order.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Generator> letters_;
};

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
/// g h g^-1 h^-1
Word commutator(const Word& g, const Word& h);
/// h g h^-1
Word conjugate(const Word& g, const Word& h);
Word power(const Word& g, std::int64_t n);

inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

struct ExponentSums {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const ExponentSums&, const ExponentSums&) = default;
};

ExponentSums abelianize(const Word& g);
bool in_commutator_subgroup(const Word& g);

/// w = prefix * core * prefix^-1 with core cyclically reduced.
struct CyclicDecomposition {
  Word prefix;
  Word core;
};
CyclicDecomposition cyclic_decomposition(const Word& w);

/// The unique v with v*v == w, if one exists.
std::optional<Word> square_root(const Word& w);

/// Squares whose product is [g,h]: g^2 (g^-1 h)^2 (h^-1)^2.
struct ThreeSquares {
  Word first;
  Word second;
  Word third;
};
ThreeSquares three_squares(const Word& g, const Word& h);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar:
///   word := term* ; term := atom ('^' integer)? ;
///   atom := 'x' | 'y' | 'X' | 'Y' | 'e' | '(' word ')' | '[' word ',' word ']'
/// Whitespace is ignored; the empty string is the identity.
Word parse(std::string_view expr);

}  // namespace f2sq

#endif  // F2SQ_WORD_HPP
