#include "f2sq/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace f2sq {

namespace {

// Appends letters to an already reduced buffer, cancelling as it goes.
void append_reduced(std::vector<Generator>& out, std::span<const Generator> letters) {
  for (Generator g : letters) {
    if (!out.empty() && out.back().cancels(g)) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
}

}  // namespace

char Generator::symbol() const {
  if (letter == Letter::x) return inverted ? 'X' : 'x';
  return inverted ? 'Y' : 'y';
}

Word::Word(std::initializer_list<Generator> letters)
    : Word(std::span<const Generator>(letters.begin(), letters.size())) {}

Word::Word(std::span<const Generator> letters) {
  letters_.reserve(letters.size());
  append_reduced(letters_, letters);
}

std::string Word::str() const {
  if (letters_.empty()) return "e";
  std::string s;
  s.reserve(letters_.size());
  for (Generator g : letters_) s.push_back(g.symbol());
  return s;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

Word multiply(const Word& u, const Word& v) {
  std::vector<Generator> out;
  out.reserve(u.length() + v.length());
  out.assign(u.letters().begin(), u.letters().end());
  append_reduced(out, v.letters());
  // out is reduced already; the constructor's pass is a no-op.
  return Word(std::span<const Generator>(out));
}

Word invert(const Word& u) {
  std::vector<Generator> out;
  out.reserve(u.length());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::span<const Generator>(out));
}

Word commutator(const Word& g, const Word& h) {
  return g * h * invert(g) * invert(h);
}

Word conjugate(const Word& g, const Word& h) { return h * g * invert(h); }

CyclicDecomposition cyclic_decomposition(const Word& w) {
  const auto& letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo].cancels(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  return {Word(std::span<const Generator>(letters.data(), lo)),
          Word(std::span<const Generator>(letters.data() + lo, hi - lo))};
}

Word power(const Word& g, std::int64_t n) {
  if (n == 0 || g.empty()) return {};
  if (n < 0) return power(invert(g), -n);
  auto [prefix, core] = cyclic_decomposition(g);
  // core is cyclically reduced, so core^n needs no cancellation.
  std::vector<Generator> body;
  body.reserve(core.length() * static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    body.insert(body.end(), core.letters().begin(), core.letters().end());
  }
  return prefix * Word(std::span<const Generator>(body)) * invert(prefix);
}

ExponentSums abelianize(const Word& g) {
  ExponentSums s;
  for (Generator l : g.letters()) {
    std::int64_t d = l.inverted ? -1 : 1;
    (l.letter == Letter::x ? s.x : s.y) += d;
  }
  return s;
}

bool in_commutator_subgroup(const Word& g) { return abelianize(g) == ExponentSums{}; }

std::optional<Word> square_root(const Word& w) {
  auto [prefix, core] = cyclic_decomposition(w);
  const auto& c = core.letters();
  if (c.size() % 2 != 0) return std::nullopt;
  const std::size_t half = c.size() / 2;
  if (!std::equal(c.begin(), c.begin() + half, c.begin() + half)) return std::nullopt;
  Word t(std::span<const Generator>(c.data(), half));
  return prefix * t * invert(prefix);
}

ThreeSquares three_squares(const Word& g, const Word& h) {
  return {g, invert(g) * h, invert(h)};
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

constexpr std::size_t kMaxWordLength = std::size_t{1} << 26;

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Word parse_all() {
    Word w = parse_word();
    skip_space();
    if (pos_ != src_.size()) fail(std::string("unexpected '") + src_[pos_] + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool at_term_start() {
    skip_space();
    if (pos_ >= src_.size()) return false;
    char c = src_[pos_];
    return c == 'x' || c == 'y' || c == 'X' || c == 'Y' || c == 'e' || c == '(' || c == '[';
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= src_.size() || src_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Word parse_word() {
    Word w;
    while (at_term_start()) w = w * parse_term();
    return w;
  }

  Word parse_term() {
    Word base = parse_atom();
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == '^') {
      ++pos_;
      std::int64_t n = parse_exponent();
      auto magnitude = static_cast<std::size_t>(n < 0 ? -n : n);
      if (magnitude != 0 && base.length() > kMaxWordLength / magnitude) {
        fail("power too long");
      }
      return power(base, n);
    }
    return base;
  }

  std::int64_t parse_exponent() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) {
      negative = src_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      fail("expected integer exponent");
    }
    std::int32_t value = 0;
    const char* first = src_.data() + pos_;
    const char* last = src_.data() + src_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) {
      pos_ = start;
      fail("exponent overflow");
    }
    if (ec != std::errc() || ptr == first) fail("expected integer exponent");
    pos_ += static_cast<std::size_t>(ptr - first);
    return negative ? -static_cast<std::int64_t>(value) : value;
  }

  Word parse_atom() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    switch (c) {
      case 'x': ++pos_; return Word::generator(kX);
      case 'X': ++pos_; return Word::generator(kXInv);
      case 'y': ++pos_; return Word::generator(kY);
      case 'Y': ++pos_; return Word::generator(kYInv);
      case 'e': ++pos_; return {};
      case '(': {
        ++pos_;
        Word w = parse_word();
        expect(')');
        return w;
      }
      case '[': {
        ++pos_;
        Word u = parse_word();
        expect(',');
        Word v = parse_word();
        expect(']');
        return commutator(u, v);
      }
      default:
        fail(std::string("unexpected '") + c + "'");
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse(std::string_view expr) { return Parser(expr).parse_all(); }

}  // namespace f2sq
