#include "f2sq/oracle.hpp"

#include <stdexcept>

namespace f2sq {

namespace {

void check_witness(const Witness& w, const Word& target) {
  if (witnessed_product(w) != target) {
    throw std::logic_error("witness does not reproduce " + target.str());
  }
}

}  // namespace

Word witnessed_product(const Witness& w) {
  if (w.form == WitnessForm::squares) return w.a * w.a * w.b * w.b;
  return w.a * invert(w.b) * w.a * w.b;
}

Witness squares_to_conjugates(const Witness& w) {
  if (w.form != WitnessForm::squares) throw std::invalid_argument("expected squares form");
  Witness out{w.a * w.b, w.b, WitnessForm::conjugates};
  check_witness(out, witnessed_product(w));
  return out;
}

Witness conjugates_to_squares(const Witness& w) {
  if (w.form != WitnessForm::conjugates) throw std::invalid_argument("expected conjugates form");
  Witness out{w.a * invert(w.b), w.b, WitnessForm::squares};
  check_witness(out, witnessed_product(w));
  return out;
}

ReducedWordEnumerator::ReducedWordEnumerator(unsigned max_length) : max_length_(max_length) {}

Word ReducedWordEnumerator::current() const {
  std::vector<Generator> letters;
  letters.reserve(ranks_.size());
  for (int r : ranks_) letters.push_back(kAllGenerators[r]);
  return Word(std::span<const Generator>(letters));
}

// Sets positions pos.. to the shortlex-least letters compatible with the
// prefix.
void ReducedWordEnumerator::fill_from(std::size_t pos) {
  for (std::size_t p = pos; p < ranks_.size(); ++p) {
    int r = 0;
    while (p > 0 && kAllGenerators[r].cancels(kAllGenerators[ranks_[p - 1]])) ++r;
    ranks_[p] = r;
  }
}

void ReducedWordEnumerator::advance() {
  if (done_) return;
  for (std::size_t p = ranks_.size(); p-- > 0;) {
    int r = ranks_[p] + 1;
    while (r < 4 && p > 0 && kAllGenerators[r].cancels(kAllGenerators[ranks_[p - 1]])) ++r;
    if (r < 4) {
      ranks_[p] = r;
      fill_from(p + 1);
      return;
    }
  }
  if (ranks_.size() >= max_length_) {
    done_ = true;
    return;
  }
  ranks_.resize(ranks_.size() + 1);
  fill_from(0);
}

std::vector<Word> enumerate_reduced(unsigned max_length) {
  std::vector<Word> out;
  for (ReducedWordEnumerator e(max_length); !e.done(); e.advance()) out.push_back(e.current());
  return out;
}

std::uint64_t reduced_word_count(unsigned max_length) {
  std::uint64_t total = 1;
  std::uint64_t layer = 4;
  for (unsigned n = 1; n <= max_length; ++n) {
    total += layer;
    layer *= 3;
  }
  return total;
}

SearchResult search_two_squares(const Word& g, unsigned bound) {
  SearchResult result;
  result.bound = bound;
  for (ReducedWordEnumerator e(bound); !e.done(); e.advance()) {
    ++result.checked;
    const Word a = e.current();
    const Word inv_a = invert(a);
    if (auto b = square_root(inv_a * inv_a * g)) {
      Witness w{a, *b, WitnessForm::squares};
      check_witness(w, g);
      result.witness = std::move(w);
      break;
    }
  }
  return result;
}

}  // namespace f2sq
