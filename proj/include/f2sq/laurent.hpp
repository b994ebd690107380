#ifndef F2SQ_LAURENT_HPP
#define F2SQ_LAURENT_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace f2sq {

using Coeff = mpz_class;

/// Exponent pair (i, j) of the monomial x^i y^j, ordered lexicographically.
struct Exp2 {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend bool operator==(const Exp2&, const Exp2&) = default;
  friend auto operator<=>(const Exp2&, const Exp2&) = default;
  friend Exp2 operator+(Exp2 a, Exp2 b) { return {a.i + b.i, a.j + b.j}; }
  friend Exp2 operator-(Exp2 a, Exp2 b) { return {a.i - b.i, a.j - b.j}; }
};

/// Sparse Laurent polynomial with integer coefficients. The term map never
/// holds a zero coefficient, so the zero polynomial is the empty map and
/// equality of values is equality of maps.
template <typename Exponent>
class Laurent {
 public:
  using Terms = std::map<Exponent, Coeff>;

  Laurent() = default;
  Laurent(Exponent e, Coeff c) { add_term(e, std::move(c)); }
  explicit Laurent(Terms terms) {
    for (auto& [e, c] : terms) add_term(e, std::move(c));
  }

  static Laurent constant(Coeff c) { return Laurent(Exponent{}, std::move(c)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// Adds c * monomial(e), dropping the entry if it cancels.
  void add_term(const Exponent& e, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(const Laurent& a) {
    Laurent r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    }
    return r;
  }
  friend Laurent operator*(const Coeff& s, const Laurent& a) {
    Laurent r;
    for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
    return r;
  }
  friend bool operator==(const Laurent&, const Laurent&) = default;

  /// Multiplication by the unit monomial with exponent `shift`.
  Laurent shifted(const Exponent& shift) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + shift, c);
    return r;
  }

 private:
  Terms terms_;
};

using Laurent1 = Laurent<std::int64_t>;
using Laurent2 = Laurent<Exp2>;

/// Monomials x^a y^b and t^n.
inline Laurent2 monomial(std::int64_t a, std::int64_t b, Coeff c = 1) {
  return Laurent2(Exp2{a, b}, std::move(c));
}
inline Laurent1 monomial1(std::int64_t n, Coeff c = 1) { return Laurent1(n, std::move(c)); }

/// p * x^a y^b
Laurent2 monomial_mul(const Laurent2& p, std::int64_t a, std::int64_t b);

/// P(1, y), returned as a polynomial in y.
Laurent1 substitute_x1(const Laurent2& p);
/// P(x, 1), returned as a polynomial in x.
Laurent1 substitute_y1(const Laurent2& p);

/// P(1, 1)
Coeff eval11(const Laurent2& p);
/// f(1)
Coeff eval1(const Laurent1& f);

/// f^(k)(1) / k!, computed as sum_n c_n * binom(n, k) with the generalized
/// binomial for negative n. Always an integer.
Coeff taylor_coeff(const Laurent1& f, unsigned k);

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by the zero polynomial") {}
};

/// q with q * d == p, or nullopt when d does not divide p in Z[x^+-1, y^+-1].
/// Throws DivisionByZero for d == 0.
std::optional<Laurent2> divide_exact(const Laurent2& p, const Laurent2& d);

/// Quotients by x - 1 and y - 1 via slice-wise synthetic division.
std::optional<Laurent2> divide_by_x_minus_1(const Laurent2& p);
std::optional<Laurent2> divide_by_y_minus_1(const Laurent2& p);

/// p = (x-1)^k (y-1)^l h with k, l maximal.
struct UnitStrip {
  unsigned k = 0;
  unsigned l = 0;
  Laurent2 h;
};

class DegeneratePolynomial : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Throws DegeneratePolynomial on the zero polynomial.
UnitStrip strip_units(const Laurent2& p);

/// Terms in increasing (i, j) order, e.g. "-1 + x - x*y"; zero prints "0".
std::string to_string(const Laurent2& p);
/// Terms in increasing exponent order using the variable name `var`.
std::string to_string(const Laurent1& f, char var);

}  // namespace f2sq

#endif  // F2SQ_LAURENT_HPP
