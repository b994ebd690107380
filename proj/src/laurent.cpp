#include "f2sq/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace f2sq {

Laurent2 monomial_mul(const Laurent2& p, std::int64_t a, std::int64_t b) {
  return p.shifted(Exp2{a, b});
}

Laurent1 substitute_x1(const Laurent2& p) {
  Laurent1 f;
  for (const auto& [e, c] : p.terms()) f.add_term(e.j, c);
  return f;
}

Laurent1 substitute_y1(const Laurent2& p) {
  Laurent1 g;
  for (const auto& [e, c] : p.terms()) g.add_term(e.i, c);
  return g;
}

Coeff eval11(const Laurent2& p) {
  Coeff s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

Coeff eval1(const Laurent1& f) {
  Coeff s = 0;
  for (const auto& [e, c] : f.terms()) s += c;
  return s;
}

Coeff taylor_coeff(const Laurent1& f, unsigned k) {
  Coeff total = 0;
  Coeff n;
  Coeff binom;
  for (const auto& [e, c] : f.terms()) {
    n = static_cast<long>(e);
    // mpz_bin_ui handles negative n via binom(-n, k) = (-1)^k binom(n+k-1, k).
    mpz_bin_ui(binom.get_mpz_t(), n.get_mpz_t(), k);
    total += c * binom;
  }
  return total;
}

namespace {

struct Box {
  std::int64_t min_i = std::numeric_limits<std::int64_t>::max();
  std::int64_t max_i = std::numeric_limits<std::int64_t>::min();
  std::int64_t min_j = std::numeric_limits<std::int64_t>::max();
  std::int64_t max_j = std::numeric_limits<std::int64_t>::min();
};

Box bounding_box(const Laurent2& p) {
  Box b;
  for (const auto& [e, c] : p.terms()) {
    b.min_i = std::min(b.min_i, e.i);
    b.max_i = std::max(b.max_i, e.i);
    b.min_j = std::min(b.min_j, e.j);
    b.max_j = std::max(b.max_j, e.j);
  }
  return b;
}

}  // namespace

std::optional<Laurent2> divide_exact(const Laurent2& p, const Laurent2& d) {
  if (d.is_zero()) throw DivisionByZero();
  if (p.is_zero()) return Laurent2{};

  // Z[x,y] is a domain, so the extreme x- and y-degrees of a product add.
  // Any exact quotient therefore lives in this box, and a quotient term
  // outside it means d does not divide p.
  const Box bp = bounding_box(p);
  const Box bd = bounding_box(d);
  const Box bq{bp.min_i - bd.min_i, bp.max_i - bd.max_i, bp.min_j - bd.min_j,
               bp.max_j - bd.max_j};
  if (bq.min_i > bq.max_i || bq.min_j > bq.max_j) return std::nullopt;

  const auto& [lead_e, lead_c] = *d.terms().rbegin();
  Laurent2 rem = p;
  Laurent2 quot;
  // Each step cancels the lex-leading term of the remainder, so quotient
  // exponents strictly decrease and stay inside a finite box.
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    const Exp2 qe = re - lead_e;
    if (qe.i < bq.min_i || qe.i > bq.max_i || qe.j < bq.min_j || qe.j > bq.max_j) {
      return std::nullopt;
    }
    Coeff qc = rc / lead_c;
    Laurent2 step(qe, qc);
    rem -= step * d;
    quot.add_term(qe, qc);
  }
  return quot;
}

namespace {

// Synthetic division of every slice by (t - 1), where t is the coordinate
// selected by `along`. A slice s = sum c_t t^e is divisible iff sum c_t = 0;
// the quotient coefficients are the negated running sums.
template <typename Along>
std::optional<Laurent2> divide_by_unit_minus_1(const Laurent2& p, Along along) {
  // Group terms into slices keyed by the other coordinate.
  std::map<std::int64_t, std::map<std::int64_t, Coeff>> slices;
  for (const auto& [e, c] : p.terms()) {
    auto [slice, pos] = along(e);
    slices[slice].emplace(pos, c);
  }
  Laurent2 q;
  for (const auto& [slice, coeffs] : slices) {
    Coeff running = 0;
    auto it = coeffs.begin();
    std::int64_t e = it->first;
    const std::int64_t last = coeffs.rbegin()->first;
    // q_e = -(c_lo + ... + c_e) for e in [lo, last - 1].
    for (; e < last; ++e) {
      if (it != coeffs.end() && it->first == e) {
        running += it->second;
        ++it;
      }
      if (running != 0) {
        const auto [i, j] = along.unpack(slice, e);
        q.add_term(Exp2{i, j}, -running);
      }
    }
    running += coeffs.rbegin()->second;
    if (running != 0) return std::nullopt;
  }
  return q;
}

struct AlongX {
  std::pair<std::int64_t, std::int64_t> operator()(const Exp2& e) const { return {e.j, e.i}; }
  std::pair<std::int64_t, std::int64_t> unpack(std::int64_t slice, std::int64_t pos) const {
    return {pos, slice};
  }
};

struct AlongY {
  std::pair<std::int64_t, std::int64_t> operator()(const Exp2& e) const { return {e.i, e.j}; }
  std::pair<std::int64_t, std::int64_t> unpack(std::int64_t slice, std::int64_t pos) const {
    return {slice, pos};
  }
};

}  // namespace

std::optional<Laurent2> divide_by_x_minus_1(const Laurent2& p) {
  return divide_by_unit_minus_1(p, AlongX{});
}

std::optional<Laurent2> divide_by_y_minus_1(const Laurent2& p) {
  return divide_by_unit_minus_1(p, AlongY{});
}

UnitStrip strip_units(const Laurent2& p) {
  if (p.is_zero()) throw DegeneratePolynomial("strip_units: zero polynomial");
  UnitStrip s{0, 0, p};
  while (substitute_x1(s.h).is_zero()) {
    s.h = *divide_by_x_minus_1(s.h);
    ++s.k;
  }
  while (substitute_y1(s.h).is_zero()) {
    s.h = *divide_by_y_minus_1(s.h);
    ++s.l;
  }
  return s;
}

namespace {

void append_power(std::ostringstream& os, char var, std::int64_t e) {
  os << var;
  if (e != 1) os << '^' << e;
}

void append_term(std::ostringstream& os, bool first, const Coeff& c, const std::string& mono) {
  const bool negative = c < 0;
  Coeff mag = abs(c);
  if (first) {
    if (negative) os << '-';
  } else {
    os << (negative ? " - " : " + ");
  }
  if (mono.empty()) {
    os << mag;
  } else {
    if (mag != 1) os << mag << '*';
    os << mono;
  }
}

}  // namespace

std::string to_string(const Laurent2& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::ostringstream mono;
    if (e.i != 0) append_power(mono, 'x', e.i);
    if (e.i != 0 && e.j != 0) mono << '*';
    if (e.j != 0) append_power(mono, 'y', e.j);
    append_term(os, first, c, mono.str());
    first = false;
  }
  return os.str();
}

std::string to_string(const Laurent1& f, char var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    std::ostringstream mono;
    if (e != 0) append_power(mono, var, e);
    append_term(os, first, c, mono.str());
    first = false;
  }
  return os.str();
}

}  // namespace f2sq
