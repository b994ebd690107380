#include "doctest.h"

#include "f2sq/laurent.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace f2sq;
using f2sq::testing::Gen;

namespace {
const Laurent2 one = Laurent2::constant(1);
const Laurent2 x = monomial(1, 0);
const Laurent2 y = monomial(0, 1);
const Laurent1 t = monomial1(1);
const Laurent1 one1 = Laurent1::constant(1);
}  // namespace

TEST_CASE("ring operations normalize") {
  CHECK(((x - one) + (one - x)).is_zero());
  CHECK((one - y) * (one + y) == one - y * y);
  CHECK((one + x) * (one - y) == one + x - y - x * y);
  CHECK((x - x).terms().empty());
  CHECK(-(one - y) == y - one);
  CHECK(Coeff(3) * (x - one) == x + x + x - one - one - one);
}

TEST_CASE("monomial_mul shifts every exponent") {
  CHECK(monomial_mul(one - y, 0, 1) == y - y * y);
  CHECK(monomial_mul(x - one, 0, 0) == x - one);
  CHECK(monomial_mul(x - one, -1, 0) == one - monomial(-1, 0));
}

TEST_CASE("substitutions and evaluation") {
  CHECK(substitute_x1((one + x) * (one - y)) == Laurent1::constant(2) - Coeff(2) * t);
  CHECK(substitute_x1(x - one).is_zero());
  CHECK(substitute_x1(one - y) == one1 - t);
  CHECK(substitute_y1(x - one) == t - one1);
  CHECK(substitute_y1(one - y).is_zero());
  CHECK(substitute_y1((one + y) * (x * x - one)) == Coeff(2) * t * t - Laurent1::constant(2));

  CHECK(eval11(one - y) == 0);
  CHECK(eval11(one + monomial(1, -1)) == 2);
  CHECK(eval11(Laurent2{}) == 0);
}

TEST_CASE("taylor_coeff") {
  CHECK(taylor_coeff(one1 - t, 1) == -1);
  CHECK(taylor_coeff(monomial1(-1), 2) == 1);
  CHECK(f2sq::testing::taylor_by_differentiation(monomial1(-1), 2) == 1);
  const Laurent1 f = Coeff(3) * monomial1(-2) - Coeff(5) * t * t + Laurent1::constant(7);
  CHECK(taylor_coeff(f, 0) == eval1(f));
  CHECK(taylor_coeff(f, 0) == 5);
  CHECK(taylor_coeff(Laurent1{}, 4) == 0);
  // y^-1 - 1 = sum_k (-1)^k (y-1)^k: the tail never terminates.
  const Laurent1 tail = monomial1(-1) - one1;
  for (unsigned k = 1; k <= 8; ++k) CHECK(taylor_coeff(tail, k) == (k % 2 ? -1 : 1));
}

TEST_CASE("property: taylor_coeff matches repeated differentiation") {
  for (std::int64_t n = -8; n <= 8; ++n) {
    for (unsigned k = 0; k <= 6; ++k) {
      REQUIRE(taylor_coeff(monomial1(n), k) ==
              f2sq::testing::taylor_by_differentiation(monomial1(n), k));
    }
  }
  Gen gen(11);
  for (int i = 0; i < 500; ++i) {
    Laurent1 f = gen.laurent1();
    for (unsigned k = 0; k <= 6; ++k) {
      REQUIRE(taylor_coeff(f, k) == f2sq::testing::taylor_by_differentiation(f, k));
    }
  }
}

TEST_CASE("divide_exact") {
  CHECK(divide_exact((x - one) * (y - one), x - one) == y - one);
  CHECK(divide_exact(one - y * y, one + y) == one - y);
  CHECK_FALSE(divide_exact(one - y, x - one).has_value());
  CHECK(divide_exact(Laurent2{}, x - one) == Laurent2{});
  CHECK_FALSE(divide_exact(Coeff(3) * x, Coeff(2) * one).has_value());
  CHECK(divide_exact(monomial(-3, 2), monomial(1, -1)) == monomial(-4, 3));
  CHECK_THROWS_AS(divide_exact(one, Laurent2{}), DivisionByZero);

  const Laurent2 e = one + monomial(2, -1);
  CHECK(divide_exact(e * (x - y) * monomial(-5, 7), e) == (x - y) * monomial(-5, 7));
  CHECK_FALSE(divide_exact(e * (x - y) + one, e).has_value());
}

TEST_CASE("synthetic division by x-1 and y-1") {
  CHECK(divide_by_x_minus_1((x - one) * (y - one)) == y - one);
  CHECK(divide_by_y_minus_1((x - one) * (y - one)) == x - one);
  CHECK_FALSE(divide_by_x_minus_1(one - y).has_value());
  CHECK(divide_by_y_minus_1(monomial(0, -2) - monomial(0, 3)) ==
        -(monomial(0, -2) + monomial(0, -1) + one + y + y * y));
}

TEST_CASE("strip_units") {
  auto s = strip_units(one - y);
  CHECK(s.k == 0);
  CHECK(s.l == 1);
  CHECK(s.h == -one);

  s = strip_units((one + x) * (one - y));
  CHECK(s.k == 0);
  CHECK(s.l == 1);
  CHECK(s.h == -(one + x));

  s = strip_units(-(x - one) * (y - one) * (y - one));
  CHECK(s.k == 1);
  CHECK(s.l == 2);
  CHECK(s.h == -one);

  CHECK_THROWS_AS(strip_units(Laurent2{}), DegeneratePolynomial);
}

TEST_CASE("display") {
  CHECK(to_string(-one + x - x * y) == "-1 + x - x*y");
  CHECK(to_string(Laurent2{}) == "0");
  CHECK(to_string(Coeff(2) * monomial(-1, 3) + Coeff(-3) * monomial(0, -2)) ==
        "2*x^-1*y^3 - 3*y^-2");
  CHECK(to_string(one1 - t, 'y') == "1 - y");
  CHECK(to_string(Coeff(-2) * monomial1(-1), 'x') == "-2*x^-1");
  Coeff big("123456789012345678901234567890");
  CHECK(to_string(Laurent2::constant(big) * y) == "123456789012345678901234567890*y");
}

TEST_CASE("property: ring laws") {
  Gen gen(12);
  for (int i = 0; i < 500; ++i) {
    Laurent2 a = gen.laurent2(), b = gen.laurent2(), c = gen.laurent2();
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
    REQUIRE(a + b == b + a);
    REQUIRE((a - a).is_zero());
    const Laurent2 sum = a * b + c;
    for (const auto& [e, coeff] : sum.terms()) REQUIRE(coeff != 0);
  }
}

TEST_CASE("property: exact division round-trips") {
  Gen gen(13);
  for (int i = 0; i < 500; ++i) {
    Laurent2 p = gen.laurent2(), d = gen.laurent2(4, 2, 3);
    if (d.is_zero()) continue;
    REQUIRE(divide_exact(p * d, d) == p);
    REQUIRE(divide_by_x_minus_1(p * (x - one)) == p);
    REQUIRE(divide_by_y_minus_1(p * (y - one)) == p);
    if (auto q = divide_exact(p, d)) REQUIRE(*q * d == p);
    // The slice-wise division agrees with general division.
    REQUIRE(divide_by_x_minus_1(p) == divide_exact(p, x - one));
  }
}

TEST_CASE("property: strip_units is maximal and exact") {
  Gen gen(14);
  for (int i = 0; i < 500; ++i) {
    Laurent2 h = gen.laurent2();
    if (h.is_zero()) continue;
    const unsigned k = gen.uniform(0, 3), l = gen.uniform(0, 3);
    Laurent2 p = h;
    for (unsigned n = 0; n < k; ++n) p = p * (x - one);
    for (unsigned n = 0; n < l; ++n) p = p * (y - one);
    auto s = strip_units(p);
    REQUIRE(s.k >= k);
    REQUIRE(s.l >= l);
    REQUIRE_FALSE(divide_exact(s.h, x - one).has_value());
    REQUIRE_FALSE(divide_exact(s.h, y - one).has_value());
    Laurent2 back = s.h;
    for (unsigned n = 0; n < s.k; ++n) back = back * (x - one);
    for (unsigned n = 0; n < s.l; ++n) back = back * (y - one);
    REQUIRE(back == p);
  }
}
