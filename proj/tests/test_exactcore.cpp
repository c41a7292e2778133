#include <doctest.h>

#include "mcqc/laurent.hpp"
#include "mcqc/ratfun.hpp"
#include "mcqc/series.hpp"
#include "mcqc/tpoly.hpp"

using namespace mcqc;

TEST_CASE("rationals parse and print as p/q") {
  CHECK(parse_scalar("2/3") == Scalar(2, 3));
  CHECK(parse_scalar("-4/6") == Scalar(-2, 3));
  CHECK(parse_scalar(" 5 ") == Scalar(5));
  CHECK(to_string(Scalar(5)) == "5/1");
  CHECK(to_string(Scalar(-1, 2)) == "-1/2");
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
  CHECK_THROWS_AS(parse_scalar("x"), Error);
  CHECK_THROWS_AS(parse_scalar("1/-2"), Error);
}

TEST_CASE("q parameter keeps half-integer powers rational") {
  QParam qp(Scalar(2, 3));
  CHECK(qp.q() == power(Scalar(2, 3), 8));
  CHECK(qp.q_half_pow(1) * qp.q_half_pow(1) == qp.q());
  CHECK(qp.qpochhammer(2) == (1 - qp.q()) * (1 - qp.q_pow(2)));
  CHECK_THROWS_AS(QParam(Scalar(1)), Error);
  CHECK_THROWS_AS(QParam(Scalar(-1)), Error);
  CHECK_THROWS_AS(QParam(Scalar(0)), Error);
  CHECK_THROWS_AS(power(Scalar(0), -1), Error);
}

TEST_CASE("graded series truncate at the smaller cutoff") {
  auto a = GradedSeries<Scalar>::from_coefficients({1, 1, 1, 1}, 3);  // 1/(1-G) through G^3
  auto b = GradedSeries<Scalar>::from_coefficients({1, -1}, 5);
  auto p = a * b;
  CHECK(p.cutoff() == 3);
  CHECK(p[0] == 1);
  CHECK(p[1] == 0);
  CHECK(p[3] == 0);
  CHECK_THROWS_AS(p[4], Error);
  auto s = a.shifted(2);
  CHECK(s[2] == 1);
  CHECK(s[1] == 0);
  CHECK(s.cutoff() == 3);
}

TEST_CASE("coupling polynomials truncate in weighted degree") {
  auto space = TSpace::couplings("t", 2, 2);
  TPoly t1 = TPoly::variable(space, 0), t2 = TPoly::variable(space, 1);
  TPoly p = (1 + t1) * (1 + t1) * (1 + t1);
  CHECK(p.coefficient({2, 0}) == 3);
  CHECK(p.coefficient({3, 0}) == 0);
  CHECK((t1 * t1 * t2).is_zero());
  CHECK(p.zero_out({0}) == TPoly(Scalar(1)));

  // exp(t1) through degree 2
  TPoly e = tpoly_exp(t1);
  CHECK(e.coefficient({2, 0}) == Scalar(1, 2));

  // A derivative lowers the window; sums with it land in the lower window.
  TPoly d = p.derivative(0);
  CHECK(d.cutoff() == 1);
  TPoly mix = p - d;
  CHECK(mix.cutoff() == 1);
  CHECK(mix.coefficient({2, 0}) == 0);
  CHECK(mix.coefficient({1, 0}) == 3 - 6);
}

TEST_CASE("laurent windows track the trusted top") {
  auto a = LaurentX::from_coefficients(-1, {Scalar(1), Scalar(2), Scalar(3)}, 4);
  auto b = LaurentX::monomial(Scalar(1), 2, 3);
  auto c = a * b;
  CHECK(c.lo() == 1);
  CHECK(c.top() == std::min(4 + 2, 3 - 1));
  CHECK(c.coeff(1) == 1);
  CHECK_THROWS_AS(c.coeff(c.top() + 1), Error);

  // exp(log(1 + x)) = 1 + x
  auto one_plus_x = LaurentX::from_coefficients(0, {Scalar(1), Scalar(1)});
  auto back = series_exp(series_log(one_plus_x, 6), 6);
  CHECK(back.coeff(0) == 1);
  CHECK(back.coeff(1) == 1);
  for (int n = 2; n <= 6; ++n) CHECK(back.coeff(n) == 0);

  auto inv = series_inverse(one_plus_x, 5);
  for (int n = 0; n <= 5; ++n) CHECK(inv.coeff(n) == (n % 2 == 0 ? 1 : -1));
}

TEST_CASE("rational functions reduce and evaluate") {
  RatFun x = RatFun::variable();
  RatFun f = (x * x - RatFun(1)) / (x - RatFun(1));
  CHECK(f == x + RatFun(1));
  CHECK(f.eval(Scalar(3)) == 4);
  CHECK(f.shifted_arg(Scalar(1)).eval(Scalar(0)) == 2);
  CHECK(f.scaled_arg(Scalar(2)).eval(Scalar(1)) == 3);
  RatFun g = RatFun::linear_fraction(Scalar(1), Scalar(-1), Scalar(1), Scalar(1));  // (1-x)/(1+x)
  auto l = g.to_laurent(4);
  CHECK(l.coeff(0) == 1);
  CHECK(l.coeff(1) == -2);
  CHECK(l.coeff(2) == 2);
  CHECK(l.coeff(3) == -2);
}
