#include <doctest.h>

#include "mcqc/partfun.hpp"
#include "mcqc/qcurve.hpp"

using namespace mcqc;

TEST_CASE("product and sum forms of A agree") {
  QParam qp(Scalar(2, 3));
  auto prod = build_A(AForm::Product, qp);
  auto sum = build_A(AForm::Sum, qp);
  CHECK(prod == sum);
  auto cmp = compare_operators(prod, sum, 3, 7);
  CHECK(cmp.normal_forms_equal);
  CHECK(cmp.witness_equal);
  // a genuinely different operator is told apart
  auto off = sum + QDiffOp::term(RatFun(Scalar(1, 1000)), 0, 1);
  auto bad = compare_operators(prod, off, 3, 7);
  CHECK_FALSE(bad.normal_forms_equal);
  CHECK_FALSE(bad.witness_equal);
}

TEST_CASE("q-difference composition") {
  QParam qp(Scalar(2, 3));
  const RatFun x = RatFun::variable();
  // (x σ) ∘ (x σ) = x (q x) σ²
  auto a = QDiffOp::term(x, 1);
  auto c = compose(a, a, qp);
  REQUIRE(c.terms().size() == 1);
  CHECK(c.terms().begin()->first == QDiffOp::Key{0, 2});
  CHECK(c.terms().begin()->second == x * x * RatFun(qp.q()));
}

TEST_CASE("quantum curve residual, symbolic and pointwise") {
  QParam qp(Scalar(2, 3));
  auto res = qcurve_residual(3, qp);
  REQUIRE(res.size() == 4);
  for (const auto& r : res) CHECK(r.zero);

  // Oracle straight from the sum form, with Z evaluated by numeric insertion:
  // (1-q^{1/2}x)Z_n(qx) + q^{1/2}x Z_n(x) + q^{1/2}x Z_{n-1}(x)
  //   + x²/(1-q^{-1/2}x) Z_{n-1}(x/q) - Z_n(x) = 0
  const Scalar x0(1, 7), q = qp.q(), h = qp.q_half_pow(1), hi = qp.q_half_pow(-1);
  auto Z = [&](const Scalar& y) { return z5d(ZSpec{{}, 0, {y}, 3}, qp); };
  auto z0 = Z(x0), zq = Z(q * x0), zi = Z(x0 / q);
  for (int n = 0; n <= 3; ++n) {
    auto c = [](const GradedSeries<TPoly>& s, int m) { return m < 0 ? Scalar(0) : s[m].constant_term(); };
    Scalar v = (1 - h * x0) * c(zq, n) + h * x0 * c(z0, n) + h * x0 * c(z0, n - 1) +
               x0 * x0 / (1 - hi * x0) * c(zi, n - 1) - c(z0, n);
    CHECK(v == 0);
    CHECK(qcurve_bracket_at(n, x0, qp) == 0);
  }
}

TEST_CASE("kac-schwarz eigenfunctions") {
  QParam qp(Scalar(2, 3));
  auto r = kac_schwarz_check(2, 8, 2, qp);
  CHECK(r.pass);
  CHECK(r.window_lo == -2);
  CHECK(r.window_hi == 8);
  CHECK(r.constant_uniform);
  CHECK(r.constant == Scalar(2, 3));
}

TEST_CASE("4D difference equation") {
  const Scalar hbar(1);
  for (const auto& r : residual_4d(4, hbar)) CHECK(r.zero);

  const RatFun X = RatFun::variable();
  const RatFun h(hbar);
  CHECK(((X - h) * ((X - RatFun(2) * h) / (X - h) - (X - h) / X) + h * h / X).is_zero());

  // pointwise oracle: (X-ħ)(Z_n(X-ħ) - Z_n(X)) + ħ²/X Z_{n-1}(X+ħ) = 0
  const Scalar X0(13, 3), hb(1, 2);
  auto Z = [&](const Scalar& y) { return z4d(ZSpec{{}, 0, {y}, 4}, hb); };
  auto a = Z(X0 - hb), b = Z(X0), c = Z(X0 + hb);
  for (int n = 0; n <= 4; ++n) {
    Scalar v = (X0 - hb) * (a[n].constant_term() - b[n].constant_term());
    if (n > 0) v += hb * hb / X0 * c[n - 1].constant_term();
    CHECK(v == 0);
  }
}
