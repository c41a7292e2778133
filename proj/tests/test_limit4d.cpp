#include <doctest.h>

#include <cmath>

#include "mcqc/limit4d.hpp"
#include "mcqc/schur.hpp"

using namespace mcqc;

TEST_CASE("exponential R-series") {
  auto e = r_exp(Scalar(3), 5);
  Scalar fact = 1;
  for (int n = 0; n <= 5; ++n) {
    if (n > 0) fact *= n;
    CHECK(e.coeff(n) == power(Scalar(3), n) / fact);
  }
  auto m = r_one_minus_exp(Scalar(2), 3);
  CHECK(m.coeff(0) == 0);
  CHECK(m.coeff(1) == -2);
}

TEST_CASE("finite differences of the potentials") {
  for (const auto& lam : enumerate_partitions(3)) {
    for (int k = 1; k <= 3; ++k) {
      auto c = phi_finite_diff_check(lam, k, Scalar(1), 4);
      CHECK_MESSAGE(c.pass, c.name, " ", c.detail);
    }
  }
  // φ_1((1)) = q - 1 = e^{-Rħ} - 1 → -ħ R, so R^1 carries φ4D_1 (-ħ)^1
  auto s = phi_finite_diff(Partition({1}), 1, Scalar(2), 3);
  CHECK(s.lo() >= 1);
  CHECK(s.coeff(1) == Scalar(phi4d_k(Partition({1}), 1)) * -2);
}

TEST_CASE("per-partition weight limits") {
  RSubstitution sub;
  for (const auto& lam : enumerate_partitions(3)) {
    auto c = weight_limit_check(lam, Scalar(5), sub);
    CHECK_MESSAGE(c.pass, c.name, " ", c.detail);
  }
}

TEST_CASE("potential limit with finitely supported T") {
  const std::vector<Scalar> T{Scalar(1, 2), Scalar(0), Scalar(-1, 3)};
  for (const auto& lam : enumerate_partitions(3)) {
    auto c = potential_limit_check(lam, T, Scalar(1), 4);
    CHECK_MESSAGE(c.pass, c.name, " ", c.detail);
  }
}

TEST_CASE("operator limit") {
  RSubstitution sub;
  const RatFun X = RatFun::variable();
  auto c = operator_limit_check(X * X + RatFun(1), {Scalar(5), Scalar(7, 3)}, sub);
  CHECK(c.pass);
  CHECK_THROWS_AS(operator_limit_series(RatFun(1), Scalar(0), sub), Error);
}

TEST_CASE("numeric convergence is linear in R") {
  auto r = numeric_rate(3, 5.0, 1.0, 1.0, {1e-2, 1e-3, 1e-4});
  CHECK_FALSE(r.loss_of_precision);
  CHECK(std::abs(r.slope - 1.0) < 0.1);
  REQUIRE(r.errors.size() == 3);
  CHECK(r.errors[0] > r.errors[1]);
  CHECK(r.errors[1] > r.errors[2]);
}
