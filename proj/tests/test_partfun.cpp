#include <doctest.h>

#include "mcqc/partfun.hpp"
#include "mcqc/schur.hpp"

using namespace mcqc;

TEST_CASE("low-degree coefficients of Z") {
  QParam qp(Scalar(2, 3));
  const Scalar q = qp.q();
  auto z = z5d(ZSpec{{}, 0, {}, 2}, qp);
  CHECK(z[0] == TPoly(Scalar(1)));
  CHECK(z[1] == TPoly(q / ((1 - q) * (1 - q))));

  auto zx = z5d_x(2, qp);
  const RatFun expect = RatFun(q / ((1 - q) * (1 - q))) *
                        RatFun::linear_fraction(Scalar(1), -qp.q_half_pow(1), Scalar(1), -qp.q_half_pow(-1));
  CHECK(zx[1] == expect);
  CHECK(zx[0] == RatFun(1));
  // Z(x) at x = 0 is the undeformed sum
  for (int n = 0; n <= 2; ++n) CHECK(zx[n].eval(Scalar(0)) == z[n].constant_term());
}

TEST_CASE("numeric insertions agree with Z(x) and are symmetric") {
  QParam qp(Scalar(2, 3));
  const Scalar a(1, 5), b(-3, 7);
  auto zx = z5d_x(3, qp);
  auto za = z5d(ZSpec{{}, 0, {a}, 3}, qp);
  for (int n = 0; n <= 3; ++n) CHECK(za[n].constant_term() == zx[n].eval(a));
  auto zab = z5d(ZSpec{{}, 0, {a, b}, 3}, qp);
  auto zba = z5d(ZSpec{{}, 0, {b, a}, 3}, qp);
  for (int n = 0; n <= 3; ++n) CHECK(zab[n] == zba[n]);
  CHECK_THROWS_AS(z5d(ZSpec{{}, 0, {qp.q_half_pow(1)}, 2}, qp), Error);
}

TEST_CASE("t-x substitution reproduces the expansion of Z(x)") {
  // t_k = -q^{-k/2} (x0 s)^k / k with a formal s: Z(t(s)) through s^d equals
  // the Taylor coefficients of Z(x0 s).
  QParam qp(Scalar(2, 3));
  const int d = 4, N = 3;
  const Scalar x0(1, 5);
  auto space = TSpace::couplings("s", 1, d);
  const TPoly s = TPoly::variable(space, 0);
  std::vector<TPoly> t;
  for (int k = 1; k <= d; ++k) t.push_back(TPoly::variable(space, 0, -qp.q_half_pow(-k) * power(x0, k) / k, k));
  auto zt = z5d(ZSpec{t, 0, {}, N}, qp);
  auto ex = expand_in_x(z5d_x(N, qp), d);
  for (int n = 0; n <= N; ++n) {
    for (int m = 0; m <= d; ++m) CHECK(zt[n].coefficient({m}) == ex[n].coeff(m) * power(x0, m));
  }
  (void)s;
}

TEST_CASE("4D sums") {
  const Scalar hbar(1);
  auto z = z4d(ZSpec{{}, 0, {}, 3}, hbar);
  CHECK(z[0] == TPoly(Scalar(1)));
  CHECK(z[1] == TPoly(Scalar(1)));
  CHECK(z[2] == TPoly(Scalar(1, 2)));  // Σ_{|λ|=2} (dim λ/2!)^2
  auto zx = z4d_x(2, hbar);
  const RatFun X = RatFun::variable();
  CHECK(zx[1] == (X - RatFun(1)) / X);

  // T_k = -ħ^k s^k/(k X0^k) against the product of insertion factors
  const Scalar X0(7, 2);
  const int d = 3, N = 3;
  auto space = TSpace::couplings("s", 1, d);
  const TPoly s = TPoly::variable(space, 0);
  std::vector<TPoly> T;
  for (int k = 1; k <= d; ++k) T.push_back(TPoly::variable(space, 0, -power(hbar / X0, k) / k, k));
  auto zT = z4d(ZSpec{T, 0, {}, N}, hbar);
  for (int n = 0; n <= N; ++n) {
    TPoly expect;
    for (const auto& lam : partitions_of(n)) {
      TPoly f(plancherel_weight(lam) * plancherel_weight(lam));
      for (int i = 1; i <= lam.length(); ++i) {
        f = f * linear_fraction_series(Scalar(1), -Scalar(lam.part(i) - i + 1) * hbar / X0, Scalar(1),
                                       -Scalar(1 - i) * hbar / X0, s);
      }
      expect += f;
    }
    CHECK(zT[n] == expect);
  }
}

TEST_CASE("4D insertion factors are scale invariant") {
  const Scalar c(3, 2);
  for (const auto& lam : enumerate_partitions(4)) {
    auto f = insertion_factor_4d(lam, Scalar(1)).expand();
    auto g = insertion_factor_4d(lam, c).expand();
    CHECK(f.eval(Scalar(5)) == g.eval(c * 5));
  }
}

TEST_CASE("fermionic cross-checks at small windows") {
  QParam qp(Scalar(2, 3));
  CrosscheckConfig cfg;
  cfg.ncut = 2;
  cfg.tdeg = 1;
  cfg.couplings = 2;
  for (auto which : {FermionicCheck::ZtEH, FermionicCheck::ZtG1, FermionicCheck::ZtDual, FermionicCheck::Z4dEH}) {
    auto r = crosscheck_fermionic(which, cfg, qp);
    CHECK_MESSAGE(r.pass, fermionic_check_name(which), ": ", r.detail);
  }
  cfg.charge = 2;
  auto r = crosscheck_fermionic(FermionicCheck::Z4dCharge, cfg, qp);
  CHECK(r.pass);
  CHECK_FALSE(r.discovered.empty());
}
