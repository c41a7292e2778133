#include <doctest.h>

#include "mcqc/bilinear.hpp"
#include "mcqc/partfun.hpp"

using namespace mcqc;

namespace {

ZOracle z5d_oracle(int ncut, const QParam& qp) {
  return [ncut, &qp](const std::vector<Scalar>& pts) { return z5d(ZSpec{{}, 0, pts, ncut}, qp, Exec::Serial); };
}

bool vanishes(const GradedSeries<TPoly>& r) { return r.is_zero(); }

}  // namespace

TEST_CASE("degree zero is the Plucker identity") {
  ZOracle one = [](const std::vector<Scalar>&) { return GradedSeries<TPoly>::constant(TPoly(Scalar(1)), 0); };
  std::vector<Scalar> x{Scalar(2), Scalar(-3), Scalar(5, 4), Scalar(7)};
  CHECK(vanishes(fay_residual(2, x, one)));
  CHECK(vanishes(fay4_residual(x, one)));
  CHECK(vandermonde({Scalar(1), Scalar(2), Scalar(4)}) == (1 - 2) * (1 - 4) * (2 - 4));
}

TEST_CASE("Fay residuals at fixed points") {
  QParam qp(Scalar(2, 3));
  const std::vector<Scalar> x{Scalar(1, 2), Scalar(1, 3), Scalar(1, 5), Scalar(1, 7)};
  auto z = z5d_oracle(3, qp);
  auto r2 = fay_residual(2, x, z);
  CHECK(r2.cutoff() == 3);
  CHECK(vanishes(r2));
  // the general N=2 form and the written-out three-term form coincide
  CHECK(vanishes(r2 - fay4_residual(x, z)));
  // alternating in x1 <-> x2
  auto sw = fay4_residual({x[1], x[0], x[2], x[3]}, z);
  CHECK(vanishes(sw + fay4_residual(x, z)));

  const std::vector<Scalar> six{Scalar(1, 2), Scalar(1, 3), Scalar(1, 5), Scalar(1, 7), Scalar(-2, 9), Scalar(3, 11)};
  CHECK(vanishes(fay_residual(3, six, z5d_oracle(2, qp))));

  CHECK(fay_at(2, FaySample{x, 3}, qp).pass);
  CHECK_THROWS_AS(fay_residual(2, {Scalar(1, 2), Scalar(1, 2), Scalar(1, 5), Scalar(1, 7)}, z), Error);
}

TEST_CASE("a deformed Z breaks the identity") {
  QParam qp(Scalar(2, 3));
  auto z = z5d_oracle(2, qp);
  ZOracle bent = [&](const std::vector<Scalar>& pts) {
    auto s = z(pts);
    Scalar f = 1;
    for (const auto& p : pts) f *= 1 + p * p;  // not of the insertion form
    return s + GradedSeries<TPoly>::monomial(TPoly(f), 1, 2);
  };
  const std::vector<Scalar> x{Scalar(1, 2), Scalar(1, 3), Scalar(1, 5), Scalar(1, 7)};
  CHECK_FALSE(vanishes(fay_residual(2, x, bent)));
}

TEST_CASE("Hirota-Miwa two ways") {
  QParam qp(Scalar(2, 3));
  auto z = z5d_oracle(2, qp);
  const Scalar a(1, 2), b(-1, 3), c(2, 5);
  auto direct = hirota_miwa_residual({a, b, c}, z);
  auto special = fay4_residual({a, b, c, Scalar(0)}, z);
  CHECK(vanishes(direct));
  CHECK(vanishes(direct - special));
}

TEST_CASE("certified grids at small windows") {
  QParam qp(Scalar(2, 3));
  BilinearConfig cfg;
  cfg.ncut = 2;
  cfg.tdeg = 1;
  cfg.couplings = 2;
  cfg.xdeg = 3;
  auto f2 = fay_certified(2, true, cfg, qp, Exec::Serial);
  CHECK(f2.pass);
  CHECK(f2.grid == "4^4");
  CHECK(f2.samples == 256);
  auto hm = hirota_miwa_certified(cfg, qp, Exec::Serial);
  CHECK(hm.pass);
  auto df = diff_fay(cfg, qp, Exec::Serial);
  CHECK_MESSAGE(df.pass, df.detail);
  auto f4 = fay4_4d_certified(cfg, Exec::Serial);
  CHECK(f4.pass);
  // serial and parallel runs report the same grid
  auto f2p = fay_certified(2, true, cfg, qp, Exec::Parallel);
  CHECK(f2p.sample_sets == f2.sample_sets);
  CHECK(f2p.pass);
}

TEST_CASE("4D Fay and the bridge") {
  const std::vector<Scalar> X{Scalar(3), Scalar(5), Scalar(7), Scalar(11)};
  CHECK(fay4_4d_at(FaySample{X, 2}, Scalar(1)).pass);
  BilinearConfig cfg;
  cfg.ncut = 2;
  auto br = fay_bridge(cfg, X);
  CHECK_MESSAGE(br.pass, br.detail);
  CHECK_THROWS_AS(fay_bridge(cfg, {Scalar(3), Scalar(3), Scalar(7), Scalar(11)}), Error);
}
