#pragma once

#include <string>
#include <vector>

#include "mcqc/exec.hpp"
#include "mcqc/laurent.hpp"
#include "mcqc/partitions.hpp"
#include "mcqc/ratfun.hpp"

namespace mcqc {

/// The 4D substitution q = e^{-Rħ}, Q = (RΛ)², x = e^{R(X-ħ/2)}.
struct RSubstitution {
  Scalar hbar = 1;
  Scalar lambda = 1;
  int top = 4;  // trusted R-window is [negative part, top]
};

// e^{aR} and 1 - e^{aR}, exact through R^top.
RSeries r_exp(const Scalar& a, int top);
RSeries r_one_minus_exp(const Scalar& a, int top);

struct LimitCheck {
  std::string name;
  bool pass = false;
  // First nonvanishing coefficient of the checked difference ("none" when it
  // vanishes on the whole window).
  std::string leading;
  std::string detail;
};

// λ-term of Z(x(X,R)) against the λ-term of Z₄D(X), including the separate
// building blocks (weight, fugacity, insertion factors).
LimitCheck weight_limit_check(const Partition& lambda, const Scalar& x, const RSubstitution& sub);
// λ-term of Z(x(X,R)) as an R-series, exact through R^top.
RSeries weight_term_series(const Partition& lambda, const Scalar& x, const RSubstitution& sub);
// Same with one insertion factor per entry of xs.
RSeries weight_term_series(const Partition& lambda, const std::vector<Scalar>& xs, const RSubstitution& sub);

// Σ_{j=1}^k (-1)^{k-j} C(k,j) φ_j(λ) with q = e^{-Rħ}.
RSeries phi_finite_diff(const Partition& lambda, int k, const Scalar& hbar, int top);
LimitCheck phi_finite_diff_check(const Partition& lambda, int k, const Scalar& hbar, int top);

// t_j = Σ_{k>=j} C(k,j)(-1)^{k-j} T_k / (-Rħ)^k; T[k-1] holds T_k.
std::vector<RSeries> t_of_T(const std::vector<Scalar>& T, const Scalar& hbar);

// φ(t(T,R), λ) as an R-series.
RSeries potential_series(const Partition& lambda, const std::vector<Scalar>& T, const Scalar& hbar, int top);
LimitCheck potential_limit_check(const Partition& lambda, const std::vector<Scalar>& T, const Scalar& hbar,
                                 int top);

// [(A-1)f](x(X,R)) at Q-grading restored by Q = (RΛ)², at the sample X.
RSeries operator_limit_series(const RatFun& f, const Scalar& x, const RSubstitution& sub);
// R⁰ vanishes and R¹ equals -(X-ħ)(f(X-ħ)-f(X)) - (Λ²/X) f(X+ħ) at each sample.
LimitCheck operator_limit_check(const RatFun& f, const std::vector<Scalar>& xs, const RSubstitution& sub);

struct RateReport {
  std::vector<double> r_values;
  std::vector<double> errors;
  double slope = 0;
  bool loss_of_precision = false;
};
// |Z_{<=N}(x(X,R)) - Z₄D,{<=N}(X)| per R and the least-squares log-log slope.
RateReport numeric_rate(int ncut, double x, double hbar, double lambda, const std::vector<double>& rs);

struct LimitSuiteConfig {
  int max_size = 4;
  int kmax = 4;
  int top = 4;
  Scalar hbar = 1;
  Scalar lambda = 1;
  std::vector<Scalar> x_samples{Scalar(5), Scalar(7, 3), Scalar(-11, 4)};
};
struct LimitSuiteReport {
  bool pass = false;
  std::vector<LimitCheck> checks;
  RateReport rate;
  bool rate_ok = false;
};
LimitSuiteReport limit_suite(const LimitSuiteConfig& cfg, Exec exec = Exec::Parallel);

}  // namespace mcqc
