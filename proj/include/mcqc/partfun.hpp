#pragma once

#include <vector>

#include "mcqc/exec.hpp"
#include "mcqc/fock.hpp"
#include "mcqc/laurent.hpp"
#include "mcqc/ratfun.hpp"
#include "mcqc/series.hpp"
#include "mcqc/tpoly.hpp"

namespace mcqc {

/// Parameters of a melting-crystal sum Σ_λ weight(λ) G^{|λ|+s(s+1)/2} e^{φ(t,s,λ)} × insertions.
struct ZSpec {
  std::vector<TPoly> t;             // t[k-1] couples to the k-th potential
  int charge = 0;
  std::vector<Scalar> insertions;   // numeric x_j (5D) or X_j (4D)
  int ncut = 0;                     // all λ with |λ| <= ncut
};

// 5D: weight s_λ(q^{-ρ})², insertion Π_i (1 - q^{λ_i-i+1/2} x)/(1 - q^{-i+1/2} x).
GradedSeries<TPoly> z5d(const ZSpec& spec, const QParam& qp, Exec exec = Exec::Parallel);

// 4D: weight (dim λ/|λ|!)², insertion Π_i (X - (λ_i-i+1)ħ)/(X - (-i+1)ħ), grading
// w = (Λ/ħ)². Charge-s potentials are the bead eigenvalues.
GradedSeries<TPoly> z4d(const ZSpec& spec, const Scalar& hbar, Exec exec = Exec::Parallel);

/// Z(x) with one formal insertion: coefficient n is a reduced rational
/// function, assembled over the common denominator Π_{i<=n} (1 - q^{-i+1/2} x).
GradedSeries<RatFun> z5d_x(int ncut, const QParam& qp, Exec exec = Exec::Parallel);
// Z₄D(X) likewise, over Π_{i<=n} (X + (i-1)ħ).
GradedSeries<RatFun> z4d_x(int ncut, const Scalar& hbar, Exec exec = Exec::Parallel);

// Per-λ insertion factors (numerator and denominator as separate linear forms).
FactoredRatFun insertion_factor_5d(const Partition& lambda, const QParam& qp);
FactoredRatFun insertion_factor_4d(const Partition& lambda, const Scalar& hbar);

// Coefficientwise expansion of Z(x) around x = 0 through x^xdeg.
std::vector<LaurentX> expand_in_x(const GradedSeries<RatFun>& z, int xdeg);

// Power series in the TPoly variable `var` of (a0 + a1 y)/(b0 + b1 y), y = c·var.
TPoly linear_fraction_series(const Scalar& a0, const Scalar& a1, const Scalar& b0, const Scalar& b1,
                             const TPoly& y);

/// Fermionic cross-checks: combinatorial sum against the vev it should equal.
enum class FermionicCheck { ZtEH, ZtG1, ZtDual, Z4dEH, Z4dCharge };

struct CrosscheckResult {
  FermionicCheck which;
  bool pass = false;
  int trusted_grade = 0;
  int size_cap = 0;
  std::string detail;
  // Z4dCharge: bead potential minus the shifted-sum part, per (k, λ).
  std::vector<std::string> discovered;
};

struct CrosscheckConfig {
  int ncut = 5;
  int tdeg = 2;
  int couplings = 3;
  int charge = 0;
  Scalar hbar = 1;
};

CrosscheckResult crosscheck_fermionic(FermionicCheck which, const CrosscheckConfig& cfg, const QParam& qp,
                                      Exec exec = Exec::Parallel);
const char* fermionic_check_name(FermionicCheck which);

}  // namespace mcqc
