#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mcqc/exec.hpp"
#include "mcqc/series.hpp"
#include "mcqc/tpoly.hpp"

namespace mcqc {

/// Insertion points of one bilinear evaluation plus the fugacity window.
struct FaySample {
  std::vector<Scalar> points;
  int ncut = 0;
};

// Δ(y_1..y_N) = Π_{i<j} (y_i - y_j)
Scalar vandermonde(const std::vector<Scalar>& y);

// Z(t, y_1..y_N) for a fixed t; the bilinear forms only ever ask for it.
using ZOracle = std::function<GradedSeries<TPoly>(const std::vector<Scalar>&)>;

// Σ_{j=N}^{2N} (-1)^{j-N} ξ(x_1..x_{N-1}, x_j) ξ(x_N..x̂_j..x_{2N}), ξ = Δ·Z.
GradedSeries<TPoly> fay_residual(int n_points, const std::vector<Scalar>& x, const ZOracle& z);
// The three-term form written out for four points.
GradedSeries<TPoly> fay4_residual(const std::vector<Scalar>& x, const ZOracle& z);
// Hirota-Miwa in three points.
GradedSeries<TPoly> hirota_miwa_residual(const std::vector<Scalar>& x, const ZOracle& z);
// Same three-term form with (X_i^{-1} - X_j^{-1}) in place of (X_i - X_j).
GradedSeries<TPoly> fay4_inverse_residual(const std::vector<Scalar>& x, const ZOracle& z);

struct BilinearConfig {
  int ncut = 4;       // fugacity degree
  int tdeg = 2;       // coupling window for the formal t/T
  int couplings = 3;
  int xdeg = 4;       // formal x window of the differential Fay check
  unsigned seed = 0;
  Scalar hbar = 1;
  Scalar lambda = 1;
};

struct BilinearReport {
  std::string name;
  bool pass = false;
  int degree = 0;           // fugacity degrees 0..degree verified
  long samples = 0;         // grid points evaluated
  std::string grid;         // e.g. "6^4"
  std::vector<std::vector<std::string>> sample_sets;  // per variable
  std::string detail;
};

// Certified grid checks. Per fugacity degree n each variable enters with
// degree <= n + (Vandermonde degree) after clearing the common insertion
// denominator, so that many plus one distinct values per variable suffice.
BilinearReport fay_certified(int n_points, bool formal_t, const BilinearConfig& cfg, const QParam& qp,
                             Exec exec = Exec::Parallel);
BilinearReport hirota_miwa_certified(const BilinearConfig& cfg, const QParam& qp, Exec exec = Exec::Parallel);
BilinearReport fay4_4d_certified(const BilinearConfig& cfg, Exec exec = Exec::Parallel);

// Single-sample evaluations for user-supplied points (t = T = 0).
BilinearReport fay_at(int n_points, const FaySample& s, const QParam& qp);
BilinearReport fay4_4d_at(const FaySample& s, const Scalar& hbar);

// Differential Fay for τ(t) = ⟨0|e^{Σ t_k J_k}(-q^{1/2})^{L0} g_2|0⟩: formal
// Fock-side check in (t_1, x_1, x_2), J_1-insertion against the t_1
// derivative, Fock against the combinatorial expansion, and the combinatorial
// numeric residual on a certified grid.
BilinearReport diff_fay(const BilinearConfig& cfg, const QParam& qp, Exec exec = Exec::Parallel);

// 5D three-term residual under the 4D substitution, divided by R²: per
// (λ, μ) term and per degree, negative R-powers vanish and the constant term
// equals the 4D term.
BilinearReport fay_bridge(const BilinearConfig& cfg, const std::vector<Scalar>& X);

struct BilinearSuite {
  bool pass = false;
  std::vector<BilinearReport> reports;
};
BilinearSuite bilinear_suite(const BilinearConfig& cfg, const QParam& qp, Exec exec = Exec::Parallel);
BilinearSuite bilinear_suite_4d(const BilinearConfig& cfg, const QParam& qp, Exec exec = Exec::Parallel);

}  // namespace mcqc
