#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mcqc/exec.hpp"
#include "mcqc/laurent.hpp"
#include "mcqc/ratfun.hpp"
#include "mcqc/series.hpp"

namespace mcqc {

/// Finite q-difference operator Σ G^g r_{g,k}(x) σ^k with σ f(x) = f(qx),
/// graded by the fugacity G. Terms are kept merged and zero-free, so two
/// operators are equal exactly when their term maps are equal.
class QDiffOp {
 public:
  using Key = std::pair<int, int>;  // (grade, shift)

  QDiffOp() = default;
  static QDiffOp identity();
  static QDiffOp term(const RatFun& r, int shift, int grade = 0);

  const std::map<Key, RatFun>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  QDiffOp& operator+=(const QDiffOp& o);
  friend QDiffOp operator+(QDiffOp a, const QDiffOp& b) { return a += b; }
  friend QDiffOp operator-(QDiffOp a, const QDiffOp& b);
  // (r σ^k) ∘ (s σ^m) = r(x) s(q^k x) σ^{k+m}
  friend QDiffOp compose(const QDiffOp& a, const QDiffOp& b, const QParam& qp);
  friend bool operator==(const QDiffOp& a, const QDiffOp& b) { return a.terms_ == b.terms_; }

  // Apply to a fugacity series of rational functions.
  GradedSeries<RatFun> apply(const GradedSeries<RatFun>& f, const QParam& qp) const;
  // Apply to a fugacity series of Laurent series in x.
  GradedSeries<LaurentX> apply(const GradedSeries<LaurentX>& f, const QParam& qp, int coeff_top) const;
  // Pointwise value of (op f)(x0) for f given by f(grade, y).
  Scalar apply_at(const std::function<Scalar(int, const Scalar&)>& f, int grade, const Scalar& x0,
                  const QParam& qp) const;

  std::string to_string() const;

 private:
  void add_term(const Key& key, const RatFun& r);
  std::map<Key, RatFun> terms_;
};

enum class AForm { Product, Sum };
// Kac-Schwarz operator A = G q^D G^{-1}, either as the factored product or
// the expanded sum (1 - q^{1/2}x)σ + q^{1/2}x + Qq^{1/2}x + Qx²/(1 - q^{-1/2}x) σ^{-1}.
QDiffOp build_A(AForm form, const QParam& qp);

// Normal-form comparison plus the evaluation witness at `samples` seeded points.
struct OperatorComparison {
  bool normal_forms_equal = false;
  bool witness_equal = false;
  std::vector<Scalar> points;
};
OperatorComparison compare_operators(const QDiffOp& a, const QDiffOp& b, int samples, unsigned seed);

struct DegreeResidual {
  int degree = 0;
  bool zero = false;
  std::string witness;  // value at the sample point when nonzero
};

// (A-1)Z(x) per fugacity degree, as rational functions.
std::vector<DegreeResidual> qcurve_residual(int ncut, const QParam& qp, Exec exec = Exec::Parallel);
// The degree-n bracket evaluated pointwise from numeric insertions at x0, q x0, x0/q.
Scalar qcurve_bracket_at(int n, const Scalar& x0, const QParam& qp);

/// Φ_j = G x^{-j} with G = Π(1-q^{i-1/2}x) · q^{-(D-1/2)²/2} · Π(1+q^{i-1/2}x)(1+Qq^{i-1/2}x),
/// as a fugacity series of Laurent series exact through x^top.
GradedSeries<LaurentX> apply_G(int j, int top, int ncut, const QParam& qp);

struct KacSchwarzReport {
  bool pass = false;
  int window_lo = 0;
  int window_hi = 0;
  std::vector<std::string> failures;
  Scalar constant;          // Z / (prefactor · Φ_0)
  bool constant_uniform = false;
};
KacSchwarzReport kac_schwarz_check(int jmax, int top, int ncut, const QParam& qp, Exec exec = Exec::Parallel);

/// Finite difference operator Σ w^g r_{g,m}(X) e^{m ħ d/dX} in the 4D variable.
class DiffOp4D {
 public:
  using Key = std::pair<int, int>;  // (grade, shift in units of ħ)
  explicit DiffOp4D(Scalar hbar) : hbar_(std::move(hbar)) {}
  void add(const RatFun& r, int shift, int grade);
  GradedSeries<RatFun> apply(const GradedSeries<RatFun>& f) const;
  const std::map<Key, RatFun>& terms() const noexcept { return terms_; }

 private:
  Scalar hbar_;
  std::map<Key, RatFun> terms_;
};

// (X-ħ)(e^{-ħ∂}-1) + w ħ²/X e^{ħ∂}, the 4D curve with Λ² = w ħ².
DiffOp4D curve_operator_4d(const Scalar& hbar);
std::vector<DegreeResidual> residual_4d(int ncut, const Scalar& hbar, Exec exec = Exec::Parallel);

}  // namespace mcqc
