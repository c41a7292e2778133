#pragma once

#include <vector>

#include "mcqc/exact.hpp"
#include "mcqc/partitions.hpp"
#include "mcqc/series.hpp"

namespace mcqc {

/// Formal power series in q with integer coefficients, exponents 0..size-1.
using IntQSeries = std::vector<Integer>;

IntQSeries int_series_mul(const IntQSeries& a, const IntQSeries& b, int deg);

// Coefficients of Π_{n>=1} (1 - q^n)^{-n} through q^vdeg.
IntQSeries macmahon_series(int vdeg);

// s_λ(q^{-ρ})^2 as a formal q-series: q^{|λ| + 2n(λ)} Π_h (1 - q^h)^{-2}.
IntQSeries schur_square_qseries(const Partition& lambda, int vdeg);

/// Expansion of Π_{i>=1} (1 ± c q^{i-1/2} x)^{±1} through x^xdeg, returned
/// with c factored out: entry n multiplies c^n x^n. Closed forms
///   direct:          Σ (±1)^n q^{n²/2} / (q;q)_n
///   inverse, sign -: Σ q^{n/2} / (q;q)_n
///   inverse, sign +: Σ (-1)^n q^{n/2} / (q;q)_n
enum class EulerSign { Plus, Minus };
std::vector<Scalar> euler_expand(EulerSign sign, bool inverted, int xdeg, const QParam& qp);

// Same product with a numeric c absorbed.
std::vector<Scalar> euler_expand(EulerSign sign, bool inverted, const Scalar& c, int xdeg, const QParam& qp);

// Π_{n>=1} (1 - Q q^n)^{-n} through Q^ndeg.
GradedSeries<Scalar> q_prefactor_series(int ndeg, const QParam& qp);

}  // namespace mcqc
