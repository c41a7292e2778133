#include "mcqc/qseries.hpp"

namespace mcqc {

IntQSeries int_series_mul(const IntQSeries& a, const IntQSeries& b, int deg) {
  IntQSeries r(deg + 1, 0);
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= deg; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= deg; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

namespace {

// Multiply in place by 1/(1 - q^step) through the stored degree.
void divide_one_minus(IntQSeries& s, int step) {
  for (std::size_t n = step; n < s.size(); ++n) s[n] += s[n - step];
}

}  // namespace

IntQSeries macmahon_series(int vdeg) {
  IntQSeries s(vdeg + 1, 0);
  s[0] = 1;
  for (int n = 1; n <= vdeg; ++n) {
    for (int rep = 0; rep < n; ++rep) divide_one_minus(s, n);
  }
  return s;
}

IntQSeries schur_square_qseries(const Partition& lambda, int vdeg) {
  IntQSeries s(vdeg + 1, 0);
  int lead = lambda.size() + 2 * n_statistic(lambda);
  if (lead > vdeg) return s;
  s[lead] = 1;
  for (const auto& [cell, h] : hook_lengths(lambda)) {
    divide_one_minus(s, h);
    divide_one_minus(s, h);
  }
  return s;
}

std::vector<Scalar> euler_expand(EulerSign sign, bool inverted, int xdeg, const QParam& qp) {
  if (xdeg < 0) throw Error(ErrorKind::Precondition, "negative x-degree");
  std::vector<Scalar> out(xdeg + 1);
  for (int n = 0; n <= xdeg; ++n) {
    // q^{n²/2} = u^{4n²}, q^{n/2} = u^{4n}
    Scalar v = inverted ? qp.u_pow(4L * n) : qp.u_pow(4L * n * n);
    v /= qp.qpochhammer(n);
    bool negative = inverted ? (sign == EulerSign::Plus) : (sign == EulerSign::Minus);
    if (negative && n % 2 == 1) v = -v;
    out[n] = v;
  }
  return out;
}

std::vector<Scalar> euler_expand(EulerSign sign, bool inverted, const Scalar& c, int xdeg, const QParam& qp) {
  auto out = euler_expand(sign, inverted, xdeg, qp);
  Scalar cp(1);
  for (auto& v : out) {
    v *= cp;
    cp *= c;
  }
  return out;
}

GradedSeries<Scalar> q_prefactor_series(int ndeg, const QParam& qp) {
  // log Π (1 - Q q^n)^{-n} = Σ_m Q^m/m Σ_n n q^{nm} = Σ_m Q^m/m · q^m/(1-q^m)^2
  std::vector<Scalar> log(ndeg + 1);
  for (int m = 1; m <= ndeg; ++m) {
    Scalar d = qp.one_minus_q_pow(m);
    log[m] = qp.q_pow(m) / (d * d) / m;
  }
  return series_exp(GradedSeries<Scalar>::from_coefficients(std::move(log), ndeg), Scalar(1));
}

}  // namespace mcqc
