#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "mcqc/profile.hpp"
#include "mcqc/ring.hpp"

namespace mcqc {

/// Truncated power series in a grading variable (Q in 5D, w = (Lambda/hbar)^2
/// in 4D) with coefficients in a ring R.
///
/// Degrees 0..cutoff() are known exactly; anything above is unknown and reading
/// it throws CutoffExceeded. Arithmetic truncates at the smaller cutoff. A
/// default-constructed series is an exact zero with unbounded cutoff.
template <class R>
class GradedSeries {
 public:
  GradedSeries() = default;
  explicit GradedSeries(int cutoff) : cutoff_(cutoff) {}

  static GradedSeries constant(R c, int cutoff) { return monomial(std::move(c), 0, cutoff); }

  static GradedSeries monomial(R c, int degree, int cutoff) {
    GradedSeries s(cutoff);
    if (degree <= cutoff) {
      s.coeffs_.resize(degree + 1);
      s.coeffs_[degree] = std::move(c);
    }
    s.trim();
    return s;
  }

  static GradedSeries from_coefficients(std::vector<R> coeffs, int cutoff) {
    GradedSeries s(cutoff);
    if (static_cast<int>(coeffs.size()) > cutoff + 1) coeffs.resize(cutoff + 1);
    s.coeffs_ = std::move(coeffs);
    s.trim();
    return s;
  }

  int cutoff() const noexcept { return cutoff_; }
  int stored() const noexcept { return static_cast<int>(coeffs_.size()); }

  // Coefficient of degree n; zero inside the window when not stored.
  R operator[](int n) const {
    if (n < 0) return R{};
    if (n > cutoff_) {
      throw Error(ErrorKind::CutoffExceeded,
                  "degree " + std::to_string(n) + " beyond series cutoff " + std::to_string(cutoff_));
    }
    return n < stored() ? coeffs_[n] : R{};
  }

  const std::vector<R>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const R& c) { return detail::ring_is_zero(c); });
  }

  GradedSeries truncated(int cutoff) const {
    GradedSeries s(std::min(cutoff, cutoff_));
    s.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + std::min(stored(), s.cutoff_ + 1));
    s.trim();
    return s;
  }

  // Multiply by the grading monomial G^k (k >= 0), keeping the same cutoff.
  GradedSeries shifted(int k) const {
    GradedSeries s(cutoff_);
    if (stored() == 0 || k > cutoff_) return s;
    int n = std::min(stored() + k, cutoff_ + 1);
    s.coeffs_.resize(n);
    for (int i = k; i < n; ++i) s.coeffs_[i] = coeffs_[i - k];
    s.trim();
    return s;
  }

  GradedSeries& operator+=(const GradedSeries& o) {
    cutoff_ = std::min(cutoff_, o.cutoff_);
    int n = std::min(std::max(stored(), o.stored()), cutoff_ + 1);
    coeffs_.resize(n);
    for (int i = 0; i < n && i < o.stored(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  GradedSeries& operator-=(const GradedSeries& o) {
    cutoff_ = std::min(cutoff_, o.cutoff_);
    int n = std::min(std::max(stored(), o.stored()), cutoff_ + 1);
    coeffs_.resize(n);
    for (int i = 0; i < n && i < o.stored(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }

  friend GradedSeries operator-(GradedSeries a) {
    for (auto& c : a.coeffs_) c = R{} - c;
    return a;
  }

  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    profile::Scope scope(profile::Stage::SeriesMultiplication);
    GradedSeries s(std::min(a.cutoff_, b.cutoff_));
    if (a.stored() == 0 || b.stored() == 0) return s;
    int n = std::min(a.stored() + b.stored() - 1, s.cutoff_ + 1);
    s.coeffs_.resize(n);
    for (int i = 0; i < a.stored() && i < n; ++i) {
      if (detail::ring_is_zero(a.coeffs_[i])) continue;
      for (int j = 0; j < b.stored() && i + j < n; ++j) {
        if (detail::ring_is_zero(b.coeffs_[j])) continue;
        s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    s.trim();
    return s;
  }

  GradedSeries& operator*=(const GradedSeries& o) { return *this = *this * o; }

  friend GradedSeries operator*(GradedSeries a, const Scalar& c) {
    for (auto& x : a.coeffs_) x = times(x, c);
    a.trim();
    return a;
  }

  // Coefficient-wise map into another ring.
  template <class F>
  auto map(F&& f) const -> GradedSeries<decltype(f(std::declval<const R&>()))> {
    using S = decltype(f(std::declval<const R&>()));
    std::vector<S> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return GradedSeries<S>::from_coefficients(std::move(out), cutoff_);
  }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::ring_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  int cutoff_ = kUnbounded;
  std::vector<R> coeffs_;
};

template <class R>
bool is_zero(const GradedSeries<R>& s) {
  return s.is_zero();
}

template <class R>
GradedSeries<R> times(const GradedSeries<R>& a, const Scalar& c) {
  return a * c;
}

template <class R>
int weight_valuation(const GradedSeries<R>& s) {
  int v = kUnbounded;
  for (const auto& c : s.coefficients()) {
    if (!is_zero(c)) v = std::min(v, weight_valuation(c));
  }
  return v;
}

/// exp(s) for a series with zero constant term, exact through the cutoff.
template <class R>
GradedSeries<R> series_exp(const GradedSeries<R>& s, const R& one) {
  if (!is_zero(s[0])) throw Error(ErrorKind::NonZeroConstantTerm, "series_exp needs a zero constant term");
  int n = s.cutoff();
  if (n >= kUnbounded) {
    throw Error(ErrorKind::CutoffExceeded, "series_exp of an untruncated series has no finite window");
  }
  std::vector<R> e(n + 1);
  e[0] = one;
  // n e_n = sum_{k=1}^n k s_k e_{n-k}
  for (int m = 1; m <= n; ++m) {
    R acc{};
    for (int k = 1; k <= m; ++k) {
      R sk = s[k];
      if (is_zero(sk)) continue;
      acc += times(sk * e[m - k], Scalar(k));
    }
    e[m] = times(acc, Scalar(1, m));
  }
  return GradedSeries<R>::from_coefficients(std::move(e), n);
}

}  // namespace mcqc
