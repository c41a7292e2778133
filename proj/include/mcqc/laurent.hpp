#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mcqc/ring.hpp"

namespace mcqc {

/// Truncated Laurent series with explicit trusted window.
///
/// Coefficients are stored from exponent lo() upward; everything at exponent
/// <= top() is exact, everything above is unknown. An exact (polynomial-like)
/// value has top() == kUnbounded. Products trust an exponent only when every
/// contributing pair lies inside both windows:
///   top(a*b) = min(top(a) + lo(b), top(b) + lo(a)).
/// The tag keeps series in different formal variables from mixing.
template <class Tag>
class Windowed {
 public:
  Windowed() = default;  // exact zero

  static Windowed monomial(const Scalar& c, int exponent, int top = kUnbounded) {
    Windowed w;
    w.top_ = top;
    if (sgn(c) != 0 && exponent <= top) {
      w.lo_ = exponent;
      w.c_.push_back(c);
    } else {
      w.lo_ = sat_add(top, 1);
    }
    return w;
  }

  // coeffs[i] is the coefficient of exponent lo + i.
  static Windowed from_coefficients(int lo, std::vector<Scalar> coeffs, int top = kUnbounded) {
    Windowed w;
    w.lo_ = lo;
    w.c_ = std::move(coeffs);
    w.top_ = top;
    if (w.top_ < kUnbounded && static_cast<long long>(w.lo_) + static_cast<long long>(w.c_.size()) - 1 > w.top_) {
      w.c_.resize(std::max(0, w.top_ - w.lo_ + 1));
    }
    w.normalize();
    return w;
  }

  // Lowest exponent that may be nonzero (the valuation once normalized).
  int lo() const noexcept { return lo_; }
  int top() const noexcept { return top_; }
  bool exact() const noexcept { return top_ >= kUnbounded; }
  // Highest stored exponent; lo() - 1 when nothing is stored.
  int hi() const noexcept { return lo_ + static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }

  Scalar coeff(int n) const {
    if (n > top_) {
      throw Error(ErrorKind::CutoffExceeded,
                  "exponent " + std::to_string(n) + " outside trusted window (top " + std::to_string(top_) + ")");
    }
    if (n < lo_ || n > hi()) return Scalar(0);
    return c_[n - lo_];
  }

  Windowed truncated(int top) const {
    Windowed w = *this;
    if (top >= w.top_) return w;
    w.top_ = top;
    if (w.hi() > top) w.c_.resize(std::max(0, top - w.lo_ + 1));
    w.normalize();
    return w;
  }

  Windowed& operator+=(const Windowed& o) { return combine(o, 1); }
  Windowed& operator-=(const Windowed& o) { return combine(o, -1); }
  friend Windowed operator+(Windowed a, const Windowed& b) { return a += b; }
  friend Windowed operator-(Windowed a, const Windowed& b) { return a -= b; }
  friend Windowed operator-(Windowed a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }

  friend Windowed operator*(const Windowed& a, const Windowed& b) {
    Windowed r;
    r.lo_ = sat_add(a.lo_, b.lo_);
    r.top_ = std::min(sat_add(a.top_, b.lo_), sat_add(b.top_, a.lo_));
    if (a.c_.empty() || b.c_.empty()) {
      r.c_.clear();
      r.lo_ = std::min(r.lo_, sat_add(r.top_, 1));
      return r;
    }
    long long last = static_cast<long long>(a.hi()) + b.hi();
    if (last > r.top_) last = r.top_;
    if (last < r.lo_) {
      r.lo_ = sat_add(r.top_, 1);
      return r;
    }
    r.c_.assign(static_cast<std::size_t>(last - r.lo_ + 1), Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        std::size_t k = i + j;
        if (k >= r.c_.size()) break;
        r.c_[k] += a.c_[i] * b.c_[j];
      }
    }
    r.normalize();
    return r;
  }

  friend Windowed operator*(Windowed a, const Scalar& s) {
    for (auto& x : a.c_) x *= s;
    a.normalize();
    return a;
  }

  // Multiply the coefficient of x^n by f(n).
  Windowed map_exponents(const std::function<Scalar(int)>& f) const {
    Windowed w = *this;
    for (std::size_t i = 0; i < w.c_.size(); ++i) {
      if (sgn(w.c_[i]) != 0) w.c_[i] *= f(lo_ + static_cast<int>(i));
    }
    w.normalize();
    return w;
  }

  // Multiply by x^k.
  Windowed shifted(int k) const {
    Windowed w = *this;
    w.lo_ = sat_add(w.lo_, k);
    w.top_ = sat_add(w.top_, k);
    return w;
  }

  std::string to_string(const std::string& var) const {
    std::string s;
    for (int n = lo_; n <= hi(); ++n) {
      const Scalar& c = c_[n - lo_];
      if (sgn(c) == 0) continue;
      if (!s.empty()) s += " + ";
      s += "(" + mcqc::to_string(c) + ")*" + var + "^" + std::to_string(n);
    }
    if (s.empty()) s = "0";
    if (!exact()) s += " + O(" + var + "^" + std::to_string(top_ + 1) + ")";
    return s;
  }

  const std::vector<Scalar>& raw() const noexcept { return c_; }

 private:
  Windowed& combine(const Windowed& o, int sign) {
    int top = std::min(top_, o.top_);
    if (o.c_.empty() && c_.empty()) {
      top_ = top;
      lo_ = std::min(std::min(lo_, o.lo_), sat_add(top, 1));
      return *this;
    }
    int lo = c_.empty() ? o.lo_ : (o.c_.empty() ? lo_ : std::min(lo_, o.lo_));
    int hi = std::max(c_.empty() ? lo - 1 : this->hi(), o.c_.empty() ? lo - 1 : o.hi());
    hi = std::min(hi, top);
    std::vector<Scalar> out(hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0);
    for (int n = lo; n <= hi; ++n) {
      Scalar v(0);
      if (n >= lo_ && n <= this->hi()) v = c_[n - lo_];
      if (n >= o.lo_ && n <= o.hi()) {
        if (sign > 0) {
          v += o.c_[n - o.lo_];
        } else {
          v -= o.c_[n - o.lo_];
        }
      }
      out[n - lo] = v;
    }
    lo_ = lo;
    c_ = std::move(out);
    top_ = top;
    normalize();
    return *this;
  }

  void normalize() {
    std::size_t first = 0;
    while (first < c_.size() && sgn(c_[first]) == 0) ++first;
    if (first == c_.size()) {
      c_.clear();
      lo_ = sat_add(top_, 1);
      return;
    }
    if (first > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(first));
      lo_ += static_cast<int>(first);
    }
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }

  int lo_ = kUnbounded;
  std::vector<Scalar> c_;
  int top_ = kUnbounded;
};

struct XTag {};
struct RTag {};

/// Laurent series in the formal variable x of the generating-operator
/// picture (admissible basis elements live here).
using LaurentX = Windowed<XTag>;
/// Laurent series in the radius R of the 4D limit.
using RSeries = Windowed<RTag>;

template <class Tag>
bool is_zero(const Windowed<Tag>& w) {
  return w.is_zero();
}
template <class Tag>
Windowed<Tag> times(const Windowed<Tag>& w, const Scalar& c) {
  return w * c;
}

/// exp(s) through min(top(s), prec_top). s must have no negative-degree part
/// and zero constant term (NonZeroConstantTerm otherwise).
template <class Tag>
Windowed<Tag> series_exp(const Windowed<Tag>& s, int prec_top) {
  if (!s.is_zero() && s.lo() < 1) {
    throw Error(ErrorKind::NonZeroConstantTerm, "exp needs a series with no constant or negative part");
  }
  int top = std::min(s.top(), prec_top);
  if (top >= kUnbounded) throw Error(ErrorKind::CutoffExceeded, "exp needs a finite precision");
  std::vector<Scalar> e(top + 1);
  e[0] = 1;
  for (int n = 1; n <= top; ++n) {
    Scalar acc(0);
    for (int k = std::max(1, s.lo()); k <= n && k <= s.hi(); ++k) {
      acc += Scalar(k) * s.coeff(k) * e[n - k];
    }
    e[n] = acc / n;
  }
  return Windowed<Tag>::from_coefficients(0, std::move(e), top);
}

/// log(s) for s = 1 + O(var), through min(top(s), prec_top).
template <class Tag>
Windowed<Tag> series_log(const Windowed<Tag>& s, int prec_top) {
  if (s.is_zero() || s.lo() != 0 || s.coeff(0) != 1) {
    throw Error(ErrorKind::NonZeroConstantTerm, "log needs a series with constant term 1");
  }
  int top = std::min(s.top(), prec_top);
  if (top >= kUnbounded) throw Error(ErrorKind::CutoffExceeded, "log needs a finite precision");
  std::vector<Scalar> l(top + 1);
  // n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}
  for (int n = 1; n <= top; ++n) {
    Scalar acc = Scalar(n) * (n <= s.hi() ? s.coeff(n) : Scalar(0));
    for (int k = 1; k < n; ++k) {
      if (n - k <= s.hi()) acc -= Scalar(k) * l[k] * s.coeff(n - k);
    }
    l[n] = acc / n;
  }
  return Windowed<Tag>::from_coefficients(0, std::move(l), top);
}

/// 1/s. The leading coefficient must be trusted and nonzero (SeriesPole
/// otherwise); relative precision is preserved, capped at prec_top.
template <class Tag>
Windowed<Tag> series_inverse(const Windowed<Tag>& s, int prec_top) {
  if (s.is_zero()) throw Error(ErrorKind::SeriesPole, "inverse of a series with no trusted nonzero coefficient");
  int v = s.lo();
  int rel = s.exact() ? kUnbounded : s.top() - v;
  int top = std::min(rel >= kUnbounded ? kUnbounded : rel - v, prec_top);
  if (top >= kUnbounded) throw Error(ErrorKind::CutoffExceeded, "inverse needs a finite precision");
  int len = top + v + 1;  // number of coefficients from exponent -v
  if (len <= 0) return Windowed<Tag>::from_coefficients(-v, {}, top);
  std::vector<Scalar> b(len);
  Scalar inv0 = Scalar(1) / s.coeff(v);
  b[0] = inv0;
  for (int n = 1; n < len; ++n) {
    Scalar acc(0);
    for (int k = 1; k <= n && v + k <= s.hi(); ++k) acc += s.coeff(v + k) * b[n - k];
    b[n] = -acc * inv0;
  }
  return Windowed<Tag>::from_coefficients(-v, std::move(b), top);
}

}  // namespace mcqc
