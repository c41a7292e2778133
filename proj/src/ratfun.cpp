#include "mcqc/ratfun.hpp"

#include "mcqc/profile.hpp"

namespace mcqc {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::Precondition, "rational function with zero denominator");
  normalize();
}

RatFun RatFun::linear_fraction(const Scalar& a0, const Scalar& a1, const Scalar& b0, const Scalar& b1) {
  return RatFun(Poly::linear(a0, a1), Poly::linear(b0, b1));
}

void RatFun::normalize() {
  profile::Scope scope(profile::Stage::RationalFunctions);
  if (num_.is_zero()) {
    den_ = Poly(Scalar(1));
    return;
  }
  if (den_.degree() > 0 && num_.degree() > 0) {
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Poly::divmod(num_, g).first;
      den_ = Poly::divmod(den_, g).first;
    }
  }
  Scalar lead = den_.leading();
  if (lead != 1) {
    Scalar inv = Scalar(1) / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Scalar RatFun::eval(const Scalar& x0) const {
  Scalar d = den_.eval(x0);
  if (sgn(d) == 0) throw Error(ErrorKind::InsertionPole, "rational function evaluated at a pole x = " + mcqc::to_string(x0));
  return num_.eval(x0) / d;
}

RatFun RatFun::scaled_arg(const Scalar& c) const {
  RatFun r;
  r.num_ = num_.scaled_arg(c);
  r.den_ = den_.scaled_arg(c);
  if (r.den_.is_zero()) throw Error(ErrorKind::Precondition, "scaling by zero annihilates the denominator");
  Scalar lead = r.den_.leading();
  if (lead != 1) {
    Scalar inv = Scalar(1) / lead;
    r.num_ = r.num_ * inv;
    r.den_ = r.den_ * inv;
  }
  return r;
}

RatFun RatFun::shifted_arg(const Scalar& c) const {
  profile::Scope scope(profile::Stage::RationalFunctions);
  RatFun r;
  r.num_ = num_.shifted_arg(c);
  r.den_ = den_.shifted_arg(c);
  return r;
}

LaurentX RatFun::to_laurent(int top) const {
  profile::Scope scope(profile::Stage::RationalFunctions);
  if (num_.is_zero()) return LaurentX::from_coefficients(0, {}, top);
  int m = den_.low_order();
  int v = num_.low_order();
  // num/den = x^{v-m} * (num/x^v) / (den/x^m); the second factor is a power series.
  int shift = v - m;
  int len = top - shift + 1;
  if (len <= 0) return LaurentX::from_coefficients(shift, {}, top);
  const auto& nc = num_.coefficients();
  const auto& dc = den_.coefficients();
  Scalar inv0 = Scalar(1) / dc[m];
  std::vector<Scalar> out(len);
  for (int n = 0; n < len; ++n) {
    Scalar acc = v + n < static_cast<int>(nc.size()) ? nc[v + n] : Scalar(0);
    for (int k = 1; k <= n && m + k < static_cast<int>(dc.size()); ++k) acc -= dc[m + k] * out[n - k];
    out[n] = acc * inv0;
  }
  return LaurentX::from_coefficients(shift, std::move(out), top);
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFun& RatFun::operator*=(const RatFun& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw Error(ErrorKind::Precondition, "division by the zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

RatFun operator*(RatFun a, const Scalar& c) {
  a.num_ = a.num_ * c;
  if (a.num_.is_zero()) a.den_ = Poly(Scalar(1));
  return a;
}

std::string RatFun::to_string(const std::string& var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

void FactoredRatFun::multiply(const Scalar& a0, const Scalar& a1, const Scalar& b0, const Scalar& b1) {
  factors_.push_back({a0, a1, b0, b1});
}

Scalar FactoredRatFun::eval(const Scalar& x0) const {
  Scalar num = constant_;
  Scalar den(1);
  for (const auto& f : factors_) {
    Scalar d = f.b0 + f.b1 * x0;
    if (sgn(d) == 0) throw Error(ErrorKind::InsertionPole, "insertion factor has a pole at " + mcqc::to_string(x0));
    num *= f.a0 + f.a1 * x0;
    den *= d;
  }
  return num / den;
}

RatFun FactoredRatFun::expand() const {
  Poly num(constant_);
  Poly den(Scalar(1));
  for (const auto& f : factors_) {
    num = num * Poly::linear(f.a0, f.a1);
    den = den * Poly::linear(f.b0, f.b1);
  }
  return RatFun(std::move(num), std::move(den));
}

}  // namespace mcqc
