#include "mcqc/poly.hpp"

#include <sstream>

namespace mcqc {

Poly::Poly(const Scalar& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Scalar& c, int degree) {
  Poly p;
  if (sgn(c) == 0) return p;
  p.c_.assign(degree + 1, Scalar(0));
  p.c_[degree] = c;
  return p;
}

Poly Poly::linear(const Scalar& c0, const Scalar& c1) { return Poly(std::vector<Scalar>{c0, c1}); }

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

int Poly::low_order() const {
  for (int i = 0; i <= degree(); ++i) {
    if (sgn(c_[i]) != 0) return i;
  }
  return 0;
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc(0);
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::scaled_arg(const Scalar& c) const {
  Poly r = *this;
  Scalar p(1);
  for (auto& a : r.c_) {
    a *= p;
    p *= c;
  }
  r.trim();
  return r;
}

Poly Poly::shifted_arg(const Scalar& c) const {
  // Taylor shift by repeated synthetic division.
  std::vector<Scalar> a = c_;
  int n = degree();
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) a[j] += c * a[j + 1];
  }
  return Poly(std::move(a));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (Scalar(1) / leading());
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator-(Poly a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r));
}

Poly operator*(Poly a, const Scalar& c) {
  for (auto& x : a.c_) x *= c;
  a.trim();
  return a;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::Precondition, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Scalar> rem = a.c_;
  std::vector<Scalar> quo(a.degree() - b.degree() + 1);
  Scalar inv = Scalar(1) / b.leading();
  for (int i = a.degree(); i >= b.degree(); --i) {
    if (sgn(rem[i]) == 0) continue;
    Scalar f = rem[i] * inv;
    quo[i - b.degree()] = f;
    for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= f * b.c_[j];
  }
  rem.resize(b.degree());
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << mcqc::to_string(c_[i]) << ")";
    if (i >= 1) os << "*" << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace mcqc
