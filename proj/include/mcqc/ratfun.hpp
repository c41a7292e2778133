#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mcqc/laurent.hpp"
#include "mcqc/poly.hpp"

namespace mcqc {

/// Rational function of one formal variable over Q, kept reduced with a
/// monic denominator so equal functions have equal representations.
class RatFun {
 public:
  RatFun() : den_(Scalar(1)) {}
  RatFun(const Scalar& c) : num_(c), den_(Scalar(1)) {}  // NOLINT
  RatFun(long c) : RatFun(Scalar(c)) {}                    // NOLINT
  RatFun(Poly p) : num_(std::move(p)), den_(Scalar(1)) {}  // NOLINT
  RatFun(Poly num, Poly den);

  // (a0 + a1 x) / (b0 + b1 x)
  static RatFun linear_fraction(const Scalar& a0, const Scalar& a1, const Scalar& b0, const Scalar& b1);
  static RatFun variable() { return RatFun(Poly::linear(0, 1)); }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  // InsertionPole when x0 is a root of the denominator.
  Scalar eval(const Scalar& x0) const;
  // f(c x)
  RatFun scaled_arg(const Scalar& c) const;
  // f(x + c)
  RatFun shifted_arg(const Scalar& c) const;

  // Laurent expansion at x = 0, exact through x^top.
  LaurentX to_laurent(int top) const;

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend RatFun operator-(RatFun a) {
    a.num_ = -a.num_;
    return a;
  }
  friend RatFun operator*(RatFun a, const Scalar& c);
  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

inline bool is_zero(const RatFun& f) { return f.is_zero(); }
inline RatFun times(const RatFun& f, const Scalar& c) { return f * c; }
inline int weight_valuation(const RatFun&) { return 0; }

/// Product of linear fractions, kept unexpanded until needed.
class FactoredRatFun {
 public:
  FactoredRatFun() = default;
  explicit FactoredRatFun(const Scalar& c) : constant_(c) {}

  // Multiply by (a0 + a1 x) / (b0 + b1 x).
  void multiply(const Scalar& a0, const Scalar& a1, const Scalar& b0, const Scalar& b1);
  void scale(const Scalar& c) { constant_ *= c; }

  Scalar eval(const Scalar& x0) const;
  RatFun expand() const;
  const Scalar& constant() const noexcept { return constant_; }
  int size() const noexcept { return static_cast<int>(factors_.size()); }

 private:
  struct Factor {
    Scalar a0, a1, b0, b1;
  };
  Scalar constant_{1};
  std::vector<Factor> factors_;
};

}  // namespace mcqc
