#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mcqc/ring.hpp"

namespace mcqc {

/// Dense univariate polynomial over Q, lowest degree first, never carrying
/// trailing zero coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(const Scalar& c);  // NOLINT
  explicit Poly(std::vector<Scalar> coeffs);

  static Poly monomial(const Scalar& c, int degree);
  // c0 + c1 x
  static Poly linear(const Scalar& c0, const Scalar& c1);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  Scalar coeff(int i) const { return i >= 0 && i <= degree() ? c_[i] : Scalar(0); }
  const std::vector<Scalar>& coefficients() const noexcept { return c_; }
  const Scalar& leading() const { return c_.back(); }
  // Multiplicity of the root x = 0.
  int low_order() const;

  Scalar eval(const Scalar& x) const;
  // p(c x)
  Poly scaled_arg(const Scalar& c) const;
  // p(x + c)
  Poly shifted_arg(const Scalar& c) const;
  Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& c);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Euclidean division; b must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Monic gcd (zero when both are zero).
  static Poly gcd(Poly a, Poly b);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

}  // namespace mcqc
