#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mcqc/ring.hpp"

namespace mcqc {

/// The variables of a truncated coupling polynomial: names, integer weights
/// and the weighted-degree cutoff. Monomials of weighted degree above the
/// cutoff are dropped by every operation.
struct TSpace {
  std::vector<std::string> names;
  std::vector<int> weights;
  int cutoff = 0;

  static constexpr int kMaxVars = 8;

  int size() const { return static_cast<int>(names.size()); }
  int index_of(const std::string& name) const;

  // t_1..t_m, all of weight 1.
  static std::shared_ptr<const TSpace> couplings(const std::string& stem, int count, int cutoff);
  static std::shared_ptr<const TSpace> make(std::vector<std::string> names, std::vector<int> weights,
                                            int cutoff);
};

using TSpacePtr = std::shared_ptr<const TSpace>;

/// Truncated polynomial in the coupling variables of a TSpace with exact
/// rational coefficients. Elements without a space are plain constants, so a
/// Scalar embeds without knowing which space it will meet.
class TPoly {
 public:
  using Monomial = std::uint64_t;  // 8 exponents of 8 bits each

  TPoly() = default;
  TPoly(const Scalar& c);  // NOLINT: constants convert implicitly
  TPoly(long c) : TPoly(Scalar(c)) {}

  static TPoly variable(const TSpacePtr& space, int index, const Scalar& coeff = Scalar(1), int power = 1);
  static TPoly constant(const TSpacePtr& space, const Scalar& c);

  const TSpacePtr& space() const noexcept { return space_; }
  const std::map<Monomial, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  Scalar coefficient(const std::vector<int>& exponents) const;
  int cutoff() const { return space_ ? space_->cutoff : kUnbounded; }
  int valuation() const;  // smallest weighted degree present; kUnbounded for 0
  int degree_of(Monomial m) const;

  static int exponent(Monomial m, int var) { return static_cast<int>((m >> (8 * var)) & 0xff); }

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator-(const TPoly& a);
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  TPoly& operator*=(const TPoly& o) { return *this = *this * o; }
  friend TPoly operator*(TPoly a, const Scalar& c);

  friend bool operator==(const TPoly& a, const TPoly& b) { return a.terms_ == b.terms_; }

  // d/d(var): drops one unit of the variable's weight from the trusted
  // window, so the result is re-truncated at cutoff - weight.
  TPoly derivative(int var) const;

  // Substitute the listed variables by zero.
  TPoly zero_out(const std::vector<int>& vars) const;

  std::string to_string() const;

 private:
  static TSpacePtr merge(const TSpacePtr& a, const TSpacePtr& b);
  void drop_zeros();

  TSpacePtr space_;
  std::map<Monomial, Scalar> terms_;
};

inline bool is_zero(const TPoly& p) { return p.is_zero(); }
inline TPoly times(const TPoly& a, const Scalar& c) { return a * c; }
inline int weight_valuation(const TPoly& p) { return p.valuation(); }

/// exp(p) truncated at the weighted cutoff. The constant term must vanish:
/// exp of a nonzero rational is not rational.
TPoly tpoly_exp(const TPoly& p);

}  // namespace mcqc
