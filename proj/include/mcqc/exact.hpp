#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcqc {

using Scalar = mpq_class;
using Integer = mpz_class;

enum class ErrorKind {
  NonZeroConstantTerm,
  SpecializationPole,
  InsertionPole,
  CutoffExceeded,
  ZeroModeRequest,
  ChargeMismatch,
  SeriesPole,
  DegenerateSample,
  ConfigError,
  Precondition,
};

const char* error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Accepts "p/q", "p", or "-p/q". Throws ConfigError on malformed input or a
// zero denominator. Result is canonicalized.
Scalar parse_scalar(std::string_view text);

// Always "p/q" (integers print as "p/1") so reports have one shape.
std::string to_string(const Scalar& value);

// value^e for any integer e; 0^e with e < 0 is a SpecializationPole.
Scalar power(const Scalar& value, long e);

Scalar binomial(long n, long k);
Scalar factorial(long n);

/// The base parameter u of the melting-crystal model, with q = u^8.
///
/// Every fractional power q^{a/8} that occurs in the specializations becomes
/// the integer power u^a, so all scalars stay in Q.
class QParam {
 public:
  explicit QParam(Scalar u);

  const Scalar& u() const noexcept { return u_; }
  Scalar u_pow(long e) const { return power(u_, e); }
  Scalar q() const { return u_pow(8); }
  // q^k
  Scalar q_pow(long k) const { return u_pow(8 * k); }
  // q^{k/2}
  Scalar q_half_pow(long k) const { return u_pow(4 * k); }
  // 1 - q^k, SpecializationPole when it vanishes.
  Scalar one_minus_q_pow(long k) const;
  // (q;q)_n = (1-q)(1-q^2)...(1-q^n)
  Scalar qpochhammer(long n) const;

 private:
  Scalar u_;
};

}  // namespace mcqc
