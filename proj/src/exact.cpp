#include "mcqc/exact.hpp"

#include <cctype>

namespace mcqc {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonZeroConstantTerm: return "NonZeroConstantTerm";
    case ErrorKind::SpecializationPole: return "SpecializationPole";
    case ErrorKind::InsertionPole: return "InsertionPole";
    case ErrorKind::CutoffExceeded: return "CutoffExceeded";
    case ErrorKind::ZeroModeRequest: return "ZeroModeRequest";
    case ErrorKind::ChargeMismatch: return "ChargeMismatch";
    case ErrorKind::SeriesPole: return "SeriesPole";
    case ErrorKind::DegenerateSample: return "DegenerateSample";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::Precondition: return "Precondition";
  }
  return "Unknown";
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-') {
    throw Error(ErrorKind::ConfigError, "malformed rational '" + std::string(text) + "'");
  }
  Integer n(strip_plus(num)), d(strip_plus(den));
  if (d == 0) throw Error(ErrorKind::ConfigError, "zero denominator in '" + std::string(text) + "'");
  Scalar r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Scalar& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Scalar power(const Scalar& value, long e) {
  if (e == 0) return Scalar(1);
  if (value == 0) {
    if (e < 0) throw Error(ErrorKind::SpecializationPole, "0 raised to a negative power");
    return Scalar(0);
  }
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), value.get_num_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), value.get_den_mpz_t(), n);
  Scalar r = e > 0 ? Scalar(num, den) : Scalar(den, num);
  r.canonicalize();
  return r;
}

Scalar binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Scalar(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(r);
}

Scalar factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Scalar(r);
}

QParam::QParam(Scalar u) : u_(std::move(u)) {
  u_.canonicalize();
  if (u_ == 0 || u_ == 1 || u_ == -1) {
    throw Error(ErrorKind::SpecializationPole, "base parameter u must avoid {0, 1, -1}");
  }
}

Scalar QParam::one_minus_q_pow(long k) const {
  Scalar r = 1 - q_pow(k);
  if (r == 0) throw Error(ErrorKind::SpecializationPole, "1 - q^" + std::to_string(k) + " vanishes");
  return r;
}

Scalar QParam::qpochhammer(long n) const {
  Scalar r(1);
  for (long k = 1; k <= n; ++k) r *= one_minus_q_pow(k);
  return r;
}

}  // namespace mcqc
