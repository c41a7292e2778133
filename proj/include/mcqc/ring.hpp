#pragma once

#include "mcqc/exact.hpp"

namespace mcqc {

// Minimal ring vocabulary shared by the templated containers. A
// default-constructed ring element is an exact zero in every ring we use.
inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }
inline Scalar times(const Scalar& a, const Scalar& c) { return a * c; }

// Largest lower bound on the weighted degree of a ring element; scalars
// carry no weight.
inline int weight_valuation(const Scalar&) { return 0; }

namespace detail {
// Unqualified call so argument-dependent lookup reaches the overload declared
// next to each ring type, even from inside classes with an is_zero member.
template <class R>
bool ring_is_zero(const R& r) {
  return is_zero(r);
}
}  // namespace detail

// Sentinel for "no truncation": exact values carry this cutoff.
inline constexpr int kUnbounded = 1 << 28;

inline int sat_add(int a, int b) {
  if (a >= kUnbounded || b >= kUnbounded) return kUnbounded;
  long long s = static_cast<long long>(a) + b;
  return s >= kUnbounded ? kUnbounded : static_cast<int>(s);
}

}  // namespace mcqc
