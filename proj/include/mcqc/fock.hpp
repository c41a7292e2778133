#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "mcqc/exec.hpp"
#include "mcqc/partitions.hpp"
#include "mcqc/profile.hpp"
#include "mcqc/series.hpp"
#include "mcqc/tpoly.hpp"

namespace mcqc {

/// Bead picture of |s,λ⟩: occupied positions λ_i - i + 1 + s, i >= 1.
struct MayaState {
  int charge = 0;
  Partition partition;

  // The first `count` bead positions (everything below is packed).
  std::vector<int> beads(int count) const;
  static MayaState from_beads(int charge, const std::vector<int>& beads);
};

struct BeadMove {
  Partition target;
  int sign;
};

// J_k on a basis state, k != 0. J_{-k} moves one bead up by k, J_k moves one
// bead down by k; the sign is the parity of the beads jumped over. The action
// does not depend on the charge.
std::vector<BeadMove> current_action(int k, const Partition& lambda);

// Eigenvalues of the normal-ordered diagonal bilinears on |s,λ⟩, computed
// from the beads relative to the charge-0 vacuum {n <= 0}.
Integer l0_eigenvalue(int charge, const Partition& lambda);
Integer k4_eigenvalue(int charge, const Partition& lambda);  // 4K, an integer
Scalar h_eigenvalue(int k, int charge, const Partition& lambda, const QParam& qp);
Integer h4d_eigenvalue(int k, int charge, const Partition& lambda);

// q^{±K/2} on |s,λ⟩: u^{±4K}.
Scalar q_half_k_factor(int sign, int charge, const Partition& lambda, const QParam& qp);
// (-q^{1/2})^{L0}
Scalar neg_sqrt_q_l0_factor(int charge, const Partition& lambda, const QParam& qp);
// exp(Σ t_k H_k) and exp(Σ T_k H4D_k); t[k-1] multiplies the k-th mode.
TPoly exp_h_factor(const std::vector<TPoly>& t, int charge, const Partition& lambda, const QParam& qp);
TPoly exp_h4d_factor(const std::vector<TPoly>& t, int charge, const Partition& lambda);

enum class VertexKind { Gamma, GammaPrime };

// Exponent coefficients c_1..c_kmax of Γ(x) (x^k/k) or Γ'(x) (-(-x)^k/k).
std::vector<Scalar> vertex_coeffs_point(VertexKind kind, const Scalar& x, int kmax);
// Same at x = q^{-ρ}: q^{k/2}/(k(1-q^k)), with (-1)^{k+1} for Γ'.
std::vector<Scalar> vertex_coeffs_rho(VertexKind kind, int kmax, const QParam& qp);
// exp coefficients of a vertex operator in formal variable: x^k/k as TPoly.
std::vector<TPoly> vertex_coeffs_formal(VertexKind kind, const TPoly& x, int kmax);

// Lifting of scalars and t-polynomials into the amplitude rings.
template <class R>
struct RingLift;
template <>
struct RingLift<Scalar> {
  static Scalar from(const Scalar& c) { return c; }
  static Scalar graded(const Scalar& c, int degree) {
    if (degree != 0) throw Error(ErrorKind::Precondition, "scalar amplitudes carry no grading");
    return c;
  }
  static Scalar truncate(const Scalar& c, int) { return c; }
};
template <>
struct RingLift<TPoly> {
  static TPoly from(const Scalar& c) { return TPoly(c); }
  static TPoly from(const TPoly& c) { return c; }
  static TPoly truncate(const TPoly& c, int) { return c; }
};
template <class E>
struct RingLift<GradedSeries<E>> {
  static GradedSeries<E> from(const Scalar& c) { return GradedSeries<E>::constant(RingLift<E>::from(c), kUnbounded); }
  template <class C>
  static GradedSeries<E> from(const C& c) {
    return GradedSeries<E>::constant(RingLift<E>::from(c), kUnbounded);
  }
  template <class C>
  static GradedSeries<E> graded(const C& c, int degree) {
    return GradedSeries<E>::monomial(RingLift<E>::from(c), degree, kUnbounded);
  }
  static GradedSeries<E> truncate(const GradedSeries<E>& c, int g) { return c.truncated(g); }
};

// Per-coefficient t-cutoff used by the lowering trust rule.
inline int coefficient_cutoff(const Scalar&) { return kUnbounded; }
inline int coefficient_cutoff(const TPoly& p) { return p.cutoff(); }
template <class E>
int coefficient_cutoff(const GradedSeries<E>& s) {
  int c = kUnbounded;
  for (const auto& e : s.coefficients()) {
    if (!is_zero(e)) c = std::min(c, coefficient_cutoff(e));
  }
  return c;
}

/// Truncated state in one charge sector. Amplitudes live in the ring R.
///
/// Trust bookkeeping: components with |λ| <= trusted_size() are exact; the
/// rest may be incomplete because some raising operator was cut at the size
/// cap. Grading coefficients are exact through trusted_grade(). Both start
/// unbounded and only shrink.
template <class R>
class FockVector {
 public:
  FockVector(int charge, int size_cap) : charge_(charge), size_cap_(size_cap) {
    if (size_cap < 0) throw Error(ErrorKind::Precondition, "negative size cap");
  }

  static FockVector vacuum(int charge, int size_cap, const R& one) {
    FockVector v(charge, size_cap);
    v.amps_.emplace(Partition(), one);
    return v;
  }

  int charge() const noexcept { return charge_; }
  int size_cap() const noexcept { return size_cap_; }
  int trusted_size() const noexcept { return trusted_size_; }
  int trusted_grade() const noexcept { return trusted_grade_; }
  const std::map<Partition, R>& amplitudes() const noexcept { return amps_; }

  R amplitude(const Partition& lambda) const {
    auto it = amps_.find(lambda);
    return it == amps_.end() ? R{} : it->second;
  }

  // Adds c to the amplitude of λ; silently dropped above the size cap (the
  // caller is responsible for the trust window).
  void add(const Partition& lambda, const R& c) {
    if (lambda.size() > size_cap_ || is_zero(c)) return;
    auto [it, fresh] = amps_.try_emplace(lambda, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) amps_.erase(it);
    }
  }

  void restrict_trust(int size, int grade) {
    trusted_size_ = std::min(trusted_size_, size);
    trusted_grade_ = std::min(trusted_grade_, grade);
  }
  // Used after a grading shift converts size errors into grade errors.
  void reset_size_trust() { trusted_size_ = kUnbounded; }

  FockVector& operator+=(const FockVector& o) {
    if (o.charge_ != charge_) throw Error(ErrorKind::ChargeMismatch, "adding vectors of different charge");
    for (const auto& [lam, c] : o.amps_) add(lam, c);
    restrict_trust(o.trusted_size_, o.trusted_grade_);
    return *this;
  }

  friend FockVector operator*(FockVector v, const Scalar& c) {
    for (auto it = v.amps_.begin(); it != v.amps_.end();) {
      it->second = times(it->second, c);
      it = is_zero(it->second) ? v.amps_.erase(it) : std::next(it);
    }
    return v;
  }

  bool empty() const noexcept { return amps_.empty(); }

 private:
  int charge_;
  int size_cap_;
  std::map<Partition, R> amps_;
  int trusted_size_ = kUnbounded;
  int trusted_grade_ = kUnbounded;
};

namespace detail {

// Σ_k c_k J_{sign k} v without trust updates; c[k-1] is the k-th coefficient.
template <class R>
FockVector<R> exponent_step(const std::vector<R>& c, int sign, const FockVector<R>& v, Exec exec) {
  profile::Scope scope(profile::Stage::FockOperators);
  std::vector<const std::pair<const Partition, R>*> src;
  src.reserve(v.amplitudes().size());
  for (const auto& e : v.amplitudes()) src.push_back(&e);
  std::vector<std::vector<std::pair<Partition, R>>> out(src.size());
  const int n = static_cast<int>(src.size());
  auto work = [&](int i) {
    const auto& [lam, a] = *src[i];
    for (int k = 1; k <= static_cast<int>(c.size()); ++k) {
      if (is_zero(c[k - 1])) continue;
      if (sign < 0 && lam.size() + k > v.size_cap()) continue;
      if (sign > 0 && lam.size() < k) continue;
      R ca = c[k - 1] * a;
      if (is_zero(ca)) continue;
      for (const auto& mv : current_action(sign * k, lam)) {
        out[i].emplace_back(mv.target, mv.sign > 0 ? ca : R{} - ca);
      }
    }
  };
  parallel_for(n, n > 8 ? exec : Exec::Serial, [&](long i) { work(static_cast<int>(i)); });
  FockVector<R> r(v.charge(), v.size_cap());
  r.restrict_trust(v.trusted_size(), v.trusted_grade());
  for (const auto& bucket : out) {
    for (const auto& [lam, a] : bucket) r.add(lam, a);
  }
  return r;
}

}  // namespace detail

/// J_k v. Raising modes (k < 0) drop terms above the size cap; a lowering mode
/// pulls untrusted large components down by k.
template <class R>
FockVector<R> apply_J(int k, const FockVector<R>& v, Exec exec = Exec::Serial) {
  if (k == 0) throw Error(ErrorKind::ZeroModeRequest, "J_0 is not a current mode here");
  int kk = k < 0 ? -k : k;
  std::vector<R> c(kk);
  c[kk - 1] = RingLift<R>::from(Scalar(1));
  FockVector<R> r = detail::exponent_step(c, k < 0 ? -1 : 1, v, exec);
  if (k < 0) {
    r.restrict_trust(v.size_cap(), kUnbounded);
  } else if (v.trusted_size() < kUnbounded) {
    r.restrict_trust(v.trusted_size() - kk, kUnbounded);
  }
  return r;
}

/// exp(Σ_k c_k J_{∓k}) v, raising when `raising` is set. The exponential is a
/// finite sum on a truncated state: each power shifts |λ| monotonically.
template <class R>
FockVector<R> apply_vertex(const std::vector<R>& c, bool raising, const FockVector<R>& v, Exec exec = Exec::Serial) {
  FockVector<R> result = v;
  FockVector<R> term = v;
  const int sign = raising ? -1 : 1;
  for (int n = 1; n <= v.size_cap() + 1; ++n) {
    term = detail::exponent_step(c, sign, term, exec) * Scalar(1, n);
    if (term.empty()) break;
    result += term;
  }
  bool any = std::any_of(c.begin(), c.end(), [](const R& x) { return !is_zero(x); });
  if (!any) return result;
  if (raising) {
    result.restrict_trust(v.size_cap(), kUnbounded);
  } else if (v.trusted_size() < kUnbounded) {
    // A missing component of size m reaches size m' only through total
    // weight >= (m - m') * min_k v_k/k, which the t-cutoff kills once large.
    int cutoff = kUnbounded;
    bool weightless = false;
    for (const auto& x : c) {
      if (is_zero(x)) continue;
      if (weight_valuation(x) <= 0) weightless = true;
      cutoff = std::min(cutoff, coefficient_cutoff(x));
    }
    long drop = weightless ? -1 : 0;
    for (int k = 1; !weightless && k <= static_cast<int>(c.size()); ++k) {
      if (is_zero(c[k - 1])) continue;
      drop = std::max(drop, static_cast<long>(cutoff) * k / weight_valuation(c[k - 1]));
    }
    if (drop < 0 || cutoff >= kUnbounded) {
      result.restrict_trust(-1, kUnbounded);
    } else {
      result.restrict_trust(static_cast<int>(v.trusted_size() - drop), kUnbounded);
    }
  }
  return result;
}

/// Multiply each amplitude by f(charge, λ).
template <class R, class F>
FockVector<R> apply_diagonal(const FockVector<R>& v, F&& f) {
  profile::Scope scope(profile::Stage::FockOperators);
  FockVector<R> r(v.charge(), v.size_cap());
  r.restrict_trust(v.trusted_size(), v.trusted_grade());
  for (const auto& [lam, a] : v.amplitudes()) r.add(lam, a * RingLift<R>::from(f(v.charge(), lam)));
  return r;
}

/// G^{L0}: the amplitude of |s,λ⟩ picks up the grading monomial of degree
/// |λ| + s(s+1)/2. Components beyond the trusted size can only be wrong in
/// grading degrees above it, so size errors become grade errors.
template <class E>
FockVector<GradedSeries<E>> apply_grading(const FockVector<GradedSeries<E>>& v) {
  profile::Scope scope(profile::Stage::FockOperators);
  FockVector<GradedSeries<E>> r(v.charge(), v.size_cap());
  int base = v.charge() * (v.charge() + 1) / 2;
  int g = v.trusted_grade();
  if (v.trusted_size() < kUnbounded) g = std::min(g, v.trusted_size() + base);
  r.restrict_trust(kUnbounded, g);
  for (const auto& [lam, a] : v.amplitudes()) r.add(lam, a.shifted(lam.size() + base));
  return r;
}

/// ⟨s| v: the ground-state amplitude, cut to the trusted grading window.
template <class R>
R vev(int bra_charge, const FockVector<R>& v) {
  if (bra_charge != v.charge()) {
    throw Error(ErrorKind::ChargeMismatch, "bra charge " + std::to_string(bra_charge) + " against ket charge " +
                                               std::to_string(v.charge()));
  }
  if (v.trusted_size() < 0) throw Error(ErrorKind::CutoffExceeded, "vacuum component is outside the trusted window");
  return RingLift<R>::truncate(v.amplitude(Partition()), v.trusted_grade());
}

/// Amplitude ring of the fermionic checks: fugacity series of t-polynomials.
using Coef = GradedSeries<TPoly>;

template <class R, class C>
std::vector<R> lift_all(const std::vector<C>& c) {
  std::vector<R> out;
  out.reserve(c.size());
  for (const auto& x : c) out.push_back(RingLift<R>::from(x));
  return out;
}

// c_k Q^k
template <class R>
std::vector<R> lift_graded(const std::vector<Scalar>& c) {
  std::vector<R> out;
  out.reserve(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) out.push_back(RingLift<R>::graded(c[k], static_cast<int>(k + 1)));
  return out;
}

template <class C>
std::vector<C> negated(std::vector<C> c) {
  for (auto& x : c) x = C{} - x;
  return c;
}

/// Named states of the fermionic reformulation, built on |0⟩ with the
/// fugacity tracked through `ncut`.
enum class GState { G1, G2, G2Prime, G };
FockVector<Coef> build_g_state(GState which, int size_cap, int ncut, const QParam& qp, Exec exec = Exec::Serial);

struct MatrixElementReport {
  int pairs_checked = 0;
  std::vector<std::string> mismatches;
};
// ⟨λ|Γ_-(q^{-ρ})|μ⟩ against skew Schur values, the primed variant against
// conjugates, and the conjugation identities, for all |λ|,|μ| <= cutoff.
MatrixElementReport check_matrix_elements(int cutoff, const QParam& qp);

struct StateIdentityReport {
  bool pass = false;
  int trusted_size = 0;
  int trusted_grade = 0;
  int compared = 0;
  std::vector<std::string> mismatches;
};
// g_2'|0⟩ = Π(1 - Qq^n)^{-n} g|0⟩ amplitude by amplitude, |λ| <= max_size.
StateIdentityReport check_state_identity(int ncut, int max_size, const QParam& qp, Exec exec = Exec::Serial);

}  // namespace mcqc
