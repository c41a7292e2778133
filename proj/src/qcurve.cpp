#include "mcqc/qcurve.hpp"

#include <random>

#include "mcqc/partitions.hpp"
#include "mcqc/partfun.hpp"
#include "mcqc/qseries.hpp"
#include "mcqc/schur.hpp"

namespace mcqc {

QDiffOp QDiffOp::identity() { return term(RatFun(1), 0, 0); }

QDiffOp QDiffOp::term(const RatFun& r, int shift, int grade) {
  QDiffOp op;
  op.add_term({grade, shift}, r);
  return op;
}

void QDiffOp::add_term(const Key& key, const RatFun& r) {
  if (r.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, r);
    return;
  }
  it->second += r;
  if (it->second.is_zero()) terms_.erase(it);
}

QDiffOp& QDiffOp::operator+=(const QDiffOp& o) {
  for (const auto& [k, r] : o.terms_) add_term(k, r);
  return *this;
}

QDiffOp operator-(QDiffOp a, const QDiffOp& b) {
  for (const auto& [k, r] : b.terms_) a.add_term(k, -r);
  return a;
}

QDiffOp compose(const QDiffOp& a, const QDiffOp& b, const QParam& qp) {
  profile::Scope scope(profile::Stage::RationalFunctions);
  QDiffOp out;
  for (const auto& [ka, ra] : a.terms_) {
    const Scalar qk = qp.q_pow(ka.second);
    for (const auto& [kb, rb] : b.terms_) {
      out.add_term({ka.first + kb.first, ka.second + kb.second}, ra * rb.scaled_arg(qk));
    }
  }
  return out;
}

GradedSeries<RatFun> QDiffOp::apply(const GradedSeries<RatFun>& f, const QParam& qp) const {
  profile::Scope scope(profile::Stage::RationalFunctions);
  const int n_max = f.cutoff();
  std::vector<RatFun> out(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& [key, r] : terms_) {
      const auto [g, k] = key;
      if (n - g < 0) continue;
      RatFun fn = f[n - g];
      if (fn.is_zero()) continue;
      out[n] += r * fn.scaled_arg(qp.q_pow(k));
    }
  }
  return GradedSeries<RatFun>::from_coefficients(std::move(out), n_max);
}

GradedSeries<LaurentX> QDiffOp::apply(const GradedSeries<LaurentX>& f, const QParam& qp, int coeff_top) const {
  const int n_max = f.cutoff();
  std::map<Key, LaurentX> expanded;
  for (const auto& [key, r] : terms_) expanded.emplace(key, r.to_laurent(coeff_top));
  std::vector<LaurentX> out(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& [key, r] : expanded) {
      const auto [g, k] = key;
      if (n - g < 0) continue;
      LaurentX fn = f[n - g];
      if (fn.is_zero() && fn.exact()) continue;
      out[n] += r * fn.map_exponents([&](int e) { return qp.q_pow(static_cast<long>(k) * e); });
    }
  }
  return GradedSeries<LaurentX>::from_coefficients(std::move(out), n_max);
}

Scalar QDiffOp::apply_at(const std::function<Scalar(int, const Scalar&)>& f, int grade, const Scalar& x0,
                         const QParam& qp) const {
  Scalar acc = 0;
  for (const auto& [key, r] : terms_) {
    const auto [g, k] = key;
    if (grade - g < 0) continue;
    acc += r.eval(x0) * f(grade - g, qp.q_pow(k) * x0);
  }
  return acc;
}

std::string QDiffOp::to_string() const {
  std::string s;
  for (const auto& [key, r] : terms_) {
    if (!s.empty()) s += " + ";
    s += "Q^" + std::to_string(key.first) + " [" + r.to_string() + "] s^" + std::to_string(key.second);
  }
  return s.empty() ? "0" : s;
}

QDiffOp build_A(AForm form, const QParam& qp) {
  const Scalar qh = qp.q_half_pow(1);
  const Scalar qmh = qp.q_half_pow(-1);
  const RatFun one_minus = RatFun(Poly::linear(1, -qh));
  if (form == AForm::Sum) {
    QDiffOp a = QDiffOp::term(one_minus, 1, 0);
    a += QDiffOp::term(RatFun(Poly::linear(0, qh)), 0, 0);
    a += QDiffOp::term(RatFun(Poly::linear(0, qh)), 0, 1);
    a += QDiffOp::term(RatFun(Poly::monomial(1, 2), Poly::linear(1, -qmh)), -1, 1);
    return a;
  }
  const QDiffOp inv = QDiffOp::term(RatFun(1) / one_minus, 0, 0);
  auto factor = [&](int grade) {
    QDiffOp f = QDiffOp::identity();
    f += compose(QDiffOp::term(RatFun(Poly::linear(0, qh)), -1, grade), inv, qp);
    return f;
  };
  return compose(compose(factor(0), factor(1), qp), QDiffOp::term(one_minus, 1, 0), qp);
}

OperatorComparison compare_operators(const QDiffOp& a, const QDiffOp& b, int samples, unsigned seed) {
  OperatorComparison cmp;
  cmp.normal_forms_equal = a == b;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-97, 97);
  std::uniform_int_distribution<int> den(2, 89);
  QDiffOp diff = a - b;
  std::map<QDiffOp::Key, bool> keys;
  for (const auto& [k, r] : a.terms()) keys[k] = true;
  for (const auto& [k, r] : b.terms()) keys[k] = true;
  cmp.witness_equal = true;
  while (static_cast<int>(cmp.points.size()) < samples) {
    Scalar x(num(rng), den(rng));
    x.canonicalize();
    bool ok = true;
    std::vector<std::pair<Scalar, Scalar>> vals;
    for (const auto& [k, unused] : keys) {
      try {
        auto ia = a.terms().find(k);
        auto ib = b.terms().find(k);
        Scalar va = ia == a.terms().end() ? Scalar(0) : ia->second.eval(x);
        Scalar vb = ib == b.terms().end() ? Scalar(0) : ib->second.eval(x);
        vals.emplace_back(va, vb);
      } catch (const Error&) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    cmp.points.push_back(x);
    for (const auto& [va, vb] : vals) {
      if (va != vb) cmp.witness_equal = false;
    }
  }
  return cmp;
}

std::vector<DegreeResidual> qcurve_residual(int ncut, const QParam& qp, Exec exec) {
  auto z = z5d_x(ncut, qp, exec);
  auto az = build_A(AForm::Sum, qp).apply(z, qp);
  const Scalar x0(1, 7);
  std::vector<DegreeResidual> out;
  for (int n = 0; n <= ncut; ++n) {
    RatFun r = az[n] - z[n];
    DegreeResidual d{n, r.is_zero(), ""};
    if (!d.zero) d.witness = to_string(r.eval(x0));
    out.push_back(std::move(d));
  }
  return out;
}

Scalar qcurve_bracket_at(int n, const Scalar& x0, const QParam& qp) {
  auto zn = [&](int m, const Scalar& y) {
    Scalar acc = 0;
    for (const auto& lam : partitions_of(m)) {
      Scalar w = schur_principal(lam, qp);
      acc += w * w * insertion_factor_5d(lam, qp).eval(y);
    }
    return acc;
  };
  return build_A(AForm::Sum, qp).apply_at(zn, n, x0, qp) - zn(n, x0);
}

GradedSeries<LaurentX> apply_G(int j, int top, int ncut, const QParam& qp) {
  profile::Scope scope(profile::Stage::RSeries);
  const int span = top + j;
  auto plus = euler_expand(EulerSign::Plus, false, std::max(span, ncut), qp);
  auto minus = euler_expand(EulerSign::Minus, false, span, qp);
  std::vector<Scalar> pc(plus.begin(), plus.begin() + span + 1);
  const LaurentX p_plus = LaurentX::from_coefficients(0, std::move(pc), span);
  const LaurentX p_minus = LaurentX::from_coefficients(0, minus, span);
  std::vector<LaurentX> out(ncut + 1);
  for (int m = 0; m <= ncut; ++m) {
    // Q^m picks x^m e_m from Π(1 + Q q^{i-1/2} x).
    LaurentX f = LaurentX::monomial(plus[m], m - j) * p_plus;
    f = f.map_exponents([&](int e) { return qp.u_pow(-static_cast<long>(2 * e - 1) * (2 * e - 1)); });
    out[m] = (p_minus * f).truncated(top);
  }
  return GradedSeries<LaurentX>::from_coefficients(std::move(out), ncut);
}

KacSchwarzReport kac_schwarz_check(int jmax, int top, int ncut, const QParam& qp, Exec exec) {
  KacSchwarzReport rep;
  rep.window_lo = -jmax;
  rep.window_hi = top;
  const QDiffOp a = build_A(AForm::Sum, qp);
  const int inner = top + 2;
  std::vector<std::vector<std::string>> fails(jmax + 1);
  auto body = [&](int j) {
    auto phi = apply_G(j, inner, ncut, qp);
    auto lhs = a.apply(phi, qp, inner + j + 2);
    const Scalar eig = qp.q_pow(-j);
    for (int m = 0; m <= ncut; ++m) {
      LaurentX d = lhs[m] - phi[m] * eig;
      if (d.top() < top) {
        fails[j].push_back("j=" + std::to_string(j) + " Q^" + std::to_string(m) + ": window ends at x^" +
                           std::to_string(d.top()));
      } else if (!d.truncated(top).is_zero()) {
        fails[j].push_back("j=" + std::to_string(j) + " Q^" + std::to_string(m) + ": first mismatch at x^" +
                           std::to_string(d.lo()));
      }
    }
  };
  parallel_for(jmax + 1, exec, [&](long j) { body(static_cast<int>(j)); });
  for (auto& f : fails) rep.failures.insert(rep.failures.end(), f.begin(), f.end());

  // Z(x) against prefactor · Φ_0.
  auto phi0 = apply_G(0, top, ncut, qp);
  auto pre = q_prefactor_series(ncut, qp);
  auto zx = expand_in_x(z5d_x(ncut, qp, exec), top);
  std::vector<LaurentX> rhs(ncut + 1);
  for (int n = 0; n <= ncut; ++n) {
    for (int a2 = 0; a2 <= n; ++a2) rhs[n] += phi0[n - a2] * pre[a2];
  }
  rep.constant = zx[0].coeff(0) / rhs[0].coeff(0);
  rep.constant_uniform = true;
  for (int n = 0; n <= ncut; ++n) {
    LaurentX zn = n < static_cast<int>(zx.size()) ? zx[n] : LaurentX();
    if (!(zn - rhs[n] * rep.constant).truncated(top).is_zero()) {
      rep.constant_uniform = false;
      rep.failures.push_back("Z(x) differs from C·prefactor·Φ_0 at Q^" + std::to_string(n));
    }
  }
  rep.pass = rep.failures.empty();
  return rep;
}

void DiffOp4D::add(const RatFun& r, int shift, int grade) {
  if (r.is_zero()) return;
  auto [it, inserted] = terms_.emplace(Key{grade, shift}, r);
  if (!inserted) {
    it->second += r;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedSeries<RatFun> DiffOp4D::apply(const GradedSeries<RatFun>& f) const {
  profile::Scope scope(profile::Stage::RationalFunctions);
  const int n_max = f.cutoff();
  std::vector<RatFun> out(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& [key, r] : terms_) {
      const auto [g, m] = key;
      if (n - g < 0) continue;
      RatFun fn = f[n - g];
      if (fn.is_zero()) continue;
      out[n] += r * fn.shifted_arg(hbar_ * m);
    }
  }
  return GradedSeries<RatFun>::from_coefficients(std::move(out), n_max);
}

DiffOp4D curve_operator_4d(const Scalar& hbar) {
  DiffOp4D op(hbar);
  const RatFun x_minus = RatFun(Poly::linear(-hbar, 1));
  op.add(x_minus, -1, 0);
  op.add(-x_minus, 0, 0);
  op.add(RatFun(Poly(hbar * hbar), Poly::monomial(1, 1)), 1, 1);
  return op;
}

std::vector<DegreeResidual> residual_4d(int ncut, const Scalar& hbar, Exec exec) {
  auto z = z4d_x(ncut, hbar, exec);
  auto r = curve_operator_4d(hbar).apply(z);
  const Scalar x0(11, 3);
  std::vector<DegreeResidual> out;
  for (int n = 0; n <= ncut; ++n) {
    DegreeResidual d{n, r[n].is_zero(), ""};
    if (!d.zero) d.witness = to_string(r[n].eval(x0));
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace mcqc
