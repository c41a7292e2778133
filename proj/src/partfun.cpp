#include "mcqc/partfun.hpp"

#include "mcqc/schur.hpp"

namespace mcqc {

namespace {

// Σ over λ of term(λ) placed at grade |λ| + offset; terms evaluated in
// parallel, summed in enumeration order so the result never depends on
// scheduling.
template <class E, class F>
GradedSeries<E> lambda_sum(int ncut, int offset, Exec exec, F&& term) {
  auto parts = enumerate_partitions(ncut);
  const int n = static_cast<int>(parts.size());
  std::vector<E> terms(n);
  parallel_for(n, exec, [&](long i) { terms[i] = term(parts[i]); });
  std::vector<E> coeffs(ncut + offset + 1);
  for (int i = 0; i < n; ++i) coeffs[parts[i].size() + offset] += terms[i];
  return GradedSeries<E>::from_coefficients(std::move(coeffs), ncut + offset);
}

}  // namespace

FactoredRatFun insertion_factor_5d(const Partition& lambda, const QParam& qp) {
  FactoredRatFun f;
  for (int i = 1; i <= lambda.length(); ++i) {
    // (1 - q^{λ_i-i+1/2} x)/(1 - q^{-i+1/2} x); q^{m+1/2} = u^{8m+4}
    f.multiply(1, -qp.u_pow(8L * (lambda.part(i) - i) + 4), 1, -qp.u_pow(8L * (-i) + 4));
  }
  return f;
}

FactoredRatFun insertion_factor_4d(const Partition& lambda, const Scalar& hbar) {
  FactoredRatFun f;
  for (int i = 1; i <= lambda.length(); ++i) {
    f.multiply(-Scalar(lambda.part(i) - i + 1) * hbar, 1, -Scalar(1 - i) * hbar, 1);
  }
  return f;
}

GradedSeries<TPoly> z5d(const ZSpec& spec, const QParam& qp, Exec exec) {
  const int s = spec.charge;
  return lambda_sum<TPoly>(spec.ncut, s * (s + 1) / 2, exec, [&](const Partition& lam) {
    Scalar w = schur_principal(lam, qp);
    w *= w;
    if (!spec.insertions.empty()) {
      FactoredRatFun f = insertion_factor_5d(lam, qp);
      for (const auto& x : spec.insertions) w *= f.eval(x);
    }
    TPoly phi;
    for (std::size_t k = 0; k < spec.t.size(); ++k) {
      if (!spec.t[k].is_zero()) phi += spec.t[k] * phi_k_s(lam, static_cast<int>(k + 1), s, qp);
    }
    return phi.is_zero() ? TPoly(w) : tpoly_exp(phi) * w;
  });
}

GradedSeries<TPoly> z4d(const ZSpec& spec, const Scalar& hbar, Exec exec) {
  if (sgn(hbar) == 0) throw Error(ErrorKind::Precondition, "hbar must be nonzero");
  const int s = spec.charge;
  return lambda_sum<TPoly>(spec.ncut, s * (s + 1) / 2, exec, [&](const Partition& lam) {
    Scalar w = plancherel_weight(lam);
    w *= w;
    if (!spec.insertions.empty()) {
      FactoredRatFun f = insertion_factor_4d(lam, hbar);
      for (const auto& x : spec.insertions) w *= f.eval(x);
    }
    TPoly phi;
    for (std::size_t k = 0; k < spec.t.size(); ++k) {
      if (!spec.t[k].is_zero()) phi += spec.t[k] * Scalar(h4d_eigenvalue(static_cast<int>(k + 1), s, lam));
    }
    return phi.is_zero() ? TPoly(w) : tpoly_exp(phi) * w;
  });
}

namespace {

// Σ_{|λ|=n} w(λ) N_λ(x) / D_n(x), where D_n is the product of the first n
// denominator factors and N_λ absorbs the factors beyond ℓ(λ).
template <class W, class Num, class Den>
GradedSeries<RatFun> common_denominator_sum(int ncut, Exec exec, W&& weight, Num&& num_factor, Den&& den_factor) {
  std::vector<RatFun> coeffs(ncut + 1);
  auto body = [&](int n) {
    Poly den(Scalar(1));
    for (int i = 1; i <= n; ++i) den = den * den_factor(i);
    Poly num;
    for (const auto& lam : partitions_of(n)) {
      Poly p(weight(lam));
      for (int i = 1; i <= n; ++i) p = p * (i <= lam.length() ? num_factor(lam, i) : den_factor(i));
      num += p;
    }
    coeffs[n] = RatFun(std::move(num), std::move(den));
  };
  parallel_for(ncut + 1, exec, [&](long n) { body(static_cast<int>(n)); });
  return GradedSeries<RatFun>::from_coefficients(std::move(coeffs), ncut);
}

}  // namespace

GradedSeries<RatFun> z5d_x(int ncut, const QParam& qp, Exec exec) {
  return common_denominator_sum(
      ncut, exec,
      [&](const Partition& lam) {
        Scalar w = schur_principal(lam, qp);
        return Scalar(w * w);
      },
      [&](const Partition& lam, int i) { return Poly::linear(1, -qp.u_pow(8L * (lam.part(i) - i) + 4)); },
      [&](int i) { return Poly::linear(1, -qp.u_pow(8L * (-i) + 4)); });
}

GradedSeries<RatFun> z4d_x(int ncut, const Scalar& hbar, Exec exec) {
  if (sgn(hbar) == 0) throw Error(ErrorKind::Precondition, "hbar must be nonzero");
  return common_denominator_sum(
      ncut, exec,
      [&](const Partition& lam) {
        Scalar w = plancherel_weight(lam);
        return Scalar(w * w);
      },
      [&](const Partition& lam, int i) { return Poly::linear(-Scalar(lam.part(i) - i + 1) * hbar, 1); },
      [&](int i) { return Poly::linear(Scalar(i - 1) * hbar, 1); });
}

std::vector<LaurentX> expand_in_x(const GradedSeries<RatFun>& z, int xdeg) {
  std::vector<LaurentX> out;
  for (int n = 0; n <= z.cutoff() && n < z.stored(); ++n) out.push_back(z[n].to_laurent(xdeg));
  return out;
}

TPoly linear_fraction_series(const Scalar& a0, const Scalar& a1, const Scalar& b0, const Scalar& b1, const TPoly& y) {
  if (sgn(b0) == 0) throw Error(ErrorKind::InsertionPole, "linear fraction has a pole at the expansion point");
  // (a0 + a1 y) / b0 · Σ_m (-b1 y / b0)^m, cut by the TPoly window.
  TPoly ratio = y * Scalar(-b1 / b0);
  TPoly geo(Scalar(1));
  TPoly pw(Scalar(1));
  const int cut = y.cutoff();
  const int val = y.valuation();
  for (int m = 1; val > 0 && m * val <= cut; ++m) {
    pw = pw * ratio;
    if (pw.is_zero()) break;
    geo += pw;
  }
  return (TPoly(a0 / b0) + y * Scalar(a1 / b0)) * geo;
}

const char* fermionic_check_name(FermionicCheck which) {
  switch (which) {
    case FermionicCheck::ZtEH:
      return "Z_t_eH";
    case FermionicCheck::ZtG1:
      return "Z_t_g1";
    case FermionicCheck::ZtDual:
      return "Z_t_dual";
    case FermionicCheck::Z4dEH:
      return "Z4D_eH";
    case FermionicCheck::Z4dCharge:
      return "Z4D_s";
  }
  return "?";
}

namespace {

std::string first_mismatch(const GradedSeries<TPoly>& a, const GradedSeries<TPoly>& b, int upto) {
  for (int n = 0; n <= upto; ++n) {
    if (!(a[n] == b[n])) return "grade " + std::to_string(n) + ": " + a[n].to_string() + " vs " + b[n].to_string();
  }
  return {};
}

}  // namespace

CrosscheckResult crosscheck_fermionic(FermionicCheck which, const CrosscheckConfig& cfg, const QParam& qp, Exec exec) {
  CrosscheckResult res;
  res.which = which;
  const int m = cfg.couplings;
  auto space = TSpace::couplings("t", m, cfg.tdeg);
  std::vector<TPoly> t;
  for (int k = 0; k < m; ++k) t.push_back(TPoly::variable(space, k));
  const int N = cfg.ncut;
  const int s = which == FermionicCheck::Z4dCharge ? cfg.charge : 0;
  const int base = s * (s + 1) / 2;
  // Lowering by Σ c_k J_k with c_k of t-degree >= 1 reaches tdeg·m sizes down.
  const bool t_lowering = which == FermionicCheck::ZtG1 || which == FermionicCheck::ZtDual;
  const int S = t_lowering ? std::max(N, cfg.tdeg * m) : N;
  res.size_cap = S;
  const Coef one = GradedSeries<TPoly>::constant(TPoly(Scalar(1)), N + base);
  GradedSeries<TPoly> fermionic;
  GradedSeries<TPoly> combinatorial;

  switch (which) {
    case FermionicCheck::ZtEH: {
      // ⟨0|Γ_+ Q^{L0} e^{H(t)} Γ_- |0⟩
      auto gamma = lift_all<Coef>(vertex_coeffs_rho(VertexKind::Gamma, S, qp));
      auto v = FockVector<Coef>::vacuum(0, S, one);
      v = apply_vertex(gamma, true, v, exec);
      v = apply_diagonal(v, [&](int c, const Partition& l) { return exp_h_factor(t, c, l, qp); });
      v = apply_grading(v);
      v = apply_vertex(gamma, false, v, exec);
      fermionic = vev(0, v);
      combinatorial = z5d(ZSpec{t, 0, {}, N}, qp, exec);
      break;
    }
    case FermionicCheck::ZtG1: {
      // exp(Σ q^k t_k/(1-q^k)) ⟨0|exp(Σ (-1)^k q^{k/2} t_k J_k) g_1|0⟩
      auto v = build_g_state(GState::G1, S, N, qp, exec);
      std::vector<Coef> c(S);
      TPoly pre;
      for (int k = 1; k <= m; ++k) {
        Scalar a = qp.q_half_pow(k);
        if (k % 2 == 1) a = -a;
        c[k - 1] = RingLift<Coef>::from(t[k - 1] * a);
        pre += t[k - 1] * (qp.q_pow(k) / qp.one_minus_q_pow(k));
      }
      v = apply_vertex(c, false, v, exec);
      fermionic = vev(0, v) * RingLift<Coef>::from(tpoly_exp(pre));
      combinatorial = z5d(ZSpec{t, 0, {}, N}, qp, exec);
      break;
    }
    case FermionicCheck::ZtDual: {
      // ⟨0|exp(Σ(-1)^k q^{k/2} t_k J_k) g_2|0⟩ = ⟨0|exp(-Σ q^{k/2} t_k J_k) g_2'|0⟩
      auto v2 = build_g_state(GState::G2, S, N, qp, exec);
      auto v2p = build_g_state(GState::G2Prime, S, N, qp, exec);
      std::vector<Coef> c(S), cp(S);
      for (int k = 1; k <= m; ++k) {
        Scalar a = qp.q_half_pow(k);
        c[k - 1] = RingLift<Coef>::from(t[k - 1] * (k % 2 == 1 ? Scalar(-a) : a));
        cp[k - 1] = RingLift<Coef>::from(t[k - 1] * Scalar(-a));
      }
      fermionic = vev(0, apply_vertex(c, false, v2, exec));
      auto dual = vev(0, apply_vertex(cp, false, v2p, exec));
      combinatorial = z5d(ZSpec{t, 0, {}, N}, qp, exec);
      std::string mm = first_mismatch(fermionic, dual, std::min(fermionic.cutoff(), dual.cutoff()));
      if (!mm.empty()) res.detail = "dual vevs differ at " + mm;
      break;
    }
    case FermionicCheck::Z4dEH:
    case FermionicCheck::Z4dCharge: {
      // ⟨s|e^{J_1} w^{L0} e^{H4D(T)} e^{J_{-1}}|s⟩
      std::vector<Coef> c(S);
      if (S > 0) c[0] = RingLift<Coef>::from(Scalar(1));
      auto v = FockVector<Coef>::vacuum(s, S, one);
      v = apply_vertex(c, true, v, exec);
      v = apply_diagonal(v, [&](int ch, const Partition& l) { return exp_h4d_factor(t, ch, l); });
      v = apply_grading(v);
      v = apply_vertex(c, false, v, exec);
      fermionic = vev(s, v);
      combinatorial = z4d(ZSpec{t, s, {}, N}, cfg.hbar, exec);
      if (which == FermionicCheck::Z4dCharge) {
        for (int k = 1; k <= m; ++k) {
          Integer corr = h4d_eigenvalue(k, s, Partition());
          bool uniform = true;
          for (const auto& lam : enumerate_partitions(std::min(N, 4))) {
            Integer shifted = 0;
            for (int i = 1; i <= lam.length(); ++i) {
              Integer a, b;
              mpz_pow_ui(a.get_mpz_t(), Integer(lam.part(i) - i + 1 + s).get_mpz_t(), k);
              mpz_pow_ui(b.get_mpz_t(), Integer(-i + 1 + s).get_mpz_t(), k);
              shifted += a - b;
            }
            if (h4d_eigenvalue(k, s, lam) - shifted != corr) uniform = false;
          }
          res.discovered.push_back("k=" + std::to_string(k) + " correction " + corr.get_str() +
                                   (uniform ? " (independent of lambda)" : " (lambda-dependent)"));
          // 5D: the closed-form tail against the bead eigenvalue.
          bool tail_ok = true;
          for (const auto& lam : enumerate_partitions(std::min(N, 4))) {
            if (phi_k_s(lam, k, s, qp) != h_eigenvalue(k, s, lam, qp)) tail_ok = false;
          }
          res.discovered.push_back("k=" + std::to_string(k) + " 5D tail formula " +
                                   (tail_ok ? "matches" : "differs from") + " bead eigenvalue");
        }
      }
      break;
    }
  }
  int upto = std::min(fermionic.cutoff(), combinatorial.cutoff());
  res.trusted_grade = upto;
  std::string mm = first_mismatch(fermionic, combinatorial, upto);
  if (!mm.empty()) res.detail += (res.detail.empty() ? "" : "; ") + mm;
  res.pass = res.detail.empty() && upto >= N + base;
  if (upto < N + base && res.detail.empty()) res.detail = "trusted window ends at grade " + std::to_string(upto);
  return res;
}

}  // namespace mcqc
