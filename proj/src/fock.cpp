#include "mcqc/fock.hpp"

#include <set>

#include "mcqc/qseries.hpp"
#include "mcqc/schur.hpp"

namespace mcqc {

std::vector<int> MayaState::beads(int count) const {
  std::vector<int> b(count);
  for (int i = 1; i <= count; ++i) b[i - 1] = partition.part(i) - i + 1 + charge;
  return b;
}

MayaState MayaState::from_beads(int charge, const std::vector<int>& beads) {
  // beads strictly decreasing; λ_i = b_i + i - 1 - s
  std::vector<int> parts;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    int p = beads[i] + static_cast<int>(i) - charge;
    if (p < 0) throw Error(ErrorKind::Precondition, "bead set is not a charge-" + std::to_string(charge) + " state");
    if (p > 0) parts.push_back(p);
  }
  return MayaState{charge, Partition(std::move(parts))};
}

std::vector<BeadMove> current_action(int k, const Partition& lambda) {
  if (k == 0) throw Error(ErrorKind::ZeroModeRequest, "J_0 requested");
  const int kk = k < 0 ? -k : k;
  const int step = k < 0 ? kk : -kk;
  // ℓ(λ) + |k| beads see every allowed move; deeper beads land on occupied slots.
  const int count = lambda.length() + kk;
  MayaState st{0, lambda};
  std::vector<int> b = st.beads(count);
  std::set<int> occ(b.begin(), b.end());
  const int floor_pos = b.back();  // everything below is occupied
  std::vector<BeadMove> out;
  for (int i = 0; i < count; ++i) {
    int from = b[i];
    int to = from + step;
    if (to <= floor_pos - 1 || occ.count(to)) continue;
    int lo = std::min(from, to), hi = std::max(from, to);
    int between = 0;
    for (int p : b) {
      if (p > lo && p < hi) ++between;
    }
    std::vector<int> nb = b;
    nb[i] = to;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    out.push_back(BeadMove{MayaState::from_beads(0, nb).partition, between % 2 == 0 ? 1 : -1});
  }
  return out;
}

namespace {

// Σ over occupied n > 0 of f(n) minus Σ over empty n <= 0 of f(n).
template <class T, class F>
T bead_sum(int charge, const Partition& lambda, F&& f) {
  const int count = lambda.length() + (charge < 0 ? -charge : charge) + 1;
  MayaState st{charge, lambda};
  std::vector<int> b = st.beads(count);
  std::set<int> occ(b.begin(), b.end());
  T acc = T(0);
  for (int p : b) {
    if (p > 0) acc += f(p);
  }
  for (int n = b.back(); n <= 0; ++n) {
    if (!occ.count(n)) acc -= f(n);
  }
  return acc;
}

}  // namespace

Integer l0_eigenvalue(int charge, const Partition& lambda) {
  return bead_sum<Integer>(charge, lambda, [](int n) { return Integer(n); });
}

Integer k4_eigenvalue(int charge, const Partition& lambda) {
  return bead_sum<Integer>(charge, lambda, [](int n) -> Integer { return Integer(2 * n - 1) * (2 * n - 1); });
}

Scalar h_eigenvalue(int k, int charge, const Partition& lambda, const QParam& qp) {
  return bead_sum<Scalar>(charge, lambda, [&](int n) { return qp.q_pow(static_cast<long>(k) * n); });
}

Integer h4d_eigenvalue(int k, int charge, const Partition& lambda) {
  return bead_sum<Integer>(charge, lambda, [&](int n) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), Integer(n).get_mpz_t(), k);
    return r;
  });
}

Scalar q_half_k_factor(int sign, int charge, const Partition& lambda, const QParam& qp) {
  // q^{K/2} = u^{4K}
  return qp.u_pow(sign * k4_eigenvalue(charge, lambda).get_si());
}

Scalar neg_sqrt_q_l0_factor(int charge, const Partition& lambda, const QParam& qp) {
  long l0 = l0_eigenvalue(charge, lambda).get_si();
  Scalar v = qp.q_half_pow(l0);
  return l0 % 2 == 0 ? v : Scalar(-v);
}

TPoly exp_h_factor(const std::vector<TPoly>& t, int charge, const Partition& lambda, const QParam& qp) {
  TPoly phi;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k].is_zero()) continue;
    phi += t[k] * h_eigenvalue(static_cast<int>(k + 1), charge, lambda, qp);
  }
  return tpoly_exp(phi);
}

TPoly exp_h4d_factor(const std::vector<TPoly>& t, int charge, const Partition& lambda) {
  TPoly phi;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k].is_zero()) continue;
    phi += t[k] * Scalar(h4d_eigenvalue(static_cast<int>(k + 1), charge, lambda));
  }
  return tpoly_exp(phi);
}

std::vector<Scalar> vertex_coeffs_point(VertexKind kind, const Scalar& x, int kmax) {
  std::vector<Scalar> c(kmax);
  Scalar xp(1);
  for (int k = 1; k <= kmax; ++k) {
    xp *= x;
    c[k - 1] = xp / k;
    if (kind == VertexKind::GammaPrime && k % 2 == 0) c[k - 1] = -c[k - 1];
  }
  return c;
}

std::vector<Scalar> vertex_coeffs_rho(VertexKind kind, int kmax, const QParam& qp) {
  std::vector<Scalar> c(kmax);
  for (int k = 1; k <= kmax; ++k) {
    c[k - 1] = qp.q_half_pow(k) / (qp.one_minus_q_pow(k) * k);
    if (kind == VertexKind::GammaPrime && k % 2 == 0) c[k - 1] = -c[k - 1];
  }
  return c;
}

std::vector<TPoly> vertex_coeffs_formal(VertexKind kind, const TPoly& x, int kmax) {
  std::vector<TPoly> c(kmax);
  TPoly xp(Scalar(1));
  for (int k = 1; k <= kmax; ++k) {
    xp = xp * x;
    Scalar w(1, k);
    if (kind == VertexKind::GammaPrime && k % 2 == 0) w = -w;
    c[k - 1] = xp * w;
  }
  return c;
}

FockVector<Coef> build_g_state(GState which, int size_cap, int ncut, const QParam& qp, Exec exec) {
  using V = FockVector<Coef>;
  const Coef one = GradedSeries<TPoly>::constant(TPoly(Scalar(1)), ncut);
  const int kmax = std::max(size_cap, 1);
  auto gamma = lift_all<Coef>(vertex_coeffs_rho(VertexKind::Gamma, kmax, qp));
  auto gprime = lift_all<Coef>(vertex_coeffs_rho(VertexKind::GammaPrime, kmax, qp));
  auto qk = [&](int sign) {
    return [&qp, sign](int s, const Partition& l) { return q_half_k_factor(sign, s, l, qp); };
  };
  V v = V::vacuum(0, size_cap, one);
  switch (which) {
    case GState::G1:
    case GState::G2: {
      // q^{K/2} Γ_- Γ_+ Q^{L0} Γ_- Γ_+ q^{K/2}
      v = apply_diagonal(v, qk(+1));
      v = apply_vertex(gamma, false, v, exec);
      v = apply_vertex(gamma, true, v, exec);
      v = apply_grading(v);
      v = apply_vertex(gamma, false, v, exec);
      v = apply_vertex(gamma, true, v, exec);
      v = apply_diagonal(v, qk(+1));
      if (which == GState::G2) v = apply_vertex(negated(gprime), true, v, exec);
      return v;
    }
    case GState::G2Prime: {
      // Γ_-^{-1} q^{-K/2} Γ'_- Γ'_+ Q^{L0} Γ'_- Γ'_+ q^{-K/2}
      v = apply_diagonal(v, qk(-1));
      v = apply_vertex(gprime, false, v, exec);
      v = apply_vertex(gprime, true, v, exec);
      v = apply_grading(v);
      v = apply_vertex(gprime, false, v, exec);
      v = apply_vertex(gprime, true, v, exec);
      v = apply_diagonal(v, qk(-1));
      v = apply_vertex(negated(gamma), true, v, exec);
      return v;
    }
    case GState::G: {
      // Γ_-^{-1} q^{-K/2} Γ'_-(q^{-ρ}) Γ'_-(Q q^{-ρ})
      v = apply_vertex(lift_graded<Coef>(vertex_coeffs_rho(VertexKind::GammaPrime, kmax, qp)), true, v, exec);
      v = apply_vertex(gprime, true, v, exec);
      v = apply_diagonal(v, qk(-1));
      v = apply_vertex(negated(gamma), true, v, exec);
      return v;
    }
  }
  return v;
}

MatrixElementReport check_matrix_elements(int cutoff, const QParam& qp) {
  MatrixElementReport rep;
  auto parts = enumerate_partitions(cutoff);
  auto gamma = vertex_coeffs_rho(VertexKind::Gamma, std::max(cutoff, 1), qp);
  auto gprime = vertex_coeffs_rho(VertexKind::GammaPrime, std::max(cutoff, 1), qp);
  for (const auto& mu : parts) {
    auto ket = FockVector<Scalar>(0, cutoff);
    ket.add(mu, Scalar(1));
    auto img = apply_vertex(gamma, true, ket);
    auto imgp = apply_vertex(gprime, true, ket);
    auto muc = mu.conjugate();
    auto ketc = FockVector<Scalar>(0, cutoff);
    ketc.add(muc, Scalar(1));
    auto imgc = apply_vertex(gprime, true, ketc);
    auto down = apply_vertex(gamma, false, ket);
    for (const auto& lam : parts) {
      ++rep.pairs_checked;
      Scalar expect = skew_schur_principal(lam, mu, qp);
      if (img.amplitude(lam) != expect) {
        rep.mismatches.push_back("<" + lam.to_string() + "|G-|" + mu.to_string() + ">");
      }
      Scalar expect_p = skew_schur_principal(lam.conjugate(), muc, qp);
      if (imgp.amplitude(lam) != expect_p) {
        rep.mismatches.push_back("<" + lam.to_string() + "|G'-|" + mu.to_string() + ">");
      }
      // ⟨λ|Γ_-|μ⟩ = ⟨ᵗλ|Γ'_-|ᵗμ⟩
      if (img.amplitude(lam) != imgc.amplitude(lam.conjugate())) {
        rep.mismatches.push_back("conjugation <" + lam.to_string() + "|G-|" + mu.to_string() + ">");
      }
      // ⟨λ|Γ_+|μ⟩ = ⟨μ|Γ_-|λ⟩ = s_{μ/λ}
      if (down.amplitude(lam) != skew_schur_principal(mu, lam, qp)) {
        rep.mismatches.push_back("<" + lam.to_string() + "|G+|" + mu.to_string() + ">");
      }
    }
    if (l0_eigenvalue(0, mu) != l0_eigenvalue(0, muc)) rep.mismatches.push_back("L0 conjugation " + mu.to_string());
    if (k4_eigenvalue(0, mu) != -k4_eigenvalue(0, muc)) rep.mismatches.push_back("K conjugation " + mu.to_string());
  }
  return rep;
}

StateIdentityReport check_state_identity(int ncut, int max_size, const QParam& qp, Exec exec) {
  StateIdentityReport rep;
  auto lhs = build_g_state(GState::G2Prime, max_size, ncut, qp, exec);
  auto rhs = build_g_state(GState::G, max_size, ncut, qp, exec);
  auto pre = q_prefactor_series(ncut, qp).map([](const Scalar& c) { return TPoly(c); });
  rep.trusted_size = std::min(lhs.trusted_size(), rhs.trusted_size());
  rep.trusted_grade = std::min({lhs.trusted_grade(), rhs.trusted_grade(), ncut});
  for (const auto& lam : enumerate_partitions(std::min(max_size, rep.trusted_size))) {
    ++rep.compared;
    Coef a = lhs.amplitude(lam).truncated(rep.trusted_grade);
    Coef b = (rhs.amplitude(lam) * pre).truncated(rep.trusted_grade);
    if (!(a - b).is_zero()) rep.mismatches.push_back(lam.to_string());
  }
  rep.pass = rep.mismatches.empty() && rep.trusted_size >= max_size && rep.trusted_grade >= ncut;
  return rep;
}

}  // namespace mcqc
