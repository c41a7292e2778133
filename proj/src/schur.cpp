#include "mcqc/schur.hpp"

#include <utility>

namespace mcqc {

Scalar plancherel_weight(const Partition& lambda) {
  Integer prod = 1;
  for (const auto& [cell, h] : hook_lengths(lambda)) prod *= h;
  return Scalar(Integer(1), prod);
}

Scalar schur_principal(const Partition& lambda, const QParam& qp) {
  // q^{-κ/4} / Π (q^{-h/2} - q^{h/2}); in u-powers q^{-κ/4} = u^{-2κ}.
  Scalar den(1);
  for (const auto& [cell, h] : hook_lengths(lambda)) {
    Scalar f = qp.q_half_pow(-h) - qp.q_half_pow(h);
    if (sgn(f) == 0) throw Error(ErrorKind::SpecializationPole, "hook factor vanishes");
    den *= f;
  }
  return qp.u_pow(-2L * kappa(lambda)) / den;
}

Scalar complete_principal(int n, const QParam& qp) {
  if (n < 0) return Scalar(0);
  if (n == 0) return Scalar(1);
  return qp.q_half_pow(n) / qp.qpochhammer(n);
}

Scalar determinant(std::vector<std::vector<Scalar>> m) {
  const std::size_t n = m.size();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m[piv][c]) == 0) ++piv;
    if (piv == n) return Scalar(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    Scalar inv = Scalar(1) / m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      Scalar f = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

Scalar skew_schur_principal(const Partition& lambda, const Partition& mu, const QParam& qp) {
  if (!lambda.contains(mu)) return Scalar(0);
  int n = lambda.length();
  if (n == 0) return Scalar(1);
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = complete_principal(lambda.part(i) - mu.part(j) - i + j, qp);
  }
  return determinant(std::move(m));
}

std::optional<int> skew_schur_single(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) return std::nullopt;
  // Horizontal strip: λ_{i+1} <= μ_i for every i.
  for (int i = 1; i < lambda.length(); ++i) {
    if (lambda.part(i + 1) > mu.part(i)) return std::nullopt;
  }
  return lambda.size() - mu.size();
}

Scalar phi_k(const Partition& lambda, int k, const QParam& qp) {
  Scalar s(0);
  for (int i = 1; i <= lambda.length(); ++i) s += qp.q_pow(static_cast<long>(k) * (lambda.part(i) - i + 1)) - qp.q_pow(static_cast<long>(k) * (1 - i));
  return s;
}

Scalar phi_k_s(const Partition& lambda, int k, int s, const QParam& qp) {
  Scalar v(0);
  for (int i = 1; i <= lambda.length(); ++i) {
    v += qp.q_pow(static_cast<long>(k) * (lambda.part(i) - i + 1 + s)) - qp.q_pow(static_cast<long>(k) * (1 - i + s));
  }
  return v + (Scalar(1) - qp.q_pow(static_cast<long>(k) * s)) / qp.one_minus_q_pow(k) * qp.q_pow(k);
}

Integer phi4d_k(const Partition& lambda, int k) {
  Integer v = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    Integer a, b;
    mpz_pow_ui(a.get_mpz_t(), Integer(lambda.part(i) - i + 1).get_mpz_t(), k);
    mpz_pow_ui(b.get_mpz_t(), Integer(1 - i).get_mpz_t(), k);
    v += a - b;
  }
  return v;
}

}  // namespace mcqc
