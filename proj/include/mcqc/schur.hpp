#pragma once

#include <optional>

#include "mcqc/exact.hpp"
#include "mcqc/partitions.hpp"

namespace mcqc {

// dim λ / |λ|! = 1 / product of hook lengths.
Scalar plancherel_weight(const Partition& lambda);

// s_λ at x_i = q^{i-1/2} by the q-hook formula.
Scalar schur_principal(const Partition& lambda, const QParam& qp);

// h_n at x_i = q^{i-1/2}: q^{n/2} / (q;q)_n, zero for n < 0.
Scalar complete_principal(int n, const QParam& qp);

// s_{λ/μ} at x_i = q^{i-1/2} by the Jacobi-Trudi determinant; 0 unless μ ⊆ λ.
Scalar skew_schur_principal(const Partition& lambda, const Partition& mu, const QParam& qp);

// s_{λ/μ}(x) for a single variable: the exponent |λ|-|μ| when λ/μ is a
// horizontal strip, nothing otherwise.
std::optional<int> skew_schur_single(const Partition& lambda, const Partition& mu);

// Σ_i (q^{k(λ_i-i+1)} - q^{k(-i+1)})
Scalar phi_k(const Partition& lambda, int k, const QParam& qp);
// Charge-s potential: the shifted sum plus the tail (1-q^{ks})/(1-q^k) q^k.
Scalar phi_k_s(const Partition& lambda, int k, int s, const QParam& qp);
// Σ_i ((λ_i-i+1)^k - (-i+1)^k)
Integer phi4d_k(const Partition& lambda, int k);

// Determinant over Q by fraction-exact Gaussian elimination.
Scalar determinant(std::vector<std::vector<Scalar>> m);

}  // namespace mcqc
