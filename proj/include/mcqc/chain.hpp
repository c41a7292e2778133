#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mcqc/exec.hpp"
#include "mcqc/fock.hpp"

namespace mcqc {

/// A vacuum expectation value ⟨bra| op_1 op_2 ... op_n |ket⟩ described in JSON.
///
///   {"bra": 0, "ket": 0, "size_cap": 4, "ncut": 4,
///    "couplings": {"stem": "t", "count": 3, "tdeg": 2},
///    "ops": [{"op": "vertex", "side": "+", "at": "rho"}, {"op": "grading"}, ...]}
///
/// Ops are listed as written and applied right to left. Vocabulary:
///   J {k}                    current mode J_k
///   L0, K, H {k}, H4D {k}    diagonal operators (multiply by the eigenvalue)
///   grading                  Q^{L0} (fugacity monomial Q^{|λ|+s(s+1)/2})
///   signedL0                 (-q^{1/2})^{L0}
///   qK {sign}                q^{±K/2}
///   expH / expH4D {t}        exp(Σ t_k H_k); t is a list of "p/q" or "formal"
///   expJ {k, c}              exp(c J_k), c a "p/q" string
///   expT {sign}              exp(Σ t_k J_{±k}) in the formal couplings
///   vertex {side, kind, at, graded, inverse}
///                            Γ_± or Γ'_± at q^{-ρ} ("rho") or a point "p/q";
///                            graded puts Q^k on the k-th mode, inverse negates
struct ChainSpec {
  int bra = 0;
  int ket = 0;
  int size_cap = 4;
  int ncut = 4;
  std::string stem = "t";
  int couplings = 0;
  int tdeg = 0;
  nlohmann::json ops = nlohmann::json::array();
};

ChainSpec parse_chain(const nlohmann::json& j);

struct ChainResult {
  Coef value;
  int trusted_grade = 0;
};

ChainResult evaluate_chain(const ChainSpec& spec, const QParam& qp, Exec exec = Exec::Serial);

}  // namespace mcqc
