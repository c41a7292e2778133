#include <doctest.h>

#include "mcqc/chain.hpp"
#include "mcqc/fock.hpp"
#include "mcqc/schur.hpp"

using namespace mcqc;

namespace {

FockVector<Scalar> basis(const Partition& lam, int cap, int charge = 0) {
  FockVector<Scalar> v(charge, cap);
  v.add(lam, Scalar(1));
  return v;
}

}  // namespace

TEST_CASE("bead sets round trip") {
  for (int s : {-2, 0, 3}) {
    for (const auto& lam : enumerate_partitions(5)) {
      MayaState m{s, lam};
      auto back = MayaState::from_beads(s, m.beads(lam.length() + 3));
      CHECK(back.partition == lam);
      CHECK(back.charge == s);
    }
  }
}

TEST_CASE("single current modes") {
  auto up = apply_J(-1, basis(Partition(), 4));
  CHECK(up.amplitudes().size() == 1);
  CHECK(up.amplitude(Partition({1})) == 1);
  auto down = apply_J(1, basis(Partition({1}), 4));
  CHECK(down.amplitude(Partition()) == 1);
  CHECK_THROWS_AS(apply_J(0, basis(Partition(), 2)), Error);

  // J_{-2}|∅⟩ = |(2)⟩ - |(1,1)⟩: ribbons of height 0 and 1
  auto two = apply_J(-2, basis(Partition(), 4));
  CHECK(two.amplitude(Partition({2})) == 1);
  CHECK(two.amplitude(Partition({1, 1})) == -1);

  // ⟨∅|[J_1, J_{-1}]|∅⟩ = 1
  auto e = basis(Partition(), 4);
  auto lhs = apply_J(1, apply_J(-1, e));
  lhs += apply_J(-1, apply_J(1, e)) * Scalar(-1);
  CHECK(vev(0, lhs) == 1);
}

TEST_CASE("heisenberg relations on small states") {
  for (const auto& lam : enumerate_partitions(3)) {
    for (int m = -3; m <= 3; ++m) {
      for (int n = -3; n <= 3; ++n) {
        if (m == 0 || n == 0) continue;
        auto e = basis(lam, 9);
        auto c = apply_J(m, apply_J(n, e));
        c += apply_J(n, apply_J(m, e)) * Scalar(-1);
        c += e * Scalar(m + n == 0 ? -m : 0);
        CHECK(c.empty());
      }
    }
  }
}

TEST_CASE("diagonal eigenvalues") {
  QParam qp(Scalar(2, 3));
  CHECK(k4_eigenvalue(0, Partition({2})) == 4 * 2);
  CHECK(k4_eigenvalue(0, Partition({1, 1})) == -4 * 2);
  CHECK(h_eigenvalue(1, 0, Partition({1}), qp) == qp.q() - 1);
  for (int s = -3; s <= 3; ++s) CHECK(l0_eigenvalue(s, Partition()) == s * (s + 1) / 2);
  for (const auto& lam : enumerate_partitions(5)) {
    CHECK(l0_eigenvalue(0, lam) == lam.size());
    CHECK(k4_eigenvalue(0, lam) == 4 * kappa(lam));
    for (int k = 1; k <= 3; ++k) {
      CHECK(h_eigenvalue(k, 0, lam, qp) == phi_k(lam, k, qp));
      CHECK(h4d_eigenvalue(k, 0, lam) == phi4d_k(lam, k));
    }
  }
  auto v = apply_diagonal(basis(Partition({2}), 3),
                          [](int s, const Partition& l) -> Scalar { return Scalar(k4_eigenvalue(s, l)) / 4; });
  CHECK(v.amplitude(Partition({2})) == 2);
}

TEST_CASE("vertex operators on the vacuum") {
  const Scalar x(3, 5);
  const int cap = 5;
  auto v = apply_vertex(vertex_coeffs_point(VertexKind::Gamma, x, cap), true, basis(Partition(), cap));
  for (const auto& lam : enumerate_partitions(cap)) {
    const Scalar expect = lam.length() <= 1 ? power(x, lam.size()) : Scalar(0);
    CHECK(v.amplitude(lam) == expect);
  }
  // Γ'_-(x)|∅⟩ gives single columns.
  auto w = apply_vertex(vertex_coeffs_point(VertexKind::GammaPrime, x, cap), true, basis(Partition(), cap));
  CHECK(w.amplitude(Partition({1, 1, 1})) == power(x, 3));
  CHECK(w.amplitude(Partition({3})) == 0);

  // exp(J_{-1})|∅⟩ = Σ dim λ/|λ|! |λ⟩
  std::vector<Scalar> c{Scalar(1)};
  auto p = apply_vertex(c, true, basis(Partition(), 6));
  for (const auto& lam : enumerate_partitions(6)) CHECK(p.amplitude(lam) == plancherel_weight(lam));

  // Γ_+(q^{-ρ}) leaves the vacuum alone.
  QParam qp(Scalar(2, 3));
  auto g = apply_vertex(vertex_coeffs_rho(VertexKind::Gamma, 3, qp), false, basis(Partition(), 3));
  CHECK(g.amplitudes().size() == 1);
  CHECK(g.amplitude(Partition()) == 1);
}

TEST_CASE("vertex commutation at the vacuum") {
  // ⟨0|Γ'_+(x)Γ'_-(y)|0⟩ = Σ_n (xy)^n through the size cap
  const Scalar x(1, 2), y(2, 7);
  const int cap = 6;
  auto ket = apply_vertex(vertex_coeffs_point(VertexKind::GammaPrime, y, cap), true, basis(Partition(), cap));
  auto out = apply_vertex(vertex_coeffs_point(VertexKind::GammaPrime, x, cap), false, ket);
  Scalar expect = 0;
  for (int n = 0; n <= cap; ++n) expect += power(x * y, n);
  CHECK(out.amplitude(Partition()) == expect);
  // reversed order: the lowering operator kills nothing but the vacuum
  auto rev = apply_vertex(vertex_coeffs_point(VertexKind::GammaPrime, y, cap), true,
                          apply_vertex(vertex_coeffs_point(VertexKind::GammaPrime, x, cap), false,
                                       basis(Partition(), cap)));
  CHECK(rev.amplitude(Partition()) == 1);
}

TEST_CASE("named states start at the vacuum") {
  QParam qp(Scalar(2, 3));
  for (auto which : {GState::G1, GState::G2, GState::G2Prime, GState::G}) {
    auto v = build_g_state(which, 2, 2, qp);
    CHECK(v.amplitude(Partition())[0] == TPoly(Scalar(1)));
  }
}

TEST_CASE("g state |(1)⟩ amplitude by reversed composition") {
  // g = Γ_-^{-1} q^{-K/2} Γ'_-(q^{-ρ}) Γ'_-(Qq^{-ρ}); all raising, so they
  // commute up to the diagonal factor, which is 1 on |(1)⟩. At Q^0 the |(1)⟩
  // amplitude is -h_1 + e_1 = 0 at the principal specialization.
  QParam qp(Scalar(2, 3));
  auto v = build_g_state(GState::G, 2, 1, qp);
  const Scalar q = qp.q();
  const Scalar h1 = qp.q_half_pow(1) / (1 - q);
  CHECK(v.amplitude(Partition({1}))[0] == TPoly(Scalar(-h1 + h1)));
  // Q^1: Γ'_-(Qq^{-ρ}) contributes Q e_1(q^{-ρ}) = Q h_1
  CHECK(v.amplitude(Partition({1}))[1] == TPoly(h1));
}

TEST_CASE("matrix elements and the state identity") {
  QParam qp(Scalar(2, 3));
  auto r = check_matrix_elements(3, qp);
  CHECK(r.pairs_checked == 49);
  CHECK(r.mismatches.empty());
  auto s = check_state_identity(2, 2, qp);
  CHECK(s.pass);
  CHECK(s.compared > 0);
}

TEST_CASE("vev chains") {
  QParam qp(Scalar(2, 3));
  const Scalar q = qp.q();
  auto spec = parse_chain(nlohmann::json::parse(R"({
    "size_cap": 1, "ncut": 1,
    "ops": [{"op": "vertex", "side": "+"}, {"op": "grading"}, {"op": "vertex", "side": "-"}]})"));
  auto r = evaluate_chain(spec, qp);
  CHECK(r.trusted_grade == 1);
  CHECK(r.value[0] == TPoly(Scalar(1)));
  CHECK(r.value[1] == TPoly(q / ((1 - q) * (1 - q))));

  auto pl = parse_chain(nlohmann::json::parse(R"({
    "size_cap": 2, "ncut": 2,
    "ops": [{"op": "expJ", "k": 1, "c": "1"}, {"op": "grading"}, {"op": "expJ", "k": -1, "c": "1"}]})"));
  auto p = evaluate_chain(pl, qp);
  CHECK(p.value[2] == TPoly(Scalar(1, 2)));

  CHECK(evaluate_chain(parse_chain(nlohmann::json::parse(R"({"ops": []})")), qp).value[0] == TPoly(Scalar(1)));
  CHECK_THROWS_AS(parse_chain(nlohmann::json::parse(R"({"ops": 3})")), Error);
  CHECK_THROWS_AS(evaluate_chain(parse_chain(nlohmann::json::parse(R"({"ops": [{"op": "nope"}]})")), qp), Error);
  CHECK_THROWS_AS(evaluate_chain(parse_chain(nlohmann::json::parse(R"({"bra": 1, "ket": 0, "ops": []})")), qp),
                  Error);
}
