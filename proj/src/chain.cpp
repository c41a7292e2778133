#include "mcqc/chain.hpp"

#include "mcqc/schur.hpp"

namespace mcqc {

namespace {

using V = FockVector<Coef>;
using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ConfigError, "chain: " + what); }

int int_field(const json& op, const char* key) {
  if (!op.contains(key) || !op[key].is_number_integer()) bad(std::string("missing integer '") + key + "'");
  return op[key].get<int>();
}

Scalar scalar_field(const json& op, const char* key) {
  if (!op.contains(key)) bad(std::string("missing '") + key + "'");
  const json& v = op[key];
  if (v.is_number_integer()) return Scalar(v.get<long>());
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  bad(std::string("'") + key + "' must be an integer or a \"p/q\" string");
}

struct Context {
  const ChainSpec& spec;
  const QParam& qp;
  Exec exec;
  std::vector<TPoly> formal;

  std::vector<TPoly> couplings_of(const json& op) const {
    if (!op.contains("t")) bad("missing 't'");
    if (op["t"] == "formal") {
      if (formal.empty()) bad("formal couplings requested but none declared");
      return formal;
    }
    std::vector<TPoly> t;
    for (const auto& c : op["t"]) t.emplace_back(c.is_string() ? parse_scalar(c.get<std::string>()) : Scalar(c.get<long>()));
    return t;
  }

  int kmax() const { return std::max(spec.size_cap, 1); }

  V apply(const json& op, const V& v) const {
    const std::string name = op.value("op", "");
    if (name == "J") return apply_J(int_field(op, "k"), v, exec);
    if (name == "L0") return apply_diagonal(v, [](int s, const Partition& l) { return Scalar(l0_eigenvalue(s, l)); });
    if (name == "K") {
      return apply_diagonal(v, [](int s, const Partition& l) -> Scalar { return Scalar(k4_eigenvalue(s, l)) / 4; });
    }
    if (name == "H") {
      const int k = int_field(op, "k");
      return apply_diagonal(v, [&](int s, const Partition& l) { return h_eigenvalue(k, s, l, qp); });
    }
    if (name == "H4D") {
      const int k = int_field(op, "k");
      return apply_diagonal(v, [k](int s, const Partition& l) { return Scalar(h4d_eigenvalue(k, s, l)); });
    }
    if (name == "grading") return apply_grading(v);
    if (name == "signedL0") {
      return apply_diagonal(v, [&](int s, const Partition& l) { return neg_sqrt_q_l0_factor(s, l, qp); });
    }
    if (name == "qK") {
      const int sign = int_field(op, "sign");
      if (sign != 1 && sign != -1) bad("qK sign must be 1 or -1");
      return apply_diagonal(v, [&](int s, const Partition& l) { return q_half_k_factor(sign, s, l, qp); });
    }
    if (name == "expH" || name == "expH4D") {
      auto t = couplings_of(op);
      return apply_diagonal(v, [&](int s, const Partition& l) {
        return name == "expH" ? exp_h_factor(t, s, l, qp) : exp_h4d_factor(t, s, l);
      });
    }
    if (name == "expJ") {
      const int k = int_field(op, "k");
      if (k == 0) throw Error(ErrorKind::ZeroModeRequest, "exp(c J_0) requested");
      std::vector<Coef> c(std::abs(k));
      c.back() = RingLift<Coef>::from(scalar_field(op, "c"));
      return apply_vertex(c, k < 0, v, exec);
    }
    if (name == "expT") {
      const int sign = int_field(op, "sign");
      if (formal.empty()) bad("expT needs declared couplings");
      return apply_vertex(lift_all<Coef>(formal), sign < 0, v, exec);
    }
    if (name == "vertex") {
      const std::string side = op.value("side", "");
      if (side != "+" && side != "-") bad("vertex side must be \"+\" or \"-\"");
      const std::string kind_s = op.value("kind", "Gamma");
      VertexKind kind;
      if (kind_s == "Gamma") {
        kind = VertexKind::Gamma;
      } else if (kind_s == "GammaPrime") {
        kind = VertexKind::GammaPrime;
      } else {
        bad("unknown vertex kind " + kind_s);
      }
      const json at = op.value("at", json("rho"));
      std::vector<Scalar> c = at == "rho" ? vertex_coeffs_rho(kind, kmax(), qp)
                                          : vertex_coeffs_point(kind, scalar_field(op, "at"), kmax());
      std::vector<Coef> lifted = op.value("graded", false) ? lift_graded<Coef>(c) : lift_all<Coef>(c);
      if (op.value("inverse", false)) lifted = negated(lifted);
      return apply_vertex(lifted, side == "-", v, exec);
    }
    bad("unknown op '" + name + "'");
  }
};

}  // namespace

ChainSpec parse_chain(const json& j) {
  if (!j.is_object()) bad("expected an object");
  ChainSpec s;
  s.bra = j.value("bra", 0);
  s.ket = j.value("ket", s.bra);
  s.size_cap = j.value("size_cap", 4);
  s.ncut = j.value("ncut", 4);
  if (s.size_cap < 0 || s.ncut < 0) bad("negative window");
  if (j.contains("couplings")) {
    const auto& c = j["couplings"];
    s.stem = c.value("stem", "t");
    s.couplings = c.value("count", 0);
    s.tdeg = c.value("tdeg", 0);
  }
  if (!j.contains("ops") || !j["ops"].is_array()) bad("missing 'ops' array");
  s.ops = j["ops"];
  return s;
}

ChainResult evaluate_chain(const ChainSpec& spec, const QParam& qp, Exec exec) {
  Context ctx{spec, qp, exec, {}};
  if (spec.couplings > 0) {
    auto space = TSpace::couplings(spec.stem, spec.couplings, spec.tdeg);
    for (int k = 0; k < spec.couplings; ++k) ctx.formal.push_back(TPoly::variable(space, k));
  }
  V v = V::vacuum(spec.ket, spec.size_cap, GradedSeries<TPoly>::constant(TPoly(Scalar(1)), spec.ncut));
  for (auto it = spec.ops.rbegin(); it != spec.ops.rend(); ++it) v = ctx.apply(*it, v);
  ChainResult r;
  r.value = vev(spec.bra, v);
  r.trusted_grade = r.value.cutoff();
  return r;
}

}  // namespace mcqc
