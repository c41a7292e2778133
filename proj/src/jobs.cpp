#include "mcqc/jobs.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "mcqc/bilinear.hpp"
#include "mcqc/chain.hpp"
#include "mcqc/fock.hpp"
#include "mcqc/limit4d.hpp"
#include "mcqc/partfun.hpp"
#include "mcqc/partitions.hpp"
#include "mcqc/profile.hpp"
#include "mcqc/qcurve.hpp"
#include "mcqc/qseries.hpp"
#include "mcqc/schur.hpp"

namespace mcqc {

using nlohmann::json;

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Untrusted:
      return "untrusted";
  }
  return "fail";
}

bool Report::pass() const {
  return !entries.empty() &&
         std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.status == Status::Pass; });
}

json scalar_json(const Scalar& s) { return to_string(s); }

namespace {

json tpoly_json(const TPoly& p) {
  json out = json::object();
  for (const auto& [m, c] : p.terms()) {
    std::string key;
    if (p.space()) {
      for (int v = 0; v < p.space()->size(); ++v) {
        const int e = TPoly::exponent(m, v);
        if (e == 0) continue;
        if (!key.empty()) key += "*";
        key += p.space()->names[v];
        if (e > 1) key += "^" + std::to_string(e);
      }
    }
    out[key.empty() ? "1" : key] = to_string(c);
  }
  return out;
}

template <class R, class F>
json series_json(const GradedSeries<R>& s, F&& coeff) {
  json cs = json::array();
  for (int d = 0; d <= s.cutoff() && d < s.stored(); ++d) cs.push_back(coeff(s.coefficients()[d]));
  for (int d = s.stored(); d <= s.cutoff(); ++d) cs.push_back(coeff(R{}));
  return {{"window", {0, s.cutoff()}}, {"coefficients", cs}};
}

std::string window(const std::string& var, int lo, int hi) {
  return var + "^" + std::to_string(lo) + ".." + var + "^" + std::to_string(hi);
}

CheckEntry make(std::string name, std::string win, bool ok, json witness) {
  return CheckEntry{std::move(name), std::move(win), ok ? Status::Pass : Status::Fail, std::move(witness)};
}

// Runs one check body; module errors turn into entries, config errors escape.
void guarded(std::vector<CheckEntry>& out, const std::string& name, const std::string& win,
             const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ConfigError) throw;
    Status st = e.kind() == ErrorKind::CutoffExceeded ? Status::Untrusted : Status::Fail;
    out.push_back(CheckEntry{name, win, st, {{"error", error_kind_name(e.kind())}, {"message", e.what()}}});
  }
}

// Standard Young tableaux by corner removal: an oracle for dim λ that does not
// go through hook lengths.
Integer syt_count(const Partition& lam, std::map<Partition, Integer>& memo) {
  if (lam.size() == 0) return 1;
  if (auto it = memo.find(lam); it != memo.end()) return it->second;
  Integer total = 0;
  std::vector<int> p = lam.parts();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i + 1 < p.size() && p[i + 1] == p[i]) continue;
    std::vector<int> r = p;
    if (--r[i] == 0) r.pop_back();
    total += syt_count(Partition(r), memo);
  }
  memo.emplace(lam, total);
  return total;
}

using Runner = std::function<void(const JobConfig&, const Windows&, const QParam&, std::vector<CheckEntry>&)>;

void run_macmahon(const JobConfig&, const Windows& w, const QParam&, std::vector<CheckEntry>& out) {
  const int V = w.ncut;
  const std::string win = window("q", 0, V);
  guarded(out, "macmahon", win, [&] {
    IntQSeries product = macmahon_series(V);
    std::vector<long long> counted = count_plane_partitions(V);
    IntQSeries schur(V + 1, Integer(0));
    for (const auto& lam : enumerate_partitions(V)) {
      IntQSeries term = schur_square_qseries(lam, V);
      for (int d = 0; d <= V; ++d) schur[d] += term[d];
    }
    bool ok = true;
    json coeffs = json::array();
    for (int d = 0; d <= V; ++d) {
      ok = ok && Integer(static_cast<long>(counted[d])) == product[d] && schur[d] == product[d];
      coeffs.push_back(product[d].get_str());
    }
    out.push_back(make("macmahon plane partitions = schur squares = product", win, ok, {{"coefficients", coeffs}}));
  });
}

void run_hook(const JobConfig&, const Windows& w, const QParam& qp, std::vector<CheckEntry>& out) {
  const int N = w.ncut;
  guarded(out, "hook vs jacobi-trudi", "|λ|<=" + std::to_string(N), [&] {
    int checked = 0;
    std::vector<std::string> bad;
    for (const auto& lam : enumerate_partitions(N)) {
      ++checked;
      if (schur_principal(lam, qp) != skew_schur_principal(lam, Partition(), qp)) bad.push_back(lam.to_string());
    }
    out.push_back(make("hook formula = jacobi-trudi at q^-rho", "|λ|<=" + std::to_string(N), bad.empty(),
                       {{"partitions", checked}, {"mismatches", bad}}));
  });
  const int M = w.xdeg;
  guarded(out, "dimension sum", "n<=" + std::to_string(M), [&] {
    std::map<Partition, Integer> memo;
    bool ok = true;
    json sums = json::array();
    Integer fact = 1;
    for (int n = 0; n <= M; ++n) {
      if (n > 0) fact *= n;
      Integer s = 0;
      Scalar pw = 0;
      for (const auto& lam : partitions_of(n)) {
        Integer d = syt_count(lam, memo);
        s += d * d;
        const Scalar p = plancherel_weight(lam);
        pw += p * p;
        ok = ok && Scalar(d) / Scalar(fact) == p;
      }
      ok = ok && s == fact && pw * Scalar(fact) == 1;
      sums.push_back(s.get_str());
    }
    out.push_back(make("sum of squared dimensions = n!", "n<=" + std::to_string(M), ok, {{"sums", sums}}));
  });
}

json vev_json(const ChainResult& r) {
  return series_json(r.value, [](const TPoly& p) { return tpoly_json(p); });
}

void run_fock(const JobConfig& cfg, const Windows& w, const QParam& qp, std::vector<CheckEntry>& out) {
  const int c = w.ncut;
  guarded(out, "current commutators", "|λ|<=" + std::to_string(c), [&] {
    int pairs = 0;
    std::vector<std::string> bad;
    for (const auto& lam : enumerate_partitions(c)) {
      FockVector<Scalar> e(0, 3 * c);
      e.add(lam, Scalar(1));
      for (int m = -c; m <= c; ++m) {
        for (int n = -c; n <= c; ++n) {
          if (m == 0 || n == 0) continue;
          ++pairs;
          FockVector<Scalar> lhs = apply_J(m, apply_J(n, e));
          lhs += apply_J(n, apply_J(m, e)) * Scalar(-1);
          FockVector<Scalar> rhs = e * Scalar(m + n == 0 ? m : 0);
          lhs += rhs * Scalar(-1);
          if (!lhs.empty()) bad.push_back(lam.to_string() + " m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
      }
    }
    out.push_back(make("[J_m,J_n] = m delta", "|λ|<=" + std::to_string(c), bad.empty(),
                       {{"pairs", pairs}, {"mismatches", bad}}));
  });
  guarded(out, "matrix elements", "|λ|,|μ|<=" + std::to_string(c), [&] {
    auto r = check_matrix_elements(c, qp);
    out.push_back(make("vertex matrix elements = skew schur", "|λ|,|μ|<=" + std::to_string(c), r.mismatches.empty(),
                       {{"pairs", r.pairs_checked}, {"mismatches", r.mismatches}}));
  });
  guarded(out, "state identity", window("Q", 0, c), [&] {
    auto r = check_state_identity(c, c, qp, cfg.exec);
    out.push_back(make("g2'|0> = prefactor g|0>", window("Q", 0, c) + ", |λ|<=" + std::to_string(c), r.pass,
                       {{"compared", r.compared},
                        {"trusted_size", r.trusted_size},
                        {"trusted_grade", r.trusted_grade},
                        {"mismatches", r.mismatches}}));
  });
  guarded(out, "vev schur square", window("Q", 0, 1), [&] {
    ChainSpec s;
    s.size_cap = 1;
    s.ncut = 1;
    s.ops = json::array({{{"op", "vertex"}, {"side", "+"}}, {{"op", "grading"}}, {{"op", "vertex"}, {"side", "-"}}});
    auto r = evaluate_chain(s, qp, cfg.exec);
    const Scalar q = qp.q_pow(1);
    const Scalar expect = q / ((1 - q) * (1 - q));
    const bool ok = r.value.cutoff() >= 1 && r.value[0] == TPoly(Scalar(1)) && r.value[1] == TPoly(expect);
    out.push_back(make("<0|G+ Q^L0 G-|0> = 1 + Q q/(1-q)^2", window("Q", 0, 1), ok, vev_json(r)));
  });
  guarded(out, "vev plancherel", window("w", 0, 2), [&] {
    ChainSpec s;
    s.size_cap = 2;
    s.ncut = 2;
    s.ops = json::array({{{"op", "expJ"}, {"k", 1}, {"c", "1"}},
                         {{"op", "grading"}},
                         {{"op", "expJ"}, {"k", -1}, {"c", "1"}}});
    auto r = evaluate_chain(s, qp, cfg.exec);
    const bool ok = r.value.cutoff() >= 2 && r.value[0] == TPoly(Scalar(1)) &&
                    r.value[1] == TPoly(Scalar(1)) && r.value[2] == TPoly(Scalar(1, 2));
    out.push_back(make("<0|e^J1 w^L0 e^J-1|0> = 1 + w + w^2/2", window("w", 0, 2), ok, vev_json(r)));
  });
}

void run_crosscheck(const JobConfig& cfg, const Windows& w, const QParam& qp, std::vector<CheckEntry>& out) {
  for (auto which : {FermionicCheck::ZtEH, FermionicCheck::ZtG1, FermionicCheck::ZtDual, FermionicCheck::Z4dEH,
                     FermionicCheck::Z4dCharge}) {
    const std::string name = fermionic_check_name(which);
    CrosscheckConfig cc;
    cc.ncut = w.ncut;
    cc.tdeg = w.tdeg;
    cc.couplings = 3;
    cc.hbar = cfg.hbar;
    if (which == FermionicCheck::Z4dCharge) cc.charge = 2;
    const std::string win = window("Q", 0, w.ncut) + ", t-degree<=" + std::to_string(w.tdeg);
    guarded(out, name, win, [&] {
      auto r = crosscheck_fermionic(which, cc, qp, cfg.exec);
      json wit = {{"trusted_grade", r.trusted_grade}, {"size_cap", r.size_cap}, {"detail", r.detail}};
      if (!r.discovered.empty()) wit["discovered"] = r.discovered;
      out.push_back(make(name, win, r.pass, wit));
    });
  }
  const int c = std::min(w.ncut, 3);
  guarded(out, "state identity", window("Q", 0, c), [&] {
    auto r = check_state_identity(c, c, qp, cfg.exec);
    out.push_back(make("g2'|0> = prefactor g|0>", window("Q", 0, c) + ", |λ|<=" + std::to_string(c), r.pass,
                       {{"compared", r.compared}, {"mismatches", r.mismatches}}));
  });
}

json residual_json(const std::vector<DegreeResidual>& res, bool* ok) {
  json a = json::array();
  *ok = !res.empty();
  for (const auto& r : res) {
    *ok = *ok && r.zero;
    json e = {{"degree", r.degree}, {"zero", r.zero}};
    if (!r.zero) e["witness"] = r.witness;
    a.push_back(e);
  }
  return a;
}

void run_qcurve(const JobConfig& cfg, const Windows& w, const QParam& qp, std::vector<CheckEntry>& out) {
  guarded(out, "operator forms", "normal form", [&] {
    auto cmp = compare_operators(build_A(AForm::Product, qp), build_A(AForm::Sum, qp), 4, cfg.seed);
    json pts = json::array();
    for (const auto& p : cmp.points) pts.push_back(to_string(p));
    out.push_back(make("product form = sum form", "normal form", cmp.normal_forms_equal && cmp.witness_equal,
                       {{"normal_forms_equal", cmp.normal_forms_equal},
                        {"witness_equal", cmp.witness_equal},
                        {"witness_points", pts},
                        {"operator", build_A(AForm::Sum, qp).to_string()}}));
  });
  const std::string win = window("Q", 0, w.ncut);
  guarded(out, "quantum curve", win, [&] {
    bool ok = false;
    json res = residual_json(qcurve_residual(w.ncut, qp, cfg.exec), &ok);
    json brackets = json::array();
    const Scalar x0(1, 7);
    for (int n = 0; n <= w.ncut; ++n) {
      const Scalar b = qcurve_bracket_at(n, x0, qp);
      ok = ok && sgn(b) == 0;
      brackets.push_back(to_string(b));
    }
    out.push_back(make("(A-1)Z(x) = 0 per degree", win, ok,
                       {{"residuals", res}, {"pointwise_x0", to_string(x0)}, {"pointwise_brackets", brackets}}));
  });
}

void run_kac_schwarz(const JobConfig& cfg, const Windows& w, const QParam& qp, std::vector<CheckEntry>& out) {
  const std::string win = window("x", -w.jmax, w.xdeg) + ", " + window("Q", 0, w.ncut);
  guarded(out, "kac-schwarz", win, [&] {
    auto r = kac_schwarz_check(w.jmax, w.xdeg, w.ncut, qp, cfg.exec);
    out.push_back(make("A Phi_j = q^-j Phi_j and Z = C prefactor Phi_0", win, r.pass,
                       {{"window", {r.window_lo, r.window_hi}},
                        {"width", r.window_hi - r.window_lo + 1},
                        {"constant", to_string(r.constant)},
                        {"constant_uniform", r.constant_uniform},
                        {"failures", r.failures}}));
  });
}

void run_curve_4d(const JobConfig& cfg, const Windows& w, const QParam&, std::vector<CheckEntry>& out) {
  const std::string win = window("w", 0, w.ncut);
  guarded(out, "4d curve", win, [&] {
    bool ok = false;
    json res = residual_json(residual_4d(w.ncut, cfg.hbar, cfg.exec), &ok);
    // The degree-one bracket written out by hand.
    const Scalar& h = cfg.hbar;
    const RatFun X = RatFun::variable();
    const RatFun bracket = (X - RatFun(h)) * ((X - RatFun(2 * h)) / (X - RatFun(h)) - (X - RatFun(h)) / X) +
                           RatFun(h * h) / X;
    ok = ok && bracket.is_zero();
    out.push_back(make("4D difference equation per degree", win, ok,
                       {{"residuals", res}, {"degree_one_by_hand", bracket.to_string("X")}}));
  });
}

void run_limits(const JobConfig& cfg, const Windows& w, const QParam&, std::vector<CheckEntry>& out) {
  LimitSuiteConfig lc;
  lc.max_size = w.ncut;
  lc.kmax = w.jmax;
  lc.hbar = cfg.hbar;
  lc.lambda = cfg.lambda;
  const std::string win = "|λ|<=" + std::to_string(w.ncut) + ", k<=" + std::to_string(w.jmax);
  guarded(out, "limits", win, [&] {
    auto r = limit_suite(lc, cfg.exec);
    json failed = json::array();
    int passed = 0;
    for (const auto& c : r.checks) {
      if (c.pass) {
        ++passed;
      } else {
        failed.push_back({{"name", c.name}, {"leading", c.leading}, {"detail", c.detail}});
      }
    }
    const bool exact_ok = failed.empty() && !r.checks.empty();
    out.push_back(make("exact R-series limits", win, exact_ok, {{"checks", r.checks.size()}, {"passed", passed}, {"failed", failed}}));
    json errs = json::array();
    for (double e : r.rate.errors) errs.push_back(e);
    out.push_back(make("numeric convergence rate", "R in {1e-2,1e-3,1e-4}", r.rate_ok,
                       {{"r", r.rate.r_values},
                        {"errors", errs},
                        {"slope", r.rate.slope},
                        {"tolerance", "1.0 +- 0.1"},
                        {"loss_of_precision", r.rate.loss_of_precision}}));
  });
}

json bilinear_json(const BilinearReport& r) {
  return {{"degree", r.degree}, {"samples", r.samples}, {"grid", r.grid}, {"sample_sets", r.sample_sets}, {"detail", r.detail}};
}

BilinearConfig bilinear_config(const JobConfig& cfg, const Windows& w) {
  BilinearConfig bc;
  bc.ncut = w.ncut;
  bc.tdeg = w.tdeg;
  bc.xdeg = w.xdeg;
  bc.seed = cfg.seed;
  bc.hbar = cfg.hbar;
  bc.lambda = cfg.lambda;
  return bc;
}

void run_fay(const JobConfig& cfg, const Windows& w, const QParam& qp, std::vector<CheckEntry>& out) {
  const std::string win = window("Q", 0, w.ncut);
  const BilinearConfig bc = bilinear_config(cfg, w);
  using Fn = std::function<BilinearReport()>;
  const std::vector<std::pair<std::string, Fn>> parts = {
      {"fay N=2", [&] { return fay_certified(2, true, bc, qp, cfg.exec); }},
      {"fay N=3", [&] { return fay_certified(3, false, bc, qp, cfg.exec); }},
      {"hirota-miwa", [&] { return hirota_miwa_certified(bc, qp, cfg.exec); }},
      {"differential fay", [&] { return diff_fay(bc, qp, cfg.exec); }},
  };
  for (const auto& [name, fn] : parts) {
    guarded(out, name, win, [&] {
      auto r = fn();
      out.push_back(make(r.name, win, r.pass, bilinear_json(r)));
    });
  }
  if (!cfg.points.empty()) {
    guarded(out, "fay at points", win, [&] {
      const int n = static_cast<int>(cfg.points.size()) / 2;
      if (cfg.points.size() % 2 != 0 || (n != 2 && n != 3)) {
        throw Error(ErrorKind::ConfigError, "--points needs 4 or 6 values for verify-fay");
      }
      auto r = fay_at(n, FaySample{cfg.points, w.ncut}, qp);
      out.push_back(make(r.name, win, r.pass, bilinear_json(r)));
    });
  }
}

void run_fay_4d(const JobConfig& cfg, const Windows& w, const QParam&, std::vector<CheckEntry>& out) {
  const std::string win = window("w", 0, w.ncut);
  const BilinearConfig bc = bilinear_config(cfg, w);
  guarded(out, "4D fay", win, [&] {
    auto r = fay4_4d_certified(bc, cfg.exec);
    out.push_back(make(r.name, win, r.pass, bilinear_json(r)));
  });
  std::vector<Scalar> X = {Scalar(3), Scalar(5), Scalar(7), Scalar(11)};
  if (!cfg.points.empty()) {
    if (cfg.points.size() != 4) throw Error(ErrorKind::ConfigError, "--points needs 4 values for verify-fay-4d");
    X = cfg.points;
  }
  guarded(out, "4D fay at points", win, [&] {
    auto r = fay4_4d_at(FaySample{X, w.ncut}, cfg.hbar);
    out.push_back(make(r.name, win, r.pass, bilinear_json(r)));
  });
  guarded(out, "bridge", win, [&] {
    auto r = fay_bridge(bc, X);
    out.push_back(make(r.name, win, r.pass, bilinear_json(r)));
  });
}

void run_compute_z(const JobConfig& cfg, const Windows& w, const QParam& qp, std::vector<CheckEntry>& out) {
  const bool four = cfg.model == "4d";
  if (!four && cfg.model != "5d") throw Error(ErrorKind::ConfigError, "--model must be 5d or 4d");
  const std::string win = window(four ? "w" : "Q", 0, w.ncut);
  guarded(out, "compute-z", win, [&] {
    ZSpec spec{{}, 0, cfg.points, w.ncut};
    auto z = four ? z4d(spec, cfg.hbar, cfg.exec) : z5d(spec, qp, cfg.exec);
    json pts = json::array();
    for (const auto& p : cfg.points) pts.push_back(to_string(p));
    const bool ok = z.cutoff() >= 0 && z[0] == TPoly(Scalar(1));
    out.push_back(make(four ? "Z4D" : "Z", win, ok,
                       {{"insertions", pts},
                        {"series", series_json(z, [](const TPoly& p) { return to_string(p.constant_term()); })}}));
  });
}

void run_vev(const JobConfig& cfg, const Windows&, const QParam& qp, std::vector<CheckEntry>& out) {
  if (cfg.chain.is_null()) throw Error(ErrorKind::ConfigError, "vev needs --chain");
  const ChainSpec spec = parse_chain(cfg.chain);
  const std::string win = window("Q", 0, spec.ncut);
  guarded(out, "vev", win, [&] {
    auto r = evaluate_chain(spec, qp, cfg.exec);
    out.push_back(make("vev", window("Q", 0, r.trusted_grade), true, vev_json(r)));
  });
}

struct CheckDef {
  const char* name;
  Runner run;
  Windows defaults;
};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"verify-macmahon", run_macmahon, {12, 0, 0, 0}},
      {"verify-hook", run_hook, {8, 7, 0, 0}},
      {"verify-fock", run_fock, {3, 0, 0, 0}},
      {"verify-z-crosscheck", run_crosscheck, {5, 0, 2, 0}},
      {"verify-qcurve", run_qcurve, {6, 0, 0, 0}},
      {"verify-kac-schwarz", run_kac_schwarz, {3, 12, 0, 3}},
      {"verify-4d-curve", run_curve_4d, {6, 0, 0, 0}},
      {"verify-limits", run_limits, {4, 0, 0, 4}},
      {"verify-fay", run_fay, {4, 4, 2, 0}},
      {"verify-fay-4d", run_fay_4d, {4, 0, 2, 0}},
      {"compute-z", run_compute_z, {5, 0, 0, 0}},
      {"vev", run_vev, {0, 0, 0, 0}},
  };
  return defs;
}

const CheckDef* find_check(const std::string& name) {
  for (const auto& d : registry()) {
    if (name == d.name) return &d;
  }
  return nullptr;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& d : registry()) v.push_back(d.name);
    v.push_back("verify-all");
    return v;
  }();
  return names;
}

Windows check_defaults(const std::string& check) {
  if (const auto* d = find_check(check)) return d->defaults;
  if (check == "verify-all") return {};
  throw Error(ErrorKind::ConfigError, "unknown check '" + check + "'");
}

Windows resolve_windows(const JobConfig& cfg) {
  Windows w = check_defaults(cfg.check);
  if (cfg.ncut) w.ncut = *cfg.ncut;
  if (cfg.xdeg) w.xdeg = *cfg.xdeg;
  if (cfg.tdeg) w.tdeg = *cfg.tdeg;
  if (cfg.jmax) w.jmax = *cfg.jmax;
  if (w.ncut < 0 || w.xdeg < 0 || w.tdeg < 0 || w.jmax < 0) throw Error(ErrorKind::ConfigError, "negative window");
  return w;
}

namespace {

json job_echo(const JobConfig& cfg, const Windows& w) {
  json pts = json::array();
  for (const auto& p : cfg.points) pts.push_back(to_string(p));
  json j = {{"check", cfg.check}, {"u", to_string(cfg.u)},  {"hbar", to_string(cfg.hbar)},
            {"lambda", to_string(cfg.lambda)}, {"seed", cfg.seed}, {"points", pts}};
  if (cfg.check != "verify-all") {
    j["ncut"] = w.ncut;
    j["xdeg"] = w.xdeg;
    j["tdeg"] = w.tdeg;
    j["jmax"] = w.jmax;
  }
  if (cfg.check == "compute-z") j["model"] = cfg.model;
  if (cfg.check == "vev") j["chain"] = cfg.chain;
  return j;
}

}  // namespace

Report run_job(const JobConfig& cfg) {
  const QParam qp = [&] {
    try {
      return QParam(cfg.u);
    } catch (const Error& e) {
      throw Error(ErrorKind::ConfigError, std::string("invalid u: ") + e.what());
    }
  }();
  if (cfg.hbar == 0) throw Error(ErrorKind::ConfigError, "hbar must be nonzero");
  Report rep;
  const Windows w = resolve_windows(cfg);
  rep.job = job_echo(cfg, w);
  profile::set_enabled(cfg.profile);
  profile::reset();
  const auto start = std::chrono::steady_clock::now();
  if (cfg.check == "verify-all") {
    for (const auto& d : registry()) {
      const std::string name = d.name;
      if (name.rfind("verify-", 0) != 0) continue;
      JobConfig sub = cfg;
      sub.check = name;
      sub.points.clear();
      const std::size_t first = rep.entries.size();
      d.run(sub, resolve_windows(sub), qp, rep.entries);
      for (std::size_t i = first; i < rep.entries.size(); ++i) rep.entries[i].name = name + ": " + rep.entries[i].name;
    }
  } else {
    const CheckDef* d = find_check(cfg.check);
    d->run(cfg, w, qp, rep.entries);
  }
  if (cfg.profile) {
    rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto snap = profile::snapshot();
    rep.profile = json::object();
    double staged = 0;
    for (std::size_t i = 0; i < profile::kStageCount; ++i) {
      if (static_cast<profile::Stage>(i) != profile::Stage::Other) staged += snap[i];
    }
    for (std::size_t i = 0; i < profile::kStageCount; ++i) {
      const auto stage = static_cast<profile::Stage>(i);
      // Unscoped time is attributed to "other".
      rep.profile[profile::stage_name(stage)] =
          stage == profile::Stage::Other ? snap[i] + std::max(0.0, *rep.wall_time - staged - snap[i]) : snap[i];
    }
  }
  profile::set_enabled(false);
  return rep;
}

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& e : r.entries) {
    checks.push_back({{"name", e.name}, {"window", e.window}, {"status", status_name(e.status)}, {"witness", e.witness}});
  }
  json j = {{"tool", "mcqc"}, {"version", kToolVersion}, {"job", r.job}, {"checks", checks}, {"pass", r.pass()}};
  if (r.wall_time) {
    j["wall_time_s"] = *r.wall_time;
    j["profile_s"] = r.profile;
  }
  return j;
}

int exit_code(const Report& r) { return r.pass() ? 0 : 1; }

}  // namespace mcqc
