#include "mcqc/limit4d.hpp"

#include <cmath>

#include "mcqc/profile.hpp"
#include "mcqc/schur.hpp"

namespace mcqc {

namespace {

std::string leading_of(const RSeries& d, int top) {
  RSeries t = d.truncated(top);
  if (t.is_zero()) return "none";
  return "R^" + std::to_string(t.lo()) + ": " + to_string(t.coeff(t.lo()));
}

// Checks lo >= min_lo and the coefficient at min_lo against `expected`.
bool leads_with(const RSeries& s, int min_lo, const Scalar& expected) {
  if (s.top() < min_lo) return false;
  if (!s.is_zero() && s.lo() < min_lo) return false;
  return s.coeff(min_lo) == expected;
}

RSeries r_power(const Scalar& c, int e) { return RSeries::monomial(c, e); }

}  // namespace

RSeries r_exp(const Scalar& a, int top) {
  std::vector<Scalar> c(top + 1);
  Scalar term = 1;
  for (int n = 0; n <= top; ++n) {
    if (n > 0) term = term * a / n;
    c[n] = term;
  }
  return RSeries::from_coefficients(0, std::move(c), top);
}

RSeries r_one_minus_exp(const Scalar& a, int top) { return RSeries::monomial(1, 0) - r_exp(a, top); }

RSeries weight_term_series(const Partition& lambda, const std::vector<Scalar>& xs, const RSubstitution& sub) {
  profile::Scope scope(profile::Stage::RSeries);
  const int n = lambda.size();
  const int prec = sub.top + 2 * n + 4;
  const Scalar& hb = sub.hbar;
  // s_λ(q^{-ρ})² = e^{κħR/2} Π_h (e^{hħR/2} - e^{-hħR/2})^{-2}
  RSeries term = r_exp(Scalar(kappa(lambda)) * hb / 2, prec);
  for (const auto& [cell, h] : hook_lengths(lambda)) {
    RSeries d = r_exp(Scalar(h) * hb / 2, prec) - r_exp(-Scalar(h) * hb / 2, prec);
    RSeries inv = series_inverse(d, prec);
    term = term * inv * inv;
  }
  term = term * r_power(power(sub.lambda, 2L * n), 2 * n);
  for (const auto& x : xs) {
    for (int i = 1; i <= lambda.length(); ++i) {
      RSeries num = r_one_minus_exp(x - Scalar(lambda.part(i) - i + 1) * hb, prec);
      RSeries den = r_one_minus_exp(x - Scalar(1 - i) * hb, prec);
      term = term * num * series_inverse(den, prec);
    }
  }
  return term.truncated(sub.top);
}

RSeries weight_term_series(const Partition& lambda, const Scalar& x, const RSubstitution& sub) {
  return weight_term_series(lambda, std::vector<Scalar>{x}, sub);
}

LimitCheck weight_limit_check(const Partition& lambda, const Scalar& x, const RSubstitution& sub) {
  LimitCheck c;
  c.name = "weight " + lambda.to_string() + " X=" + to_string(x);
  const int n = lambda.size();
  const int prec = sub.top + 2 * n + 4;
  const Scalar& hb = sub.hbar;
  for (int i = 1; i <= lambda.length(); ++i) {
    if (x == Scalar(1 - i) * hb) throw Error(ErrorKind::Precondition, "X sits on the insertion pole lattice");
  }
  bool ok = true;

  // Weight times (Rħ)^{2|λ|} tends to the Plancherel weight squared.
  RSeries w = r_exp(Scalar(kappa(lambda)) * hb / 2, prec);
  for (const auto& [cell, h] : hook_lengths(lambda)) {
    RSeries d = r_exp(Scalar(h) * hb / 2, prec) - r_exp(-Scalar(h) * hb / 2, prec);
    RSeries inv = series_inverse(d, prec);
    w = w * inv * inv;
  }
  const Scalar pw = plancherel_weight(lambda);
  if (!leads_with(w * r_power(power(hb, 2L * n), 2 * n), 0, pw * pw)) {
    ok = false;
    c.detail += "weight leading term; ";
  }
  // Each insertion factor tends to its 4D counterpart.
  Scalar ins4d = 1;
  for (int i = 1; i <= lambda.length(); ++i) {
    const Scalar a = x - Scalar(lambda.part(i) - i + 1) * hb;
    const Scalar b = x - Scalar(1 - i) * hb;
    RSeries f = r_one_minus_exp(a, prec) * series_inverse(r_one_minus_exp(b, prec), prec);
    if (!leads_with(f, 0, a / b)) {
      ok = false;
      c.detail += "insertion factor i=" + std::to_string(i) + "; ";
    }
    ins4d *= a / b;
  }
  const Scalar expected = pw * pw * power(sub.lambda / hb, 2L * n) * ins4d;
  RSeries term = weight_term_series(lambda, x, sub);
  if (!leads_with(term, 0, expected)) {
    ok = false;
    c.detail += "full term; ";
  }
  c.leading = leading_of(term - RSeries::monomial(expected, 0), sub.top);
  c.pass = ok;
  if (ok) c.detail = "constant term " + to_string(expected);
  return c;
}

namespace {

RSeries phi_series(const Partition& lambda, int j, const Scalar& hbar, int top) {
  RSeries s;
  for (int i = 1; i <= lambda.length(); ++i) {
    s += r_exp(-Scalar(j) * hbar * (lambda.part(i) - i + 1), top) - r_exp(-Scalar(j) * hbar * (1 - i), top);
  }
  return s.truncated(top);
}

}  // namespace

RSeries phi_finite_diff(const Partition& lambda, int k, const Scalar& hbar, int top) {
  profile::Scope scope(profile::Stage::RSeries);
  RSeries d = RSeries::from_coefficients(0, {}, top);
  for (int j = 1; j <= k; ++j) {
    Scalar c = binomial(k, j);
    if ((k - j) % 2 != 0) c = -c;
    d += phi_series(lambda, j, hbar, top) * c;
  }
  return d;
}

LimitCheck phi_finite_diff_check(const Partition& lambda, int k, const Scalar& hbar, int top) {
  LimitCheck c;
  c.name = "phi difference " + lambda.to_string() + " k=" + std::to_string(k);
  top = std::max(top, k);
  RSeries d = phi_finite_diff(lambda, k, hbar, top);
  const Scalar expected = Scalar(phi4d_k(lambda, k)) * power(-hbar, k);
  c.pass = leads_with(d, k, expected);
  c.leading = leading_of(d, top);
  c.detail = "R^" + std::to_string(k) + " coefficient " + to_string(d.coeff(k)) + ", expected " + to_string(expected);
  return c;
}

std::vector<RSeries> t_of_T(const std::vector<Scalar>& T, const Scalar& hbar) {
  const int K = static_cast<int>(T.size());
  std::vector<RSeries> t(K);
  for (int j = 1; j <= K; ++j) {
    for (int k = j; k <= K; ++k) {
      if (sgn(T[k - 1]) == 0) continue;
      Scalar c = binomial(k, j) * T[k - 1] / power(-hbar, k);
      if ((k - j) % 2 != 0) c = -c;
      t[j - 1] += RSeries::monomial(c, -k);
    }
  }
  return t;
}

RSeries potential_series(const Partition& lambda, const std::vector<Scalar>& T, const Scalar& hbar, int top) {
  profile::Scope scope(profile::Stage::RSeries);
  const int K = static_cast<int>(T.size());
  auto t = t_of_T(T, hbar);
  RSeries phi = RSeries::from_coefficients(0, {}, top);
  for (int j = 1; j <= K; ++j) {
    if (t[j - 1].is_zero()) continue;
    phi += t[j - 1] * phi_series(lambda, j, hbar, top + K);
  }
  return phi.truncated(top);
}

LimitCheck potential_limit_check(const Partition& lambda, const std::vector<Scalar>& T, const Scalar& hbar,
                                 int top) {
  LimitCheck c;
  std::string ts;
  for (const auto& v : T) ts += (ts.empty() ? "" : ",") + to_string(v);
  c.name = "potential " + lambda.to_string() + " T=(" + ts + ")";
  Scalar expected = 0;
  for (std::size_t k = 0; k < T.size(); ++k) expected += T[k] * Scalar(phi4d_k(lambda, static_cast<int>(k + 1)));
  RSeries phi = potential_series(lambda, T, hbar, top);
  c.pass = leads_with(phi, 0, expected);
  c.leading = leading_of(phi, top);
  c.detail = "constant term " + to_string(phi.coeff(0)) + ", expected " + to_string(expected);
  return c;
}

RSeries operator_limit_series(const RatFun& f, const Scalar& x, const RSubstitution& sub) {
  profile::Scope scope(profile::Stage::RSeries);
  if (sgn(x) == 0) throw Error(ErrorKind::Precondition, "X = 0 is a pole of the Q-carrying term");
  const Scalar& hb = sub.hbar;
  const Scalar fm = f.eval(x - hb);
  const Scalar f0 = f.eval(x);
  const Scalar fp = f.eval(x + hb);
  const int prec = sub.top + 3;
  const RSeries Q = RSeries::monomial(sub.lambda * sub.lambda, 2);
  const RSeries xs = r_exp(x - hb / 2, prec);  // x
  const RSeries qhx = r_exp(x - hb, prec);     // q^{1/2} x
  // (1 - q^{1/2}x) f(X-ħ) + q^{1/2}x f(X) + Q q^{1/2}x f(X) + Q x²/(1 - q^{-1/2}x) f(X+ħ) - f(X)
  RSeries r = r_one_minus_exp(x - hb, prec) * fm + qhx * f0 + Q * qhx * f0 +
              Q * xs * xs * series_inverse(r_one_minus_exp(x, prec), prec) * fp - RSeries::monomial(f0, 0);
  return r.truncated(sub.top);
}

LimitCheck operator_limit_check(const RatFun& f, const std::vector<Scalar>& xs, const RSubstitution& sub) {
  LimitCheck c;
  c.name = "operator expansion f=" + f.to_string("X");
  c.pass = true;
  c.leading = "none";
  const Scalar& hb = sub.hbar;
  for (const auto& x : xs) {
    RSeries r = operator_limit_series(f, x, sub);
    const Scalar expected =
        -(x - hb) * (f.eval(x - hb) - f.eval(x)) - sub.lambda * sub.lambda / x * f.eval(x + hb);
    if (!leads_with(r, 1, expected)) {
      c.pass = false;
      c.detail += "X=" + to_string(x) + " leading " + leading_of(r, sub.top) + ", expected R^1: " +
                  to_string(expected) + "; ";
    }
    if (c.leading == "none") c.leading = leading_of(r, sub.top);
  }
  if (c.pass) c.detail = "R^0 vanishes and R^1 matches at " + std::to_string(xs.size()) + " points";
  return c;
}

RateReport numeric_rate(int ncut, double x, double hbar, double lambda, const std::vector<double>& rs) {
  using LD = long double;
  RateReport rep;
  const auto parts = enumerate_partitions(ncut);
  LD z4 = 0;
  for (const auto& lam : parts) {
    const LD pw = plancherel_weight(lam).get_d();
    LD t = pw * pw * std::pow(static_cast<LD>(lambda / hbar), 2 * lam.size());
    for (int i = 1; i <= lam.length(); ++i) {
      t *= (x - static_cast<LD>(lam.part(i) - i + 1) * hbar) / (x - static_cast<LD>(1 - i) * hbar);
    }
    z4 += t;
  }
  for (double r : rs) {
    const LD R = r;
    LD z5 = 0;
    for (const auto& lam : parts) {
      LD t = std::exp(static_cast<LD>(kappa(lam)) * R * hbar / 2);
      for (const auto& [cell, h] : hook_lengths(lam)) {
        const LD s = 2 * std::sinh(static_cast<LD>(h) * R * hbar / 2);
        t /= s * s;
      }
      t *= std::pow(R * lambda, 2 * lam.size());
      for (int i = 1; i <= lam.length(); ++i) {
        t *= std::expm1(R * (x - static_cast<LD>(lam.part(i) - i + 1) * hbar)) /
             std::expm1(R * (x - static_cast<LD>(1 - i) * hbar));
      }
      z5 += t;
    }
    const double err = static_cast<double>(std::fabs(z5 - z4));
    if (err < 1e-12) rep.loss_of_precision = true;
    rep.r_values.push_back(r);
    rep.errors.push_back(err);
  }
  // Least-squares slope of log(err) against log(R).
  const std::size_t m = rep.errors.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double lx = std::log(rep.r_values[i]);
    const double ly = std::log(std::max(rep.errors[i], 1e-300));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  if (m >= 2) rep.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return rep;
}

LimitSuiteReport limit_suite(const LimitSuiteConfig& cfg, Exec exec) {
  LimitSuiteReport rep;
  RSubstitution sub{cfg.hbar, cfg.lambda, cfg.top};
  const auto parts = enumerate_partitions(cfg.max_size);

  // Finitely supported T: each single direction and one mixed vector.
  const std::vector<Scalar> mixed{Scalar(3, 2), Scalar(-2, 5), Scalar(7, 3), Scalar(1, 4)};
  std::vector<std::vector<Scalar>> tsets;
  for (int k = 1; k <= cfg.kmax; ++k) {
    std::vector<Scalar> T(k);
    T[k - 1] = k - 1 < static_cast<int>(mixed.size()) ? mixed[k - 1] : Scalar(1);
    tsets.push_back(T);
  }
  std::vector<Scalar> all(mixed.begin(), mixed.begin() + std::min<std::size_t>(mixed.size(), cfg.kmax));
  const int top = std::max(cfg.top, cfg.kmax);

  std::vector<std::vector<LimitCheck>> per(parts.size());
  auto body = [&](std::size_t i) {
    const auto& lam = parts[i];
    auto& out = per[i];
    for (const auto& x : cfg.x_samples) out.push_back(weight_limit_check(lam, x, sub));
    for (int k = 1; k <= cfg.kmax; ++k) out.push_back(phi_finite_diff_check(lam, k, cfg.hbar, top));
    Scalar sum = 0;
    for (const auto& T : tsets) {
      out.push_back(potential_limit_check(lam, T, cfg.hbar, top));
      sum += potential_series(lam, T, cfg.hbar, top).coeff(0);
    }
    LimitCheck mix = potential_limit_check(lam, all, cfg.hbar, top);
    out.push_back(mix);
    LimitCheck sup;
    sup.name = "superposition " + lam.to_string();
    const Scalar whole = potential_series(lam, all, cfg.hbar, top).coeff(0);
    sup.pass = whole == sum;
    sup.leading = "none";
    sup.detail = "sum of single-direction constants " + to_string(sum) + ", mixed " + to_string(whole);
    out.push_back(sup);
  };
  const long n = static_cast<long>(parts.size());
  parallel_for(n, exec, [&](long i) { body(static_cast<std::size_t>(i)); });
  for (auto& v : per) rep.checks.insert(rep.checks.end(), v.begin(), v.end());

  const RatFun X = RatFun::variable();
  const std::vector<RatFun> tests{RatFun(1), X, X * X + RatFun(1), RatFun(1) / (X - RatFun(Scalar(1, 2)))};
  for (const auto& f : tests) rep.checks.push_back(operator_limit_check(f, cfg.x_samples, sub));

  rep.rate = numeric_rate(3, 5.0, 1.0, 1.0, {1e-2, 1e-3, 1e-4});
  rep.rate_ok = !rep.rate.loss_of_precision && std::fabs(rep.rate.slope - 1.0) <= 0.1;
  rep.pass = rep.rate_ok;
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
  return rep;
}

}  // namespace mcqc
