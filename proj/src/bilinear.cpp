#include "mcqc/bilinear.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "mcqc/fock.hpp"
#include "mcqc/limit4d.hpp"
#include "mcqc/partfun.hpp"
#include "mcqc/schur.hpp"

namespace mcqc {

Scalar vandermonde(const std::vector<Scalar>& y) {
  Scalar d = 1;
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t j = i + 1; j < y.size(); ++j) d *= y[i] - y[j];
  }
  return d;
}

namespace {

// Points are handled by index into a value table so grid caches can key on
// small integers.
template <class R>
using IdxOracle = std::function<const GradedSeries<R>&(const std::vector<int>&)>;

template <class R>
GradedSeries<R> xi(const std::vector<int>& idx, const std::vector<Scalar>& val, const IdxOracle<R>& z) {
  std::vector<Scalar> y;
  y.reserve(idx.size());
  for (int i : idx) y.push_back(val[i]);
  return z(idx) * vandermonde(y);
}

template <class R>
GradedSeries<R> fay_general(int n, const std::vector<int>& x, const std::vector<Scalar>& val, const IdxOracle<R>& z) {
  GradedSeries<R> r;
  std::vector<int> head(x.begin(), x.begin() + (n - 1));
  for (int j = n; j <= 2 * n; ++j) {
    std::vector<int> a = head;
    a.push_back(x[j - 1]);
    std::vector<int> b;
    for (int k = n; k <= 2 * n; ++k) {
      if (k != j) b.push_back(x[k - 1]);
    }
    GradedSeries<R> term = xi(a, val, z) * xi(b, val, z);
    if ((j - n) % 2 == 0) {
      r += term;
    } else {
      r -= term;
    }
  }
  return r;
}

// Three-term form with pair factor f(a, b) in place of (a - b).
template <class R, class F>
GradedSeries<R> three_term(const std::vector<int>& x, const std::vector<Scalar>& val, const IdxOracle<R>& z, F&& f) {
  auto pz = [&](int i, int j) { return z({x[i], x[j]}); };
  auto c = [&](int i, int j, int k, int l) { return Scalar(f(val[x[i]], val[x[j]]) * f(val[x[k]], val[x[l]])); };
  GradedSeries<R> r = pz(0, 1) * pz(2, 3) * c(0, 1, 2, 3);
  r -= pz(0, 2) * pz(1, 3) * c(0, 2, 1, 3);
  r += pz(0, 3) * pz(1, 2) * c(0, 3, 1, 2);
  return r;
}

template <class R>
GradedSeries<R> fay4(const std::vector<int>& x, const std::vector<Scalar>& val, const IdxOracle<R>& z) {
  return three_term<R>(x, val, z, [](const Scalar& a, const Scalar& b) { return Scalar(a - b); });
}

template <class R>
GradedSeries<R> fay4_inv(const std::vector<int>& x, const std::vector<Scalar>& val, const IdxOracle<R>& z) {
  return three_term<R>(x, val, z, [](const Scalar& a, const Scalar& b) { return Scalar(1 / a - 1 / b); });
}

template <class R>
GradedSeries<R> hirota_miwa(const std::vector<int>& x, const std::vector<Scalar>& val, const IdxOracle<R>& z) {
  const Scalar &a = val[x[0]], &b = val[x[1]], &c = val[x[2]];
  GradedSeries<R> r = z({x[0], x[1]}) * z({x[2]}) * Scalar((a - b) * c);
  r += z({x[1], x[2]}) * z({x[0]}) * Scalar((b - c) * a);
  r += z({x[2], x[0]}) * z({x[1]}) * Scalar((c - a) * b);
  return r;
}

// Direct oracle over a point table, memoized per sorted index set.
template <class R>
struct DirectOracle {
  std::vector<Scalar> val;
  std::function<GradedSeries<R>(const std::vector<Scalar>&)> eval;
  std::map<std::vector<int>, GradedSeries<R>> memo;

  const GradedSeries<R>& operator()(const std::vector<int>& idx) {
    std::vector<int> k = idx;
    std::sort(k.begin(), k.end());
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    std::vector<Scalar> pts;
    for (int i : k) pts.push_back(val[i]);
    return memo.emplace(k, eval(pts)).first->second;
  }
};

std::vector<Scalar> as_scalar_points(const std::vector<Scalar>& x, bool allow_zero) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x[i] == x[j]) throw Error(ErrorKind::DegenerateSample, "sample points coincide");
    }
    if (!allow_zero && sgn(x[i]) == 0) throw Error(ErrorKind::DegenerateSample, "zero sample point");
  }
  return x;
}

template <class R>
bool zero_through(const GradedSeries<R>& r, int n) {
  if (r.cutoff() < n) return false;
  for (int d = 0; d <= n && d < r.stored(); ++d) {
    if (!is_zero(r.coefficients()[d])) return false;
  }
  return true;
}

template <class R>
int first_nonzero(const GradedSeries<R>& r, int n) {
  for (int d = 0; d <= std::min(n, r.cutoff()) && d < r.stored(); ++d) {
    if (!is_zero(r.coefficients()[d])) return d;
  }
  return r.cutoff() < n ? r.cutoff() + 1 : -1;
}

/// Per-variable sample sets, pairwise disjoint, drawn from a seeded stream.
std::vector<std::vector<Scalar>> draw_sets(int nvars, int per, unsigned seed,
                                           const std::function<bool(const Scalar&)>& admissible) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 40);
  std::vector<std::vector<Scalar>> sets(nvars);
  std::vector<Scalar> used;
  for (auto& s : sets) {
    while (static_cast<int>(s.size()) < per) {
      int p = num(rng);
      if (p == 0) continue;
      Scalar x(p, den(rng));
      x.canonicalize();
      if (!admissible(x) || std::find(used.begin(), used.end(), x) != used.end()) continue;
      used.push_back(x);
      s.push_back(x);
    }
  }
  return sets;
}

std::vector<std::vector<std::string>> set_strings(const std::vector<std::vector<Scalar>>& sets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : sets) {
    std::vector<std::string> v;
    for (const auto& x : s) v.push_back(to_string(x));
    out.push_back(std::move(v));
  }
  return out;
}

std::uint64_t pack(std::vector<int> k) {
  std::sort(k.begin(), k.end());
  std::uint64_t key = k.size();
  for (int i : k) key = (key << 8) | static_cast<std::uint64_t>(i);
  return key;
}

/// Z values for every index set that draws at most one point per variable,
/// with sizes from `sizes`, computed up front so the grid loop only reads.
template <class R>
struct GridCache {
  std::vector<Scalar> val;          // global point table
  std::vector<std::vector<int>> var;  // global indices per variable
  std::unordered_map<std::uint64_t, GradedSeries<R>> z;

  const GradedSeries<R>& operator()(const std::vector<int>& idx) const {
    auto it = z.find(pack(idx));
    if (it == z.end()) throw Error(ErrorKind::Precondition, "grid cache miss");
    return it->second;
  }
};

template <class R>
GridCache<R> build_cache(const std::vector<std::vector<Scalar>>& sets, const std::vector<int>& sizes,
                         const std::function<GradedSeries<R>(const std::vector<Scalar>&)>& eval, Exec exec) {
  GridCache<R> c;
  for (const auto& s : sets) {
    std::vector<int> ids;
    for (const auto& x : s) {
      ids.push_back(static_cast<int>(c.val.size()));
      c.val.push_back(x);
    }
    c.var.push_back(std::move(ids));
  }
  const int nv = static_cast<int>(sets.size());
  std::vector<std::vector<int>> keys;
  std::unordered_map<std::uint64_t, bool> seen;
  for (int size : sizes) {
    // variable subsets of this size, then one point from each
    std::vector<int> pick(size);
    std::function<void(int, int)> choose_vars = [&](int pos, int from) {
      if (pos == size) {
        std::vector<int> cur(size);
        std::function<void(int)> choose_pts = [&](int p) {
          if (p == size) {
            if (!seen.emplace(pack(cur), true).second) return;
            keys.push_back(cur);
            return;
          }
          for (int id : c.var[pick[p]]) {
            cur[p] = id;
            choose_pts(p + 1);
          }
        };
        choose_pts(0);
        return;
      }
      for (int v = from; v < nv; ++v) {
        pick[pos] = v;
        choose_vars(pos + 1, v + 1);
      }
    };
    choose_vars(0, 0);
  }
  std::vector<GradedSeries<R>> vals(keys.size());
  auto body = [&](long i) {
    std::vector<Scalar> pts;
    for (int id : keys[i]) pts.push_back(c.val[id]);
    vals[i] = eval(pts);
  };
  const long n = static_cast<long>(keys.size());
  parallel_for(n, exec, body);
  for (long i = 0; i < n; ++i) c.z.emplace(pack(keys[i]), std::move(vals[i]));
  return c;
}

// Runs `check` at every grid point (one index per variable); returns the
// first failing grid point in enumeration order, or -1.
template <class F>
long scan_grid(const std::vector<std::vector<int>>& var, Exec exec, F&& check, long* count) {
  long total = 1;
  for (const auto& v : var) total *= static_cast<long>(v.size());
  *count = total;
  long first_fail = -1;
  auto point = [&](long lin) {
    std::vector<int> x(var.size());
    for (std::size_t j = 0; j < var.size(); ++j) {
      const long m = static_cast<long>(var[j].size());
      x[j] = var[j][lin % m];
      lin /= m;
    }
    return x;
  };
  if (exec == Exec::Parallel) {
    std::vector<char> ok(total);
    parallel_for(total, exec, [&](long i) { ok[i] = check(point(i)); });
    auto it = std::find(ok.begin(), ok.end(), 0);
    first_fail = it == ok.end() ? -1 : static_cast<long>(it - ok.begin());
  } else {
    for (long i = 0; i < total; ++i) {
      if (!check(point(i))) {
        first_fail = i;
        break;
      }
    }
  }
  return first_fail;
}

std::string grid_shape(int per, int nvars) { return std::to_string(per) + "^" + std::to_string(nvars); }

std::vector<TPoly> formal_couplings(const std::string& stem, int count, int tdeg) {
  auto space = TSpace::couplings(stem, count, tdeg);
  std::vector<TPoly> t;
  for (int k = 0; k < count; ++k) t.push_back(TPoly::variable(space, k));
  return t;
}

bool admissible_5d(const Scalar& x, int ncut, const QParam& qp) {
  if (sgn(x) == 0) return false;
  for (int i = 1; i <= ncut; ++i) {
    if (x * qp.u_pow(-8L * i + 4) == 1) return false;
  }
  return true;
}

bool admissible_4d(const Scalar& x, int ncut, const Scalar& hbar) {
  if (sgn(x) == 0) return false;
  for (int i = 1; i <= ncut; ++i) {
    if (x == -Scalar(i - 1) * hbar) return false;
  }
  return true;
}

}  // namespace

GradedSeries<TPoly> fay_residual(int n_points, const std::vector<Scalar>& x, const ZOracle& z) {
  if (static_cast<int>(x.size()) != 2 * n_points) throw Error(ErrorKind::Precondition, "Fay needs 2N points");
  DirectOracle<TPoly> o{as_scalar_points(x, false), z, {}};
  std::vector<int> idx(x.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  return fay_general<TPoly>(n_points, idx, o.val, std::ref(o));
}

GradedSeries<TPoly> fay4_residual(const std::vector<Scalar>& x, const ZOracle& z) {
  DirectOracle<TPoly> o{as_scalar_points(x, true), z, {}};
  return fay4<TPoly>({0, 1, 2, 3}, o.val, std::ref(o));
}

GradedSeries<TPoly> fay4_inverse_residual(const std::vector<Scalar>& x, const ZOracle& z) {
  DirectOracle<TPoly> o{as_scalar_points(x, false), z, {}};
  return fay4_inv<TPoly>({0, 1, 2, 3}, o.val, std::ref(o));
}

GradedSeries<TPoly> hirota_miwa_residual(const std::vector<Scalar>& x, const ZOracle& z) {
  DirectOracle<TPoly> o{as_scalar_points(x, true), z, {}};
  return hirota_miwa<TPoly>({0, 1, 2}, o.val, std::ref(o));
}

BilinearReport fay_certified(int n_points, bool formal_t, const BilinearConfig& cfg, const QParam& qp, Exec exec) {
  if (n_points != 2 && n_points != 3) throw Error(ErrorKind::ConfigError, "Fay check supports N = 2 and 3");
  BilinearReport rep;
  const int N = cfg.ncut;
  rep.name = "fay N=" + std::to_string(n_points) + (formal_t ? " formal t" : " t=0");
  rep.degree = N;
  const int nv = 2 * n_points;
  const int per = N + n_points;
  auto sets = draw_sets(nv, per, cfg.seed + n_points, [&](const Scalar& x) { return admissible_5d(x, N, qp); });
  rep.sample_sets = set_strings(sets);
  rep.grid = grid_shape(per, nv);
  std::vector<TPoly> t = formal_t ? formal_couplings("t", cfg.couplings, cfg.tdeg) : std::vector<TPoly>{};
  long first = -1;
  std::string fail;
  if (formal_t) {
    auto cache = build_cache<TPoly>(
        sets, {n_points},
        [&](const std::vector<Scalar>& pts) { return z5d(ZSpec{t, 0, pts, N}, qp, Exec::Serial); }, exec);
    IdxOracle<TPoly> z = std::cref(cache);
    first = scan_grid(cache.var, exec, [&](const std::vector<int>& x) {
      auto r = fay_general<TPoly>(n_points, x, cache.val, z);
      if (!zero_through(r, N)) return false;
      if (n_points == 2) {
        // The written-out three-term form and its antisymmetry in x1 <-> x2.
        auto r4 = fay4<TPoly>(x, cache.val, z);
        auto sw = fay4<TPoly>({x[1], x[0], x[2], x[3]}, cache.val, z);
        return zero_through(r4 - r, N) && zero_through(sw + r4, N);
      }
      return true;
    }, &rep.samples);
  } else {
    auto cache = build_cache<Scalar>(
        sets, {n_points},
        [&](const std::vector<Scalar>& pts) {
          return z5d(ZSpec{{}, 0, pts, N}, qp, Exec::Serial).map([](const TPoly& p) { return p.constant_term(); });
        },
        exec);
    IdxOracle<Scalar> z = std::cref(cache);
    first = scan_grid(cache.var, exec, [&](const std::vector<int>& x) {
      return zero_through(fay_general<Scalar>(n_points, x, cache.val, z), N);
    }, &rep.samples);
  }
  rep.pass = first < 0;
  rep.detail = rep.pass ? "residual zero through degree " + std::to_string(N) + " on all " +
                              std::to_string(rep.samples) + " grid points"
                        : "nonzero residual at grid point " + std::to_string(first);
  return rep;
}

BilinearReport hirota_miwa_certified(const BilinearConfig& cfg, const QParam& qp, Exec exec) {
  BilinearReport rep;
  const int N = cfg.ncut;
  rep.name = "hirota-miwa formal t";
  rep.degree = N;
  const int per = N + 2;
  auto sets = draw_sets(3, per, cfg.seed + 7, [&](const Scalar& x) { return admissible_5d(x, N, qp); });
  rep.sample_sets = set_strings(sets);
  sets.push_back({Scalar(0)});  // x4 = 0 for the specialization path
  rep.grid = grid_shape(per, 3);
  auto t = formal_couplings("t", cfg.couplings, cfg.tdeg);
  auto cache = build_cache<TPoly>(
      sets, {1, 2}, [&](const std::vector<Scalar>& pts) { return z5d(ZSpec{t, 0, pts, N}, qp, Exec::Serial); }, exec);
  IdxOracle<TPoly> z = std::cref(cache);
  const int zero_id = cache.var[3][0];
  std::vector<std::vector<int>> vars(cache.var.begin(), cache.var.begin() + 3);
  long first = scan_grid(vars, exec, [&](const std::vector<int>& x) {
    auto direct = hirota_miwa<TPoly>(x, cache.val, z);
    auto special = fay4<TPoly>({x[0], x[1], x[2], zero_id}, cache.val, z);
    return zero_through(direct, N) && zero_through(direct - special, N);
  }, &rep.samples);
  rep.pass = first < 0;
  rep.detail = rep.pass ? "direct and x4=0 residuals agree and vanish through degree " + std::to_string(N)
                        : "failure at grid point " + std::to_string(first);
  return rep;
}

BilinearReport fay4_4d_certified(const BilinearConfig& cfg, Exec exec) {
  BilinearReport rep;
  const int N = cfg.ncut;
  rep.name = "4D fay formal T";
  rep.degree = N;
  const int per = N + 2;
  auto sets = draw_sets(4, per, cfg.seed + 11, [&](const Scalar& x) { return admissible_4d(x, N, cfg.hbar); });
  rep.sample_sets = set_strings(sets);
  rep.grid = grid_shape(per, 4);
  auto T = formal_couplings("T", cfg.couplings, cfg.tdeg);
  auto cache = build_cache<TPoly>(
      sets, {2}, [&](const std::vector<Scalar>& pts) { return z4d(ZSpec{T, 0, pts, N}, cfg.hbar, Exec::Serial); },
      exec);
  IdxOracle<TPoly> z = std::cref(cache);
  long first = scan_grid(cache.var, exec, [&](const std::vector<int>& x) {
    return zero_through(fay4<TPoly>(x, cache.val, z), N) && zero_through(fay4_inv<TPoly>(x, cache.val, z), N);
  }, &rep.samples);
  rep.pass = first < 0;
  rep.detail = rep.pass ? "X and inverse-X forms vanish through degree " + std::to_string(N)
                        : "failure at grid point " + std::to_string(first);
  return rep;
}

BilinearReport fay_at(int n_points, const FaySample& s, const QParam& qp) {
  BilinearReport rep;
  rep.name = "fay N=" + std::to_string(n_points) + " at given points";
  rep.degree = s.ncut;
  rep.samples = 1;
  rep.sample_sets = set_strings({s.points});
  auto r = fay_residual(n_points, s.points,
                        [&](const std::vector<Scalar>& pts) { return z5d(ZSpec{{}, 0, pts, s.ncut}, qp, Exec::Serial); });
  rep.pass = zero_through(r, s.ncut);
  rep.detail = rep.pass ? "residual zero" : "first nonzero degree " + std::to_string(first_nonzero(r, s.ncut));
  return rep;
}

BilinearReport fay4_4d_at(const FaySample& s, const Scalar& hbar) {
  BilinearReport rep;
  rep.name = "4D fay at given points";
  rep.degree = s.ncut;
  rep.samples = 1;
  rep.sample_sets = set_strings({s.points});
  ZOracle z = [&](const std::vector<Scalar>& pts) { return z4d(ZSpec{{}, 0, pts, s.ncut}, hbar, Exec::Serial); };
  auto r = fay4_residual(s.points, z);
  auto ri = fay4_inverse_residual(s.points, z);
  rep.pass = zero_through(r, s.ncut) && zero_through(ri, s.ncut);
  rep.detail = rep.pass ? "both forms zero" : "nonzero residual";
  return rep;
}

namespace {

// τ(t + [x_1] + ...) = Σ_λ s_λ(q^{-ρ})² Q^{|λ|} e^{t_1 φ_1(λ)} Π_j Π_i (1 - q^{1-i}x_j)/(1 - q^{λ_i-i+1}x_j),
// the shifted potential summed in closed form.
template <class Factor>
GradedSeries<TPoly> shifted_tau(const TPoly& t1, int ncut, const QParam& qp, Factor&& factor) {
  std::vector<TPoly> coeffs(ncut + 1);
  for (const auto& lam : enumerate_partitions(ncut)) {
    Scalar w = schur_principal(lam, qp);
    TPoly term = tpoly_exp(t1 * phi_k(lam, 1, qp)) * Scalar(w * w);
    term = term * factor(lam);
    coeffs[lam.size()] += term;
  }
  return GradedSeries<TPoly>::from_coefficients(std::move(coeffs), ncut);
}

GradedSeries<TPoly> d_t1(const GradedSeries<TPoly>& s) {
  return s.map([](const TPoly& p) { return p.derivative(0); });
}

GradedSeries<TPoly> zero_vars(const GradedSeries<TPoly>& s, const std::vector<int>& vars) {
  return s.map([&](const TPoly& p) { return p.zero_out(vars); });
}

GradedSeries<TPoly> lift(const TPoly& p) { return GradedSeries<TPoly>::constant(p, kUnbounded); }

}  // namespace

BilinearReport diff_fay(const BilinearConfig& cfg, const QParam& qp, Exec exec) {
  BilinearReport rep;
  rep.name = "differential fay";
  const int N = cfg.ncut;
  const int d = cfg.xdeg;
  rep.degree = N;
  std::vector<std::string> problems;

  // Fock side, formal in (t1, x1, x2).
  auto space = TSpace::make({"t1", "x1", "x2"}, {1, 1, 1}, d);
  const TPoly t1 = TPoly::variable(space, 0), x1 = TPoly::variable(space, 1), x2 = TPoly::variable(space, 2);
  const int S = std::max(N, d + 1);
  auto g2 = build_g_state(GState::G2, S, N, qp, exec);
  g2 = apply_diagonal(g2, [&](int c, const Partition& l) { return neg_sqrt_q_l0_factor(c, l, qp); });
  std::vector<Coef> c(S);
  for (int k = 1; k <= S; ++k) {
    TPoly ck = TPoly::variable(space, 1, Scalar(1, k), k) + TPoly::variable(space, 2, Scalar(1, k), k);
    if (k == 1) ck += t1;
    c[k - 1] = RingLift<Coef>::from(ck);
  }
  auto tau = vev(0, apply_vertex(c, false, g2, exec));
  auto dtau = vev(0, apply_vertex(c, false, apply_J(1, g2, exec), exec));
  if (tau.cutoff() < N || dtau.cutoff() < N) problems.push_back("Fock window below degree " + std::to_string(N));

  auto t12 = tau, t1_ = zero_vars(tau, {2}), t2_ = zero_vars(tau, {1}), t0 = zero_vars(tau, {1, 2});
  auto d1 = zero_vars(dtau, {2}), d2 = zero_vars(dtau, {1});
  auto res = lift(x1 - x2) * (t12 * t0 - t1_ * t2_) + lift(x1 * x2) * (t1_ * d2 - d1 * t2_);
  if (!zero_through(res, N)) problems.push_back("formal residual nonzero");
  // J_1 insertion against the t1 derivative.
  if (!zero_through(dtau - d_t1(tau), N)) problems.push_back("J1 insertion differs from the t1 derivative");
  // Fock τ against the combinatorial sum with factors expanded in x.
  auto comb = shifted_tau(t1, N, qp, [&](const Partition& lam) {
    TPoly f(Scalar(1));
    for (const TPoly* xv : {&x1, &x2}) {
      for (int i = 1; i <= lam.length(); ++i) {
        f = f * linear_fraction_series(1, -qp.q_pow(1 - i), 1, -qp.q_pow(lam.part(i) - i + 1), *xv);
      }
    }
    return f;
  });
  if (!zero_through(tau - comb, N)) problems.push_back("Fock and combinatorial tau differ");

  // Combinatorial residual at rational points, t1 formal.
  auto tspace = TSpace::couplings("t", 1, d);
  const TPoly tt = TPoly::variable(tspace, 0);
  const int per = 2 * N + 1;
  auto sets = draw_sets(2, per, cfg.seed + 13, [&](const Scalar& x) {
    if (sgn(x) == 0) return false;
    for (int m = -N; m <= N; ++m) {
      if (qp.q_pow(m) * x == 1) return false;
    }
    return true;
  });
  rep.sample_sets = set_strings(sets);
  rep.grid = grid_shape(per, 2);
  auto tau_at = [&](const std::vector<Scalar>& pts) {
    return shifted_tau(tt, N, qp, [&](const Partition& lam) {
      Scalar f = 1;
      for (const auto& a : pts) {
        for (int i = 1; i <= lam.length(); ++i) f *= (1 - qp.q_pow(1 - i) * a) / (1 - qp.q_pow(lam.part(i) - i + 1) * a);
      }
      return TPoly(f);
    });
  };
  const auto base = tau_at({});
  long count = 0;
  std::vector<std::vector<int>> vars(2, std::vector<int>(per));
  for (int i = 0; i < per; ++i) {
    vars[0][i] = i;
    vars[1][i] = per + i;
  }
  std::vector<Scalar> val = sets[0];
  val.insert(val.end(), sets[1].begin(), sets[1].end());
  long first = scan_grid(vars, exec, [&](const std::vector<int>& x) {
    const Scalar &a = val[x[0]], &b = val[x[1]];
    auto tab = tau_at({a, b}), ta = tau_at({a}), tb = tau_at({b});
    auto r = (tab * base - ta * tb) * Scalar(a - b) + (ta * d_t1(tb) - d_t1(ta) * tb) * Scalar(a * b);
    return zero_through(r, N);
  }, &count);
  rep.samples = count;
  if (first >= 0) problems.push_back("combinatorial residual nonzero at grid point " + std::to_string(first));

  rep.pass = problems.empty();
  if (rep.pass) {
    rep.detail = "formal residual zero through degree " + std::to_string(N) + " in (t1,x1,x2) up to total degree " +
                 std::to_string(d) + "; J1 insertion = t1 derivative; Fock = combinatorial; grid residual zero";
  } else {
    for (const auto& p : problems) rep.detail += p + "; ";
  }
  return rep;
}

BilinearReport fay_bridge(const BilinearConfig& cfg, const std::vector<Scalar>& X) {
  if (X.size() != 4) throw Error(ErrorKind::Precondition, "bridge needs four points");
  as_scalar_points(X, false);
  BilinearReport rep;
  rep.name = "5D to 4D residual bridge";
  rep.degree = cfg.ncut;
  rep.sample_sets = set_strings({X});
  const RSubstitution sub{cfg.hbar, cfg.lambda, 4};
  const Scalar& hb = cfg.hbar;
  auto dx = [&](int i, int j) { return r_exp(X[i] - hb / 2, 6) - r_exp(X[j] - hb / 2, 6); };
  auto w4 = [&](const Partition& lam, int i, int j) {
    const Scalar pw = plancherel_weight(lam);
    Scalar w = pw * pw * power(cfg.lambda / hb, 2L * lam.size());
    for (int k : {i, j}) {
      for (int r = 1; r <= lam.length(); ++r) w *= (X[k] - Scalar(lam.part(r) - r + 1) * hb) / (X[k] - Scalar(1 - r) * hb);
    }
    return w;
  };
  struct Pairing {
    int a, b, c, d, sign;
  };
  const Pairing pairings[] = {{0, 1, 2, 3, 1}, {0, 2, 1, 3, -1}, {0, 3, 1, 2, 1}};
  std::vector<std::string> problems;
  long terms = 0;
  for (int n = 0; n <= cfg.ncut; ++n) {
    RSeries sum5;
    Scalar sum4 = 0;
    for (const auto& p : pairings) {
      const RSeries delta = dx(p.a, p.b) * dx(p.c, p.d) * Scalar(p.sign);
      for (int m = 0; m <= n; ++m) {
        for (const auto& lam : partitions_of(m)) {
          const RSeries wl = weight_term_series(lam, std::vector<Scalar>{X[p.a], X[p.b]}, sub);
          for (const auto& mu : partitions_of(n - m)) {
            ++terms;
            RSeries t5 = (delta * wl * weight_term_series(mu, std::vector<Scalar>{X[p.c], X[p.d]}, sub)).shifted(-2);
            Scalar t4 = Scalar(p.sign) * (X[p.a] - X[p.b]) * (X[p.c] - X[p.d]) * w4(lam, p.a, p.b) * w4(mu, p.c, p.d);
            if (t5.top() < 0 || (!t5.is_zero() && t5.lo() < 0) || t5.coeff(0) != t4) {
              problems.push_back("term " + lam.to_string() + "," + mu.to_string() + " at degree " + std::to_string(n));
            }
            sum5 += t5;
            sum4 += t4;
          }
        }
      }
    }
    if (!sum5.truncated(std::min(sum5.top(), 2)).is_zero()) problems.push_back("5D residual/R^2 nonzero at degree " + std::to_string(n));
    if (sgn(sum4) != 0) problems.push_back("4D residual nonzero at degree " + std::to_string(n));
  }
  rep.samples = terms;
  rep.pass = problems.empty();
  rep.detail = rep.pass ? std::to_string(terms) + " per-pair terms: negative R-powers vanish after division by R^2 "
                                                  "and constant terms equal the 4D terms"
                        : problems.front();
  return rep;
}

BilinearSuite bilinear_suite(const BilinearConfig& cfg, const QParam& qp, Exec exec) {
  BilinearSuite s;
  s.reports.push_back(fay_certified(2, true, cfg, qp, exec));
  s.reports.push_back(fay_certified(3, false, cfg, qp, exec));
  s.reports.push_back(hirota_miwa_certified(cfg, qp, exec));
  s.reports.push_back(diff_fay(cfg, qp, exec));
  s.pass = std::all_of(s.reports.begin(), s.reports.end(), [](const BilinearReport& r) { return r.pass; });
  return s;
}

BilinearSuite bilinear_suite_4d(const BilinearConfig& cfg, const QParam& qp, Exec exec) {
  (void)qp;
  BilinearSuite s;
  s.reports.push_back(fay4_4d_certified(cfg, exec));
  s.reports.push_back(fay_bridge(cfg, {Scalar(3), Scalar(5), Scalar(7), Scalar(11)}));
  s.pass = std::all_of(s.reports.begin(), s.reports.end(), [](const BilinearReport& r) { return r.pass; });
  return s;
}

}  // namespace mcqc
