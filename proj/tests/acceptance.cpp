// One PASS/FAIL line per acceptance criterion, run at the default windows.
#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <string>

#include "mcqc/jobs.hpp"

using namespace mcqc;
using nlohmann::json;

namespace {

constexpr double kSlopeTolerance = 0.1;
constexpr double kTimeBudgetSeconds = 600.0;
constexpr double kDominantShare = 0.5;
constexpr int kKacSchwarzMinWidth = 16;

std::map<std::string, double> g_profile;
double g_wall = 0;

json run(const std::string& check) {
  JobConfig cfg;
  cfg.check = check;
  cfg.profile = true;
  json j = to_json(run_job(cfg));
  g_wall += j["wall_time_s"].get<double>();
  for (const auto& [stage, secs] : j["profile_s"].items()) g_profile[stage] += secs.get<double>();
  return j;
}

const json& entry(const json& rep, const std::string& name) {
  for (const auto& c : rep["checks"]) {
    if (c["name"] == name) return c;
  }
  static const json missing = {{"status", "missing"}};
  return missing;
}

bool passed(const json& c) { return c["status"] == "pass"; }

int failures = 0;

void report(int n, bool ok, const std::string& what) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  " << n << "  " << what << std::endl;
}

}  // namespace

int main() {
  {
    // Plane partitions of volume 0..12.
    const json known = {"1", "1", "3", "6", "13", "24", "48", "86", "160", "282", "500", "859", "1479"};
    auto j = run("verify-macmahon");
    const auto& c = entry(j, "macmahon plane partitions = schur squares = product");
    report(1, passed(c) && c["witness"]["coefficients"] == known, "MacMahon triple identity through q^12");
  }
  {
    auto j = run("verify-hook");
    const auto& h = entry(j, "hook formula = jacobi-trudi at q^-rho");
    const auto& d = entry(j, "sum of squared dimensions = n!");
    // p(0) + ... + p(8)
    report(2, passed(h) && h["witness"]["partitions"] == 67 && passed(d) && d["witness"]["sums"].back() == "5040",
           "hook formula = Jacobi-Trudi for |λ|<=8; sum of dim^2 = n! for n<=7");
  }
  {
    auto j = run("verify-z-crosscheck");
    bool ok = true;
    for (const char* name : {"Z_t_eH", "Z_t_g1", "Z_t_dual", "g2'|0> = prefactor g|0>"}) ok = ok && passed(entry(j, name));
    ok = ok && j["job"]["ncut"] == 5 && j["job"]["tdeg"] == 2;
    report(3, ok, "fermionic vevs = Z(t) through Q^5, t-degree 2; state identity through Q^3");
  }
  const json qc = run("verify-qcurve");
  report(4, passed(entry(qc, "product form = sum form")), "product and sum forms of A have equal normal forms");
  {
    const auto& c = entry(qc, "(A-1)Z(x) = 0 per degree");
    report(5, passed(c) && c["witness"]["residuals"].size() == 7, "quantum curve residual zero for n<=6");
  }
  {
    auto j = run("verify-kac-schwarz");
    const auto& c = entry(j, "A Phi_j = q^-j Phi_j and Z = C prefactor Phi_0");
    const bool ok = passed(c) && c["witness"]["width"].get<int>() >= kKacSchwarzMinWidth &&
                    c["witness"]["constant_uniform"] == true && j["job"]["jmax"] == 3 && j["job"]["ncut"] == 3;
    report(6, ok, "Kac-Schwarz eigenfunctions, window width >= 16, Q<=3, uniform constant");
  }
  {
    auto j = run("verify-4d-curve");
    const auto& c = entry(j, "4D difference equation per degree");
    report(7, passed(c) && c["witness"]["residuals"].size() == 7 && c["witness"]["degree_one_by_hand"] == "0",
           "4D curve residual zero for n<=6, including the degree-one bracket");
  }
  {
    auto j = run("verify-limits");
    const auto& e = entry(j, "exact R-series limits");
    const auto& r = entry(j, "numeric convergence rate");
    const bool slope_ok = r.contains("witness") && r["witness"].contains("slope") &&
                          std::abs(r["witness"]["slope"].get<double>() - 1.0) <= kSlopeTolerance;
    report(8, passed(e) && passed(r) && slope_ok, "limit lemmas exact for |λ|<=4, k<=4; log-log slope 1.0 +- 0.1");
  }
  {
    auto a = run("verify-fay");
    auto b = run("verify-fay-4d");
    bool ok = a["pass"] == true && b["pass"] == true && a["job"]["ncut"] == 4 && b["job"]["ncut"] == 4;
    report(9, ok, "Fay N=2,3, Hirota-Miwa, differential Fay, 4D Fay and the R^2 bridge through degree 4");
  }
  {
    const double dominant = g_profile["partition_enumeration"] + g_profile["series_multiplication"];
    const bool ok = g_wall < kTimeBudgetSeconds && g_wall > 0 && dominant / g_wall >= kDominantShare;
    std::cout << "      wall " << g_wall << " s; partition enumeration " << g_profile["partition_enumeration"]
              << " s; series multiplication " << g_profile["series_multiplication"] << " s" << std::endl;
    report(10, ok, "default suite under 10 minutes, enumeration + series multiplication >= half the time");
  }
  return failures == 0 ? 0 : 1;
}
