#include <doctest.h>

#include "mcqc/jobs.hpp"

using namespace mcqc;

namespace {

JobConfig job(const std::string& check) {
  JobConfig cfg;
  cfg.check = check;
  return cfg;
}

}  // namespace

TEST_CASE("macmahon check reports the coefficients") {
  auto cfg = job("verify-macmahon");
  cfg.ncut = 6;
  auto rep = run_job(cfg);
  CHECK(exit_code(rep) == 0);
  auto j = to_json(rep);
  CHECK(j["checks"][0]["witness"]["coefficients"] ==
        nlohmann::json({"1", "1", "3", "6", "13", "24", "48"}));
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK_FALSE(j.contains("wall_time_s"));
}

TEST_CASE("reports are byte-stable") {
  auto cfg = job("verify-qcurve");
  cfg.ncut = 2;
  CHECK(to_json(run_job(cfg)).dump() == to_json(run_job(cfg)).dump());
}

TEST_CASE("trivial and small windows") {
  auto q = job("verify-qcurve");
  q.ncut = 0;
  CHECK(run_job(q).pass());
  auto c = job("verify-4d-curve");
  c.ncut = 4;
  CHECK(run_job(c).pass());
}

TEST_CASE("config errors and defaults") {
  CHECK_THROWS_AS(run_job(job("verify-nothing")), Error);
  auto bad_u = job("verify-macmahon");
  bad_u.u = 1;
  try {
    run_job(bad_u);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConfigError);
  }
  CHECK(check_defaults("verify-macmahon").ncut == 12);
  CHECK(check_defaults("verify-kac-schwarz").xdeg == 12);
  auto cfg = job("verify-fay");
  cfg.ncut = 2;
  CHECK(resolve_windows(cfg).ncut == 2);
}

TEST_CASE("module errors become entries") {
  auto cfg = job("vev");
  cfg.chain = nlohmann::json::parse(R"({"size_cap": 1, "ops": [{"op": "J", "k": 2}, {"op": "J", "k": -2}]})");
  auto rep = run_job(cfg);
  REQUIRE(rep.entries.size() == 1);
  CHECK(rep.entries[0].status == Status::Untrusted);
  CHECK(exit_code(rep) == 1);

  cfg.chain = nlohmann::json::parse(R"({"bra": 1, "ket": 0, "ops": []})");
  rep = run_job(cfg);
  CHECK(rep.entries[0].status == Status::Fail);
  CHECK(rep.entries[0].witness["error"] == "ChargeMismatch");
}

TEST_CASE("profile adds timing") {
  auto cfg = job("verify-macmahon");
  cfg.ncut = 8;
  cfg.profile = true;
  auto j = to_json(run_job(cfg));
  CHECK(j.contains("wall_time_s"));
  CHECK(j["profile_s"].contains("series_multiplication"));
  CHECK(j["profile_s"].contains("partition_enumeration"));
}
