#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubelab/error.hpp"
#include "cubelab/verify.hpp"

using namespace cubelab;

TEST_CASE("range parsing") {
  CHECK(parse_range("2..5") == std::pair{2, 5});
  CHECK(parse_range("4") == std::pair{4, 4});
  CHECK_THROWS_AS(parse_range("5..2"), PreconditionError);
  CHECK_THROWS_AS(parse_range("a..b"), PreconditionError);
}

TEST_CASE("unknown claims are rejected") {
  VerifyOptions opt;
  opt.claims = {"theorem2", "nonsense"};
  CHECK_THROWS_AS(run_verification(opt), PreconditionError);
  CHECK_THROWS_AS(verify_claim("nonsense", 2), PreconditionError);
}

TEST_CASE("requested ranges are clipped to each claim's domain") {
  VerifyOptions opt;
  opt.claims = {"poisson", "theorem3"};
  opt.n_range = std::pair{0, 5};
  const auto report = run_verification(opt);
  int poisson = 0, theorem3 = 0;
  for (const auto& e : report.entries) {
    REQUIRE(e.n);
    (e.claim == "poisson" ? poisson : theorem3)++;
    CHECK(*e.n >= 1);
  }
  CHECK(poisson == 4);
  CHECK(theorem3 == 4);
}

TEST_CASE("the small-dimension discrepancy is reported, not hidden") {
  const auto e = verify_claim("theorem3", 3);
  CHECK(e.status == Status::DiscrepancyNoted);
  CHECK(e.max_abs_err == doctest::Approx(2.0));
  CHECK(verify_claim("theorem3", 4).status == Status::Pass);
}

TEST_CASE("dimensionless claims produce one entry without n") {
  VerifyOptions opt;
  opt.claims = {"sequences"};
  const auto report = run_verification(opt);
  REQUIRE(report.entries.size() == 1);
  CHECK_FALSE(report.entries[0].n);
  CHECK(report.entries[0].status == Status::Pass);
  const auto j = report.to_json();
  CHECK(j["entries"][0]["n"].is_null());
  CHECK(j["summary"]["pass"] == 1);
}

TEST_CASE("report JSON") {
  VerifyOptions opt;
  opt.claims = {"euler", "caf"};
  opt.n_range = std::pair{2, 3};
  const auto report = run_verification(opt);
  CHECK_FALSE(report.any_failed());
  const auto j = report.to_json();
  CHECK(j["summary"]["entries"] == 4);
  CHECK(j["entries"][0]["claim"] == "euler");
  CHECK(j["entries"][0]["status"] == "pass");
  CHECK(j["entries"][1]["details"].get<std::string>().find("24 edges") != std::string::npos);
}

TEST_CASE("every claim has a default range inside its domain") {
  for (const auto& claim : known_claims()) {
    const auto [lo, hi] = default_range(claim);
    const auto [dlo, dhi] = claim_domain(claim);
    CHECK(dlo <= lo);
    CHECK(hi <= dhi);
  }
}
