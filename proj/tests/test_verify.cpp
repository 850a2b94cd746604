#include <set>
#include <sstream>

#include "biwave/error.hpp"
#include "biwave/verify.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace biwave;

TEST_CASE("registry ids are unique and tolerances positive") {
  std::set<std::string> ids;
  for (const auto& c : claim_registry()) {
    CHECK(ids.insert(c.id).second);
    CHECK(c.tolerance > 0.0);
    CHECK(c.draws > 0);
    CHECK_FALSE(c.description.empty());
  }
  CHECK(find_claim("C20").id == "C20");
}

TEST_CASE("unknown claim") {
  CHECK_THROWS_AS(find_claim("C999"), Error);
  try {
    run_claim("nope");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownClaim);
  }
}

TEST_CASE("norm identity passes under the default convention") {
  const auto r = run_claim("C20");
  CHECK(r.status == ClaimStatus::Pass);
  CHECK(r.max_error <= 1e-12);
  CHECK(r.draws == 200);
  CHECK(r.seed == kDefaultSeed);
}

TEST_CASE("energy-momentum vanishes under QuaternionOnly") {
  ConventionFlags q;
  q.xi = XiConvention::QuaternionOnly;
  CHECK(run_claim("C21", q).status == ClaimStatus::Fail);
  CHECK(run_claim("C22", q).status == ClaimStatus::Fail);
  CHECK(run_claim("CH", q).status == ClaimStatus::Pass);
  CHECK(run_claim("C21").status == ClaimStatus::Pass);
}

TEST_CASE("printed variants report both residuals") {
  const auto r = run_claim("C45");
  CHECK(r.status == ClaimStatus::FailsAsPrintedPassesCorrected);
  CHECK(r.max_error > 1e-3);
  REQUIRE(r.corrected_error);
  CHECK(*r.corrected_error <= 1e-12);

  const auto e = run_claim("C28");
  CHECK(e.status == ClaimStatus::FailsAsPrintedPassesCorrected);
}

TEST_CASE("seeded runs are deterministic") {
  const auto a = run_claim("C19", {}, 7);
  const auto b = run_claim("C19", {}, 7);
  CHECK(a.max_error == b.max_error);
  const auto c = run_claim("C19", {}, 8);
  CHECK(c.seed == 8);
}

TEST_CASE("full matrix") {
  const std::vector<XiConvention> all = {XiConvention::HermitianLeft,
                                         XiConvention::HermitianRight,
                                         XiConvention::QuaternionOnly};
  const auto report = run_all(all);
  CHECK(report.entries.size() == claim_registry().size() * all.size());
  CHECK(report.passed(XiConvention::HermitianLeft));
  CHECK_FALSE(report.passed(XiConvention::QuaternionOnly));

  const std::string j1 = to_json(report);
  CHECK(j1 == to_json(run_all(all)));

  const auto j = nlohmann::json::parse(j1);
  CHECK(j["seed"] == kDefaultSeed);
  CHECK(j["conventions"].size() == 3);
  CHECK(j["claims"].size() == report.entries.size());
  CHECK(j["summary"]["fail"].get<int>() > 0);

  std::ostringstream table;
  write_table(report, table);
  CHECK(table.str().find("FailsAsPrinted-PassesCorrected") != std::string::npos);
}

TEST_CASE("empty convention list means the default") {
  const auto report = run_all({});
  CHECK(report.entries.size() == claim_registry().size());
  for (const auto& r : report.entries) CHECK(r.convention == XiConvention::HermitianLeft);
  CHECK(report.passed());
}
