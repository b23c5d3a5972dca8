#include "doctest.h"
#include "nsg/errors.hpp"
#include "nsg/verifier.hpp"
#include "test_support.hpp"

using namespace nsg;

namespace {

VerificationReport run(const std::string& name) {
  Analysis a(test::group(name));
  return verify_all(a, name);
}

}  // namespace

TEST_CASE("every registered check appears once, in order") {
  const auto& checks = registered_checks();
  REQUIRE(checks.size() == 21);
  for (std::size_t i = 0; i < checks.size(); ++i) {
    char id[4];
    std::snprintf(id, sizeof id, "C%02zu", i + 1);
    CHECK(std::string(checks[i].id) == id);
  }
  CHECK(std::string(find_check("diam-2").id) == "C02");
  CHECK(std::string(find_check("s-group-witness").id) == "C11");
  CHECK_THROWS_AS(find_check("C99"), PreconditionError);
}

TEST_CASE("non-solvable catalog groups pass every check") {
  for (const char* name : {"A5", "PSL27", "SL25", "A5xC2", "S5"}) {
    CAPTURE(name);
    const auto report = run(name);
    for (const auto& c : report.checks) {
      CAPTURE(c.id);
      CAPTURE(c.witness.dump());
      // The cyclic-normal hypothesis fails in every non-solvable group.
      CHECK(c.status == (c.id == "C19" ? CheckStatus::not_applicable : CheckStatus::pass));
    }
  }
}

TEST_CASE("solvable groups: graph checks are not applicable, the rest pass") {
  for (const char* name : {"trivial", "C2", "C6", "S3", "Q8", "D10", "A4", "S4"}) {
    CAPTURE(name);
    const auto report = run(name);
    CHECK(report.ok());
    for (const auto& c : report.checks) {
      CAPTURE(c.id);
      CHECK(c.status != CheckStatus::fail);
      CHECK(c.status != CheckStatus::skipped);
    }
    CHECK(report.not_applicable >= 9);
  }
}

TEST_CASE("dedekind check applies to abelian and quaternion fixtures") {
  for (const char* name : {"C6", "Q8", "C2"}) {
    Analysis a(test::group(name));
    CHECK(verify_check(a, "dedekind-corollary").status == CheckStatus::pass);
  }
  Analysis s3(test::group("S3"));
  CHECK(verify_check(s3, "C19").status == CheckStatus::not_applicable);
}

TEST_CASE("single checks by name") {
  Analysis a5(test::group("A5"));
  CHECK(verify_check(a5, "deg-not-n-minus-2").status == CheckStatus::pass);
  const auto w = verify_check(a5, "s-group-witness");
  CHECK(w.status == CheckStatus::pass);
  CHECK(w.witness.contains("x"));
  CHECK(w.witness.contains("yz"));
  CHECK_THROWS_AS(verify_check(a5, "nope"), PreconditionError);

  Analysis psl(test::group("PSL27"));
  const auto d = verify_check(psl, "diam-2");
  CHECK(d.status == CheckStatus::pass);
  CHECK(d.witness["diameter"] == 2);
}

TEST_CASE("SL25 quotient check runs against the order-60 quotient") {
  Analysis a(test::group("SL25"));
  const auto r = verify_check(a, "C04");
  REQUIRE(r.status == CheckStatus::pass);
  bool saw = false;
  for (const auto& q : r.witness["quotients"]) saw = saw || (q["normal_order"] == 2 && q["quotient_order"] == 60);
  CHECK(saw);
}

TEST_CASE("reports are reproducible") {
  const auto a = to_json(run("A5")).dump();
  const auto b = to_json(run("A5")).dump();
  CHECK(a == b);
  CHECK(to_json(run("S3"))["checks"][0]["ms"].is_null());
}
