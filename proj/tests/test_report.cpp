#include <doctest.h>

#include <random>

#include "jtqes/report.hpp"

using namespace jtqes;
using report::json;

TEST_CASE("rational round trip") {
  CHECK(report::to_json(Rational(-6, 4)) == json("-3/2"));
  CHECK(report::to_json(Rational(5)) == json("5/1"));
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000);
  for (int i = 0; i < 200; ++i) {
    const Rational r(num(rng), den(rng));
    const json j = json::parse(report::to_json(r).dump());
    CHECK(report::rational_from_json(j) == r);
  }
  CHECK_THROWS(report::rational_from_json(json(1.5)));
}

TEST_CASE("polynomial round trip") {
  const Polynomial p(std::vector<Rational>{Rational(-3, 32), Rational(1), Rational(-4)});
  const json j = report::to_json(p);
  CHECK(j["variable"] == "t");
  CHECK(j["coefficients"].size() == 3);
  CHECK(report::polynomial_from_json(json::parse(j.dump())) == p);
  CHECK(report::polynomial_from_json(report::to_json(Polynomial())) == Polynomial());
}

TEST_CASE("result records") {
  auto rec = report::record("juddian");
  CHECK(rec["schema_version"] == report::kSchemaVersion);
  CHECK(rec["command"] == "juddian");

  JuddianSettings s;
  s.run_oracle = false;
  const json r = report::to_json(juddian_points(Rational(1, 2), Rational(1), Rational(0), s));
  REQUIRE(r["points"].size() == 1);
  CHECK(r["points"][0]["kappa_sq"]["lower"] == "3/16");
  CHECK(r["points"][0]["validation"]["exact_eigencheck"] == true);

  const json c = report::to_json(compare_with_printed(Rational(0)));
  CHECK(c["verdict"] == "MATCH");
  CHECK(c["constant"] == "1/2");
}
