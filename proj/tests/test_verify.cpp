#include <fstream>

#include "doctest.h"
#include "error.hpp"
#include "json.hpp"
#include "verify.hpp"

using nlohmann::json;

namespace {

json quick_grid() {
  std::ifstream in(CHZ_TEST_VERIFY_CONFIG);
  return json::parse(in).at("quick");
}

const chz::FamilyResult& family(const chz::VerifyReport& r, const std::string& name) {
  for (const auto& f : r.families)
    if (f.name == name) return f;
  FAIL("missing family " << name);
  return r.families.front();
}

}  // namespace

TEST_CASE("shipped grids pass") {
  for (bool quick : {true, false}) {
    const auto report = chz::verify_all(CHZ_TEST_VERIFY_CONFIG, quick);
    CHECK(report.passed());
    CHECK(report.families.size() == 10);
    for (const auto& f : report.families) {
      CHECK_MESSAGE(f.passed(), f.name << ": " << f.detail);
      CHECK(f.detail.empty());
    }
  }
}

TEST_CASE("full grid covers the advertised ranges") {
  const auto r = chz::verify_all(CHZ_TEST_VERIFY_CONFIG, false);
  CHECK(family(r, "coulomb_determinant").checks == 6 * 4 * 8);
  CHECK(family(r, "desnanot_jacobi").checks == 4 * 7 * 4);
  CHECK(family(r, "sign_products").checks >= 6 * 4 * 5);
}

TEST_CASE("a wrong expectation is reported, not thrown") {
  json g = quick_grid();
  g["numeric_zeros"]["cases"][0]["zeros"][0] = json::array({0.2, 0.2520});
  g["classification"]["complex"][0]["pairs"] = 2;
  const auto r = chz::verify_grid(g.dump());
  CHECK_FALSE(r.passed());
  CHECK(family(r, "numeric_zeros").failures == 1);
  CHECK(family(r, "classification").failures == 1);
  CHECK_FALSE(family(r, "numeric_zeros").detail.empty());
  CHECK(family(r, "coulomb_determinant").passed());
}

TEST_CASE("malformed configs") {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const chz::Error& e) {
      return e.code();
    }
    return chz::Errc::verification_failed;
  };
  CHECK(code([] { chz::verify_grid("{not json"); }) == chz::Errc::invalid_argument);
  CHECK(code([] { chz::verify_grid("{}"); }) == chz::Errc::invalid_argument);
  CHECK(code([] { chz::verify_all("/nonexistent.json", true); }) == chz::Errc::invalid_argument);
  json g = quick_grid();
  g["coulomb"]["L"] = json::array({"0.5"});
  CHECK(code([&] { chz::verify_grid(g.dump()); }) == chz::Errc::parse_error);
}
