#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rhwarp/error.hpp"
#include "rhwarp/verify.hpp"

using namespace rhwarp;

TEST_CASE("names are unique and module-prefixed") {
  const auto names = check_names();
  CHECK(names.size() >= 40);
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  for (const auto& n : names) CHECK(n.find('.') != std::string::npos);
}

TEST_CASE("filter selects by substring") {
  const auto res = run_verify({"pyconv.", ""});
  CHECK(res.size() == 6);
  for (const auto& r : res) {
    CHECK(r.name.rfind("pyconv.", 0) == 0);
    CHECK(r.pass);
    CHECK(r.seconds >= 0);
  }
  try {
    run_verify({"no-such-check", ""});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_argument);
  }
}

TEST_CASE("injected perturbations are detected") {
  for (const std::string name : {"so3py.log_roundtrip", "camera.rh_composition", "pywarp.target_roundtrip",
                                 "pyconv.impulse_sifting", "augment.determinism", "distortion.fixed_point"}) {
    const auto clean = run_verify({name, ""});
    REQUIRE(clean.size() == 1);
    CHECK(clean[0].pass);
    const auto bad = run_verify({name, name});
    REQUIRE(bad.size() == 1);
    CHECK_MESSAGE(!bad[0].pass, name);
  }
  try {
    run_verify({"", "nope"});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_argument);
  }
}

TEST_CASE("full run") {
  const auto res = run_verify({});
  CHECK(res.size() == check_names().size());
  std::set<std::string> failing;
  for (const auto& r : res)
    if (!r.pass) failing.insert(r.name);
  // The stated p14 leading term is off by one power of |alpha|.
  CHECK(failing == std::set<std::string>{"taylor.p14"});
}
