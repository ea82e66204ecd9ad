#include <doctest.h>

#include <stdexcept>
#include <string>

#include "greedykit/config.hpp"

using namespace greedykit;

TEST_CASE("config parsing handles comments, blanks, and repeats") {
  const Config config = parse_config(
      "# header comment\n"
      "\n"
      "samples = 50\n"
      "tol=1e-8   # trailing comment\n"
      "name = lp:2:8\n"
      "samples = 75\n");
  CHECK(config_int(config, "samples", 0) == 75);
  CHECK(config_real(config, "tol", 0.0) == 1e-8);
  CHECK(config_string(config, "name", "") == "lp:2:8");
  CHECK(config_int(config, "absent", 42) == 42);
}

TEST_CASE("malformed lines report their line number") {
  try {
    parse_config("samples = 1\njust words\n");
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("config line 2") != std::string::npos);
  }

  try {
    parse_config("= 3\n");
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("config line 1") != std::string::npos);
  }
}

TEST_CASE("typed accessors reject values of the wrong shape") {
  const Config config = parse_config("count = 2.5\nword = abc\n");
  CHECK_THROWS_AS(config_int(config, "count", 0), std::invalid_argument);
  CHECK_THROWS_AS(config_real(config, "word", 0.0), std::invalid_argument);
  try {
    config_real(config, "word", 0.0);
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("config line 2") != std::string::npos);
  }
}

TEST_CASE("numeric values must consume the whole token") {
  const Config config = parse_config("tol = 1e-3junk\n");
  CHECK_THROWS_AS(config_real(config, "tol", 0.0), std::invalid_argument);
}

TEST_CASE("missing config files raise a usable error") {
  CHECK_THROWS_AS(load_config_file("/tmp/greedykit_missing_config.txt"),
                  std::runtime_error);
}
