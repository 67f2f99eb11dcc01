#include <cmath>
#include <sstream>

#include "cli/config.hpp"
#include "cli/report.hpp"
#include "cli/suites.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace dunkl::cli;

TEST_CASE("config defaults reproduce the desk scale") {
  const Config c = parse_config("");
  CHECK(c.grid_radius == 16.0);
  CHECK(c.x_grid()->size() == 1024);
  CHECK(c.lambda_grid()->same_nodes(*c.x_grid()));
  CHECK(c.gammas == std::vector<double>{0.0, 0.5, 1.2});
  CHECK(c.alpha == 0.5);
  CHECK(c.beta == 1.5);
}

TEST_CASE("config parsing") {
  const Config c = parse_config("# comment\ngamma = 1.2\ngammas = 0.1, 0.2\n\nprofile = power_gaussian\nprofile.power = 6\n");
  CHECK(c.gamma == 1.2);
  CHECK(c.gammas.size() == 2);
  CHECK(c.profile_power == 6.0);
  CHECK(c.inversion_profile().eta == 6.0);
  CHECK(describe(c).find("profile.power = 6") != std::string::npos);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_config("nope = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("grid.panels = 1.5\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("gamma\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("gamma = \n"), ConfigError);
  CHECK_THROWS_AS(parse_config("profile = power_gaussian\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("profile = mexican_hat\nprofile.power = 2\n"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/config.txt"), ConfigError);
}

TEST_CASE("check bounds") {
  CHECK(upper_bound("a", "r", 1e-7, 1e-6).pass);
  CHECK_FALSE(upper_bound("a", "r", 2e-6, 1e-6).pass);
  CHECK_FALSE(upper_bound("a", "r", NAN, 1e-6).pass);
  CHECK(lower_bound("a", "r", 0.5, 0.1).pass);
  CHECK_FALSE(lower_bound("a", "r", 0.05, 0.1).pass);
}

TEST_CASE("report serialization") {
  Report r;
  r.suite = "demo";
  r.checks = {upper_bound("z.last", "identity z", 1.0, 0.5), upper_bound("a.first", "identity a", NAN, 1.0)};
  r.sort();
  CHECK(r.checks.front().id == "a.first");
  CHECK(r.fail_count() == 2);
  std::ostringstream js;
  write_json(js, r);
  const auto j = nlohmann::json::parse(js.str());
  CHECK(j["suite"] == "demo");
  CHECK(j["pass_count"] == 0);
  CHECK(j["fail_count"] == 2);
  CHECK(j["checks"][0]["measured"].is_null());
  CHECK(j["checks"][1]["paper_ref"] == "identity z");
  std::ostringstream cs;
  write_csv(cs, r);
  CHECK(cs.str().rfind("id,paper_ref,measured,tolerance,pass\n", 0) == 0);
}

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 7);
  CHECK_THROWS_AS(suite_groups("nope"), std::invalid_argument);
  const Report r = run_suite("translation", Config{});
  CHECK(r.fail_count() == 0);
  for (const auto& c : r.checks) CHECK_FALSE(c.paper_ref.empty());
  CHECK_THROWS(run_group("translation", "nope", Config{}));
}
