#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "laurentbr/basefield.hpp"
#include "laurentbr/commands.hpp"

using namespace laurentbr;
using nlohmann::json;

namespace {

Report run_cmd(const std::string& name, std::map<std::string, std::string> args = {},
               std::map<std::string, std::string> settings = {}) {
  Command c;
  c.name = name;
  c.args = std::move(args);
  for (const auto& [k, v] : settings) c.config.set(k, v);
  return run(c);
}

json without_duration(json j) {
  j.erase("duration_ms");
  return j;
}

const Claim* find_claim(const Report& r, const std::string& name) {
  for (const auto& c : r.claims)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("valuation command") {
  const auto r = run_cmd("valuation", {{"expr", "a2^-1 + a1"}});
  CHECK(r.exit_code == 0);
  CHECK(r.results["valuation"] == "(0,-1)");
  const auto bad = run_cmd("valuation", {{"expr", "a1 +* 2"}});
  CHECK(bad.exit_code == 2);
  CHECK(bad.error.find("position 4") != std::string::npos);
  CHECK(run_cmd("valuation", {{"expr", "0"}}).exit_code == 2);
  CHECK(run_cmd("valuation", {}).exit_code == 2);
}

TEST_CASE("as-reduce command") {
  auto r = run_cmd("as-reduce", {{"expr", "a2^-2 + a1"}});
  CHECK(r.exit_code == 0);
  CHECK(r.results["canonical"] == "a2^-1");
  r = run_cmd("as-reduce", {{"expr", "a2^-2 + a2^-1"}});
  CHECK(r.results["in_image"] == true);
}

TEST_CASE("division-check command") {
  auto r = run_cmd("division-check", {{"class", "[a2^-1, a1) * [a3^-1, a2)"}}, {{"n", "3"}, {"p", "2"}});
  CHECK(r.exit_code == 0);
  CHECK(r.results["verdict"] == "Division");
  CHECK(r.results["linkage"] == "not linked");
  REQUIRE(find_claim(r, "verdict"));
  CHECK(find_claim(r, "verdict")->source == "computed");

  r = run_cmd("division-check", {{"class", "[a2^-1, a1)"}, {"expect", "not-division"}});
  CHECK(r.exit_code == 1);
  r = run_cmd("division-check", {{"class", "[a2^-1, a1)"}, {"expect", "division"}});
  CHECK(r.exit_code == 0);
  r = run_cmd("division-check", {{"class", "[a2^-1, 1 + a1)"}});
  CHECK(r.results["verdict"] == "Unknown");
  CHECK(r.exit_code == 1);
  r = run_cmd("division-check", {{"class", "[a2^-1, 1 + a1)"}, {"expect", "unknown"}});
  CHECK(r.exit_code == 0);
  CHECK(run_cmd("division-check", {{"class", "[a2^-1, a1)"}, {"expect", "maybe"}}).exit_code == 2);
  CHECK(run_cmd("division-check", {{"class", "[a9, a1)"}}).exit_code == 2);
}

TEST_CASE("symlen command") {
  auto r = run_cmd("symlen", {}, {{"base", "F2(t)"}, {"p", "2"}, {"n", "2"}});
  CHECK(r.exit_code == 0);
  CHECK(r.results["claimed"] == 2);
  CHECK(r.results["witness"] == "[t^-1, a1) * [t^-3, a2)");
  REQUIRE(find_claim(r, "upper_bound"));
  CHECK(find_claim(r, "upper_bound")->source == "cited-result");
  r = run_cmd("symlen", {}, {{"n", "3"}});
  CHECK(r.exit_code == 0);
  CHECK(r.results["claimed"] == 2);
  CHECK(run_cmd("symlen", {}, {{"base", "F2"}, {"p", "3"}}).exit_code == 2);
}

TEST_CASE("linkage commands") {
  auto r = run_cmd("linkage-bilinear", {}, {{"n", "3"}});
  CHECK(r.exit_code == 0);
  CHECK(r.results["intersection_dim"] == 2);
  CHECK(r.results["threshold"] == 3);
  CHECK(r.results["summary"] == "dim 2 vs threshold 3: not linked");

  r = run_cmd("linkage-quad", {}, {{"n", "2"}});
  CHECK(r.exit_code == 0);
  CHECK(r.results["anisotropy"] == "Anisotropic");
  r = run_cmd("linkage-quad", {{"search", "1"}}, {{"n", "2"}, {"budget", "5000"}});
  CHECK(r.results["search"] == "none found (budget 5000)");

  CHECK(run_cmd("linkage-quad", {}, {{"base", "F3"}}).exit_code == 2);
  CHECK(run_cmd("linkage-bilinear", {}, {{"base", "F4:w^2+w+1"}}).exit_code == 2);
}

TEST_CASE("common-factor command") {
  auto r = run_cmd("common-factor", {{"phi", "<<a1, a2>>"}, {"psi", "<<a2, a3>>"}});
  CHECK(r.exit_code == 0);
  CHECK(r.results["common_factor"] == "<<a2>>");
  r = run_cmd("common-factor", {{"phi", "<<a1, a1>>"}, {"psi", "<<a2, a3>>"}});
  CHECK(r.results["common_factor"] == "anisotropy violated");
  CHECK(run_cmd("common-factor", {{"phi", "<<a1 + a2, a1>>"}, {"psi", "<<a2, a3>>"}}).exit_code == 2);
}

TEST_CASE("unknown command and bad configuration are input errors") {
  CHECK(run_cmd("frobnicate").exit_code == 2);
  CHECK(run_cmd("valuation", {{"expr", "a1"}}, {{"base", "F6"}}).exit_code == 2);
  CHECK_THROWS_AS(run_cmd("valuation", {{"expr", "a1"}}, {{"budget", "0x"}}), Error);
  CHECK(run_cmd("valuation", {{"expr", "a1"}}, {{"budget", "0"}}).exit_code == 2);
  CHECK(run_cmd("valuation", {{"expr", "a1"}}, {{"window", "3..1"}}).exit_code == 2);
  CHECK_THROWS_AS(RunConfig().set("colour", "blue"), Error);
}

TEST_CASE("structured reports are deterministic modulo duration") {
  const std::vector<std::pair<std::string, std::map<std::string, std::string>>> cmds{
      {"valuation", {{"expr", "a2^-1 + a1"}}},
      {"division-check", {{"class", "[a2^-1, a1)"}}},
      {"symlen", {}},
      {"linkage-quad", {}},
      {"linkage-bilinear", {}},
      {"common-factor", {{"phi", "<<a1, a2>>"}, {"psi", "<<a2, a3>>"}}}};
  for (const auto& [name, args] : cmds) {
    const auto a = run_cmd(name, args), b = run_cmd(name, args);
    CHECK(without_duration(a.to_json()).dump() == without_duration(b.to_json()).dump());
    const auto text = a.render(OutputFormat::Json);
    CHECK(json::parse(text)["command"] == name);
  }
}

TEST_CASE("text rendering") {
  const auto r = run_cmd("division-check", {{"class", "[a2^-1, a1)"}});
  const auto text = r.render(OutputFormat::Text);
  CHECK(text.find("verdict: Division") != std::string::npos);
  CHECK(text.find("[computed]") != std::string::npos);
  CHECK(text.find("(0,-1)") != std::string::npos);
}

TEST_CASE("config file and environment") {
  const auto path = std::filesystem::temp_directory_path() / "laurentbr_test_config.txt";
  {
    std::ofstream out(path);
    out << "# defaults for tests\nbase = F3\nn=3\nbudget=77  # trailing comment\nformat=json\nwindow=-1..1\n";
  }
  const auto c = RunConfig::from_file(path.string());
  CHECK(c.base == "F3");
  CHECK(c.n == 3);
  CHECK(c.budget == 77);
  CHECK(c.format == OutputFormat::Json);
  REQUIRE(c.window.has_value());
  CHECK(*c.window == "-1..1");

  ::setenv("LAURENTBR_CONFIG", path.string().c_str(), 1);
  CHECK(RunConfig::from_environment().base == "F3");
  ::unsetenv("LAURENTBR_CONFIG");
  CHECK(RunConfig::from_environment().base.empty());

  {
    std::ofstream out(path);
    out << "base F3\n";
  }
  CHECK_THROWS_AS(RunConfig::from_file(path.string()), Error);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(RunConfig::from_file(path.string()), Error);
}

TEST_CASE("report-all bundle") {
  RunConfig c;
  c.n = 3;
  auto r = report_all(c);
  CHECK(r.exit_code == 0);
  for (const auto& [name, item] : r.results.items()) CHECK_MESSAGE(item["pass"] == true, name);
  CHECK(r.results.contains("not-linked-division-check"));

  c.base = "F3";
  r = report_all(c);
  CHECK(r.exit_code == 0);
  CHECK(r.results.contains("chain-witness n=3"));
  CHECK_FALSE(r.results.contains("quad-anisotropy n=2"));
  for (const auto& [name, item] : r.results.items()) CHECK_MESSAGE(item["pass"] == true, name);

  c.base = "G2";
  CHECK(report_all(c).exit_code == 2);
}
