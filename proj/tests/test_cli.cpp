#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int exit_code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CHZ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json run_json(const std::string& args, int expected_exit = 0) {
  const Run r = run(args + " --format json");
  REQUIRE(r.exit_code == expected_exit);
  return json::parse(r.out);
}

// "key = value" lines and "key,value" rows, without their headers.
std::map<std::string, std::string> text_pairs(const std::string& out) {
  std::map<std::string, std::string> m;
  std::istringstream in(out);
  for (std::string line; std::getline(in, line);) {
    const auto eq = line.find(" = ");
    if (eq != std::string::npos) m[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return m;
}

std::map<std::string, std::string> csv_pairs(const std::string& out) {
  std::map<std::string, std::string> m;
  std::istringstream in(out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "key,value");
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    m[line.substr(0, comma)] = line.substr(comma + 1);
  }
  return m;
}

void leaves(const json& node, const std::string& path, std::map<std::string, std::string>& out) {
  if (node.is_object()) {
    for (const auto& [k, v] : node.items()) leaves(v, path.empty() ? k : path + "." + k, out);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) leaves(node[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out[path] = node.is_string() ? node.get<std::string>() : node.dump();
  }
}

}  // namespace

TEST_CASE("documented examples") {
  const json h = run_json("hankel-det --L 0 --eta 0 --n 2 --verify");
  CHECK(h["results"]["det"] == "1/135");
  CHECK(h["results"]["closed"] == "1/135");
  CHECK(h["results"]["moments"] == "1/135");
  CHECK(h["verification"]["routes_equal"] == true);

  const json c = run_json("classify --L -7/4 --eta 3/2");
  CHECK(c["results"]["pair_count"] == 1);
  CHECK(c["results"]["all_real"] == false);

  const json z = run_json("zeta --L 0 --eta 0 --kmax 4");
  CHECK(z["results"]["zeta"] == json{{"2", "1/3"}, {"3", "0"}, {"4", "1/45"}});
}

TEST_CASE("records carry every field") {
  for (const char* args : {"zeta --L 1/3 --eta 1/2 --kmax 6", "rayleigh-det --nu 5/2 --ell 3 --n 2 --method dj --verify",
                           "bernoulli-det --ell 1 --n 3", "genocchi-det --ell 0 --n 4", "classify --L -15/4 --eta 3/2 --nmax 9",
                           "dd-product --L 0 --eta 0 --n 1", "parity-split --nu 1 --n 2", "hurwitz --nu -5/2",
                           "rayleigh --nu 1 --k 3", "bernoulli --n 6", "genocchi --n 7",
                           "phi --L 0 --eta 0 --re 3.14 --im 0.5", "count-zeros --L 0 --eta 0 --re-min 2.5 --re-max 3.5 --im-min -0.5 --im-max 0.5"}) {
    const json j = run_json(args);
    for (const char* key : {"command", "parameters", "results", "verification"}) CHECK_MESSAGE(j.contains(key), args);
  }
  CHECK(run_json("rayleigh --nu 1 --k 2")["results"]["sigma"] == "1/192");
  CHECK(run_json("genocchi-det --ell 1 --n 1")["results"]["direct"] == "1/24");
  CHECK(run_json("bernoulli-det --ell 0 --n 6")["verification"]["reciprocal_integer"] == true);
  CHECK(run_json("dd-product --L 0 --eta 0 --n 1")["results"]["dd_product"] == "1/405");
  CHECK(run_json("hurwitz --nu -3/2")["results"]["imaginary_pair"] == true);
  CHECK(run_json("hurwitz --nu 1/2")["results"]["imaginary_pair"] == "n/a");
  CHECK(run_json("count-zeros --L -1.75 --eta 1.5 --re-min -1 --re-max 1 --im-min 0.05 --im-max 1")["results"]["zeros"] == 1);
}

TEST_CASE("find-zeros output") {
  const json j = run_json("find-zeros --L -2.75 --eta 1.5");
  CHECK(j["results"]["counts"]["complex_pairs"] == 2);
  CHECK(j["results"]["algebraic_pairs"] == 2);
  CHECK(j["verification"]["pairs_match_classification"] == true);
  int upper = 0;
  for (const auto& z : j["results"]["zeros"]) {
    CHECK(z.contains("re"));
    CHECK(z.contains("im"));
    if (z["kind"] == "complex" && z["im"].get<double>() > 0) ++upper;
  }
  CHECK(upper == 2);

  const json small = run_json("find-zeros --L -2.75 --eta 1.5 --re-min 0 --re-max 1 --im-min 0.1 --im-max 1");
  CHECK(small["results"]["counts"]["complex_pairs"] == 1);
  CHECK_FALSE(small["verification"].contains("pairs_match_classification"));

  const json img = run_json("find-zeros --L -2 --eta 0");
  CHECK(img["results"]["counts"]["imaginary_pairs"] == 1);
}

TEST_CASE("text and csv carry the json payload") {
  for (const char* args : {"hankel-det --L 1/3 --eta 2 --n 3 --verify", "classify --L -11/4 --eta 3/2",
                           "find-zeros --L -1.75 --eta 1.5", "zeta --L -1/2 --eta 1 --kmax 5"}) {
    std::map<std::string, std::string> expected;
    leaves(run_json(args), "", expected);
    const auto text = text_pairs(run(std::string(args) + " --format text").out);
    const auto csv = csv_pairs(run(std::string(args) + " --format csv").out);
    CHECK_MESSAGE(text == expected, args);
    CHECK_MESSAGE(csv == expected, args);
  }
  CHECK(run("zeta --L 0 --eta 0 --kmax 4").out.find("results.zeta.4 = 1/45") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("").exit_code == 1);
  CHECK(run("no-such-command").exit_code == 1);
  CHECK(run("hankel-det --L 0 --eta 0").exit_code == 1);
  CHECK(run("hankel-det --L 0 --eta 0 --n 2 --bogus").exit_code == 1);
  CHECK(run("zeta --L 0.5 --eta 0 --kmax 4").exit_code == 1);
  CHECK(run("classify --L -3/2 --eta 1").exit_code == 1);
  CHECK(run("classify --L -7/4 --eta 3/2 --nmax zero").exit_code == 1);
  CHECK(run("rayleigh-det --nu 1 --ell 4 --n 1 --method closed").exit_code == 1);
  CHECK(run("rayleigh-det --nu 1 --ell 1 --n 1 --method fast").exit_code == 1);
  CHECK(run("zeta --L 0 --eta 0 --kmax 4 --format xml").exit_code == 1);
  CHECK(run("--help").exit_code == 0);
  CHECK(run("verify-all --quick").exit_code == 0);

  // A grid with a deliberately wrong expectation must fail verification.
  std::ifstream in(CHZ_TEST_VERIFY_CONFIG);
  json config = json::parse(in);
  config["full"] = config["quick"];
  config["full"]["classification"]["complex"][0]["pairs"] = 5;
  const auto path = std::filesystem::temp_directory_path() / "chz_cli_bad_grid.json";
  std::ofstream(path) << config.dump();
  const Run bad = run("verify-all --config " + path.string() + " --format json");
  std::filesystem::remove(path);
  CHECK(bad.exit_code == 2);
  const json report = json::parse(bad.out);
  CHECK(report["verification"]["classification"] == false);
  CHECK(report["results"]["families"]["classification"]["status"] == "fail");
}

TEST_CASE("usage errors document the flags") {
  const std::string cmd = std::string(CHZ_CLI_PATH) + " hankel-det --L 0 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  pclose(pipe);
  CHECK(out.find("--eta") != std::string::npos);
  CHECK(out.find("--verify") != std::string::npos);
}
