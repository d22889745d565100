#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dompoly/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dompoly");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = dompoly::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string kCatalogs = std::string(DOMPOLY_DATA_DIR) + "/catalogs/";

}  // namespace

TEST_CASE("poly") {
  auto r = run({"poly", "--graph6", "A_"});
  CHECK(r.code == 0);
  CHECK(r.out == "2x + x^2\n");

  r = run({"poly", "--family", "friendship:2", "--method", "all"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: AGREE") != std::string::npos);
  CHECK(r.out.find("brute: x + 8x^2 + 10x^3 + 5x^4 + x^5") != std::string::npos);

  r = run({"poly", "--family", "book:3"});
  CHECK(r.out == "x^2 + 12x^3 + 43x^4 + 50x^5 + 28x^6 + 8x^7 + x^8\n");

  r = run({"poly", "--family", "friendship:1", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["paths"]["closed"]["coefficients"] == nlohmann::json({"0", "3", "3", "1"}));

  r = run({"poly", "--coeffs", "0,2,1", "--format", "csv"});
  CHECK(r.out == "input,method,power,coefficient\n0,2,1,given,0,0\n0,2,1,given,1,2\n0,2,1,given,2,1\n");

  r = run({"poly", "--graph6-file", kCatalogs + "order3.g6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("order3:1:\n  x^3\n") != std::string::npos);
}

TEST_CASE("roots") {
  auto r = run({"roots", "--family", "friendship:4", "--real-only"});
  CHECK(r.code == 0);
  CHECK(r.out.find("real roots: 3") != std::string::npos);
  CHECK(r.out.find("  -1.683727169  in [") != std::string::npos);
  CHECK(r.out.find("  -0.2316175850  in [") != std::string::npos);
  CHECK(r.out.find("  0  exact") != std::string::npos);

  r = run({"roots", "--coeffs", "0,2,1"});
  CHECK(r.out.find("integer roots: -2 0") != std::string::npos);

  r = run({"roots", "--family", "friendship:3", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["roots"]["complex_roots"].size() == 6);
  CHECK(j["roots"]["precision_bits"] == 256);
  CHECK(j["roots"]["digits"] == 17);

  r = run({"roots", "--family", "friendship:2", "--format", "csv"});
  CHECK(r.out.rfind("re,im,residual\n0,0,0\n", 0) == 0);

  r = run({"roots", "--family", "friendship:2", "--precision", "128"});
  CHECK(r.code == 0);
}

TEST_CASE("determinism") {
  const auto a = run({"roots", "--family", "book:6"});
  const auto b = run({"roots", "--family", "book:6"});
  CHECK(a.out == b.out);
  const auto c = run({"limits", "--family", "friendship", "--n-max", "6"});
  const auto d = run({"limits", "--family", "friendship", "--n-max", "6"});
  CHECK(c.out == d.out);
}

TEST_CASE("limits") {
  const auto dir = std::filesystem::temp_directory_path() / "dompoly-cli-test";
  std::filesystem::remove_all(dir);
  auto r = run({"limits", "--family", "friendship", "--n-max", "8", "--export", "csv", "--output-dir", dir.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("n  max|z|") != std::string::npos);
  CHECK(r.out.find("isolated limit points: 0") != std::string::npos);
  std::ifstream scatter(dir / "friendship_roots.csv");
  std::string line;
  std::size_t rows = 0;
  std::getline(scatter, line);
  CHECK(line == "re,im,residual,n");
  while (std::getline(scatter, line)) ++rows;
  CHECK(rows == 8 * 9 + 8);  // sum of 2n + 1 for n = 1..8
  CHECK(std::filesystem::exists(dir / "friendship_curve.csv"));

  r = run({"limits", "--family", "book:4", "--export", "json", "--output-dir", dir.string(), "--grid", "-3,1,-2,2,40,40"});
  CHECK(r.code == 0);
  std::ifstream curve(dir / "book_curve.json");
  const auto j = nlohmann::json::parse(curve);
  CHECK(j["pieces"].size() >= 3);
}

TEST_CASE("equiv") {
  auto r = run({"equiv", "--catalog", kCatalogs + "order4.g6"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("11 graphs, 10 classes, 2 not D-unique\n", 0) == 0);
  r = run({"equiv", "--catalog", kCatalogs + "order4.g6", "--catalog", kCatalogs + "order5.g6", "--format", "csv"});
  CHECK(r.out == "order,graphs,classes,non_unique\n4,11,10,2\n5,34,27,13\n");
  r = run({"equiv", "--catalog", kCatalogs + "order4.g6", "--graph6", "Cl"});
  CHECK(r.out.find("D-unique within") != std::string::npos);
  r = run({"equiv", "--catalog", kCatalogs + "order4.g6", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["classes"].size() == 10);
}

TEST_CASE("errors and exit codes") {
  CHECK(run({"poly", "--graph6", "A"}).code == 2);
  CHECK(run({"poly", "--graph6", ""}).code == 2);
  CHECK(run({"poly", "--family", "bogus:3"}).code == 2);
  CHECK(run({"poly", "--family", "friendship"}).code == 2);
  CHECK(run({"poly", "--coeffs", "1,x"}).code == 2);
  CHECK(run({"poly"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"nosuch"}).code == 2);
  CHECK(run({"poly", "--family", "friendship:2", "--format", "xml"}).code == 2);
  CHECK(run({"poly", "--family", "friendship:2", "--method", "magic"}).code == 2);
  CHECK(run({"poly", "--family", "friendship:30", "--method", "brute"}).code == 3);
  CHECK(run({"poly", "--family", "friendship:30", "--method", "all"}).code == 3);
  CHECK(run({"poly", "--family", "friendship:0"}).code == 2);
  CHECK(run({"roots", "--coeffs", "5"}).code == 2);
  CHECK(run({"roots", "--coeffs", ""}).code == 2);
  CHECK(run({"roots", "--family", "friendship:2", "--precision", "20"}).code == 2);
  CHECK(run({"limits", "--family", "cycle"}).code == 2);
  CHECK(run({"limits", "--family", "friendship", "--grid", "1,2,3"}).code == 2);
  CHECK(run({"equiv"}).code == 2);
  CHECK(run({"equiv", "--catalog", "/nonexistent/file.g6"}).code == 5);
  const auto e = run({"poly", "--graph6", "A"});
  CHECK(e.err.find("byte") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}
