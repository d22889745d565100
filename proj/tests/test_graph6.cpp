#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "dompoly/error.hpp"
#include "dompoly/graph6.hpp"

using namespace dompoly;

namespace {
const std::filesystem::path kCatalogs = std::filesystem::path(DOMPOLY_DATA_DIR) / "catalogs";
}

TEST_CASE("small fixed encodings") {
  CHECK(parse_graph6("A_") == complete_graph(2));
  CHECK(parse_graph6("A?") == Graph(2));
  CHECK(parse_graph6("B?") == Graph(3));
  CHECK(parse_graph6("Bw") == complete_graph(3));
  CHECK(parse_graph6("?") == Graph());
  CHECK(parse_graph6(">>graph6<<A_") == complete_graph(2));
  CHECK(write_graph6(complete_graph(2)) == "A_");
  CHECK(write_graph6(complete_graph(4)) == "C~");
}

TEST_CASE("long order header") {
  const Graph g = path_graph(70);
  const auto text = write_graph6(g);
  CHECK(text[0] == '~');
  CHECK(parse_graph6(text) == g);
}

TEST_CASE("malformed input reports the byte offset") {
  auto offset_of = [](std::string_view s) {
    try {
      parse_graph6(s);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return std::size_t{9999};
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("A") == 1);      // truncated adjacency
  CHECK(offset_of("A`") == 1);     // padding bit set
  CHECK(offset_of("A_?") == 2);    // trailing byte
  CHECK(offset_of("C\x7f") == 1);  // out of range
  CHECK(offset_of(" A_") == 0);
}

TEST_CASE("round trip over the bundled catalogs") {
  // The catalog lines were written by an independent graph6 encoder.
  std::size_t lines = 0;
  for (int order = 1; order <= 6; ++order) {
    const auto path = kCatalogs / ("order" + std::to_string(order) + ".g6");
    const auto entries = read_graph6_catalog(path);
    std::ifstream in(path);
    std::string line;
    std::size_t k = 0;
    while (std::getline(in, line)) {
      REQUIRE(k < entries.size());
      CHECK(entries[k].graph.order() == static_cast<std::size_t>(order));
      CHECK(write_graph6(entries[k].graph) == line);
      ++k;
      ++lines;
    }
    CHECK(k == entries.size());
  }
  CHECK(lines == 208);
}

TEST_CASE("catalog parsing") {
  const auto entries = parse_graph6_catalog("A_\n\nB?\r\n", "demo");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].id == "demo:1");
  CHECK(entries[1].id == "demo:3");
  CHECK(entries[1].graph == Graph(3));
  CHECK_THROWS_AS(parse_graph6_catalog("A_\nA\n", "demo"), ParseError);
  CHECK_THROWS_AS(read_graph6_catalog("/nonexistent/file.g6"), Error);
}
