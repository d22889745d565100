#include "dompoly/graph6.hpp"

#include <fstream>
#include <sstream>

#include "dompoly/error.hpp"

namespace dompoly {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view line, std::size_t pos) {
  if (pos >= line.size()) throw ParseError("graph6: truncated input", pos);
  const int c = static_cast<unsigned char>(line[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", pos);
  return c - 63;
}

void append_order(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::size_t pos = 0;
  if (line.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= line.size()) throw ParseError("graph6: empty line", pos);

  std::size_t n = 0;
  if (sextet(line, pos) != 63) {
    n = static_cast<std::size_t>(sextet(line, pos));
    pos += 1;
  } else if (pos + 1 < line.size() && sextet(line, pos + 1) != 63) {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(line, pos + i));
    pos += 4;
  } else {
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(line, pos + i));
    pos += 8;
  }
  if (n > kMaxOrder) throw ParseError("graph6: order " + std::to_string(n) + " exceeds cap", pos);

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - pos < bytes) throw ParseError("graph6: truncated adjacency data", line.size());
  if (line.size() - pos > bytes) throw ParseError("graph6: trailing bytes after adjacency data", pos + bytes);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int word = sextet(line, pos + k / 6);
      if (word & (1 << (5 - k % 6))) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    const int word = sextet(line, pos + k / 6);
    if (word & ((1 << (6 - k % 6)) - 1)) throw ParseError("graph6: non-zero padding bits", pos + k / 6);
  }
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  append_order(out, n);
  int word = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + 63));
        word = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + 63));
  return out;
}

std::vector<CatalogEntry> parse_graph6_catalog(std::string_view text, std::string_view stem) {
  std::vector<CatalogEntry> out;
  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      try {
        out.push_back({std::string(stem) + ":" + std::to_string(line_no), parse_graph6(line)});
      } catch (const ParseError& e) {
        throw ParseError(std::string(stem) + " line " + std::to_string(line_no) + ": " + e.what(), e.offset());
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::vector<CatalogEntry> read_graph6_catalog(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open catalog " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph6_catalog(buf.str(), path.stem().string());
}

}  // namespace dompoly
