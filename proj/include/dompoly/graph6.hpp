#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dompoly/graph.hpp"

namespace dompoly {

/// Parses one graph6 line (no trailing newline; an optional ">>graph6<<"
/// prefix is accepted).  Throws ParseError with the offending byte offset
/// on bad characters, truncated data or non-zero padding bits.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

struct CatalogEntry {
  std::string id;
  Graph graph;
};

/// One graph per line; blank lines skipped.  Ids are "<stem>:<line>".
std::vector<CatalogEntry> read_graph6_catalog(const std::filesystem::path& path);
std::vector<CatalogEntry> parse_graph6_catalog(std::string_view text, std::string_view stem);

}  // namespace dompoly
