#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace dompoly {

using Vertex = std::size_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<Vertex, Vertex>;

/// Orders up to this fit a single machine word per closed neighbourhood;
/// enumeration code requires it.
inline constexpr std::size_t kFastPathCap = 64;
/// Hard cap of the general representation, used by closed-form work on
/// large family members.
inline constexpr std::size_t kMaxOrder = 4096;

/// Immutable simple graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph nK_1.
  explicit Graph(std::size_t n);
  /// Throws InvalidParameter on loops or out-of-range endpoints; duplicate
  /// edges are merged.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edge_count_; }
  bool empty() const noexcept { return adj_.empty(); }

  bool adjacent(Vertex u, Vertex v) const { return adj_.at(u).test(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }
  const VertexSet& closed_neighborhood(Vertex v) const { return closed_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).count(); }

  /// Closed neighbourhoods as words; requires order() <= kFastPathCap.
  std::vector<std::uint64_t> closed_masks() const;
  /// Non-increasing.
  std::vector<std::size_t> degree_sequence() const;
  /// Sorted (u < v) edge list.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<VertexSet> adj_;
  std::vector<VertexSet> closed_;
  std::size_t edge_count_ = 0;
};

enum class FamilyKind { Friendship, Book, BookContracted, Complete, Empty, Cycle, Path, Star };

struct FamilySpec {
  FamilyKind kind;
  std::size_t parameter;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string_view family_name(FamilyKind kind);
/// "friendship:3", "book:2", "book-contracted:4", ...
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);
/// Vertex count of the realized graph, without building it.
std::size_t family_order(const FamilySpec& spec);

/// Friendship hub is vertex 0 and triangle i is {0, 2i+1, 2i+2}.  Book
/// common edge is {0, 1}; page i is the 4-cycle 0, 2i+2, 2i+3, 1.
/// star:n is K_{1,n} with centre 0.  cycle:n requires n >= 3.
Graph build_family(const FamilySpec& spec);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

/// Disjoint union; h is relabeled by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
/// Disjoint union plus all edges between the two vertex sets.
Graph join(const Graph& g, const Graph& h);
/// Copy i of h occupies labels g.order() + i*h.order() ... and is joined
/// to vertex i of g.
Graph corona(const Graph& g, const Graph& h);

/// Induced subgraph on `keep`, labels compacted in increasing order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);
Graph delete_vertex(const Graph& g, Vertex u);
Graph delete_closed_neighborhood(const Graph& g, Vertex u);
/// N(u) made a clique, then u deleted.
Graph contract(const Graph& g, Vertex u);
/// Removes every edge between two neighbours of u; u stays.
Graph odot(const Graph& g, Vertex u);

bool is_dominating(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);

VertexSet make_vertex_set(std::size_t n, std::initializer_list<Vertex> members);

}  // namespace dompoly
