#include "dompoly/graph.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>

#include "dompoly/error.hpp"

namespace dompoly {

namespace {

void check_order(std::size_t n, const char* what) {
  if (n > kMaxOrder) {
    throw CapExceeded(std::string(what) + ": order " + std::to_string(n) +
                      " exceeds representation cap " + std::to_string(kMaxOrder));
  }
}

void check_vertex(const Graph& g, Vertex u, const char* what) {
  if (u >= g.order()) {
    throw InvalidParameter(std::string(what) + ": vertex " + std::to_string(u) +
                           " out of range for order " + std::to_string(g.order()));
  }
}

constexpr std::array<std::pair<FamilyKind, std::string_view>, 8> kFamilyNames{{
    {FamilyKind::Friendship, "friendship"},
    {FamilyKind::Book, "book"},
    {FamilyKind::BookContracted, "book-contracted"},
    {FamilyKind::Complete, "complete"},
    {FamilyKind::Empty, "empty"},
    {FamilyKind::Cycle, "cycle"},
    {FamilyKind::Path, "path"},
    {FamilyKind::Star, "star"},
}};

}  // namespace

Graph::Graph(std::size_t n) {
  check_order(n, "Graph");
  adj_.assign(n, VertexSet(n));
  closed_.assign(n, VertexSet(n));
  for (Vertex v = 0; v < n; ++v) closed_[v].set(v);
}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw InvalidParameter("Graph: edge endpoint out of range");
    if (u == v) throw InvalidParameter("Graph: loop at vertex " + std::to_string(u));
    if (!adj_[u].test(v)) ++edge_count_;
    adj_[u].set(v);
    adj_[v].set(u);
    closed_[u].set(v);
    closed_[v].set(u);
  }
}

std::vector<std::uint64_t> Graph::closed_masks() const {
  if (order() > kFastPathCap) {
    throw CapExceeded("closed_masks: order " + std::to_string(order()) + " exceeds word cap " +
                      std::to_string(kFastPathCap));
  }
  std::vector<std::uint64_t> masks(order(), 0);
  for (Vertex v = 0; v < order(); ++v) {
    for (auto w = closed_[v].find_first(); w != VertexSet::npos; w = closed_[v].find_next(w)) {
      masks[v] |= std::uint64_t{1} << w;
    }
  }
  return masks;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> seq;
  seq.reserve(order());
  for (const auto& row : adj_) seq.push_back(row.count());
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (auto v = adj_[u].find_next(u); v != VertexSet::npos; v = adj_[u].find_next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::string_view family_name(FamilyKind kind) {
  for (auto [k, name] : kFamilyNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("family spec must look like name:n, got '" + std::string(text) + "'", 0);
  }
  const auto name = text.substr(0, colon);
  const auto number = text.substr(colon + 1);
  const auto it = std::find_if(kFamilyNames.begin(), kFamilyNames.end(),
                               [&](const auto& entry) { return entry.second == name; });
  if (it == kFamilyNames.end()) {
    throw ParseError("unknown graph family '" + std::string(name) + "'", 0);
  }
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), n);
  if (ec != std::errc() || ptr != number.data() + number.size() || number.empty()) {
    throw ParseError("family parameter is not a non-negative integer: '" + std::string(number) + "'",
                     colon + 1);
  }
  return {it->first, n};
}

std::string to_string(const FamilySpec& spec) {
  return std::string(family_name(spec.kind)) + ":" + std::to_string(spec.parameter);
}

std::size_t family_order(const FamilySpec& spec) {
  const auto n = spec.parameter;
  switch (spec.kind) {
    case FamilyKind::Friendship: return 2 * n + 1;
    case FamilyKind::Book: return 2 * n + 2;
    case FamilyKind::BookContracted: return 2 * n + 1;
    case FamilyKind::Star: return n + 1;
    case FamilyKind::Complete:
    case FamilyKind::Empty:
    case FamilyKind::Cycle:
    case FamilyKind::Path: return n;
  }
  return 0;
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidParameter("cycle_graph: a simple cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph build_family(const FamilySpec& spec) {
  const auto n = spec.parameter;
  if (n == 0) {
    throw InvalidParameter("build_family: parameter must be positive for " + to_string(spec));
  }
  if (family_order(spec) > kMaxOrder) {
    throw InvalidParameter("build_family: " + to_string(spec) + " exceeds the representation cap");
  }
  switch (spec.kind) {
    case FamilyKind::Friendship: {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < n; ++i) {
        const Vertex a = 2 * i + 1, b = 2 * i + 2;
        edges.insert(edges.end(), {{0, a}, {0, b}, {a, b}});
      }
      return Graph(2 * n + 1, edges);
    }
    case FamilyKind::Book: {
      std::vector<Edge> edges{{0, 1}};
      for (std::size_t i = 0; i < n; ++i) {
        const Vertex a = 2 * i + 2, b = 2 * i + 3;
        edges.insert(edges.end(), {{0, a}, {a, b}, {b, 1}});
      }
      return Graph(2 * n + 2, edges);
    }
    case FamilyKind::BookContracted:
      return contract(build_family({FamilyKind::Book, n}), 1);
    case FamilyKind::Complete: return complete_graph(n);
    case FamilyKind::Empty: return Graph(n);
    case FamilyKind::Cycle:
      if (n < 3) throw InvalidParameter("build_family: cycle needs parameter >= 3");
      return cycle_graph(n);
    case FamilyKind::Path: return path_graph(n);
    case FamilyKind::Star: return star_graph(n);
  }
  throw InvalidParameter("build_family: unknown family");
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  check_order(g.order() + h.order(), "union");
  auto edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
  return Graph(g.order() + h.order(), edges);
}

Graph join(const Graph& g, const Graph& h) {
  check_order(g.order() + h.order(), "join");
  auto edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < h.order(); ++v) edges.emplace_back(u, g.order() + v);
  return Graph(g.order() + h.order(), edges);
}

Graph corona(const Graph& g, const Graph& h) {
  if (g.empty()) throw InvalidParameter("corona: base graph must be nonempty");
  const std::size_t n = g.order(), m = h.order();
  check_order(n * (1 + m), "corona");
  auto edges = g.edges();
  const auto inner = h.edges();
  for (Vertex i = 0; i < n; ++i) {
    const Vertex base = n + i * m;
    for (auto [u, v] : inner) edges.emplace_back(base + u, base + v);
    for (Vertex w = 0; w < m; ++w) edges.emplace_back(i, base + w);
  }
  return Graph(n * (1 + m), edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.size() != g.order()) throw InvalidParameter("induced_subgraph: vertex set size mismatch");
  std::vector<Vertex> relabel(g.order(), VertexSet::npos);
  std::size_t next = 0;
  for (auto v = keep.find_first(); v != VertexSet::npos; v = keep.find_next(v)) relabel[v] = next++;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (keep.test(u) && keep.test(v)) edges.emplace_back(relabel[u], relabel[v]);
  }
  return Graph(next, edges);
}

Graph delete_vertex(const Graph& g, Vertex u) {
  check_vertex(g, u, "delete_vertex");
  VertexSet keep(g.order());
  keep.set();
  keep.reset(u);
  return induced_subgraph(g, keep);
}

Graph delete_closed_neighborhood(const Graph& g, Vertex u) {
  check_vertex(g, u, "delete_closed_neighborhood");
  return induced_subgraph(g, ~g.closed_neighborhood(u));
}

Graph contract(const Graph& g, Vertex u) {
  check_vertex(g, u, "contract");
  auto edges = g.edges();
  const auto& nb = g.neighbors(u);
  for (auto a = nb.find_first(); a != VertexSet::npos; a = nb.find_next(a))
    for (auto b = nb.find_next(a); b != VertexSet::npos; b = nb.find_next(b)) edges.emplace_back(a, b);
  return delete_vertex(Graph(g.order(), edges), u);
}

Graph odot(const Graph& g, Vertex u) {
  check_vertex(g, u, "odot");
  const auto& nb = g.neighbors(u);
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    if (!(nb.test(a) && nb.test(b))) edges.emplace_back(a, b);
  }
  return Graph(g.order(), edges);
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  if (s.size() != g.order()) throw InvalidParameter("is_dominating: vertex set size mismatch");
  VertexSet covered(g.order());
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) covered |= g.closed_neighborhood(v);
  return covered.all();
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  VertexSet seen(g.order());
  std::vector<Vertex> stack{0};
  seen.set(0);
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    const auto& nb = g.neighbors(v);
    for (auto w = nb.find_first(); w != VertexSet::npos; w = nb.find_next(w)) {
      if (!seen.test(w)) {
        seen.set(w);
        stack.push_back(w);
      }
    }
  }
  return seen.all();
}

VertexSet make_vertex_set(std::size_t n, std::initializer_list<Vertex> members) {
  VertexSet s(n);
  for (auto v : members) s.set(v);
  return s;
}

}  // namespace dompoly
