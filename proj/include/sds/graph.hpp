#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sds {

using Vertex = int;
/// Sorted, duplicate-free list of vertices. Every set-valued result in the
/// library uses this representation.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u;
  Vertex v;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are stored normalized (u < v) and
/// sorted; adjacency lists are sorted ascending.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws InvalidGraphError on self-loops, parallel edges or indices
  /// outside 0..n-1.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int num_vertices() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  /// Position of {u,v} in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

  bool contains(Vertex v) const noexcept { return v >= 0 && v < num_vertices(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices() == b.num_vertices() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

/// Vertex-deleted subgraph together with the index maps between the two
/// vertex numberings. Surviving vertices keep their relative order.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;    // new index -> old index
  std::vector<Vertex> from_parent;  // old index -> new index, -1 if deleted
};

InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> s);
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
/// Same vertex set, every edge with both endpoints in `s` removed.
Graph delete_edges_within(const Graph& g, std::span<const Vertex> s);

/// Component id per vertex, numbered by smallest member.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);
bool is_connected(const Graph& g);

/// Relabels vertex v to perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

/// Sorts and deduplicates; throws std::out_of_range for vertices outside g.
VertexSet normalize_set(const Graph& g, std::vector<Vertex> s);
std::vector<char> membership(int n, std::span<const Vertex> s);

enum class GraphFormat { dimacs, edgelist };

/// DIMACS: "c" comments, one "p edge n m" line, "e u v" 1-based edges.
/// Edge list: 0-based "u v" lines, '#' comments, n = max index + 1.
Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph(const std::string& text, GraphFormat format);
/// Chooses dimacs when the first non-blank, non-comment line starts with
/// 'p' or 'e', edgelist otherwise.
GraphFormat detect_format(const std::string& text);
void write_graph(std::ostream& out, const Graph& g, GraphFormat format);
std::string to_string(const Graph& g, GraphFormat format);

}  // namespace sds
