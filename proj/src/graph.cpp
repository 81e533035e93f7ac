#include "sds/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "sds/errors.hpp"

namespace sds {

Graph::Graph(int n) : adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw InvalidGraphError("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidGraphError("vertex index out of range in edge {" + std::to_string(u) + "," +
                              std::to_string(v) + "}");
    if (u == v) throw InvalidGraphError("self-loop at vertex " + std::to_string(u));
    edges_.push_back({std::min(u, v), std::max(u, v)});
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw InvalidGraphError("parallel edge {" + std::to_string(dup->u) + "," +
                            std::to_string(dup->v) + "}");
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
  Edge e{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != adj_.size())
    throw std::invalid_argument("label count does not match vertex count");
  labels_ = std::move(labels);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  InducedSubgraph out;
  out.from_parent.assign(g.num_vertices(), -1);
  for (Vertex v : normalize_set(g, {keep.begin(), keep.end()})) {
    out.from_parent[v] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (out.from_parent[u] >= 0 && out.from_parent[v] >= 0)
      edges.push_back({out.from_parent[u], out.from_parent[v]});
  out.graph = Graph(static_cast<int>(out.to_parent.size()), edges);
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (Vertex v : out.to_parent) labels.push_back(g.labels()[v]);
    out.graph.set_labels(std::move(labels));
  }
  return out;
}

InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> s) {
  auto removed = membership(g.num_vertices(), normalize_set(g, {s.begin(), s.end()}));
  VertexSet keep;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!removed[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

Graph delete_edges_within(const Graph& g, std::span<const Vertex> s) {
  auto in = membership(g.num_vertices(), normalize_set(g, {s.begin(), s.end()}));
  std::vector<Edge> edges;
  for (auto e : g.edges())
    if (!(in[e.u] && in[e.v])) edges.push_back(e);
  Graph out(g.num_vertices(), edges);
  out.set_labels(g.labels());
  return out;
}

std::vector<int> connected_components(const Graph& g, int* count) {
  const int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<Vertex> stack;
  int c = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbours(v))
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

bool is_connected(const Graph& g) {
  int c = 0;
  connected_components(g, &c);
  return c <= 1;
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.num_vertices())
    throw std::invalid_argument("permutation size mismatch");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.push_back({perm[u], perm[v]});
  return Graph(g.num_vertices(), edges);
}

VertexSet normalize_set(const Graph& g, std::vector<Vertex> s) {
  for (Vertex v : s)
    if (!g.contains(v)) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<char> membership(int n, std::span<const Vertex> s) {
  std::vector<char> in(n, 0);
  for (Vertex v : s) in[v] = 1;
  return in;
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected integer, got '" + std::string(tok) + "'");
  return value;
}

Graph build(long long n, const std::vector<std::pair<Edge, std::size_t>>& edges) {
  std::vector<Edge> list;
  std::vector<std::pair<Edge, std::size_t>> sorted;
  for (auto [e, line] : edges) {
    if (e.u == e.v) throw ParseError(line, "self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw ParseError(line, "vertex index out of range");
    sorted.push_back({{std::min(e.u, e.v), std::max(e.u, e.v)}, line});
    list.push_back(e);
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i].first == sorted[i - 1].first)
      throw ParseError(std::max(sorted[i].second, sorted[i - 1].second), "duplicate edge");
  return Graph(static_cast<int>(n), list);
}

Graph parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  long long n = -1, m = -1;
  std::size_t p_line = 0;
  std::vector<std::pair<Edge, std::size_t>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = tokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError(lineno, "duplicate problem line");
      if (tok.size() != 4) throw ParseError(lineno, "expected 'p edge n m'");
      n = to_int(tok[2], lineno);
      m = to_int(tok[3], lineno);
      if (n < 0 || m < 0) throw ParseError(lineno, "negative size in problem line");
      p_line = lineno;
    } else if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError(lineno, "expected 'e u v'");
      long long u = to_int(tok[1], lineno), v = to_int(tok[2], lineno);
      if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
      if (n < 0) throw ParseError(lineno, "edge before problem line");
      if (u < 1 || v < 1 || u > n || v > n) throw ParseError(lineno, "vertex index out of range");
      edges.push_back({{static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)}, lineno});
    } else {
      throw ParseError(lineno, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (n < 0) throw ParseError(lineno, "missing problem line");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(p_line, "problem line declares " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
  return build(n, edges);
}

Graph parse_edgelist(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  long long n = 0;
  std::vector<std::pair<Edge, std::size_t>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = tokens(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (tok.size() != 2) throw ParseError(lineno, "expected 'u v'");
    long long u = to_int(tok[0], lineno), v = to_int(tok[1], lineno);
    if (u < 0 || v < 0 || u > 1'000'000'000 || v > 1'000'000'000)
      throw ParseError(lineno, "vertex index out of range");
    n = std::max({n, u + 1, v + 1});
    edges.push_back({{static_cast<Vertex>(u), static_cast<Vertex>(v)}, lineno});
  }
  return build(n, edges);
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::dimacs ? parse_dimacs(in) : parse_edgelist(in);
}

Graph parse_graph(const std::string& text, GraphFormat format) {
  std::istringstream in(text);
  return parse_graph(in, format);
}

GraphFormat detect_format(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto tok = tokens(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (tok[0] == "c" || tok[0] == "p" || tok[0] == "e") return GraphFormat::dimacs;
    return GraphFormat::edgelist;
  }
  return GraphFormat::edgelist;
}

void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
  if (format == GraphFormat::dimacs) {
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  } else {
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  }
}

std::string to_string(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  write_graph(out, g, format);
  return out.str();
}

}  // namespace sds
