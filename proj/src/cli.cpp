#include "sds/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "sds/approx.hpp"
#include "sds/block_cut_tree.hpp"
#include "sds/errors.hpp"
#include "sds/generators.hpp"
#include "sds/lp.hpp"
#include "sds/oracle.hpp"
#include "sds/solver.hpp"
#include "sds/treewidth.hpp"

namespace sds::cli {

using json = nlohmann::ordered_json;

namespace {

struct Config {
  std::string input = "-";
  std::string format = "auto";
  bool json_output = false;
  std::string colours;
  std::string backend = "auto";
  std::optional<std::uint64_t> budget;
  bool split_components = false;
  std::string output;
  // approx
  std::string variant;
  std::string export_lp;
  bool check_steps = false;
  // verify
  std::string set_file;
  bool enumerate = false;
  // gen
  std::vector<std::string> gen_params;
  std::uint64_t seed = 1;
  // oracle
  bool trees = false;
  // blocks
  std::string export_td;
  // bench
  unsigned jobs = 1;
};

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw ParseError(0, "cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

Graph load_graph(const Config& cfg, std::istream& in) {
  std::string text = read_text(cfg.input, in);
  GraphFormat format = cfg.format == "auto"     ? detect_format(text)
                       : cfg.format == "dimacs" ? GraphFormat::dimacs
                                                : GraphFormat::edgelist;
  return parse_graph(text, format);
}

std::optional<std::pair<std::string, std::string>> split_two(const std::string& line) {
  std::istringstream ls(line);
  std::string a, b, extra;
  if (!(ls >> a)) return std::nullopt;
  if (!(ls >> b) || (ls >> extra)) return std::pair<std::string, std::string>{a, ""};
  return std::pair<std::string, std::string>{a, b};
}

std::string strip_comment(std::string line) {
  if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
  return line;
}

Vertex parse_vertex_id(const std::string& token, int n, std::size_t lineno) {
  std::size_t used = 0;
  long long v = -1;
  try {
    v = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty()) throw ParseError(lineno, "not a vertex id: '" + token + "'");
  if (v < 0 || v >= n) throw ParseError(lineno, "vertex " + token + " out of range");
  return static_cast<Vertex>(v);
}

json tags(const std::vector<VcBackend>& backends) {
  json out = json::array();
  for (VcBackend b : backends) out.push_back(std::string(to_string(b)));
  return out;
}

std::string join(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

std::string join_tags(const std::vector<VcBackend>& backends) {
  std::string out;
  for (VcBackend b : backends) out += (out.empty() ? "" : ",") + std::string(to_string(b));
  return out.empty() ? "none" : out;
}

// Components as (subgraph, vertex map); the whole graph when not splitting.
// Disconnected input without splitting throws DisconnectedError.
std::vector<InducedSubgraph> pieces(const Graph& g, bool split) {
  if (!split) {
    if (!is_connected(g)) throw DisconnectedError("input graph is disconnected (see --split-components)");
    InducedSubgraph whole{g, {}, {}};
    for (Vertex v = 0; v < g.num_vertices(); ++v) whole.to_parent.push_back(v);
    whole.from_parent = whole.to_parent;
    return {whole};
  }
  int count = 0;
  std::vector<int> comp = connected_components(g, &count);
  std::vector<VertexSet> members(count);
  for (Vertex v = 0; v < g.num_vertices(); ++v) members[comp[v]].push_back(v);
  std::vector<InducedSubgraph> out;
  for (const VertexSet& m : members) out.push_back(induced_subgraph(g, m));
  return out;
}

VertexSet lift(const InducedSubgraph& piece, const VertexSet& s) {
  VertexSet out;
  for (Vertex v : s) out.push_back(piece.to_parent[v]);
  std::sort(out.begin(), out.end());
  return out;
}

void merge_into(VertexSet& acc, const VertexSet& more) {
  VertexSet merged;
  std::merge(acc.begin(), acc.end(), more.begin(), more.end(), std::back_inserter(merged));
  acc = std::move(merged);
}

bool verify_pieces(const Graph& g, const VertexSet& s, bool split) {
  for (const InducedSubgraph& piece : pieces(g, split)) {
    VertexSet local;
    for (Vertex v : s)
      if (piece.from_parent[v] >= 0) local.push_back(piece.from_parent[v]);
    if (!is_sd_set(piece.graph, blocks_and_cut_vertices(piece.graph), local)) return false;
  }
  return true;
}

SolveOptions solve_options(const Config& cfg) {
  SolveOptions opts;
  auto choice = parse_backend(cfg.backend);
  if (!choice) throw std::invalid_argument("unknown backend " + cfg.backend);
  opts.backend = *choice;
  opts.bnb_node_budget = cfg.budget;
  return opts;
}

int cmd_solve(const Config& cfg, std::istream& in, std::ostream& out) {
  Graph g = load_graph(cfg, in);
  Colouring f(g.num_vertices(), Colour::zero_hat);
  if (!cfg.colours.empty()) {
    std::ifstream file(cfg.colours);
    if (!file) throw ParseError(0, "cannot open " + cfg.colours);
    f = parse_colouring(file, g.num_vertices());
  }
  SolveOptions opts = solve_options(cfg);

  VertexSet solution;
  std::vector<VcBackend> backends;
  json blocks = json::array();
  std::ostringstream block_lines;
  bool verified = true;
  int block_id = 0;
  int component = 0;
  for (const InducedSubgraph& piece : pieces(g, cfg.split_components)) {
    Colouring local(piece.graph.num_vertices());
    for (Vertex v = 0; v < piece.graph.num_vertices(); ++v) local[v] = f[piece.to_parent[v]];
    SolveReport report = solve_crsds(piece.graph, local, opts);
    verified = verified && report.verified;
    merge_into(solution, lift(piece, report.solution));
    for (VcBackend b : report.backends)
      if (std::find(backends.begin(), backends.end(), b) == backends.end()) backends.push_back(b);
    for (const BlockLogEntry& e : report.blocks) {
      VertexSet vertices = lift(piece, e.vertices);
      VertexSet chosen = lift(piece, e.chosen);
      std::optional<Vertex> connection;
      if (e.connection) connection = piece.to_parent[*e.connection];
      json entry;
      entry["block"] = block_id;
      if (cfg.split_components) entry["component"] = component;
      entry["vertices"] = vertices;
      entry["connection"] = connection ? json(*connection) : json(nullptr);
      if (e.taken == BlockCase::root) {
        entry["sizes"] = nullptr;
        entry["root_size"] = e.size_root;
      } else {
        entry["sizes"] = {{"one", *e.size_one}, {"zero_hat", *e.size_zero_hat}, {"zero", *e.size_zero}};
      }
      entry["case"] = std::string(to_string(e.taken));
      entry["colour_before"] = to_string(e.colour_before);
      entry["colour_after"] = to_string(e.colour_after);
      entry["chosen"] = chosen;
      entry["backend"] = tags(e.backends);
      blocks.push_back(entry);

      block_lines << "  block " << block_id << " [" << join(vertices) << "]";
      if (connection) {
        block_lines << " connection " << *connection << " #1=" << *e.size_one << " #0hat=" << *e.size_zero_hat
                    << " #0=" << *e.size_zero << " " << to_string(e.taken) << " colour "
                    << to_string(e.colour_before) << "->" << to_string(e.colour_after);
      } else {
        block_lines << " root size=" << e.size_root;
      }
      block_lines << " chosen [" << join(chosen) << "] backend " << join_tags(e.backends) << "\n";
      ++block_id;
    }
    ++component;
  }
  std::sort(backends.begin(), backends.end());

  if (cfg.json_output) {
    json j;
    j["schema"] = 1;
    j["command"] = "solve";
    j["size"] = solution.size();
    j["vertices"] = solution;
    j["blocks"] = blocks;
    j["backend"] = tags(backends);
    j["verified"] = verified;
    out << j.dump(2) << "\n";
  } else {
    out << "size " << solution.size() << "\n"
        << "vertices " << join(solution) << "\n"
        << "backend " << join_tags(backends) << "\n"
        << "verified " << (verified ? "yes" : "no") << "\n"
        << "blocks\n"
        << block_lines.str();
  }
  return kOk;
}

int cmd_approx(const Config& cfg, std::istream& in, std::ostream& out) {
  Graph g = load_graph(cfg, in);
  VertexSet solution;
  Rational bound = 0;
  std::size_t raised = 0, lowered = 0;
  std::ostringstream lp_text;
  for (const InducedSubgraph& piece : pieces(g, cfg.split_components)) {
    if (cfg.variant == "vc") {
      merge_into(solution, lift(piece, approx4_sds_via_vc(piece.graph)));
      continue;
    }
    Approx2Result r = approx2_sds(piece.graph, RoundingOptions{cfg.check_steps});
    merge_into(solution, lift(piece, r.set));
    bound += r.lp_bound;
    raised += r.rounding.raised_cut_vertices.size();
    lowered += r.rounding.lowered.size();
    if (!cfg.export_lp.empty())
      write_lp(lp_text, build_sds_ip(piece.graph, blocks_and_cut_vertices(piece.graph), false));
  }
  if (!verify_pieces(g, solution, cfg.split_components))
    throw std::logic_error("approximate set failed SD-set verification");
  if (!cfg.export_lp.empty()) {
    std::ofstream file(cfg.export_lp);
    if (!file) throw ParseError(0, "cannot write " + cfg.export_lp);
    file << lp_text.str();
  }

  if (cfg.json_output) {
    json j;
    j["schema"] = 1;
    j["command"] = "approx";
    j["variant"] = cfg.variant;
    j["size"] = solution.size();
    j["vertices"] = solution;
    if (cfg.variant == "lp") {
      j["lp_bound"] = bound.get_str();
      j["lp_bound_value"] = bound.get_d();
      j["raised_cut_vertices"] = raised;
      j["lowered"] = lowered;
    }
    j["verified"] = true;
    out << j.dump(2) << "\n";
  } else {
    out << "size " << solution.size() << "\n"
        << "vertices " << join(solution) << "\n";
    if (cfg.variant == "lp") out << "lp_bound " << bound.get_str() << " (" << bound.get_d() << ")\n";
    out << "verified yes\n";
  }
  return kOk;
}

int cmd_verify(const Config& cfg, std::istream& in, std::ostream& out) {
  Graph g = load_graph(cfg, in);
  std::ifstream file(cfg.set_file);
  if (!file) throw ParseError(0, "cannot open " + cfg.set_file);
  VertexSet s = parse_vertex_set(file, g.num_vertices());
  BlockCutTree bct = blocks_and_cut_vertices(g);
  std::optional<Vertex> witness = undominated_witness(g, bct, s);
  if (cfg.enumerate) {
    bool by_trees = oracle::is_sd_set_by_enumeration(g, s);
    if (by_trees != !witness.has_value())
      throw std::logic_error("block verifier and spanning-tree enumeration disagree");
  }
  if (cfg.json_output) {
    json j;
    j["schema"] = 1;
    j["command"] = "verify";
    j["valid"] = !witness;
    j["witness"] = witness ? json(*witness) : json(nullptr);
    j["enumerated"] = cfg.enumerate;
    out << j.dump(2) << "\n";
  } else if (witness) {
    out << "invalid witness " << *witness << "\n";
  } else {
    out << "valid\n";
  }
  return witness ? kInvalidSet : kOk;
}

long long int_param(const std::string& s, const char* what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
  return v;
}

double real_param(const std::string& s, const char* what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
  return v;
}

int checked_int(const std::string& s, const char* what) {
  long long v = int_param(s, what);
  if (v < 0 || v > 1'000'000) throw std::invalid_argument(std::string(what) + " out of range");
  return static_cast<int>(v);
}

int cmd_gen(const Config& cfg, std::ostream& out) {
  std::vector<std::string> p = cfg.gen_params;
  if (p.empty()) throw std::invalid_argument("gen needs a family");
  const std::string family = p.front();
  p.erase(p.begin());
  std::uint64_t seed = cfg.seed;
  auto take_seed = [&](std::size_t arity) {
    if (p.size() == arity + 1) {
      std::string s = p.back();
      if (s.rfind("seed=", 0) == 0) s = s.substr(5);
      long long v = int_param(s, "seed");
      if (v < 0) throw std::invalid_argument("seed must be nonnegative");
      seed = static_cast<std::uint64_t>(v);
      p.pop_back();
    }
    if (p.size() != arity)
      throw std::invalid_argument("gen " + family + " takes " + std::to_string(arity) + " parameters");
  };

  Graph g;
  if (family == "gap") {
    take_seed(1);
    g = gap_graph(checked_int(p[0], "k"));
  } else if (family == "random") {
    take_seed(2);
    g = random_connected(checked_int(p[0], "n"), checked_int(p[1], "m"), seed);
  } else if (family == "random-2connected") {
    take_seed(2);
    g = random_two_connected(checked_int(p[0], "n"), checked_int(p[1], "m"), seed);
  } else if (family == "chordal") {
    take_seed(2);
    g = random_chordal(checked_int(p[0], "n"), real_param(p[1], "fill"), seed);
  } else if (family == "bipartite") {
    take_seed(3);
    g = random_bipartite(checked_int(p[0], "a"), checked_int(p[1], "b"), real_param(p[2], "p"), seed);
  } else {
    throw std::invalid_argument("unknown family " + family);
  }

  GraphFormat format = cfg.format == "edgelist" ? GraphFormat::edgelist : GraphFormat::dimacs;
  if (cfg.output.empty()) {
    write_graph(out, g, format);
  } else {
    std::ofstream file(cfg.output);
    if (!file) throw ParseError(0, "cannot write " + cfg.output);
    write_graph(file, g, format);
  }
  return kOk;
}

int cmd_oracle(const Config& cfg, std::istream& in, std::ostream& out) {
  Graph g = load_graph(cfg, in);
  if (!is_connected(g)) throw DisconnectedError("input graph is disconnected");
  if (g.num_vertices() > oracle::kMaxSdsVertices)
    throw BudgetExceededError("oracle handles at most " + std::to_string(oracle::kMaxSdsVertices) + " vertices");
  VertexSet sds = oracle::min_sds_bruteforce(g);
  VertexSet vc = oracle::min_vc_bruteforce(g);
  std::optional<std::int64_t> trees;
  if (cfg.trees) {
    trees = oracle::kirchhoff_tree_count(g);
    if (g.num_edges() <= oracle::kMaxTreeEnumerationEdges &&
        static_cast<std::int64_t>(oracle::for_each_spanning_tree(g, [](const oracle::SpanningTree&) { return true; })) !=
            *trees)
      throw std::logic_error("spanning tree enumeration disagrees with the matrix-tree count");
  }
  if (cfg.json_output) {
    json j;
    j["schema"] = 1;
    j["command"] = "oracle";
    j["sds"] = sds.size();
    j["sds_vertices"] = sds;
    j["vc"] = vc.size();
    j["vc_vertices"] = vc;
    if (trees) j["trees"] = *trees;
    out << j.dump(2) << "\n";
  } else {
    out << "sds=" << sds.size() << " vc=" << vc.size();
    if (trees) out << " trees=" << *trees;
    out << "\n";
  }
  return kOk;
}

int cmd_blocks(const Config& cfg, std::istream& in, std::ostream& out) {
  Graph g = load_graph(cfg, in);
  BlockCutTree bct = blocks_and_cut_vertices(g);
  std::vector<LeafStep> order = leaf_component_order(bct);
  std::optional<int> width;
  if (!cfg.export_td.empty()) {
    TreeDecomposition td = min_fill_decomposition(g);
    std::ofstream file(cfg.export_td);
    if (!file) throw ParseError(0, "cannot write " + cfg.export_td);
    write_pace_td(file, g, td);
    width = td.width();
  }
  if (cfg.json_output) {
    json j;
    j["schema"] = 1;
    j["command"] = "blocks";
    j["blocks"] = bct.blocks;
    j["cut_vertices"] = bct.cut_vertices;
    json steps = json::array();
    for (const LeafStep& s : order)
      steps.push_back({{"block", s.block}, {"connection", s.connection ? json(*s.connection) : json(nullptr)}});
    j["leaf_order"] = steps;
    if (width) j["treewidth_upper_bound"] = *width;
    out << j.dump(2) << "\n";
  } else {
    out << "blocks " << bct.num_blocks() << "\n";
    for (int b = 0; b < bct.num_blocks(); ++b) out << "  block " << b << " [" << join(bct.blocks[b]) << "]\n";
    out << "cut_vertices " << join(bct.cut_vertices) << "\n";
    out << "leaf_order";
    for (const LeafStep& s : order) {
      out << " " << s.block;
      if (s.connection) out << "@" << *s.connection;
    }
    out << "\n";
    if (width) out << "treewidth_upper_bound " << *width << "\n";
  }
  return kOk;
}

struct BenchRow {
  std::string name;
  int n = 0;
  std::size_t m = 0;
  std::size_t exact = 0;
  double exact_ms = 0;
  std::size_t lp = 0;
  Rational lp_bound;
  double lp_ms = 0;
  std::size_t vc = 0;
};

BenchRow run_bench(const std::string& name, const Graph& g) {
  using clock = std::chrono::steady_clock;
  auto ms = [](clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
  BenchRow row;
  row.name = name;
  row.n = g.num_vertices();
  row.m = g.num_edges();
  auto t0 = clock::now();
  row.exact = solve_sds(g).size;
  auto t1 = clock::now();
  Approx2Result a = approx2_sds(g);
  auto t2 = clock::now();
  row.exact_ms = ms(t1 - t0);
  row.lp = a.set.size();
  row.lp_bound = a.lp_bound;
  row.lp_ms = ms(t2 - t1);
  row.vc = approx4_sds_via_vc(g).size();
  return row;
}

int cmd_bench(const Config& cfg, std::ostream& out) {
  std::vector<std::pair<std::string, Graph>> instances;
  for (int k = 3; k <= 8; ++k) instances.emplace_back("gap-" + std::to_string(k), gap_graph(k));
  for (int n : {10, 20, 30})
    instances.emplace_back("random-" + std::to_string(n), random_connected(n, 2 * n, cfg.seed + n));
  for (int n : {10, 20, 30})
    instances.emplace_back("2connected-" + std::to_string(n), random_two_connected(n, 2 * n, cfg.seed + n));
  for (int n : {10, 20, 30})
    instances.emplace_back("chordal-" + std::to_string(n), random_chordal(n, 0.5, cfg.seed + n));

  std::vector<BenchRow> rows(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < instances.size();) rows[i] = run_bench(instances[i].first, instances[i].second);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, cfg.jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (cfg.json_output) {
    json j;
    j["schema"] = 1;
    j["command"] = "bench";
    json list = json::array();
    for (const BenchRow& r : rows)
      list.push_back({{"instance", r.name},
                      {"n", r.n},
                      {"m", r.m},
                      {"exact", r.exact},
                      {"exact_ms", r.exact_ms},
                      {"lp", r.lp},
                      {"lp_bound", r.lp_bound.get_str()},
                      {"lp_ms", r.lp_ms},
                      {"vc", r.vc}});
    j["rows"] = list;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << std::left << std::setw(16) << "instance" << std::right << std::setw(5) << "n" << std::setw(6) << "m"
      << std::setw(7) << "exact" << std::setw(11) << "exact_ms" << std::setw(5) << "lp" << std::setw(10)
      << "lp_bound" << std::setw(11) << "lp_ms" << std::setw(5) << "vc" << "\n";
  out << std::fixed << std::setprecision(2);
  for (const BenchRow& r : rows)
    out << std::left << std::setw(16) << r.name << std::right << std::setw(5) << r.n << std::setw(6) << r.m
        << std::setw(7) << r.exact << std::setw(11) << r.exact_ms << std::setw(5) << r.lp << std::setw(10)
        << r.lp_bound.get_str() << std::setw(11) << r.lp_ms << std::setw(5) << r.vc << "\n";
  return kOk;
}

}  // namespace

Colouring parse_colouring(std::istream& in, int n) {
  Colouring f(n, Colour::zero_hat);
  std::vector<char> seen(n, 0);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fields = split_two(strip_comment(line));
    if (!fields) continue;
    if (fields->second.empty()) throw ParseError(lineno, "expected 'vertex colour'");
    Vertex v = parse_vertex_id(fields->first, n, lineno);
    if (seen[v]) throw ParseError(lineno, "vertex " + fields->first + " coloured twice");
    seen[v] = 1;
    const std::string& c = fields->second;
    if (c == "1")
      f[v] = Colour::one;
    else if (c == "0")
      f[v] = Colour::zero;
    else if (c == "0hat")
      f[v] = Colour::zero_hat;
    else
      throw ParseError(lineno, "unknown colour '" + c + "' (expected 1, 0 or 0hat)");
  }
  return f;
}

VertexSet parse_vertex_set(std::istream& in, int n) {
  VertexSet s;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(strip_comment(line));
    std::string token;
    while (ls >> token) s.push_back(parse_vertex_id(token, n, lineno));
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Minimum simultaneous dominating sets: exact solver, approximations and oracles", "sds"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "graph file, '-' for stdin")->capture_default_str();
    sub->add_option("--format", cfg.format, "graph format")
        ->check(CLI::IsMember({"auto", "dimacs", "edgelist"}))
        ->capture_default_str();
    sub->add_flag("--json", cfg.json_output, "machine-readable output");
  };

  auto* solve = app.add_subcommand("solve", "exact minimum (colour-respecting) SD-set");
  add_input(solve);
  solve->add_option("--colours", cfg.colours, "colouring file of 'vertex colour' lines");
  solve->add_option("--backend", cfg.backend, "vertex cover backend")
      ->check(CLI::IsMember({"auto", "bnb", "bipartite", "treewidth"}))
      ->capture_default_str();
  solve->add_option("--budget", cfg.budget, "node budget for branch and bound")->check(CLI::PositiveNumber);
  solve->add_flag("--split-components", cfg.split_components, "solve each connected component separately");

  auto* approx = app.add_subcommand("approx", "LP-rounding or vertex-cover approximation");
  approx->add_option("variant", cfg.variant, "lp or vc")->required()->check(CLI::IsMember({"lp", "vc"}));
  add_input(approx);
  approx->add_flag("--split-components", cfg.split_components, "solve each connected component separately");
  approx->add_option("--export-lp", cfg.export_lp, "write the LP relaxation in CPLEX LP format");
  approx->add_flag("--check-steps", cfg.check_steps, "re-check LP feasibility after every rounding step");

  auto* verify = app.add_subcommand("verify", "check whether a vertex set is an SD-set");
  verify->add_option("input", cfg.input, "graph file, '-' for stdin")->required();
  verify->add_option("set", cfg.set_file, "file of 0-based vertex ids")->required();
  verify->add_option("--format", cfg.format, "graph format")
      ->check(CLI::IsMember({"auto", "dimacs", "edgelist"}))
      ->capture_default_str();
  verify->add_flag("--json", cfg.json_output, "machine-readable output");
  verify->add_flag("--enumerate", cfg.enumerate, "also check every spanning tree");

  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->add_option("params", cfg.gen_params,
                  "gap K | random N M [SEED] | random-2connected N M [SEED] | chordal N FILL [SEED] | "
                  "bipartite A B P [SEED]")
      ->required();
  gen->add_option("--seed", cfg.seed, "generator seed")->capture_default_str();
  gen->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"auto", "dimacs", "edgelist"}));
  gen->add_option("-o,--output", cfg.output, "output file instead of stdout");

  auto* orc = app.add_subcommand("oracle", "brute-force minimum SD-set and vertex cover sizes");
  add_input(orc);
  orc->add_flag("--trees", cfg.trees, "also count spanning trees");

  auto* blocks = app.add_subcommand("blocks", "print blocks, cut vertices and leaf-component order");
  add_input(blocks);
  blocks->add_option("--export-td", cfg.export_td, "write a min-fill tree decomposition in PACE .td format");

  auto* bench = app.add_subcommand("bench", "timing table over generated instances");
  bench->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_option("--seed", cfg.seed, "generator seed")->capture_default_str();
  bench->add_flag("--json", cfg.json_output, "machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "sds: " << e.what() << "\n";
    return kParseError;
  }
  CLI::App* sub = app.get_subcommands().front();
  if (sub == gen && cfg.format == "auto") cfg.format = "dimacs";

  std::ostringstream buffer;
  try {
    int code = kOk;
    if (sub == solve)
      code = cmd_solve(cfg, in, buffer);
    else if (sub == approx)
      code = cmd_approx(cfg, in, buffer);
    else if (sub == verify)
      code = cmd_verify(cfg, in, buffer);
    else if (sub == gen)
      code = cmd_gen(cfg, buffer);
    else if (sub == orc)
      code = cmd_oracle(cfg, in, buffer);
    else if (sub == blocks)
      code = cmd_blocks(cfg, in, buffer);
    else
      code = cmd_bench(cfg, buffer);
    out << buffer.str();
    return code;
  } catch (const DisconnectedError& e) {
    err << "sds: " << e.what() << "\n";
    return kDisconnected;
  } catch (const BudgetExceededError& e) {
    err << "sds: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const ParseError& e) {
    err << "sds: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "sds: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "sds: " << e.what() << "\n";
    return kParseError;
  } catch (const std::out_of_range& e) {
    err << "sds: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "sds: internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace sds::cli
