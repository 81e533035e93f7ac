#pragma once

#include <cstdint>
#include <random>

#include "sds/graph.hpp"

namespace sds {

/// Seeded generator with platform-independent draws (std distributions are
/// implementation-defined, so bounded integers are drawn by rejection).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Uniform in [0, 1) with 53 random bits.
  double unit();
  bool bernoulli(double p) { return p >= 1.0 || unit() < p; }

  template <class It>
  void shuffle(It first, It last) {
    for (auto n = last - first; n > 1; --n) std::swap(first[n - 1], first[uniform(0, n - 1)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// k-clique with a two-edge path hanging off each clique vertex: clique
/// 0..k-1, path middles k..2k-1, path ends 2k..3k-1.
Graph gap_graph(int k);

/// Connected: uniform random tree plus random extra edges up to m.
/// Throws std::invalid_argument unless n-1 <= m <= n(n-1)/2.
Graph random_connected(int n, int m, std::uint64_t seed);

/// 2-connected: random Hamiltonian cycle plus random chords up to m
/// (n >= 3, n <= m), or K2 for n == 2 and m == 1.
Graph random_two_connected(int n, int m, std::uint64_t seed);

/// Connected chordal graph grown by attaching each new vertex to a clique
/// picked around a random earlier vertex; `fill` is the probability of
/// extending that clique by each candidate neighbour.
Graph random_chordal(int n, double fill, std::uint64_t seed);

/// Sides 0..a-1 and a..a+b-1, each cross pair an edge with probability p.
Graph random_bipartite(int a, int b, double p, std::uint64_t seed);

/// Every graph on n labelled vertices (bit i of the mask selects the i-th
/// pair in lexicographic order); n <= 11.
Graph graph_from_mask(int n, std::uint64_t mask);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);

}  // namespace sds
