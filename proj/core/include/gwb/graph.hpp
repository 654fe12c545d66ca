#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwb/errors.hpp"

namespace gwb {

/// Simple undirected graph on at most 64 vertices, stored as one 64-bit
/// adjacency row per vertex. Treat as immutable once shared across threads.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() : n_(1) { rows_.assign(1, 0); }
  explicit Graph(int n);

  /// Builds a graph from an edge list. Duplicate edges are merged.
  /// Throws std::invalid_argument on self-loops or out-of-range endpoints,
  /// capacity_error for n outside [1, 64].
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  int size() const { return m_; }

  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }
  uint64_t neighbors(int v) const { return rows_[v]; }
  int degree(int v) const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int max_degree() const;
  int min_degree() const;
  std::vector<int> degrees() const;
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(int v) const;

  int n_;
  int m_ = 0;
  std::vector<uint64_t> rows_;
};

/// Non-increasing degree vector with graphicality flags.
/// Construction rejects vectors that are not sorted non-increasing.
struct DegreeSequence {
  std::vector<int> degrees;
  bool graphical = false;
  bool tree_realizable = false;

  static DegreeSequence of(std::vector<int> sorted_non_increasing);
  int size() const { return static_cast<int>(degrees.size()); }
  long long sum() const;
  bool operator==(const DegreeSequence& other) const { return degrees == other.degrees; }
};

/// Two-coloring of the vertices; every edge crosses sides.
struct Bipartition {
  std::vector<int> side;  // 0 or 1 per vertex
  int size_of(int s) const;
  std::vector<int> part(int s) const;
};

DegreeSequence degree_sequence(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Proper 2-coloring, if one exists. Per connected component the
/// lowest-indexed vertex gets side 0.
std::optional<Bipartition> bipartition(const Graph& g);

/// Minimum vertex-cut size; n-1 for complete graphs, 0 when disconnected.
/// Exact for n <= 16, capacity_error above.
int vertex_connectivity(const Graph& g);

/// Isomorphism-complete canonical byte string. Trees up to n = 24 use a
/// centroid-rooted form; general graphs up to n = 16 minimize the adjacency
/// string over color-respecting permutations.
std::string canonical_code(const Graph& g);

/// True iff the degree vector (any order) is realizable by a simple graph.
bool erdos_gallai(std::vector<int> degrees);

}  // namespace gwb
