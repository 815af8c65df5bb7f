#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kcut/bits.hpp"
#include "kcut/permutation.hpp"

namespace kcut {

// Simple undirected graph on {1,...,n}, n <= 64. Both the normalized edge
// list (u < v, sorted, deduplicated) and the adjacency masks are kept; the
// masks drive all connectivity work.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<Mask> adj;
  std::string label;

  bool adjacent(int u, int v) const { return contains_vertex(adj[u - 1], v); }
};

// Validates and normalizes; rejects loops, out-of-range endpoints, n > 64.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges, std::string label = "");

Graph path_graph(int n);
Graph cycle_graph(int n);            // n >= 3
Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph squared_path_graph(int n);     // path plus all {i, i+2} chords
Graph grid_graph(int m, int n);      // m rows, n columns, row-major labels
Graph disjoint_union(const Graph& a, const Graph& b);   // b shifted by a.n
Graph graph_join(const Graph& a, const Graph& b);       // union plus all cross edges

// Row-major, 1-based: cell (i, j) of an m x n grid.
int grid_vertex(int n_cols, int i, int j);

// Parses a family descriptor such as "path(6)", "grid(3,4)",
// "squared-path(9)", "complete(5)", "edgeless(4)", "cycle(7)",
// "disjoint-union(complete(3),complete(4))", "join(path(2),edgeless(3))".
Graph make_family(const std::string& descriptor);

Graph induced_subgraph(const Graph& g, Mask keep);  // relabels by rank within keep

// Connectivity of the induced subgraph on s. Precondition: s nonempty and
// within range; a singleton is connected.
bool is_connected_induced(const Graph& g, Mask s);

// All k-subsets with connected induced subgraph, in lexicographic order of
// the ascending vertex sequences.
std::vector<Mask> connected_k_subsets(const Graph& g, int k);

// Vertex sets of induced cycles of length len (len >= 3), lex order.
std::vector<Mask> induced_cycles(const Graph& g, int len);

// Number of cycles of length len (>= 3) as subgraphs, chords allowed.
long long count_cycle_subgraphs(const Graph& g, int len);

bool is_chordal(const Graph& g);

// True when some vertex of s disconnects the rest. Precondition: s induces a
// connected subgraph and |s| >= 3.
bool cut_vertex_exists(const Graph& g, Mask s);

// Named automorphisms of the path and cycle families.
enum class AutomorphismKind {
  PathFlip,            // i -> n+1-i
  CycleRotation,       // i -> i+1 cyclically
  CycleReflectionRho,  // n even: the vertex-free axis; n odd: fixes n
  CycleReflectionTau,  // n even: the axis through n and n/2
};
Permutation graph_automorphism(AutomorphismKind kind, int n);

// All 2n elements of the dihedral group acting on the n-cycle:
// rotations first, then reflections, each by increasing power.
std::vector<Permutation> dihedral_elements(int n);

}  // namespace kcut
