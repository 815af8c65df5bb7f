#include "kcut/graph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace kcut {

Graph make_graph(int n, std::vector<std::pair<int, int>> edges, std::string label) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph: vertex count out of range");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("graph: loop edge");
    if (u < 1 || v < 1 || u > n || v > n) throw std::invalid_argument("graph: endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  g.adj.assign(static_cast<size_t>(n), 0);
  for (auto [u, v] : g.edges) {
    g.adj[static_cast<size_t>(u - 1)] |= vertex_bit(v);
    g.adj[static_cast<size_t>(v - 1)] |= vertex_bit(u);
  }
  g.label = std::move(label);
  return g;
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, std::move(e), "path(" + std::to_string(n) + ")");
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n >= 3 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, n);
  return make_graph(n, std::move(e), "cycle(" + std::to_string(n) + ")");
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return make_graph(n, std::move(e), "complete(" + std::to_string(n) + ")");
}

Graph edgeless_graph(int n) {
  return make_graph(n, {}, "edgeless(" + std::to_string(n) + ")");
}

Graph squared_path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i + 1 <= n; ++i) e.emplace_back(i, i + 1);
  for (int i = 1; i + 2 <= n; ++i) e.emplace_back(i, i + 2);
  return make_graph(n, std::move(e), "squared-path(" + std::to_string(n) + ")");
}

int grid_vertex(int n_cols, int i, int j) { return (i - 1) * n_cols + j; }

Graph grid_graph(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("grid: dimensions must be positive");
  if (m * n > kMaxVertices) throw std::invalid_argument("grid: too many vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j < n) e.emplace_back(grid_vertex(n, i, j), grid_vertex(n, i, j + 1));
      if (i < m) e.emplace_back(grid_vertex(n, i, j), grid_vertex(n, i + 1, j));
    }
  return make_graph(m * n, std::move(e),
                    "grid(" + std::to_string(m) + "," + std::to_string(n) + ")");
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  if (a.n + b.n > kMaxVertices) throw std::invalid_argument("union: too many vertices");
  std::vector<std::pair<int, int>> e = a.edges;
  for (auto [u, v] : b.edges) e.emplace_back(u + a.n, v + a.n);
  std::string label;
  if (!a.label.empty() && !b.label.empty())
    label = "disjoint-union(" + a.label + "," + b.label + ")";
  return make_graph(a.n + b.n, std::move(e), std::move(label));
}

Graph graph_join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  std::vector<std::pair<int, int>> e = g.edges;
  for (int u = 1; u <= a.n; ++u)
    for (int v = a.n + 1; v <= a.n + b.n; ++v) e.emplace_back(u, v);
  std::string label;
  if (!a.label.empty() && !b.label.empty()) label = "join(" + a.label + "," + b.label + ")";
  return make_graph(g.n, std::move(e), std::move(label));
}

namespace {

struct DescriptorParser {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '-' || s[pos] == '_'))
      ++pos;
    if (start == pos) throw std::invalid_argument("family: expected a name at '" + s.substr(pos) + "'");
    return s.substr(start, pos - start);
  }

  int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("family: expected an integer");
    return std::stoi(s.substr(start, pos - start));
  }

  Graph parse() {
    std::string name = ident();
    if (!consume('(')) throw std::invalid_argument("family: expected '(' after " + name);
    Graph g = dispatch(name);
    if (!consume(')')) throw std::invalid_argument("family: expected ')' closing " + name);
    return g;
  }

  Graph dispatch(const std::string& name) {
    if (name == "path") return path_graph(integer());
    if (name == "cycle") return cycle_graph(integer());
    if (name == "complete") return complete_graph(integer());
    if (name == "edgeless") return edgeless_graph(integer());
    if (name == "squared-path") return squared_path_graph(integer());
    if (name == "grid") {
      int m = integer();
      if (!consume(',')) throw std::invalid_argument("family: grid needs two sizes");
      int n = integer();
      return grid_graph(m, n);
    }
    if (name == "disjoint-union" || name == "join") {
      Graph a = parse();
      if (!consume(',')) throw std::invalid_argument("family: " + name + " needs two factors");
      Graph b = parse();
      return name == "join" ? graph_join(a, b) : disjoint_union(a, b);
    }
    throw std::invalid_argument("family: unknown name '" + name + "'");
  }
};

}  // namespace

Graph make_family(const std::string& descriptor) {
  DescriptorParser p{descriptor};
  Graph g = p.parse();
  p.skip_ws();
  if (p.pos != descriptor.size())
    throw std::invalid_argument("family: trailing input after descriptor");
  return g;
}

Graph induced_subgraph(const Graph& g, Mask keep) {
  std::vector<int> vs = mask_to_vertices(keep);
  std::vector<int> rank(static_cast<size_t>(g.n) + 1, 0);
  for (size_t i = 0; i < vs.size(); ++i) rank[static_cast<size_t>(vs[i])] = static_cast<int>(i) + 1;
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges)
    if (contains_vertex(keep, u) && contains_vertex(keep, v))
      e.emplace_back(rank[static_cast<size_t>(u)], rank[static_cast<size_t>(v)]);
  return make_graph(static_cast<int>(vs.size()), std::move(e));
}

bool is_connected_induced(const Graph& g, Mask s) {
  if (s == 0) throw std::invalid_argument("connectivity: empty set");
  Mask comp = s & (~s + 1);  // lowest bit
  Mask frontier = comp;
  while (frontier) {
    Mask next = 0;
    Mask f = frontier;
    while (f) {
      int v = lowest_vertex(f);
      f &= f - 1;
      next |= g.adj[static_cast<size_t>(v - 1)];
    }
    next &= s & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp == s;
}

std::vector<Mask> connected_k_subsets(const Graph& g, int k) {
  std::vector<Mask> out;
  if (k < 1 || k > g.n) return out;
  std::vector<int> c = first_k_subset(k);
  do {
    Mask m = vertices_to_mask(c);
    if (is_connected_induced(g, m)) out.push_back(m);
  } while (next_k_subset(c, g.n));
  return out;
}

std::vector<Mask> induced_cycles(const Graph& g, int len) {
  if (len < 3) throw std::invalid_argument("induced_cycles: length >= 3 required");
  std::vector<Mask> out;
  if (len > g.n) return out;
  std::vector<int> c = first_k_subset(len);
  do {
    Mask m = vertices_to_mask(c);
    bool two_regular = true;
    for (int v : c)
      if (popcount(g.adj[static_cast<size_t>(v - 1)] & m) != 2) {
        two_regular = false;
        break;
      }
    if (two_regular && is_connected_induced(g, m)) out.push_back(m);
  } while (next_k_subset(c, g.n));
  return out;
}

long long count_cycle_subgraphs(const Graph& g, int len) {
  if (len < 3) throw std::invalid_argument("count_cycle_subgraphs: length >= 3 required");
  // Paths from the cycle's minimum vertex through larger vertices only;
  // closing the walk counts each cycle once per direction.
  long long walks = 0;
  std::vector<int> path;
  std::function<void(int, Mask)> extend = [&](int v, Mask used) {
    if (static_cast<int>(path.size()) == len) {
      if (g.adjacent(v, path.front())) ++walks;
      return;
    }
    Mask nb = g.adj[static_cast<size_t>(v - 1)] & ~used & ~(vertex_bit(path.front()) - 1);
    while (nb) {
      int w = lowest_vertex(nb);
      nb &= nb - 1;
      path.push_back(w);
      extend(w, used | vertex_bit(w));
      path.pop_back();
    }
  };
  for (int s = 1; s + len - 1 <= g.n; ++s) {
    path.assign(1, s);
    extend(s, vertex_bit(s));
  }
  return walks / 2;
}

bool is_chordal(const Graph& g) {
  // Maximum cardinality search, then the perfect elimination check.
  int n = g.n;
  if (n <= 2) return true;
  std::vector<int> weight(static_cast<size_t>(n), 0);
  std::vector<int> order;  // filled back to front
  order.reserve(static_cast<size_t>(n));
  Mask unnumbered = full_mask(n);
  for (int step = 0; step < n; ++step) {
    int best = -1, best_w = -1;
    Mask rest = unnumbered;
    while (rest) {
      int v = lowest_vertex(rest);
      rest &= rest - 1;
      if (weight[static_cast<size_t>(v - 1)] > best_w) {
        best_w = weight[static_cast<size_t>(v - 1)];
        best = v;
      }
    }
    order.push_back(best);
    unnumbered &= ~vertex_bit(best);
    Mask nb = g.adj[static_cast<size_t>(best - 1)] & unnumbered;
    while (nb) {
      int v = lowest_vertex(nb);
      nb &= nb - 1;
      ++weight[static_cast<size_t>(v - 1)];
    }
  }
  // order, reversed, is the elimination order.
  std::reverse(order.begin(), order.end());
  std::vector<int> pos(static_cast<size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
  Mask eliminated = 0;
  for (int i = 0; i < n; ++i) {
    int v = order[static_cast<size_t>(i)];
    eliminated |= vertex_bit(v);
    Mask later = g.adj[static_cast<size_t>(v - 1)] & ~eliminated;
    if (!later) continue;
    int u = 0, u_pos = n + 1;
    Mask rest = later;
    while (rest) {
      int w = lowest_vertex(rest);
      rest &= rest - 1;
      if (pos[static_cast<size_t>(w)] < u_pos) {
        u_pos = pos[static_cast<size_t>(w)];
        u = w;
      }
    }
    Mask others = later & ~vertex_bit(u);
    if (others & ~g.adj[static_cast<size_t>(u - 1)]) return false;
  }
  return true;
}

bool cut_vertex_exists(const Graph& g, Mask s) {
  if (popcount(s) < 3) throw std::invalid_argument("cut_vertex_exists: need |S| >= 3");
  if (!is_connected_induced(g, s)) throw std::invalid_argument("cut_vertex_exists: S not connected");
  Mask rest = s;
  while (rest) {
    int v = lowest_vertex(rest);
    rest &= rest - 1;
    if (!is_connected_induced(g, s & ~vertex_bit(v))) return true;
  }
  return false;
}

Permutation graph_automorphism(AutomorphismKind kind, int n) {
  std::vector<int> img(static_cast<size_t>(n));
  auto set = [&](int from, int to) { img[static_cast<size_t>(from - 1)] = to; };
  switch (kind) {
    case AutomorphismKind::PathFlip:
      for (int i = 1; i <= n; ++i) set(i, n + 1 - i);
      break;
    case AutomorphismKind::CycleRotation:
      for (int i = 1; i <= n; ++i) set(i, i % n + 1);
      break;
    case AutomorphismKind::CycleReflectionRho:
      if (n % 2 == 0) {
        for (int i = 1; i <= n; ++i) set(i, n + 1 - i);
      } else {
        for (int i = 1; i < n; ++i) set(i, n - i);
        set(n, n);
      }
      break;
    case AutomorphismKind::CycleReflectionTau:
      // rho composed with one rotation; for even n this is the axis through
      // vertices n and n/2.
      for (int i = 1; i < n; ++i) set(i, n - i);
      set(n, n);
      if (n % 2 == 1) {
        Permutation rho = graph_automorphism(AutomorphismKind::CycleReflectionRho, n);
        Permutation sigma = graph_automorphism(AutomorphismKind::CycleRotation, n);
        return rho * sigma;
      }
      break;
  }
  return Permutation(std::move(img));
}

std::vector<Permutation> dihedral_elements(int n) {
  Permutation sigma = graph_automorphism(AutomorphismKind::CycleRotation, n);
  Permutation rho = graph_automorphism(AutomorphismKind::CycleReflectionRho, n);
  std::vector<Permutation> out;
  out.reserve(static_cast<size_t>(2 * n));
  Permutation cur = Permutation::identity(n);
  for (int j = 0; j < n; ++j) {
    out.push_back(cur);
    cur = sigma * cur;
  }
  cur = rho;
  for (int j = 0; j < n; ++j) {
    out.push_back(cur);
    cur = cur * sigma;
  }
  return out;
}

}  // namespace kcut
