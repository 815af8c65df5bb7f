#include "kcut/morse.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace kcut {

std::string to_string(TetrominoKind k) {
  switch (k) {
    case TetrominoKind::I: return "I";
    case TetrominoKind::O: return "O";
    case TetrominoKind::T: return "T";
    case TetrominoKind::S: return "S";
    case TetrominoKind::Z: return "Z";
    case TetrominoKind::L: return "L";
  }
  return "?";
}

MorseMatching element_matching(const Complex& c, int v) {
  if (c.is_void()) throw std::invalid_argument("matching: void complex");
  if (v < 1 || v > c.universe()) throw std::invalid_argument("matching: vertex out of range");
  MorseMatching m;
  int top = c.dim();
  std::vector<std::unordered_set<Mask>> level(static_cast<size_t>(top) + 2);
  for (int d = -1; d <= top; ++d) {
    const auto& fs = c.faces(d);
    level[static_cast<size_t>(d + 1)] = std::unordered_set<Mask>(fs.begin(), fs.end());
  }
  Mask vb = vertex_bit(v);
  for (int d = -1; d <= top; ++d) {
    for (Mask f : c.faces(d)) {
      if (f & vb) continue;
      Mask up = f | vb;
      bool upface = d + 1 <= top &&
                    level[static_cast<size_t>(d + 2)].count(up) > 0;
      if (upface)
        m.pairs.emplace_back(f, up);
      else
        m.critical.push_back(f);
    }
  }
  return m;
}

namespace {

bool cells_adjacent(const Cell& a, const Cell& b) {
  return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
}

int cell_degree(const std::array<Cell, 4>& cells, int i) {
  int deg = 0;
  for (int j = 0; j < 4; ++j)
    if (j != i && cells_adjacent(cells[static_cast<size_t>(i)], cells[static_cast<size_t>(j)])) ++deg;
  return deg;
}

std::array<Cell, 4> normalized(std::array<Cell, 4> cells) {
  int min_r = cells[0].row, min_c = cells[0].col;
  for (const Cell& c : cells) {
    min_r = std::min(min_r, c.row);
    min_c = std::min(min_c, c.col);
  }
  for (Cell& c : cells) {
    c.row -= min_r;
    c.col -= min_c;
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::array<Cell, 4> rotated(const std::array<Cell, 4>& cells) {
  std::array<Cell, 4> out{};
  for (size_t i = 0; i < 4; ++i) out[i] = Cell{cells[i].col, -cells[i].row};
  return normalized(out);
}

}  // namespace

Tetromino classify_tetromino(std::array<Cell, 4> cells) {
  std::sort(cells.begin(), cells.end());
  for (size_t i = 0; i + 1 < cells.size(); ++i)
    if (cells[i] == cells[i + 1]) throw std::invalid_argument("tetromino: repeated cell");
  // Edge connectivity over the four cells.
  unsigned reached = 1;
  for (int round = 0; round < 4; ++round)
    for (int i = 0; i < 4; ++i)
      if (reached & (1u << i))
        for (int j = 0; j < 4; ++j)
          if (cells_adjacent(cells[static_cast<size_t>(i)], cells[static_cast<size_t>(j)]))
            reached |= 1u << j;
  if (reached != 0b1111u) throw std::invalid_argument("tetromino: cells not edge-connected");

  static const std::vector<std::pair<TetrominoKind, std::array<Cell, 4>>> templates = {
      {TetrominoKind::O, {Cell{0, 0}, Cell{0, 1}, Cell{1, 0}, Cell{1, 1}}},
      {TetrominoKind::I, {Cell{0, 0}, Cell{1, 0}, Cell{2, 0}, Cell{3, 0}}},
      {TetrominoKind::T, {Cell{0, 0}, Cell{0, 1}, Cell{0, 2}, Cell{1, 1}}},
      {TetrominoKind::S, {Cell{0, 1}, Cell{0, 2}, Cell{1, 0}, Cell{1, 1}}},
      {TetrominoKind::Z, {Cell{0, 0}, Cell{0, 1}, Cell{1, 1}, Cell{1, 2}}},
      {TetrominoKind::L, {Cell{0, 0}, Cell{1, 0}, Cell{2, 0}, Cell{2, 1}}},
      {TetrominoKind::L, {Cell{0, 1}, Cell{1, 1}, Cell{2, 0}, Cell{2, 1}}},
  };

  Tetromino out;
  out.cells = cells;
  std::array<Cell, 4> shape = normalized(cells);
  bool matched = false;
  for (int rot = 0; rot < 4 && !matched; ++rot) {
    for (const auto& [kind, tmpl] : templates)
      if (shape == tmpl) {
        out.kind = kind;
        matched = true;
        break;
      }
    if (!matched) shape = rotated(shape);
  }
  if (!matched) throw std::logic_error("tetromino: shape escaped classification");

  // Designated cell, intrinsic to the placed piece: the junction for T, the
  // square's first cell for O, otherwise an interior cell of the path, with
  // the straight interior preferred for L and the first by row-major order
  // when two qualify.
  auto degree = [&](int i) { return cell_degree(cells, i); };
  int pick = -1;
  switch (out.kind) {
    case TetrominoKind::O:
      pick = 0;
      break;
    case TetrominoKind::T:
      for (int i = 0; i < 4; ++i)
        if (degree(i) == 3) pick = i;
      break;
    case TetrominoKind::L:
      for (int i = 0; i < 4 && pick < 0; ++i) {
        if (degree(i) != 2) continue;
        std::vector<Cell> nb;
        for (int j = 0; j < 4; ++j)
          if (j != i && cells_adjacent(cells[static_cast<size_t>(i)], cells[static_cast<size_t>(j)]))
            nb.push_back(cells[static_cast<size_t>(j)]);
        if (nb[0].row == nb[1].row || nb[0].col == nb[1].col) pick = i;
      }
      break;
    case TetrominoKind::I:
    case TetrominoKind::S:
    case TetrominoKind::Z:
      for (int i = 0; i < 4 && pick < 0; ++i)
        if (degree(i) == 2) pick = i;
      break;
  }
  if (pick < 0) throw std::logic_error("tetromino: no designated cell");
  out.designated = cells[static_cast<size_t>(pick)];
  return out;
}

MorseMatching grid_delta4_matching(int m, int n) {
  if (m < 1 || n < 1 || m * n < 6) throw std::invalid_argument("grid matching: need mn >= 6");
  Graph g = grid_graph(m, n);
  Complex delta = cut_complex(g, 4);
  if (delta.is_void()) throw std::logic_error("grid matching: cut complex unexpectedly void");
  int facet_size = m * n - 4;
  MorseMatching base = element_matching(delta, 1);

  std::vector<Mask> low;  // the codimension-1 criticals, to be repaired
  std::unordered_set<Mask> top_critical;
  for (Mask f : base.critical) {
    int size = popcount(f);
    if (size == facet_size)
      top_critical.insert(f);
    else if (size == facet_size - 1)
      low.push_back(f);
    else
      throw std::logic_error("grid matching: critical face in unexpected dimension");
  }
  std::sort(low.begin(), low.end(), lex_less);

  MorseMatching out;
  out.pairs = base.pairs;
  Mask full = full_mask(m * n);
  std::unordered_set<Mask> used;
  for (Mask sigma : low) {
    Mask comp = full & ~(sigma | vertex_bit(1));  // the tetromino
    std::array<Cell, 4> cells{};
    int idx = 0;
    Mask rest = comp;
    while (rest) {
      int u = lowest_vertex(rest);
      rest &= rest - 1;
      cells[static_cast<size_t>(idx++)] = Cell{(u - 1) / n + 1, (u - 1) % n + 1};
    }
    Tetromino tet = classify_tetromino(cells);
    int y = grid_vertex(n, tet.designated.row, tet.designated.col);
    Mask tau = sigma | vertex_bit(y);
    if (!delta.is_face(tau))
      throw std::logic_error("grid matching: designated cell gives a nonface at " +
                             to_string(tet.kind));
    if (!top_critical.count(tau) || used.count(tau))
      throw std::logic_error("grid matching: pairing collision at " + to_string(tet.kind));
    used.insert(tau);
    out.pairs.emplace_back(sigma, tau);
  }
  for (Mask f : top_critical)
    if (!used.count(f)) out.critical.push_back(f);
  std::sort(out.critical.begin(), out.critical.end(), lex_less);
  return out;
}

MatchingReport verify_matching(const Complex& c, const MorseMatching& m) {
  MatchingReport rep;
  if (c.is_void()) throw std::invalid_argument("verify_matching: void complex");
  int top = c.dim();
  std::unordered_set<Mask> faces;
  for (int d = -1; d <= top; ++d)
    for (Mask f : c.faces(d)) faces.insert(f);

  std::unordered_map<Mask, Mask> up;  // lower half -> upper half
  std::unordered_set<Mask> touched;
  auto touch = [&](Mask f) {
    if (touched.count(f)) return false;
    touched.insert(f);
    return true;
  };
  for (const auto& [s, t] : m.pairs) {
    if (!faces.count(s) || !faces.count(t)) {
      rep.violation = "pair involves a nonface";
      return rep;
    }
    if ((s & ~t) != 0 || popcount(t) != popcount(s) + 1) {
      rep.violation = "pair is not a codimension-1 cover";
      return rep;
    }
    if (!touch(s) || !touch(t)) {
      rep.violation = "face used twice";
      return rep;
    }
    up[s] = t;
  }
  for (Mask f : m.critical) {
    if (!faces.count(f)) {
      rep.violation = "critical list contains a nonface";
      return rep;
    }
    if (!touch(f)) {
      rep.violation = "face used twice";
      return rep;
    }
  }
  if (touched.size() != faces.size()) {
    rep.violation = "pairs and critical faces do not exhaust the complex";
    return rep;
  }
  rep.valid = true;
  for (Mask f : m.critical) ++rep.critical_by_dim[popcount(f) - 1];

  // Cycle search in the modified Hasse diagram: matched covers point up,
  // everything else points down. Colors: 0 new, 1 on stack, 2 done.
  std::unordered_map<Mask, int> color;
  std::vector<std::pair<Mask, size_t>> stack;
  auto successors = [&](Mask f, std::vector<Mask>& out_succ) {
    out_succ.clear();
    auto it = up.find(f);
    if (it != up.end()) out_succ.push_back(it->second);
    Mask rest = f;
    while (rest) {
      Mask lowbit = rest & (~rest + 1);
      rest &= rest - 1;
      Mask sub = f & ~lowbit;
      auto mu = up.find(sub);
      if (mu != up.end() && mu->second == f) continue;  // the matched edge, reversed
      out_succ.push_back(sub);
    }
  };
  std::vector<Mask> succ;
  for (Mask start : faces) {
    if (color[start] != 0) continue;
    stack.emplace_back(start, 0);
    color[start] = 1;
    std::unordered_map<Mask, std::vector<Mask>> succ_of;
    succ_of.reserve(64);
    while (!stack.empty()) {
      auto& [f, next_idx] = stack.back();
      auto& ss = succ_of[f];
      if (next_idx == 0) {
        successors(f, succ);
        ss = succ;
      }
      if (next_idx >= ss.size()) {
        color[f] = 2;
        succ_of.erase(f);
        stack.pop_back();
        continue;
      }
      Mask nxt = ss[next_idx++];
      int& col = color[nxt];
      if (col == 1) {
        rep.violation = "directed cycle through matched pairs";
        return rep;
      }
      if (col == 0) {
        col = 1;
        stack.emplace_back(nxt, 0);
      }
    }
  }
  rep.acyclic = true;
  return rep;
}

}  // namespace kcut
