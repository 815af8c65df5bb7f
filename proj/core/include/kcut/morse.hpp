#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "kcut/complex.hpp"

namespace kcut {

// Acyclic matching data for discrete Morse theory. Pairs are (sigma, tau)
// with tau = sigma + one vertex; critical faces are everything unmatched.
// The empty face participates: it may be matched with a vertex.
struct MorseMatching {
  std::vector<std::pair<Mask, Mask>> pairs;
  std::vector<Mask> critical;
};

// Matches every face sigma avoiding v with sigma + v when that is a face
// (the empty face pairs with {v}). Every face containing v gets matched, so
// the critical faces are exactly those avoiding v that extend by v to a
// nonface. Always acyclic.
MorseMatching element_matching(const Complex& c, int v);

enum class TetrominoKind { I, O, T, S, Z, L };
std::string to_string(TetrominoKind k);

struct Cell {
  int row = 0;  // 1-based grid coordinates
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

// A 4-cell edge-connected grid polyomino with its designated cell, the one
// whose removal leaves the piece connected and which the refined grid
// matching adds back. Classification is up to rotation; L covers both
// mirror forms, S and Z stay distinct.
struct Tetromino {
  TetrominoKind kind = TetrominoKind::I;
  std::array<Cell, 4> cells{};  // sorted
  Cell designated{};
};

Tetromino classify_tetromino(std::array<Cell, 4> cells);

// The refined acyclic matching on the 4-cut complex of the m x n grid:
// element matching at the corner vertex, then pairing each critical
// codimension-1 face through the designated cell of its complement
// tetromino. All critical cells land in dimension mn-5. Requires mn >= 6.
MorseMatching grid_delta4_matching(int m, int n);

struct MatchingReport {
  bool valid = false;    // pairs are face/coface, disjoint, within the complex
  bool acyclic = false;  // modified Hasse diagram has no directed cycle
  std::map<int, long long> critical_by_dim;
  std::string violation;
};

MatchingReport verify_matching(const Complex& c, const MorseMatching& m);

}  // namespace kcut
