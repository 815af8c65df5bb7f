#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

// Published reference values, compiled in from data/golden.json.

struct GoldenCell {
  bool is_void = false;
  long long betti = 0;
};

struct GoldenTable {
  std::string name;
  std::string family;       // "squared-path" or "grid"
  int fixed_m = 0;          // grid tables fix the row count
  // (k, n) -> cell; absent pairs were not published.
  std::map<std::pair<int, int>, GoldenCell> cells;
  // (k, n) -> published Euler-formula prediction, where one accompanies the
  // cell. The grid k=5 predictions omit the chorded-6-cycle faces, so the
  // true |reduced Euler characteristic| exceeds them by the 6-cycle count.
  std::map<std::pair<int, int>, long long> euler_pred;
};

struct GoldenFigure {
  std::string name;
  Graph graph;
  int k = 0;
  std::vector<Mask> facets;
  std::map<int, long long> betti;      // only where published
  std::vector<long long> f_vector;     // empty if not published
  std::optional<bool> chordal;
  std::optional<bool> shellable;
};

const char* golden_json_text();  // generated translation unit

const GoldenTable& golden_table(const std::string& name);
const std::vector<std::string>& golden_table_names();
const std::vector<GoldenFigure>& golden_figures();
const GoldenFigure& golden_figure(const std::string& name);

}  // namespace kcut
