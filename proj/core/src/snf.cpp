#include "kcut/snf.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace kcut {

namespace {

using Int = boost::multiprecision::cpp_int;

Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Sparse row: sorted (column, value) pairs, no zeros.
using Row = std::vector<std::pair<int, Int>>;

void normalize_row(Row& r) {
  if (r.empty()) return;
  Int g = 0;
  for (const auto& [c, v] : r) {
    g = gcd_int(g, v);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : r) v /= g;
}

// r := p * r - a * pivot, where p is the pivot value and a the value of r at
// the pivot column; the pivot column cancels exactly.
Row eliminate(const Row& r, const Row& pivot, const Int& a, const Int& p) {
  Row out;
  out.reserve(r.size() + pivot.size());
  size_t i = 0, j = 0;
  while (i < r.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < r.size() && r[i].first < pivot[j].first)) {
      out.emplace_back(r[i].first, p * r[i].second);
      ++i;
    } else if (i == r.size() || pivot[j].first < r[i].first) {
      out.emplace_back(pivot[j].first, -a * pivot[j].second);
      ++j;
    } else {
      Int v = p * r[i].second - a * pivot[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  normalize_row(out);
  return out;
}

std::vector<Row> rows_of(const BoundaryMatrix& m) {
  std::vector<Row> rows(static_cast<size_t>(m.rows));
  for (size_t j = 0; j < m.col_entries.size(); ++j)
    for (auto [r, v] : m.col_entries[j])
      rows[static_cast<size_t>(r)].emplace_back(static_cast<int>(j), Int(v));
  for (auto& r : rows) std::sort(r.begin(), r.end());
  return rows;
}

}  // namespace

long long matrix_rank_rational(const BoundaryMatrix& m) {
  std::vector<Row> rows = rows_of(m);
  rows.erase(std::remove_if(rows.begin(), rows.end(), [](const Row& r) { return r.empty(); }),
             rows.end());
  long long rank = 0;
  while (!rows.empty()) {
    // Prefer a unit pivot in the shortest row; fall back to the smallest
    // entry of the shortest row. Keeps fill-in and coefficient growth down.
    size_t best = 0;
    bool best_unit = false;
    for (size_t i = 0; i < rows.size(); ++i) {
      bool unit = false;
      for (const auto& [c, v] : rows[i])
        if (v == 1 || v == -1) {
          unit = true;
          break;
        }
      if (i == 0 || (unit && !best_unit) ||
          (unit == best_unit && rows[i].size() < rows[best].size())) {
        best = i;
        best_unit = unit;
      }
    }
    Row pivot_row = std::move(rows[best]);
    rows[best] = std::move(rows.back());
    rows.pop_back();
    int pivot_col = -1;
    Int pivot_val;
    for (const auto& [c, v] : pivot_row)
      if (pivot_col < 0 || (v == 1 || v == -1)) {
        pivot_col = c;
        pivot_val = v;
        if (v == 1 || v == -1) break;
      }
    ++rank;
    for (auto& r : rows) {
      auto it = std::lower_bound(r.begin(), r.end(), pivot_col,
                                 [](const auto& e, int c) { return e.first < c; });
      if (it == r.end() || it->first != pivot_col) continue;
      r = eliminate(r, pivot_row, it->second, pivot_val);
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(), [](const Row& r) { return r.empty(); }),
               rows.end());
  }
  return rank;
}

namespace {

// Mutable sparse matrix with row and column indexes, for the integer
// diagonalization.
struct SparseMat {
  std::vector<std::map<int, Int>> rows;
  std::vector<std::set<int>> col_rows;

  explicit SparseMat(const BoundaryMatrix& m)
      : rows(static_cast<size_t>(m.rows)), col_rows(static_cast<size_t>(m.cols)) {
    for (size_t j = 0; j < m.col_entries.size(); ++j)
      for (auto [r, v] : m.col_entries[j]) {
        rows[static_cast<size_t>(r)][static_cast<int>(j)] = Int(v);
        col_rows[j].insert(r);
      }
  }

  void set(int r, int c, Int v) {
    auto& row = rows[static_cast<size_t>(r)];
    if (v == 0) {
      row.erase(c);
      col_rows[static_cast<size_t>(c)].erase(r);
    } else {
      row[c] = std::move(v);
      col_rows[static_cast<size_t>(c)].insert(r);
    }
  }

  Int get(int r, int c) const {
    const auto& row = rows[static_cast<size_t>(r)];
    auto it = row.find(c);
    return it == row.end() ? Int(0) : it->second;
  }

  // row r_to += factor * row r_from
  void add_row(int r_to, int r_from, const Int& factor) {
    for (const auto& [c, v] : std::map<int, Int>(rows[static_cast<size_t>(r_from)]))
      set(r_to, c, get(r_to, c) + factor * v);
  }

  // col c_to += factor * col c_from
  void add_col(int c_to, int c_from, const Int& factor) {
    for (int r : std::set<int>(col_rows[static_cast<size_t>(c_from)]))
      set(r, c_to, get(r, c_to) + factor * get(r, c_from));
  }
};

}  // namespace

DiagonalForm integer_diagonal_form(const BoundaryMatrix& m) {
  SparseMat a(m);
  std::vector<Int> diagonal;

  auto find_min_entry = [&](int& pr, int& pc) -> bool {
    bool found = false;
    Int best;
    for (size_t r = 0; r < a.rows.size(); ++r)
      for (const auto& [c, v] : a.rows[r]) {
        Int av = v < 0 ? Int(-v) : v;
        if (!found || av < best) {
          best = av;
          pr = static_cast<int>(r);
          pc = c;
          found = true;
          if (best == 1) return true;
        }
      }
    return found;
  };

  int pr = 0, pc = 0;
  while (find_min_entry(pr, pc)) {
    // Reduce the pivot row and column until the pivot divides everything
    // there, then clear them.
    bool clean = false;
    while (!clean) {
      clean = true;
      Int p = a.get(pr, pc);
      for (int r : std::set<int>(a.col_rows[static_cast<size_t>(pc)])) {
        if (r == pr) continue;
        Int v = a.get(r, pc);
        Int q = v / p;
        a.add_row(r, pr, -q);
        if (a.get(r, pc) != 0) {
          // Remainder smaller than the pivot; swap roles and restart.
          pr = r;
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      p = a.get(pr, pc);
      for (const auto& [c, v] : std::map<int, Int>(a.rows[static_cast<size_t>(pr)])) {
        if (c == pc) continue;
        Int q = v / p;
        a.add_col(c, pc, -q);
        if (a.get(pr, c) != 0) {
          pc = c;
          clean = false;
          break;
        }
      }
    }
    Int p = a.get(pr, pc);
    if (p < 0) p = -p;
    diagonal.push_back(p);
    // Pivot row and column are clear except the pivot itself; drop it.
    a.set(pr, pc, 0);
  }

  // Diagonal to invariant factors: repeated gcd/lcm passes.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < diagonal.size(); ++i)
      for (size_t j = i + 1; j < diagonal.size(); ++j) {
        if (diagonal[j] % diagonal[i] == 0) continue;
        Int g = gcd_int(diagonal[i], diagonal[j]);
        Int l = diagonal[i] / g * diagonal[j];
        diagonal[i] = g;
        diagonal[j] = l;
        changed = true;
      }
  }
  std::sort(diagonal.begin(), diagonal.end());

  DiagonalForm out;
  out.rank = static_cast<long long>(diagonal.size());
  for (const Int& d : diagonal)
    if (d > 1) {
      if (d > Int(std::numeric_limits<long long>::max()))
        throw std::overflow_error("diagonal form: invariant factor beyond int64");
      out.invariant_factors.push_back(d.convert_to<long long>());
    }
  return out;
}

}  // namespace kcut
