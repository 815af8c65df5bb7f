#include "kcut/homology.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "kcut/snf.hpp"

namespace kcut {

BoundaryMatrix boundary_matrix(const Complex& c, int d) {
  if (c.is_void()) throw std::invalid_argument("boundary: void complex");
  if (d < -1 || d > c.dim()) throw std::invalid_argument("boundary: dimension out of range");
  BoundaryMatrix m;
  m.d = d;
  if (d == -1) {
    m.rows = 0;
    m.cols = 1;
    m.col_entries.assign(1, {});
    return m;
  }
  const auto& domain = c.faces(d);
  const auto& codomain = c.faces(d - 1);
  std::unordered_map<Mask, int> row_of;
  row_of.reserve(codomain.size() * 2);
  for (size_t i = 0; i < codomain.size(); ++i) row_of[codomain[i]] = static_cast<int>(i);
  m.rows = static_cast<long long>(codomain.size());
  m.cols = static_cast<long long>(domain.size());
  m.col_entries.assign(domain.size(), {});
  for (size_t j = 0; j < domain.size(); ++j) {
    Mask f = domain[j];
    Mask rest = f;
    int p = 0;
    while (rest) {
      Mask low = rest & (~rest + 1);
      rest &= rest - 1;
      auto it = row_of.find(f & ~low);
      if (it == row_of.end()) throw std::logic_error("boundary: face closure broken");
      m.col_entries[j].emplace_back(it->second, (p % 2 == 0) ? 1 : -1);
      ++p;
    }
  }
  return m;
}

long long euler_characteristic_reduced(const Complex& c) {
  if (c.is_void()) return 0;
  long long chi = 0;
  for (int d = -1; d <= c.dim(); ++d) {
    long long count = static_cast<long long>(c.faces(d).size());
    chi += (d % 2 == 0) ? count : -count;
  }
  return chi;
}

long long HomologyProfile::betti_at(int d) const {
  auto it = betti.find(d);
  return it == betti.end() ? 0 : it->second;
}

bool HomologyProfile::torsion_free() const {
  for (const auto& [d, factors] : torsion)
    if (!factors.empty()) return false;
  return true;
}

HomologyProfile homology_profile(const Complex& c, bool with_torsion) {
  if (c.is_void()) throw std::invalid_argument("homology: void complex");
  int top = c.dim();
  std::vector<long long> faces_per_dim(static_cast<size_t>(top) + 2);
  for (int d = -1; d <= top; ++d)
    faces_per_dim[static_cast<size_t>(d + 1)] = static_cast<long long>(c.faces(d).size());

  // ranks[d+1] = rank of the boundary map leaving dimension d.
  std::vector<long long> ranks(static_cast<size_t>(top) + 3, 0);
  for (int d = 0; d <= top; ++d)
    ranks[static_cast<size_t>(d + 1)] = matrix_rank_rational(boundary_matrix(c, d));

  HomologyProfile h;
  for (int d = -1; d <= top; ++d) {
    long long b = faces_per_dim[static_cast<size_t>(d + 1)] -
                  ranks[static_cast<size_t>(d + 1)] -
                  ranks[static_cast<size_t>(d + 2)];
    h.betti[d] = b;
  }
  h.euler_reduced = euler_characteristic_reduced(c);
  long long alt = 0;
  for (const auto& [d, b] : h.betti) alt += (d % 2 == 0) ? b : -b;
  if (alt != h.euler_reduced)
    throw std::logic_error("homology: Betti numbers inconsistent with Euler characteristic");

  if (with_torsion) {
    h.torsion_computed = true;
    for (int d = -1; d < top; ++d) {
      DiagonalForm df = integer_diagonal_form(boundary_matrix(c, d + 1));
      if (df.rank != ranks[static_cast<size_t>(d + 2)])
        throw std::logic_error("homology: rank disagreement between elimination paths");
      h.torsion[d] = df.invariant_factors;
    }
  }
  return h;
}

long long lefschetz_trace(const Complex& c, const Permutation& g) {
  if (c.is_void()) throw std::invalid_argument("lefschetz: void complex");
  if (g.n() != c.universe()) throw std::invalid_argument("lefschetz: size mismatch");
  long long trace = -1;  // the empty face, fixed with sign +1, at dimension -1
  for (int d = 0; d <= c.dim(); ++d) {
    const auto& level = c.faces(d);
    std::unordered_set<Mask> level_set(level.begin(), level.end());
    for (Mask f : level) {
      Mask image = g.apply(f);
      if (level_set.find(image) == level_set.end())
        throw std::invalid_argument("lefschetz: permutation is not simplicial here");
      if (image != f) continue;
      int s = g.sign_on_fixed_set(f);
      trace += (d % 2 == 0) ? s : -s;
    }
  }
  return trace;
}

}  // namespace kcut
