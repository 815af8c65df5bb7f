#pragma once

#include <map>
#include <string>
#include <vector>

#include "kcut/complex.hpp"
#include "kcut/permutation.hpp"

namespace kcut {

// Column-major sparse integer matrix of the boundary map from d-chains to
// (d-1)-chains, rows and columns indexed by the lex order of faces(d-1) and
// faces(d). Entries are +-1 with the sign (-1)^p for dropping the p-th
// smallest vertex; the d = 0 map sends every vertex to the empty face with
// coefficient 1 (reduced homology is computed against the augmentation).
struct BoundaryMatrix {
  int d = 0;
  long long rows = 0;
  long long cols = 0;
  std::vector<std::vector<std::pair<int, int>>> col_entries;  // (row, value)
};

BoundaryMatrix boundary_matrix(const Complex& c, int d);  // -1 <= d <= dim

struct HomologyProfile {
  // Reduced Betti numbers for every dimension -1..dim; zeros included.
  std::map<int, long long> betti;
  // Invariant factors > 1 of the integral homology per dimension; empty maps
  // and empty lists mean torsion-free. Only filled when requested.
  std::map<int, std::vector<long long>> torsion;
  bool torsion_computed = false;
  long long euler_reduced = 0;

  long long betti_at(int d) const;
  bool torsion_free() const;
  long long top_betti(int top_dim) const { return betti_at(top_dim); }
};

// Ranks come from fraction-free elimination over the rationals; invariant
// factors from an independent integer diagonalization. When both run, their
// ranks are cross-checked and a mismatch throws. The void complex is
// rejected; {} reports betti_{-1} = 1.
HomologyProfile homology_profile(const Complex& c, bool with_torsion = true);

// Alternating sum over all faces, empty face included; 0 for the void complex.
long long euler_characteristic_reduced(const Complex& c);

// Trace of the permutation action on the alternating sum of chain groups:
// sum over g-fixed faces of (-1)^dim times the sign of the induced
// permutation. Equals the alternating sum of traces on reduced homology.
// Requires g to map faces to faces.
long long lefschetz_trace(const Complex& c, const Permutation& g);

}  // namespace kcut
