#pragma once

#include <map>
#include <optional>
#include <string>

#include "kcut/complex.hpp"
#include "kcut/poly.hpp"

namespace kcut {

// Closed forms for cut complexes of joins, clique unions and disjoint
// unions, plus the named-family Betti and counting formulas. Every function
// here is a formula evaluation; the matching computations by enumeration
// live in complex.hpp/homology.hpp and the tests hold the two sides equal.

// f-polynomial of the k-cut complex of a join, from the factors' cut
// complex f-polynomials on n1 and n2 vertices.
Poly f_poly_join(const Poly& f1, const Poly& f2, int n1, int n2);

// f-polynomial of the k-cut complex of the disjoint union of two cliques.
Poly f_poly_clique_union(int n1, int n2, int k);

// f-polynomial of the k-cut complex of a disjoint union; a void factor
// contributes the zero polynomial.
Poly f_poly_disjoint_union(const Poly& f1, const Poly& f2, int n1, int n2, int k);

// h-polynomial of the k-cut complex of two disjoint cliques. Defined for all
// k >= 2: past the vertex count the complex is void and the result is 0.
Poly h_poly_clique_union(int n1, int n2, int k);
// Product form that only exists at k = 2; asserted equal to the general one.
Poly h_poly_clique_union_k2(int n1, int n2);

// h-polynomial of the k-cut complex of a disjoint union from the factors'.
// Pass the zero polynomial for a void factor; its shifted term drops out.
Poly h_poly_disjoint_union(const Poly& h1, const Poly& h2, int n1, int n2, int k);

// Spheres in the wedge decomposition of a disjoint union from the factors'.
long long wedge_count_disjoint_union(long long w1, long long w2, int n1, int n2, int k);

// Top reduced Betti number of the k-cut complex of two disjoint cliques
// K_m + K_n; requires m + n > k >= 2.
long long clique_union_betti(int m, int n, int k);

struct SquaredPathBetti {
  long long value = 0;
  bool conjectural = false;  // true outside the proved parameter ranges
};

// Top reduced Betti number of the k-cut complex of the squared path.
// Exact for k = 3 (n >= 5), n = k+2 and n = k+3; conjectural closed forms
// for k = 4, 5. Requires k >= 3, n >= k+2; throws domain_error for k >= 6
// with n >= k+4, where no predicted value exists.
SquaredPathBetti squared_path_betti(int k, int n);

// Grid formulas; m, n >= 2 unless stated.
long long grid_tau3(int m, int n);        // connected 3-subsets
long long grid_connected4(int m, int n);  // connected 4-subsets
long long grid_betti_delta3(int m, int n);
long long grid_num_4cycles(int m, int n);
long long grid_num_6cycles(int m, int n);  // 6-cycle subgraphs, all chorded

// A predicted invariant of a named complex, with the quantity labeled so the
// harness can compare it against enumeration.
struct PredictedInvariant {
  std::string family;
  std::map<std::string, long long> params;
  std::string quantity;
  long long value = 0;
  std::string source;  // "exact" or "conjectural"
  std::map<std::string, long long> extra;
};

// Signed reduced Euler characteristic predictions for grid cut complexes,
// k in {2, 4, 5, 6}; for k = 5 also the facet count. Enumeration of
// connected sets stands in for the tau counts, the prediction being the
// binomial expression they feed.
PredictedInvariant grid_euler_predictions(int m, int n, int k);

// The one-dimensional cut complexes at k = mn-2: facet count and homology.
PredictedInvariant grid_1dim_predictions(int m, int n);

enum class FaceLatticeMode {
  Antichain,            // every connected k-set stays a blocker under swaps
  AntichainPlusCycles,  // same, modulo induced (k+1)-cycles, which must absorb
};

struct FaceLatticeReport {
  bool holds = true;
  Mask witness_set = 0;  // first failing set
  int witness_x = 0;     // the vertex that breaks it
  std::string which;     // "antichain" or "cycle-absorption"
};

// Checks the combinatorial condition under which the face poset of the
// k-cut complex is the truncated Boolean lattice minus the blockers.
// AntichainPlusCycles requires k >= 3.
FaceLatticeReport face_lattice_condition(const Graph& g, int k, FaceLatticeMode mode);

// Betti number of the 3-cut complex of a graph glued from a piece A and a
// triangle B along an edge, every edge inside A or B. Computes the A part by
// enumeration; the gluing adds one sphere per vertex isolated from B.
long long gen_wedge_delta3_betti(const Graph& g, Mask a, Mask b);

}  // namespace kcut
