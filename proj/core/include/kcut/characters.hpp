#pragma once

#include <vector>

#include "kcut/graph.hpp"
#include "kcut/permutation.hpp"

namespace kcut {

// Character of the symmetric group irreducible indexed by the hook
// (k, 1^(n-k)) at the given cycle type (a partition of n), by the
// Murnaghan-Nakayama rule. Requires 1 <= k <= n.
long long hook_character(int n, int k, const std::vector<int>& cycle_type);

// Trace of (g_m, g_n) on the top homology of the k-cut complex of two
// disjoint cliques, from the restricted-hook description. Cycle types
// partition m and n; requires m + n > k >= 2.
long long character_clique_union(int m, int n, int k,
                                 const std::vector<int>& type_m,
                                 const std::vector<int>& type_n);

enum class PathElement { Identity, Flip };

// Trace of the path automorphism on the top homology of the k-cut complex
// of the path. Requires k >= 3, n >= k+2.
long long character_path(int n, int k, PathElement e);

// Trace of a dihedral element on the top homology of the k-cut complex of
// the cycle. Valid for k >= 3, n >= k+2 (hook minus an induced character),
// and for k = 2, n >= 4 (one-dimensional representation).
long long character_cycle(int n, int k, const Permutation& g);

}  // namespace kcut
