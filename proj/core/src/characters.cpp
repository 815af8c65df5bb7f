#include "kcut/characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kcut/binomial.hpp"

namespace kcut {

namespace {

// Murnaghan-Nakayama specialised to hooks (k, 1^m): removing a border strip
// of length t from a hook either eats t columns off the arm (leaving
// (k-t, 1^m), needs t <= k-1), eats t cells off the leg (leaving (k, 1^(m-t)),
// sign (-1)^(t-1)), or consumes the whole hook (t = k + m, sign (-1)^m).
long long hook_chi(int k, int m, const std::vector<int>& parts, size_t at) {
  if (k == 0) return (m == 0 && at == parts.size()) ? 1 : 0;
  if (at == parts.size()) return 0;
  int t = parts[at];
  long long total = 0;
  if (t <= k - 1) total += hook_chi(k - t, m, parts, at + 1);
  if (t <= m) {
    long long sub = hook_chi(k, m - t, parts, at + 1);
    total += (t % 2 == 1) ? sub : -sub;
  }
  if (t == k + m) {
    long long sub = hook_chi(0, 0, parts, at + 1);
    total += (m % 2 == 0) ? sub : -sub;
  }
  return total;
}

std::vector<int> checked_type(int n, std::vector<int> type, const char* who) {
  long long sum = 0;
  for (int p : type) {
    if (p < 1) throw std::invalid_argument(std::string(who) + ": parts must be positive");
    sum += p;
  }
  if (sum != n) throw std::invalid_argument(std::string(who) + ": type must partition n");
  std::sort(type.begin(), type.end(), std::greater<int>());
  return type;
}

}  // namespace

long long hook_character(int n, int k, const std::vector<int>& cycle_type) {
  if (k < 1 || k > n) throw std::invalid_argument("hook character: need 1 <= k <= n");
  auto type = checked_type(n, cycle_type, "hook character");
  return hook_chi(k, n - k, type, 0);
}

long long character_clique_union(int m, int n, int k, const std::vector<int>& type_m,
                                 const std::vector<int>& type_n) {
  if (k < 2 || m + n <= k)
    throw std::invalid_argument("clique union character: need m + n > k >= 2");
  auto tm = checked_type(m, type_m, "clique union character");
  auto tn = checked_type(n, type_n, "clique union character");
  std::vector<int> concat = tm;
  concat.insert(concat.end(), tn.begin(), tn.end());
  long long value = hook_character(m + n, k, concat);
  if (k <= m) value -= hook_character(m, k, tm) * sign_of_cycle_type(tn);
  if (k <= n) value -= sign_of_cycle_type(tm) * hook_character(n, k, tn);
  return value;
}

long long character_path(int n, int k, PathElement e) {
  if (k < 3 || n < k + 2) throw std::invalid_argument("path character: need k >= 3, n >= k+2");
  if (e == PathElement::Identity) return binom(n - 1, k - 1) - (n - k + 1);
  std::vector<int> flip_type;
  for (int i = 0; i < n / 2; ++i) flip_type.push_back(2);
  if (n % 2 == 1) flip_type.push_back(1);
  long long value = hook_character(n, k, flip_type);
  if ((n - k) % 2 == 0) {
    long long unit = ((n - k) / 2 % 2 == 0) ? 1 : -1;
    value += ((n - k - 1) % 2 == 0 ? 1 : -1) * unit;
  }
  return value;
}

namespace {

// Induced character from the order-2 subgroup {id, w} of the dihedral group
// carrying the sign epsilon on w, evaluated by direct summation over the
// group (|H| = 2 divides every term sum).
long long induced_from_involution(int n, const Permutation& g, const Permutation& w,
                                  long long eps) {
  std::vector<Permutation> group = dihedral_elements(n);
  Permutation id = Permutation::identity(n);
  long long sum = 0;
  for (const Permutation& x : group) {
    Permutation conj = (x.inverse() * g) * x;
    if (conj == id)
      sum += 1;
    else if (conj == w)
      sum += eps;
  }
  if (sum % 2 != 0) throw std::logic_error("induced character: odd orbit sum");
  return sum / 2;
}

}  // namespace

long long character_cycle(int n, int k, const Permutation& g) {
  if (g.n() != n) throw std::invalid_argument("cycle character: element acts on n points");
  if (k == 2) {
    if (n < 4) throw std::invalid_argument("cycle character: k = 2 needs n >= 4");
    // One-dimensional: value on the rotation generator and the reflection
    // pin down the whole character.
    Permutation sigma = graph_automorphism(AutomorphismKind::CycleRotation, n);
    Permutation rho = graph_automorphism(AutomorphismKind::CycleReflectionRho, n);
    long long chi_sigma = (n % 2 == 1) ? 1 : -1;
    long long chi_rho =
        (n % 2 == 0) ? (((n - 2) / 2) % 2 == 0 ? 1 : -1) : (((n + 1) / 2) % 2 == 0 ? 1 : -1);
    Permutation probe = Permutation::identity(n);
    for (int j = 0; j < n; ++j) {
      if (probe == g) {
        long long v = 1;
        for (int t = 0; t < j; ++t) v *= chi_sigma;
        return v;
      }
      probe = sigma * probe;
    }
    probe = rho;
    for (int j = 0; j < n; ++j) {
      if (probe == g) {
        long long v = chi_rho;
        for (int t = 0; t < j; ++t) v *= chi_sigma;
        return v;
      }
      probe = probe * sigma;  // rho sigma^j
    }
    throw std::invalid_argument("cycle character: element is not dihedral");
  }
  if (k < 3 || n < k + 2)
    throw std::invalid_argument("cycle character: need k >= 3, n >= k+2 (or k = 2)");
  Permutation w = graph_automorphism(
      (n % 2 == 0 && k % 2 == 1) ? AutomorphismKind::CycleReflectionTau
                                 : AutomorphismKind::CycleReflectionRho,
      n);
  // The reflection fixing a facet permutes the facet's n-k vertices with
  // floor((n-k)/2) transpositions, and acts on the boundary sphere of that
  // facet by the sign of this permutation.
  long long eps = ((n - k) / 2 % 2 == 0) ? 1 : -1;
  return hook_character(n, k, g.cycle_type()) - induced_from_involution(n, g, w, eps);
}

}  // namespace kcut
