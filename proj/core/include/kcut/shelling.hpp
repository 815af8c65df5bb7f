#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kcut/complex.hpp"
#include "kcut/poly.hpp"

namespace kcut {

// Shelling certificate: the facet order, the restriction face r(F_j) of each
// facet (the unique minimal face not covered by earlier facets), and the
// number of facets with r(F) = F. The certificate is only produced once the
// order has passed verification, so sum over j of 2^(|F_j| - |r(F_j)|)
// equals the total face count.
struct ShellingCertificate {
  std::vector<Mask> order;
  std::vector<Mask> restrictions;
  long long full_restriction_count = 0;
};

struct ShellingVerification {
  bool ok = false;
  ShellingCertificate certificate;  // filled when ok
  int violation_i = -1;             // 1-based positions when not ok
  int violation_j = -1;
  std::string reason;
};

// Checks the pairwise shelling condition and computes restrictions.
// Rejects nonpure complexes and the void complex; an order that is not a
// permutation of the facets reports ok = false with a reason.
ShellingVerification verify_shelling(const Complex& c, const std::vector<Mask>& order);

enum class SearchStatus { Found, None, Undecided };

struct ShellingSearch {
  SearchStatus status = SearchStatus::Undecided;
  std::vector<Mask> order;              // when Found
  ShellingCertificate certificate;      // when Found
  std::uint64_t explored = 0;           // search tree nodes visited
  std::string note;
};

struct ShellingSearchOptions {
  // Refuse instances with more facets than this; memoization state is one
  // word, so 64 is the hard ceiling.
  int max_facets = 25;
  std::uint64_t max_nodes = 20'000'000;
};

// Backtracking over partial shelling orders with dead-prefix memoization on
// the placed facet set. Exhausting the space proves None; hitting the node
// budget returns Undecided with the count.
ShellingSearch find_shelling(const Complex& c, ShellingSearchOptions opts = {});

// Facets of the k-cut complex of the squared path, from the interval
// characterization rather than connectivity checks. 2 <= k <= n-2.
std::vector<Mask> squared_path_facets(int n, int k);

// The grouped shelling order for the squared path cut complex; valid for
// k >= 2, n >= k+3.
std::vector<Mask> squared_path_shelling(int n, int k);

// h-polynomial read off a certificate: h_i counts facets with |r(F)| = i.
Poly h_from_certificate(const ShellingCertificate& cert);

}  // namespace kcut
