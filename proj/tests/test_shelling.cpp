#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "kcut/binomial.hpp"
#include "kcut/complex.hpp"
#include "kcut/graph.hpp"
#include "kcut/homology.hpp"
#include "kcut/shelling.hpp"

using namespace kcut;

TEST_CASE("triangle boundary shelling by hand") {
  Complex c = Complex::from_facets(3, {vertices_to_mask({1, 2}),
                                       vertices_to_mask({1, 3}),
                                       vertices_to_mask({2, 3})});
  std::vector<Mask> order = {vertices_to_mask({1, 2}), vertices_to_mask({1, 3}),
                             vertices_to_mask({2, 3})};
  ShellingVerification v = verify_shelling(c, order);
  REQUIRE(v.ok);
  CHECK(v.certificate.restrictions ==
        std::vector<Mask>{0, vertex_bit(3), vertices_to_mask({2, 3})});
  CHECK(v.certificate.full_restriction_count == 1);
  CHECK(h_from_certificate(v.certificate) == Poly::from_coeffs({1, 1, 1}));
  CHECK(h_from_certificate(v.certificate) == h_polynomial(c));
}

TEST_CASE("verification rejects bad inputs") {
  Complex c = Complex::from_facets(3, {vertices_to_mask({1, 2}),
                                       vertices_to_mask({1, 3}),
                                       vertices_to_mask({2, 3})});
  // not a permutation of the facets
  ShellingVerification missing =
      verify_shelling(c, {vertices_to_mask({1, 2}), vertices_to_mask({1, 3})});
  CHECK(!missing.ok);
  ShellingVerification stranger =
      verify_shelling(c, {vertices_to_mask({1, 2}), vertices_to_mask({1, 3}),
                          vertices_to_mask({1, 2, 3})});
  CHECK(!stranger.ok);
  ShellingVerification repeated =
      verify_shelling(c, {vertices_to_mask({1, 2}), vertices_to_mask({1, 2}),
                          vertices_to_mask({2, 3})});
  CHECK(!repeated.ok);

  // nonpure complexes have no shelling order in this sense
  Complex np = Complex::from_facets(4, {vertices_to_mask({1, 2, 3}), vertices_to_mask({1, 4})});
  CHECK_THROWS_AS(verify_shelling(np, np.facets()), std::invalid_argument);
  CHECK_THROWS_AS(find_shelling(np), std::invalid_argument);
}

TEST_CASE("a genuinely bad order is reported with positions") {
  // two disjoint edges cannot be shelled in any order
  Complex c = Complex::from_facets(4, {vertices_to_mask({1, 3}), vertices_to_mask({2, 4})});
  ShellingVerification v = verify_shelling(c, c.facets());
  CHECK(!v.ok);
  CHECK(v.violation_j == 2);
  CHECK(v.violation_i == 1);
  CHECK(!v.reason.empty());
}

TEST_CASE("find_shelling on small complexes") {
  // the path is chordal, so its 2-cut complex shells
  Complex good = cut_complex(path_graph(5), 2);
  ShellingSearch s = find_shelling(good);
  REQUIRE(s.status == SearchStatus::Found);
  ShellingVerification v = verify_shelling(good, s.order);
  CHECK(v.ok);
  CHECK(h_from_certificate(v.certificate) == h_polynomial(good));

  // the pentagon is not, and five facets are few enough to prove it
  Complex pent = cut_complex(cycle_graph(5), 2);
  ShellingSearch none = find_shelling(pent);
  CHECK(none.status == SearchStatus::None);

  // two disjoint edges: exhaustive search proves there is none
  Complex bad = Complex::from_facets(6, {vertices_to_mask({1, 3}), vertices_to_mask({2, 4})});
  CHECK(find_shelling(bad).status == SearchStatus::None);

  // budgets give honest Undecided answers
  ShellingSearchOptions tiny;
  tiny.max_nodes = 1;
  CHECK(find_shelling(good, tiny).status == SearchStatus::Undecided);
  ShellingSearchOptions narrow;
  narrow.max_facets = 1;
  ShellingSearch refused = find_shelling(good, narrow);
  CHECK(refused.status == SearchStatus::Undecided);
  CHECK(!refused.note.empty());
}

TEST_CASE("trivial facet counts") {
  // a single simplex shells in one step
  Complex s = Complex::from_facets(3, {vertices_to_mask({1, 2, 3})});
  ShellingSearch f = find_shelling(s);
  REQUIRE(f.status == SearchStatus::Found);
  CHECK(f.certificate.full_restriction_count == 0);
  CHECK(h_from_certificate(f.certificate) == Poly::one());
}

TEST_CASE("squared path facet characterization matches the definition") {
  for (int n = 4; n <= 9; ++n) {
    for (int k = 2; k <= n - 2; ++k) {
      std::vector<Mask> listed = squared_path_facets(n, k);
      Complex direct = cut_complex(squared_path_graph(n), k);
      std::vector<Mask> sorted = listed;
      std::sort(sorted.begin(), sorted.end(), lex_less);
      CHECK(sorted == direct.facets());
    }
  }
  CHECK_THROWS_AS(squared_path_facets(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(squared_path_facets(5, 4), std::invalid_argument);
}

TEST_CASE("squared path shelling order verifies") {
  for (int n = 5; n <= 9; ++n) {
    for (int k = 2; k <= n - 3; ++k) {
      Complex c = cut_complex(squared_path_graph(n), k);
      std::vector<Mask> order = squared_path_shelling(n, k);
      CHECK(order.size() == static_cast<size_t>(c.facet_count()));
      ShellingVerification v = verify_shelling(c, order);
      REQUIRE(v.ok);
      CHECK(h_from_certificate(v.certificate) == h_polynomial(c));
    }
  }
}

TEST_CASE("minimal squared path cut complexes are shellable cones") {
  // n = k+2: the complex is contractible with k-1 facets
  for (int k = 2; k <= 6; ++k) {
    int n = k + 2;
    Complex c = cut_complex(squared_path_graph(n), k);
    CHECK(c.facet_count() == k - 1);
    ShellingSearch s = find_shelling(c);
    REQUIRE(s.status == SearchStatus::Found);
    CHECK(s.certificate.full_restriction_count == 0);
    HomologyProfile h = homology_profile(c, false);
    for (auto [d, b] : h.betti) CHECK(b == 0);
  }
}

TEST_CASE("full restriction facets count the top Betti number") {
  for (int n = 6; n <= 9; ++n) {
    Complex c = cut_complex(squared_path_graph(n), 3);
    ShellingVerification v = verify_shelling(c, squared_path_shelling(n, 3));
    REQUIRE(v.ok);
    CHECK(v.certificate.full_restriction_count == binom(n - 4, 2));
    HomologyProfile h = homology_profile(c, false);
    CHECK(h.top_betti(c.dim()) == binom(n - 4, 2));
  }
}
