#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "kcut/binomial.hpp"
#include "kcut/complex.hpp"
#include "kcut/graph.hpp"

using namespace kcut;

TEST_CASE("void vs empty-face complex") {
  Complex v = Complex::void_complex(4);
  CHECK(v.is_void());
  CHECK(v.facet_count() == 0);
  CHECK(v.face_count() == 0);
  CHECK_THROWS_AS(v.dim(), std::logic_error);
  CHECK(f_polynomial(v) == Poly::zero());
  CHECK_THROWS_AS(h_polynomial(v), std::logic_error);

  Complex e = Complex::empty_face_complex(4);
  CHECK(!e.is_void());
  CHECK(e.is_empty_face_only());
  CHECK(e.dim() == -1);
  CHECK(e.face_count() == 1);
  CHECK(e.is_face(0));
  CHECK(f_polynomial(e) == Poly::one());
}

TEST_CASE("from_facets drops non-maximal sets and duplicates") {
  Complex c = Complex::from_facets(4, {vertices_to_mask({1, 2}),
                                       vertices_to_mask({1}),
                                       vertices_to_mask({1, 2}),
                                       vertices_to_mask({3, 4})});
  CHECK(c.facet_count() == 2);
  CHECK(c.facets() == std::vector<Mask>{vertices_to_mask({1, 2}), vertices_to_mask({3, 4})});
  CHECK(c.dim() == 1);
  CHECK(c.is_face(vertices_to_mask({1})));
  CHECK(c.is_face(0));
  CHECK(!c.is_face(vertices_to_mask({1, 3})));
  CHECK(c.face_count() == 1 + 4 + 2);
}

TEST_CASE("simplex counts") {
  Complex s = Complex::simplex(4);
  CHECK(s.dim() == 3);
  CHECK(s.face_count() == 16);
  CHECK(s.is_pure());
  CHECK(s.has_complete_skeleton(2));
  CHECK(s.has_complete_skeleton(4));
  for (int d = -1; d <= 3; ++d)
    CHECK(static_cast<long long>(s.faces(d).size()) == binom(4, d + 1));
  // faces arrive in lex order
  const auto& edges = s.faces(1);
  for (size_t i = 1; i < edges.size(); ++i) CHECK(lex_less(edges[i - 1], edges[i]));
}

TEST_CASE("cut complex degenerate cases") {
  Graph p4 = path_graph(4);
  CHECK_THROWS_AS(cut_complex(p4, 0), std::invalid_argument);
  CHECK(cut_complex(p4, 1).is_void());
  CHECK(cut_complex(p4, 5).is_void());
  // k = n: {} iff the graph is disconnected
  CHECK(cut_complex(p4, 4).is_void());
  Graph two = disjoint_union(path_graph(2), path_graph(2));
  Complex c = cut_complex(two, 4);
  CHECK(c.is_empty_face_only());
  // complete graphs have no disconnected subsets at all
  for (int k = 2; k <= 5; ++k) CHECK(cut_complex(complete_graph(5), k).is_void());
}

TEST_CASE("2-cut complex of the pentagon") {
  Complex c = cut_complex(cycle_graph(5), 2);
  CHECK(c.facet_count() == 5);
  CHECK(c.dim() == 2);
  CHECK(c.is_pure());
  std::vector<Mask> expected;
  // complements of the five non-edges
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      if (!cycle_graph(5).adjacent(i, j))
        expected.push_back(full_mask(5) & ~(vertex_bit(i) | vertex_bit(j)));
  std::sort(expected.begin(), expected.end(), lex_less);
  CHECK(c.facets() == expected);
  CHECK(f_vector(c) == std::vector<long long>{1, 5, 10, 5});
}

TEST_CASE("cut complexes of edgeless graphs are skeleta of a simplex") {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 2; k < n; ++k) {
      Complex c = cut_complex(edgeless_graph(n), k);
      Complex s = skeleton(Complex::simplex(n), n - k - 1);
      CHECK(c.facets() == s.facets());
      CHECK(c.facet_count() == binom(n, k));
      CHECK(c.has_complete_skeleton(n - k));
      CHECK(!c.has_complete_skeleton(n - k + 1));
    }
  }
}

TEST_CASE("facet count complements the connected k-set count") {
  for (int k = 2; k <= 5; ++k) {
    Graph g = grid_graph(2, 3);
    Complex c = cut_complex(g, k);
    long long connected = static_cast<long long>(connected_k_subsets(g, k).size());
    CHECK(c.facet_count() == binom(6, k) - connected);
  }
}

TEST_CASE("f and h polynomials") {
  // two disjoint edges: f = (1, 4, 4), h = (1, 2, 1)
  Complex c = cut_complex(disjoint_union(complete_graph(2), complete_graph(2)), 2);
  CHECK(f_vector(c) == std::vector<long long>{1, 4, 4});
  CHECK(h_polynomial(c) == Poly::from_coeffs({1, 2, 1}));

  // skeleton h-polynomial, checked against the closed form
  Complex sk = cut_complex(edgeless_graph(5), 2);
  CHECK(h_polynomial(sk) == Poly::from_coeffs({1, 2, 3, 4}));
  for (int n = 3; n <= 6; ++n) {
    for (int k = 2; k < n; ++k) {
      Poly h = h_polynomial(cut_complex(edgeless_graph(n), k));
      Poly want = Poly::zero();
      for (int i = 0; i <= n - k; ++i)
        want = want + Poly::monomial(i, binom(k - 1 + i, i));
      CHECK(h == want);
    }
  }

  // h sums to the facet count on pure complexes
  Complex pent = cut_complex(cycle_graph(5), 2);
  CHECK(h_polynomial(pent).sum_of_coeffs() == pent.facet_count());
}

TEST_CASE("join, cone, suspension") {
  Complex a = Complex::simplex(2);
  Complex b = Complex::simplex(3);
  Complex j = complex_join(a, b);
  CHECK(j.universe() == 5);
  CHECK(j.facets() == Complex::simplex(5).facets());

  Complex pent = cut_complex(cycle_graph(5), 2);
  Complex cn = cone(pent);
  CHECK(cn.universe() == 6);
  CHECK(cn.facet_count() == pent.facet_count());
  CHECK(cn.dim() == pent.dim() + 1);
  for (Mask f : cn.facets()) CHECK(contains_vertex(f, 6));

  Complex sus = suspension(pent);
  CHECK(sus.universe() == 7);
  CHECK(sus.facet_count() == 2 * pent.facet_count());
  CHECK(sus.dim() == pent.dim() + 1);

  // join with {} is the identity up to relabeling
  Complex ej = complex_join(Complex::empty_face_complex(2), pent);
  CHECK(ej.universe() == 7);
  CHECK(ej.facet_count() == pent.facet_count());
  CHECK(ej.dim() == pent.dim());

  // join with the void complex is void
  CHECK(complex_join(Complex::void_complex(2), pent).is_void());
}

TEST_CASE("f polynomial of a join multiplies") {
  Complex a = cut_complex(cycle_graph(4), 2);
  Complex b = cut_complex(path_graph(3), 2);
  Complex j = complex_join(a, b);
  CHECK(f_polynomial(j) == f_polynomial(a) * f_polynomial(b));
}
