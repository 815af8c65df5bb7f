#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "kcut/graph.hpp"
#include "kcut/poly.hpp"

namespace kcut {

// Simplicial complex on a fixed vertex universe {1..n}, held by its facets.
// The void complex (no faces at all) and the complex {} whose only face is
// the empty set are distinct; the latter is stored as the single facet 0.
// Faces are enumerated per dimension on first use and cached; the cache is
// shared across copies and safe to fill from concurrent readers.
class Complex {
 public:
  static Complex void_complex(int n);
  static Complex empty_face_complex(int n);
  // Deduplicates, drops non-maximal sets, sorts facets lexicographically.
  static Complex from_facets(int n, std::vector<Mask> facets);
  static Complex simplex(int n);  // full simplex on {1..n}

  int universe() const { return n_; }
  bool is_void() const { return void_; }
  bool is_empty_face_only() const;
  const std::vector<Mask>& facets() const { return facets_; }
  long long facet_count() const { return static_cast<long long>(facets_.size()); }

  // Dimension of the complex; -1 for {}. Rejects the void complex.
  int dim() const;
  bool is_face(Mask f) const;
  // faces(d) lists the d-faces in lex order; d ranges over [-1, dim()].
  // faces(-1) is {0}. Rejects the void complex.
  const std::vector<Mask>& faces(int d) const;
  // Total face count including the empty face.
  long long face_count() const;
  bool is_pure() const;
  // True when every j-subset of the universe is a face.
  bool has_complete_skeleton(int j) const;

 private:
  struct FaceCache;
  Complex(int n, bool isvoid, std::vector<Mask> facets);
  void ensure_faces() const;

  int n_ = 0;
  bool void_ = true;
  std::vector<Mask> facets_;
  std::shared_ptr<FaceCache> cache_;
};

// The k-cut complex: faces are the sets whose complement contains a
// disconnected k-set. Facets are the (n-k)-sets with disconnected
// complement. k = 1 and k > n give the void complex; k = n gives {} when
// the graph is disconnected. k <= 0 is rejected.
Complex cut_complex(const Graph& g, int k);

// f(x) = sum f_{i-1} x^i over face cardinalities i, with f_{-1} = 1 for any
// nonvoid complex; the void complex has f = 0.
Poly f_polynomial(const Complex& c);
// h via the standard transform of f; rejects the void complex.
Poly h_polynomial(const Complex& c);

std::vector<long long> f_vector(const Complex& c);  // (f_{-1}, f_0, ..., f_dim)

Complex skeleton(const Complex& c, int j);  // faces of dimension <= j
// Join with the second complex relabeled by +n1; simplicial join of faces.
Complex complex_join(const Complex& a, const Complex& b);
Complex cone(const Complex& c);
Complex suspension(const Complex& c);

}  // namespace kcut
