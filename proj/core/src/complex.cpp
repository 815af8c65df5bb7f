#include "kcut/complex.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "kcut/binomial.hpp"

namespace kcut {

struct Complex::FaceCache {
  std::once_flag once;
  // by_dim[d+1] holds the d-faces, lex sorted; index 0 is the empty face.
  std::vector<std::vector<Mask>> by_dim;
};

Complex::Complex(int n, bool isvoid, std::vector<Mask> facets)
    : n_(n), void_(isvoid), facets_(std::move(facets)),
      cache_(std::make_shared<FaceCache>()) {}

Complex Complex::void_complex(int n) { return Complex(n, true, {}); }

Complex Complex::empty_face_complex(int n) { return Complex(n, false, {0}); }

Complex Complex::simplex(int n) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("simplex: bad universe");
  return Complex(n, false, {full_mask(n)});
}

Complex Complex::from_facets(int n, std::vector<Mask> facets) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("complex: bad universe");
  for (Mask f : facets)
    if (f & ~full_mask(n)) throw std::invalid_argument("complex: facet outside universe");
  if (facets.empty()) return void_complex(n);
  std::sort(facets.begin(), facets.end(),
            [](Mask a, Mask b) { return popcount(a) > popcount(b); });
  std::vector<Mask> maximal;
  for (Mask f : facets) {
    bool covered = false;
    for (Mask g : maximal)
      if ((f & ~g) == 0) {
        covered = true;
        break;
      }
    if (!covered) maximal.push_back(f);
  }
  std::sort(maximal.begin(), maximal.end(), lex_less);
  return Complex(n, false, std::move(maximal));
}

bool Complex::is_empty_face_only() const {
  return !void_ && facets_.size() == 1 && facets_[0] == 0;
}

int Complex::dim() const {
  if (void_) throw std::invalid_argument("dim: void complex");
  int d = -1;
  for (Mask f : facets_) d = std::max(d, popcount(f) - 1);
  return d;
}

bool Complex::is_face(Mask f) const {
  if (void_) return false;
  for (Mask g : facets_)
    if ((f & ~g) == 0) return true;
  return false;
}

void Complex::ensure_faces() const {
  std::call_once(cache_->once, [this] {
    int top = dim();
    auto& levels = cache_->by_dim;
    levels.assign(static_cast<size_t>(top) + 2, {});
    for (Mask f : facets_) levels[static_cast<size_t>(popcount(f))].push_back(f);
    for (int size = top + 1; size >= 1; --size) {
      auto& cur = levels[static_cast<size_t>(size)];
      std::sort(cur.begin(), cur.end(), lex_less);
      cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
      auto& below = levels[static_cast<size_t>(size - 1)];
      for (Mask f : cur) {
        Mask rest = f;
        while (rest) {
          Mask low = rest & (~rest + 1);
          rest &= rest - 1;
          below.push_back(f & ~low);
        }
      }
    }
    auto& empties = levels[0];
    empties.clear();
    empties.push_back(0);
  });
}

const std::vector<Mask>& Complex::faces(int d) const {
  if (void_) throw std::invalid_argument("faces: void complex");
  if (d < -1 || d > dim()) throw std::invalid_argument("faces: dimension out of range");
  ensure_faces();
  return cache_->by_dim[static_cast<size_t>(d + 1)];
}

long long Complex::face_count() const {
  if (void_) return 0;
  long long total = 0;
  for (int d = -1; d <= dim(); ++d) total += static_cast<long long>(faces(d).size());
  return total;
}

bool Complex::is_pure() const {
  if (void_ || facets_.empty()) return true;
  int size = popcount(facets_[0]);
  for (Mask f : facets_)
    if (popcount(f) != size) return false;
  return true;
}

bool Complex::has_complete_skeleton(int j) const {
  if (void_) return false;
  if (j <= 0) return true;
  if (j > dim() + 1) return false;
  return static_cast<long long>(faces(j - 1).size()) == binom(n_, j);
}

Complex cut_complex(const Graph& g, int k) {
  if (k <= 0) throw std::invalid_argument("cut_complex: k must be positive");
  if (k == 1 || k > g.n) return Complex::void_complex(g.n);
  std::vector<Mask> facets;
  std::vector<int> c = first_k_subset(k);
  Mask full = full_mask(g.n);
  do {
    Mask cut = vertices_to_mask(c);
    if (!is_connected_induced(g, cut)) facets.push_back(full & ~cut);
  } while (next_k_subset(c, g.n));
  if (facets.empty()) return Complex::void_complex(g.n);
  return Complex::from_facets(g.n, std::move(facets));
}

Poly f_polynomial(const Complex& c) {
  if (c.is_void()) return Poly::zero();
  int top = c.dim();
  std::vector<long long> f(static_cast<size_t>(top) + 2, 0);
  for (int d = -1; d <= top; ++d)
    f[static_cast<size_t>(d + 1)] = static_cast<long long>(c.faces(d).size());
  return Poly::from_coeffs(std::move(f));
}

std::vector<long long> f_vector(const Complex& c) {
  if (c.is_void()) return {};
  int top = c.dim();
  std::vector<long long> f(static_cast<size_t>(top) + 2, 0);
  for (int d = -1; d <= top; ++d)
    f[static_cast<size_t>(d + 1)] = static_cast<long long>(c.faces(d).size());
  return f;
}

Poly h_polynomial(const Complex& c) {
  if (c.is_void()) throw std::invalid_argument("h_polynomial: void complex");
  int d = c.dim() + 1;
  Poly f = f_polynomial(c);
  std::vector<long long> h(static_cast<size_t>(d) + 1, 0);
  for (int j = 0; j <= d; ++j) {
    long long v = 0;
    for (int i = 0; i <= j; ++i) {
      long long term = binom(d - i, j - i) * f.coeff(i);
      v += ((j - i) % 2 == 0) ? term : -term;
    }
    h[static_cast<size_t>(j)] = v;
  }
  return Poly::from_coeffs(std::move(h));
}

Complex skeleton(const Complex& c, int j) {
  if (c.is_void()) return Complex::void_complex(c.universe());
  if (j < -1) return Complex::void_complex(c.universe());
  if (j >= c.dim()) return c;
  std::vector<Mask> facets;
  for (Mask f : c.facets())
    if (popcount(f) - 1 < j) facets.push_back(f);
  for (Mask f : c.faces(j)) facets.push_back(f);
  return Complex::from_facets(c.universe(), std::move(facets));
}

Complex complex_join(const Complex& a, const Complex& b) {
  int n = a.universe() + b.universe();
  if (n > kMaxVertices) throw std::invalid_argument("join: combined universe too large");
  if (a.is_void() || b.is_void()) return Complex::void_complex(n);
  std::vector<Mask> facets;
  facets.reserve(a.facets().size() * b.facets().size());
  for (Mask fa : a.facets())
    for (Mask fb : b.facets()) facets.push_back(fa | (fb << a.universe()));
  return Complex::from_facets(n, std::move(facets));
}

Complex cone(const Complex& c) { return complex_join(c, Complex::simplex(1)); }

Complex suspension(const Complex& c) {
  Complex two_points = Complex::from_facets(2, {vertex_bit(1), vertex_bit(2)});
  return complex_join(c, two_points);
}

}  // namespace kcut
