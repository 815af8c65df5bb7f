#include "kcut/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace kcut {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  int n = static_cast<int>(img_.size());
  if (n > kMaxVertices) throw std::invalid_argument("permutation: n > 64");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : img_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
      throw std::invalid_argument("permutation: image table is not a bijection");
    seen[static_cast<size_t>(v - 1)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) img[static_cast<size_t>(i - 1)] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) img[static_cast<size_t>(i - 1)] = i;
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > n) throw std::invalid_argument("permutation: cycle entry out of range");
      img[static_cast<size_t>(from - 1)] = to;
    }
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (n() != o.n()) throw std::invalid_argument("permutation: size mismatch");
  std::vector<int> img(static_cast<size_t>(n()));
  for (int i = 1; i <= n(); ++i) img[static_cast<size_t>(i - 1)] = (*this)(o(i));
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(static_cast<size_t>(n()));
  for (int i = 1; i <= n(); ++i) img[static_cast<size_t>((*this)(i)-1)] = i;
  return Permutation(std::move(img));
}

Mask Permutation::apply(Mask m) const {
  Mask r = 0;
  while (m) {
    int v = lowest_vertex(m);
    m &= m - 1;
    r |= vertex_bit((*this)(v));
  }
  return r;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<char> seen(static_cast<size_t>(n()), 0);
  std::vector<int> parts;
  for (int i = 1; i <= n(); ++i) {
    if (seen[static_cast<size_t>(i - 1)]) continue;
    int len = 0, j = i;
    do {
      seen[static_cast<size_t>(j - 1)] = 1;
      j = (*this)(j);
      ++len;
    } while (j != i);
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

int Permutation::sign_on_fixed_set(Mask fixed) const {
  // Sign of the permutation the action induces on the sorted vertex list of
  // the set, computed as (-1)^(size - cycles).
  if (apply(fixed) != fixed) throw std::invalid_argument("permutation: set not fixed");
  int size = popcount(fixed);
  int cycles = 0;
  Mask seen = 0;
  Mask rest = fixed;
  while (rest) {
    int start = lowest_vertex(rest);
    rest &= rest - 1;
    if (contains_vertex(seen, start)) continue;
    int j = start;
    do {
      seen |= vertex_bit(j);
      j = (*this)(j);
    } while (j != start);
    ++cycles;
  }
  return ((size - cycles) % 2 == 0) ? 1 : -1;
}

int sign_of_cycle_type(const std::vector<int>& type) {
  int transpositions = 0;
  for (int part : type) transpositions += part - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

}  // namespace kcut
