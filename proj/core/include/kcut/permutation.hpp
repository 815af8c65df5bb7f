#pragma once

#include <vector>

#include "kcut/bits.hpp"

namespace kcut {

// Permutation of {1,...,n}, stored as the image table. Composition is
// right-to-left: (a * b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  // Product of disjoint cycles over {1..n}; unmentioned points are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int v) const { return img_[v - 1]; }
  bool is_identity() const;
  bool operator==(const Permutation& o) const = default;

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;

  Mask apply(Mask m) const;
  // Cycle type as a partition of n, parts descending.
  std::vector<int> cycle_type() const;
  // Sign of the permutation induced on the elements of a setwise-fixed mask.
  // Precondition: apply(fixed) == fixed.
  int sign_on_fixed_set(Mask fixed) const;

 private:
  std::vector<int> img_;
};

int sign_of_cycle_type(const std::vector<int>& type);

}  // namespace kcut
