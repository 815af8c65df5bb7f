#pragma once

#include <vector>

namespace kcut {

// Dense integer polynomial in one variable. Invariant: no trailing zero
// coefficients, so the zero polynomial is the empty vector and degree() is
// coeffs().size()-1. coeff(i) reads as 0 beyond the stored range, which lets
// callers treat an h-polynomial as having d+1 slots regardless of trimming.
class Poly {
 public:
  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly one() { return from_coeffs({1}); }
  static Poly from_coeffs(std::vector<long long> c);
  static Poly monomial(int k, long long c = 1);
  // (1 + x)^n
  static Poly one_plus_x_pow(int n);
  // 1 + x + ... + x^{n-1}
  static Poly geometric(int n);

  const std::vector<long long>& coeffs() const { return c_; }
  long long coeff(int i) const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  long long sum_of_coeffs() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  // x^k * this
  Poly shifted(int k) const;

  bool operator==(const Poly& o) const = default;

 private:
  std::vector<long long> c_;
};

}  // namespace kcut
