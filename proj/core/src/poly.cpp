#include "kcut/poly.hpp"

#include <stdexcept>

namespace kcut {

namespace {

void trim(std::vector<long long>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("poly: add overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("poly: mul overflow");
  return r;
}

}  // namespace

Poly Poly::from_coeffs(std::vector<long long> c) {
  trim(c);
  Poly p;
  p.c_ = std::move(c);
  return p;
}

Poly Poly::monomial(int k, long long c) {
  if (k < 0) throw std::invalid_argument("poly: negative exponent");
  std::vector<long long> v(static_cast<size_t>(k) + 1, 0);
  v.back() = c;
  return from_coeffs(std::move(v));
}

Poly Poly::one_plus_x_pow(int n) {
  if (n < 0) throw std::invalid_argument("poly: negative power");
  std::vector<long long> v(static_cast<size_t>(n) + 1);
  v[0] = 1;
  for (int i = 1; i <= n; ++i)
    v[static_cast<size_t>(i)] =
        v[static_cast<size_t>(i - 1)] * (n - i + 1) / i;
  return from_coeffs(std::move(v));
}

Poly Poly::geometric(int n) {
  if (n < 0) throw std::invalid_argument("poly: negative length");
  return from_coeffs(std::vector<long long>(static_cast<size_t>(n), 1));
}

long long Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(i)];
}

long long Poly::sum_of_coeffs() const {
  long long s = 0;
  for (long long v : c_) s = checked_add(s, v);
  return s;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<long long> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = checked_add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return from_coeffs(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<long long> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = checked_add(coeff(static_cast<int>(i)), -o.coeff(static_cast<int>(i)));
  return from_coeffs(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<long long> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = checked_add(r[i + j], checked_mul(c_[i], o.c_[j]));
  return from_coeffs(std::move(r));
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("poly: negative shift");
  if (is_zero()) return zero();
  std::vector<long long> r(c_.size() + static_cast<size_t>(k), 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i + static_cast<size_t>(k)] = c_[i];
  return from_coeffs(std::move(r));
}

}  // namespace kcut
