#pragma once

#include <span>
#include <utility>
#include <vector>

#include "syminv/error.hpp"
#include "syminv/rational.hpp"

namespace syminv {

// Univariate polynomial over Rat, coefficients lowest degree first.
// Normalized: no trailing zero coefficients (the zero polynomial is empty).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const Rat& x) { return Poly(std::vector<Rat>{x}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat coeff(int i) const { return i >= 0 && i < int(c_.size()) ? c_[i] : Rat(0); }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat operator()(const Rat& x) const {  // Horner
    Rat v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(long(i)) * c_[i];
    return Poly(std::move(d));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    std::vector<Rat> m(c_);
    const Rat lead = c_.back();
    for (auto& x : m) x /= lead;
    return Poly(std::move(m));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Poly(std::move(c));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }

  friend Poly operator*(const Rat& s, const Poly& a) {
    std::vector<Rat> c(a.c_);
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rat> c_;
};

// Euclidean division: a = q*b + r with deg r < deg b (b nonzero).
inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  if (b.is_zero()) throw Error("poly_divmod by zero polynomial");
  std::vector<Rat> q(a.degree() >= b.degree() ? size_t(a.degree() - b.degree()) + 1 : 0,
                     Rat(0));
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const Rat f = a.leading() / b.leading();
    const int shift = a.degree() - b.degree();
    q[size_t(shift)] = f;
    std::vector<Rat> c(a.coeffs());
    for (int i = 0; i <= b.degree(); ++i) c[size_t(i + shift)] -= f * b.coeff(i);
    a = Poly(std::move(c));
  }
  return {Poly(std::move(q)), std::move(a)};
}

inline Poly poly_mod(Poly a, const Poly& b) { return poly_divmod(std::move(a), b).second; }

// Monic gcd via Euclid's algorithm; gcd(0,0) = 0.
inline Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Lagrange interpolation through distinct nodes.
inline Poly interpolate(std::span<const std::pair<Rat, Rat>> points) {
  Poly result;
  for (size_t i = 0; i < points.size(); ++i) {
    Poly term = Poly::constant(points[i].second);
    for (size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      const Rat den = points[i].first - points[j].first;
      if (den == 0) throw Error("interpolate: repeated node");
      // (X - x_j) / (x_i - x_j)
      term = term * Poly({-points[j].first / den, Rat(1) / den});
    }
    result = result + term;
  }
  return result;
}

}  // namespace syminv
