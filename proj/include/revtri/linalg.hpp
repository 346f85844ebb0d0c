#pragma once

// Dense vectors over C^d with the standard inner product <x, y> = sum x_i conj(y_i).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "revtri/error.hpp"

namespace revtri {

using Complex = std::complex<double>;

inline constexpr Complex imag_unit{0.0, 1.0};

/// Admission tolerance for unit norm and orthonormality.
inline constexpr double unit_tol = 1e-9;

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

class Vector {
 public:
  explicit Vector(std::vector<Complex> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error(ErrorKind::input, "vector must have dimension >= 1");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (!is_finite(entries_[i]))
        throw Error(ErrorKind::input, "non-finite entry at index " + std::to_string(i));
    }
  }

  Vector(std::initializer_list<Complex> entries) : Vector(std::vector<Complex>(entries)) {}

  static Vector zeros(std::size_t dim) { return Vector(std::vector<Complex>(dim)); }

  /// k-th standard basis vector of C^dim.
  static Vector basis(std::size_t dim, std::size_t k) {
    std::vector<Complex> v(dim);
    v.at(k) = 1.0;
    return Vector(std::move(v));
  }

  std::size_t dim() const noexcept { return entries_.size(); }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  Vector& operator+=(const Vector& other) {
    require_same_dim(other);
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] += other.entries_[i];
    return *this;
  }

  Vector& operator-=(const Vector& other) {
    require_same_dim(other);
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= other.entries_[i];
    return *this;
  }

  Vector& operator*=(Complex alpha) {
    for (auto& z : entries_) z *= alpha;
    return *this;
  }

  friend Vector operator+(Vector x, const Vector& y) { return x += y; }
  friend Vector operator-(Vector x, const Vector& y) { return x -= y; }
  friend Vector operator*(Complex alpha, Vector x) { return x *= alpha; }
  friend Vector operator*(Vector x, Complex alpha) { return x *= alpha; }
  friend bool operator==(const Vector&, const Vector&) = default;

  void require_same_dim(const Vector& other) const {
    if (other.dim() != dim())
      throw Error(ErrorKind::input, "dimension mismatch: " + std::to_string(dim()) + " vs " +
                                        std::to_string(other.dim()));
  }

 private:
  std::vector<Complex> entries_;
};

/// Conjugate-linear in the second argument.
inline Complex inner(const Vector& x, const Vector& y) {
  x.require_same_dim(y);
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < x.dim(); ++i) acc += x[i] * std::conj(y[i]);
  return acc;
}

inline double squared_norm(const Vector& x) {
  double acc = 0.0;
  for (const auto& z : x) acc += std::norm(z);
  return acc;
}

inline double norm(const Vector& x) { return std::sqrt(squared_norm(x)); }

inline double distance(const Vector& x, const Vector& y) { return norm(x - y); }

/// A unit vector e with | ||e|| - 1 | <= unit_tol.
class Reference {
 public:
  explicit Reference(Vector e) : e_(std::move(e)) {
    const double n = norm(e_);
    if (std::abs(n - 1.0) > unit_tol)
      throw Error(ErrorKind::non_unit, "reference must have unit norm, got " + std::to_string(n));
  }

  /// Rescales a non-zero vector to unit norm.
  static Reference normalized(const Vector& v) {
    const double n = norm(v);
    if (n == 0.0) throw Error(ErrorKind::input, "cannot normalize the zero vector");
    return Reference(v * Complex(1.0 / n));
  }

  const Vector& vector() const noexcept { return e_; }
  std::size_t dim() const noexcept { return e_.dim(); }

 private:
  Vector e_;
};

/// m <= d vectors with max |<e_i, e_j> - delta_ij| <= unit_tol.
class OrthonormalFamily {
 public:
  explicit OrthonormalFamily(std::vector<Vector> members) : members_(std::move(members)) {
    if (members_.empty()) throw Error(ErrorKind::input, "orthonormal family must be nonempty");
    const std::size_t d = members_.front().dim();
    for (const auto& v : members_) {
      if (v.dim() != d) throw Error(ErrorKind::input, "orthonormal family has mixed dimensions");
    }
    if (members_.size() > d)
      throw Error(ErrorKind::input, "orthonormal family larger than the dimension");
    for (std::size_t i = 0; i < members_.size(); ++i) {
      for (std::size_t j = i; j < members_.size(); ++j) {
        const Complex g = inner(members_[i], members_[j]);
        const double dev = std::abs(g - Complex(i == j ? 1.0 : 0.0));
        if (dev > unit_tol)
          throw Error(ErrorKind::non_orthonormal,
                      "orthonormality violated by pair (" + std::to_string(i) + ", " +
                          std::to_string(j) + "), deviation " + std::to_string(dev),
                      i, j);
      }
    }
  }

  std::size_t size() const noexcept { return members_.size(); }
  std::size_t dim() const noexcept { return members_.front().dim(); }
  const Vector& operator[](std::size_t k) const { return members_[k]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

 private:
  std::vector<Vector> members_;
};

/// Nonempty ordered list of equal-dimension vectors.
class VectorFamily {
 public:
  explicit VectorFamily(std::vector<Vector> vectors) : vectors_(std::move(vectors)) {
    if (vectors_.empty()) throw Error(ErrorKind::input, "vector family must be nonempty");
    const std::size_t d = vectors_.front().dim();
    for (std::size_t k = 0; k < vectors_.size(); ++k) {
      if (vectors_[k].dim() != d)
        throw Error(ErrorKind::input, "vector " + std::to_string(k) + " has dimension " +
                                          std::to_string(vectors_[k].dim()) + ", expected " +
                                          std::to_string(d));
    }
  }

  VectorFamily(std::initializer_list<Vector> vectors)
      : VectorFamily(std::vector<Vector>(vectors)) {}

  std::size_t size() const noexcept { return vectors_.size(); }
  std::size_t dim() const noexcept { return vectors_.front().dim(); }
  const Vector& operator[](std::size_t k) const { return vectors_[k]; }
  auto begin() const noexcept { return vectors_.begin(); }
  auto end() const noexcept { return vectors_.end(); }
  const std::vector<Vector>& vectors() const noexcept { return vectors_; }

  friend bool operator==(const VectorFamily&, const VectorFamily&) = default;

 private:
  std::vector<Vector> vectors_;
};

/// Componentwise sum, accumulated left to right.
inline Vector family_sum(const VectorFamily& family) {
  Vector acc = Vector::zeros(family.dim());
  for (const auto& x : family) acc += x;
  return acc;
}

inline double sum_of_norms(const VectorFamily& family) {
  double acc = 0.0;
  for (const auto& x : family) acc += norm(x);
  return acc;
}

/// sum_k <x, e_k> e_k
inline Vector projection(const Vector& x, const OrthonormalFamily& basis) {
  Vector acc = Vector::zeros(x.dim());
  for (const auto& e : basis) acc += inner(x, e) * e;
  return acc;
}

/// sum_k |<x, e_k>|^2, bounded above by ||x||^2.
inline double bessel_sum(const Vector& x, const OrthonormalFamily& basis) {
  double acc = 0.0;
  for (const auto& e : basis) acc += std::norm(inner(x, e));
  return acc;
}

/// ||x - sum_k <x, e_k> e_k||^2, evaluated directly from the residual vector.
inline double projection_residual(const Vector& x, const OrthonormalFamily& basis) {
  x.require_same_dim(basis[0]);
  return squared_norm(x - projection(x, basis));
}

/// Modified Gram-Schmidt with one reorthogonalization pass.
inline OrthonormalFamily orthonormalize(const std::vector<Vector>& vectors) {
  std::vector<Vector> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) {
    Vector w = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : out) w -= inner(w, q) * q;
    }
    const double n = norm(w);
    if (n <= 1e-12 * std::max(1.0, norm(v)))
      throw Error(ErrorKind::input, "vectors are linearly dependent");
    out.push_back(w * Complex(1.0 / n));
  }
  return OrthonormalFamily(std::move(out));
}

}  // namespace revtri
