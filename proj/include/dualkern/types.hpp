#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dualkern {

using Cx = std::complex<double>;

/// Element of a finite-dimensional space, coordinates under the standard basis.
struct Vector {
  std::vector<Cx> coords;

  Vector() = default;
  explicit Vector(std::vector<Cx> c) : coords(std::move(c)) {}
  Vector(std::initializer_list<Cx> c) : coords(c) {}

  static Vector zero(std::size_t dim) { return Vector(std::vector<Cx>(dim, Cx(0.0))); }
  static Vector of_real(const std::vector<double>& r) {
    Vector v;
    v.coords.assign(r.begin(), r.end());
    return v;
  }

  std::size_t dim() const { return coords.size(); }
  bool is_zero() const {
    for (const Cx& c : coords)
      if (c != Cx(0.0)) return false;
    return true;
  }
};

/// Linear functional, applied through the bilinear pairing
/// lam(v) = sum_i coeffs[i] * v[i]  (no conjugation).
struct Functional {
  std::vector<Cx> coeffs;

  Functional() = default;
  explicit Functional(std::vector<Cx> c) : coeffs(std::move(c)) {}
  Functional(std::initializer_list<Cx> c) : coeffs(c) {}

  static Functional zero(std::size_t dim) { return Functional(std::vector<Cx>(dim, Cx(0.0))); }
  static Functional of_real(const std::vector<double>& r) {
    Functional f;
    f.coeffs.assign(r.begin(), r.end());
    return f;
  }
  static Functional basis(std::size_t dim, std::size_t index) {
    Functional f = zero(dim);
    f.coeffs.at(index) = Cx(1.0);
    return f;
  }

  std::size_t dim() const { return coeffs.size(); }
  bool is_zero() const {
    for (const Cx& c : coeffs)
      if (c != Cx(0.0)) return false;
    return true;
  }
};

inline Cx apply(const Functional& lam, const Vector& v) {
  if (lam.dim() != v.dim())
    throw std::invalid_argument("functional/vector dimension mismatch: " +
                                std::to_string(lam.dim()) + " vs " + std::to_string(v.dim()));
  Cx acc(0.0);
  for (std::size_t i = 0; i < v.dim(); ++i) acc += lam.coeffs[i] * v.coords[i];
  return acc;
}

/// conj(z)/|z| for z != 0, else 0.  Multiplied against z it yields |z|.
inline Cx unit_conj_phase(const Cx& z) {
  const double m = std::abs(z);
  if (m == 0.0) return Cx(0.0);
  return std::conj(z) / m;
}

inline Vector operator+(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("vector dimension mismatch in +");
  Vector r = a;
  for (std::size_t i = 0; i < r.dim(); ++i) r.coords[i] += b.coords[i];
  return r;
}

inline Vector operator*(const Cx& alpha, const Vector& v) {
  Vector r = v;
  for (Cx& c : r.coords) c *= alpha;
  return r;
}

}  // namespace dualkern
