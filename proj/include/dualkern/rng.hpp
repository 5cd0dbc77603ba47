#pragma once

#include <cstdint>
#include <random>

#include "dualkern/types.hpp"

namespace dualkern {

/// splitmix64 mix; derives independent child seeds from a master seed so
/// that restarts and checks are order-independent and reproducible.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double gaussian() { return normal_(eng_); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }
  std::uint64_t integer(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(eng_);
  }
  bool coin() { return integer(2) == 1; }

  std::vector<double> gaussian_reals(std::size_t n) {
    std::vector<double> r(n);
    for (double& x : r) x = gaussian();
    return r;
  }

  Vector gaussian_real_vector(std::size_t dim) {
    Vector v;
    v.coords.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) v.coords.emplace_back(gaussian());
    return v;
  }

  Vector gaussian_complex_vector(std::size_t dim) {
    Vector v;
    v.coords.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) v.coords.emplace_back(gaussian(), gaussian());
    return v;
  }

  Vector gaussian_vector(std::size_t dim, bool complex_field) {
    return complex_field ? gaussian_complex_vector(dim) : gaussian_real_vector(dim);
  }

 private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace dualkern
