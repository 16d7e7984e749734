#pragma once

// Seeded generators for the property tests.

#include "spinstat/matrix.hpp"

#include <random>

namespace spinstat::testgen {

inline Rational small_rational(std::mt19937& rng, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 4);
  return Rational(num(rng), den(rng));
}

inline Scalar small_scalar(std::mt19937& rng, bool complex = true) {
  if (!complex) return small_rational(rng);
  return {small_rational(rng), small_rational(rng)};
}

inline ExactMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                 bool complex = true) {
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = small_scalar(rng, complex);
  return m;
}

/// Random matrix with roughly a third of its entries zero, so kernels appear.
inline ExactMatrix random_sparse(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  ExactMatrix m = random_matrix(rng, rows, cols);
  std::bernoulli_distribution keep(0.6);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (!keep(rng)) m(r, c) = 0;
  return m;
}

inline ExactMatrix random_antisymmetric(std::mt19937& rng, std::size_t n, bool complex = false) {
  ExactMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) {
      m(r, c) = small_scalar(rng, complex);
      m(c, r) = -m(r, c);
    }
  return m;
}

inline ExactMatrix random_symmetric(std::mt19937& rng, std::size_t n, bool complex = false) {
  ExactMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) {
      m(r, c) = small_scalar(rng, complex);
      m(c, r) = m(r, c);
    }
  return m;
}

}  // namespace spinstat::testgen
