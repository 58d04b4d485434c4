#pragma once

// Test-only helpers: random fixtures and oracles that do not share code paths
// with the library routines they check.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qchan/channel.hpp"
#include "qchan/matrix.hpp"

namespace qchan::testing {

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = {normal(rng), normal(rng)};
  return m;
}

inline ComplexMatrix random_density(std::size_t d, std::mt19937_64& rng) {
  const ComplexMatrix g = random_matrix(d, d, rng);
  ComplexMatrix rho = g * adjoint(g);
  rho *= 1.0 / trace(rho).real();
  return rho;
}

/// Matrix whose columns are the row-major entries of each family member.
inline Eigen::MatrixXcd stacked_columns(const std::vector<ComplexMatrix>& family) {
  const auto n = static_cast<Eigen::Index>(family.front().size());
  Eigen::MatrixXcd s(n, static_cast<Eigen::Index>(family.size()));
  for (std::size_t c = 0; c < family.size(); ++c) {
    const auto e = family[c].entries();
    for (Eigen::Index r = 0; r < n; ++r) s(r, static_cast<Eigen::Index>(c)) = e[static_cast<std::size_t>(r)];
  }
  return s;
}

/// Column rank by full-pivot LU, a route independent of the Gram spectrum.
inline std::size_t column_rank_oracle(const std::vector<ComplexMatrix>& family, double threshold = 1e-8) {
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(stacked_columns(family));
  lu.setThreshold(threshold);
  return static_cast<std::size_t>(lu.rank());
}

/// (id (x) E)(|Omega><Omega|) summed from its definition over matrix units:
/// sum_{ij} |i><j| (x) E(|i><j|).
inline ComplexMatrix choi_by_definition(const KrausSet& k) {
  const std::size_t din = k.dim_in();
  ComplexMatrix c(din * k.dim_out(), din * k.dim_out());
  for (std::size_t i = 0; i < din; ++i)
    for (std::size_t j = 0; j < din; ++j) {
      ComplexMatrix unit(din, din);
      unit(i, j) = 1.0;
      c += kronecker(unit, apply(k, unit));
    }
  return c;
}

}  // namespace qchan::testing
