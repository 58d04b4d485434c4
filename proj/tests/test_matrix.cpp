#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>

#include "qchan/catalog.hpp"
#include "qchan/matrix.hpp"
#include "support.hpp"

using namespace qchan;
using namespace std::complex_literals;
using qchan::testing::random_matrix;

TEST_CASE("adjoint") {
  CHECK(adjoint(ComplexMatrix::identity(2)) == ComplexMatrix::identity(2));

  const ComplexMatrix a{{0, 1i}, {0, 0}};
  const ComplexMatrix expected{{0, 0}, {-1i, 0}};
  CHECK(adjoint(a) == expected);

  std::mt19937_64 rng(11);
  const ComplexMatrix r = random_matrix(3, 2, rng);
  CHECK(adjoint(r).rows() == 2);
  CHECK(adjoint(adjoint(r)) == r);
}

TEST_CASE("kronecker") {
  CHECK(kronecker(ComplexMatrix::identity(2), ComplexMatrix::identity(3)) == ComplexMatrix::identity(6));

  const ComplexMatrix a{{1, 2}, {3, 4}};
  const ComplexMatrix b{{0, 1}, {1, 0}};
  const ComplexMatrix expected{{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 3, 0, 4}, {3, 0, 4, 0}};
  CHECK(kronecker(a, b) == expected);

  SUBCASE("mixed product property") {
    std::mt19937_64 rng(5);
    const auto A = random_matrix(2, 3, rng);
    const auto B = random_matrix(3, 2, rng);
    const auto C = random_matrix(3, 4, rng);
    const auto D = random_matrix(2, 2, rng);
    CHECK(max_abs_diff(kronecker(A, B) * kronecker(C, D), kronecker(A * C, B * D)) <= 1e-12);
  }

  SUBCASE("rectangular shape and lexicographic entries") {
    std::mt19937_64 rng(6);
    const auto A = random_matrix(2, 3, rng);
    const auto B = random_matrix(4, 1, rng);
    const auto K = kronecker(A, B);
    REQUIRE(K.rows() == 8);
    REQUIRE(K.cols() == 3);
    for (std::size_t i1 = 0; i1 < 2; ++i1)
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j1 = 0; j1 < 4; ++j1) CHECK(K(i1 * 4 + j1, i) == A(i1, i) * B(j1, 0));
  }
}

TEST_CASE("hs_inner") {
  CHECK(hs_inner(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == Complex{2.0});
  CHECK_THROWS_AS(hs_inner(ComplexMatrix(2, 2), ComplexMatrix(2, 3)), DimensionError);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto A = random_matrix(2, 2, rng), A2 = random_matrix(2, 2, rng);
    const auto B = random_matrix(2, 2, rng), B2 = random_matrix(2, 2, rng);
    const Complex lhs = hs_inner(kronecker(A, B), kronecker(A2, B2));
    const Complex rhs = hs_inner(A, A2) * hs_inner(B, B2);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    CHECK(std::abs(hs_inner(A, B) - std::conj(hs_inner(B, A))) == 0.0);
    CHECK(hs_inner(A, A).real() > 0.0);
    CHECK(hs_inner(A, A).imag() == 0.0);
    // tr(A^dagger B) by explicit product
    CHECK(std::abs(hs_inner(A, B) - trace(adjoint(A) * B)) <= 1e-12);
  }
  CHECK(hs_inner(ComplexMatrix(3, 2), ComplexMatrix(3, 2)) == Complex{});
}

TEST_CASE("matrix construction rejects bad data") {
  CHECK_THROWS_AS(ComplexMatrix(0, 2), InputError);
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), InputError);
  CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex{std::nan(""), 0}}), InputError);
  CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex{0, INFINITY}}), InputError);
  CHECK_THROWS_AS((ComplexMatrix{{1, 2}, {3}}), InputError);
  CHECK_THROWS_AS(ComplexMatrix(2, 3) * ComplexMatrix(2, 3), DimensionError);
}

TEST_CASE("TolerancePolicy validation") {
  CHECK_NOTHROW(TolerancePolicy{}.validate());
  CHECK_THROWS_AS((TolerancePolicy{0.0, 1e-9}.validate()), InputError);
  CHECK_THROWS_AS((TolerancePolicy{1e-9, 1.0}.validate()), InputError);
}

namespace {

std::vector<ComplexMatrix> matrix_units(std::size_t d) {
  std::vector<ComplexMatrix> units;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix e(d, d);
      e(i, j) = 1.0;
      units.push_back(std::move(e));
    }
  return units;
}

std::vector<ComplexMatrix> products_dagger_left(const KrausSet& k) {
  std::vector<ComplexMatrix> f;
  for (const auto& a : k.ops())
    for (const auto& b : k.ops()) f.push_back(adjoint(a) * b);
  return f;
}

}  // namespace

TEST_CASE("gram") {
  const auto units = matrix_units(2);
  CHECK(gram(units).matrix() == ComplexMatrix::identity(4));

  std::mt19937_64 rng(3);
  const auto v = random_matrix(3, 1, rng);
  const std::vector<ComplexMatrix> repeated{v, random_matrix(3, 1, rng), v};
  CHECK(numerical_rank(gram(repeated), {}) == 2);
  CHECK_FALSE(linearly_independent(repeated, {}));

  CHECK_THROWS_AS(gram(std::vector<ComplexMatrix>{}), InputError);
  CHECK_THROWS_AS(gram(std::vector<ComplexMatrix>{ComplexMatrix(2, 2), ComplexMatrix(2, 1)}), InputError);

  SUBCASE("Gram of a tensor family factorizes") {
    std::vector<ComplexMatrix> vs, ws, tensored;
    for (int i = 0; i < 3; ++i) vs.push_back(random_matrix(2, 2, rng));
    for (int i = 0; i < 2; ++i) ws.push_back(random_matrix(2, 3, rng));
    for (const auto& a : vs)
      for (const auto& b : ws) tensored.push_back(kronecker(a, b));
    const auto lhs = gram(tensored).matrix();
    const auto rhs = kronecker(gram(vs).matrix(), gram(ws).matrix());
    CHECK(max_abs_diff(lhs, rhs) <= 1e-12 * std::max(1.0, max_abs(rhs)));
  }

  SUBCASE("quadratic form equals squared norm of the combination") {
    std::vector<ComplexMatrix> family;
    for (int i = 0; i < 4; ++i) family.push_back(random_matrix(2, 3, rng));
    const auto g = gram(family).matrix();
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = random_matrix(4, 1, rng);
      ComplexMatrix combo(2, 3);
      for (std::size_t i = 0; i < 4; ++i) combo += a(i, 0) * family[i];
      // a^dagger G a
      Complex quad{};
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) quad += std::conj(a(i, 0)) * g(i, j) * a(j, 0);
      const double norm2 = hs_inner(combo, combo).real();
      CHECK(std::abs(quad - Complex{norm2}) <= 1e-10 * std::max(1.0, norm2));
    }
  }
}

TEST_CASE("hermitian_eigenvalues") {
  const auto values = hermitian_eigenvalues(ComplexMatrix::identity(4));
  REQUIRE(values.size() == 4);
  for (double l : values) CHECK(l == doctest::Approx(1.0).epsilon(1e-14));

  ComplexMatrix u(2, 1);
  u(0, 0) = 1.0 / std::sqrt(2.0);
  u(1, 0) = 1i / std::sqrt(2.0);
  const auto pair = hermitian_eigenvalues(gram(std::vector<ComplexMatrix>{u, u}));
  CHECK(pair[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(pair[1]) <= 1e-14);

  CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix{{1, 1}, {0, 1}}), InputError);
  CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix(2, 3)), InputError);
  CHECK_THROWS_AS(GramMatrix::from_matrix(ComplexMatrix{{1, 1}, {0, 1}}), InputError);

  SUBCASE("spectrum sums to the trace; eigenpairs have small residuals") {
    std::mt19937_64 rng(21);
    std::vector<ComplexMatrix> family;
    for (int i = 0; i < 6; ++i) family.push_back(random_matrix(3, 3, rng));
    const auto g = gram(family);
    const auto eig = hermitian_eigen(g.matrix());
    const double sum = std::accumulate(eig.values.begin(), eig.values.end(), 0.0);
    const double tr = trace(g.matrix()).real();
    CHECK(std::abs(sum - tr) <= 1e-9 * std::abs(tr));
    CHECK(std::is_sorted(eig.values.rbegin(), eig.values.rend()));
    const double gnorm = max_abs(g.matrix()) * 6;
    for (std::size_t k = 0; k < 6; ++k) {
      ComplexMatrix v(6, 1);
      for (std::size_t r = 0; r < 6; ++r) v(r, 0) = eig.vectors(r, k);
      const auto residual = g.matrix() * v - Complex{eig.values[k]} * v;
      CHECK(max_abs(residual) <= 1e-9 * gnorm);
    }
  }
}

TEST_CASE("numerical rank and eps3 product families") {
  const TolerancePolicy tol;
  CHECK(numerical_rank(gram(matrix_units(2)), tol) == 4);

  const KrausSet e3 = epsilon3().kraus;
  const auto products = products_dagger_left(e3);
  REQUIRE(products.size() == 16);
  // Brute-force column rank oracle, frozen: 9 = dim End(C^3).
  CHECK(qchan::testing::column_rank_oracle(products) == 9);
  const auto values = hermitian_eigenvalues(gram(products));
  const auto info = spectrum_rank(values, tol);
  CHECK(info.rank == 9);
  CHECK(numerical_rank(gram(products), tol) == 9);

  std::vector<ComplexMatrix> direct_sum;
  for (const auto& a : e3.ops())
    for (const auto& b : e3.ops())
      direct_sum.push_back(stack(flatten(adjoint(a) * b), flatten(b * adjoint(a))));
  CHECK(numerical_rank(gram(direct_sum), tol) == 16);
}

TEST_CASE("rank cutoff uses an absolute floor") {
  const TolerancePolicy tol;
  const std::vector<double> tiny{5e-10, 1e-12};
  CHECK(spectrum_rank(tiny, tol).rank == 0);
  const std::vector<double> big{1e6, 2e-3, 1e-4};
  const auto info = spectrum_rank(big, tol);
  CHECK(info.rank == 2);
  CHECK(info.cutoff == doctest::Approx(1e-3));
  CHECK(info.borderline());
  const std::vector<double> clean{1.0, 0.5, 1e-17};
  CHECK_FALSE(spectrum_rank(clean, tol).borderline());
}

TEST_CASE("tensor of independent families stays independent") {
  std::mt19937_64 rng(99);
  const TolerancePolicy tol;
  std::vector<ComplexMatrix> vs, ws, tensored;
  for (int i = 0; i < 3; ++i) vs.push_back(random_matrix(2, 2, rng));
  for (int i = 0; i < 4; ++i) ws.push_back(random_matrix(3, 2, rng));
  for (const auto& a : vs)
    for (const auto& b : ws) tensored.push_back(kronecker(a, b));
  CHECK(numerical_rank(gram(tensored), tol) ==
        numerical_rank(gram(vs), tol) * numerical_rank(gram(ws), tol));
  CHECK(linearly_independent(tensored, tol));
}

TEST_CASE("core operations are deterministic") {
  std::mt19937_64 rng(1);
  const auto a = random_matrix(3, 3, rng);
  const auto b = random_matrix(2, 2, rng);
  CHECK(kronecker(a, b) == kronecker(a, b));
  CHECK(adjoint(a) == adjoint(a));
  const Complex x = hs_inner(a, a * a), y = hs_inner(a, a * a);
  CHECK(std::memcmp(&x, &y, sizeof x) == 0);
}
