#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qchan {

using Complex = std::complex<double>;

/// Shapes of two operands do not fit the operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed or out-of-contract input data.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Tolerances shared by every numerical decision in the library.
///
/// `rel_rank_tol` is the relative eigenvalue cutoff used for numerical rank:
/// an eigenvalue counts iff it exceeds rel_rank_tol * max(lambda_max, 1).
/// `abs_check_tol` bounds the max-norm residual of identity/equality checks.
struct TolerancePolicy {
  double rel_rank_tol = 1e-9;
  double abs_check_tol = 1e-9;

  /// Throws InputError unless both tolerances lie in (0, 1).
  void validate() const;
};

/// Dense row-major matrix of complex doubles. All entries are finite.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  /// Column vector from a flat sequence.
  static ComplexMatrix column(std::span<const Complex> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool same_shape(const ComplexMatrix& other) const noexcept {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Complex> entries() const noexcept { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

Complex trace(const ComplexMatrix& a);

/// Kronecker product under lexicographic index order:
/// result((i', j'), (i, j)) = a(i', i) * b(j', j).
ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hilbert-Schmidt inner product tr(a^dagger b). Throws DimensionError on shape mismatch.
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest absolute entry of a - b. Throws DimensionError on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& a);

/// Largest absolute entry of a - a^dagger.
double hermitian_defect(const ComplexMatrix& a);

/// Row-major flattening into a single column (rows*cols x 1).
ComplexMatrix flatten(const ComplexMatrix& a);

/// Stacks column vectors end to end.
ComplexMatrix stack(const ComplexMatrix& top, const ComplexMatrix& bottom);

/// Hermitian PSD matrix of pairwise Hilbert-Schmidt inner products.
class GramMatrix {
 public:
  std::size_t order() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

  /// Wraps an existing matrix; throws InputError unless square and Hermitian
  /// within `hermitian_tol` (max-norm).
  static GramMatrix from_matrix(ComplexMatrix m, double hermitian_tol = 1e-9);

 private:
  explicit GramMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
  friend GramMatrix gram(std::span<const ComplexMatrix>);
};

/// G(i, j) = hs_inner(family[i], family[j]).
/// Throws InputError for an empty family or mixed shapes.
GramMatrix gram(std::span<const ComplexMatrix> family);

/// Full real spectrum of a Hermitian matrix, descending. The input is
/// symmetrized as (G + G^dagger)/2 first. Throws InputError if the matrix is
/// not square or deviates from Hermitian by more than `hermitian_tol`.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double hermitian_tol = 1e-9);
std::vector<double> hermitian_eigenvalues(const GramMatrix& g);

/// Eigenpairs of a Hermitian matrix, eigenvalues descending; vectors are the
/// columns of `vectors` in matching order.
struct HermitianEigen {
  std::vector<double> values;
  ComplexMatrix vectors{1, 1};
};
HermitianEigen hermitian_eigen(const ComplexMatrix& m, double hermitian_tol = 1e-9);

/// Rank decision over a descending spectrum, with the eigenvalues that sit on
/// either side of the cutoff kept for diagnostics.
struct RankInfo {
  std::size_t rank = 0;
  std::size_t order = 0;
  double cutoff = 0.0;
  /// Smallest eigenvalue counted toward the rank; NaN when rank is 0.
  double smallest_kept = 0.0;
  /// Largest eigenvalue below the cutoff; NaN when rank == order.
  double largest_dropped = 0.0;

  bool full_rank() const noexcept { return rank == order; }
  /// True when the eigenvalue nearest the cutoff lies within `margin` of it
  /// multiplicatively.
  bool borderline(double margin = 1e3) const noexcept;
};

RankInfo spectrum_rank(std::span<const double> descending, const TolerancePolicy& tol);

std::size_t numerical_rank(const GramMatrix& g, const TolerancePolicy& tol);
RankInfo rank_info(const GramMatrix& g, const TolerancePolicy& tol);

/// numerical_rank(gram(family)) == family size.
bool linearly_independent(std::span<const ComplexMatrix> family, const TolerancePolicy& tol);

}  // namespace qchan
