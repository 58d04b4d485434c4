#include "qchan/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "eigen_bridge.hpp"

namespace qchan {

namespace {

void require_finite(std::span<const Complex> entries) {
  for (const auto& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InputError("matrix entry is not finite");
    }
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (!a.same_shape(b)) {
    throw DimensionError(std::string(what) + ": shape " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

}  // namespace

void TolerancePolicy::validate() const {
  auto in_unit = [](double t) { return t > 0.0 && t < 1.0; };
  if (!in_unit(rel_rank_tol)) throw InputError("rank tolerance must lie in (0, 1)");
  if (!in_unit(abs_check_tol)) throw InputError("check tolerance must lie in (0, 1)");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw InputError("matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw InputError("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) throw InputError("entry count does not match shape");
  require_finite(entries_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw InputError("matrix dimensions must be positive");
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InputError("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  require_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> values) {
  return {values.size(), 1, std::vector<Complex>(values.begin(), values.end())};
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_shape(*this, rhs, "matrix sum");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_shape(*this, rhs, "matrix difference");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw DimensionError("matrix product: inner dimensions " + std::to_string(lhs.cols()) +
                         " and " + std::to_string(rhs.rows()) + " differ");
  }
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

Complex trace(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("trace of a non-square matrix");
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Complex s = a(ia, ja);
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          out(ia * b.rows() + ib, ja * b.cols() + jb) = s * b(ib, jb);
    }
  return out;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "Hilbert-Schmidt inner product");
  // tr(a^dagger b) = sum_ij conj(a_ij) b_ij
  Complex s{};
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) s += std::conj(ea[i]) * eb[i];
  return s;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) m = std::max(m, std::abs(ea[i] - eb[i]));
  return m;
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const auto& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

double hermitian_defect(const ComplexMatrix& a) {
  if (!a.is_square()) return std::numeric_limits<double>::infinity();
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

ComplexMatrix flatten(const ComplexMatrix& a) {
  const auto e = a.entries();
  return ComplexMatrix::column(e);
}

ComplexMatrix stack(const ComplexMatrix& top, const ComplexMatrix& bottom) {
  if (top.cols() != 1 || bottom.cols() != 1) throw DimensionError("stack expects column vectors");
  std::vector<Complex> v(top.entries().begin(), top.entries().end());
  v.insert(v.end(), bottom.entries().begin(), bottom.entries().end());
  return {v.size(), 1, std::move(v)};
}

GramMatrix GramMatrix::from_matrix(ComplexMatrix m, double hermitian_tol) {
  if (!m.is_square()) throw InputError("Gram matrix must be square");
  if (hermitian_defect(m) > hermitian_tol) throw InputError("Gram matrix is not Hermitian");
  return GramMatrix(std::move(m));
}

GramMatrix gram(std::span<const ComplexMatrix> family) {
  if (family.empty()) throw InputError("Gram matrix of an empty family");
  for (const auto& v : family) {
    if (!v.same_shape(family.front())) throw InputError("Gram family members differ in shape");
  }
  const std::size_t n = family.size();
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = hs_inner(family[i], family[i]).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      g(i, j) = hs_inner(family[i], family[j]);
      g(j, i) = std::conj(g(i, j));
    }
  }
  return GramMatrix(std::move(g));
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m, double hermitian_tol) {
  if (!m.is_square()) throw InputError("eigendecomposition of a non-square matrix");
  const double scale = std::max(1.0, max_abs(m));
  if (hermitian_defect(m) > hermitian_tol * scale) {
    throw InputError("eigendecomposition input is not Hermitian");
  }
  Eigen::MatrixXcd a = detail::to_eigen(m);
  const Eigen::MatrixXcd sym = (a + a.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (solver.info() != Eigen::Success) throw InputError("Hermitian eigensolver did not converge");

  // Eigen sorts ascending; reverse to descending.
  const auto n = static_cast<Eigen::Index>(m.rows());
  HermitianEigen out;
  out.values.resize(m.rows());
  Eigen::MatrixXcd vecs(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values[static_cast<std::size_t>(i)] = solver.eigenvalues()(n - 1 - i);
    vecs.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  out.vectors = detail::from_eigen(vecs);
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double hermitian_tol) {
  if (!m.is_square()) throw InputError("eigenvalues of a non-square matrix");
  const double scale = std::max(1.0, max_abs(m));
  if (hermitian_defect(m) > hermitian_tol * scale) {
    throw InputError("eigenvalue input is not Hermitian");
  }
  Eigen::MatrixXcd a = detail::to_eigen(m);
  const Eigen::MatrixXcd sym = (a + a.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw InputError("Hermitian eigensolver did not converge");
  std::vector<double> values(solver.eigenvalues().begin(), solver.eigenvalues().end());
  std::reverse(values.begin(), values.end());
  return values;
}

std::vector<double> hermitian_eigenvalues(const GramMatrix& g) {
  return hermitian_eigenvalues(g.matrix());
}

bool RankInfo::borderline(double margin) const noexcept {
  if (rank > 0 && smallest_kept < cutoff * margin) return true;
  if (rank < order && largest_dropped > cutoff / margin) return true;
  return false;
}

RankInfo spectrum_rank(std::span<const double> descending, const TolerancePolicy& tol) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  RankInfo info;
  info.order = descending.size();
  const double top = descending.empty() ? 0.0 : descending.front();
  info.cutoff = tol.rel_rank_tol * std::max(top, 1.0);
  info.rank = static_cast<std::size_t>(
      std::count_if(descending.begin(), descending.end(), [&](double l) { return l > info.cutoff; }));
  info.smallest_kept = info.rank > 0 ? descending[info.rank - 1] : nan;
  info.largest_dropped = info.rank < info.order ? descending[info.rank] : nan;
  return info;
}

RankInfo rank_info(const GramMatrix& g, const TolerancePolicy& tol) {
  const auto values = hermitian_eigenvalues(g);
  return spectrum_rank(values, tol);
}

std::size_t numerical_rank(const GramMatrix& g, const TolerancePolicy& tol) {
  return rank_info(g, tol).rank;
}

bool linearly_independent(std::span<const ComplexMatrix> family, const TolerancePolicy& tol) {
  return numerical_rank(gram(family), tol) == family.size();
}

}  // namespace qchan
