#include "qchan/choi.hpp"

#include <algorithm>
#include <cmath>

namespace qchan {

ChoiMatrix::ChoiMatrix(std::size_t dim_in, std::size_t dim_out, ComplexMatrix m)
    : dim_in_(dim_in), dim_out_(dim_out), matrix_(std::move(m)) {
  if (matrix_.rows() != dim_in * dim_out || !matrix_.is_square()) {
    throw DimensionError("Choi matrix must have order dim_in*dim_out");
  }
}

ComplexMatrix vec(const ComplexMatrix& e) {
  ComplexMatrix v(e.rows() * e.cols(), 1);
  for (std::size_t i = 0; i < e.cols(); ++i)
    for (std::size_t a = 0; a < e.rows(); ++a) v(i * e.rows() + a, 0) = e(a, i);
  return v;
}

ComplexMatrix unvec(const ComplexMatrix& v, std::size_t dim_out, std::size_t dim_in) {
  if (v.cols() != 1 || v.rows() != dim_out * dim_in) throw DimensionError("unvec: bad length");
  ComplexMatrix e(dim_out, dim_in);
  for (std::size_t i = 0; i < dim_in; ++i)
    for (std::size_t a = 0; a < dim_out; ++a) e(a, i) = v(i * dim_out + a, 0);
  return e;
}

ChoiMatrix choi_of(const KrausSet& k) {
  const std::size_t n = k.dim_in() * k.dim_out();
  ComplexMatrix c(n, n);
  for (const auto& e : k.ops()) {
    const ComplexMatrix v = vec(e);
    for (std::size_t r = 0; r < n; ++r) {
      const Complex vr = v(r, 0);
      if (vr == Complex{}) continue;
      for (std::size_t s = 0; s < n; ++s) c(r, s) += vr * std::conj(v(s, 0));
    }
  }
  return {k.dim_in(), k.dim_out(), std::move(c)};
}

ComplexMatrix partial_trace_out(const ChoiMatrix& c) {
  const std::size_t din = c.dim_in();
  const std::size_t dout = c.dim_out();
  ComplexMatrix p(din, din);
  for (std::size_t i = 0; i < din; ++i)
    for (std::size_t j = 0; j < din; ++j)
      for (std::size_t a = 0; a < dout; ++a) p(i, j) += c.matrix()(i * dout + a, j * dout + a);
  return p;
}

KrausSet minimal_kraus(const ChoiMatrix& c, const TolerancePolicy& tol) {
  const HermitianEigen eig = hermitian_eigen(c.matrix());
  const double top = eig.values.empty() ? 0.0 : eig.values.front();
  if (!eig.values.empty() && eig.values.back() < -tol.rel_rank_tol * std::max(top, 1.0)) {
    throw InputError("Choi matrix is not positive semidefinite");
  }
  const RankInfo info = spectrum_rank(eig.values, tol);
  const std::size_t n = c.matrix().rows();

  std::vector<ComplexMatrix> ops;
  ops.reserve(std::max<std::size_t>(info.rank, 1));
  for (std::size_t k = 0; k < info.rank; ++k) {
    ComplexMatrix v(n, 1);
    for (std::size_t r = 0; r < n; ++r) v(r, 0) = eig.vectors(r, k);
    v *= std::sqrt(eig.values[k]);
    ops.push_back(unvec(v, c.dim_out(), c.dim_in()));
  }
  // The zero map has no nonzero eigenvalue; keep a single zero operator.
  if (ops.empty()) ops.emplace_back(c.dim_out(), c.dim_in());
  return KrausSet(std::move(ops));
}

RankInfo choi_rank_info(const KrausSet& k, const TolerancePolicy& tol) {
  const auto values = hermitian_eigenvalues(choi_of(k).matrix());
  return spectrum_rank(values, tol);
}

std::size_t choi_rank(const KrausSet& k, const TolerancePolicy& tol) {
  return choi_rank_info(k, tol).rank;
}

}  // namespace qchan
