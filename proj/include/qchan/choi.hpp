#pragma once

#include "qchan/channel.hpp"
#include "qchan/matrix.hpp"

namespace qchan {

/// Choi matrix (id (x) E)(|Omega><Omega|), Omega = sum_i e_i (x) e_i, with the
/// input factor first. Row/column index (i, a) -> i*dim_out + a, where i runs
/// over the input space and a over the output space.
///
/// With vec(E)[i*dim_out + a] = E(a, i) (column stacking) this is
/// sum_k vec(E_k) vec(E_k)^dagger.
class ChoiMatrix {
 public:
  ChoiMatrix(std::size_t dim_in, std::size_t dim_out, ComplexMatrix m);

  std::size_t dim_in() const noexcept { return dim_in_; }
  std::size_t dim_out() const noexcept { return dim_out_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  std::size_t dim_in_;
  std::size_t dim_out_;
  ComplexMatrix matrix_;
};

/// Column-stacking vectorization, see ChoiMatrix.
ComplexMatrix vec(const ComplexMatrix& e);
/// Inverse of vec for a dim_out x dim_in operator.
ComplexMatrix unvec(const ComplexMatrix& v, std::size_t dim_out, std::size_t dim_in);

ChoiMatrix choi_of(const KrausSet& k);

/// Trace over the output factor; the identity for trace-preserving sources.
ComplexMatrix partial_trace_out(const ChoiMatrix& c);

/// Linearly independent Kraus operators sqrt(lambda) unvec(v) built from the
/// eigenpairs above the rank cutoff, largest eigenvalue first. Throws
/// InputError when the matrix has an eigenvalue below -rel_rank_tol * max(1, lambda_max).
KrausSet minimal_kraus(const ChoiMatrix& c, const TolerancePolicy& tol = {});

std::size_t choi_rank(const KrausSet& k, const TolerancePolicy& tol = {});
RankInfo choi_rank_info(const KrausSet& k, const TolerancePolicy& tol = {});

}  // namespace qchan
