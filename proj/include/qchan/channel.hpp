#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qchan/matrix.hpp"

namespace qchan {

/// Kraus representation of a completely positive map
///   A -> sum_k E_k A E_k^dagger,
/// with every E_k of shape dim_out x dim_in. Operators are kept exactly as
/// given; a redundant family is never pruned implicitly (see minimal_kraus).
class KrausSet {
 public:
  /// Throws InputError for an empty family or operators of differing shape.
  explicit KrausSet(std::vector<ComplexMatrix> ops);

  std::size_t dim_in() const noexcept { return ops_.front().cols(); }
  std::size_t dim_out() const noexcept { return ops_.front().rows(); }
  std::size_t size() const noexcept { return ops_.size(); }
  std::span<const ComplexMatrix> ops() const noexcept { return ops_; }
  const ComplexMatrix& operator[](std::size_t k) const { return ops_[k]; }

  friend bool operator==(const KrausSet&, const KrausSet&) = default;

 private:
  std::vector<ComplexMatrix> ops_;
};

/// Outcome of an identity check: verdict plus the max-norm residual.
struct Check {
  bool holds = false;
  double residual = 0.0;

  explicit operator bool() const noexcept { return holds; }
};

struct ChannelClass {
  bool cp = true;
  bool tp = false;
  bool unital = false;
  /// tp && unital && dim_in == dim_out
  bool ucpt = false;
  double tp_residual = 0.0;
  double unital_residual = 0.0;
};

/// sum_k E_k A E_k^dagger. Throws DimensionError unless A is dim_in x dim_in.
ComplexMatrix apply(const KrausSet& k, const ComplexMatrix& a);

/// sum_k E_k^dagger E_k, the operator that equals the identity for TP maps.
ComplexMatrix tp_operator(const KrausSet& k);
/// sum_k E_k E_k^dagger, the operator that equals the identity for unital maps.
ComplexMatrix unital_operator(const KrausSet& k);

Check is_trace_preserving(const KrausSet& k, const TolerancePolicy& tol = {});
Check is_unital(const KrausSet& k, const TolerancePolicy& tol = {});
ChannelClass classify(const KrausSet& k, const TolerancePolicy& tol = {});

/// Kraus set of the Hilbert-Schmidt adjoint map: (E_k^dagger)_k.
KrausSet dual(const KrausSet& k);

/// (E_k (x) F_l)_{k,l}, k major.
KrausSet tensor(const KrausSet& a, const KrausSet& b);

/// Convex combination; operators sqrt(p_i) E_{i,k} concatenated in input
/// order. Throws InputError on mismatched dimensions, negative weights, or
/// weights not summing to 1 within 1e-12.
KrausSet mix(std::span<const KrausSet> channels, std::span<const double> weights);

/// {U}. Throws InputError unless U is square and unitary within abs_check_tol.
KrausSet unitary_channel(const ComplexMatrix& u, const TolerancePolicy& tol = {});

/// Haar-distributed unitary from the QR decomposition of a complex Gaussian
/// matrix with the phases of R's diagonal absorbed into Q.
ComplexMatrix random_unitary(std::size_t d, std::uint64_t seed);

/// Trace-preserving channel with `kraus_rank` operators: a Gaussian
/// (r*dim_out) x dim_in matrix is orthonormalized into an isometry V whose
/// row blocks are the Kraus operators, so sum_k E_k^dagger E_k = V^dagger V = I.
/// Requires 1 <= r <= dim_in*dim_out and r*dim_out >= dim_in.
KrausSet random_channel(std::size_t dim_in, std::size_t dim_out, std::size_t kraus_rank,
                        std::uint64_t seed);

/// Convex combination of `count` Haar unitary channels on C^d with random
/// positive weights. Always unital and trace preserving.
KrausSet random_unitary_mixture(std::size_t d, std::size_t count, std::uint64_t seed);

}  // namespace qchan
