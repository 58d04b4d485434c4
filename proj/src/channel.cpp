#include "qchan/channel.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include "eigen_bridge.hpp"

namespace qchan {

namespace {

Eigen::MatrixXcd gaussian(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd g(rows, cols);
  // Fill row-major so the sample order does not depend on Eigen's storage.
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = {re, im};
    }
  return g;
}

// Q factor of a tall Gaussian matrix with R's diagonal phases moved into Q.
Eigen::MatrixXcd haar_isometry(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  const Eigen::MatrixXcd g = gaussian(rows, cols, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(rows, cols);
  const Eigen::MatrixXcd r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < cols; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

}  // namespace

KrausSet::KrausSet(std::vector<ComplexMatrix> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw InputError("Kraus set must contain at least one operator");
  for (const auto& e : ops_) {
    if (!e.same_shape(ops_.front())) throw InputError("Kraus operators differ in shape");
  }
}

ComplexMatrix apply(const KrausSet& k, const ComplexMatrix& a) {
  if (a.rows() != k.dim_in() || a.cols() != k.dim_in()) {
    throw DimensionError("apply: argument must be " + std::to_string(k.dim_in()) + "x" +
                         std::to_string(k.dim_in()));
  }
  ComplexMatrix out(k.dim_out(), k.dim_out());
  for (const auto& e : k.ops()) out += e * a * adjoint(e);
  return out;
}

ComplexMatrix tp_operator(const KrausSet& k) {
  ComplexMatrix s(k.dim_in(), k.dim_in());
  for (const auto& e : k.ops()) s += adjoint(e) * e;
  return s;
}

ComplexMatrix unital_operator(const KrausSet& k) {
  ComplexMatrix s(k.dim_out(), k.dim_out());
  for (const auto& e : k.ops()) s += e * adjoint(e);
  return s;
}

Check is_trace_preserving(const KrausSet& k, const TolerancePolicy& tol) {
  const double r = max_abs_diff(tp_operator(k), ComplexMatrix::identity(k.dim_in()));
  return {r <= tol.abs_check_tol, r};
}

Check is_unital(const KrausSet& k, const TolerancePolicy& tol) {
  const double r = max_abs_diff(unital_operator(k), ComplexMatrix::identity(k.dim_out()));
  return {r <= tol.abs_check_tol, r};
}

ChannelClass classify(const KrausSet& k, const TolerancePolicy& tol) {
  const Check tp = is_trace_preserving(k, tol);
  const Check un = is_unital(k, tol);
  ChannelClass c;
  c.tp = tp.holds;
  c.unital = un.holds;
  c.ucpt = tp.holds && un.holds && k.dim_in() == k.dim_out();
  c.tp_residual = tp.residual;
  c.unital_residual = un.residual;
  return c;
}

KrausSet dual(const KrausSet& k) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(k.size());
  for (const auto& e : k.ops()) ops.push_back(adjoint(e));
  return KrausSet(std::move(ops));
}

KrausSet tensor(const KrausSet& a, const KrausSet& b) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(a.size() * b.size());
  for (const auto& e : a.ops())
    for (const auto& f : b.ops()) ops.push_back(kronecker(e, f));
  return KrausSet(std::move(ops));
}

KrausSet mix(std::span<const KrausSet> channels, std::span<const double> weights) {
  if (channels.empty()) throw InputError("mixture of no channels");
  if (channels.size() != weights.size()) throw InputError("one weight per channel required");
  double total = 0.0;
  for (double p : weights) {
    if (!std::isfinite(p) || p < 0.0) throw InputError("mixture weights must be non-negative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) throw InputError("mixture weights must sum to 1");

  std::vector<ComplexMatrix> ops;
  for (std::size_t i = 0; i < channels.size(); ++i) {
    const auto& ch = channels[i];
    if (ch.dim_in() != channels[0].dim_in() || ch.dim_out() != channels[0].dim_out()) {
      throw InputError("mixture components differ in dimensions");
    }
    const double s = std::sqrt(weights[i]);
    for (const auto& e : ch.ops()) ops.push_back(Complex{s} * e);
  }
  return KrausSet(std::move(ops));
}

KrausSet unitary_channel(const ComplexMatrix& u, const TolerancePolicy& tol) {
  if (!u.is_square()) throw InputError("unitary channel needs a square operator");
  if (max_abs_diff(adjoint(u) * u, ComplexMatrix::identity(u.rows())) > tol.abs_check_tol) {
    throw InputError("operator is not unitary");
  }
  return KrausSet({u});
}

ComplexMatrix random_unitary(std::size_t d, std::uint64_t seed) {
  if (d == 0) throw InputError("unitary dimension must be positive");
  std::mt19937_64 rng(seed);
  const auto n = static_cast<Eigen::Index>(d);
  return detail::from_eigen(haar_isometry(n, n, rng));
}

KrausSet random_channel(std::size_t dim_in, std::size_t dim_out, std::size_t kraus_rank,
                        std::uint64_t seed) {
  if (dim_in == 0 || dim_out == 0) throw InputError("channel dimensions must be positive");
  if (kraus_rank < 1 || kraus_rank > dim_in * dim_out) {
    throw InputError("Kraus rank must lie in [1, dim_in*dim_out]");
  }
  if (kraus_rank * dim_out < dim_in) {
    throw InputError("Kraus rank too small for a trace-preserving map: need r*dim_out >= dim_in");
  }
  std::mt19937_64 rng(seed);
  const auto rows = static_cast<Eigen::Index>(kraus_rank * dim_out);
  const auto cols = static_cast<Eigen::Index>(dim_in);
  const Eigen::MatrixXcd v = haar_isometry(rows, cols, rng);

  std::vector<ComplexMatrix> ops;
  ops.reserve(kraus_rank);
  const auto block = static_cast<Eigen::Index>(dim_out);
  for (std::size_t k = 0; k < kraus_rank; ++k) {
    ops.push_back(detail::from_eigen(v.middleRows(static_cast<Eigen::Index>(k) * block, block)));
  }
  return KrausSet(std::move(ops));
}

KrausSet random_unitary_mixture(std::size_t d, std::size_t count, std::uint64_t seed) {
  if (count == 0) throw InputError("mixture needs at least one unitary");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.1, 1.0);
  std::vector<KrausSet> parts;
  std::vector<double> weights;
  for (std::size_t i = 0; i < count; ++i) {
    parts.push_back(KrausSet({random_unitary(d, rng())}));
    weights.push_back(uniform(rng));
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double& w : weights) w /= total;
  // Absorb the normalization round-off into the last weight.
  weights.back() = 1.0 - std::accumulate(weights.begin(), weights.end() - 1, 0.0);
  return mix(parts, weights);
}

}  // namespace qchan
