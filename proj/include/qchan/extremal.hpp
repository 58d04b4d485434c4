#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qchan/channel.hpp"
#include "qchan/matrix.hpp"

namespace qchan {

enum class Verdict { False, True, NotApplicable };

std::string_view to_string(Verdict v) noexcept;

/// How an extremality verdict was reached.
enum class DecisionPath {
  NotApplicable,  // channel outside the class; no test run
  GramRank,       // rank of the criterion family's Gram matrix
  RankBound,      // Choi rank exceeds sqrt(2) * dim, no Gram needed
};

std::string_view to_string(DecisionPath p) noexcept;

struct ExtremalityTest {
  Verdict verdict = Verdict::NotApplicable;
  DecisionPath path = DecisionPath::NotApplicable;
  /// Number of criterion vectors (r^2) and numerical rank of their Gram.
  std::size_t gram_order = 0;
  std::size_t gram_rank = 0;
  double smallest_kept_eigenvalue = 0.0;
  double largest_dropped_eigenvalue = 0.0;
  /// Decisive eigenvalue within a factor 1e3 of the rank cutoff.
  bool ill_conditioned = false;

  bool is_true() const noexcept { return verdict == Verdict::True; }
};

/// (E_k^dagger E_l)_{k,l}, k major. Throws InputError unless the Kraus
/// operators are linearly independent; call minimal_kraus first.
std::vector<ComplexMatrix> cpt_criterion_family(const KrausSet& k, const TolerancePolicy& tol = {});

/// (E_k E_l^dagger)_{k,l}, k major. Same precondition as above.
std::vector<ComplexMatrix> ucp_criterion_family(const KrausSet& k, const TolerancePolicy& tol = {});

/// Elements E_k^dagger E_l (+) E_l E_k^dagger of End(X) (+) End(X), each stored
/// as a 2d^2 column: the row-major entries of E_k^dagger E_l followed by those
/// of E_l E_k^dagger. The Hilbert-Schmidt inner product of two such columns is
/// the sum of the component inner products. Throws InputError for non-square
/// or linearly dependent Kraus operators.
std::vector<ComplexMatrix> ucpt_criterion_family(const KrausSet& k, const TolerancePolicy& tol = {});

/// Extreme point of CPT(X, Y)? Not applicable unless trace preserving.
ExtremalityTest is_extreme_cpt(const KrausSet& k, const TolerancePolicy& tol = {});
/// Extreme point of UCP(X, Y)? Not applicable unless unital.
ExtremalityTest is_extreme_ucp(const KrausSet& k, const TolerancePolicy& tol = {});
/// Extreme point of UCPT(X)? Not applicable unless unital and trace preserving.
/// A Choi rank r with r^2 > 2 d^2 is decided false without building the Gram.
ExtremalityTest is_extreme_ucpt(const KrausSet& k, const TolerancePolicy& tol = {});

/// Same as is_extreme_ucpt but always builds the full Gram test.
ExtremalityTest is_extreme_ucpt_by_gram(const KrausSet& k, const TolerancePolicy& tol = {});

struct RankBound {
  double sharp;   // sqrt(2 d^2 - 1)
  double coarse;  // sqrt(2) d
};

/// Upper bounds on the Choi rank of an extreme UCPT map on C^d. For integer
/// ranks the two bounds reject exactly the same values.
RankBound ucpt_rank_bound(std::size_t d);

/// Sufficient condition for the tensor product of two UCPT maps to be
/// non-extreme: CR(a) > 2^(1/4) dim_X and CR(b) > 2^(1/4) dim_Y. False when
/// either input is not UCPT.
bool tensor_nonextremality_check(const KrausSet& a, const KrausSet& b,
                                 const TolerancePolicy& tol = {});

struct ExtremalityReport {
  std::size_t dim_in = 0;
  std::size_t dim_out = 0;
  ChannelClass channel_class;
  std::size_t kraus_count = 0;
  std::size_t choi_rank = 0;
  ExtremalityTest cpt;
  ExtremalityTest ucp;
  ExtremalityTest ucpt;
  /// Bounds for d = dim_in; only meaningful for square channels.
  RankBound rank_bound{0.0, 0.0};
  /// UCPT channel whose Choi rank exceeds sqrt(2 d^2 - 1).
  bool bound_violated = false;
  bool ill_conditioned = false;

  Verdict extreme_cpt() const noexcept { return cpt.verdict; }
  Verdict extreme_ucp() const noexcept { return ucp.verdict; }
  Verdict extreme_ucpt() const noexcept { return ucpt.verdict; }
  /// Gram diagnostics of the most specific test that built one
  /// (UCPT, then CPT, then UCP); nullopt when none did.
  std::optional<ExtremalityTest> headline_gram() const;
};

ExtremalityReport analyze(const KrausSet& k, const TolerancePolicy& tol = {});

}  // namespace qchan
