#include "qchan/extremal.hpp"

#include <cmath>

#include "qchan/choi.hpp"

namespace qchan {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

std::string_view to_string(DecisionPath p) noexcept {
  switch (p) {
    case DecisionPath::GramRank: return "gram-rank";
    case DecisionPath::RankBound: return "rank-bound";
    case DecisionPath::NotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

namespace {

void require_independent(const KrausSet& k, const TolerancePolicy& tol) {
  if (!linearly_independent(k.ops(), tol)) {
    throw InputError("Kraus operators are linearly dependent; minimize them first");
  }
}

ExtremalityTest gram_test(std::span<const ComplexMatrix> family, const TolerancePolicy& tol) {
  const RankInfo info = rank_info(gram(family), tol);
  ExtremalityTest t;
  t.path = DecisionPath::GramRank;
  t.verdict = info.full_rank() ? Verdict::True : Verdict::False;
  t.gram_order = info.order;
  t.gram_rank = info.rank;
  t.smallest_kept_eigenvalue = info.smallest_kept;
  t.largest_dropped_eigenvalue = info.largest_dropped;
  t.ill_conditioned = info.borderline();
  return t;
}

KrausSet minimized(const KrausSet& k, const TolerancePolicy& tol) {
  return minimal_kraus(choi_of(k), tol);
}

}  // namespace

std::vector<ComplexMatrix> cpt_criterion_family(const KrausSet& k, const TolerancePolicy& tol) {
  require_independent(k, tol);
  std::vector<ComplexMatrix> family;
  family.reserve(k.size() * k.size());
  for (const auto& ek : k.ops()) {
    const ComplexMatrix ek_dag = adjoint(ek);
    for (const auto& el : k.ops()) family.push_back(ek_dag * el);
  }
  return family;
}

std::vector<ComplexMatrix> ucp_criterion_family(const KrausSet& k, const TolerancePolicy& tol) {
  require_independent(k, tol);
  std::vector<ComplexMatrix> family;
  family.reserve(k.size() * k.size());
  for (const auto& ek : k.ops())
    for (const auto& el : k.ops()) family.push_back(ek * adjoint(el));
  return family;
}

std::vector<ComplexMatrix> ucpt_criterion_family(const KrausSet& k, const TolerancePolicy& tol) {
  if (k.dim_in() != k.dim_out()) throw InputError("UCPT criterion needs dim_in == dim_out");
  require_independent(k, tol);
  std::vector<ComplexMatrix> family;
  family.reserve(k.size() * k.size());
  for (const auto& ek : k.ops()) {
    const ComplexMatrix ek_dag = adjoint(ek);
    for (const auto& el : k.ops()) {
      family.push_back(stack(flatten(ek_dag * el), flatten(el * ek_dag)));
    }
  }
  return family;
}

ExtremalityTest is_extreme_cpt(const KrausSet& k, const TolerancePolicy& tol) {
  if (!is_trace_preserving(k, tol)) return {};
  return gram_test(cpt_criterion_family(minimized(k, tol), tol), tol);
}

ExtremalityTest is_extreme_ucp(const KrausSet& k, const TolerancePolicy& tol) {
  if (!is_unital(k, tol)) return {};
  return gram_test(ucp_criterion_family(minimized(k, tol), tol), tol);
}

ExtremalityTest is_extreme_ucpt_by_gram(const KrausSet& k, const TolerancePolicy& tol) {
  if (!classify(k, tol).ucpt) return {};
  return gram_test(ucpt_criterion_family(minimized(k, tol), tol), tol);
}

ExtremalityTest is_extreme_ucpt(const KrausSet& k, const TolerancePolicy& tol) {
  if (!classify(k, tol).ucpt) return {};
  const KrausSet minimal = minimized(k, tol);
  const std::size_t r = minimal.size();
  const std::size_t d = k.dim_in();
  if (r * r > 2 * d * d) {
    ExtremalityTest t;
    t.verdict = Verdict::False;
    t.path = DecisionPath::RankBound;
    t.gram_order = r * r;
    return t;
  }
  return gram_test(ucpt_criterion_family(minimal, tol), tol);
}

RankBound ucpt_rank_bound(std::size_t d) {
  if (d == 0) throw InputError("dimension must be positive");
  const double dd = static_cast<double>(d);
  return {std::sqrt(2.0 * dd * dd - 1.0), std::sqrt(2.0) * dd};
}

bool tensor_nonextremality_check(const KrausSet& a, const KrausSet& b, const TolerancePolicy& tol) {
  if (!classify(a, tol).ucpt || !classify(b, tol).ucpt) return false;
  const double root4 = std::pow(2.0, 0.25);
  const auto ra = static_cast<double>(choi_rank(a, tol));
  const auto rb = static_cast<double>(choi_rank(b, tol));
  return ra > root4 * static_cast<double>(a.dim_in()) && rb > root4 * static_cast<double>(b.dim_in());
}

std::optional<ExtremalityTest> ExtremalityReport::headline_gram() const {
  for (const ExtremalityTest* t : {&ucpt, &cpt, &ucp}) {
    if (t->path == DecisionPath::GramRank) return *t;
  }
  return std::nullopt;
}

ExtremalityReport analyze(const KrausSet& k, const TolerancePolicy& tol) {
  tol.validate();
  ExtremalityReport rep;
  rep.dim_in = k.dim_in();
  rep.dim_out = k.dim_out();
  rep.channel_class = classify(k, tol);
  rep.kraus_count = k.size();

  const KrausSet minimal = minimized(k, tol);
  rep.choi_rank = minimal.size();
  if (max_abs(minimal[0]) == 0.0) rep.choi_rank = 0;

  if (rep.channel_class.tp) rep.cpt = gram_test(cpt_criterion_family(minimal, tol), tol);
  if (rep.channel_class.unital) rep.ucp = gram_test(ucp_criterion_family(minimal, tol), tol);

  rep.rank_bound = ucpt_rank_bound(k.dim_in());
  if (rep.channel_class.ucpt) {
    const std::size_t r = rep.choi_rank;
    const std::size_t d = k.dim_in();
    rep.bound_violated = r * r > 2 * d * d - 1;  // r > sqrt(2 d^2 - 1)
    if (r * r > 2 * d * d) {
      rep.ucpt.verdict = Verdict::False;
      rep.ucpt.path = DecisionPath::RankBound;
      rep.ucpt.gram_order = r * r;
    } else {
      rep.ucpt = gram_test(ucpt_criterion_family(minimal, tol), tol);
    }
  }
  rep.ill_conditioned = rep.cpt.ill_conditioned || rep.ucp.ill_conditioned || rep.ucpt.ill_conditioned;
  return rep;
}

}  // namespace qchan
